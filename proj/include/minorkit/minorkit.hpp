/*!
  \file minorkit.hpp
  \brief Umbrella header
*/

#pragma once

#include "catalogue.hpp"
#include "classify.hpp"
#include "essential.hpp"
#include "function_table.hpp"
#include "groups.hpp"
#include "mdd.hpp"
#include "partition.hpp"
#include "reduce.hpp"
#include "report.hpp"
#include "rse.hpp"
#include "subodd.hpp"
#include "verify.hpp"
