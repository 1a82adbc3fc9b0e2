/*!
  \file report.hpp
  \brief Analysis reports for single functions and JSON views of reports,
         partitions and verify suites
*/

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "catalogue.hpp"
#include "classify.hpp"
#include "mdd.hpp"
#include "reduce.hpp"
#include "rse.hpp"
#include "subodd.hpp"
#include "verify.hpp"

namespace minorkit
{

/*! \brief All metrics of one function; optional fields are skipped or undefined */
struct analysis_report
{
  unsigned k{ 2u };
  unsigned n{ 0u };
  std::string code;
  std::string rse;
  unsigned ess{ 0u };
  std::vector<unsigned> essential;
  std::optional<unsigned> gap;
  std::string gap_reason;
  std::string nof_code;
  std::vector<unsigned> nof_values;
  std::uint64_t cmr{ 0u };
  std::size_t mnr{ 0u };
  std::vector<std::size_t> mnr_by_ess;
  std::optional<std::size_t> sub;
  std::size_t sep{ 0u };
  std::optional<std::size_t> imp;
  std::vector<unsigned> strongly_essential;
  std::vector<std::vector<unsigned>> separable_sets;
};

struct analysis_options
{
  bool skip_imp{ false };
  bool skip_sub{ false };
};

namespace detail
{

inline std::vector<unsigned> one_based( const std::vector<unsigned>& vars )
{
  std::vector<unsigned> out;
  for ( auto v : vars )
  {
    out.push_back( v + 1u );
  }
  return out;
}

} // namespace detail

/*! \brief Computes the report; variables are numbered from 1 as in x1, x2, ... */
inline analysis_report analyze( const function_table& f, const analysis_options& opts = {} )
{
  analysis_report r;
  r.k = f.radix();
  r.n = f.num_vars();
  r.code = encode( f ).to_string();
  r.rse = format_miniterms( f );
  r.essential = detail::one_based( essential_vars( f ) );
  r.ess = static_cast<unsigned>( r.essential.size() );
  if ( r.ess >= 2u )
  {
    r.gap = arity_gap( f );
  }
  else
  {
    r.gap_reason = "the arity gap needs at least two essential variables";
  }
  const auto diag = nof( f );
  r.nof_code = encode( diag ).to_string();
  for ( std::size_t i = 0u; i < diag.num_rows(); ++i )
  {
    r.nof_values.push_back( diag[i] );
  }
  r.cmr = cmr( f );
  const auto minors = minors_closure( f );
  r.mnr = minors.size();
  r.mnr_by_ess = minors.by_ess;
  if ( !opts.skip_sub )
  {
    r.sub = all_subfunctions( f ).size();
  }
  for ( const auto& s : minorkit::separable_sets( f ) )
  {
    r.separable_sets.push_back( detail::one_based( s ) );
  }
  r.sep = r.separable_sets.size();
  if ( !opts.skip_imp )
  {
    r.imp = minorkit::imp( f );
  }
  r.strongly_essential = detail::one_based( minorkit::strongly_essential( f ) );
  return r;
}

inline nlohmann::json to_json( const analysis_report& r )
{
  const auto opt = []( const auto& v ) { return v ? nlohmann::json( *v ) : nlohmann::json( nullptr ); };
  nlohmann::json j;
  j["k"] = r.k;
  j["n"] = r.n;
  j["code"] = r.code;
  j["rse"] = r.rse;
  j["ess"] = r.ess;
  j["Ess"] = r.essential;
  j["gap"] = opt( r.gap );
  if ( !r.gap )
  {
    j["gap_reason"] = r.gap_reason;
  }
  j["nof"] = { { "code", r.nof_code }, { "values", r.nof_values } };
  j["cmr"] = r.cmr;
  j["mnr"] = r.mnr;
  j["mnr_m"] = r.mnr_by_ess;
  j["sub"] = opt( r.sub );
  j["sep"] = r.sep;
  j["imp"] = opt( r.imp );
  j["SEss"] = r.strongly_essential;
  j["separable_sets"] = r.separable_sets;
  return j;
}

inline analysis_report analysis_report_from_json( const nlohmann::json& j )
{
  analysis_report r;
  r.k = j.at( "k" );
  r.n = j.at( "n" );
  r.code = j.at( "code" );
  r.rse = j.at( "rse" );
  r.ess = j.at( "ess" );
  r.essential = j.at( "Ess" ).get<std::vector<unsigned>>();
  if ( !j.at( "gap" ).is_null() )
  {
    r.gap = j.at( "gap" ).get<unsigned>();
  }
  else
  {
    r.gap_reason = j.value( "gap_reason", "" );
  }
  r.nof_code = j.at( "nof" ).at( "code" );
  r.nof_values = j.at( "nof" ).at( "values" ).get<std::vector<unsigned>>();
  r.cmr = j.at( "cmr" );
  r.mnr = j.at( "mnr" );
  r.mnr_by_ess = j.at( "mnr_m" ).get<std::vector<std::size_t>>();
  if ( !j.at( "sub" ).is_null() )
  {
    r.sub = j.at( "sub" ).get<std::size_t>();
  }
  r.sep = j.at( "sep" );
  if ( !j.at( "imp" ).is_null() )
  {
    r.imp = j.at( "imp" ).get<std::size_t>();
  }
  r.strongly_essential = j.at( "SEss" ).get<std::vector<unsigned>>();
  r.separable_sets = j.at( "separable_sets" ).get<std::vector<std::vector<unsigned>>>();
  return r;
}

inline bool operator==( const analysis_report& a, const analysis_report& b )
{
  return to_json( a ) == to_json( b );
}

inline nlohmann::json to_json( const partition& p )
{
  nlohmann::json classes = nlohmann::json::array();
  for ( const auto& c : p.classes )
  {
    classes.push_back( { { "class_id", c.id }, { "size", c.size }, { "representative", c.representative }, { "members", c.members } } );
  }
  return { { "k", p.k },
           { "n", p.n },
           { "relation", p.relation },
           { "zero_preserving_only", p.zero_preserving_only },
           { "num_classes", p.num_classes() },
           { "classes", classes } };
}

namespace verify
{

inline nlohmann::json to_json( const suite_report& r )
{
  nlohmann::json checks = nlohmann::json::array();
  for ( const auto& c : r.checks )
  {
    checks.push_back( { { "name", c.name }, { "status", to_string( c.state ) }, { "expected", c.expected }, { "actual", c.actual } } );
  }
  return { { "suite", r.id }, { "title", r.title }, { "status", to_string( r.overall() ) }, { "seconds", r.seconds }, { "checks", checks } };
}

} // namespace verify

} // namespace minorkit
