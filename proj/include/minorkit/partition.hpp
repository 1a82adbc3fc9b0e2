/*!
  \file partition.hpp
  \brief Partitions of a whole function space P_k^n by a key, with
         deterministic class order and CSV export
*/

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "catalogue.hpp"
#include "function_table.hpp"

namespace minorkit
{

/*! \brief Default bound on k^(k^n) for whole-space enumeration */
inline constexpr std::uint64_t default_max_space = std::uint64_t( 1 ) << 26;

struct enumeration_options
{
  unsigned jobs{ 1u };
  std::uint64_t max_space{ default_max_space };
};

class space_too_large : public std::length_error
{
public:
  using std::length_error::length_error;
};

/*! \brief k^(k^n), or throws space_too_large above `max_space` */
inline std::uint64_t checked_space( unsigned k, unsigned n, std::uint64_t max_space )
{
  const auto size = space_size( k, n );
  if ( !size || *size > max_space )
  {
    throw space_too_large( "P_" + std::to_string( k ) + "^" + std::to_string( n ) + " has " + space_size_big( k, n ).str() +
                           " functions, above the enumeration limit of " + std::to_string( max_space ) );
  }
  return *size;
}

/*! \brief Runs fn( begin, end ) on `jobs` contiguous shards of [0, count) */
template<typename Fn>
void parallel_shards( std::uint64_t count, unsigned jobs, Fn&& fn )
{
  jobs = std::max( 1u, jobs );
  if ( jobs == 1u || count < 2u * jobs )
  {
    fn( std::uint64_t( 0 ), count );
    return;
  }
  std::vector<std::thread> workers;
  std::vector<std::exception_ptr> errors( jobs );
  const auto chunk = ( count + jobs - 1u ) / jobs;
  for ( unsigned w = 0u; w < jobs; ++w )
  {
    const auto begin = std::min<std::uint64_t>( count, w * chunk );
    const auto end = std::min<std::uint64_t>( count, begin + chunk );
    workers.emplace_back( [&, w, begin, end] {
      try
      {
        fn( begin, end );
      }
      catch ( ... )
      {
        errors[w] = std::current_exception();
      }
    } );
  }
  for ( auto& t : workers )
  {
    t.join();
  }
  for ( auto& e : errors )
  {
    if ( e )
    {
      std::rethrow_exception( e );
    }
  }
}

struct partition_class
{
  std::size_t id{ 0u };
  std::uint64_t size{ 0u };           /*!< size of the full class */
  std::uint64_t representative{ 0u }; /*!< smallest member code */
  std::vector<std::uint64_t> members; /*!< sorted codes (possibly filtered) */
};

/*! \brief Classes ordered by their smallest member code, ids 1, 2, ... */
struct partition
{
  unsigned k{ 2u };
  unsigned n{ 0u };
  std::string relation;
  bool zero_preserving_only{ false };
  std::vector<partition_class> classes;

  std::size_t num_classes() const noexcept { return classes.size(); }

  std::uint64_t total_size() const noexcept
  {
    std::uint64_t s = 0u;
    for ( const auto& c : classes )
    {
      s += c.size;
    }
    return s;
  }

  /*! \brief Index of the class holding `code`; requires unfiltered members */
  std::size_t class_index_of( std::uint64_t code ) const
  {
    for ( std::size_t i = 0u; i < classes.size(); ++i )
    {
      if ( std::binary_search( classes[i].members.begin(), classes[i].members.end(), code ) )
      {
        return i;
      }
    }
    throw std::out_of_range( "partition: code " + std::to_string( code ) + " not found" );
  }

  std::vector<std::uint64_t> sizes() const
  {
    std::vector<std::uint64_t> s;
    for ( const auto& c : classes )
    {
      s.push_back( c.size );
    }
    return s;
  }
};

/*! \brief Groups codes with equal labels into classes

  `labels[code]` is any hashable value; the class order depends only on the
  codes, not on the label values.
*/
template<typename Label>
partition partition_from_labels( unsigned k, unsigned n, std::string relation, const std::vector<Label>& labels )
{
  std::unordered_map<Label, std::size_t> slot;
  std::vector<std::vector<std::uint64_t>> groups;
  for ( std::uint64_t code = 0u; code < labels.size(); ++code )
  {
    auto [it, inserted] = slot.emplace( labels[code], groups.size() );
    if ( inserted )
    {
      groups.emplace_back();
    }
    groups[it->second].push_back( code );
  }
  // codes were visited in increasing order, so groups are already sorted by smallest member
  partition p{ k, n, std::move( relation ), false, {} };
  for ( auto& members : groups )
  {
    partition_class c;
    c.id = p.classes.size() + 1u;
    c.size = members.size();
    c.representative = members.front();
    c.members = std::move( members );
    p.classes.push_back( std::move( c ) );
  }
  return p;
}

/*! \brief Partitions P_k^n by `label( table )`, evaluated in parallel shards */
template<typename LabelFn>
partition partition_by_label( unsigned k, unsigned n, std::string relation, LabelFn&& label, const enumeration_options& opts = {} )
{
  const auto size = checked_space( k, n, opts.max_space );
  std::vector<std::string> labels( size );
  parallel_shards( size, opts.jobs, [&]( std::uint64_t begin, std::uint64_t end ) {
    for ( auto code = begin; code < end; ++code )
    {
      labels[code] = label( decode_u64( k, n, code ) );
    }
  } );
  return partition_from_labels( k, n, std::move( relation ), labels );
}

/*! \brief Keeps only the member codes with f(0, ..., 0) = 0

  Class sizes still count the whole class.
*/
inline partition zero_preserving_view( partition p )
{
  const auto rows = checked_pow( p.k, p.n );
  const auto bound = checked_pow( p.k, rows - 1u ); // codes below k^(k^n - 1) have a leading zero digit
  for ( auto& c : p.classes )
  {
    std::erase_if( c.members, [bound]( auto code ) { return code >= bound; } );
  }
  p.zero_preserving_only = true;
  return p;
}

/*! \brief CSV with header class_id,size,representative,members (members joined by ';') */
inline std::string to_csv( const partition& p )
{
  std::ostringstream os;
  os << "class_id,size,representative,members\n";
  for ( const auto& c : p.classes )
  {
    os << c.id << ',' << c.size << ',' << c.representative << ',';
    for ( std::size_t i = 0u; i < c.members.size(); ++i )
    {
      os << ( i ? ";" : "" ) << c.members[i];
    }
    os << '\n';
  }
  return os.str();
}

} // namespace minorkit
