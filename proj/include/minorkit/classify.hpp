/*!
  \file classify.hpp
  \brief Equivalence of functions by minor complexities: cmr-, mnr- and
         nof-equivalence, their decision procedures, and whole-space
         partitions

  cmr-equivalence is decided by a recursive signature. Functions with at
  most one essential variable get the tag ess. For m >= 2 essential
  variables the signature is the lexicographically smallest, over all
  relabellings sigma of the m variables, of the list of child signatures
  sig(f_{sigma(i) <- sigma(j)}) for the pairs j < i. Two functions share
  a signature iff a single sigma aligns all their minors.
*/

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "essential.hpp"
#include "function_table.hpp"
#include "partition.hpp"
#include "reduce.hpp"

namespace minorkit
{

/*! \brief Interned cmr signature; ids are only comparable within one context */
struct cmr_signature
{
  std::uint32_t id{ 0u };

  friend bool operator==( const cmr_signature&, const cmr_signature& ) = default;
  friend auto operator<=>( const cmr_signature&, const cmr_signature& ) = default;
};

/*! \brief Interning table and memo for cmr signatures

  Ids 0 and 1 are the signatures of functions with 0 and 1 essential
  variables. Safe for concurrent use.
*/
class cmr_signature_context
{
public:
  struct node
  {
    unsigned ess{ 0u };
    std::vector<std::uint32_t> children; /*!< minimal child list, pairs in (0,1), (0,2), (1,2), ... order */
  };

  cmr_signature_context()
  {
    nodes_.push_back( node{ 0u, {} } );
    nodes_.push_back( node{ 1u, {} } );
  }

  cmr_signature signature( const function_table& f )
  {
    return cmr_signature{ of_reduced( drop_fictive( f ) ) };
  }

  node describe( cmr_signature s ) const
  {
    std::shared_lock lock( mutex_ );
    return nodes_.at( s.id );
  }

  std::size_t num_signatures() const
  {
    std::shared_lock lock( mutex_ );
    return nodes_.size();
  }

private:
  struct key_hash
  {
    std::size_t operator()( const std::pair<unsigned, std::vector<std::uint32_t>>& key ) const noexcept
    {
      std::uint64_t h = 1469598103934665603ull ^ key.first;
      for ( auto v : key.second )
      {
        h = ( h ^ v ) * 1099511628211ull;
      }
      return static_cast<std::size_t>( h );
    }
  };

  std::uint32_t of_reduced( const function_table& g )
  {
    const auto m = g.num_vars();
    if ( m <= 1u )
    {
      return m;
    }
    const auto key = canonical_form_of_reduced( g );
    {
      std::shared_lock lock( mutex_ );
      if ( const auto it = memo_.find( key ); it != memo_.end() )
      {
        return it->second;
      }
    }

    // child[p][q] for p < q, the class of g with x_q identified with x_p
    std::vector<std::vector<std::uint32_t>> child( m, std::vector<std::uint32_t>( m, 0u ) );
    for ( unsigned q = 1u; q < m; ++q )
    {
      for ( unsigned p = 0u; p < q; ++p )
      {
        child[p][q] = of_reduced( drop_fictive( detail::identify_unchecked( g, q, p ) ) );
      }
    }

    std::vector<unsigned> sigma( m );
    std::iota( sigma.begin(), sigma.end(), 0u );
    std::vector<std::uint32_t> best, candidate;
    candidate.reserve( m * ( m - 1u ) / 2u );
    do
    {
      candidate.clear();
      for ( unsigned q = 1u; q < m; ++q )
      {
        for ( unsigned p = 0u; p < q; ++p )
        {
          const auto a = std::min( sigma[p], sigma[q] );
          const auto b = std::max( sigma[p], sigma[q] );
          candidate.push_back( child[a][b] );
        }
      }
      if ( best.empty() || candidate < best )
      {
        best = candidate;
      }
    } while ( std::next_permutation( sigma.begin(), sigma.end() ) );

    std::unique_lock lock( mutex_ );
    auto interned = std::make_pair( m, best );
    auto [it, inserted] = ids_.emplace( interned, static_cast<std::uint32_t>( nodes_.size() ) );
    if ( inserted )
    {
      nodes_.push_back( node{ m, std::move( best ) } );
    }
    memo_.emplace( key, it->second );
    return it->second;
  }

  mutable std::shared_mutex mutex_;
  std::vector<node> nodes_;
  std::unordered_map<std::pair<unsigned, std::vector<std::uint32_t>>, std::uint32_t, key_hash> ids_;
  std::unordered_map<canonical_form, std::uint32_t, canonical_form_hash> memo_;
};

inline cmr_signature_context& shared_signature_context()
{
  static cmr_signature_context context;
  return context;
}

inline cmr_signature cmr_signature_of( const function_table& f )
{
  return shared_signature_context().signature( f );
}

/*! \brief f and g are cmr-equivalent */
inline bool cmr_equivalent( const function_table& f, const function_table& g )
{
  if ( f.radix() != g.radix() )
  {
    throw std::invalid_argument( "cmr_equivalent: radix mismatch" );
  }
  return cmr_signature_of( f ) == cmr_signature_of( g );
}

/*! \brief Per-arity counts of the minors of f, counted up to cmr-equivalence

  Entry m is the number of cmr-classes among the minors with m essential
  variables; trailing zeros are removed so that functions of different
  arity compare as if zero-padded. Counting up to cmr-equivalence (rather
  than up to permutation and fictive variables, as mnr( f ) does) is what
  makes cmr-equivalent functions mnr-equivalent.
*/
inline std::vector<std::size_t> mnr_signature( const function_table& f )
{
  const auto closure = minors_closure( f );
  auto& context = shared_signature_context();
  std::set<std::pair<unsigned, std::uint32_t>> seen;
  for ( const auto& c : closure.classes )
  {
    seen.emplace( c.ess, context.signature( c.table() ).id );
  }
  std::vector<std::size_t> seq( closure.by_ess.size(), 0u );
  for ( const auto& [ess, id] : seen )
  {
    ++seq[ess];
  }
  while ( !seq.empty() && seq.back() == 0u )
  {
    seq.pop_back();
  }
  return seq;
}

inline bool mnr_equivalent( const function_table& f, const function_table& g )
{
  if ( f.radix() != g.radix() )
  {
    throw std::invalid_argument( "mnr_equivalent: radix mismatch" );
  }
  return mnr_signature( f ) == mnr_signature( g );
}

/*! \brief The diagonal of f as an exact unary table */
inline function_table nof_signature( const function_table& f )
{
  return nof( f );
}

inline bool nof_equivalent( const function_table& f, const function_table& g )
{
  if ( f.radix() != g.radix() )
  {
    throw std::invalid_argument( "nof_equivalent: radix mismatch" );
  }
  return nof( f ) == nof( g );
}

enum class relation
{
  cmr,
  mnr,
  nof,
  equiv
};

inline std::string_view to_string( relation r )
{
  switch ( r )
  {
  case relation::cmr:
    return "cmr";
  case relation::mnr:
    return "mnr";
  case relation::nof:
    return "nof";
  case relation::equiv:
    return "equiv";
  }
  return "?";
}

inline relation parse_relation( std::string_view name )
{
  for ( auto r : { relation::cmr, relation::mnr, relation::nof, relation::equiv } )
  {
    if ( to_string( r ) == name )
    {
      return r;
    }
  }
  throw std::invalid_argument( "unknown relation '" + std::string( name ) + "' (expected cmr, mnr, nof or equiv)" );
}

namespace detail
{

inline std::string bytes_of( std::span<const value_t> values, unsigned prefix = 0u )
{
  std::string s( 1u, static_cast<char>( prefix ) );
  s.append( values.begin(), values.end() );
  return s;
}

} // namespace detail

/*! \brief Exact partition of P_k^n under one relation

  Classes are ordered by smallest member code. Throws space_too_large when
  k^(k^n) exceeds `opts.max_space`.
*/
inline partition partition_space( unsigned k, unsigned n, relation r, const enumeration_options& opts = {} )
{
  switch ( r )
  {
  case relation::cmr:
  {
    auto& context = shared_signature_context();
    return partition_by_label( k, n, "cmr", [&context]( const function_table& f ) {
      const auto id = context.signature( f ).id;
      return std::string( reinterpret_cast<const char*>( &id ), sizeof( id ) );
    }, opts );
  }
  case relation::mnr:
    return partition_by_label( k, n, "mnr", []( const function_table& f ) {
      std::string s;
      for ( auto c : mnr_signature( f ) )
      {
        s += std::to_string( c ) + ",";
      }
      return s;
    }, opts );
  case relation::nof:
    return partition_by_label( k, n, "nof", []( const function_table& f ) { return detail::bytes_of( nof( f ).values() ); }, opts );
  case relation::equiv:
    return partition_by_label( k, n, "equiv", []( const function_table& f ) {
      const auto c = make_canonical( f );
      return detail::bytes_of( c.values, c.ess );
    }, opts );
  }
  throw std::invalid_argument( "partition_space: unknown relation" );
}

} // namespace minorkit
