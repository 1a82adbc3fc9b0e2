/*!
  \file groups.hpp
  \brief The restricted affine group acting on P_k^n, its named subgroups,
         output maps, and orbit enumeration

  A map (A, c, a, d) sends f to g( x ) = f( xA + c ) + a.x + d over Z_k,
  with x a row vector and A invertible over Z_k.
*/

#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "catalogue.hpp"
#include "function_table.hpp"
#include "partition.hpp"

namespace minorkit
{

struct affine_map
{
  unsigned k{ 2u };
  unsigned n{ 0u };
  std::vector<value_t> A; /*!< n x n, row-major */
  std::vector<value_t> c;
  std::vector<value_t> a;
  value_t d{ 0u };

  static affine_map identity( unsigned k, unsigned n )
  {
    affine_map m{ k, n, std::vector<value_t>( n * n, 0u ), std::vector<value_t>( n, 0u ), std::vector<value_t>( n, 0u ), 0u };
    for ( unsigned i = 0u; i < n; ++i )
    {
      m.A[i * n + i] = 1u;
    }
    return m;
  }

  value_t at( unsigned row, unsigned col ) const { return A[row * n + col]; }

  friend bool operator==( const affine_map&, const affine_map& ) = default;
  friend auto operator<=>( const affine_map&, const affine_map& ) = default;
};

namespace detail
{

inline void check_shape( const affine_map& m )
{
  if ( m.k < 2u || m.A.size() != std::size_t( m.n ) * m.n || m.c.size() != m.n || m.a.size() != m.n )
  {
    throw std::invalid_argument( "affine_map: dimension mismatch" );
  }
  const auto in_range = [&]( value_t v ) { return v < m.k; };
  if ( !std::all_of( m.A.begin(), m.A.end(), in_range ) || !std::all_of( m.c.begin(), m.c.end(), in_range ) ||
       !std::all_of( m.a.begin(), m.a.end(), in_range ) || !in_range( m.d ) )
  {
    throw std::invalid_argument( "affine_map: entry out of range" );
  }
}

} // namespace detail

/*! \brief det(A) mod k by permutation expansion */
inline unsigned determinant( const affine_map& m )
{
  detail::check_shape( m );
  std::vector<unsigned> perm( m.n );
  std::iota( perm.begin(), perm.end(), 0u );
  std::uint64_t pos = 0u, neg = 0u;
  do
  {
    std::uint64_t prod = 1u;
    for ( unsigned i = 0u; i < m.n && prod; ++i )
    {
      prod = prod * m.at( i, perm[i] ) % m.k;
    }
    unsigned inversions = 0u;
    for ( unsigned i = 0u; i < m.n; ++i )
    {
      for ( unsigned j = i + 1u; j < m.n; ++j )
      {
        inversions += perm[i] > perm[j];
      }
    }
    ( inversions % 2u ? neg : pos ) += prod;
  } while ( std::next_permutation( perm.begin(), perm.end() ) );
  return static_cast<unsigned>( ( pos % m.k + m.k - neg % m.k ) % m.k );
}

/*! \brief A is invertible over Z_k, i.e. gcd( det A, k ) = 1 */
inline bool is_invertible( const affine_map& m )
{
  return std::gcd( determinant( m ), m.k ) == 1u;
}

inline bool is_permutation_matrix( const affine_map& m )
{
  for ( unsigned i = 0u; i < m.n; ++i )
  {
    unsigned row_ones = 0u, col_ones = 0u;
    for ( unsigned j = 0u; j < m.n; ++j )
    {
      if ( m.at( i, j ) > 1u || m.at( j, i ) > 1u )
      {
        return false;
      }
      row_ones += m.at( i, j );
      col_ones += m.at( j, i );
    }
    if ( row_ones != 1u || col_ones != 1u )
    {
      return false;
    }
  }
  return true;
}

/*! \brief Permutation matrix with x_i moved to position perm[i] */
inline affine_map permutation_map( unsigned k, std::span<const unsigned> perm )
{
  const auto n = static_cast<unsigned>( perm.size() );
  auto m = affine_map::identity( k, n );
  std::fill( m.A.begin(), m.A.end(), value_t( 0 ) );
  for ( unsigned i = 0u; i < n; ++i )
  {
    if ( perm[i] >= n )
    {
      throw std::invalid_argument( "permutation_map: not a permutation" );
    }
    m.A[i * n + perm[i]] = 1u;
  }
  if ( !is_permutation_matrix( m ) )
  {
    throw std::invalid_argument( "permutation_map: not a permutation" );
  }
  return m;
}

/*! \brief m2 after m1: apply_affine( compose( m1, m2 ), f ) = apply_affine( m2, apply_affine( m1, f ) ) */
inline affine_map compose( const affine_map& m1, const affine_map& m2 )
{
  detail::check_shape( m1 );
  detail::check_shape( m2 );
  if ( m1.k != m2.k || m1.n != m2.n )
  {
    throw std::invalid_argument( "compose: dimension mismatch" );
  }
  const auto k = m1.k, n = m1.n;
  auto r = affine_map::identity( k, n );
  for ( unsigned i = 0u; i < n; ++i )
  {
    for ( unsigned j = 0u; j < n; ++j )
    {
      unsigned s = 0u;
      for ( unsigned l = 0u; l < n; ++l )
      {
        s += m2.at( i, l ) * m1.at( l, j );
      }
      r.A[i * n + j] = static_cast<value_t>( s % k );
    }
  }
  unsigned dd = m1.d + m2.d;
  for ( unsigned j = 0u; j < n; ++j )
  {
    unsigned cj = m1.c[j], ai = m2.a[j];
    for ( unsigned l = 0u; l < n; ++l )
    {
      cj += m2.c[l] * m1.at( l, j );
      ai += m2.at( j, l ) * m1.a[l];
    }
    r.c[j] = static_cast<value_t>( cj % k );
    r.a[j] = static_cast<value_t>( ai % k );
    dd += m1.a[j] * m2.c[j];
  }
  r.d = static_cast<value_t>( dd % k );
  return r;
}

namespace detail
{

/*! \brief Row permutation and additive term: g[r] = f[source[r]] + offset[r] */
struct row_action
{
  std::vector<std::uint32_t> source;
  std::vector<value_t> offset;
};

inline row_action make_row_action( const affine_map& m )
{
  const auto rows = checked_pow( m.k, m.n );
  row_action act{ std::vector<std::uint32_t>( rows ), std::vector<value_t>( rows ) };
  std::vector<value_t> y( m.n );
  for ( std::size_t r = 0u; r < rows; ++r )
  {
    const auto x = point_of( m.k, m.n, r );
    unsigned lin = m.d;
    for ( unsigned j = 0u; j < m.n; ++j )
    {
      unsigned s = m.c[j];
      for ( unsigned i = 0u; i < m.n; ++i )
      {
        s += x[i] * m.at( i, j );
      }
      y[j] = static_cast<value_t>( s % m.k );
      lin += m.a[j] * x[j];
    }
    act.source[r] = static_cast<std::uint32_t>( row_index( m.k, y ) );
    act.offset[r] = static_cast<value_t>( lin % m.k );
  }
  return act;
}

inline function_table apply_row_action( const row_action& act, const function_table& f )
{
  const auto k = f.radix();
  std::vector<value_t> values( f.num_rows() );
  for ( std::size_t r = 0u; r < values.size(); ++r )
  {
    values[r] = static_cast<value_t>( ( f[act.source[r]] + act.offset[r] ) % k );
  }
  return function_table( k, f.num_vars(), std::move( values ) );
}

} // namespace detail

/*! \brief g( x ) = f( xA + c ) + a.x + d

  Throws std::invalid_argument on a dimension mismatch or a singular A.
*/
inline function_table apply_affine( const affine_map& m, const function_table& f )
{
  detail::check_shape( m );
  if ( m.k != f.radix() || m.n != f.num_vars() )
  {
    throw std::invalid_argument( "apply_affine: map and function dimensions differ" );
  }
  if ( !is_invertible( m ) )
  {
    throw std::invalid_argument( "apply_affine: A is singular over Z_" + std::to_string( m.k ) );
  }
  return detail::apply_row_action( detail::make_row_action( m ), f );
}

/*! \brief sigma : Z_k -> Z_k, not necessarily injective */
struct output_map
{
  std::vector<value_t> sigma;

  bool is_injective() const
  {
    auto s = sigma;
    std::sort( s.begin(), s.end() );
    return std::adjacent_find( s.begin(), s.end() ) == s.end();
  }
};

inline function_table apply_output( const output_map& s, const function_table& f )
{
  if ( s.sigma.size() != f.radix() || std::any_of( s.sigma.begin(), s.sigma.end(), [&]( auto v ) { return v >= f.radix(); } ) )
  {
    throw std::invalid_argument( "apply_output: sigma must map Z_k into Z_k" );
  }
  std::vector<value_t> values( f.num_rows() );
  for ( std::size_t r = 0u; r < values.size(); ++r )
  {
    values[r] = s.sigma[f[r]];
  }
  return function_table( f.radix(), f.num_vars(), std::move( values ) );
}

enum class subgroup_kind
{
  RAG,
  GE,
  CF,
  G,
  LF,
  CA,
  LG,
  S
};

inline constexpr subgroup_kind all_subgroup_kinds[] = { subgroup_kind::RAG, subgroup_kind::GE, subgroup_kind::CF, subgroup_kind::G,
                                                        subgroup_kind::LF,  subgroup_kind::CA, subgroup_kind::LG, subgroup_kind::S };

inline std::string_view to_string( subgroup_kind kind )
{
  switch ( kind )
  {
  case subgroup_kind::RAG:
    return "RAG";
  case subgroup_kind::GE:
    return "GE";
  case subgroup_kind::CF:
    return "CF";
  case subgroup_kind::G:
    return "G";
  case subgroup_kind::LF:
    return "LF";
  case subgroup_kind::CA:
    return "CA";
  case subgroup_kind::LG:
    return "LG";
  case subgroup_kind::S:
    return "S";
  }
  return "?";
}

inline subgroup_kind parse_subgroup_kind( std::string_view name )
{
  for ( auto kind : all_subgroup_kinds )
  {
    if ( to_string( kind ) == name )
    {
      return kind;
    }
  }
  throw std::invalid_argument( "unknown group '" + std::string( name ) + "' (expected RAG, GE, CF, G, LF, CA, LG or S)" );
}

/*! \brief m meets the constraints of the subgroup's row */
inline bool satisfies( subgroup_kind kind, const affine_map& m )
{
  if ( !is_invertible( m ) )
  {
    return false;
  }
  const auto zero = []( const std::vector<value_t>& v ) { return std::all_of( v.begin(), v.end(), []( auto x ) { return x == 0u; } ); };
  const bool identity = m.A == affine_map::identity( m.k, m.n ).A;
  const bool perm = is_permutation_matrix( m );
  switch ( kind )
  {
  case subgroup_kind::RAG:
    return true;
  case subgroup_kind::GE:
    return perm && zero( m.a );
  case subgroup_kind::CF:
    return identity && zero( m.a ) && zero( m.c );
  case subgroup_kind::G:
    return perm && zero( m.a ) && m.d == 0u;
  case subgroup_kind::LF:
    return identity && zero( m.c ) && m.d == 0u;
  case subgroup_kind::CA:
    return identity && zero( m.a ) && m.d == 0u;
  case subgroup_kind::LG:
    return zero( m.c ) && zero( m.a ) && m.d == 0u;
  case subgroup_kind::S:
    return perm && zero( m.c ) && zero( m.a ) && m.d == 0u;
  }
  return false;
}

/*! \brief A finite generating set of the subgroup

  S: adjacent transpositions. CF: d = 1. CA: c = e_i. LF: a = e_i.
  LG: transpositions, transvections I + E_ij and unit scalings of x_1.
  G, GE and RAG take the unions of their rows.
*/
inline std::vector<affine_map> generators( subgroup_kind kind, unsigned k, unsigned n )
{
  if ( k < 2u )
  {
    throw std::invalid_argument( "generators: k must be at least 2" );
  }
  const auto id = affine_map::identity( k, n );
  std::vector<affine_map> transpositions, translations, linear_terms, shift, linear;
  for ( unsigned i = 0u; i + 1u < n; ++i )
  {
    std::vector<unsigned> perm( n );
    std::iota( perm.begin(), perm.end(), 0u );
    std::swap( perm[i], perm[i + 1u] );
    transpositions.push_back( permutation_map( k, perm ) );
  }
  for ( unsigned i = 0u; i < n; ++i )
  {
    auto m = id;
    m.c[i] = 1u;
    translations.push_back( m );
    m = id;
    m.a[i] = 1u;
    linear_terms.push_back( m );
  }
  {
    auto m = id;
    m.d = 1u;
    shift.push_back( m );
  }
  linear = transpositions;
  for ( unsigned i = 0u; i < n; ++i )
  {
    for ( unsigned j = 0u; j < n; ++j )
    {
      if ( i != j )
      {
        auto m = id;
        m.A[i * n + j] = 1u;
        linear.push_back( m );
      }
    }
  }
  for ( unsigned u = 2u; u < k && n > 0u; ++u )
  {
    if ( std::gcd( u, k ) == 1u )
    {
      auto m = id;
      m.A[0] = static_cast<value_t>( u );
      linear.push_back( m );
    }
  }

  std::vector<affine_map> out;
  const auto add = [&out]( const std::vector<affine_map>& part ) { out.insert( out.end(), part.begin(), part.end() ); };
  switch ( kind )
  {
  case subgroup_kind::S:
    add( transpositions );
    break;
  case subgroup_kind::CF:
    add( shift );
    break;
  case subgroup_kind::CA:
    add( translations );
    break;
  case subgroup_kind::LF:
    add( linear_terms );
    break;
  case subgroup_kind::LG:
    add( linear );
    break;
  case subgroup_kind::G:
    add( transpositions );
    add( translations );
    break;
  case subgroup_kind::GE:
    add( transpositions );
    add( translations );
    add( shift );
    break;
  case subgroup_kind::RAG:
    add( linear );
    add( translations );
    add( linear_terms );
    add( shift );
    break;
  }
  return out;
}

/*! \brief All elements of the subgroup, by closure of its generators

  Throws std::length_error past `limit` elements.
*/
inline std::set<affine_map> group_elements( subgroup_kind kind, unsigned k, unsigned n, std::size_t limit = 1000000u )
{
  const auto gens = generators( kind, k, n );
  std::set<affine_map> seen{ affine_map::identity( k, n ) };
  std::deque<affine_map> queue{ affine_map::identity( k, n ) };
  while ( !queue.empty() )
  {
    const auto m = queue.front();
    queue.pop_front();
    for ( const auto& g : gens )
    {
      auto next = compose( m, g );
      if ( seen.insert( next ).second )
      {
        if ( seen.size() > limit )
        {
          throw std::length_error( "group_elements: more than " + std::to_string( limit ) + " elements" );
        }
        queue.push_back( std::move( next ) );
      }
    }
  }
  return seen;
}

/*! \brief Number of distinct transformations (A, c, a, d) in the subgroup */
inline std::size_t group_order( subgroup_kind kind, unsigned k, unsigned n )
{
  return group_elements( kind, k, n ).size();
}

/*! \brief Number of distinct maps x -> xA + c induced on Z_k^n */
inline std::size_t domain_group_order( subgroup_kind kind, unsigned k, unsigned n )
{
  std::set<std::pair<std::vector<value_t>, std::vector<value_t>>> domain;
  for ( const auto& m : group_elements( kind, k, n ) )
  {
    domain.emplace( m.A, m.c );
  }
  return domain.size();
}

/*! \brief The orbit of f, by breadth-first closure

  Throws std::length_error past `limit` functions.
*/
inline std::set<function_table> orbit_of( const function_table& f, subgroup_kind kind, std::size_t limit = 10000000u )
{
  std::vector<detail::row_action> actions;
  for ( const auto& g : generators( kind, f.radix(), f.num_vars() ) )
  {
    actions.push_back( detail::make_row_action( g ) );
  }
  std::unordered_set<function_table, function_table_hash> seen{ f };
  std::deque<function_table> queue{ f };
  while ( !queue.empty() )
  {
    const auto h = queue.front();
    queue.pop_front();
    for ( const auto& act : actions )
    {
      auto next = detail::apply_row_action( act, h );
      if ( seen.insert( next ).second )
      {
        if ( seen.size() > limit )
        {
          throw std::length_error( "orbit_of: orbit exceeds " + std::to_string( limit ) + " functions" );
        }
        queue.push_back( std::move( next ) );
      }
    }
  }
  return std::set<function_table>( seen.begin(), seen.end() );
}

/*! \brief Orbit partition of P_k^n by union-find over generator images

  Images are computed in parallel shards; the merge is serial and links
  each root to the smaller code, so the result does not depend on the
  number of jobs or on the order of the generators.
*/
inline partition orbits( unsigned k, unsigned n, subgroup_kind kind, const enumeration_options& opts = {} )
{
  const auto size = checked_space( k, n, opts.max_space );
  std::vector<detail::row_action> actions;
  for ( const auto& g : generators( kind, k, n ) )
  {
    actions.push_back( detail::make_row_action( g ) );
  }
  std::vector<std::vector<std::uint64_t>> images( actions.size(), std::vector<std::uint64_t>( size ) );
  parallel_shards( size, opts.jobs, [&]( std::uint64_t begin, std::uint64_t end ) {
    for ( auto code = begin; code < end; ++code )
    {
      const auto f = decode_u64( k, n, code );
      for ( std::size_t g = 0u; g < actions.size(); ++g )
      {
        images[g][code] = encode_u64( detail::apply_row_action( actions[g], f ) );
      }
    }
  } );

  std::vector<std::uint64_t> parent( size );
  std::iota( parent.begin(), parent.end(), std::uint64_t( 0 ) );
  const auto find = [&]( std::uint64_t x ) {
    while ( parent[x] != x )
    {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for ( const auto& image : images )
  {
    for ( std::uint64_t code = 0u; code < size; ++code )
    {
      const auto a = find( code ), b = find( image[code] );
      if ( a != b )
      {
        parent[std::max( a, b )] = std::min( a, b );
      }
    }
  }
  std::vector<std::uint64_t> labels( size );
  for ( std::uint64_t code = 0u; code < size; ++code )
  {
    labels[code] = find( code );
  }
  return partition_from_labels( k, n, std::string( to_string( kind ) ), labels );
}

} // namespace minorkit
