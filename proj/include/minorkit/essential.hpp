/*!
  \file essential.hpp
  \brief Essential variables, fictive-variable removal, variable permutation,
         and canonical forms for equivalence up to permutation and
         introduction/deletion of fictive variables
*/

#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "catalogue.hpp"
#include "function_table.hpp"

namespace minorkit
{

using var_mask = std::uint32_t;

inline bool is_essential( const function_table& f, unsigned i )
{
  if ( i >= f.num_vars() )
  {
    throw std::out_of_range( "is_essential: variable index out of range" );
  }
  const auto k = f.radix();
  const auto stride = f.stride( i );
  const auto block = stride * k;
  for ( std::size_t base = 0u; base < f.num_rows(); base += block )
  {
    for ( std::size_t off = 0u; off < stride; ++off )
    {
      const auto v = f[base + off];
      for ( unsigned c = 1u; c < k; ++c )
      {
        if ( f[base + off + c * stride] != v )
        {
          return true;
        }
      }
    }
  }
  return false;
}

/*! \brief Ess(f) as a bitmask, bit i set iff x_{i+1} is essential */
inline var_mask essential_mask( const function_table& f )
{
  var_mask m = 0u;
  for ( unsigned i = 0u; i < f.num_vars(); ++i )
  {
    if ( is_essential( f, i ) )
    {
      m |= var_mask( 1 ) << i;
    }
  }
  return m;
}

inline std::vector<unsigned> mask_to_vars( var_mask m )
{
  std::vector<unsigned> vars;
  for ( unsigned i = 0u; m != 0u; ++i, m >>= 1u )
  {
    if ( m & 1u )
    {
      vars.push_back( i );
    }
  }
  return vars;
}

/*! \brief Ess(f), sorted 0-based indices */
inline std::vector<unsigned> essential_vars( const function_table& f )
{
  return mask_to_vars( essential_mask( f ) );
}

inline unsigned num_essential( const function_table& f )
{
  return static_cast<unsigned>( std::popcount( essential_mask( f ) ) );
}

/*! \brief Restriction of f to the listed variables, other coordinates at 0

  The result has `vars.size()` variables, in the given order.
*/
inline function_table project_onto( const function_table& f, std::span<const unsigned> vars )
{
  std::vector<std::size_t> strides;
  strides.reserve( vars.size() );
  for ( auto v : vars )
  {
    strides.push_back( f.stride( v ) );
  }
  const auto k = f.radix();
  const auto m = static_cast<unsigned>( vars.size() );
  std::vector<value_t> values( checked_pow( k, m ) );
  std::vector<value_t> digits( m, 0u );
  for ( std::size_t row = 0u; row < values.size(); ++row )
  {
    std::size_t src = 0u;
    for ( unsigned p = 0u; p < m; ++p )
    {
      src += digits[p] * strides[p];
    }
    values[row] = f[src];
    for ( auto p = m; p-- > 0u; )
    {
      if ( ++digits[p] < k )
      {
        break;
      }
      digits[p] = 0u;
    }
  }
  return function_table( k, m, std::move( values ) );
}

/*! \brief Deletes all fictive variables, keeping the order of the essential ones */
inline function_table drop_fictive( const function_table& f )
{
  const auto vars = essential_vars( f );
  return project_onto( f, vars );
}

/*! \brief phi_pi(f)(a_1, ..., a_n) = f(a_{pi(1)}, ..., a_{pi(n)})

  `perm` is 0-based and must be a permutation of {0, ..., n-1}.
*/
inline function_table permute_vars( const function_table& f, std::span<const unsigned> perm )
{
  const auto n = f.num_vars();
  if ( perm.size() != n )
  {
    throw std::invalid_argument( "permute_vars: permutation has wrong length" );
  }
  std::vector<bool> seen( n, false );
  for ( auto p : perm )
  {
    if ( p >= n || seen[p] )
    {
      throw std::invalid_argument( "permute_vars: not a permutation" );
    }
    seen[p] = true;
  }
  // the argument of f at position m is a_{perm[m]}, i.e. digit perm[m] of the row
  std::vector<std::size_t> weight( n, 0u );
  for ( unsigned m = 0u; m < n; ++m )
  {
    weight[perm[m]] = f.stride( m );
  }
  const auto k = f.radix();
  std::vector<value_t> values( f.num_rows() );
  std::vector<value_t> digits( n, 0u );
  for ( std::size_t row = 0u; row < values.size(); ++row )
  {
    std::size_t src = 0u;
    for ( unsigned i = 0u; i < n; ++i )
    {
      src += digits[i] * weight[i];
    }
    values[row] = f[src];
    for ( auto i = n; i-- > 0u; )
    {
      if ( ++digits[i] < k )
      {
        break;
      }
      digits[i] = 0u;
    }
  }
  return function_table( k, n, std::move( values ) );
}

/*! \brief Representative of the class of f under permutation of variables and
           introduction/deletion of fictive variables

  The table has exactly `ess` variables, all essential, and is the
  lexicographically (equivalently: catalogue-code) smallest among all
  permutations of the essential variables.
*/
struct canonical_form
{
  unsigned k{ 2u };
  unsigned ess{ 0u };
  std::vector<value_t> values{ 0u };

  function_table table() const { return function_table( k, ess, values ); }
  catalogue_code code() const { return encode( table() ); }

  friend bool operator==( const canonical_form&, const canonical_form& ) = default;
  friend auto operator<=>( const canonical_form&, const canonical_form& ) = default;
};

struct canonical_form_hash
{
  std::size_t operator()( const canonical_form& c ) const noexcept
  {
    std::uint64_t h = 1469598103934665603ull ^ ( std::uint64_t( c.k ) << 8 ) ^ c.ess;
    for ( auto v : c.values )
    {
      h = ( h ^ v ) * 1099511628211ull;
    }
    return static_cast<std::size_t>( h );
  }
};

/*! \brief Canonical form of a table whose variables are all essential */
inline canonical_form canonical_form_of_reduced( const function_table& g )
{
  const auto m = g.num_vars();
  canonical_form best{ g.radix(), m, std::vector<value_t>( g.values().begin(), g.values().end() ) };
  if ( m < 2u )
  {
    return best;
  }
  std::vector<unsigned> perm( m );
  std::iota( perm.begin(), perm.end(), 0u );
  while ( std::next_permutation( perm.begin(), perm.end() ) )
  {
    const auto candidate = permute_vars( g, perm );
    if ( std::lexicographical_compare( candidate.values().begin(), candidate.values().end(), best.values.begin(), best.values.end() ) )
    {
      best.values.assign( candidate.values().begin(), candidate.values().end() );
    }
  }
  return best;
}

inline canonical_form make_canonical( const function_table& f )
{
  return canonical_form_of_reduced( drop_fictive( f ) );
}

/*! \brief f and g coincide up to permuting variables and adding/removing fictive ones */
inline bool equivalent( const function_table& f, const function_table& g )
{
  if ( f.radix() != g.radix() )
  {
    throw std::invalid_argument( "equivalent: radix mismatch" );
  }
  return make_canonical( f ) == make_canonical( g );
}

} // namespace minorkit
