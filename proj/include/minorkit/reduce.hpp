/*!
  \file reduce.hpp
  \brief The two reductions on truth tables: assigning a constant to an
         essential variable (simple subfunctions) and identifying two
         essential variables (simple identification minors), together with
         the quantities derived from them

  All tables keep their full variable frame: a subfunction or minor of an
  n-ary function is again n-ary, with the eliminated variable fictive.
*/

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <span>
#include <stdexcept>
#include <unordered_set>
#include <utility>
#include <vector>

#include "essential.hpp"
#include "function_table.hpp"

namespace minorkit
{

/*! \brief The simple subfunction f(x_{i+1} = c)

  Defined only for essential variables; throws std::invalid_argument if x_i
  is fictive or c is not in Z_k.
*/
inline function_table subfunction( const function_table& f, unsigned i, value_t c )
{
  if ( c >= f.radix() )
  {
    throw std::invalid_argument( "subfunction: constant is not in Z_k" );
  }
  if ( !is_essential( f, i ) )
  {
    throw std::invalid_argument( "subfunction: x" + std::to_string( i + 1u ) + " is not essential" );
  }
  const auto k = f.radix();
  const auto stride = f.stride( i );
  std::vector<value_t> values( f.num_rows() );
  for ( std::size_t row = 0u; row < values.size(); ++row )
  {
    const auto digit = ( row / stride ) % k;
    values[row] = f[row - digit * stride + c * stride];
  }
  return function_table( k, f.num_vars(), std::move( values ) );
}

namespace detail
{

/*! result(a) = f(a with a_i replaced by a_j), no essentiality checks */
inline function_table identify_unchecked( const function_table& f, unsigned i, unsigned j )
{
  const auto k = f.radix();
  const auto si = f.stride( i );
  const auto sj = f.stride( j );
  std::vector<value_t> values( f.num_rows() );
  for ( std::size_t row = 0u; row < values.size(); ++row )
  {
    const auto di = ( row / si ) % k;
    const auto dj = ( row / sj ) % k;
    values[row] = f[row - di * si + dj * si];
  }
  return function_table( k, f.num_vars(), std::move( values ) );
}

} // namespace detail

/*! \brief The simple identification minor f_{i<-j}

  result(a) = f(a_1, ..., a_{i-1}, a_j, a_{i+1}, ..., a_n); x_i becomes
  fictive. Both variables must be distinct and essential.
*/
inline function_table identification_minor( const function_table& f, unsigned i, unsigned j )
{
  if ( i == j )
  {
    throw std::invalid_argument( "identification_minor: cannot identify a variable with itself" );
  }
  if ( i >= f.num_vars() || j >= f.num_vars() )
  {
    throw std::out_of_range( "identification_minor: variable index out of range" );
  }
  if ( !is_essential( f, i ) || !is_essential( f, j ) )
  {
    throw std::invalid_argument( "identification_minor: x" + std::to_string( i + 1u ) + " and x" + std::to_string( j + 1u ) +
                                 " must both be essential" );
  }
  return detail::identify_unchecked( f, i, j );
}

/*! \brief Calls fn( i, j, f_{i<-j} ) for all essential pairs with j < i */
template<typename Fn>
void for_each_simple_minor( const function_table& f, Fn&& fn )
{
  const auto ess = essential_vars( f );
  for ( std::size_t q = 1u; q < ess.size(); ++q )
  {
    for ( std::size_t p = 0u; p < q; ++p )
    {
      fn( ess[q], ess[p], detail::identify_unchecked( f, ess[q], ess[p] ) );
    }
  }
}

/*! \brief The diagonal a -> f(a, ..., a) as a unary function

  Every maximal identification chain of f ends in a function equivalent to
  this one; for n = 0 it is the constant.
*/
inline function_table nof( const function_table& f )
{
  const auto k = f.radix();
  const auto n = f.num_vars();
  std::vector<value_t> values( k );
  for ( unsigned a = 0u; a < k; ++a )
  {
    std::size_t row = 0u;
    for ( unsigned i = 0u; i < n; ++i )
    {
      row = row * k + a;
    }
    values[a] = f[row];
  }
  return function_table( k, 1u, std::move( values ) );
}

enum class chain_strategy
{
  first_pair, /*!< identify the two lowest essential variables */
  last_pair   /*!< identify the two highest essential variables */
};

/*! \brief Follows one maximal identification chain and returns its end

  `pick` receives the list of (i, j) essential pairs with j < i and returns
  the index of the pair to identify next.
*/
template<typename Picker>
function_table normal_form_via_chain( const function_table& f, Picker&& pick )
{
  auto current = f;
  for ( ;; )
  {
    const auto ess = essential_vars( current );
    if ( ess.size() <= 1u )
    {
      return current;
    }
    std::vector<std::pair<unsigned, unsigned>> pairs;
    for ( std::size_t q = 1u; q < ess.size(); ++q )
    {
      for ( std::size_t p = 0u; p < q; ++p )
      {
        pairs.emplace_back( ess[q], ess[p] );
      }
    }
    const std::size_t choice = pick( std::span<const std::pair<unsigned, unsigned>>( pairs ) );
    if ( choice >= pairs.size() )
    {
      throw std::out_of_range( "normal_form_via_chain: strategy picked a non-existing pair" );
    }
    current = detail::identify_unchecked( current, pairs[choice].first, pairs[choice].second );
  }
}

inline function_table normal_form_via_chain( const function_table& f, chain_strategy strategy = chain_strategy::first_pair )
{
  return normal_form_via_chain( f, [strategy]( std::span<const std::pair<unsigned, unsigned>> pairs ) -> std::size_t {
    if ( strategy == chain_strategy::first_pair )
    {
      return 0u;
    }
    // pairs are ordered by (i, j) with j < i, so the highest pair is last
    return pairs.size() - 1u;
  } );
}

/*! \brief Calls fn( terminal ) at the end of every maximal identification chain

  Chains are enumerated over both orientations (i <- j and j <- i) of every
  essential pair, so the number of calls grows like prod m(m-1).
*/
template<typename Fn>
void for_each_chain_terminal( const function_table& f, Fn&& fn )
{
  const auto ess = essential_vars( f );
  if ( ess.size() <= 1u )
  {
    fn( f );
    return;
  }
  for ( auto i : ess )
  {
    for ( auto j : ess )
    {
      if ( i != j )
      {
        for_each_chain_terminal( detail::identify_unchecked( f, i, j ), fn );
      }
    }
  }
}

/*! \brief Sub(f): f and everything reachable by assigning constants to
           essential variables, distinct as tables on the full frame
*/
struct subfunction_set
{
  std::vector<function_table> members; /*!< sorted, contains f */

  std::size_t size() const noexcept { return members.size(); }
};

inline subfunction_set all_subfunctions( const function_table& f )
{
  std::unordered_set<function_table, function_table_hash> seen{ f };
  std::vector<function_table> stack{ f };
  while ( !stack.empty() )
  {
    const auto g = std::move( stack.back() );
    stack.pop_back();
    for ( auto i : essential_vars( g ) )
    {
      for ( value_t c = 0u; c < g.radix(); ++c )
      {
        auto h = subfunction( g, i, c );
        if ( seen.insert( h ).second )
        {
          stack.push_back( std::move( h ) );
        }
      }
    }
  }
  subfunction_set result{ { seen.begin(), seen.end() } };
  std::sort( result.members.begin(), result.members.end() );
  return result;
}

/*! \brief Sep(f) as bitmasks, sorted by (size, mask) */
inline std::vector<var_mask> separable_masks( const function_table& f )
{
  std::set<var_mask> masks;
  for ( const auto& g : all_subfunctions( f ).members )
  {
    if ( const auto m = essential_mask( g ); m != 0u )
    {
      masks.insert( m );
    }
  }
  std::vector<var_mask> out( masks.begin(), masks.end() );
  std::stable_sort( out.begin(), out.end(), []( auto a, auto b ) {
    return std::popcount( a ) < std::popcount( b ) || ( std::popcount( a ) == std::popcount( b ) && a < b );
  } );
  return out;
}

/*! \brief Sep(f): the non-empty sets Ess(g) over all g in Sub(f), including Ess(f) */
inline std::vector<std::vector<unsigned>> separable_sets( const function_table& f )
{
  std::vector<std::vector<unsigned>> sets;
  for ( auto m : separable_masks( f ) )
  {
    sets.push_back( mask_to_vars( m ) );
  }
  return sets;
}

/*! \brief SEss(f): essential x_i such that some f(x_i = c) keeps every other
           essential variable
*/
inline std::vector<unsigned> strongly_essential( const function_table& f )
{
  const auto ess = essential_mask( f );
  std::vector<unsigned> result;
  for ( auto i : mask_to_vars( ess ) )
  {
    const auto rest = ess & ~( var_mask( 1 ) << i );
    for ( value_t c = 0u; c < f.radix(); ++c )
    {
      if ( essential_mask( subfunction( f, i, c ) ) == rest )
      {
        result.push_back( i );
        break;
      }
    }
  }
  return result;
}

/*! \brief gap(f) = ess(f) - max ess(h) over the minors h of f

  The maximum is attained by a simple minor, since further identification
  only lowers ess. Throws std::invalid_argument if ess(f) < 2.
*/
inline unsigned arity_gap( const function_table& f )
{
  const auto ess = num_essential( f );
  if ( ess < 2u )
  {
    throw std::invalid_argument( "arity_gap: requires at least two essential variables" );
  }
  unsigned best = 0u;
  for_each_simple_minor( f, [&]( auto, auto, const function_table& h ) {
    best = std::max( best, num_essential( h ) );
  } );
  return ess - best;
}

/*! \brief Mnr(f): the classes (up to permutation and fictive variables) of
           all minors reachable by one or more identifications

  `by_ess[m]` counts the classes with m essential variables (mnr_m), and
  has length ess(f) (entries up to m = ess(f) - 1), or 0 for ess(f) <= 1.
*/
struct minor_set
{
  std::set<canonical_form> classes;
  std::vector<std::size_t> by_ess;

  std::size_t size() const noexcept { return classes.size(); }
};

inline minor_set minors_closure( const function_table& f )
{
  minor_set result;
  const auto ess = num_essential( f );
  result.by_ess.assign( ess >= 2u ? ess : 0u, 0u );
  std::vector<function_table> stack{ drop_fictive( f ) };
  while ( !stack.empty() )
  {
    const auto g = std::move( stack.back() );
    stack.pop_back();
    for_each_simple_minor( g, [&]( auto, auto, const function_table& h ) {
      auto c = make_canonical( h );
      if ( result.classes.insert( c ).second )
      {
        ++result.by_ess[c.ess];
        stack.push_back( c.table() );
      }
    } );
  }
  return result;
}

inline std::size_t mnr( const function_table& f )
{
  return minors_closure( f ).size();
}

/*! \brief Functions that are a0 wherever two coordinates coincide and take
           prescribed values on the all-distinct tuples

  `coeff( point )` gives the value on an all-distinct point. Requires
  2 <= n <= k and at least two distinct values among a0 and the
  coefficients (otherwise the function would be constant).
*/
template<typename Coeff>
function_table eq1_family( unsigned k, unsigned n, value_t a0, Coeff&& coeff )
{
  if ( n > k )
  {
    throw std::invalid_argument( "eq1_family: n > k leaves no tuples with distinct coordinates" );
  }
  if ( n < 2u )
  {
    throw std::invalid_argument( "eq1_family: requires n >= 2" );
  }
  if ( a0 >= k )
  {
    throw std::invalid_argument( "eq1_family: a0 is not in Z_k" );
  }
  bool varied = false;
  auto f = function_table::from_function( k, n, [&]( std::span<const value_t> p ) -> int {
    for ( std::size_t s = 0u; s < p.size(); ++s )
    {
      for ( std::size_t t = s + 1u; t < p.size(); ++t )
      {
        if ( p[s] == p[t] )
        {
          return a0;
        }
      }
    }
    const auto v = static_cast<int>( coeff( p ) );
    if ( v < 0 || v >= static_cast<int>( k ) )
    {
      throw std::invalid_argument( "eq1_family: coefficient is not in Z_k" );
    }
    varied = varied || v != a0;
    return v;
  } );
  if ( !varied )
  {
    throw std::invalid_argument( "eq1_family: all coefficients are equal" );
  }
  return f;
}

} // namespace minorkit
