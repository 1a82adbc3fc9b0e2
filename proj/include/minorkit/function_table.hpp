/*!
  \file function_table.hpp
  \brief Dense truth tables of k-valued functions

  A function f : Z_k^n -> Z_k is stored as the sequence of its k^n values.
  Rows are ordered lexicographically with x1 as the most significant
  coordinate, so the row of (a_1, ..., a_n) is sum_i a_i * k^(n-i).

  Variables are 0-based in the API (index 0 is x1); text output and the CLI
  use the 1-based names.
*/

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace minorkit
{

using value_t = std::uint8_t;

/*! \brief Largest supported table length k^n */
inline constexpr std::uint64_t max_table_size = std::uint64_t( 1 ) << 26;

/*! \brief Largest supported radix */
inline constexpr unsigned max_radix = 64u;

/*! \brief Returns base^exp, or 0 on overflow */
inline std::uint64_t checked_pow( std::uint64_t base, std::uint64_t exp )
{
  std::uint64_t r = 1u;
  for ( std::uint64_t e = 0u; e < exp; ++e )
  {
    if ( base != 0u && r > std::numeric_limits<std::uint64_t>::max() / base )
    {
      return 0u;
    }
    r *= base;
  }
  return r;
}

class function_table
{
public:
  /*! \brief Constant-zero function in P_2^0 */
  function_table() : function_table( 2u, 0u ) {}

  /*! \brief Constant-zero function in P_k^n */
  function_table( unsigned k, unsigned n )
      : k_( k ), n_( n )
  {
    check_shape( k, n );
    values_.assign( static_cast<std::size_t>( checked_pow( k, n ) ), value_t( 0 ) );
  }

  /*! \brief Function with the given value column (row 0 first)

    Throws std::invalid_argument if the length is not k^n or a value is not
    in Z_k.
  */
  function_table( unsigned k, unsigned n, std::vector<value_t> values )
      : k_( k ), n_( n ), values_( std::move( values ) )
  {
    check_shape( k, n );
    if ( values_.size() != checked_pow( k, n ) )
    {
      throw std::invalid_argument( "function_table: expected " + std::to_string( checked_pow( k, n ) ) +
                                   " values, got " + std::to_string( values_.size() ) );
    }
    for ( auto v : values_ )
    {
      if ( v >= k )
      {
        throw std::invalid_argument( "function_table: value " + std::to_string( v ) + " is not in Z_" + std::to_string( k ) );
      }
    }
  }

  /*! \brief Tabulates `fn( point )` reduced mod k for every point of Z_k^n

    `fn` receives a `std::span<const value_t>` of length n and may return
    any integer; the result is reduced into Z_k.
  */
  template<typename Fn>
  static function_table from_function( unsigned k, unsigned n, Fn&& fn )
  {
    function_table t( k, n );
    std::vector<value_t> point( n, 0u );
    for ( std::size_t row = 0u; row < t.values_.size(); ++row )
    {
      long long v = static_cast<long long>( fn( std::span<const value_t>( point ) ) );
      v %= static_cast<long long>( k );
      if ( v < 0 )
      {
        v += k;
      }
      t.values_[row] = static_cast<value_t>( v );
      for ( auto digit = point.rbegin(); digit != point.rend(); ++digit )
      {
        if ( ++*digit < k )
        {
          break;
        }
        *digit = 0u;
      }
    }
    return t;
  }

  /*! \brief Constant function c in P_k^n */
  static function_table constant( unsigned k, unsigned n, value_t c )
  {
    if ( c >= k )
    {
      throw std::invalid_argument( "function_table: constant out of range" );
    }
    function_table t( k, n );
    std::fill( t.values_.begin(), t.values_.end(), c );
    return t;
  }

  /*! \brief The projection x_{i+1} in P_k^n */
  static function_table projection( unsigned k, unsigned n, unsigned i )
  {
    if ( i >= n )
    {
      throw std::invalid_argument( "function_table: projection index out of range" );
    }
    return from_function( k, n, [i]( auto p ) { return p[i]; } );
  }

  unsigned radix() const noexcept { return k_; }
  unsigned num_vars() const noexcept { return n_; }
  std::size_t num_rows() const noexcept { return values_.size(); }

  value_t operator[]( std::size_t row ) const { return values_[row]; }
  std::span<const value_t> values() const noexcept { return values_; }

  /*! \brief k^(n-1-i): distance between rows differing by one in coordinate i */
  std::size_t stride( unsigned i ) const
  {
    return static_cast<std::size_t>( checked_pow( k_, n_ - 1u - i ) );
  }

  bool is_constant() const noexcept
  {
    return std::all_of( values_.begin(), values_.end(), [this]( auto v ) { return v == values_.front(); } );
  }

  friend bool operator==( const function_table&, const function_table& ) = default;
  friend auto operator<=>( const function_table&, const function_table& ) = default;

private:
  static void check_shape( unsigned k, unsigned n )
  {
    if ( k < 2u || k > max_radix )
    {
      throw std::invalid_argument( "function_table: radix must be in [2, " + std::to_string( max_radix ) + "]" );
    }
    const auto size = checked_pow( k, n );
    if ( size == 0u || size > max_table_size )
    {
      throw std::invalid_argument( "function_table: k^n exceeds the supported table size" );
    }
  }

  unsigned k_{ 2u };
  unsigned n_{ 0u };
  std::vector<value_t> values_;
};

/*! \brief Row index of a point; x1 is the most significant coordinate */
inline std::size_t row_index( unsigned k, std::span<const value_t> point )
{
  std::size_t idx = 0u;
  for ( auto a : point )
  {
    if ( a >= k )
    {
      throw std::out_of_range( "row_index: coordinate " + std::to_string( a ) + " is not in Z_" + std::to_string( k ) );
    }
    idx = idx * k + a;
  }
  return idx;
}

/*! \brief Inverse of row_index */
inline std::vector<value_t> point_of( unsigned k, unsigned n, std::size_t row )
{
  std::vector<value_t> point( n, 0u );
  for ( auto i = n; i-- > 0u; )
  {
    point[i] = static_cast<value_t>( row % k );
    row /= k;
  }
  return point;
}

inline value_t evaluate( const function_table& f, std::span<const value_t> point )
{
  if ( point.size() != f.num_vars() )
  {
    throw std::out_of_range( "evaluate: point has " + std::to_string( point.size() ) + " coordinates, expected " +
                             std::to_string( f.num_vars() ) );
  }
  return f[row_index( f.radix(), point )];
}

inline value_t evaluate( const function_table& f, std::initializer_list<value_t> point )
{
  return evaluate( f, std::span<const value_t>( point.begin(), point.size() ) );
}

struct function_table_hash
{
  std::size_t operator()( const function_table& f ) const noexcept
  {
    std::uint64_t h = 1469598103934665603ull ^ ( std::uint64_t( f.radix() ) << 8 ) ^ f.num_vars();
    for ( auto v : f.values() )
    {
      h = ( h ^ v ) * 1099511628211ull;
    }
    return static_cast<std::size_t>( h );
  }
};

} // namespace minorkit
