/*!
  \file catalogue.hpp
  \brief Catalogue codes: a truth table read as one base-k number

  Row 0 is the most significant digit, so for k = 2, n = 3 the code 24
  (binary 00011000) is the function that is 1 exactly on rows 3 and 4.
*/

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "function_table.hpp"

namespace minorkit
{

using big_code = boost::multiprecision::cpp_int;

struct catalogue_code
{
  unsigned k{ 2u };
  unsigned n{ 0u };
  big_code code;

  std::string to_string() const { return code.str(); }

  friend bool operator==( const catalogue_code&, const catalogue_code& ) = default;
};

/*! \brief k^(k^n), the number of functions in P_k^n */
inline big_code space_size_big( unsigned k, unsigned n )
{
  big_code r = 1;
  const auto rows = checked_pow( k, n );
  for ( std::uint64_t i = 0u; i < rows; ++i )
  {
    r *= k;
  }
  return r;
}

/*! \brief k^(k^n) if it fits into 64 bits */
inline std::optional<std::uint64_t> space_size( unsigned k, unsigned n )
{
  const auto rows = checked_pow( k, n );
  if ( rows == 0u )
  {
    return std::nullopt;
  }
  const auto s = checked_pow( k, rows );
  if ( s == 0u )
  {
    return std::nullopt;
  }
  return s;
}

inline catalogue_code encode( const function_table& f )
{
  catalogue_code c{ f.radix(), f.num_vars(), 0 };
  for ( auto v : f.values() )
  {
    c.code *= f.radix();
    c.code += v;
  }
  return c;
}

inline function_table decode( const catalogue_code& c )
{
  if ( c.code < 0 || c.code >= space_size_big( c.k, c.n ) )
  {
    throw std::out_of_range( "decode: code " + c.code.str() + " is not below k^(k^n)" );
  }
  function_table shape( c.k, c.n );
  std::vector<value_t> values( shape.num_rows(), 0u );
  big_code rest = c.code;
  for ( auto row = values.size(); row-- > 0u; )
  {
    values[row] = static_cast<value_t>( static_cast<unsigned>( rest % c.k ) );
    rest /= c.k;
  }
  return function_table( c.k, c.n, std::move( values ) );
}

inline function_table decode( unsigned k, unsigned n, const big_code& code )
{
  return decode( catalogue_code{ k, n, code } );
}

/*! \brief Fast path of encode for spaces whose codes fit into 64 bits */
inline std::uint64_t encode_u64( const function_table& f )
{
  if ( !space_size( f.radix(), f.num_vars() ) )
  {
    throw std::out_of_range( "encode_u64: catalogue code does not fit into 64 bits" );
  }
  std::uint64_t code = 0u;
  for ( auto v : f.values() )
  {
    code = code * f.radix() + v;
  }
  return code;
}

inline function_table decode_u64( unsigned k, unsigned n, std::uint64_t code )
{
  const auto size = space_size( k, n );
  if ( !size )
  {
    return decode( k, n, big_code( code ) );
  }
  if ( code >= *size )
  {
    throw std::out_of_range( "decode: code " + std::to_string( code ) + " is not below k^(k^n)" );
  }
  std::vector<value_t> values( checked_pow( k, n ), 0u );
  for ( auto row = values.size(); row-- > 0u; )
  {
    values[row] = static_cast<value_t>( code % k );
    code /= k;
  }
  return function_table( k, n, std::move( values ) );
}

/*! \brief Parses a decimal catalogue code */
inline catalogue_code parse_code( unsigned k, unsigned n, std::string_view text )
{
  if ( text.empty() || text.find_first_not_of( "0123456789" ) != std::string_view::npos )
  {
    throw std::invalid_argument( "parse_code: '" + std::string( text ) + "' is not a decimal integer" );
  }
  catalogue_code c{ k, n, big_code( std::string( text ) ) };
  if ( c.code >= space_size_big( k, n ) )
  {
    throw std::out_of_range( "parse_code: code " + c.code.str() + " is not below k^(k^n)" );
  }
  return c;
}

/*! \brief Table from its digit string, leftmost digit = row 0 (e.g. "00011000") */
inline function_table from_digit_string( unsigned k, unsigned n, std::string_view digits )
{
  const auto rows = checked_pow( k, n );
  if ( digits.size() != rows )
  {
    throw std::invalid_argument( "from_digit_string: expected " + std::to_string( rows ) + " digits" );
  }
  std::vector<value_t> values;
  values.reserve( rows );
  for ( auto ch : digits )
  {
    if ( ch < '0' || ch > '9' || static_cast<unsigned>( ch - '0' ) >= k )
    {
      throw std::invalid_argument( std::string( "from_digit_string: digit '" ) + ch + "' is not in Z_" + std::to_string( k ) );
    }
    values.push_back( static_cast<value_t>( ch - '0' ) );
  }
  return function_table( k, n, std::move( values ) );
}

/*! \brief f(0, ..., 0) = 0 */
inline bool preserves_zero( const function_table& f )
{
  return f[0] == 0u;
}

} // namespace minorkit
