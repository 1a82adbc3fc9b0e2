/*!
  \file rse.hpp
  \brief Ring-sum expansion formulas: parsing into truth tables and printing
         the miniterm expansion

  Grammar (whitespace is insignificant between tokens):

      expr   := term ( ( '⊕' | '+' ) term )*
      term   := factor+
      factor := const | var | var '^' const | '(' expr ')'
      var    := 'x' digits            (1-based; 'x_1' is accepted as well)

  Sums and products are taken mod k. `x^a` is the indicator of x = a, not a
  power, so `x1^0x2^1` over Z_3 is 1 exactly when x1 = 0 and x2 = 1.
*/

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "function_table.hpp"

namespace minorkit
{

class parse_error : public std::runtime_error
{
public:
  parse_error( const std::string& what, std::size_t column )
      : std::runtime_error( what + " at column " + std::to_string( column ) ), column_( column )
  {
  }

  /*! \brief 1-based character column of the offending token */
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t column_;
};

namespace detail
{

class rse_parser
{
public:
  rse_parser( std::string_view text, unsigned k, unsigned n )
      : text_( text ), k_( k ), n_( n ), rows_( function_table( k, n ).num_rows() )
  {
  }

  function_table parse()
  {
    auto values = expr();
    skip_space();
    if ( pos_ != text_.size() )
    {
      fail( "unexpected character '" + std::string( 1, text_[pos_] ) + "'" );
    }
    return function_table( k_, n_, to_values( values ) );
  }

private:
  using column_t = std::vector<unsigned>;

  static constexpr std::string_view oplus = "\xE2\x8A\x95";

  [[noreturn]] void fail( const std::string& msg ) const
  {
    // column counts UTF-8 code points, not bytes
    std::size_t column = 1u;
    for ( std::size_t i = 0u; i < pos_ && i < text_.size(); ++i )
    {
      if ( ( static_cast<unsigned char>( text_[i] ) & 0xC0u ) != 0x80u )
      {
        ++column;
      }
    }
    throw parse_error( "rse: " + msg, column );
  }

  void skip_space()
  {
    while ( pos_ < text_.size() && ( text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' || text_[pos_] == '\r' ) )
    {
      ++pos_;
    }
  }

  bool at_plus()
  {
    skip_space();
    return pos_ < text_.size() && ( text_[pos_] == '+' || text_.substr( pos_, oplus.size() ) == oplus );
  }

  bool at_factor()
  {
    skip_space();
    if ( pos_ >= text_.size() )
    {
      return false;
    }
    const auto c = text_[pos_];
    return c == 'x' || c == '(' || ( c >= '0' && c <= '9' );
  }

  unsigned number()
  {
    skip_space();
    if ( pos_ >= text_.size() || text_[pos_] < '0' || text_[pos_] > '9' )
    {
      fail( "expected a number" );
    }
    unsigned long long v = 0u;
    while ( pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9' )
    {
      v = v * 10u + static_cast<unsigned>( text_[pos_] - '0' );
      if ( v > 1000000u )
      {
        fail( "number too large" );
      }
      ++pos_;
    }
    return static_cast<unsigned>( v );
  }

  column_t expr()
  {
    auto acc = term();
    while ( at_plus() )
    {
      pos_ += text_[pos_] == '+' ? 1u : oplus.size();
      const auto rhs = term();
      for ( std::size_t r = 0u; r < rows_; ++r )
      {
        acc[r] = ( acc[r] + rhs[r] ) % k_;
      }
    }
    return acc;
  }

  column_t term()
  {
    if ( !at_factor() )
    {
      fail( pos_ >= text_.size() ? "unexpected end of input" : "expected a factor" );
    }
    auto acc = factor();
    while ( at_factor() )
    {
      const auto rhs = factor();
      for ( std::size_t r = 0u; r < rows_; ++r )
      {
        acc[r] = ( acc[r] * rhs[r] ) % k_;
      }
    }
    return acc;
  }

  column_t factor()
  {
    skip_space();
    const auto c = text_[pos_];
    if ( c == '(' )
    {
      ++pos_;
      auto inner = expr();
      skip_space();
      if ( pos_ >= text_.size() || text_[pos_] != ')' )
      {
        fail( "expected ')'" );
      }
      ++pos_;
      return inner;
    }
    if ( c == 'x' )
    {
      const auto start = pos_;
      ++pos_;
      if ( pos_ < text_.size() && text_[pos_] == '_' )
      {
        ++pos_;
      }
      if ( pos_ >= text_.size() || text_[pos_] < '0' || text_[pos_] > '9' )
      {
        fail( "expected a variable index after 'x'" );
      }
      const auto index = number();
      if ( index == 0u || index > n_ )
      {
        pos_ = start;
        fail( "variable x" + std::to_string( index ) + " is not among x1..x" + std::to_string( n_ ) );
      }
      const auto stride = function_table( k_, n_ ).stride( index - 1u );
      column_t col( rows_ );
      skip_space();
      if ( pos_ < text_.size() && text_[pos_] == '^' )
      {
        ++pos_;
        skip_space();
        const auto lit_pos = pos_;
        const auto alpha = number();
        if ( alpha >= k_ )
        {
          pos_ = lit_pos;
          fail( "exponent " + std::to_string( alpha ) + " is not in Z_" + std::to_string( k_ ) );
        }
        for ( std::size_t r = 0u; r < rows_; ++r )
        {
          col[r] = ( r / stride ) % k_ == alpha ? 1u : 0u;
        }
      }
      else
      {
        for ( std::size_t r = 0u; r < rows_; ++r )
        {
          col[r] = static_cast<unsigned>( ( r / stride ) % k_ );
        }
      }
      return col;
    }
    const auto lit_pos = pos_;
    const auto value = number();
    if ( value >= k_ )
    {
      pos_ = lit_pos;
      fail( "constant " + std::to_string( value ) + " is not in Z_" + std::to_string( k_ ) );
    }
    return column_t( rows_, value );
  }

  static std::vector<value_t> to_values( const column_t& col )
  {
    return std::vector<value_t>( col.begin(), col.end() );
  }

  std::string_view text_;
  unsigned k_;
  unsigned n_;
  std::size_t rows_;
  std::size_t pos_{ 0u };
};

} // namespace detail

/*! \brief Evaluates a ring-sum expansion over Z_k^n

  Throws parse_error (with the column) on syntax errors, on variables with
  index above n, and on literals outside Z_k.
*/
inline function_table parse_rse( std::string_view text, unsigned k, unsigned n )
{
  return detail::rse_parser( text, k, n ).parse();
}

/*! \brief Miniterm expansion f = ⊕_a f(a) x1^a1 ... xn^an

  Terms with f(a) = 0 are omitted, a coefficient is printed only when it is
  not 1, and the constant-zero function prints as "0".
*/
inline std::string format_miniterms( const function_table& f )
{
  const auto k = f.radix();
  const auto n = f.num_vars();
  std::string out;
  for ( std::size_t row = 0u; row < f.num_rows(); ++row )
  {
    const auto v = f[row];
    if ( v == 0u )
    {
      continue;
    }
    if ( !out.empty() )
    {
      out += " \xE2\x8A\x95 ";
    }
    if ( v != 1u || n == 0u )
    {
      out += std::to_string( v );
    }
    const auto point = point_of( k, n, row );
    for ( unsigned i = 0u; i < n; ++i )
    {
      out += "x" + std::to_string( i + 1u ) + "^" + std::to_string( point[i] );
    }
  }
  return out.empty() ? std::string( "0" ) : out;
}

} // namespace minorkit
