#include <catch_amalgamated.hpp>

#include <random>

#include <minorkit/catalogue.hpp>
#include <minorkit/essential.hpp>
#include <minorkit/function_table.hpp>

#include "oracle.hpp"

using namespace minorkit;

TEST_CASE( "tables are built from value columns and validated", "[fncore]" )
{
  const function_table f( 3u, 2u, { 0, 1, 2, 1, 2, 0, 2, 0, 1 } );
  CHECK( f.radix() == 3u );
  CHECK( f.num_vars() == 2u );
  CHECK( f.num_rows() == 9u );
  CHECK( evaluate( f, { 1, 2 } ) == 0u );
  CHECK( evaluate( f, { 2, 2 } ) == 1u );

  CHECK_THROWS_AS( function_table( 3u, 2u, { 0, 1, 2 } ), std::invalid_argument );
  CHECK_THROWS_AS( function_table( 2u, 1u, { 0, 2 } ), std::invalid_argument );
  CHECK_THROWS_AS( function_table( 1u, 1u ), std::invalid_argument );
  CHECK_THROWS_AS( function_table( 2u, 40u ), std::invalid_argument );
  CHECK_THROWS_AS( evaluate( f, { 1, 3 } ), std::out_of_range );
  CHECK_THROWS_AS( evaluate( f, { 1 } ), std::out_of_range );
}

TEST_CASE( "from_function reduces results mod k", "[fncore]" )
{
  const auto f = function_table::from_function( 3u, 2u, []( auto p ) { return int( p[0] ) - int( p[1] ); } );
  CHECK( evaluate( f, { 0, 1 } ) == 2u );
  CHECK( evaluate( f, { 2, 0 } ) == 2u );
  CHECK( function_table::projection( 2u, 3u, 0u ).values()[4] == 1u );
  CHECK( function_table::constant( 4u, 2u, 3u ).is_constant() );
  CHECK_THROWS( function_table::constant( 2u, 1u, 2u ) );
  CHECK_THROWS( function_table::projection( 2u, 2u, 2u ) );
}

TEST_CASE( "the first variable is the most significant coordinate", "[fncore]" )
{
  for ( std::size_t row = 0u; row < 27u; ++row )
  {
    const auto p = point_of( 3u, 3u, row );
    CHECK( row_index( 3u, p ) == row );
    CHECK( row == p[0] * 9u + p[1] * 3u + p[2] );
  }
}

TEST_CASE( "catalogue codes read row 0 as the leading digit", "[fncore][catalogue]" )
{
  const auto f = from_digit_string( 2u, 3u, "00011000" );
  CHECK( encode( f ).code == 24 );
  CHECK( encode_u64( f ) == 24u );
  CHECK( decode_u64( 2u, 3u, 24u ) == f );
  CHECK( encode( f ).to_string() == "24" );

  CHECK( *space_size( 2u, 3u ) == 256u );
  CHECK( !space_size( 3u, 4u ) );
  CHECK( space_size_big( 3u, 4u ) == boost::multiprecision::pow( big_code( 3 ), 81 ) );

  CHECK_THROWS_AS( decode_u64( 2u, 2u, 16u ), std::out_of_range );
  CHECK_THROWS_AS( parse_code( 2u, 2u, "16" ), std::out_of_range );
  CHECK_THROWS_AS( parse_code( 2u, 2u, "x1" ), std::invalid_argument );
  CHECK_THROWS_AS( from_digit_string( 2u, 2u, "0102" ), std::invalid_argument );
}

TEST_CASE( "codes round-trip beyond 64 bits", "[fncore][catalogue]" )
{
  std::mt19937_64 rng( 7u );
  for ( int trial = 0; trial < 50; ++trial )
  {
    const auto f = oracle::random_function( 3u, 4u, rng );
    const auto c = encode( f );
    CHECK( decode( c ) == f );
    CHECK( parse_code( 3u, 4u, c.to_string() ).code == c.code );
  }
}

TEST_CASE( "codes round-trip exhaustively on P_2^3 and P_3^2", "[fncore][catalogue]" )
{
  for ( std::uint64_t code = 0u; code < 256u; ++code )
  {
    REQUIRE( encode_u64( decode_u64( 2u, 3u, code ) ) == code );
  }
  for ( std::uint64_t code = 0u; code < 19683u; code += 7u )
  {
    REQUIRE( encode_u64( decode_u64( 3u, 2u, code ) ) == code );
  }
}

TEST_CASE( "preserves_zero looks at the all-zero row", "[fncore][catalogue]" )
{
  CHECK( preserves_zero( decode_u64( 2u, 3u, 127u ) ) );
  CHECK_FALSE( preserves_zero( decode_u64( 2u, 3u, 128u ) ) );
}

TEST_CASE( "essential variables agree with the pointwise oracle", "[fncore][essential]" )
{
  for ( std::uint64_t code = 0u; code < 256u; ++code )
  {
    const auto f = decode_u64( 2u, 3u, code );
    REQUIRE( essential_vars( f ) == oracle::ess( f ) );
  }
  std::mt19937_64 rng( 11u );
  for ( int trial = 0; trial < 200; ++trial )
  {
    auto f = oracle::random_function( 3u, 3u, rng );
    if ( trial % 2 )
    {
      f = oracle::assign( f, trial % 3, 1u );
    }
    REQUIRE( essential_vars( f ) == oracle::ess( f ) );
  }
  CHECK_THROWS_AS( is_essential( function_table( 2u, 2u ), 2u ), std::out_of_range );
}

TEST_CASE( "essential variables on small examples", "[fncore][essential]" )
{
  const auto x2 = function_table::projection( 3u, 4u, 1u );
  CHECK( essential_vars( x2 ) == std::vector<unsigned>{ 1u } );
  CHECK( essential_mask( x2 ) == 0b10u );
  CHECK( num_essential( function_table::constant( 2u, 3u, 1u ) ) == 0u );
  CHECK( mask_to_vars( 0b1011u ) == std::vector<unsigned>{ 0u, 1u, 3u } );
}

TEST_CASE( "drop_fictive keeps the values on the essential variables", "[fncore][essential]" )
{
  std::mt19937_64 rng( 3u );
  for ( int trial = 0; trial < 100; ++trial )
  {
    auto f = oracle::random_function( 3u, 3u, rng );
    f = oracle::assign( f, trial % 3, 2u );
    REQUIRE( drop_fictive( f ) == oracle::reduced( f ) );
  }
  const auto c = drop_fictive( function_table::constant( 2u, 3u, 1u ) );
  CHECK( c.num_vars() == 0u );
  CHECK( c[0] == 1u );
}

TEST_CASE( "permute_vars moves coordinates", "[fncore][essential]" )
{
  // f = 2 x1 + x2 over Z_3
  const auto f = function_table::from_function( 3u, 2u, []( auto p ) { return 2 * p[0] + p[1]; } );
  const std::vector<unsigned> swap{ 1u, 0u };
  const auto g = permute_vars( f, swap );
  CHECK( g == function_table::from_function( 3u, 2u, []( auto p ) { return 2 * p[1] + p[0]; } ) );
  CHECK( permute_vars( g, swap ) == f );
  const std::vector<unsigned> bad{ 0u, 0u };
  CHECK_THROWS_AS( permute_vars( f, bad ), std::invalid_argument );
}

TEST_CASE( "canonical forms decide equivalence like the brute-force oracle", "[fncore][essential]" )
{
  std::mt19937_64 rng( 5u );
  for ( int trial = 0; trial < 300; ++trial )
  {
    const auto f = decode_u64( 2u, 3u, rng() % 256u );
    auto g = decode_u64( 2u, 3u, rng() % 256u );
    if ( trial % 3 == 0 )
    {
      const std::vector<unsigned> perm{ 2u, 0u, 1u };
      g = permute_vars( f, perm );
    }
    REQUIRE( equivalent( f, g ) == oracle::equivalent( f, g ) );
  }
}

TEST_CASE( "equivalence ignores fictive variables across arities", "[fncore][essential]" )
{
  const auto x1x2 = function_table::from_function( 2u, 2u, []( auto p ) { return p[0] * p[1]; } );
  const auto x1x3 = function_table::from_function( 2u, 4u, []( auto p ) { return p[0] * p[2]; } );
  CHECK( equivalent( x1x2, x1x3 ) );
  CHECK( make_canonical( x1x3 ).ess == 2u );
  CHECK( make_canonical( x1x3 ).table() == x1x2 );
  CHECK_THROWS_AS( equivalent( x1x2, function_table( 3u, 2u ) ), std::invalid_argument );
}

TEST_CASE( "P_2^2 has 12 classes up to permutation of its two variables", "[fncore][essential]" )
{
  std::set<std::vector<value_t>> seen;
  for ( std::uint64_t code = 0u; code < 16u; ++code )
  {
    const auto f = decode_u64( 2u, 2u, code );
    const std::vector<unsigned> swap{ 1u, 0u };
    const auto g = permute_vars( f, swap );
    seen.insert( std::vector<value_t>( std::min( f, g ).values().begin(), std::min( f, g ).values().end() ) );
  }
  CHECK( seen.size() == 12u );
}
