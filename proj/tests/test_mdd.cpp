#include <catch_amalgamated.hpp>

#include <random>

#include <minorkit/catalogue.hpp>
#include <minorkit/mdd.hpp>
#include <minorkit/rse.hpp>

#include "oracle.hpp"

using namespace minorkit;

namespace
{

const auto f12 = parse_rse( "x1^0x2^1 ⊕ x2^0x3^1x4^2", 3u, 4u );
const auto g12 = parse_rse( "x1^0x2^1 ⊕ x2^0x3^1x4^1", 3u, 4u );

std::uint64_t multiplicity( const mdd& d, std::size_t source, const function_table& target )
{
  const auto label = make_canonical( target );
  for ( const auto& e : d.edges )
  {
    if ( e.source == source && d.nodes[e.target].label == label )
    {
      return e.multiplicity;
    }
  }
  return 0u;
}

} // namespace

TEST_CASE( "cmr of the two four-variable ternary functions", "[mdd][cmr]" )
{
  CHECK( cmr( f12 ) == 19u );
  CHECK( cmr( g12 ) == 24u );

  CHECK( cmr( identification_minor( f12, 1u, 0u ) ) == 3u );
  CHECK( cmr( identification_minor( f12, 2u, 0u ) ) == 5u );
  CHECK( cmr( identification_minor( f12, 3u, 0u ) ) == 5u );
  CHECK( cmr( identification_minor( f12, 2u, 1u ) ) == 2u );

  CHECK( cmr( identification_minor( g12, 1u, 0u ) ) == 4u );
  CHECK( cmr( identification_minor( g12, 2u, 0u ) ) == 5u );
  CHECK( cmr( identification_minor( g12, 3u, 2u ) ) == 6u );
  CHECK( cmr( identification_minor( g12, 2u, 1u ) ) == 2u );
  const auto g31 = identification_minor( g12, 2u, 0u );
  CHECK( cmr( identification_minor( g31, 3u, 0u ) ) == 2u );
  CHECK( equivalent( g31, identification_minor( g12, 3u, 0u ) ) );
}

TEST_CASE( "the listed minors of the two functions", "[mdd]" )
{
  CHECK( identification_minor( f12, 1u, 0u ) == parse_rse( "x1^0x3^1x4^2", 3u, 4u ) );
  CHECK( identification_minor( f12, 2u, 0u ) == parse_rse( "x1^0x2^1 ⊕ x2^0x1^1x4^2", 3u, 4u ) );
  CHECK( identification_minor( f12, 2u, 1u ) == parse_rse( "x1^0x2^1", 3u, 4u ) );
  CHECK( identification_minor( f12, 3u, 1u ) == parse_rse( "x1^0x2^1", 3u, 4u ) );
  CHECK( identification_minor( f12, 3u, 2u ) == parse_rse( "x1^0x2^1", 3u, 4u ) );
  CHECK( identification_minor( g12, 3u, 2u ) == parse_rse( "x1^0x2^1 ⊕ x2^0x3^1", 3u, 4u ) );
}

TEST_CASE( "memoized, unmemoized and oracle cmr agree", "[mdd][cmr]" )
{
  for ( std::uint64_t code = 0u; code < 256u; ++code )
  {
    const auto f = decode_u64( 2u, 3u, code );
    REQUIRE( cmr( f ) == oracle::cmr( f ) );
  }
  std::mt19937_64 rng( 9u );
  for ( int trial = 0; trial < 40; ++trial )
  {
    const auto f = oracle::random_function( 3u, 4u, rng );
    const auto expected = oracle::cmr( f );
    REQUIRE( cmr( f ) == expected );
    REQUIRE( cmr_uncached( f ) == expected );
    cmr_cache fresh;
    REQUIRE( cmr( f, fresh ) == expected );
  }
}

TEST_CASE( "cmr base cases", "[mdd][cmr]" )
{
  CHECK( cmr( function_table( 2u, 3u ) ) == 1u );
  CHECK( cmr( function_table::projection( 3u, 3u, 2u ) ) == 1u );
  CHECK( cmr( parse_rse( "x1x3", 2u, 3u ) ) == 2u );
  CHECK( cmr( decode_u64( 2u, 3u, 24u ) ) == 4u );
}

TEST_CASE( "cmr stays within its bounds for full-arity functions", "[mdd][cmr]" )
{
  std::mt19937_64 rng( 12u );
  for ( int trial = 0; trial < 300; ++trial )
  {
    const auto f = oracle::random_function( 3u, 3u, rng );
    if ( num_essential( f ) == 3u )
    {
      REQUIRE( cmr( f ) >= 3u );
      REQUIRE( cmr( f ) <= 6u );
    }
  }
  for ( int trial = 0; trial < 100; ++trial )
  {
    const auto f = oracle::random_function( 4u, 4u, rng );
    if ( num_essential( f ) == 4u )
    {
      REQUIRE( cmr( f ) >= 6u );
      REQUIRE( cmr( f ) <= 36u );
    }
  }
}

TEST_CASE( "MDD of f: five minor classes and an edge of multiplicity 3", "[mdd]" )
{
  const auto d = build_mdd( f12 );
  CHECK( d.nodes.size() == 6u );
  CHECK( d.nodes.size() == mnr( f12 ) + 1u );
  CHECK( d.nodes[d.terminal].label.ess == 0u );
  CHECK( multiplicity( d, 0u, identification_minor( f12, 2u, 1u ) ) == 3u );
  CHECK( multiplicity( d, 0u, identification_minor( f12, 1u, 0u ) ) == 1u );
  CHECK( cmr_from_mdd( d ) == 19u );

  const auto dot = to_dot( d );
  CHECK( std::count( dot.begin(), dot.end(), '\n' ) > 6 );
  CHECK( dot.find( "[label=\"3\"]" ) != std::string::npos );
  CHECK( dot == to_dot( build_mdd( f12 ) ) );
}

TEST_CASE( "MDD of g merges g_{3<-1} with g_{4<-1}", "[mdd]" )
{
  const auto d = build_mdd( g12 );
  CHECK( d.nodes.size() == 7u );
  CHECK( multiplicity( d, 0u, identification_minor( g12, 2u, 0u ) ) == 2u );
  CHECK( multiplicity( d, 0u, identification_minor( g12, 2u, 1u ) ) == 2u );
  CHECK( multiplicity( d, 0u, identification_minor( g12, 3u, 2u ) ) == 1u );
  CHECK( multiplicity( d, 0u, identification_minor( g12, 1u, 0u ) ) == 1u );
  CHECK( cmr_from_mdd( d ) == 24u );
}

TEST_CASE( "MDD node counts and cmr agree with the oracle", "[mdd]" )
{
  for ( std::uint64_t code = 0u; code < 256u; ++code )
  {
    const auto f = decode_u64( 2u, 3u, code );
    const auto d = build_mdd( f );
    if ( num_essential( f ) >= 2u )
    {
      REQUIRE( d.nodes.size() == oracle::minor_classes( f ).size() + 1u );
    }
    else
    {
      REQUIRE( d.nodes.size() == 1u );
    }
    REQUIRE( cmr_from_mdd( d ) == oracle::cmr( f ) );
    REQUIRE( d.nodes[d.terminal].label.ess <= 1u );
  }
}

TEST_CASE( "DOT for a constant is a single node", "[mdd]" )
{
  const auto dot = to_dot( build_mdd( function_table( 2u, 2u ) ) );
  CHECK( dot.find( "->" ) == std::string::npos );
  CHECK( dot.find( "f [" ) != std::string::npos );
}

TEST_CASE( "decomposition tree layers", "[mdd][mdt]" )
{
  const auto f = parse_rse( "x1 + x2 + x3", 3u, 3u );
  const auto tree = build_mdt( f );
  CHECK( tree.nodes.size() == 7u );
  CHECK( tree.layer_sizes() == std::vector<std::size_t>{ 1u, 3u, 0u, 3u } );
  CHECK( tree.nodes[1].parent == 0u );
  CHECK( tree.nodes[1].i == 1u );
  CHECK( tree.nodes[1].j == 0u );

  const auto big = build_mdt( f12 );
  CHECK( big.nodes[0].children.size() == 6u );
  CHECK_THROWS_AS( build_mdt( f12, 5u ), std::length_error );
}
