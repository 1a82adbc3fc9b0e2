#include <catch_amalgamated.hpp>

#include <random>

#include <minorkit/catalogue.hpp>
#include <minorkit/classify.hpp>
#include <minorkit/groups.hpp>
#include <minorkit/mdd.hpp>
#include <minorkit/rse.hpp>

#include "oracle.hpp"

using namespace minorkit;

namespace
{

affine_map random_map( unsigned k, unsigned n, std::mt19937_64& rng )
{
  std::uniform_int_distribution<unsigned> dist( 0u, k - 1u );
  for ( ;; )
  {
    auto m = affine_map::identity( k, n );
    for ( auto& v : m.A )
    {
      v = static_cast<value_t>( dist( rng ) );
    }
    for ( unsigned i = 0u; i < n; ++i )
    {
      m.c[i] = static_cast<value_t>( dist( rng ) );
      m.a[i] = static_cast<value_t>( dist( rng ) );
    }
    m.d = static_cast<value_t>( dist( rng ) );
    if ( is_invertible( m ) )
    {
      return m;
    }
  }
}

// g(x) = f(xA + c) + a.x + d evaluated pointwise
function_table naive_apply( const affine_map& m, const function_table& f )
{
  return oracle::tabulate( m.k, m.n, [&]( const oracle::point& x ) {
    oracle::point y( m.n );
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
    return oracle::at( f, y ) + lin;
  } );
}

} // namespace

TEST_CASE( "apply_affine is the pointwise formula", "[groups]" )
{
  std::mt19937_64 rng( 31u );
  for ( int trial = 0; trial < 100; ++trial )
  {
    const auto m = random_map( 3u, 2u, rng );
    const auto f = oracle::random_function( 3u, 2u, rng );
    REQUIRE( apply_affine( m, f ) == naive_apply( m, f ) );
  }
  const auto f = parse_rse( "x1x2 + x3", 2u, 3u );
  CHECK( apply_affine( affine_map::identity( 2u, 3u ), f ) == f );
}

TEST_CASE( "apply_affine respects composition", "[groups]" )
{
  std::mt19937_64 rng( 32u );
  for ( int trial = 0; trial < 200; ++trial )
  {
    const auto m1 = random_map( 3u, 2u, rng );
    const auto m2 = random_map( 3u, 2u, rng );
    const auto f = oracle::random_function( 3u, 2u, rng );
    REQUIRE( apply_affine( compose( m1, m2 ), f ) == apply_affine( m2, apply_affine( m1, f ) ) );
  }
}

TEST_CASE( "determinants and invertibility over Z_k", "[groups]" )
{
  auto m = affine_map::identity( 4u, 2u );
  CHECK( determinant( m ) == 1u );
  m.A = { 2, 1, 1, 1 }; // det 1
  CHECK( is_invertible( m ) );
  m.A = { 2, 0, 0, 1 }; // det 2, not a unit mod 4
  CHECK( determinant( m ) == 2u );
  CHECK_FALSE( is_invertible( m ) );
  m.A = { 3, 0, 0, 1 };
  CHECK( is_invertible( m ) );
  auto p = affine_map::identity( 3u, 3u );
  p.A = { 0, 1, 0, 1, 0, 0, 0, 0, 1 };
  CHECK( determinant( p ) == 2u );
  CHECK( is_permutation_matrix( p ) );

  auto singular = affine_map::identity( 3u, 2u );
  singular.A = { 1, 1, 1, 1 };
  CHECK_THROWS_AS( apply_affine( singular, function_table( 3u, 2u ) ), std::invalid_argument );
  CHECK_THROWS_AS( apply_affine( affine_map::identity( 3u, 2u ), function_table( 3u, 3u ) ), std::invalid_argument );
  CHECK_THROWS_AS( apply_affine( affine_map::identity( 2u, 2u ), function_table( 3u, 2u ) ), std::invalid_argument );
}

TEST_CASE( "output maps", "[groups]" )
{
  const auto f = parse_rse( "x1x2", 2u, 2u );
  CHECK( apply_output( { { 1, 0 } }, f ) == parse_rse( "x1x2 + 1", 2u, 2u ) );
  CHECK( apply_output( { { 0, 1 } }, f ) == f );
  const auto collapsed = apply_output( { { 1, 1 } }, f );
  CHECK( essential_vars( collapsed ).empty() );
  CHECK_THROWS_AS( apply_output( { { 0, 1, 2 } }, f ), std::invalid_argument );
  CHECK_THROWS_AS( apply_output( { { 0, 2 } }, f ), std::invalid_argument );
}

TEST_CASE( "generators satisfy their subgroup constraints", "[groups]" )
{
  for ( auto kind : all_subgroup_kinds )
  {
    for ( unsigned k : { 2u, 3u, 4u } )
    {
      for ( unsigned n : { 1u, 2u, 3u } )
      {
        for ( const auto& g : generators( kind, k, n ) )
        {
          REQUIRE( satisfies( kind, g ) );
          REQUIRE( satisfies( subgroup_kind::RAG, g ) );
        }
      }
    }
  }
  CHECK( generators( subgroup_kind::S, 2u, 2u ).size() == 1u );
  CHECK( generators( subgroup_kind::S, 2u, 1u ).empty() );
  const auto cf = generators( subgroup_kind::CF, 2u, 3u );
  REQUIRE( cf.size() == 1u );
  CHECK( cf[0].d == 1u );
  CHECK( cf[0].A == affine_map::identity( 2u, 3u ).A );
}

TEST_CASE( "subgroup orders", "[groups]" )
{
  CHECK( group_order( subgroup_kind::S, 2u, 3u ) == 6u );
  CHECK( group_order( subgroup_kind::CF, 3u, 2u ) == 3u );
  CHECK( group_order( subgroup_kind::CA, 2u, 3u ) == 8u );
  CHECK( group_order( subgroup_kind::LF, 3u, 2u ) == 9u );
  CHECK( group_order( subgroup_kind::G, 2u, 3u ) == 48u );
  // permutations and translations act as n! k^n maps of the domain, the output shift doubles the count
  CHECK( domain_group_order( subgroup_kind::GE, 2u, 3u ) == 48u );
  CHECK( group_order( subgroup_kind::GE, 2u, 3u ) == 96u );
  CHECK( group_order( subgroup_kind::LG, 2u, 3u ) == 168u );
  CHECK( group_order( subgroup_kind::LG, 3u, 2u ) == 48u );
  CHECK( group_order( subgroup_kind::LG, 4u, 1u ) == 2u );
  CHECK( group_order( subgroup_kind::RAG, 2u, 2u ) == 6u * 4u * 4u * 2u );
  for ( const auto& m : group_elements( subgroup_kind::G, 3u, 2u ) )
  {
    REQUIRE( satisfies( subgroup_kind::G, m ) );
  }
}

TEST_CASE( "S-orbits on small spaces", "[groups]" )
{
  CHECK( orbits( 2u, 1u, subgroup_kind::S ).num_classes() == 4u );
  CHECK( orbits( 2u, 2u, subgroup_kind::S ).num_classes() == 12u );
  CHECK( orbits( 2u, 3u, subgroup_kind::S ).num_classes() == 80u );
  CHECK( orbits( 2u, 2u, subgroup_kind::CF ).num_classes() == 8u );
  CHECK( orbits( 2u, 2u, subgroup_kind::RAG ).total_size() == 16u );
}

TEST_CASE( "S-orbits are the classes of the permutation canonical form", "[groups]" )
{
  const auto p = orbits( 2u, 3u, subgroup_kind::S );
  for ( const auto& c : p.classes )
  {
    const auto first = decode_u64( 2u, 3u, c.representative );
    for ( auto code : c.members )
    {
      const auto f = decode_u64( 2u, 3u, code );
      bool related = false;
      const std::vector<std::vector<unsigned>> perms{ { 0, 1, 2 }, { 0, 2, 1 }, { 1, 0, 2 }, { 1, 2, 0 }, { 2, 0, 1 }, { 2, 1, 0 } };
      for ( const auto& perm : perms )
      {
        related = related || permute_vars( first, perm ) == f;
      }
      REQUIRE( related );
    }
  }
}

TEST_CASE( "orbit partitions do not depend on jobs or generator order", "[groups]" )
{
  const auto serial = orbits( 2u, 3u, subgroup_kind::GE, { 1u } );
  const auto parallel = orbits( 2u, 3u, subgroup_kind::GE, { 3u } );
  CHECK( to_csv( serial ) == to_csv( parallel ) );

  // closure by BFS from each representative, with reversed generators
  auto gens = generators( subgroup_kind::GE, 2u, 3u );
  std::reverse( gens.begin(), gens.end() );
  for ( const auto& c : serial.classes )
  {
    std::set<std::uint64_t> seen{ c.representative };
    std::vector<std::uint64_t> stack{ c.representative };
    while ( !stack.empty() )
    {
      const auto f = decode_u64( 2u, 3u, stack.back() );
      stack.pop_back();
      for ( const auto& g : gens )
      {
        const auto code = encode_u64( apply_affine( g, f ) );
        if ( seen.insert( code ).second )
        {
          stack.push_back( code );
        }
      }
    }
    REQUIRE( std::vector<std::uint64_t>( seen.begin(), seen.end() ) == c.members );
  }
}

TEST_CASE( "orbit_of enumerates one orbit", "[groups]" )
{
  const auto f = parse_rse( "x1 + x2 + x3", 3u, 3u );
  const auto orbit = orbit_of( f, subgroup_kind::RAG );
  // a.x can cancel the linear part, so the orbit is every affine function over Z_3, constants included
  CHECK( orbit.size() == 81u );
  CHECK( orbit.count( function_table( 3u, 3u ) ) == 1u );
  for ( const auto& h : orbit )
  {
    REQUIRE( num_essential( h ) <= 3u );
  }
  CHECK( orbit.count( parse_rse( "x1x2 + x1x3 + x2x3", 3u, 3u ) ) == 0u );
  CHECK_THROWS_AS( orbit_of( f, subgroup_kind::RAG, 10u ), std::length_error );
}

TEST_CASE( "permutations and output shifts keep cmr signatures", "[groups]" )
{
  const auto gens_s = generators( subgroup_kind::S, 2u, 3u );
  const auto gens_cf = generators( subgroup_kind::CF, 2u, 3u );
  for ( std::uint64_t code = 0u; code < 256u; ++code )
  {
    const auto f = decode_u64( 2u, 3u, code );
    for ( const auto& g : gens_s )
    {
      REQUIRE( cmr_signature_of( apply_affine( g, f ) ) == cmr_signature_of( f ) );
    }
    for ( const auto& g : gens_cf )
    {
      REQUIRE( cmr( apply_affine( g, f ) ) == cmr( f ) );
      REQUIRE( cmr_signature_of( apply_affine( g, f ) ) == cmr_signature_of( f ) );
    }
  }
  std::mt19937_64 rng( 33u );
  for ( int trial = 0; trial < 200; ++trial )
  {
    const auto f = oracle::random_function( 3u, 2u, rng );
    for ( auto kind : { subgroup_kind::S, subgroup_kind::CF } )
    {
      for ( const auto& g : generators( kind, 3u, 2u ) )
      {
        REQUIRE( cmr_equivalent( apply_affine( g, f ), f ) );
      }
    }
  }
}

TEST_CASE( "subgroup names", "[groups]" )
{
  for ( auto kind : all_subgroup_kinds )
  {
    CHECK( parse_subgroup_kind( to_string( kind ) ) == kind );
  }
  CHECK_THROWS_AS( parse_subgroup_kind( "AGL" ), std::invalid_argument );
  std::vector<unsigned> bad{ 0u, 0u };
  CHECK_THROWS_AS( permutation_map( 2u, bad ), std::invalid_argument );
}
