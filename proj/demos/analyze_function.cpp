// Minors, diagram and complexities of one ternary function in four variables.

#include <iostream>

#include <minorkit/minorkit.hpp>

int main()
{
  using namespace minorkit;

  const auto f = parse_rse( "x1^0x2^1 + x2^0x3^1x4^2", 3u, 4u );

  std::cout << "essential variables: " << num_essential( f ) << "\n";
  for_each_simple_minor( f, [&]( unsigned i, unsigned j, const function_table& h ) {
    std::cout << "  f_{" << i + 1u << "<-" << j + 1u << "}: ess " << num_essential( h ) << ", cmr " << cmr( h ) << "\n";
  } );
  std::cout << "cmr(f) = " << cmr( f ) << ", mnr(f) = " << mnr( f ) << "\n";

  const auto d = build_mdd( f );
  std::cout << "MDD: " << d.nodes.size() << " nodes, " << d.edges.size() << " edges\n";
  std::cout << to_dot( d );

  std::cout << to_json( analyze( f ) ).dump( 2 ) << "\n";
}
