// Classifies the Boolean functions of three variables and prints one line per class.

#include <iostream>

#include <minorkit/minorkit.hpp>

int main()
{
  using namespace minorkit;

  const auto cmr_classes = partition_space( 2u, 3u, relation::cmr );
  const auto mnr_classes = partition_space( 2u, 3u, relation::mnr );

  std::cout << "cmr classes: " << cmr_classes.num_classes() << ", mnr classes: " << mnr_classes.num_classes() << "\n";
  for ( const auto& c : cmr_classes.classes )
  {
    const auto f = decode_u64( 2u, 3u, c.representative );
    std::cout << c.id << ": size " << c.size << ", cmr " << cmr( f ) << ", mnr class "
              << mnr_classes.class_index_of( c.representative ) + 1u << ", representative " << format_miniterms( f ) << "\n";
  }

  const auto s_orbits = orbits( 2u, 3u, subgroup_kind::S );
  std::cout << "orbits under permutation of arguments: " << s_orbits.num_classes() << "\n";
}
