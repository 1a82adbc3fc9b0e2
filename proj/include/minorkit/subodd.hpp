/*!
  \file subodd.hpp
  \brief Ordered decision diagrams over subfunctions and the implementation
         count imp(f)

  Under a variable ordering, a node queries the first variable of the
  ordering that is still essential in its subfunction. A root-to-terminal
  path is an implementation: the sequence of (variable, constant)
  assignments made along it. imp(f) counts distinct sequences over all
  orderings of Ess(f).
*/

#pragma once

#include <algorithm>
#include <set>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "essential.hpp"
#include "function_table.hpp"
#include "reduce.hpp"

namespace minorkit
{

struct odd_node
{
  function_table function;           /*!< subfunction on the full frame */
  int var{ -1 };                     /*!< queried variable, -1 at terminals */
  std::vector<std::size_t> children; /*!< child per constant 0..k-1 */
};

struct ordered_diagram
{
  std::vector<unsigned> ordering;
  std::vector<odd_node> nodes; /*!< node 0 is the root */

  std::size_t num_terminals() const
  {
    return static_cast<std::size_t>( std::count_if( nodes.begin(), nodes.end(), []( auto const& n ) { return n.var < 0; } ) );
  }
};

struct implementation
{
  std::vector<std::pair<unsigned, value_t>> assignments;
  value_t terminal{ 0u };

  friend bool operator==( const implementation&, const implementation& ) = default;
  friend auto operator<=>( const implementation&, const implementation& ) = default;
};

/*! \brief Reduced ordered diagram of f; equal subfunctions share a node

  Throws std::invalid_argument unless `ordering` is a permutation of Ess(f).
*/
inline ordered_diagram build_odd( const function_table& f, std::span<const unsigned> ordering )
{
  auto sorted = std::vector<unsigned>( ordering.begin(), ordering.end() );
  std::sort( sorted.begin(), sorted.end() );
  if ( sorted != essential_vars( f ) )
  {
    throw std::invalid_argument( "build_odd: ordering must be a permutation of the essential variables" );
  }

  ordered_diagram d;
  d.ordering.assign( ordering.begin(), ordering.end() );
  std::unordered_map<function_table, std::size_t, function_table_hash> index;
  d.nodes.push_back( odd_node{ f, -1, {} } );
  index.emplace( f, 0u );
  for ( std::size_t current = 0u; current < d.nodes.size(); ++current )
  {
    const auto fn = d.nodes[current].function;
    const auto ess = essential_mask( fn );
    const auto next = std::find_if( d.ordering.begin(), d.ordering.end(), [ess]( unsigned v ) { return ( ess >> v ) & 1u; } );
    if ( next == d.ordering.end() )
    {
      continue;
    }
    std::vector<std::size_t> children;
    for ( value_t c = 0u; c < fn.radix(); ++c )
    {
      auto sub = subfunction( fn, *next, c );
      auto [it, inserted] = index.emplace( sub, d.nodes.size() );
      if ( inserted )
      {
        d.nodes.push_back( odd_node{ std::move( sub ), -1, {} } );
      }
      children.push_back( it->second );
    }
    d.nodes[current].var = static_cast<int>( *next );
    d.nodes[current].children = std::move( children );
  }
  return d;
}

/*! \brief All root-to-terminal paths of the diagram, in DFS order */
inline std::vector<implementation> paths( const ordered_diagram& d )
{
  std::vector<implementation> out;
  implementation current;
  const auto visit = [&]( auto&& self, std::size_t v ) -> void {
    const auto& node = d.nodes[v];
    if ( node.var < 0 )
    {
      current.terminal = node.function[0];
      out.push_back( current );
      return;
    }
    for ( std::size_t c = 0u; c < node.children.size(); ++c )
    {
      current.assignments.emplace_back( static_cast<unsigned>( node.var ), static_cast<value_t>( c ) );
      self( self, node.children[c] );
      current.assignments.pop_back();
    }
  };
  visit( visit, 0u );
  return out;
}

/*! \brief Distinct implementation sequences over all orderings of Ess(f)

  Empty for constants.
*/
inline std::set<implementation> implementations( const function_table& f )
{
  std::set<implementation> result;
  auto ordering = essential_vars( f );
  if ( ordering.empty() )
  {
    return result;
  }
  do
  {
    for ( auto& p : paths( build_odd( f, ordering ) ) )
    {
      result.insert( std::move( p ) );
    }
  } while ( std::next_permutation( ordering.begin(), ordering.end() ) );
  return result;
}

inline std::size_t imp( const function_table& f )
{
  return implementations( f ).size();
}

} // namespace minorkit
