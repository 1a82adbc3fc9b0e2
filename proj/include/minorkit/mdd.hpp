/*!
  \file mdd.hpp
  \brief Minor decomposition trees, minor decision diagrams and the cmr
         complexity

  cmr(f) = 1 if ess(f) <= 1, 2 if ess(f) = 2, and otherwise the sum of
  cmr(f_{i<-j}) over all essential pairs j < i. The value only depends on the
  class of f up to permutation and fictive variables, which is what the
  memo is keyed on.
*/

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "essential.hpp"
#include "function_table.hpp"
#include "reduce.hpp"

namespace minorkit
{

/*! \brief Thread-safe memo from canonical forms to cmr values

  Concurrent writers for the same key always store the same value, so a
  lost race only costs a recomputation.
*/
class cmr_cache
{
public:
  std::optional<std::uint64_t> find( const canonical_form& key ) const
  {
    std::shared_lock lock( mutex_ );
    if ( const auto it = map_.find( key ); it != map_.end() )
    {
      return it->second;
    }
    return std::nullopt;
  }

  void insert( const canonical_form& key, std::uint64_t value )
  {
    std::unique_lock lock( mutex_ );
    map_.insert_or_assign( key, value );
  }

  std::size_t size() const
  {
    std::shared_lock lock( mutex_ );
    return map_.size();
  }

  void clear()
  {
    std::unique_lock lock( mutex_ );
    map_.clear();
  }

private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<canonical_form, std::uint64_t, canonical_form_hash> map_;
};

/*! \brief Process-wide cache used by cmr( f ) */
inline cmr_cache& shared_cmr_cache()
{
  static cmr_cache cache;
  return cache;
}

namespace detail
{

inline std::uint64_t cmr_reduced( const function_table& g, cmr_cache& cache )
{
  const auto m = g.num_vars();
  if ( m <= 1u )
  {
    return 1u;
  }
  if ( m == 2u )
  {
    return 2u;
  }
  const auto key = canonical_form_of_reduced( g );
  if ( const auto hit = cache.find( key ) )
  {
    return *hit;
  }
  std::uint64_t sum = 0u;
  for ( unsigned i = 1u; i < m; ++i )
  {
    for ( unsigned j = 0u; j < i; ++j )
    {
      sum += cmr_reduced( drop_fictive( identify_unchecked( g, i, j ) ), cache );
    }
  }
  cache.insert( key, sum );
  return sum;
}

} // namespace detail

inline std::uint64_t cmr( const function_table& f, cmr_cache& cache )
{
  return detail::cmr_reduced( drop_fictive( f ), cache );
}

inline std::uint64_t cmr( const function_table& f )
{
  return cmr( f, shared_cmr_cache() );
}

/*! \brief cmr by plain recursion on the full frame, without any memo */
inline std::uint64_t cmr_uncached( const function_table& f )
{
  const auto ess = num_essential( f );
  if ( ess <= 1u )
  {
    return 1u;
  }
  if ( ess == 2u )
  {
    return 2u;
  }
  std::uint64_t sum = 0u;
  for_each_simple_minor( f, [&]( auto, auto, const function_table& h ) { sum += cmr_uncached( h ); } );
  return sum;
}

/*! \brief Node of a minor decomposition tree */
struct mdt_node
{
  function_table function;           /*!< on the frame of the root */
  std::size_t parent{ 0u };          /*!< index of the parent, 0 for the root itself */
  unsigned i{ 0u }, j{ 0u };         /*!< the node is parent_{i<-j} (0-based), unused for the root */
  unsigned order{ 0u };              /*!< ess(root) - ess(node) */
  std::vector<std::size_t> children; /*!< one per essential pair j < i */
};

/*! \brief Minor decomposition tree; node 0 is the root */
struct mdt
{
  std::vector<mdt_node> nodes;

  /*! \brief Number of nodes per order (layer 0 is the root) */
  std::vector<std::size_t> layer_sizes() const
  {
    std::vector<std::size_t> sizes;
    for ( const auto& node : nodes )
    {
      if ( sizes.size() <= node.order )
      {
        sizes.resize( node.order + 1u, 0u );
      }
      ++sizes[node.order];
    }
    return sizes;
  }
};

inline constexpr std::size_t default_mdt_node_limit = 1000000u;

/*! \brief Full recursion over simple minors, no merging

  The tree grows super-exponentially in ess(f); throws std::length_error
  once `node_limit` nodes would be exceeded.
*/
inline mdt build_mdt( const function_table& f, std::size_t node_limit = default_mdt_node_limit )
{
  mdt tree;
  const auto root_ess = num_essential( f );
  tree.nodes.push_back( mdt_node{ f, 0u, 0u, 0u, 0u, {} } );
  for ( std::size_t current = 0u; current < tree.nodes.size(); ++current )
  {
    const auto fn = tree.nodes[current].function;
    std::vector<std::size_t> children;
    for_each_simple_minor( fn, [&]( unsigned i, unsigned j, const function_table& h ) {
      if ( tree.nodes.size() >= node_limit )
      {
        throw std::length_error( "build_mdt: node limit exceeded" );
      }
      const auto order = root_ess - num_essential( h );
      children.push_back( tree.nodes.size() );
      tree.nodes.push_back( mdt_node{ h, current, i, j, order, {} } );
    } );
    tree.nodes[current].children = std::move( children );
  }
  return tree;
}

struct mdd_node
{
  canonical_form label;
};

struct mdd_edge
{
  std::size_t source{ 0u };
  std::size_t target{ 0u };
  std::uint64_t multiplicity{ 1u }; /*!< number of merged tree edges */
};

/*! \brief Minor decision diagram

  Node 0 is the function node; every other node is one class of Mnr(f). The
  terminal is the unique node with ess <= 1 (the root itself when ess(f) <=
  1). Edges are sorted by (source, target).
*/
struct mdd
{
  unsigned k{ 2u };
  std::vector<mdd_node> nodes;
  std::vector<mdd_edge> edges;
  std::size_t terminal{ 0u };

  std::vector<mdd_edge> out_edges( std::size_t node ) const
  {
    std::vector<mdd_edge> out;
    for ( const auto& e : edges )
    {
      if ( e.source == node )
      {
        out.push_back( e );
      }
    }
    return out;
  }
};

/*! \brief Merges the decomposition tree of f by equivalent labels

  Children of a class are computed once from its canonical representative;
  equivalent functions have equivalent minors with equal multiplicities, so
  this is the fixpoint of both merging rules.
*/
inline mdd build_mdd( const function_table& f )
{
  mdd d;
  d.k = f.radix();
  d.nodes.push_back( mdd_node{ make_canonical( f ) } );
  std::map<canonical_form, std::size_t> index;
  std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> multiplicity;
  for ( std::size_t current = 0u; current < d.nodes.size(); ++current )
  {
    const auto fn = d.nodes[current].label.table();
    for_each_simple_minor( fn, [&]( auto, auto, const function_table& h ) {
      auto label = make_canonical( h );
      auto [it, inserted] = index.emplace( label, d.nodes.size() );
      if ( inserted )
      {
        d.nodes.push_back( mdd_node{ std::move( label ) } );
      }
      ++multiplicity[{ current, it->second }];
    } );
  }
  for ( const auto& [key, mult] : multiplicity )
  {
    d.edges.push_back( mdd_edge{ key.first, key.second, mult } );
  }
  for ( std::size_t v = 0u; v < d.nodes.size(); ++v )
  {
    if ( d.nodes[v].label.ess <= 1u )
    {
      d.terminal = v;
    }
  }
  return d;
}

/*! \brief cmr evaluated bottom-up on the diagram, weighting children by edge labels */
inline std::uint64_t cmr_from_mdd( const mdd& d )
{
  std::vector<std::optional<std::uint64_t>> value( d.nodes.size() );
  // nodes are discovered in BFS order from the root and every edge lowers ess,
  // so visiting by increasing ess handles children first
  std::vector<std::size_t> order( d.nodes.size() );
  for ( std::size_t v = 0u; v < order.size(); ++v )
  {
    order[v] = v;
  }
  std::stable_sort( order.begin(), order.end(), [&]( auto a, auto b ) { return d.nodes[a].label.ess < d.nodes[b].label.ess; } );
  for ( auto v : order )
  {
    const auto ess = d.nodes[v].label.ess;
    if ( ess <= 1u )
    {
      value[v] = 1u;
    }
    else if ( ess == 2u )
    {
      value[v] = 2u;
    }
    else
    {
      std::uint64_t sum = 0u;
      for ( const auto& e : d.out_edges( v ) )
      {
        sum += e.multiplicity * value[e.target].value();
      }
      value[v] = sum;
    }
  }
  return value[0].value();
}

/*! \brief DOT rendering of an MDD

  The function node comes first, then the minor classes ordered by
  (catalogue code, ess); edges are ordered by the same key of their
  endpoints. Multiplicities of 1 are not printed.
*/
inline std::string to_dot( const mdd& d )
{
  std::vector<std::size_t> order;
  for ( std::size_t v = 1u; v < d.nodes.size(); ++v )
  {
    order.push_back( v );
  }
  std::vector<big_code> codes;
  for ( const auto& node : d.nodes )
  {
    codes.push_back( node.label.code().code );
  }
  const auto key_less = [&]( std::size_t a, std::size_t b ) {
    if ( a == 0u || b == 0u )
    {
      return a == 0u && b != 0u;
    }
    if ( codes[a] != codes[b] )
    {
      return codes[a] < codes[b];
    }
    return d.nodes[a].label.ess < d.nodes[b].label.ess;
  };
  std::sort( order.begin(), order.end(), key_less );

  const auto name = [&]( std::size_t v ) {
    return v == 0u ? std::string( "f" ) : "m" + std::to_string( d.nodes[v].label.ess ) + "_" + codes[v].str();
  };

  std::ostringstream os;
  os << "digraph mdd {\n";
  os << "  // k = " << d.k << "\n";
  os << "  " << name( 0u ) << " [shape=plaintext, label=\"f\\ncode " << codes[0].str() << "\\ness " << d.nodes[0].label.ess << "\"];\n";
  for ( auto v : order )
  {
    const auto shape = v == d.terminal ? "box" : "ellipse";
    os << "  " << name( v ) << " [shape=" << shape << ", label=\"code " << codes[v].str() << "\\ness " << d.nodes[v].label.ess
       << "\"];\n";
  }
  auto edges = d.edges;
  std::sort( edges.begin(), edges.end(), [&]( const mdd_edge& a, const mdd_edge& b ) {
    if ( a.source != b.source )
    {
      return key_less( a.source, b.source );
    }
    return key_less( a.target, b.target );
  } );
  for ( const auto& e : edges )
  {
    os << "  " << name( e.source ) << " -> " << name( e.target );
    if ( e.multiplicity > 1u )
    {
      os << " [label=\"" << e.multiplicity << "\"]";
    }
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

} // namespace minorkit
