#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace tjr
{

// Simple undirected graph on vertices 0..nu-1. Optionally bipartite (the first
// `left` vertices form L) or k-partite (parts are consecutive index blocks).
class Graph
{
public:
    using Edge = std::pair< int, int >;

    Graph( int vertices, std::vector< Edge > edges );
    [[nodiscard]] static Graph bipartite( int left, int right, std::vector< Edge > edges );
    [[nodiscard]] static Graph multipartite( std::vector< int > part_sizes, std::vector< Edge > edges );

    [[nodiscard]] int vertices() const noexcept { return _nu; }
    // Normalized to u < v and sorted.
    [[nodiscard]] const std::vector< Edge >& edges() const noexcept { return _edges; }
    [[nodiscard]] bool adjacent( int u, int v ) const;
    [[nodiscard]] int degree( int v ) const;
    [[nodiscard]] int max_degree() const;

    [[nodiscard]] bool is_bipartite() const noexcept { return _left.has_value(); }
    [[nodiscard]] int left_size() const;
    [[nodiscard]] int right_size() const;

    [[nodiscard]] bool is_multipartite() const noexcept { return !_parts.empty(); }
    [[nodiscard]] const std::vector< int >& part_sizes() const noexcept { return _parts; }
    [[nodiscard]] int part_of( int v ) const;
    [[nodiscard]] std::vector< int > part_vertices( int part ) const;

    friend bool operator==( const Graph&, const Graph& ) = default;

private:
    Graph( int vertices, std::vector< Edge > edges, std::optional< int > left, std::vector< int > parts );

    int _nu;
    std::vector< Edge > _edges;
    std::optional< int > _left;
    std::vector< int > _parts;
    std::vector< char > _adjacency;
};

enum class GraphProperty
{
    clique,
    independent_set,
    biclique_edges,
    multicolored_clique
};

[[nodiscard]] std::string_view to_string( GraphProperty property );

// Exhaustive oracles; every one refuses graphs with more than 16 vertices.
[[nodiscard]] bool has_clique( const Graph& g, int kappa );
[[nodiscard]] bool has_independent_set( const Graph& g, int kappa );
// A biclique L' x R' (L' in L, R' in R, all edges present) with |L'||R'| >= kappa.
[[nodiscard]] bool has_biclique_edges( const Graph& g, int kappa );
// One vertex per part, pairwise adjacent.
[[nodiscard]] bool has_multicolored_clique( const Graph& g );

// Dispatch on `property`; `parameter` is ignored for multicolored cliques.
[[nodiscard]] bool graph_oracle( const Graph& g, GraphProperty property, int parameter );

} // namespace tjr
