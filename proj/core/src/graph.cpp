#include "tjr/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "tjr/errors.hpp"

namespace tjr
{

namespace
{

constexpr int oracle_cap = 16;

void check_oracle_size( const Graph& g )
{
    if ( g.vertices() > oracle_cap )
        throw CapacityError( "graph oracle: " + std::to_string( g.vertices() ) + " vertices exceed the cap "
                             + std::to_string( oracle_cap ) );
}

std::string edge_text( const Graph::Edge& e )
{
    return "{" + std::to_string( e.first + 1 ) + ", " + std::to_string( e.second + 1 ) + "}";
}

} // namespace

Graph::Graph( int vertices, std::vector< Edge > edges ) : Graph( vertices, std::move( edges ), std::nullopt, {} ) {}

Graph::Graph( int vertices, std::vector< Edge > edges, std::optional< int > left, std::vector< int > parts )
    : _nu{ vertices }, _edges{ std::move( edges ) }, _left{ left }, _parts{ std::move( parts ) }
{
    if ( _nu < 0 )
        throw InputError( "graph: negative vertex count" );
    for ( auto& [ u, v ] : _edges ) {
        if ( u < 0 || v < 0 || u >= _nu || v >= _nu )
            throw InputError( "graph: edge {" + std::to_string( u + 1 ) + ", " + std::to_string( v + 1 )
                              + "} outside 1.." + std::to_string( _nu ) );
        if ( u == v )
            throw InputError( "graph: self-loop at vertex " + std::to_string( u + 1 ) );
        if ( u > v )
            std::swap( u, v );
    }
    std::sort( _edges.begin(), _edges.end() );
    if ( auto dup = std::adjacent_find( _edges.begin(), _edges.end() ); dup != _edges.end() )
        throw InputError( "graph: duplicate edge " + edge_text( *dup ) );

    _adjacency.assign( static_cast< std::size_t >( _nu ) * static_cast< std::size_t >( _nu ), 0 );
    for ( auto [ u, v ] : _edges ) {
        _adjacency[ static_cast< std::size_t >( u ) * _nu + v ] = 1;
        _adjacency[ static_cast< std::size_t >( v ) * _nu + u ] = 1;
    }

    if ( _left ) {
        if ( *_left < 0 || *_left > _nu )
            throw InputError( "graph: bipartition size " + std::to_string( *_left ) + " not in 0.."
                              + std::to_string( _nu ) );
        for ( const auto& e : _edges )
            if ( ( e.first < *_left ) == ( e.second < *_left ) )
                throw InputError( "graph: edge " + edge_text( e ) + " lies inside one side of the bipartition" );
    }
    if ( !_parts.empty() ) {
        for ( std::size_t i = 0; i < _parts.size(); ++i )
            if ( _parts[ i ] < 1 )
                throw InputError( "graph: part " + std::to_string( i + 1 ) + " is empty" );
        if ( std::accumulate( _parts.begin(), _parts.end(), 0 ) != _nu )
            throw InputError( "graph: part sizes do not add up to " + std::to_string( _nu ) + " vertices" );
        for ( const auto& e : _edges )
            if ( part_of( e.first ) == part_of( e.second ) )
                throw InputError( "graph: edge " + edge_text( e ) + " lies inside part "
                                  + std::to_string( part_of( e.first ) + 1 ) );
    }
}

Graph Graph::bipartite( int left, int right, std::vector< Edge > edges )
{
    if ( left < 0 || right < 0 )
        throw InputError( "graph: negative side size" );
    return Graph( left + right, std::move( edges ), left, {} );
}

Graph Graph::multipartite( std::vector< int > part_sizes, std::vector< Edge > edges )
{
    if ( part_sizes.empty() )
        throw InputError( "graph: a multipartite graph needs at least one part" );
    const int total = std::accumulate( part_sizes.begin(), part_sizes.end(), 0 );
    return Graph( total, std::move( edges ), std::nullopt, std::move( part_sizes ) );
}

bool Graph::adjacent( int u, int v ) const
{
    return _adjacency[ static_cast< std::size_t >( u ) * _nu + v ] != 0;
}

int Graph::degree( int v ) const
{
    const auto* row = _adjacency.data() + static_cast< std::size_t >( v ) * _nu;
    return static_cast< int >( std::count( row, row + _nu, 1 ) );
}

int Graph::max_degree() const
{
    int best = 0;
    for ( int v = 0; v < _nu; ++v )
        best = std::max( best, degree( v ) );
    return best;
}

int Graph::left_size() const
{
    if ( !_left )
        throw PreconditionError( "graph is not bipartite" );
    return *_left;
}

int Graph::right_size() const
{
    return _nu - left_size();
}

int Graph::part_of( int v ) const
{
    int start = 0;
    for ( std::size_t i = 0; i < _parts.size(); ++i ) {
        start += _parts[ i ];
        if ( v < start )
            return static_cast< int >( i );
    }
    throw PreconditionError( "graph is not multipartite or vertex out of range" );
}

std::vector< int > Graph::part_vertices( int part ) const
{
    int start = 0;
    for ( int i = 0; i < part; ++i )
        start += _parts.at( static_cast< std::size_t >( i ) );
    std::vector< int > members( static_cast< std::size_t >( _parts.at( static_cast< std::size_t >( part ) ) ) );
    std::iota( members.begin(), members.end(), start );
    return members;
}

std::string_view to_string( GraphProperty property )
{
    switch ( property ) {
    case GraphProperty::clique:
        return "clique";
    case GraphProperty::independent_set:
        return "independent-set";
    case GraphProperty::biclique_edges:
        return "biclique-edges";
    case GraphProperty::multicolored_clique:
        return "multicolored-clique";
    }
    return "?";
}

namespace
{

// Does some size-kappa subset have all pairs adjacent (want = true) or all
// pairs non-adjacent (want = false)?
bool has_uniform_set( const Graph& g, int kappa, bool want )
{
    check_oracle_size( g );
    if ( kappa <= 0 )
        return true;
    const int nu = g.vertices();
    if ( kappa > nu )
        return false;
    for ( std::uint32_t mask = 0; mask < ( 1U << nu ); ++mask ) {
        if ( std::popcount( mask ) != kappa )
            continue;
        bool ok = true;
        for ( int u = 0; u < nu && ok; ++u )
            for ( int v = u + 1; v < nu && ok; ++v )
                if ( ( mask >> u & 1U ) && ( mask >> v & 1U ) && g.adjacent( u, v ) != want )
                    ok = false;
        if ( ok )
            return true;
    }
    return false;
}

} // namespace

bool has_clique( const Graph& g, int kappa )
{
    return has_uniform_set( g, kappa, true );
}

bool has_independent_set( const Graph& g, int kappa )
{
    return has_uniform_set( g, kappa, false );
}

bool has_biclique_edges( const Graph& g, int kappa )
{
    check_oracle_size( g );
    if ( kappa <= 0 )
        return true;
    const int left = g.left_size();
    const int nu = g.vertices();
    for ( std::uint32_t mask = 1; mask < ( 1U << left ); ++mask ) {
        int common = 0;
        for ( int r = left; r < nu; ++r ) {
            bool all = true;
            for ( int l = 0; l < left && all; ++l )
                if ( mask >> l & 1U )
                    all = g.adjacent( l, r );
            if ( all )
                ++common;
        }
        if ( std::popcount( mask ) * common >= kappa )
            return true;
    }
    return false;
}

bool has_multicolored_clique( const Graph& g )
{
    check_oracle_size( g );
    if ( !g.is_multipartite() )
        throw PreconditionError( "multicolored clique oracle needs a multipartite graph" );
    const auto k = g.part_sizes().size();
    std::vector< std::vector< int > > parts;
    for ( std::size_t i = 0; i < k; ++i )
        parts.push_back( g.part_vertices( static_cast< int >( i ) ) );

    std::vector< std::size_t > pick( k, 0 );
    while ( true ) {
        bool ok = true;
        for ( std::size_t a = 0; a < k && ok; ++a )
            for ( std::size_t b = a + 1; b < k && ok; ++b )
                ok = g.adjacent( parts[ a ][ pick[ a ] ], parts[ b ][ pick[ b ] ] );
        if ( ok )
            return true;
        std::size_t i = k;
        while ( true ) {
            if ( i == 0 )
                return false;
            --i;
            if ( ++pick[ i ] < parts[ i ].size() )
                break;
            pick[ i ] = 0;
        }
    }
}

bool graph_oracle( const Graph& g, GraphProperty property, int parameter )
{
    switch ( property ) {
    case GraphProperty::clique:
        return has_clique( g, parameter );
    case GraphProperty::independent_set:
        return has_independent_set( g, parameter );
    case GraphProperty::biclique_edges:
        return has_biclique_edges( g, parameter );
    case GraphProperty::multicolored_clique:
        return has_multicolored_clique( g );
    }
    return false;
}

} // namespace tjr
