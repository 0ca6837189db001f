#include "tjr/generators.hpp"

#include <random>

#include "tjr/errors.hpp"

namespace tjr
{

ReductionBundle gen_clique_wjr( const Graph& g, int kappa )
{
    if ( kappa < 1 )
        throw PreconditionError( "clique reduction: kappa must be >= 1" );
    const int nu = g.vertices();
    if ( nu < 1 )
        throw InputError( "clique reduction: the graph needs at least one vertex" );
    const int n = nu + ( kappa - 1 ) * nu;
    ElectionBuilder b( n, 3, nu );
    for ( int i = 0; i < nu; ++i )
        for ( int t = 0; t < nu; ++t ) {
            if ( t == i )
                b.set( i, t, { 1 } );
            else if ( g.adjacent( i, t ) )
                b.set( i, t, { 0, 1 } );
            else
                b.set( i, t, { 0 } );
        }
    for ( int i = nu; i < n; ++i )
        for ( int t = 0; t < nu; ++t )
            b.set( i, t, { 2 } );
    return { b.build(), Outcome( std::vector< int >( static_cast< std::size_t >( nu ), 2 ) ),
             { Axiom::jr, Strength::weak }, GraphProperty::clique, kappa };
}

ReductionBundle gen_is3_wejr( const Graph& g, int kappa )
{
    const int nu = g.vertices();
    if ( g.max_degree() > 3 )
        throw PreconditionError( "IS-3 reduction: vertex degree exceeds 3" );
    if ( kappa > nu - 3 )
        throw PreconditionError( "IS-3 reduction: kappa=" + std::to_string( kappa ) + " exceeds nu-3="
                                 + std::to_string( nu - 3 ) );
    if ( kappa < 1 )
        throw PreconditionError( "IS-3 reduction: kappa must be >= 1" );
    const int n = nu + ( nu + 1 - kappa );
    const int ell = 2 * nu + 1 - kappa;
    constexpr int p = 0;
    constexpr int q = 1;
    ElectionBuilder b( n, 2, ell );
    for ( int i = 0; i < n; ++i )
        for ( int t = 0; t < ell; ++t ) {
            if ( t >= nu )
                b.set( i, t, { p } );
            else if ( i < nu && t == i )
                b.set( i, t, { q } );
            else if ( i < nu && g.adjacent( i, t ) )
                b.set( i, t, { p } );
            else
                b.set( i, t, { p, q } );
        }
    return { b.build(), Outcome( std::vector< int >( static_cast< std::size_t >( ell ), q ) ),
             { Axiom::ejr, Strength::weak }, GraphProperty::independent_set, kappa };
}

ReductionBundle gen_biclique_jr( const Graph& g, int kappa, bool nonempty_pad, Axiom axiom )
{
    if ( !g.is_bipartite() )
        throw InputError( "biclique reduction: the graph must be bipartite" );
    const int nu = g.left_size();
    const int lambda = g.right_size();
    if ( kappa <= nu + lambda )
        throw PreconditionError( "biclique reduction: kappa=" + std::to_string( kappa ) + " must exceed |L|+|R|="
                                 + std::to_string( nu + lambda ) + " (apply the blow-up first)" );
    if ( lambda < 1 )
        throw InputError( "biclique reduction: R must be nonempty" );
    constexpr int p = 0;
    constexpr int q = 1;
    const int m = nonempty_pad ? 2 + nu : 2;
    ElectionBuilder b( kappa, m, lambda );
    for ( int i = 0; i < nu; ++i )
        for ( int t = 0; t < lambda; ++t ) {
            if ( g.adjacent( i, nu + t ) )
                b.set( i, t, { p } );
            else if ( nonempty_pad )
                b.set( i, t, { 2 + i } );
        }
    for ( int i = nu; i < kappa; ++i )
        for ( int t = 0; t < lambda; ++t )
            b.set( i, t, { q } );
    return { b.build(), Outcome( std::vector< int >( static_cast< std::size_t >( lambda ), q ) ),
             { axiom, Strength::strong }, GraphProperty::biclique_edges, kappa };
}

BlownUpGraph blowup( const Graph& g, int kappa )
{
    if ( !g.is_bipartite() )
        throw InputError( "blow-up: the graph must be bipartite" );
    const int xi = g.vertices() + 1;
    std::vector< Graph::Edge > edges;
    for ( auto [ u, v ] : g.edges() )
        for ( int a = 0; a < xi; ++a )
            for ( int c = 0; c < xi; ++c )
                edges.emplace_back( u * xi + a, v * xi + c );
    return { Graph::bipartite( g.left_size() * xi, g.right_size() * xi, std::move( edges ) ), xi * xi * kappa };
}

ReductionBundle gen_multicolored_wjr( const Graph& g, int k )
{
    if ( !g.is_multipartite() )
        throw InputError( "multicolored clique reduction: the graph must declare its parts" );
    if ( static_cast< int >( g.part_sizes().size() ) != k )
        throw InputError( "multicolored clique reduction: k=" + std::to_string( k ) + " but the graph has "
                          + std::to_string( g.part_sizes().size() ) + " parts" );
    if ( k < 2 )
        throw PreconditionError( "multicolored clique reduction: k must be >= 2" );
    const int vertex_voters = g.vertices();
    int fillers = 0;
    if ( vertex_voters < k * k )
        fillers = k * k - vertex_voters;
    else if ( vertex_voters > k * k )
        fillers = ( vertex_voters - k * k + k - 2 ) / ( k - 1 );
    const bool fillers_approve = vertex_voters > k * k;

    const int dummy = g.vertices();
    ElectionBuilder b( vertex_voters + fillers, g.vertices() + 1, k );
    for ( int round = 0; round < k; ++round ) {
        const auto live = g.part_vertices( round );
        for ( int v = 0; v < vertex_voters; ++v ) {
            if ( g.part_of( v ) == round ) {
                b.set( v, round, { v } );
                continue;
            }
            std::vector< int > approved;
            for ( int u : live )
                if ( g.adjacent( u, v ) )
                    approved.push_back( u );
            b.set( v, round, std::move( approved ) );
        }
        if ( fillers_approve )
            for ( int f = 0; f < fillers; ++f )
                b.set( vertex_voters + f, round, live );
    }
    return { b.build(), Outcome( std::vector< int >( static_cast< std::size_t >( k ), dummy ) ),
             { Axiom::jr, Strength::weak }, GraphProperty::multicolored_clique, k };
}

Election gen_example1()
{
    constexpr int n = 6;
    constexpr int pairs = n * ( n - 1 ) / 2;
    ElectionBuilder b( n, pairs + n, 3 );
    int x = 0;
    for ( int a = 0; a < n; ++a )
        for ( int c = a + 1; c < n; ++c, ++x ) {
            b.approve( a, 0, x );
            b.approve( c, 0, x );
        }
    for ( int i = 0; i < n; ++i ) {
        b.set( i, 1, { pairs + i } );
        b.set( i, 2, { pairs + i } );
    }
    return b.build();
}

Election gen_semionline( int k )
{
    if ( k < 4 )
        throw InputError( "semi-online instance needs k >= 4, got " + std::to_string( k ) );
    const int n = 2 * k;
    ElectionBuilder b( n, n, n );
    for ( int t = 0; t < n; ++t ) {
        for ( int i = 0; i < k; ++i )
            b.set( i, t, { t < k ? i : n - 1 } );
        for ( int j = 0; j < k; ++j )
            b.set( k + j, t, { t < k ? k + j : j } );
    }
    return b.build();
}

Election gen_random( std::uint64_t seed, int voters, int candidates, int rounds, double density )
{
    if ( voters < 1 || candidates < 1 || rounds < 1 )
        throw InputError( "random election: n, m and ell must be positive" );
    if ( !( density >= 0.0 && density <= 1.0 ) )
        throw InputError( "random election: density must lie in [0, 1]" );
    std::mt19937_64 rng( seed );
    ElectionBuilder b( voters, candidates, rounds );
    for ( int i = 0; i < voters; ++i )
        for ( int t = 0; t < rounds; ++t )
            for ( int p = 0; p < candidates; ++p ) {
                const double u = static_cast< double >( rng() >> 11 ) * 0x1.0p-53;
                if ( u < density )
                    b.approve( i, t, p );
            }
    return b.build();
}

} // namespace tjr
