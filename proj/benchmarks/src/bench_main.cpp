#include <benchmark/benchmark.h>

#include <random>

#include "tjr/ejr_ilp.hpp"
#include "tjr/generators.hpp"
#include "tjr/rules.hpp"
#include "tjr/verify.hpp"

using namespace tjr;

namespace
{

constexpr AxiomSpec ejr{ Axiom::ejr, Strength::strong };

// Approval sets only grow from round to round.
Election monotonic_election( int n, int m, int ell, std::uint64_t seed )
{
    std::mt19937_64 rng( seed );
    std::bernoulli_distribution add( 0.15 );
    std::vector< std::vector< std::vector< int > > > sets( static_cast< std::size_t >( n ) );
    for ( auto& voter : sets ) {
        std::vector< bool > have( static_cast< std::size_t >( m ) );
        for ( int t = 0; t < ell; ++t ) {
            std::vector< int > s;
            for ( int p = 0; p < m; ++p ) {
                if ( add( rng ) )
                    have[ static_cast< std::size_t >( p ) ] = true;
                if ( have[ static_cast< std::size_t >( p ) ] )
                    s.push_back( p );
            }
            voter.push_back( std::move( s ) );
        }
    }
    return Election( n, m, ell, std::move( sets ) );
}

void BM_VerifyBruteforce( benchmark::State& state )
{
    const int n = static_cast< int >( state.range( 0 ) );
    const Election e = gen_random( 7, n, 4, 6, 0.4 );
    const Outcome o = gcr( e ).outcome;
    for ( auto _ : state )
        benchmark::DoNotOptimize( verify_bruteforce( e, o, ejr ) );
}
BENCHMARK( BM_VerifyBruteforce )->DenseRange( 8, 16, 4 );

void BM_VerifyEnumerative( benchmark::State& state )
{
    const int ell = static_cast< int >( state.range( 0 ) );
    const Election e = gen_random( 8, 40, 3, ell, 0.5 );
    const Outcome o( std::vector< int >( static_cast< std::size_t >( ell ), 0 ) );
    for ( auto _ : state )
        benchmark::DoNotOptimize( verify_enumerative( e, o, ejr ) );
}
BENCHMARK( BM_VerifyEnumerative )->DenseRange( 2, 6, 2 );

void BM_VerifyMonotonic( benchmark::State& state )
{
    const int n = static_cast< int >( state.range( 0 ) );
    const Election e = monotonic_election( n, 5, 10, 9 );
    const Outcome o( std::vector< int >( 10, 0 ) );
    for ( auto _ : state )
        benchmark::DoNotOptimize( verify_monotonic( e, o, ejr ) );
}
BENCHMARK( BM_VerifyMonotonic )->RangeMultiplier( 4 )->Range( 16, 1024 );

void BM_Gcr( benchmark::State& state )
{
    const int n = static_cast< int >( state.range( 0 ) );
    const Election e = gen_random( 10, n, 4, 8, 0.4 );
    for ( auto _ : state )
        benchmark::DoNotOptimize( gcr( e ) );
}
BENCHMARK( BM_Gcr )->DenseRange( 6, 14, 4 );

void BM_GcrMonotonic( benchmark::State& state )
{
    const int n = static_cast< int >( state.range( 0 ) );
    const Election e = monotonic_election( n, 5, 10, 11 );
    for ( auto _ : state )
        benchmark::DoNotOptimize( gcr_monotonic( e ) );
}
BENCHMARK( BM_GcrMonotonic )->RangeMultiplier( 4 )->Range( 16, 256 );

void BM_SolveEjrIlp( benchmark::State& state )
{
    const int n = static_cast< int >( state.range( 0 ) );
    const Election e = gen_random( 12, n, 3, 4, 0.5 );
    EjrModelOptions opts;
    opts.max_welfare = true;
    for ( auto _ : state )
        benchmark::DoNotOptimize( solve_ejr( e, opts ) );
}
BENCHMARK( BM_SolveEjrIlp )->DenseRange( 3, 6, 1 );

} // namespace

BENCHMARK_MAIN();
