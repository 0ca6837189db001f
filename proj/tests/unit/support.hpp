#pragma once

// Independent oracles for the unit tests. Everything here works on plain
// nested vectors and recomputes quantities straight from the definitions,
// without touching the library's bitsets.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "tjr/election.hpp"

namespace tjr::test
{

using Sets = std::vector< std::vector< std::vector< int > > >; // [voter][round] -> candidates

struct Raw
{
    int n = 0;
    int m = 0;
    int ell = 0;
    Sets sets;

    [[nodiscard]] Election election() const { return Election( n, m, ell, sets ); }

    [[nodiscard]] bool approves( int i, int t, int p ) const
    {
        const auto& s = sets[ static_cast< std::size_t >( i ) ][ static_cast< std::size_t >( t ) ];
        return std::find( s.begin(), s.end(), p ) != s.end();
    }
};

inline Raw random_raw( std::mt19937& rng, int max_n, int max_m, int max_ell, bool monotonic = false )
{
    Raw r;
    r.n = std::uniform_int_distribution<>( 1, max_n )( rng );
    r.m = std::uniform_int_distribution<>( 1, max_m )( rng );
    r.ell = std::uniform_int_distribution<>( 1, max_ell )( rng );
    std::uniform_int_distribution<> coin( 0, 2 );
    r.sets.assign( static_cast< std::size_t >( r.n ), {} );
    for ( int i = 0; i < r.n; ++i ) {
        std::set< int > carried;
        for ( int t = 0; t < r.ell; ++t ) {
            std::set< int > s = monotonic ? carried : std::set< int >{};
            for ( int p = 0; p < r.m; ++p )
                if ( coin( rng ) == 0 )
                    s.insert( p );
            carried = s;
            r.sets[ static_cast< std::size_t >( i ) ].emplace_back( s.begin(), s.end() );
        }
    }
    return r;
}

inline std::vector< int > random_outcome( std::mt19937& rng, const Raw& r )
{
    std::vector< int > o;
    for ( int t = 0; t < r.ell; ++t )
        o.push_back( std::uniform_int_distribution<>( 0, r.m - 1 )( rng ) );
    return o;
}

inline int naive_sat( const Raw& r, const std::vector< int >& o, int i )
{
    int s = 0;
    for ( int t = 0; t < r.ell; ++t )
        if ( r.approves( i, t, o[ static_cast< std::size_t >( t ) ] ) )
            ++s;
    return s;
}

inline std::vector< int > members_of( std::uint64_t mask )
{
    std::vector< int > out;
    for ( int i = 0; i < 64; ++i )
        if ( mask >> i & 1U )
            out.push_back( i );
    return out;
}

inline int naive_coverage( const Raw& r, const std::vector< int >& o, const std::vector< int >& group )
{
    int c = 0;
    for ( int t = 0; t < r.ell; ++t )
        for ( int i : group )
            if ( r.approves( i, t, o[ static_cast< std::size_t >( t ) ] ) ) {
                ++c;
                break;
            }
    return c;
}

inline int naive_beta( const Raw& r, const std::vector< int >& group )
{
    int b = 0;
    for ( int t = 0; t < r.ell; ++t )
        for ( int p = 0; p < r.m; ++p )
            if ( std::all_of( group.begin(), group.end(), [ & ]( int i ) { return r.approves( i, t, p ); } ) ) {
                ++b;
                break;
            }
    return b;
}

inline int naive_alpha( const Raw& r, const std::vector< int >& group )
{
    // floor via repeated subtraction, to stay clear of demand_of
    int num = naive_beta( r, group ) * static_cast< int >( group.size() );
    int q = 0;
    while ( num >= r.n ) {
        num -= r.n;
        ++q;
    }
    return q;
}

// Definition-level check of one axiom over every nonempty group.
inline bool naive_holds( const Raw& r, const std::vector< int >& o, AxiomSpec spec )
{
    for ( std::uint64_t mask = 1; mask < ( std::uint64_t{ 1 } << r.n ); ++mask ) {
        const auto g = members_of( mask );
        const int beta = naive_beta( r, g );
        if ( spec.strength == Strength::weak && beta != r.ell )
            continue;
        const int alpha = naive_alpha( r, g );
        if ( alpha == 0 )
            continue;
        int best = 0;
        for ( int i : g )
            best = std::max( best, naive_sat( r, o, i ) );
        switch ( spec.axiom ) {
        case Axiom::jr:
            if ( best == 0 )
                return false;
            break;
        case Axiom::pjr:
            if ( naive_coverage( r, o, g ) < alpha )
                return false;
            break;
        case Axiom::ejr:
            if ( best < alpha )
                return false;
            break;
        }
    }
    return true;
}

// Largest welfare over all EJR outcomes, by trying every outcome.
inline int naive_best_ejr_welfare( const Raw& r )
{
    std::vector< int > o( static_cast< std::size_t >( r.ell ), 0 );
    int best = -1;
    while ( true ) {
        if ( naive_holds( r, o, { Axiom::ejr, Strength::strong } ) ) {
            int w = 0;
            for ( int i = 0; i < r.n; ++i )
                w += naive_sat( r, o, i );
            best = std::max( best, w );
        }
        int t = 0;
        while ( t < r.ell && ++o[ static_cast< std::size_t >( t ) ] == r.m )
            o[ static_cast< std::size_t >( t++ ) ] = 0;
        if ( t == r.ell )
            break;
    }
    return best;
}

} // namespace tjr::test
