#include "tjr/dedup.hpp"

#include <algorithm>
#include <map>

#include "tjr/bits.hpp"

namespace tjr
{

DedupResult dedup_candidates( const Election& e )
{
    const auto ell = static_cast< std::size_t >( e.rounds() );
    std::vector< std::vector< int > > representative( ell );
    std::vector< std::vector< int > > class_of( ell, std::vector< int >( static_cast< std::size_t >( e.candidates() ) ) );

    int width = 1;
    for ( int t = 0; t < e.rounds(); ++t ) {
        std::map< std::vector< std::uint64_t >, int > seen;
        for ( int p = 0; p < e.candidates(); ++p ) {
            auto approvers = e.approver_bits( t, p );
            std::vector< std::uint64_t > key( approvers.begin(), approvers.end() );
            auto [ it, inserted ] = seen.emplace( std::move( key ), static_cast< int >( representative[ t ].size() ) );
            if ( inserted )
                representative[ static_cast< std::size_t >( t ) ].push_back( p );
            class_of[ static_cast< std::size_t >( t ) ][ static_cast< std::size_t >( p ) ] = it->second;
        }
        width = std::max( width, static_cast< int >( representative[ static_cast< std::size_t >( t ) ].size() ) );
    }

    std::vector< std::vector< std::vector< int > > > sets(
        static_cast< std::size_t >( e.voters() ), std::vector< std::vector< int > >( ell ) );
    for ( int t = 0; t < e.rounds(); ++t ) {
        const auto& reps = representative[ static_cast< std::size_t >( t ) ];
        for ( int c = 0; c < static_cast< int >( reps.size() ); ++c )
            bits::for_each( e.approver_bits( t, reps[ static_cast< std::size_t >( c ) ] ), [ & ]( int i ) {
                sets[ static_cast< std::size_t >( i ) ][ static_cast< std::size_t >( t ) ].push_back( c );
            } );
    }

    return DedupResult{ Election( e.voters(), width, e.rounds(), sets ), std::move( representative ),
                        std::move( class_of ) };
}

Outcome DedupResult::lift( const Outcome& reduced_outcome ) const
{
    reduced_outcome.validate_for( reduced );
    std::vector< int > choices( static_cast< std::size_t >( reduced.rounds() ) );
    for ( int t = 0; t < reduced.rounds(); ++t ) {
        const auto& reps = representative[ static_cast< std::size_t >( t ) ];
        int c = reduced_outcome[ t ];
        if ( c >= static_cast< int >( reps.size() ) ) {
            c = 0;
            for ( int k = 0; k < static_cast< int >( reps.size() ); ++k )
                if ( !bits::any( reduced.approver_bits( t, k ) ) )
                    c = k;
        }
        choices[ static_cast< std::size_t >( t ) ] = reps[ static_cast< std::size_t >( c ) ];
    }
    return Outcome( std::move( choices ) );
}

} // namespace tjr
