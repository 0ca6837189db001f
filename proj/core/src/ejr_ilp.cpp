#include "tjr/ejr_ilp.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "tjr/bits.hpp"
#include "tjr/errors.hpp"

namespace tjr
{

namespace
{

std::vector< Term > satisfaction_terms( const EjrModel& model, int voter )
{
    std::vector< Term > terms;
    for ( std::size_t tau = 0; tau < model.types.size(); ++tau )
        for ( std::size_t j = 0; j < model.types[ tau ].approvers.size(); ++j )
            if ( bits::test( model.types[ tau ].approvers[ j ], voter ) )
                terms.push_back( { model.x[ tau ][ j ], 1 } );
    return terms;
}

} // namespace

EjrModel build_model( const Election& e, const EjrModelOptions& options, int max_voters )
{
    const int n = e.voters();
    if ( n > max_voters || n > 63 )
        throw CapacityError( "ILP model: n=" + std::to_string( n ) + " exceeds the voter cap "
                             + std::to_string( std::min( max_voters, 63 ) ) );
    if ( options.floors && options.floors->size() != static_cast< std::size_t >( n ) )
        throw InputError( "ILP model: expected " + std::to_string( n ) + " floors, got "
                          + std::to_string( options.floors->size() ) );

    EjrModel model{ {}, dedup_candidates( e ), {}, {}, {}, n };
    const Election& reduced = model.dedup.reduced;

    std::map< std::vector< std::vector< std::uint64_t > >, std::size_t > type_of;
    for ( int t = 0; t < reduced.rounds(); ++t ) {
        std::vector< std::pair< std::vector< std::uint64_t >, int > > classes;
        for ( int c = 0; c < model.dedup.classes( t ); ++c ) {
            auto bits_view = reduced.approver_bits( t, c );
            classes.emplace_back( std::vector< std::uint64_t >( bits_view.begin(), bits_view.end() ), c );
        }
        std::sort( classes.begin(), classes.end() );
        std::vector< std::vector< std::uint64_t > > profile;
        std::vector< int > candidates;
        for ( auto& [ approvers, c ] : classes ) {
            profile.push_back( approvers );
            candidates.push_back( c );
        }
        auto [ it, inserted ] = type_of.emplace( profile, model.types.size() );
        if ( inserted )
            model.types.push_back( RoundType{ std::move( profile ), {}, {} } );
        auto& type = model.types[ it->second ];
        type.rounds.push_back( t );
        type.candidate.push_back( std::move( candidates ) );
    }

    auto& lp = model.lp;
    for ( std::size_t tau = 0; tau < model.types.size(); ++tau ) {
        const auto& type = model.types[ tau ];
        std::vector< int > vars;
        std::vector< Term > total;
        for ( std::size_t j = 0; j < type.approvers.size(); ++j ) {
            vars.push_back( lp.add_variable( "x_" + std::to_string( j + 1 ) + "_t" + std::to_string( tau + 1 ), 0,
                                             type.count() ) );
            total.push_back( { vars.back(), 1 } );
        }
        model.x.push_back( std::move( vars ) );
        lp.add_row( "type" + std::to_string( tau + 1 ), std::move( total ), Sense::eq, type.count() );
    }

    // A group agrees in round t iff it lies inside one class's approver set.
    std::vector< std::vector< std::uint64_t > > masks( static_cast< std::size_t >( e.rounds() ) );
    for ( int t = 0; t < reduced.rounds(); ++t )
        for ( int c = 0; c < model.dedup.classes( t ); ++c )
            if ( auto m = reduced.approver_mask( t, c ); m != 0 )
                masks[ static_cast< std::size_t >( t ) ].push_back( m );

    std::vector< std::vector< Term > > sat( static_cast< std::size_t >( n ) );
    for ( int i = 0; i < n; ++i )
        sat[ static_cast< std::size_t >( i ) ] = satisfaction_terms( model, i );

    const std::uint64_t full = ( std::uint64_t{ 1 } << n ) - 1;
    for ( std::uint64_t group = 1; group <= full; ++group ) {
        int beta = 0;
        for ( const auto& round_masks : masks )
            if ( std::any_of( round_masks.begin(), round_masks.end(),
                              [ group ]( std::uint64_t m ) { return ( group & ~m ) == 0; } ) )
                ++beta;
        const int alpha = demand_of( beta, std::popcount( group ), n );
        if ( alpha == 0 )
            continue;
        CohesiveConstraint cc{ group, alpha, {} };
        const std::string suffix = "_g" + std::to_string( group );
        std::vector< Term > cover;
        for ( int i = 0; i < n; ++i ) {
            if ( !( group >> i & 1U ) )
                continue;
            const int xi = lp.add_variable( "xi_" + std::to_string( i + 1 ) + suffix, 0, 1 );
            cc.xi.push_back( xi );
            cover.push_back( { xi, 1 } );
            auto terms = sat[ static_cast< std::size_t >( i ) ];
            terms.push_back( { xi, -alpha } );
            lp.add_row( "ejr_" + std::to_string( i + 1 ) + suffix, std::move( terms ), Sense::ge, 0 );
        }
        lp.add_row( "cover" + suffix, std::move( cover ), Sense::ge, 1 );
        model.groups.push_back( std::move( cc ) );
    }

    if ( options.floors )
        for ( int i = 0; i < n; ++i )
            if ( const int floor = ( *options.floors )[ static_cast< std::size_t >( i ) ]; floor > 0 )
                lp.add_row( "floor_" + std::to_string( i + 1 ), sat[ static_cast< std::size_t >( i ) ], Sense::ge,
                            floor );

    if ( options.max_welfare ) {
        Objective objective{ true, {} };
        for ( std::size_t tau = 0; tau < model.types.size(); ++tau )
            for ( std::size_t j = 0; j < model.types[ tau ].approvers.size(); ++j )
                if ( const int weight = bits::count( model.types[ tau ].approvers[ j ] ); weight > 0 )
                    objective.terms.push_back( { model.x[ tau ][ j ], weight } );
        lp.set_objective( std::move( objective ) );
    }
    return model;
}

std::vector< std::int64_t > model_satisfaction( const EjrModel& model, std::span< const std::int64_t > values )
{
    std::vector< std::int64_t > sat( static_cast< std::size_t >( model.voters ), 0 );
    for ( int i = 0; i < model.voters; ++i )
        for ( const auto& t : satisfaction_terms( model, i ) )
            sat[ static_cast< std::size_t >( i ) ] += values[ static_cast< std::size_t >( t.var ) ];
    return sat;
}

Outcome decode( const EjrModel& model, std::span< const std::int64_t > values )
{
    std::vector< int > reduced( static_cast< std::size_t >( model.dedup.reduced.rounds() ), 0 );
    for ( std::size_t tau = 0; tau < model.types.size(); ++tau ) {
        const auto& type = model.types[ tau ];
        std::size_t k = 0;
        for ( std::size_t j = 0; j < type.approvers.size(); ++j )
            for ( auto left = values[ static_cast< std::size_t >( model.x[ tau ][ j ] ) ]; left > 0; --left, ++k ) {
                if ( k >= type.rounds.size() )
                    throw InputError( "decode: type " + std::to_string( tau + 1 ) + " is assigned more rounds than it has" );
                reduced[ static_cast< std::size_t >( type.rounds[ k ] ) ] = type.candidate[ k ][ j ];
            }
        if ( k != type.rounds.size() )
            throw InputError( "decode: type " + std::to_string( tau + 1 ) + " is assigned fewer rounds than it has" );
    }
    return model.dedup.lift( Outcome( std::move( reduced ) ) );
}

std::optional< std::vector< std::int64_t > > encode( const EjrModel& model, const Election& e, const Outcome& o )
{
    o.validate_for( e );
    std::vector< std::int64_t > values( model.lp.variables().size(), 0 );
    for ( std::size_t tau = 0; tau < model.types.size(); ++tau ) {
        const auto& type = model.types[ tau ];
        for ( std::size_t k = 0; k < type.rounds.size(); ++k ) {
            const int t = type.rounds[ k ];
            const int c = model.dedup.class_of[ static_cast< std::size_t >( t ) ][ static_cast< std::size_t >( o[ t ] ) ];
            const auto& cands = type.candidate[ k ];
            const auto j = static_cast< std::size_t >( std::find( cands.begin(), cands.end(), c ) - cands.begin() );
            ++values[ static_cast< std::size_t >( model.x[ tau ][ j ] ) ];
        }
    }
    const auto sat = satisfactions( e, o );
    for ( const auto& g : model.groups ) {
        std::size_t slot = 0;
        bool met = false;
        for ( int i = 0; i < model.voters && !met; ++i ) {
            if ( !( g.group >> i & 1U ) )
                continue;
            if ( sat[ static_cast< std::size_t >( i ) ] >= g.alpha ) {
                values[ static_cast< std::size_t >( g.xi[ slot ] ) ] = 1;
                met = true;
            }
            ++slot;
        }
        if ( !met )
            return std::nullopt;
    }
    if ( !model.lp.is_feasible( values ) )
        return std::nullopt;
    return values;
}

IlpOutcome solve_ejr( const Election& e, const EjrModelOptions& options, const SolverConfig& config )
{
    const auto model = build_model( e, options );
    const auto result = solve_exact( model.lp, config );
    IlpOutcome out;
    out.status = result.status;
    out.nodes = result.nodes;
    if ( result.status != SolveStatus::infeasible ) {
        out.outcome = decode( model, result.values );
        out.welfare = welfare( e, *out.outcome );
    }
    return out;
}

std::int64_t welfare( const Election& e, const Outcome& o )
{
    const auto sat = satisfactions( e, o );
    return std::accumulate( sat.begin(), sat.end(), std::int64_t{ 0 } );
}

} // namespace tjr
