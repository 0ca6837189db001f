#include "tjr/rules.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "tjr/bits.hpp"
#include "tjr/errors.hpp"
#include "tjr/generators.hpp"
#include "tjr/verify.hpp"

namespace tjr
{

namespace
{

// a precedes b in increasing-bitmask order over sorted member lists.
bool mask_order_less( const std::vector< int >& a, const std::vector< int >& b )
{
    auto ia = a.rbegin();
    auto ib = b.rbegin();
    for ( ; ia != a.rend() && ib != b.rend(); ++ia, ++ib )
        if ( *ia != *ib )
            return *ia < *ib;
    return a.size() < b.size();
}

struct Candidate
{
    std::vector< int > members;
    int beta = 0;
    int alpha = 0;
};

// (alpha desc, beta desc, bitmask asc)
bool better( const Candidate& a, const Candidate& b )
{
    if ( a.alpha != b.alpha )
        return a.alpha > b.alpha;
    if ( a.beta != b.beta )
        return a.beta > b.beta;
    return mask_order_less( a.members, b.members );
}

// Stage two, shared by both variants.
RuleResult assign_rounds( const Election& e, std::vector< CohesiveGroup > selected )
{
    std::stable_sort( selected.begin(), selected.end(),
                      []( const CohesiveGroup& a, const CohesiveGroup& b ) { return a.beta < b.beta; } );

    const auto cw = static_cast< std::size_t >( e.candidate_words() );
    std::vector< int > choices( static_cast< std::size_t >( e.rounds() ), 0 );
    std::vector< char > taken( static_cast< std::size_t >( e.rounds() ), 0 );
    std::vector< std::uint64_t > common( cw );

    for ( auto& cg : selected ) {
        const auto& members = cg.group.members();
        for ( int t = 0; t < e.rounds() && static_cast< int >( cg.rounds.size() ) < cg.alpha; ++t ) {
            if ( taken[ static_cast< std::size_t >( t ) ] )
                continue;
            auto first = e.approval_bits( members.front(), t );
            std::copy( first.begin(), first.end(), common.begin() );
            for ( int i : members )
                bits::and_into( common, e.approval_bits( i, t ) );
            if ( !bits::any( common ) )
                continue;
            taken[ static_cast< std::size_t >( t ) ] = 1;
            choices[ static_cast< std::size_t >( t ) ] = bits::to_indices( common ).front();
            cg.rounds.push_back( t );
        }
        if ( static_cast< int >( cg.rounds.size() ) < cg.alpha )
            throw std::logic_error( "gcr: a reserved group found fewer free agreement rounds than its demand" );
    }
    return RuleResult{ Outcome( std::move( choices ) ), CohesiveFamily{ std::move( selected ) } };
}

} // namespace

RuleResult gcr( const Election& e, const RuleConfig& config )
{
    const int n = e.voters();
    if ( n > config.max_voters || n > 63 )
        throw CapacityError( "gcr: n=" + std::to_string( n ) + " exceeds the voter cap "
                             + std::to_string( std::min( config.max_voters, 63 ) ) );

    std::vector< std::vector< std::uint64_t > > approver_masks( static_cast< std::size_t >( e.rounds() ) );
    for ( int t = 0; t < e.rounds(); ++t )
        for ( int p = 0; p < e.candidates(); ++p )
            if ( auto mask = e.approver_mask( t, p ); mask != 0 )
                approver_masks[ static_cast< std::size_t >( t ) ].push_back( mask );

    auto beta_of = [ & ]( std::uint64_t group ) {
        int beta = 0;
        for ( const auto& masks : approver_masks )
            if ( std::any_of( masks.begin(), masks.end(), [ group ]( std::uint64_t m ) { return ( group & ~m ) == 0; } ) )
                ++beta;
        return beta;
    };

    std::vector< CohesiveGroup > selected;
    std::uint64_t free_voters = ( std::uint64_t{ 1 } << n ) - 1;
    while ( free_voters != 0 ) {
        bool found = false;
        std::uint64_t best_mask = 0;
        int best_alpha = -1;
        int best_beta = -1;
        // every nonempty subset of the free voters
        for ( std::uint64_t group = free_voters; group != 0; group = ( group - 1 ) & free_voters ) {
            const int beta = beta_of( group );
            if ( beta == 0 )
                continue;
            const int alpha = demand_of( beta, std::popcount( group ), n );
            if ( !found || alpha > best_alpha || ( alpha == best_alpha && beta > best_beta )
                 || ( alpha == best_alpha && beta == best_beta && group < best_mask ) ) {
                found = true;
                best_mask = group;
                best_alpha = alpha;
                best_beta = beta;
            }
        }
        if ( !found )
            break;
        selected.push_back( CohesiveGroup{ VoterGroup::from_mask( best_mask ), best_beta, best_alpha, {} } );
        free_voters &= ~best_mask;
    }
    return assign_rounds( e, std::move( selected ) );
}

RuleResult gcr_monotonic( const Election& e )
{
    if ( !is_monotonic( e ) )
        throw PreconditionError( "gcr-mono: election is not monotonic" );

    const int n = e.voters();
    std::vector< char > reserved( static_cast< std::size_t >( n ), 0 );
    std::vector< CohesiveGroup > selected;
    while ( true ) {
        std::optional< Candidate > best;
        for ( int p = 0; p < e.candidates(); ++p ) {
            for ( int t = 0; t < e.rounds(); ++t ) {
                Candidate residual;
                bits::for_each( e.approver_bits( t, p ), [ & ]( int i ) {
                    if ( !reserved[ static_cast< std::size_t >( i ) ] )
                        residual.members.push_back( i );
                } );
                if ( residual.members.empty() )
                    continue;
                residual.beta = agreement( e, VoterGroup( residual.members ) );
                residual.alpha = demand_of( residual.beta, static_cast< int >( residual.members.size() ), n );
                if ( !best || better( residual, *best ) )
                    best = std::move( residual );
            }
        }
        if ( !best )
            break;
        for ( int i : best->members )
            reserved[ static_cast< std::size_t >( i ) ] = 1;
        selected.push_back( CohesiveGroup{ VoterGroup( std::move( best->members ) ), best->beta, best->alpha, {} } );
    }
    return assign_rounds( e, std::move( selected ) );
}

Outcome run_semionline( const Election& e, const SemiOnlineRule& rule )
{
    std::vector< int > committed;
    committed.reserve( static_cast< std::size_t >( e.rounds() ) );
    for ( int t = 0; t < e.rounds(); ++t ) {
        const Election revealed = first_rounds( e, t + 1 );
        const int choice = rule( RevealedPrefix( revealed, committed, e.rounds() ) );
        if ( choice < 0 || choice >= e.candidates() )
            throw InputError( "semi-online rule chose candidate " + std::to_string( choice + 1 ) + " in round "
                              + std::to_string( t + 1 ) + ", outside 1.." + std::to_string( e.candidates() ) );
        committed.push_back( choice );
    }
    return Outcome( std::move( committed ) );
}

SemiOnlineRule constant_rule( int candidate )
{
    return [ candidate ]( const RevealedPrefix& ) { return candidate; };
}

SemiOnlineRule script_rule( Outcome script )
{
    return [ script = std::move( script ) ]( const RevealedPrefix& view ) { return script[ view.round() ]; };
}

SemiOnlineRule greedy_plurality_rule()
{
    return []( const RevealedPrefix& view ) {
        const auto& e = view.revealed();
        const int t = view.round();
        int best = 0;
        int best_count = -1;
        for ( int p = 0; p < e.candidates(); ++p ) {
            const int count = bits::count( e.approver_bits( t, p ) );
            if ( count > best_count ) {
                best = p;
                best_count = count;
            }
        }
        return best;
    };
}

SemionlineSweep semionline_sweep( int k )
{
    const Election e = gen_semionline( k );
    const int n = e.voters();
    const int m = e.candidates();
    SemionlineSweep sweep;
    sweep.used_bruteforce = k <= 6;

    std::vector< VoterGroup > restricted;
    for ( int i = k; i < n; ++i )
        restricted.emplace_back( std::vector< int >{ i } );
    {
        std::vector< int > first_half( static_cast< std::size_t >( k ) );
        for ( int i = 0; i < k; ++i )
            first_half[ static_cast< std::size_t >( i ) ] = i;
        restricted.emplace_back( std::move( first_half ) );
    }
    std::vector< int > restricted_alpha;
    for ( const auto& g : restricted )
        restricted_alpha.push_back( demand( e, g ) );

    std::vector< int > choices( static_cast< std::size_t >( n ) );
    for ( int t = 0; t < k; ++t )
        choices[ static_cast< std::size_t >( t ) ] = t;
    std::vector< int > tail( static_cast< std::size_t >( n - k ), 0 );
    bool all_fail = true;
    while ( true ) {
        std::copy( tail.begin(), tail.end(), choices.begin() + k );
        const Outcome o( choices );
        const auto sat = satisfactions( e, o );

        bool restricted_fails = false;
        for ( std::size_t g = 0; g < restricted.size() && !restricted_fails; ++g ) {
            int max_sat = 0;
            for ( int i : restricted[ g ].members() )
                max_sat = std::max( max_sat, sat[ static_cast< std::size_t >( i ) ] );
            restricted_fails = max_sat < restricted_alpha[ g ];
        }
        bool fails = restricted_fails;
        if ( sweep.used_bruteforce ) {
            fails = !verify_bruteforce( e, o, { Axiom::ejr, Strength::strong } ).holds;
            if ( restricted_fails && !fails )
                throw std::logic_error( "semi-online sweep: restricted witness not confirmed by brute force" );
        }
        ++sweep.completions;
        if ( restricted_fails )
            ++sweep.failing_restricted;
        if ( fails )
            ++sweep.failing;
        else
            all_fail = false;

        std::size_t pos = tail.size();
        while ( pos > 0 ) {
            --pos;
            if ( ++tail[ pos ] < m )
                break;
            tail[ pos ] = 0;
            if ( pos == 0 ) {
                sweep.all_fail = all_fail;
                return sweep;
            }
        }
    }
}

bool semionline_impossibility_check( int k )
{
    return semionline_sweep( k ).all_fail;
}

} // namespace tjr
