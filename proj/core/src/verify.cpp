#include "tjr/verify.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <unordered_set>

#include "tjr/bits.hpp"
#include "tjr/errors.hpp"

namespace tjr
{

std::string_view to_string( Method method )
{
    switch ( method ) {
    case Method::bruteforce:
        return "bruteforce";
    case Method::enumerative:
        return "enumerative";
    case Method::monotonic:
        return "monotonic";
    case Method::two_candidate_wjr:
        return "two-candidate-wjr";
    case Method::two_candidate_jr_nonempty:
        return "two-candidate-jr-nonempty";
    }
    return "?";
}

SortedGroupFamily::SortedGroupFamily( std::vector< int > base, std::span< const int > satisfaction )
    : _order{ std::move( base ) }
{
    std::sort( _order.begin(), _order.end(), [ & ]( int a, int b ) {
        auto sa = satisfaction[ static_cast< std::size_t >( a ) ];
        auto sb = satisfaction[ static_cast< std::size_t >( b ) ];
        return sa != sb ? sa < sb : a < b;
    } );
}

VoterGroup SortedGroupFamily::prefix( int r ) const
{
    return VoterGroup( { _order.begin(), _order.begin() + r } );
}

namespace
{

bool violates( Axiom axiom, int alpha, int max_sat, int cov )
{
    switch ( axiom ) {
    case Axiom::jr:
        return alpha >= 1 && max_sat == 0;
    case Axiom::pjr:
        return cov < alpha;
    case Axiom::ejr:
        return max_sat < alpha;
    }
    return false;
}

int observed_of( Axiom axiom, int max_sat, int cov )
{
    return axiom == Axiom::pjr ? cov : max_sat;
}

// Walks the prefixes of a voter order, maintaining the per-round common
// approvals, coverage and max satisfaction incrementally.
class PrefixScanner
{
public:
    PrefixScanner( const Election& e, const Outcome& o, std::span< const int > sat, AxiomSpec spec )
        : _e{ e }, _o{ o }, _sat{ sat }, _spec{ spec },
          _common( static_cast< std::size_t >( e.rounds() ) * static_cast< std::size_t >( e.candidate_words() ) ),
          _alive( static_cast< std::size_t >( e.rounds() ) ), _covered( static_cast< std::size_t >( e.rounds() ) )
    {
    }

    std::optional< Witness > scan( std::span< const int > order, std::uint64_t& examined )
    {
        const int ell = _e.rounds();
        const auto cw = static_cast< std::size_t >( _e.candidate_words() );
        int beta = ell;
        int cov = 0;
        int max_sat = 0;
        std::fill( _alive.begin(), _alive.end(), 1 );
        std::fill( _covered.begin(), _covered.end(), 0 );

        for ( std::size_t r = 0; r < order.size(); ++r ) {
            const int v = order[ r ];
            for ( int t = 0; t < ell; ++t ) {
                if ( !_alive[ static_cast< std::size_t >( t ) ] )
                    continue;
                std::span< std::uint64_t > common( _common.data() + static_cast< std::size_t >( t ) * cw, cw );
                auto mine = _e.approval_bits( v, t );
                if ( r == 0 )
                    std::copy( mine.begin(), mine.end(), common.begin() );
                else
                    bits::and_into( common, mine );
                if ( !bits::any( common ) ) {
                    _alive[ static_cast< std::size_t >( t ) ] = 0;
                    --beta;
                }
            }
            for ( int t = 0; t < ell; ++t )
                if ( !_covered[ static_cast< std::size_t >( t ) ] && _e.approves( v, t, _o[ t ] ) ) {
                    _covered[ static_cast< std::size_t >( t ) ] = 1;
                    ++cov;
                }
            max_sat = std::max( max_sat, _sat[ static_cast< std::size_t >( v ) ] );

            // beta only shrinks along the prefixes
            if ( _spec.strength == Strength::weak && beta < ell )
                return std::nullopt;
            ++examined;
            const int size = static_cast< int >( r + 1 );
            const int alpha = demand_of( beta, size, _e.voters() );
            if ( violates( _spec.axiom, alpha, max_sat, cov ) )
                return Witness{ VoterGroup( { order.begin(), order.begin() + static_cast< std::ptrdiff_t >( size ) } ),
                                beta, alpha, observed_of( _spec.axiom, max_sat, cov ) };
        }
        return std::nullopt;
    }

private:
    const Election& _e;
    const Outcome& _o;
    std::span< const int > _sat;
    AxiomSpec _spec;
    std::vector< std::uint64_t > _common;
    std::vector< char > _alive;
    std::vector< char > _covered;
};

// PJR is not prefix-closed: the least satisfied voters need not minimise
// coverage. Instead, for each set C of rounds, take every base voter whose
// satisfied rounds lie inside C. Any violating group inside the base is
// contained in such a set with the same agreement and coverage <= |C|, so this
// is exact. Only closed C (C equals the union of its members' rounds) are
// visited since the others repeat a group.
std::optional< Witness > scan_pjr( const Election& e, std::span< const int > base,
                                   std::span< const std::uint64_t > sat_rounds, Strength strength,
                                   std::uint64_t& examined )
{
    const int ell = e.rounds();
    const auto cw = static_cast< std::size_t >( e.candidate_words() );
    std::vector< std::uint64_t > common( cw );
    std::vector< int > members;
    const std::uint64_t subsets = std::uint64_t{ 1 } << ell;
    for ( std::uint64_t covered = 0; covered < subsets; ++covered ) {
        members.clear();
        std::uint64_t closure = 0;
        for ( int i : base ) {
            const auto rounds = sat_rounds[ static_cast< std::size_t >( i ) ];
            if ( ( rounds & ~covered ) == 0 ) {
                members.push_back( i );
                closure |= rounds;
            }
        }
        if ( members.empty() || closure != covered )
            continue;
        ++examined;
        int beta = 0;
        for ( int t = 0; t < ell; ++t ) {
            auto first = e.approval_bits( members.front(), t );
            std::copy( first.begin(), first.end(), common.begin() );
            for ( int i : members )
                bits::and_into( common, e.approval_bits( i, t ) );
            if ( bits::any( common ) )
                ++beta;
        }
        if ( strength == Strength::weak && beta != ell )
            continue;
        const int alpha = demand_of( beta, static_cast< int >( members.size() ), e.voters() );
        const int cov = std::popcount( covered );
        if ( cov < alpha )
            return Witness{ VoterGroup( members ), beta, alpha, cov };
    }
    return std::nullopt;
}

// Rounds in which each voter is satisfied, as a bitmask.
std::vector< std::uint64_t > satisfied_rounds( const Election& e, const Outcome& o )
{
    std::vector< std::uint64_t > rounds( static_cast< std::size_t >( e.voters() ), 0 );
    for ( int t = 0; t < e.rounds(); ++t )
        bits::for_each( e.approver_bits( t, o[ t ] ),
                        [ & ]( int i ) { rounds[ static_cast< std::size_t >( i ) ] |= std::uint64_t{ 1 } << t; } );
    return rounds;
}

void check_pjr_rounds( const Election& e, AxiomSpec spec, const char* who )
{
    if ( spec.axiom == Axiom::pjr && e.rounds() > max_pjr_scan_rounds )
        throw CapacityError( std::string( who ) + ": PJR scan needs ell <= " + std::to_string( max_pjr_scan_rounds )
                             + ", got " + std::to_string( e.rounds() ) );
}

struct WordsHash
{
    std::size_t operator()( const std::vector< std::uint64_t >& words ) const noexcept
    {
        std::size_t h = 0x9e3779b97f4a7c15ULL;
        for ( auto w : words )
            h = ( h ^ std::hash< std::uint64_t >{}( w ) ) * 0x100000001b3ULL;
        return h;
    }
};

using BaseSet = std::unordered_set< std::vector< std::uint64_t >, WordsHash >;

struct BaseChecker
{
    const Election& e;
    AxiomSpec spec;
    PrefixScanner scanner;
    std::span< const int > sat;
    std::vector< std::uint64_t > sat_rounds;
    BaseSet seen;
    std::uint64_t examined = 0;

    BaseChecker( const Election& election, const Outcome& o, std::span< const int > satisfaction, AxiomSpec s )
        : e{ election }, spec{ s }, scanner( election, o, satisfaction, s ), sat{ satisfaction }
    {
        if ( spec.axiom == Axiom::pjr )
            sat_rounds = satisfied_rounds( election, o );
    }

    // Checks one base set (as voter bits) unless an identical base was already checked.
    std::optional< Witness > operator()( std::span< const std::uint64_t > base )
    {
        if ( !bits::any( base ) )
            return std::nullopt;
        if ( !seen.emplace( base.begin(), base.end() ).second )
            return std::nullopt;
        if ( spec.axiom == Axiom::pjr )
            return scan_pjr( e, bits::to_indices( base ), sat_rounds, spec.strength, examined );
        SortedGroupFamily family( bits::to_indices( base ), sat );
        return scanner.scan( family.order(), examined );
    }
};

VerifyReport make_report( AxiomSpec spec, Method method, std::optional< Witness > witness, std::uint64_t examined )
{
    VerifyReport report;
    report.spec = spec;
    report.method = method;
    report.holds = !witness.has_value();
    report.witness = std::move( witness );
    report.groups_examined = examined;
    return report;
}

std::uint64_t saturating_mul( std::uint64_t a, std::uint64_t b )
{
    if ( a != 0 && b > std::numeric_limits< std::uint64_t >::max() / a )
        return std::numeric_limits< std::uint64_t >::max();
    return a * b;
}

} // namespace

bool is_valid_witness( const Election& e, const Outcome& o, AxiomSpec spec, const Witness& w )
{
    const int beta = agreement( e, w.group );
    const int alpha = demand( e, w.group );
    int max_sat = 0;
    for ( int i : w.group.members() )
        max_sat = std::max( max_sat, satisfaction( e, o, i ) );
    const int cov = coverage( e, o, w.group );
    if ( beta != w.beta || alpha != w.alpha || observed_of( spec.axiom, max_sat, cov ) != w.observed )
        return false;
    if ( spec.strength == Strength::weak && beta != e.rounds() )
        return false;
    if ( spec.axiom == Axiom::jr && ( alpha < 1 || w.observed != 0 ) )
        return false;
    return w.observed < alpha;
}

VerifyReport verify_bruteforce( const Election& e, const Outcome& o, AxiomSpec spec, const VerifyConfig& config )
{
    o.validate_for( e );
    const int n = e.voters();
    const int ell = e.rounds();
    if ( n > config.max_bruteforce_voters || n > 63 )
        throw CapacityError( "brute-force verification: n=" + std::to_string( n ) + " exceeds the voter cap "
                             + std::to_string( std::min( config.max_bruteforce_voters, 63 ) ) );

    // Per round, the inclusion-maximal approver sets: a group agrees in round t
    // iff it is contained in one of them.
    std::vector< std::vector< std::uint64_t > > maximal( static_cast< std::size_t >( ell ) );
    for ( int t = 0; t < ell; ++t ) {
        std::vector< std::uint64_t > masks;
        for ( int p = 0; p < e.candidates(); ++p )
            if ( auto mask = e.approver_mask( t, p ); mask != 0 )
                masks.push_back( mask );
        std::sort( masks.begin(), masks.end() );
        masks.erase( std::unique( masks.begin(), masks.end() ), masks.end() );
        for ( auto mask : masks ) {
            bool dominated = std::any_of( masks.begin(), masks.end(), [ & ]( std::uint64_t other ) {
                return other != mask && ( mask & ~other ) == 0;
            } );
            if ( !dominated )
                maximal[ static_cast< std::size_t >( t ) ].push_back( mask );
        }
    }

    const auto sat = satisfactions( e, o );
    std::vector< std::uint64_t > at_least( static_cast< std::size_t >( ell ) + 1, 0 );
    for ( int i = 0; i < n; ++i )
        for ( int a = 0; a <= sat[ static_cast< std::size_t >( i ) ]; ++a )
            at_least[ static_cast< std::size_t >( a ) ] |= std::uint64_t{ 1 } << i;
    std::vector< std::uint64_t > chosen_approvers( static_cast< std::size_t >( ell ) );
    for ( int t = 0; t < ell; ++t )
        chosen_approvers[ static_cast< std::size_t >( t ) ] = e.approver_mask( t, o[ t ] );

    const std::uint64_t full = ( std::uint64_t{ 1 } << n ) - 1;
    std::uint64_t examined = 0;
    for ( std::uint64_t mask = 1; mask <= full; ++mask ) {
        ++examined;
        int beta = 0;
        for ( int t = 0; t < ell; ++t ) {
            const auto& maxes = maximal[ static_cast< std::size_t >( t ) ];
            bool agree = std::any_of( maxes.begin(), maxes.end(),
                                      [ mask ]( std::uint64_t m ) { return ( mask & ~m ) == 0; } );
            if ( agree )
                ++beta;
            else if ( spec.strength == Strength::weak )
                break;
        }
        if ( spec.strength == Strength::weak && beta != ell )
            continue;
        const int size = std::popcount( mask );
        const int alpha = demand_of( beta, size, n );
        if ( alpha == 0 )
            continue;

        bool violated = false;
        int cov = 0;
        switch ( spec.axiom ) {
        case Axiom::jr:
            violated = ( mask & at_least[ 1 ] ) == 0;
            break;
        case Axiom::ejr:
            violated = ( mask & at_least[ static_cast< std::size_t >( alpha ) ] ) == 0;
            break;
        case Axiom::pjr:
            for ( auto c : chosen_approvers )
                if ( mask & c )
                    ++cov;
            violated = cov < alpha;
            break;
        }
        if ( !violated )
            continue;

        int max_sat = 0;
        for ( int i = 0; i < n; ++i )
            if ( mask >> i & 1U )
                max_sat = std::max( max_sat, sat[ static_cast< std::size_t >( i ) ] );
        return make_report( spec, Method::bruteforce,
                            Witness{ VoterGroup::from_mask( mask ), beta, alpha, observed_of( spec.axiom, max_sat, cov ) },
                            examined );
    }
    return make_report( spec, Method::bruteforce, std::nullopt, examined );
}

std::uint64_t enumeration_count( const Election& e, Strength strength )
{
    std::uint64_t count = 1;
    for ( int t = 0; t < e.rounds(); ++t ) {
        auto support = static_cast< std::uint64_t >( e.round_support( t ) );
        count = saturating_mul( count, strength == Strength::weak ? support : support + 1 );
    }
    return count;
}

VerifyReport verify_enumerative( const Election& e, const Outcome& o, AxiomSpec spec, const VerifyConfig& config )
{
    o.validate_for( e );
    const int ell = e.rounds();
    const auto count = enumeration_count( e, spec.strength );
    if ( count > config.max_enumeration || ( spec.strength == Strength::strong && ell > 62 ) )
        throw CapacityError( "enumerative verification: " + std::to_string( count )
                             + " (T, o') pairs exceed the budget " + std::to_string( config.max_enumeration ) );
    check_pjr_rounds( e, spec, "enumerative verification" );

    std::vector< std::vector< int > > supported( static_cast< std::size_t >( ell ) );
    for ( int t = 0; t < ell; ++t )
        for ( int p = 0; p < e.candidates(); ++p )
            if ( bits::any( e.approver_bits( t, p ) ) )
                supported[ static_cast< std::size_t >( t ) ].push_back( p );

    const auto sat = satisfactions( e, o );
    BaseChecker check( e, o, sat, spec );
    const auto vw = static_cast< std::size_t >( e.voter_words() );
    std::vector< std::uint64_t > all_voters( vw, 0 );
    for ( int i = 0; i < e.voters(); ++i )
        bits::set( all_voters, i );
    std::vector< std::uint64_t > base( vw );

    auto visit_rounds = [ & ]( const std::vector< int >& rounds ) -> std::optional< Witness > {
        for ( int t : rounds )
            if ( supported[ static_cast< std::size_t >( t ) ].empty() )
                return std::nullopt;
        std::vector< std::size_t > choice( rounds.size(), 0 );
        while ( true ) {
            base = all_voters;
            for ( std::size_t k = 0; k < rounds.size(); ++k ) {
                const int t = rounds[ k ];
                bits::and_into( base, e.approver_bits( t, supported[ static_cast< std::size_t >( t ) ][ choice[ k ] ] ) );
            }
            if ( auto w = check( base ) )
                return w;
            // odometer, last round fastest
            std::size_t k = rounds.size();
            while ( k > 0 ) {
                --k;
                if ( ++choice[ k ] < supported[ static_cast< std::size_t >( rounds[ k ] ) ].size() )
                    break;
                choice[ k ] = 0;
                if ( k == 0 )
                    return std::nullopt;
            }
            if ( rounds.empty() )
                return std::nullopt;
        }
    };

    if ( spec.strength == Strength::weak ) {
        std::vector< int > rounds( static_cast< std::size_t >( ell ) );
        std::iota( rounds.begin(), rounds.end(), 0 );
        auto w = visit_rounds( rounds );
        return make_report( spec, Method::enumerative, std::move( w ), check.examined );
    }
    const std::uint64_t subsets = std::uint64_t{ 1 } << ell;
    for ( std::uint64_t tmask = 0; tmask < subsets; ++tmask ) {
        std::vector< int > rounds;
        for ( int t = 0; t < ell; ++t )
            if ( tmask >> t & 1U )
                rounds.push_back( t );
        if ( auto w = visit_rounds( rounds ) )
            return make_report( spec, Method::enumerative, std::move( w ), check.examined );
    }
    return make_report( spec, Method::enumerative, std::nullopt, check.examined );
}

VerifyReport verify_monotonic( const Election& e, const Outcome& o, AxiomSpec spec )
{
    o.validate_for( e );
    if ( !is_monotonic( e ) )
        throw PreconditionError( "monotonic verifier: election is not monotonic" );
    check_pjr_rounds( e, spec, "monotonic verifier" );

    const auto sat = satisfactions( e, o );
    BaseChecker check( e, o, sat, spec );
    const int last_round = spec.strength == Strength::weak ? 1 : e.rounds();
    for ( int p = 0; p < e.candidates(); ++p )
        for ( int t = 0; t < last_round; ++t )
            if ( auto w = check( e.approver_bits( t, p ) ) )
                return make_report( spec, Method::monotonic, std::move( w ), check.examined );
    return make_report( spec, Method::monotonic, std::nullopt, check.examined );
}

bool two_candidate_rounds( const Election& e, const Outcome& o )
{
    o.validate_for( e );
    for ( int t = 0; t < e.rounds(); ++t ) {
        int involved = 0;
        for ( int p = 0; p < e.candidates(); ++p )
            if ( p == o[ t ] || bits::any( e.approver_bits( t, p ) ) )
                ++involved;
        if ( involved > 2 )
            return false;
    }
    return true;
}

namespace
{

VerifyReport grumpy_report( const Election& e, const Outcome& o, AxiomSpec spec, Method method )
{
    std::vector< int > grumpy;
    for ( int i = 0; i < e.voters(); ++i ) {
        bool is_grumpy = true;
        for ( int t = 0; t < e.rounds() && is_grumpy; ++t )
            is_grumpy = e.approval_count( i, t ) == 1 && !e.approves( i, t, o[ t ] );
        if ( is_grumpy )
            grumpy.push_back( i );
    }
    const int alpha = demand_of( e.rounds(), static_cast< int >( grumpy.size() ), e.voters() );
    if ( alpha == 0 )
        return make_report( spec, method, std::nullopt, 1 );
    VoterGroup group( std::move( grumpy ) );
    const int beta = agreement( e, group );
    return make_report( spec, method, Witness{ group, beta, demand_of( beta, group.size(), e.voters() ), 0 }, 1 );
}

} // namespace

VerifyReport verify_two_candidates_wjr( const Election& e, const Outcome& o )
{
    if ( !two_candidate_rounds( e, o ) )
        throw PreconditionError( "two-candidate w-JR verifier: some round involves more than two candidates" );
    return grumpy_report( e, o, { Axiom::jr, Strength::weak }, Method::two_candidate_wjr );
}

VerifyReport verify_two_candidates_jr_nonempty( const Election& e, const Outcome& o )
{
    if ( !two_candidate_rounds( e, o ) )
        throw PreconditionError( "two-candidate JR verifier: some round involves more than two candidates" );
    if ( !all_nonempty( e ) )
        throw PreconditionError( "two-candidate JR verifier: some approval set is empty" );
    return grumpy_report( e, o, { Axiom::jr, Strength::strong }, Method::two_candidate_jr_nonempty );
}

VerifyReport route( const Election& e, const Outcome& o, AxiomSpec spec, const VerifyConfig& config )
{
    o.validate_for( e );
    const bool scan_ok = spec.axiom != Axiom::pjr || e.rounds() <= max_pjr_scan_rounds;
    if ( scan_ok && is_monotonic( e ) )
        return verify_monotonic( e, o, spec );
    if ( spec.axiom == Axiom::jr && two_candidate_rounds( e, o ) ) {
        if ( spec.strength == Strength::weak )
            return verify_two_candidates_wjr( e, o );
        if ( all_nonempty( e ) )
            return verify_two_candidates_jr_nonempty( e, o );
    }
    const auto count = enumeration_count( e, spec.strength );
    const bool enumerable = scan_ok && count <= config.max_enumeration
                            && ( spec.strength == Strength::weak || e.rounds() <= 62 );
    if ( enumerable )
        return verify_enumerative( e, o, spec, config );
    if ( e.voters() <= config.max_bruteforce_voters && e.voters() <= 63 )
        return verify_bruteforce( e, o, spec, config );
    throw CapacityError( "no applicable verifier: n=" + std::to_string( e.voters() ) + " exceeds the brute-force cap "
                         + std::to_string( config.max_bruteforce_voters ) + " and the enumeration count "
                         + ( count == std::numeric_limits< std::uint64_t >::max() ? std::string( ">= 2^64" )
                                                                                 : std::to_string( count ) )
                         + " exceeds the budget " + std::to_string( config.max_enumeration ) );
}

} // namespace tjr
