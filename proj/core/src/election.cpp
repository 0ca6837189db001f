#include "tjr/election.hpp"

#include <algorithm>
#include <sstream>

#include "tjr/bits.hpp"
#include "tjr/errors.hpp"

namespace tjr
{

std::string_view to_string( Axiom axiom )
{
    switch ( axiom ) {
    case Axiom::jr:
        return "jr";
    case Axiom::pjr:
        return "pjr";
    case Axiom::ejr:
        return "ejr";
    }
    return "?";
}

std::string_view to_string( Strength strength )
{
    return strength == Strength::weak ? "weak" : "strong";
}

std::string to_string( AxiomSpec spec )
{
    std::string name = spec.strength == Strength::weak ? "w-" : "";
    for ( char c : to_string( spec.axiom ) )
        name += static_cast< char >( c - 'a' + 'A' );
    return name;
}

Axiom parse_axiom( std::string_view text )
{
    if ( text == "jr" || text == "JR" )
        return Axiom::jr;
    if ( text == "pjr" || text == "PJR" )
        return Axiom::pjr;
    if ( text == "ejr" || text == "EJR" )
        return Axiom::ejr;
    throw InputError( "unknown axiom '" + std::string( text ) + "' (expected jr, pjr or ejr)" );
}

Strength parse_strength( std::string_view text )
{
    if ( text == "weak" )
        return Strength::weak;
    if ( text == "strong" )
        return Strength::strong;
    throw InputError( "unknown strength '" + std::string( text ) + "' (expected weak or strong)" );
}

Election::Election( int voters, int candidates, int rounds,
                    const std::vector< std::vector< std::vector< int > > >& approvals )
    : _n{ voters }, _m{ candidates }, _ell{ rounds }
{
    if ( _n < 1 || _m < 1 || _ell < 1 ) {
        std::ostringstream msg;
        msg << "election needs n, m, ell >= 1 (got n=" << _n << ", m=" << _m << ", ell=" << _ell << ")";
        throw InputError( msg.str() );
    }
    if ( static_cast< int >( approvals.size() ) != _n )
        throw InputError( "approvals: expected " + std::to_string( _n ) + " voters, got "
                          + std::to_string( approvals.size() ) );

    _cw = bits::words_for( _m );
    _vw = bits::words_for( _n );
    _approvals.assign( static_cast< std::size_t >( _n ) * _ell * _cw, 0 );
    _approvers.assign( static_cast< std::size_t >( _ell ) * _m * _vw, 0 );

    for ( int i = 0; i < _n; ++i ) {
        const auto& per_round = approvals[ static_cast< std::size_t >( i ) ];
        if ( static_cast< int >( per_round.size() ) != _ell )
            throw InputError( "approvals[" + std::to_string( i + 1 ) + "]: expected " + std::to_string( _ell )
                              + " rounds, got " + std::to_string( per_round.size() ) );
        for ( int t = 0; t < _ell; ++t ) {
            for ( int p : per_round[ static_cast< std::size_t >( t ) ] ) {
                if ( p < 0 || p >= _m )
                    throw InputError( "approvals[" + std::to_string( i + 1 ) + "][" + std::to_string( t + 1 )
                                      + "]: candidate " + std::to_string( p + 1 ) + " out of range 1.."
                                      + std::to_string( _m ) );
                bits::set( { _approvals.data() + ( static_cast< std::size_t >( i ) * _ell + t ) * _cw,
                             static_cast< std::size_t >( _cw ) },
                           p );
                bits::set( { _approvers.data() + ( static_cast< std::size_t >( t ) * _m + p ) * _vw,
                             static_cast< std::size_t >( _vw ) },
                           i );
            }
        }
    }
}

bool Election::approves( int voter, int round, int candidate ) const
{
    return bits::test( approval_bits( voter, round ), candidate );
}

std::vector< int > Election::approval_set( int voter, int round ) const
{
    return bits::to_indices( approval_bits( voter, round ) );
}

int Election::approval_count( int voter, int round ) const
{
    return bits::count( approval_bits( voter, round ) );
}

std::uint64_t Election::approver_mask( int round, int candidate ) const
{
    return approver_bits( round, candidate )[ 0 ];
}

int Election::round_support( int round ) const
{
    int support = 0;
    for ( int p = 0; p < _m; ++p )
        if ( bits::any( approver_bits( round, p ) ) )
            ++support;
    return support;
}

ElectionBuilder::ElectionBuilder( int voters, int candidates, int rounds )
    : _n{ voters }, _m{ candidates }, _ell{ rounds },
      _sets( static_cast< std::size_t >( std::max( voters, 0 ) ),
             std::vector< std::vector< int > >( static_cast< std::size_t >( std::max( rounds, 0 ) ) ) )
{
}

ElectionBuilder& ElectionBuilder::approve( int voter, int round, int candidate )
{
    _sets.at( static_cast< std::size_t >( voter ) ).at( static_cast< std::size_t >( round ) ).push_back( candidate );
    return *this;
}

ElectionBuilder& ElectionBuilder::set( int voter, int round, std::vector< int > candidates )
{
    _sets.at( static_cast< std::size_t >( voter ) ).at( static_cast< std::size_t >( round ) ) = std::move( candidates );
    return *this;
}

Election ElectionBuilder::build() const
{
    return Election( _n, _m, _ell, _sets );
}

void Outcome::validate_for( const Election& e ) const
{
    if ( rounds() != e.rounds() )
        throw InputError( "outcome has " + std::to_string( rounds() ) + " choices, election has "
                          + std::to_string( e.rounds() ) + " rounds" );
    for ( int t = 0; t < rounds(); ++t )
        if ( _choices[ static_cast< std::size_t >( t ) ] < 0
             || _choices[ static_cast< std::size_t >( t ) ] >= e.candidates() )
            throw InputError( "choices[" + std::to_string( t + 1 ) + "]: candidate "
                              + std::to_string( _choices[ static_cast< std::size_t >( t ) ] + 1 )
                              + " out of range 1.." + std::to_string( e.candidates() ) );
}

VoterGroup::VoterGroup( std::vector< int > members ) : _members{ std::move( members ) }
{
    std::sort( _members.begin(), _members.end() );
    _members.erase( std::unique( _members.begin(), _members.end() ), _members.end() );
    if ( _members.empty() )
        throw InputError( "voter group must be nonempty" );
    if ( _members.front() < 0 )
        throw InputError( "voter group contains a negative index" );
}

VoterGroup VoterGroup::from_mask( std::uint64_t mask )
{
    std::vector< int > members;
    bits::for_each( std::span< const std::uint64_t >( &mask, 1 ), [ & ]( int i ) { members.push_back( i ); } );
    return VoterGroup( std::move( members ) );
}

bool VoterGroup::contains( int voter ) const
{
    return std::binary_search( _members.begin(), _members.end(), voter );
}

std::uint64_t VoterGroup::mask() const
{
    std::uint64_t mask = 0;
    for ( int i : _members ) {
        if ( i >= 64 )
            throw CapacityError( "voter group mask needs every member below 64" );
        mask |= std::uint64_t{ 1 } << i;
    }
    return mask;
}

void VoterGroup::validate_for( const Election& e ) const
{
    if ( _members.back() >= e.voters() )
        throw InputError( "voter group member " + std::to_string( _members.back() + 1 ) + " out of range 1.."
                          + std::to_string( e.voters() ) );
}

namespace
{

void check_voter( const Election& e, int voter )
{
    if ( voter < 0 || voter >= e.voters() )
        throw InputError( "voter " + std::to_string( voter + 1 ) + " out of range 1.." + std::to_string( e.voters() ) );
}

} // namespace

int satisfaction( const Election& e, const Outcome& o, int voter )
{
    check_voter( e, voter );
    o.validate_for( e );
    int sat = 0;
    for ( int t = 0; t < e.rounds(); ++t )
        if ( e.approves( voter, t, o[ t ] ) )
            ++sat;
    return sat;
}

std::vector< int > satisfactions( const Election& e, const Outcome& o )
{
    o.validate_for( e );
    std::vector< int > sat( static_cast< std::size_t >( e.voters() ), 0 );
    for ( int t = 0; t < e.rounds(); ++t )
        bits::for_each( e.approver_bits( t, o[ t ] ), [ & ]( int i ) { ++sat[ static_cast< std::size_t >( i ) ]; } );
    return sat;
}

int coverage( const Election& e, const Outcome& o, const VoterGroup& g )
{
    g.validate_for( e );
    o.validate_for( e );
    int covered = 0;
    for ( int t = 0; t < e.rounds(); ++t ) {
        auto approvers = e.approver_bits( t, o[ t ] );
        if ( std::any_of( g.members().begin(), g.members().end(),
                          [ & ]( int i ) { return bits::test( approvers, i ); } ) )
            ++covered;
    }
    return covered;
}

int agreement( const Election& e, const VoterGroup& g )
{
    g.validate_for( e );
    std::vector< std::uint64_t > common( static_cast< std::size_t >( e.candidate_words() ) );
    int beta = 0;
    for ( int t = 0; t < e.rounds(); ++t ) {
        auto first = e.approval_bits( g.members().front(), t );
        std::copy( first.begin(), first.end(), common.begin() );
        for ( int i : g.members() )
            bits::and_into( common, e.approval_bits( i, t ) );
        if ( bits::any( common ) )
            ++beta;
    }
    return beta;
}

int demand( const Election& e, const VoterGroup& g )
{
    return demand_of( agreement( e, g ), g.size(), e.voters() );
}

Rational alt_demand( const Election& e, const VoterGroup& g )
{
    Rational beta( agreement( e, g ) );
    Rational share( static_cast< std::int64_t >( e.rounds() ) * g.size(), e.voters() );
    return std::min( beta, share );
}

Election first_rounds( const Election& e, int rounds )
{
    if ( rounds < 1 || rounds > e.rounds() )
        throw InputError( "first_rounds: " + std::to_string( rounds ) + " not in 1.." + std::to_string( e.rounds() ) );
    ElectionBuilder builder( e.voters(), e.candidates(), rounds );
    for ( int i = 0; i < e.voters(); ++i )
        for ( int t = 0; t < rounds; ++t )
            builder.set( i, t, e.approval_set( i, t ) );
    return builder.build();
}

bool is_monotonic( const Election& e )
{
    for ( int i = 0; i < e.voters(); ++i )
        for ( int t = 0; t + 1 < e.rounds(); ++t )
            if ( !bits::is_subset( e.approval_bits( i, t ), e.approval_bits( i, t + 1 ) ) )
                return false;
    return true;
}

bool all_nonempty( const Election& e )
{
    for ( int i = 0; i < e.voters(); ++i )
        for ( int t = 0; t < e.rounds(); ++t )
            if ( !bits::any( e.approval_bits( i, t ) ) )
                return false;
    return true;
}

} // namespace tjr
