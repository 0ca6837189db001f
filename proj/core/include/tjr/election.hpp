#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

namespace tjr
{

// Voters, candidates and rounds are 0-based everywhere inside the library.
// The JSON and graph formats are 1-based; io.hpp converts at the boundary.

enum class Axiom
{
    jr,
    pjr,
    ejr
};

enum class Strength
{
    weak,
    strong
};

struct AxiomSpec
{
    Axiom axiom = Axiom::ejr;
    Strength strength = Strength::strong;

    friend bool operator==( const AxiomSpec&, const AxiomSpec& ) = default;
};

inline constexpr std::array< AxiomSpec, 6 > all_axiom_specs{ {
    { Axiom::jr, Strength::weak },
    { Axiom::pjr, Strength::weak },
    { Axiom::ejr, Strength::weak },
    { Axiom::jr, Strength::strong },
    { Axiom::pjr, Strength::strong },
    { Axiom::ejr, Strength::strong },
} };

[[nodiscard]] std::string_view to_string( Axiom axiom );
[[nodiscard]] std::string_view to_string( Strength strength );
// "w-JR", "EJR", ...
[[nodiscard]] std::string to_string( AxiomSpec spec );
[[nodiscard]] Axiom parse_axiom( std::string_view text );
[[nodiscard]] Strength parse_strength( std::string_view text );

// A temporal approval election: n voters, m candidates, ell rounds and an
// approval set s_{i,t} for every voter and round. Immutable once built.
//
// Two bitset views are kept: per (voter, round) a candidate bitset, and per
// (round, candidate) a voter bitset of its approvers.
class Election
{
public:
    // approvals[i][t] lists the candidates voter i approves in round t.
    Election( int voters, int candidates, int rounds,
              const std::vector< std::vector< std::vector< int > > >& approvals );

    [[nodiscard]] int voters() const noexcept { return _n; }
    [[nodiscard]] int candidates() const noexcept { return _m; }
    [[nodiscard]] int rounds() const noexcept { return _ell; }

    [[nodiscard]] bool approves( int voter, int round, int candidate ) const;
    [[nodiscard]] std::vector< int > approval_set( int voter, int round ) const;
    [[nodiscard]] int approval_count( int voter, int round ) const;

    [[nodiscard]] int candidate_words() const noexcept { return _cw; }
    [[nodiscard]] int voter_words() const noexcept { return _vw; }

    [[nodiscard]] std::span< const std::uint64_t > approval_bits( int voter, int round ) const
    {
        return { _approvals.data() + ( static_cast< std::size_t >( voter ) * _ell + round ) * _cw,
                 static_cast< std::size_t >( _cw ) };
    }

    [[nodiscard]] std::span< const std::uint64_t > approver_bits( int round, int candidate ) const
    {
        return { _approvers.data() + ( static_cast< std::size_t >( round ) * _m + candidate ) * _vw,
                 static_cast< std::size_t >( _vw ) };
    }

    // Approvers of a candidate as a single word; requires n <= 64.
    [[nodiscard]] std::uint64_t approver_mask( int round, int candidate ) const;

    // Number of candidates approved by at least one voter in the round.
    [[nodiscard]] int round_support( int round ) const;

    friend bool operator==( const Election&, const Election& ) = default;

private:
    int _n;
    int _m;
    int _ell;
    int _cw;
    int _vw;
    std::vector< std::uint64_t > _approvals;
    std::vector< std::uint64_t > _approvers;
};

class ElectionBuilder
{
public:
    ElectionBuilder( int voters, int candidates, int rounds );

    ElectionBuilder& approve( int voter, int round, int candidate );
    ElectionBuilder& set( int voter, int round, std::vector< int > candidates );

    [[nodiscard]] Election build() const;

private:
    int _n;
    int _m;
    int _ell;
    std::vector< std::vector< std::vector< int > > > _sets;
};

// One chosen candidate per round; repeats allowed.
class Outcome
{
public:
    Outcome() = default;
    explicit Outcome( std::vector< int > choices ) : _choices{ std::move( choices ) } {}

    [[nodiscard]] int rounds() const noexcept { return static_cast< int >( _choices.size() ); }
    [[nodiscard]] int operator[]( int round ) const { return _choices[ static_cast< std::size_t >( round ) ]; }
    [[nodiscard]] const std::vector< int >& choices() const noexcept { return _choices; }

    // Throws InputError if the length or any index does not fit the election.
    void validate_for( const Election& e ) const;

    friend bool operator==( const Outcome&, const Outcome& ) = default;

private:
    std::vector< int > _choices;
};

// A nonempty set of voters, kept sorted and duplicate-free.
class VoterGroup
{
public:
    explicit VoterGroup( std::vector< int > members );

    [[nodiscard]] static VoterGroup from_mask( std::uint64_t mask );

    [[nodiscard]] const std::vector< int >& members() const noexcept { return _members; }
    [[nodiscard]] int size() const noexcept { return static_cast< int >( _members.size() ); }
    [[nodiscard]] bool contains( int voter ) const;
    // Requires every member < 64.
    [[nodiscard]] std::uint64_t mask() const;

    void validate_for( const Election& e ) const;

    friend bool operator==( const VoterGroup&, const VoterGroup& ) = default;

private:
    std::vector< int > _members;
};

// A voter group certifying that an outcome violates an axiom. `observed` is
// max satisfaction over the group for JR/EJR and the group's coverage for PJR.
struct Witness
{
    VoterGroup group;
    int beta = 0;
    int alpha = 0;
    int observed = 0;

    friend bool operator==( const Witness&, const Witness& ) = default;
};

using Rational = boost::rational< std::int64_t >;

[[nodiscard]] int satisfaction( const Election& e, const Outcome& o, int voter );
[[nodiscard]] int coverage( const Election& e, const Outcome& o, const VoterGroup& g );
[[nodiscard]] int agreement( const Election& e, const VoterGroup& g );
[[nodiscard]] int demand( const Election& e, const VoterGroup& g );
[[nodiscard]] Rational alt_demand( const Election& e, const VoterGroup& g );

// floor(beta * size / n) in exact integer arithmetic.
[[nodiscard]] constexpr int demand_of( int beta, int size, int n ) noexcept
{
    return static_cast< int >( static_cast< std::int64_t >( beta ) * size / n );
}

[[nodiscard]] bool is_monotonic( const Election& e );
[[nodiscard]] bool all_nonempty( const Election& e );

// The election restricted to its first `rounds` rounds.
[[nodiscard]] Election first_rounds( const Election& e, int rounds );

// All satisfactions at once, indexed by voter.
[[nodiscard]] std::vector< int > satisfactions( const Election& e, const Outcome& o );

} // namespace tjr
