#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "tjr/election.hpp"

namespace tjr
{

struct RuleConfig
{
    // gcr enumerates subsets of voters; n above this is refused.
    int max_voters = 24;
};

// One group reserved by the greedy stage, with the rounds assigned to it.
struct CohesiveGroup
{
    VoterGroup group;
    int beta = 0;
    int alpha = 0;
    std::vector< int > rounds;
};

// Pairwise-disjoint groups in nondecreasing beta order (ties keep selection
// order). Every group has beta > 0.
struct CohesiveFamily
{
    std::vector< CohesiveGroup > groups;
};

struct RuleResult
{
    Outcome outcome;
    CohesiveFamily family;
};

// Two-stage Greedy Cohesive Rule. Stage one repeatedly reserves a group of
// maximum demand among groups with positive agreement that are disjoint from
// everything reserved so far (ties: larger agreement, then smaller bitmask).
// Stage two walks the reserved groups by agreement and gives each its demand
// in the earliest free rounds where it agrees, picking the lowest-index
// commonly approved candidate. Untouched rounds keep candidate 0.
[[nodiscard]] RuleResult gcr( const Election& e, const RuleConfig& config = {} );

// Polynomial variant for monotonic elections: the maximum-demand group among
// the remaining voters is always some N_{p,t} minus the reserved voters, so
// stage one only inspects those residual sets.
[[nodiscard]] RuleResult gcr_monotonic( const Election& e );

// What a semi-online rule may see when choosing round `round()`: the rounds
// revealed so far, its own earlier choices and the horizon.
class RevealedPrefix
{
public:
    RevealedPrefix( const Election& revealed, std::span< const int > committed, int horizon )
        : _revealed{ revealed }, _committed{ committed }, _horizon{ horizon }
    {
    }

    [[nodiscard]] const Election& revealed() const noexcept { return _revealed; }
    [[nodiscard]] std::span< const int > committed() const noexcept { return _committed; }
    [[nodiscard]] int horizon() const noexcept { return _horizon; }
    [[nodiscard]] int round() const noexcept { return _revealed.rounds() - 1; }

private:
    const Election& _revealed;
    std::span< const int > _committed;
    int _horizon;
};

using SemiOnlineRule = std::function< int( const RevealedPrefix& ) >;

// Feeds rounds one at a time; the rule for round t is handed an election
// holding rounds 0..t only.
[[nodiscard]] Outcome run_semionline( const Election& e, const SemiOnlineRule& rule );

[[nodiscard]] SemiOnlineRule constant_rule( int candidate );
[[nodiscard]] SemiOnlineRule script_rule( Outcome script );
// Most-approved candidate of the current round, lowest index on ties.
[[nodiscard]] SemiOnlineRule greedy_plurality_rule();

struct SemionlineSweep
{
    bool all_fail = false;
    std::uint64_t completions = 0;
    std::uint64_t failing = 0;
    // Completions rejected by the singleton / first-half groups alone.
    std::uint64_t failing_restricted = 0;
    bool used_bruteforce = false;
};

// Builds the 2k-voter instance, fixes rounds 0..k-1 to candidates 0..k-1 and
// tries every completion of the remaining k rounds against strong EJR.
[[nodiscard]] SemionlineSweep semionline_sweep( int k );
[[nodiscard]] bool semionline_impossibility_check( int k );

} // namespace tjr
