#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tjr/dedup.hpp"
#include "tjr/election.hpp"
#include "tjr/linear_model.hpp"

namespace tjr
{

// Rounds sharing one profile after candidate dedup. A profile is the sorted
// list of the round's candidate-class approver sets; class j of the type is
// the j-th entry.
struct RoundType
{
    std::vector< std::vector< std::uint64_t > > approvers; // per class, voter bits
    std::vector< int > rounds;                               // ascending
    // candidate[k][j]: reduced candidate of class j in rounds[k]
    std::vector< std::vector< int > > candidate;

    [[nodiscard]] int count() const noexcept { return static_cast< int >( rounds.size() ); }
};

struct EjrModelOptions
{
    std::optional< std::vector< int > > floors; // sat_i >= floors[i]
    bool max_welfare = false;
};

struct CohesiveConstraint
{
    std::uint64_t group = 0; // voter mask
    int alpha = 0;
    std::vector< int > xi; // one variable per member, ascending voter order
};

// The EJR integer program over x_{c,tau} (rounds of type tau given class c)
// and xi_{i,V} (member i of V is the one meeting V's demand). Groups with
// zero demand get no xi variables.
struct EjrModel
{
    LinearModel lp;
    DedupResult dedup;
    std::vector< RoundType > types;
    std::vector< std::vector< int > > x; // x[tau][class] -> variable index
    std::vector< CohesiveConstraint > groups;
    int voters = 0;
};

// Refuses n above `max_voters` (the program has one xi block per group).
[[nodiscard]] EjrModel build_model( const Election& e, const EjrModelOptions& options = {}, int max_voters = 20 );

// Per voter, sum over types of the x counts of classes the voter approves.
[[nodiscard]] std::vector< std::int64_t > model_satisfaction( const EjrModel& model,
                                                              std::span< const std::int64_t > values );

// Fills each type's rounds in ascending order, classes in index order, then
// lifts to original candidates.
[[nodiscard]] Outcome decode( const EjrModel& model, std::span< const std::int64_t > values );

// The assignment describing `o` (x counts plus, per group, xi on its first
// member meeting the demand). Nothing if `o` violates EJR or a floor.
[[nodiscard]] std::optional< std::vector< std::int64_t > > encode( const EjrModel& model, const Election& e,
                                                                   const Outcome& o );

struct IlpOutcome
{
    SolveStatus status = SolveStatus::infeasible;
    std::optional< Outcome > outcome;
    std::int64_t welfare = 0;
    std::uint64_t nodes = 0;
};

[[nodiscard]] IlpOutcome solve_ejr( const Election& e, const EjrModelOptions& options = {},
                                    const SolverConfig& config = {} );

// Sum of satisfactions.
[[nodiscard]] std::int64_t welfare( const Election& e, const Outcome& o );

} // namespace tjr
