#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tjr
{

// A pure integer linear program: bounded integer variables, linear rows and
// an optional linear objective.

enum class Sense
{
    le,
    eq,
    ge
};

struct Term
{
    int var = 0;
    std::int64_t coef = 0;
};

struct Variable
{
    std::string name;
    std::int64_t lower = 0;
    std::int64_t upper = 0;
};

struct Row
{
    std::string name;
    std::vector< Term > terms;
    Sense sense = Sense::le;
    std::int64_t rhs = 0;
};

struct Objective
{
    bool maximize = true;
    std::vector< Term > terms;
};

class LinearModel
{
public:
    int add_variable( std::string name, std::int64_t lower, std::int64_t upper );
    void add_row( std::string name, std::vector< Term > terms, Sense sense, std::int64_t rhs );
    void set_objective( Objective objective );

    [[nodiscard]] const std::vector< Variable >& variables() const noexcept { return _vars; }
    [[nodiscard]] const std::vector< Row >& rows() const noexcept { return _rows; }
    [[nodiscard]] const std::optional< Objective >& objective() const noexcept { return _objective; }

    [[nodiscard]] bool is_feasible( std::span< const std::int64_t > values ) const;
    [[nodiscard]] std::int64_t objective_value( std::span< const std::int64_t > values ) const;

private:
    std::vector< Variable > _vars;
    std::vector< Row > _rows;
    std::optional< Objective > _objective;
};

enum class SolveStatus
{
    optimal,    // objective present and proven optimal
    feasible,   // no objective; first feasible assignment
    infeasible
};

[[nodiscard]] std::string_view to_string( SolveStatus status );

struct SolverConfig
{
    std::uint64_t max_nodes = std::uint64_t{ 1 } << 24;
};

struct SolveResult
{
    SolveStatus status = SolveStatus::infeasible;
    std::vector< std::int64_t > values;
    std::int64_t objective = 0;
    std::uint64_t nodes = 0;
};

// Depth-first branch and bound over variables in index order, values in
// ascending order, with bound propagation on every row. Only a strictly
// better assignment replaces the incumbent, so the result is the
// lexicographically smallest optimum. Throws CapacityError past max_nodes.
[[nodiscard]] SolveResult solve_exact( const LinearModel& model, const SolverConfig& config = {} );

// CPLEX-style LP text: objective, Subject To, Bounds, Generals, End.
[[nodiscard]] std::string emit_lp( const LinearModel& model );

} // namespace tjr
