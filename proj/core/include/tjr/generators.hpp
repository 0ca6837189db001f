#pragma once

#include <cstdint>

#include "tjr/election.hpp"
#include "tjr/graph.hpp"

namespace tjr
{

// A reduction instance: `outcome` fails `spec` on `election` exactly when the
// source graph has `property` with `parameter`.
struct ReductionBundle
{
    Election election;
    Outcome outcome;
    AxiomSpec spec;
    GraphProperty property;
    int parameter = 0;
};

// Clique -> w-JR. Candidates p1, p2, p3 are 0, 1, 2; vertex voters come first,
// then (kappa-1)*nu voters approving only p3. One round per vertex.
[[nodiscard]] ReductionBundle gen_clique_wjr( const Graph& g, int kappa );

// Independent set in max-degree-3 graphs -> w-EJR, with p = 0 and q = 1.
// Needs kappa <= nu - 3.
[[nodiscard]] ReductionBundle gen_is3_wejr( const Graph& g, int kappa );

// Maximum edge biclique -> JR/PJR/EJR. Voters are L then N_0, rounds are R,
// p = 0, q = 1. With `nonempty_pad`, voter i in L gets a private candidate
// 2 + i instead of an empty set. Needs kappa > |L| + |R|.
[[nodiscard]] ReductionBundle gen_biclique_jr( const Graph& g, int kappa, bool nonempty_pad,
                                               Axiom axiom = Axiom::jr );

struct BlownUpGraph
{
    Graph graph;
    int kappa;
};

// Replaces every vertex by xi = |L| + |R| + 1 copies (copy c of vertex v is
// v * xi + c) and scales kappa by xi^2.
[[nodiscard]] BlownUpGraph blowup( const Graph& g, int kappa );

// Multicolored clique -> w-JR. One round per part; candidates are the
// vertices followed by a dummy; the outcome picks the dummy everywhere.
// `k` must equal the number of declared parts.
[[nodiscard]] ReductionBundle gen_multicolored_wjr( const Graph& g, int k );

// Six voters, 15 pair candidates x_T (pairs in lexicographic order) followed
// by y_1..y_6, three rounds.
[[nodiscard]] Election gen_example1();

// n = 2k voters, candidates and rounds. Voter i < k approves p_i for the
// first k rounds and p_{n-1} afterwards; voter k + j approves p_{k+j} and then
// p_j. Needs k >= 4.
[[nodiscard]] Election gen_semionline( int k );

// Each (voter, round, candidate) triple, in that nesting order, is approved
// iff the next std::mt19937_64 draw, taken as a 53-bit fraction, is below
// `density`.
[[nodiscard]] Election gen_random( std::uint64_t seed, int voters, int candidates, int rounds, double density );

} // namespace tjr
