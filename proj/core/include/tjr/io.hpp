#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tjr/election.hpp"
#include "tjr/generators.hpp"
#include "tjr/graph.hpp"
#include "tjr/rules.hpp"
#include "tjr/verify.hpp"

namespace tjr
{

// Text formats. Everything written is 1-based and byte-deterministic; parsers
// throw InputError with the offending position.
//
//   election: {"n": 2, "m": 3, "ell": 2, "approvals": [[[1], [1, 2]], [[], [3]]]}
//   outcome:  {"choices": [1, 3]}
//   graph:    "nu mu [bipartite L | parts k s_1 .. s_k]" then mu lines "u v"

[[nodiscard]] Election parse_election( std::string_view text );
[[nodiscard]] std::string election_to_json( const Election& e );

[[nodiscard]] Outcome parse_outcome( std::string_view text );
[[nodiscard]] std::string outcome_to_json( const Outcome& o );

[[nodiscard]] std::string report_to_json( const VerifyReport& report );

[[nodiscard]] Graph parse_graph( std::string_view text );
[[nodiscard]] std::string graph_to_text( const Graph& g );

[[nodiscard]] std::string bundle_to_json( const ReductionBundle& bundle );

// Cohesive groups selected by a GCR run, with their assigned rounds.
[[nodiscard]] std::string trace_to_json( std::string_view rule, const CohesiveFamily& family );

// A JSON array of n non-negative satisfaction floors.
[[nodiscard]] std::vector< int > parse_floors( std::string_view text, int voters );

[[nodiscard]] std::string read_file( const std::string& path );
void write_file( const std::string& path, std::string_view contents );

} // namespace tjr
