#pragma once

#include <vector>

#include "tjr/election.hpp"

namespace tjr
{

// Result of merging, per round, candidates that have identical approver sets.
//
// In round t the reduced candidates 0..classes(t)-1 are the classes ordered by
// their smallest original member; candidates nobody approves form one sink
// class. Reduced indices >= classes(t) exist only because every round shares
// one candidate range; nobody approves them.
struct DedupResult
{
    Election reduced;
    // representative[t][c]: smallest original candidate in class c of round t.
    std::vector< std::vector< int > > representative;
    // class_of[t][p]: reduced index of original candidate p in round t.
    std::vector< std::vector< int > > class_of;

    [[nodiscard]] int classes( int round ) const
    {
        return static_cast< int >( representative[ static_cast< std::size_t >( round ) ].size() );
    }

    // Maps an outcome of the reduced election back to original candidates.
    // A padding index lifts to the round's sink if there is one, otherwise to
    // the round's first class; satisfaction can then only grow.
    [[nodiscard]] Outcome lift( const Outcome& reduced_outcome ) const;
};

[[nodiscard]] DedupResult dedup_candidates( const Election& e );

} // namespace tjr
