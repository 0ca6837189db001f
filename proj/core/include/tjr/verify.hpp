#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "tjr/election.hpp"

namespace tjr
{

// Enumeration caps. These are configuration, not constants of the problem.
struct VerifyConfig
{
    // verify_bruteforce enumerates 2^n - 1 groups; n above this is refused.
    int max_bruteforce_voters = 24;
    // verify_enumerative refuses when its (T, o') pair count exceeds this.
    std::uint64_t max_enumeration = std::uint64_t{ 1 } << 26;
};

// PJR in the structured verifiers scans every closed set of covered rounds,
// so it is exponential in ell and refused above this.
inline constexpr int max_pjr_scan_rounds = 20;

enum class Method
{
    bruteforce,
    enumerative,
    monotonic,
    two_candidate_wjr,
    two_candidate_jr_nonempty
};

[[nodiscard]] std::string_view to_string( Method method );

struct VerifyReport
{
    AxiomSpec spec;
    bool holds = true;
    std::optional< Witness > witness; // present iff !holds
    Method method = Method::bruteforce;
    std::uint64_t groups_examined = 0;
};

// The voters of a base group ordered by nondecreasing satisfaction, ties by
// voter index. Prefix r (1-based) is the r least satisfied voters.
class SortedGroupFamily
{
public:
    SortedGroupFamily( std::vector< int > base, std::span< const int > satisfaction );

    [[nodiscard]] const std::vector< int >& order() const noexcept { return _order; }
    [[nodiscard]] int size() const noexcept { return static_cast< int >( _order.size() ); }
    [[nodiscard]] VoterGroup prefix( int r ) const;

private:
    std::vector< int > _order;
};

// True iff `w` re-scores, from scratch, to a violation of `spec` by `o`:
// stored beta/alpha/observed match recomputation, observed < alpha, JR needs
// alpha >= 1 and observed == 0, weak strength needs beta == ell.
[[nodiscard]] bool is_valid_witness( const Election& e, const Outcome& o, AxiomSpec spec, const Witness& w );

// Every nonempty group in increasing bitmask order; the first violation found
// is the witness.
[[nodiscard]] VerifyReport verify_bruteforce( const Election& e, const Outcome& o, AxiomSpec spec,
                                              const VerifyConfig& config = {} );

// Enumerates round sets T (increasing bitmask; weak strength: T = all rounds)
// and per-round candidate choices o' on T, forms the voters approving o' on all
// of T, and checks every satisfaction-sorted prefix of that set. PJR instead
// scans, per base set, the voters whose satisfied rounds fit inside each round
// set C (prefixes alone can miss PJR violations).
[[nodiscard]] VerifyReport verify_enumerative( const Election& e, const Outcome& o, AxiomSpec spec,
                                               const VerifyConfig& config = {} );

// Monotonic elections only. Checks satisfaction-sorted prefixes of
// N_{p,t} = { i : p in s_{i,t} } in (p, t, r) order; weak strength uses t = 0.
// PJR uses the covered-round scan described above, so it is not polynomial.
[[nodiscard]] VerifyReport verify_monotonic( const Election& e, const Outcome& o, AxiomSpec spec );

// w-JR when every round involves at most two candidates (its approved
// candidates together with the chosen one): w-JR fails iff the grumpy voters
// have positive demand.
[[nodiscard]] VerifyReport verify_two_candidates_wjr( const Election& e, const Outcome& o );

// JR under the same two-candidate condition plus nonempty approval sets.
[[nodiscard]] VerifyReport verify_two_candidates_jr_nonempty( const Election& e, const Outcome& o );

// True iff every round's approved candidates plus the chosen one number <= 2.
[[nodiscard]] bool two_candidate_rounds( const Election& e, const Outcome& o );

// Number of (T, o') pairs verify_enumerative would visit, saturating at
// UINT64_MAX.
[[nodiscard]] std::uint64_t enumeration_count( const Election& e, Strength strength );

// Dispatches to the cheapest applicable verifier: monotonic, then the
// two-candidate special cases, then enumerative within budget, then brute
// force within the voter cap. Throws CapacityError if none applies.
[[nodiscard]] VerifyReport route( const Election& e, const Outcome& o, AxiomSpec spec, const VerifyConfig& config = {} );

} // namespace tjr
