#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polyspace/cohomology.hpp"
#include "polyspace/genetics.hpp"

namespace polyspace {

// One failed comparison in a sweep.
struct SweepIssue {
    std::string code;
    std::string detail;
};

struct SweepResult {
    std::string family;
    long long codes_checked = 0;
    long long values_checked = 0;
    long long codes_rejected = 0;  // antichains the engine proves unrealizable
    std::vector<SweepIssue> mismatches;

    bool ok() const { return mismatches.empty(); }
};

// The quotient-level invariant battery for one ring:
//  - ranks 1 at degrees 0 and m, every pairing matrix invertible,
//  - phi = 1 on R^(m-k) V_J for every maximum-cardinality subgee J,
//  - the expansion of R^(m-|P|) V_P over the supersets avoiding a support
//    element (for every nonempty subgee P and s in supp(P)),
//  - equal top classes across all maximum-cardinality subgees,
//  - same-block equality of R^(m-r-1) V_(P ∪ {s}),
//  - the vanishing sums E_P over subgees disjoint from P,
//  - monotone vanishing of R powers.
// Returns human-readable descriptions of any failures.
std::vector<std::string> structural_failures(const CohomologyRing& ring);

// Blocks of a code for the same-block lemma: the gaps cut by the large gee,
// plus (g_k, b] for the two-gene shape. Empty when the code matches neither
// shape. Each block is an inclusive (lo, hi] interval encoded as {lo, hi}.
std::vector<std::pair<int, int>> same_block_intervals(const GeneticCode& code);

// Formula-vs-engine sweeps. Each enumerated code is built, every applicable
// closed-form value is compared against the engine, and the structural
// battery is run. Deterministic output regardless of the worker count.
SweepResult sweep_monogenic(int max_n, std::int64_t realize_bound);
SweepResult sweep_two_gene(int max_n);
SweepResult sweep_quasieq(int max_n);

// Entry bound used by the monogenic sweep's realizability search when the
// caller does not supply one; chosen so the set of realized codes is stable
// under raising the bound (see tools' verify command).
std::int64_t default_realize_bound(int n);

}  // namespace polyspace
