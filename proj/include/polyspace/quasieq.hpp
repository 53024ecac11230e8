#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyspace/genetics.hpp"
#include "polyspace/interval.hpp"

namespace polyspace {

// Parameters of a quasi-equilateral length vector (1,...,1,r): n >= 4,
// 1 <= r <= n-2 and r = n (mod 2), which is exactly the generic range with a
// nonempty moduli space.
struct QuasiEqParams {
    int n = 0;
    int r = 0;

    int D() const { return n - 2; }
    int e() const { return (n - r) / 2 - 1; }  // gee size
    int t() const;                             // 2^t <= e < 2^(t+1); needs e >= 1

    static QuasiEqParams make(int n, int r);  // throws ParseError on invalid input
};

// max{ i in [0, e-1] : C(D - e + i, i) odd }; defined whenever e >= 1 since
// i = 0 always works. Throws when e = 0 (empty range).
int k_of(int n, int r);

// Height of R for (1,...,1,r): n-3 when C(D, e) is odd, otherwise
// (n+r)/2 + k_of(n,r) - 2.
int kamiyama_height(int n, int r);

// The residue-class table for gee size e: row j-1 holds the residues q of
// n-2 (mod 2^(t+1)) with height exactly n-3-(j-1). Rows partition the
// residues; a row may be empty (the height offset never occurs).
struct ResidueTable {
    int e = 0;
    int t = 0;
    int modulus = 0;
    std::vector<std::vector<int>> rows;  // index = height offset j-1, values sorted

    // Table-facing convention: residues of n itself (shifted by 2).
    std::vector<int> residues_of_n(int offset) const;
};

ResidueTable residue_table(int e);

// <{n-e, ..., n-1, n}>, the genetic code of (1,...,1,r).
GeneticCode genetic_code_quasieq(int n, int r);

// Exact height and coindex facts for r in {1,2} at the power-of-two special
// values of n; nothing for other inputs.
struct SmallRFacts {
    int height = 0;
    Interval coindex;
    std::optional<int> index;
    std::string family;
};

std::optional<SmallRFacts> small_r_bounds(int n, int r);

}  // namespace polyspace
