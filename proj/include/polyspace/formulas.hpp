#pragma once

#include <optional>
#include <vector>

#include "polyspace/subsets.hpp"

namespace polyspace {

// Parity of the generalized binomial coefficient C(a, b), b >= 0. For a >= 0
// this is Lucas' criterion (b's bits inside a's); for a < 0 the reflection
// C(a, b) = +/- C(b - a - 1, b) gives the parity. Throws on b < 0.
int binom_mod2(long long a, long long b);

// Closed form for the top-degree functional on a monogenic code
// <{g_1,...,g_k, n}> with g_1 < ... < g_k, evaluated at R^(m-|J|) V_J:
//
//   phi = sum over B in Z^k_{>=0} with B_+ = k - |J| and B + theta(J) in S_k
//         of  prod_i C(gap_i + b_i - 2, b_i),   gap_i = g_i - g_{i-1}, g_0 = 0,
//
// everything indexed by ascending blocks. Throws when J is not a subgee.
// The value is independent of n; n is taken for interface validation only.
int davis_phi(const std::vector<int>& gee, int n, Mask J);

// phi(R^(n-3)) for the two-gene code <{g_1,...,g_k,n},{b,n}> with g_k < b:
// the monogenic J = {} sum plus (b - g_k), mod 2. For k = 1 the pair of
// genes collapses under dominance and the value matches <{b,n}> alone.
int extended_rm(const std::vector<int>& gee, int b, int n);

// phi(R^(m-|P|) V_P) for the same two-gene codes, for P dominated by the
// large gee with 1 <= |P| <= k: identical to the monogenic closed form.
int phi_two_gene(const std::vector<int>& gee, int b, int n, Mask P);

// One-directional criterion: extended_rm == 0 forces R^m = 0 and with the
// coindex lower bound everything collapses to m-1, so the space is tidy.
// Returns nothing when the value is 1 (no conclusion).
std::optional<bool> tidy_by_parity(const std::vector<int>& gee, int b, int n);

}  // namespace polyspace
