#include "polyspace/formulas.hpp"

#include <algorithm>

#include "polyspace/errors.hpp"
#include "polyspace/genetics.hpp"

namespace polyspace {

namespace {

constexpr int kMaxGeeSize = 16;

void validate_gee(const std::vector<int>& gee, int n) {
    if (static_cast<int>(gee.size()) > kMaxGeeSize) {
        throw ParseError("gee size " + std::to_string(gee.size()) + " exceeds the evaluator cap of " +
                         std::to_string(kMaxGeeSize));
    }
    int prev = 0;
    for (int g : gee) {
        if (g <= prev) throw ParseError("gee elements must be strictly increasing positive integers");
        prev = g;
    }
    if (!gee.empty() && gee.back() > n - 1) {
        throw ParseError("gee top " + std::to_string(gee.back()) + " exceeds n-1");
    }
}

// Sum over B >= 0 with B_+ = budget and B + offset in S_k of the product
// of C(gap_i + b_i - 2, b_i). Recursion fills b_k, b_{k-1}, ... so the
// suffix-sum constraints prune as soon as they fail.
int composition_sum(const std::vector<int>& gaps, const std::vector<int>& offset, int budget) {
    const int k = static_cast<int>(gaps.size());
    int total = 0;
    std::vector<int> b(static_cast<std::size_t>(k), 0);
    // depth i assigns b[k-1-i]; suffix carries sum of (b+offset) over the
    // filled positions, which must stay within i+1 at each step.
    auto rec = [&](auto&& self, int depth, int suffix, int remaining) -> void {
        if (depth == k) {
            if (remaining != 0) return;
            int product = 1;
            for (int i = 0; i < k && product; ++i) {
                product &= binom_mod2(gaps[static_cast<std::size_t>(i)] + b[static_cast<std::size_t>(i)] - 2,
                                      b[static_cast<std::size_t>(i)]);
            }
            total ^= product;
            return;
        }
        const int pos = k - 1 - depth;
        const int cap = depth + 1;  // suffix sums of B + offset within S_k
        for (int choice = 0; choice <= remaining; ++choice) {
            int s = suffix + choice + offset[static_cast<std::size_t>(pos)];
            if (s > cap) break;
            b[static_cast<std::size_t>(pos)] = choice;
            self(self, depth + 1, s, remaining - choice);
        }
        b[static_cast<std::size_t>(pos)] = 0;
    };
    if (budget < 0) return 0;
    rec(rec, 0, 0, budget);
    return total;
}

}  // namespace

int binom_mod2(long long a, long long b) {
    if (b < 0) throw ParseError("binomial with negative lower index");
    if (b == 0) return 1;
    if (a < 0) return binom_mod2(b - a - 1, b);
    if (b > a) return 0;
    return ((b & ~a) == 0) ? 1 : 0;
}

int davis_phi(const std::vector<int>& gee, int n, Mask J) {
    validate_gee(gee, n);
    const int k = static_cast<int>(gee.size());
    Mask gee_mask = mask_of(gee);
    std::vector<int> th = theta(J, gee_mask);
    if (!in_S_k(th)) throw ParseError(set_to_string(J) + " is not a subgee of the gee " + set_to_string(gee_mask));
    std::vector<int> gaps(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        gaps[static_cast<std::size_t>(i)] =
            gee[static_cast<std::size_t>(i)] - (i ? gee[static_cast<std::size_t>(i - 1)] : 0);
    }
    return composition_sum(gaps, th, k - set_size(J));
}

int extended_rm(const std::vector<int>& gee, int b, int n) {
    validate_gee(gee, n);
    if (gee.empty()) throw ParseError("extended_rm needs a nonempty gee");
    if (gee.back() >= b) throw ParseError("requires g_k < b");
    if (b > n - 1) throw ParseError("b exceeds n-1");
    return davis_phi(gee, n, 0) ^ ((b - gee.back()) & 1);
}

int phi_two_gene(const std::vector<int>& gee, int b, int n, Mask P) {
    validate_gee(gee, n);
    if (gee.empty() || gee.back() >= b || b > n - 1) throw ParseError("invalid two-gene parameters");
    if (P == 0 || set_size(P) > static_cast<int>(gee.size())) {
        throw ParseError("P must be a nonempty subgee dominated by the large gee");
    }
    return davis_phi(gee, n, P);  // throws unless P is dominated by the gee
}

std::optional<bool> tidy_by_parity(const std::vector<int>& gee, int b, int n) {
    if (extended_rm(gee, b, n) == 0) return true;
    return std::nullopt;
}

}  // namespace polyspace
