#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polyspace/genetics.hpp"
#include "polyspace/subsets.hpp"

namespace polyspace {

// A length vector: n >= 3 positive integer side lengths, kept nondecreasing.
struct LengthVector {
    std::vector<std::int64_t> lengths;

    int n() const { return static_cast<int>(lengths.size()); }
    std::int64_t total() const;
    std::int64_t sum_of(Mask I) const;
    std::string to_string() const;  // "(1,1,1,2)"

    bool operator==(const LengthVector& other) const = default;
};

// Comma-separated positive integers, at least 3 of them, at most kMaxSides.
// The result is sorted. Throws ParseError naming the offending token.
LengthVector parse_lengths(const std::string& text);

LengthVector make_length_vector(std::vector<std::int64_t> lengths);

// Sum over I strictly below the complement's sum. I ⊆ [n].
bool is_short(const LengthVector& v, Mask I);

// No bipartition of the sides has equal sums.
bool is_generic(const LengthVector& v);

// Maximal short subsets containing n. Requires genericity (NonGenericError
// otherwise). Returns the degenerate (empty) code when {n} is long.
GeneticCode genetic_code(const LengthVector& v);

// alpha(S): drop the sides indexed by S and absorb their total into side n.
// Requires S ⊆ [n-1] with S ∪ {n} short.
LengthVector reduce_by_subset(const LengthVector& v, Mask S);

// Brute-force search for a length vector realizing the given code, scanning
// nondecreasing integer vectors with entries in [1, search_bound] in
// lexicographic order. Returns the first witness found.
std::optional<LengthVector> realize_code(const GeneticCode& code, std::int64_t search_bound);

// Shared enumeration behind realize_code and the verification sweeps: every
// distinct genetic code realized by a sorted generic vector with n sides and
// entries <= bound, each with its lexicographically first witness. Codes are
// returned sorted by their canonical text form.
std::vector<std::pair<GeneticCode, LengthVector>> realized_codes(int n, std::int64_t bound);

// Serial reference implementations, kept for cross-checking the OpenMP
// kernels above.
namespace ref {
bool is_generic(const LengthVector& v);
GeneticCode genetic_code(const LengthVector& v);
}  // namespace ref

}  // namespace polyspace
