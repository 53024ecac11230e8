#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyspace/subsets.hpp"

namespace polyspace {

// The genetic code <A_1,...,A_k>: an antichain (under dominance) of subsets
// of [n], each containing n. A code with no genes is the degenerate case
// where {n} itself is long and the moduli space is empty.
class GeneticCode {
public:
    GeneticCode() = default;
    GeneticCode(int n, std::vector<Mask> genes);

    int n() const { return n_; }
    int m() const { return n_ - 3; }  // dimension of the moduli space
    bool degenerate() const { return genes_.empty(); }
    const std::vector<Mask>& genes() const { return genes_; }

    // Genes with n stripped, in the same canonical order.
    std::vector<Mask> gees() const;

    int smallest_gee_size() const;
    int largest_gee_size() const;
    bool monogenic() const { return genes_.size() == 1; }

    // "{2,4,9},{6,9}"; "<empty>" for the degenerate code.
    std::string to_string() const;

    bool operator==(const GeneticCode& other) const = default;

private:
    int n_ = 0;
    std::vector<Mask> genes_;  // sorted ascending by (size, mask value)
};

struct CodeValidation {
    bool valid = true;
    std::vector<std::string> problems;
};

// Structural diagnostics: n-membership, element range, antichain property.
CodeValidation validate_code(const GeneticCode& code);

// Parses "{2,4,9},{6,9}". n is inferred as the maximum element unless
// n_override is given. Throws ParseError on malformed text; the result is
// validated (throws ParseError listing the problems if invalid).
GeneticCode parse_code(const std::string& text, std::optional<int> n_override = {});

// All subgees of a code: the subsets of [n-1] dominated by some gee,
// materialized eagerly and indexed by size.
class SubgeePoset {
public:
    explicit SubgeePoset(const GeneticCode& code);

    int n() const { return n_; }
    // Largest subgee cardinality (0 for <{n}>).
    int max_size() const { return max_size_; }
    const GeneticCode& code() const { return code_; }

    bool is_subgee(Mask S) const;
    const std::vector<Mask>& all() const { return all_; }  // by (size, mask)
    const std::vector<Mask>& of_size(int i) const;         // empty when out of range

    // supp(P) = { s not in P : P ∪ {s} is a subgee }. Throws if P is not a subgee.
    Mask support(Mask P) const;

    // S_t(P, s) = { S : |S| = t, P ⊆ S, s ∉ S }.
    std::vector<Mask> size_filtered(int t, Mask P, int s) const;

private:
    GeneticCode code_;
    int n_ = 0;
    int max_size_ = 0;
    std::vector<Mask> all_;
    std::vector<std::vector<Mask>> by_size_;
    std::vector<std::uint64_t> member_bits_;  // subgee membership over 2^(n-1) masks
};

// theta(J) for a gee {g_1<...<g_k}: entry i counts the elements of J in the
// block (g_{i-1}, g_i], with g_0 = 0. Throws if some element exceeds g_k.
std::vector<int> theta(Mask J, Mask gee);

// Membership in S_k: every suffix sum b_k + ... + b_{k-i+1} is at most i.
// Characterizes subgees of a monogenic code via theta. Throws on negatives.
bool in_S_k(const std::vector<int>& b);

}  // namespace polyspace
