#pragma once

#include <memory>
#include <string>
#include <vector>

#include "polyspace/genetics.hpp"
#include "polyspace/gf2.hpp"

namespace polyspace {

// H*(M̄_alpha; Z_2) realized degree by degree as an F_2 quotient.
//
// Degree-d spanning monomials are R^(d-|S|) V_S over subgees S with |S| <= d,
// ordered by (|S| descending, mask ascending). The relation space is the
// graded ideal generated by the minimal-degree instances of the vanishing
// sums E_S (one per nonempty subgee S, at degree n-2-|S|), closed under
// multiplication by R and by each V_i, with products rewritten by
// V_i^2 -> R V_i and V_T -> 0 for non-subgee T.
class CohomologyRing {
public:
    // Throws InconsistencyError when the quotient cannot be the cohomology of
    // a closed (n-3)-manifold: top or bottom rank differs from 1, a pairing
    // degenerates, or two disjoint subgees have |S|+|T| > n-2.
    static CohomologyRing build(const GeneticCode& code);

    const GeneticCode& code() const { return code_; }
    const SubgeePoset& poset() const { return *poset_; }
    int m() const { return code_.m(); }

    int span_size(int degree) const;
    int relation_rank(int degree) const;
    int quotient_rank(int degree) const;

    // Index of R^a V_S within the degree-(a+|S|) monomial order.
    int monomial_index(int a, Mask S) const;

    // Canonical representative of the class of R^a V_S modulo relations.
    gf2::Row class_of(int a, Mask S) const;
    bool class_is_zero(int a, Mask S) const;

    // Value of the top-degree functional on R^a V_S with a + |S| = m.
    int phi_eval(int a, Mask S) const;

    // Matrix of the cup-product pairing H^d x H^(m-d) -> H^m in the quotient
    // bases (free-column monomials). Uses OpenMP; entries are independent.
    std::vector<std::vector<std::uint8_t>> pairing_matrix(int d) const;

    // Largest h <= m with R^h nonzero in the quotient.
    int sw_height() const;

    // degree -> {span_size, rank, quotient_rank} diagnostics.
    std::string diagnostics_json() const;

    // Quotient-basis monomials of a degree, as (r_power, vars) pairs.
    std::vector<std::pair<int, Mask>> quotient_basis(int degree) const;

private:
    CohomologyRing() = default;

    struct DegreeSpace {
        std::vector<Mask> monomials;   // |S| desc, mask asc; r_power = degree - |S|
        std::vector<int> size_offset;  // monomials of size s start at size_offset[s]
        Gf2RowSpace relations{0};
    };

    const DegreeSpace& space(int degree) const;
    void build_spaces();
    void check_consistency();

    GeneticCode code_;
    std::shared_ptr<const SubgeePoset> poset_;
    std::vector<DegreeSpace> spaces_;
    std::vector<std::uint8_t> phi_;  // per degree-m monomial index
};

namespace ref {
// Single-threaded pairing assembly, kept for cross-checking the OpenMP path.
std::vector<std::vector<std::uint8_t>> pairing_matrix(const CohomologyRing& ring, int d);
}  // namespace ref

}  // namespace polyspace
