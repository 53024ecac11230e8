#include "polyspace/cohomology.hpp"

#include <algorithm>

#include "json.hpp"
#include "polyspace/errors.hpp"

namespace polyspace {

namespace {

// Row bits shifted up by `shift`, rewritten to `target_words` words.
gf2::Row shifted_row(const gf2::Row& src, int shift, std::size_t target_words) {
    gf2::Row out(target_words, 0);
    const int word_shift = shift >> 6;
    const int bit_shift = shift & 63;
    for (std::size_t w = 0; w < src.size(); ++w) {
        if (!src[w]) continue;
        std::size_t t = w + static_cast<std::size_t>(word_shift);
        if (t < target_words) out[t] |= src[w] << bit_shift;
        if (bit_shift && t + 1 < target_words) out[t + 1] |= src[w] >> (64 - bit_shift);
    }
    return out;
}

}  // namespace

CohomologyRing CohomologyRing::build(const GeneticCode& code) {
    if (code.degenerate()) {
        throw ParseError("cannot build a cohomology ring for the degenerate (empty) code");
    }
    CodeValidation validation = validate_code(code);
    if (!validation.valid) {
        std::string msg = "invalid genetic code:";
        for (const auto& p : validation.problems) msg += " " + p + ";";
        throw ParseError(msg);
    }
    CohomologyRing ring;
    ring.code_ = code;
    ring.poset_ = std::make_shared<SubgeePoset>(code);

    // Disjoint subgees S, T always satisfy |S| + |T| <= n - 2 when the code is
    // realizable (both S ∪ {n} and T ∪ {n} are short). A violation would also
    // truncate the seed relations below, so reject it up front.
    const SubgeePoset& poset = *ring.poset_;
    const int n = code.n();
    const int k = poset.max_size();
    for (int s1 = k; 2 * s1 > n - 2; --s1) {
        for (int s2 = std::max(0, n - 2 - s1 + 1); s2 <= s1; ++s2) {
            for (Mask a : poset.of_size(s1)) {
                for (Mask b : poset.of_size(s2)) {
                    if ((a & b) == 0) {
                        throw InconsistencyError("disjoint subgees " + set_to_string(a) + ", " +
                                                 set_to_string(b) + " with |S|+|T| > n-2; code not realizable");
                    }
                }
            }
        }
    }

    ring.build_spaces();
    ring.check_consistency();
    return ring;
}

void CohomologyRing::build_spaces() {
    const SubgeePoset& poset = *poset_;
    const int k = poset.max_size();
    const int top = m();
    spaces_.clear();
    spaces_.reserve(static_cast<std::size_t>(top) + 1);

    std::vector<int> singletons;
    for (Mask s : poset.of_size(1)) singletons.push_back(elements_of(s)[0]);

    for (int d = 0; d <= top; ++d) {
        DegreeSpace space;
        const int smax = std::min(d, k);
        space.size_offset.assign(static_cast<std::size_t>(k) + 1, -1);
        for (int s = smax; s >= 0; --s) {
            space.size_offset[static_cast<std::size_t>(s)] = static_cast<int>(space.monomials.size());
            const auto& level = poset.of_size(s);
            space.monomials.insert(space.monomials.end(), level.begin(), level.end());
        }
        const int span = static_cast<int>(space.monomials.size());
        space.relations = Gf2RowSpace(span);
        spaces_.push_back(std::move(space));
        DegreeSpace& cur = spaces_.back();

        auto index_here = [&](int size, Mask S) {
            const auto& level = poset.of_size(size);
            auto it = std::lower_bound(level.begin(), level.end(), S);
            return cur.size_offset[static_cast<std::size_t>(size)] + static_cast<int>(it - level.begin());
        };

        if (d >= 1) {
            const DegreeSpace& prev = spaces_[static_cast<std::size_t>(d - 1)];
            // R * row: the degree-d order prepends the new size-d block (if
            // any), so the previous coordinates shift by its width.
            const int shift = (d <= k) ? static_cast<int>(poset.of_size(d).size()) : 0;
            const std::size_t words = gf2::zero_row(span).size();
            for (const gf2::Row& row : prev.relations.rows()) {
                cur.relations.insert(shifted_row(row, shift, words));
            }
            // V_i * row for every generator that appears in some subgee.
            for (int i : singletons) {
                for (const gf2::Row& row : prev.relations.rows()) {
                    gf2::Row product = gf2::zero_row(span);
                    bool nonzero = false;
                    gf2::for_each_bit(row, [&](int idx) {
                        Mask S = prev.monomials[static_cast<std::size_t>(idx)];
                        if (contains(S, i)) {
                            // V_i * R^a V_S = R^(a+1) V_S via V_i^2 = R V_i
                            gf2::set_bit(product, index_here(set_size(S), S));
                            nonzero = true;
                        } else {
                            Mask ext = with_element(S, i);
                            if (poset.is_subgee(ext)) {
                                gf2::set_bit(product, index_here(set_size(ext), ext));
                                nonzero = true;
                            }
                        }
                    });
                    if (nonzero) cur.relations.insert(std::move(product));
                }
            }
        }

        // Minimal-degree instances of the vanishing sums: subgee S of size
        // n-2-d contributes sum over disjoint subgees T of R^(d-|T|) V_T.
        const int seed_size = code_.n() - 2 - d;
        if (seed_size >= 1 && seed_size <= k) {
            for (Mask S : poset.of_size(seed_size)) {
                gf2::Row row = gf2::zero_row(span);
                for (Mask T : poset.all()) {
                    if ((T & S) == 0) gf2::set_bit(row, index_here(set_size(T), T));
                }
                cur.relations.insert(std::move(row));
            }
        }
    }

    // phi on degree-m monomials, from the single free column f of the top
    // relation space: a pivot monomial's residue is its row's bit at f.
    const DegreeSpace& top_space = spaces_[static_cast<std::size_t>(top)];
    std::vector<int> free_cols = top_space.relations.free_columns();
    phi_.assign(top_space.monomials.size(), 0);
    if (free_cols.size() == 1) {
        const int f = free_cols[0];
        const auto& pivots = top_space.relations.pivots();
        const auto& rows = top_space.relations.rows();
        for (std::size_t j = 0; j < phi_.size(); ++j) {
            if (static_cast<int>(j) == f) {
                phi_[j] = 1;
                continue;
            }
            auto it = std::lower_bound(pivots.begin(), pivots.end(), static_cast<int>(j));
            if (it != pivots.end() && *it == static_cast<int>(j)) {
                phi_[j] = gf2::get_bit(rows[static_cast<std::size_t>(it - pivots.begin())], f) ? 1 : 0;
            }
        }
    }
}

void CohomologyRing::check_consistency() {
    const int top = m();
    if (quotient_rank(0) != 1) {
        throw InconsistencyError("quotient rank " + std::to_string(quotient_rank(0)) +
                                 " at degree 0; code not realizable or presentation violated");
    }
    if (quotient_rank(top) != 1) {
        throw InconsistencyError("quotient rank " + std::to_string(quotient_rank(top)) +
                                 " at top degree " + std::to_string(top) +
                                 "; code not realizable or presentation violated");
    }
    for (int d = 0; d <= top; ++d) {
        if (quotient_rank(d) != quotient_rank(top - d)) {
            throw InconsistencyError("quotient ranks at degrees " + std::to_string(d) + " and " +
                                     std::to_string(top - d) + " differ; pairing cannot be perfect");
        }
        auto matrix = pairing_matrix(d);
        const int size = quotient_rank(d);
        Gf2RowSpace rank_check(size);
        for (const auto& row : matrix) {
            gf2::Row packed = gf2::zero_row(size);
            for (int j = 0; j < size; ++j) {
                if (row[static_cast<std::size_t>(j)]) gf2::set_bit(packed, j);
            }
            rank_check.insert(std::move(packed));
        }
        if (rank_check.rank() != size) {
            throw InconsistencyError("degenerate cup-product pairing at degree " + std::to_string(d) +
                                     "; code not realizable or presentation violated");
        }
    }
}

const CohomologyRing::DegreeSpace& CohomologyRing::space(int degree) const {
    if (degree < 0 || degree > m()) throw ParseError("degree " + std::to_string(degree) + " out of range");
    return spaces_[static_cast<std::size_t>(degree)];
}

int CohomologyRing::span_size(int degree) const { return static_cast<int>(space(degree).monomials.size()); }

int CohomologyRing::relation_rank(int degree) const { return space(degree).relations.rank(); }

int CohomologyRing::quotient_rank(int degree) const { return span_size(degree) - relation_rank(degree); }

int CohomologyRing::monomial_index(int a, Mask S) const {
    if (a < 0) throw ParseError("negative power of R");
    if (!poset_->is_subgee(S)) throw ParseError(set_to_string(S) + " is not a subgee");
    const int size = set_size(S);
    const DegreeSpace& sp = space(a + size);
    const auto& level = poset_->of_size(size);
    auto it = std::lower_bound(level.begin(), level.end(), S);
    return sp.size_offset[static_cast<std::size_t>(size)] + static_cast<int>(it - level.begin());
}

gf2::Row CohomologyRing::class_of(int a, Mask S) const {
    const int d = a + set_size(S);
    if (d > m()) throw ParseError("degree " + std::to_string(d) + " exceeds top degree " + std::to_string(m()));
    gf2::Row row = gf2::zero_row(span_size(d));
    gf2::set_bit(row, monomial_index(a, S));
    space(d).relations.reduce(row);
    return row;
}

bool CohomologyRing::class_is_zero(int a, Mask S) const { return gf2::is_zero(class_of(a, S)); }

int CohomologyRing::phi_eval(int a, Mask S) const {
    if (a + set_size(S) != m()) {
        throw ParseError("phi is defined on degree " + std::to_string(m()) + " only");
    }
    return phi_[static_cast<std::size_t>(monomial_index(a, S))];
}

std::vector<std::pair<int, Mask>> CohomologyRing::quotient_basis(int degree) const {
    const DegreeSpace& sp = space(degree);
    std::vector<std::pair<int, Mask>> out;
    for (int c : sp.relations.free_columns()) {
        Mask S = sp.monomials[static_cast<std::size_t>(c)];
        out.emplace_back(degree - set_size(S), S);
    }
    return out;
}

std::vector<std::vector<std::uint8_t>> CohomologyRing::pairing_matrix(int d) const {
    const auto left = quotient_basis(d);
    const auto right = quotient_basis(m() - d);
    const SubgeePoset& poset = *poset_;
    std::vector<std::vector<std::uint8_t>> matrix(left.size(),
                                                  std::vector<std::uint8_t>(right.size(), 0));
    const std::int64_t rows = static_cast<std::int64_t>(left.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < rows; ++i) {
        const auto& [a, S] = left[static_cast<std::size_t>(i)];
        for (std::size_t j = 0; j < right.size(); ++j) {
            const auto& [b, T] = right[j];
            Mask u = S | T;
            if (!poset.is_subgee(u)) continue;
            // R^a V_S * R^b V_T = R^(a+b+|S∩T|) V_(S∪T), degree m.
            matrix[static_cast<std::size_t>(i)][j] =
                phi_[static_cast<std::size_t>(monomial_index(m() - set_size(u), u))];
        }
    }
    return matrix;
}

int CohomologyRing::sw_height() const {
    for (int h = m(); h >= 1; --h) {
        if (!class_is_zero(h, 0)) return h;
    }
    return 0;
}

std::string CohomologyRing::diagnostics_json() const {
    nlohmann::ordered_json out;
    for (int d = 0; d <= m(); ++d) {
        out[std::to_string(d)] = {{"span_size", span_size(d)},
                                  {"rank", relation_rank(d)},
                                  {"quotient_rank", quotient_rank(d)}};
    }
    return out.dump();
}

namespace ref {
std::vector<std::vector<std::uint8_t>> pairing_matrix(const CohomologyRing& ring, int d) {
    const auto left = ring.quotient_basis(d);
    const auto right = ring.quotient_basis(ring.m() - d);
    std::vector<std::vector<std::uint8_t>> matrix(left.size(),
                                                  std::vector<std::uint8_t>(right.size(), 0));
    for (std::size_t i = 0; i < left.size(); ++i) {
        for (std::size_t j = 0; j < right.size(); ++j) {
            const auto& [a, S] = left[i];
            const auto& [b, T] = right[j];
            Mask u = S | T;
            if (!ring.poset().is_subgee(u)) continue;
            matrix[i][j] = static_cast<std::uint8_t>(ring.phi_eval(ring.m() - set_size(u), u));
        }
    }
    return matrix;
}
}  // namespace ref

}  // namespace polyspace
