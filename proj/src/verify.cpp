#include "polyspace/verify.hpp"

#include <algorithm>

#include "polyspace/errors.hpp"
#include "polyspace/formulas.hpp"
#include "polyspace/lengths.hpp"
#include "polyspace/quasieq.hpp"

namespace polyspace {

std::vector<std::pair<int, int>> same_block_intervals(const GeneticCode& code) {
    std::vector<std::pair<int, int>> blocks;
    const auto gees = code.gees();
    std::vector<int> big;
    int b_extra = 0;
    if (code.monogenic()) {
        big = elements_of(gees[0]);
    } else if (gees.size() == 2 && set_size(gees[0]) == 1 && set_size(gees[1]) >= 2) {
        big = elements_of(gees[1]);
        b_extra = elements_of(gees[0])[0];
        if (big.back() >= b_extra) return {};
    } else {
        return {};
    }
    int prev = 0;
    for (int g : big) {
        blocks.emplace_back(prev, g);
        prev = g;
    }
    if (b_extra > prev) blocks.emplace_back(prev, b_extra);
    return blocks;
}

std::vector<std::string> structural_failures(const CohomologyRing& ring) {
    std::vector<std::string> failures;
    const SubgeePoset& poset = ring.poset();
    const GeneticCode& code = ring.code();
    const int m = ring.m();
    const int k = poset.max_size();

    if (ring.quotient_rank(0) != 1) failures.push_back("quotient rank at degree 0 is not 1");
    if (ring.quotient_rank(m) != 1) failures.push_back("quotient rank at top degree is not 1");
    for (int d = 0; d <= m; ++d) {
        auto matrix = ring.pairing_matrix(d);
        const int size = ring.quotient_rank(d);
        if (static_cast<int>(matrix.size()) != size ||
            (size > 0 && static_cast<int>(matrix[0].size()) != ring.quotient_rank(m - d))) {
            failures.push_back("pairing matrix at degree " + std::to_string(d) + " is not square");
            continue;
        }
        Gf2RowSpace rank_check(size);
        for (const auto& row : matrix) {
            gf2::Row packed = gf2::zero_row(size);
            for (int j = 0; j < size; ++j) {
                if (row[static_cast<std::size_t>(j)]) gf2::set_bit(packed, j);
            }
            rank_check.insert(std::move(packed));
        }
        if (rank_check.rank() != size) {
            failures.push_back("pairing at degree " + std::to_string(d) + " is degenerate");
        }
    }

    // Cache the canonical top-degree representative of every monomial.
    const int top_span = ring.span_size(m);
    std::vector<gf2::Row> reduced(static_cast<std::size_t>(top_span));
    for (Mask S : poset.all()) {
        const int idx = ring.monomial_index(m - set_size(S), S);
        reduced[static_cast<std::size_t>(idx)] = ring.class_of(m - set_size(S), S);
    }
    auto top_class = [&](Mask S) -> const gf2::Row& {
        return reduced[static_cast<std::size_t>(ring.monomial_index(m - set_size(S), S))];
    };

    // phi of every maximum-cardinality subgee is 1.
    for (Mask J : poset.of_size(k)) {
        if (ring.phi_eval(m - k, J) != 1) {
            failures.push_back("phi(R^(m-k) V_" + set_to_string(J) + ") != 1");
        }
    }

    // Equal top classes across maximum-cardinality subgees.
    const auto& top_level = poset.of_size(k);
    for (std::size_t i = 1; i < top_level.size(); ++i) {
        if (top_class(top_level[i]) != top_class(top_level[0])) {
            failures.push_back("R^(m-k) V_" + set_to_string(top_level[i]) + " differs from V_" +
                               set_to_string(top_level[0]));
        }
    }

    // Key expansion: R^(m-|P|) V_P = sum over supersets of P avoiding s.
    for (Mask P : poset.all()) {
        if (P == 0) continue;
        for (int s : elements_of(poset.support(P))) {
            gf2::Row rhs = gf2::zero_row(top_span);
            for (int t = set_size(P) + 1; t <= k; ++t) {
                for (Mask S : poset.size_filtered(t, P, s)) gf2::xor_into(rhs, top_class(S));
            }
            if (rhs != top_class(P)) {
                failures.push_back("expansion of R^(m-|P|) V_" + set_to_string(P) + " fails at s=" +
                                   std::to_string(s));
            }
        }
    }

    // Same-block equality.
    const auto blocks = same_block_intervals(code);
    auto block_of = [&](int s) {
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            if (blocks[i].first < s && s <= blocks[i].second) return static_cast<int>(i);
        }
        return -1;
    };
    if (!blocks.empty()) {
        for (Mask P : poset.all()) {
            if (set_size(P) > k - 1) continue;
            const auto supp = elements_of(poset.support(P));
            for (std::size_t i = 0; i < supp.size(); ++i) {
                for (std::size_t j = i + 1; j < supp.size(); ++j) {
                    if (block_of(supp[i]) != block_of(supp[j])) continue;
                    if (top_class(with_element(P, supp[i])) != top_class(with_element(P, supp[j]))) {
                        failures.push_back("same-block classes differ above " + set_to_string(P) + " at " +
                                           std::to_string(supp[i]) + "," + std::to_string(supp[j]));
                    }
                }
            }
        }
    }

    // E_P: the sum over subgees disjoint from a nonempty P vanishes.
    for (Mask P : poset.all()) {
        if (P == 0) continue;
        gf2::Row sum = gf2::zero_row(top_span);
        for (Mask T : poset.all()) {
            if ((T & P) == 0) gf2::xor_into(sum, top_class(T));
        }
        if (!gf2::is_zero(sum)) failures.push_back("E_" + set_to_string(P) + " does not vanish");
    }

    // R^h = 0 implies R^(h+1) = 0.
    bool vanished = false;
    for (int h = 0; h <= m; ++h) {
        const bool zero = ring.class_is_zero(h, 0);
        if (vanished && !zero) {
            failures.push_back("R^" + std::to_string(h) + " nonzero after a vanishing power");
        }
        vanished = vanished || zero;
    }
    return failures;
}

namespace {

void check_code(const CohomologyRing& ring, SweepResult& result) {
    const GeneticCode& code = ring.code();
    const int n = code.n();
    const int m = code.m();
    for (const std::string& f : structural_failures(ring)) {
        result.mismatches.push_back({code.to_string(), f});
    }
    if (code.monogenic()) {
        const std::vector<int> gee = elements_of(code.gees()[0]);
        for (Mask J : ring.poset().all()) {
            ++result.values_checked;
            if (davis_phi(gee, n, J) != ring.phi_eval(m - set_size(J), J)) {
                result.mismatches.push_back({code.to_string(), "davis_phi mismatch at " + set_to_string(J)});
            }
        }
    }
    const auto gees = code.gees();
    if (gees.size() == 2 && set_size(gees[0]) == 1 && set_size(gees[1]) >= 2) {
        const int b = elements_of(gees[0])[0];
        const auto big = elements_of(gees[1]);
        if (big.back() < b) {
            ++result.values_checked;
            if (extended_rm(big, b, n) != ring.phi_eval(m, 0)) {
                result.mismatches.push_back({code.to_string(), "extended R^m formula mismatch"});
            }
            for (Mask P : ring.poset().all()) {
                if (P == 0 || !dominated_by(P, gees[1])) continue;
                ++result.values_checked;
                if (phi_two_gene(big, b, n, P) != ring.phi_eval(m - set_size(P), P)) {
                    result.mismatches.push_back(
                        {code.to_string(), "two-gene phi mismatch at " + set_to_string(P)});
                }
            }
        }
    }
    ++result.codes_checked;
}

// Runs checks over a code list, fanning out across workers; per-code results
// are merged in list order so the output is deterministic.
SweepResult run_over_codes(const std::string& family, const std::vector<GeneticCode>& codes) {
    SweepResult result;
    result.family = family;
    std::vector<SweepResult> partial(codes.size());
    std::vector<std::uint8_t> rejected(codes.size(), 0);
    const std::int64_t count = static_cast<std::int64_t>(codes.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) {
        try {
            CohomologyRing ring = CohomologyRing::build(codes[static_cast<std::size_t>(i)]);
            check_code(ring, partial[static_cast<std::size_t>(i)]);
        } catch (const InconsistencyError&) {
            rejected[static_cast<std::size_t>(i)] = 1;
        }
    }
    for (std::size_t i = 0; i < codes.size(); ++i) {
        result.codes_checked += partial[i].codes_checked;
        result.values_checked += partial[i].values_checked;
        result.codes_rejected += rejected[i];
        for (auto& issue : partial[i].mismatches) result.mismatches.push_back(std::move(issue));
    }
    return result;
}

}  // namespace

std::int64_t default_realize_bound(int n) {
    // Saturation study over n <= 9: the set of realized codes stops growing
    // well before entries reach n+3 (see tests); n+5 adds headroom.
    return n + 5;
}

SweepResult sweep_monogenic(int max_n, std::int64_t realize_bound) {
    std::vector<GeneticCode> codes;
    for (int n = 4; n <= max_n; ++n) {
        const std::int64_t bound = realize_bound > 0 ? realize_bound : default_realize_bound(n);
        for (auto& [code, witness] : realized_codes(n, bound)) {
            if (code.monogenic()) codes.push_back(code);
        }
    }
    return run_over_codes("monogenic", codes);
}

SweepResult sweep_two_gene(int max_n) {
    std::vector<GeneticCode> codes;
    for (int n = 5; n <= max_n; ++n) {
        const Mask limit = full_mask(n - 1);
        for (Mask gee = 0; gee <= limit; ++gee) {
            if (set_size(gee) < 2) continue;
            const int top = elements_of(gee).back();
            for (int b = top + 1; b <= n - 1; ++b) {
                codes.push_back(
                    GeneticCode(n, {with_element(gee, n), with_element(with_element(Mask{0}, b), n)}));
            }
        }
    }
    return run_over_codes("two-gene", codes);
}

SweepResult sweep_quasieq(int max_n) {
    SweepResult result;
    result.family = "quasieq";
    std::vector<std::pair<int, int>> params;
    for (int n = 4; n <= max_n; ++n) {
        for (int r = n - 2; r >= 1; r -= 2) params.emplace_back(n, r);
    }
    std::vector<SweepResult> partial(params.size());
    const std::int64_t count = static_cast<std::int64_t>(params.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) {
        auto [n, r] = params[static_cast<std::size_t>(i)];
        SweepResult& local = partial[static_cast<std::size_t>(i)];
        GeneticCode code = genetic_code_quasieq(n, r);
        CohomologyRing ring = CohomologyRing::build(code);
        check_code(ring, local);
        ++local.values_checked;
        if (kamiyama_height(n, r) != ring.sw_height()) {
            local.mismatches.push_back({code.to_string(), "height formula disagrees with the engine"});
        }
        if (n <= 16) {
            std::vector<std::int64_t> lengths(static_cast<std::size_t>(n - 1), 1);
            lengths.push_back(r);
            ++local.values_checked;
            if (genetic_code(make_length_vector(std::move(lengths))) != code) {
                local.mismatches.push_back({code.to_string(), "code of (1,...,1,r) differs"});
            }
        }
    }
    for (auto& p : partial) {
        result.codes_checked += p.codes_checked;
        result.values_checked += p.values_checked;
        for (auto& issue : p.mismatches) result.mismatches.push_back(std::move(issue));
    }
    return result;
}

}  // namespace polyspace
