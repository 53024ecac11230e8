#include "polyspace/classify.hpp"

#include <algorithm>

#include "json.hpp"
#include "polyspace/errors.hpp"
#include "polyspace/formulas.hpp"
#include "polyspace/quasieq.hpp"

namespace polyspace {

const char* to_string(Tidiness t) {
    switch (t) {
        case Tidiness::Tidy: return "Tidy";
        case Tidiness::NonTidy: return "NonTidy";
        default: return "Unknown";
    }
}

const char* to_string(BuTop b) {
    switch (b) {
        case BuTop::Holds: return "Holds";
        case BuTop::Fails: return "Fails";
        default: return "Unknown";
    }
}

namespace {

struct ShapeInfo {
    bool sphere = false;           // <{n}>
    std::optional<int> pair_b;     // <{b,n}>
    std::vector<int> big_gee;      // two-gene <{g_1..g_k,n},{b,n}>, k >= 2
    std::optional<int> second_b;   // the b of the two-gene shape
    std::optional<int> quasieq_r;  // gee is the top interval {n-e..n-1}
    int torus_family = 0;          // 1..4 when the code matches that pattern
};

ShapeInfo match_shapes(const GeneticCode& code) {
    ShapeInfo info;
    const int n = code.n();
    const auto gees = code.gees();
    if (code.monogenic()) {
        const Mask gee = gees[0];
        const int e = set_size(gee);
        if (e == 0) info.sphere = true;
        if (e == 1) info.pair_b = elements_of(gee)[0];
        Mask top_interval = 0;
        for (int i = n - e; i <= n - 1; ++i) top_interval = with_element(top_interval, i);
        if (gee == top_interval && n - 2 * (e + 1) >= 1) info.quasieq_r = n - 2 * (e + 1);

        if (n >= 6) {
            Mask base = full_mask(n - 5);
            if (gee == (full_mask(n - 4))) info.torus_family = 1;
            if (gee == with_element(base, n - 3)) info.torus_family = 2;
            if (gee == with_element(base, n - 2)) info.torus_family = 3;
            if (gee == with_element(base, n - 1)) info.torus_family = 4;
        }
    } else if (gees.size() == 2) {
        // canonical order puts the singleton gee first
        if (set_size(gees[0]) == 1 && set_size(gees[1]) >= 2) {
            const int b = elements_of(gees[0])[0];
            const auto big = elements_of(gees[1]);
            if (big.back() < b) {
                info.big_gee = big;
                info.second_b = b;
            }
        }
    }
    return info;
}

void intersect_interval(Interval& target, Interval refinement, const std::string& rule,
                        AnalysisReport& report) {
    Interval next{std::max(target.lo, refinement.lo), std::min(target.hi, refinement.hi)};
    if (next.lo > next.hi) {
        report.consistent = false;
        report.consistency_notes.push_back("rule '" + rule + "' contradicts established bounds");
        return;
    }
    target = next;
}

void run_formula_checks(const CohomologyRing& ring, const ShapeInfo& shape, AnalysisReport& report) {
    const GeneticCode& code = ring.code();
    const int n = code.n();
    const int m = code.m();
    if (code.monogenic()) {
        const std::vector<int> gee = elements_of(code.gees()[0]);
        bool ok = true;
        for (Mask J : ring.poset().all()) {
            if (davis_phi(gee, n, J) != ring.phi_eval(m - set_size(J), J)) {
                ok = false;
                report.consistent = false;
                report.consistency_notes.push_back("closed form and engine disagree at V_" + set_to_string(J));
            }
        }
        if (ok) report.provenance.push_back("davis-closed-form-checked");
        if (shape.quasieq_r) {
            if (kamiyama_height(n, *shape.quasieq_r) != report.height) {
                report.consistent = false;
                report.consistency_notes.push_back("quasi-equilateral height formula disagrees with engine");
            } else {
                report.provenance.push_back("kamiyama-height-checked");
            }
        }
    }
    if (!shape.big_gee.empty()) {
        const int b = *shape.second_b;
        bool ok = extended_rm(shape.big_gee, b, n) == ring.phi_eval(m, 0);
        for (Mask P : ring.poset().all()) {
            if (P == 0) continue;
            if (!dominated_by(P, mask_of(shape.big_gee))) continue;
            if (phi_two_gene(shape.big_gee, b, n, P) != ring.phi_eval(m - set_size(P), P)) ok = false;
        }
        if (ok) {
            report.provenance.push_back("two-gene-top-power-checked");
        } else {
            report.consistent = false;
            report.consistency_notes.push_back("two-gene closed forms disagree with engine");
        }
    }
}

AnalysisReport classify_code(const GeneticCode& code, std::optional<LengthVector> lengths) {
    AnalysisReport report;
    report.n = code.n();
    report.code = code;
    report.input_lengths = std::move(lengths);
    if (code.degenerate()) {
        report.empty_moduli = true;
        report.annotations.push_back("no closed polygon: side n outweighs the rest");
        return report;
    }
    report.m = code.m();
    const int m = report.m;

    CohomologyRing ring = CohomologyRing::build(code);
    const int h = ring.sw_height();
    report.height = h;
    report.provenance.push_back("engine-height");

    const ShapeInfo shape = match_shapes(code);
    run_formula_checks(ring, shape, report);

    // Chain bounds: coind <= ht <= ind <= m, coind >= m - (smallest gee),
    // and the two height endpoints that pin the index.
    const int l = code.smallest_gee_size();
    report.coindex = Interval{std::max(0, m - l), h};
    report.provenance.push_back("chain-inequality");
    report.provenance.push_back("coindex-lower-bound-from-smallest-gee");
    if (report.coindex.lo > report.coindex.hi) {
        report.consistent = false;
        report.consistency_notes.push_back("coindex lower bound exceeds the height; code not realizable");
        report.coindex = Interval{0, h};
    }
    if (h == m) {
        report.index = Interval{m, m};
        report.provenance.push_back("full-height-forces-full-index");
    } else if (h == m - 1) {
        report.index = Interval{m - 1, m - 1};
        report.provenance.push_back("height-m-1-forces-index-m-1");
    } else {
        report.index = Interval{h, m - 1};
        report.provenance.push_back("index-below-m-when-height-below-m");
    }

    // Family refinements.
    if (shape.sphere) {
        intersect_interval(report.index, Interval{m, m}, "sphere-code", report);
        intersect_interval(report.coindex, Interval{m, m}, "sphere-code", report);
        report.provenance.push_back("sphere-code");
    }
    if (shape.pair_b) {
        const int b = *shape.pair_b;
        if (report.n == 5) {
            // genus-b orientable surface
            const int ind = (b % 2 == 1) ? 1 : 2;
            intersect_interval(report.index, Interval{ind, ind}, "genus-surface-family", report);
            intersect_interval(report.coindex, Interval{1, 1}, "genus-surface-family", report);
            report.provenance.push_back("genus-surface-family");
        } else if (report.n >= 7) {
            const int ind = (b % 2 == 1) ? report.n - 4 : report.n - 3;
            intersect_interval(report.index, Interval{ind, ind}, "connected-sum-family", report);
            intersect_interval(report.coindex, Interval{report.n - 4, report.n - 4}, "connected-sum-family",
                               report);
            report.provenance.push_back("connected-sum-family");
        }
        // n == 6 intentionally left to the chain bounds.
    }
    if (shape.torus_family) {
        const int i = shape.torus_family;
        const int ind = (i % 2 == 1) ? 1 : 2;
        intersect_interval(report.index, Interval{ind, ind}, "torus-times-surface-family", report);
        intersect_interval(report.coindex, Interval{1, 1}, "torus-times-surface-family", report);
        report.provenance.push_back("torus-times-surface-family");
    }
    if (shape.quasieq_r) {
        if (auto facts = small_r_bounds(report.n, *shape.quasieq_r)) {
            if (facts->height != h) {
                report.consistent = false;
                report.consistency_notes.push_back("power-of-two height fact disagrees with engine");
            }
            intersect_interval(report.coindex, facts->coindex, "power-of-two-quasi-equilateral", report);
            if (facts->index) {
                intersect_interval(report.index, Interval{*facts->index, *facts->index},
                                   "power-of-two-quasi-equilateral", report);
            }
            report.provenance.push_back("power-of-two-quasi-equilateral");
        }
    }
    if (!shape.big_gee.empty() && extended_rm(shape.big_gee, *shape.second_b, report.n) == 0) {
        report.provenance.push_back("two-gene-parity-tidiness");
    }

    // Sanity against the chain inequality after refinements.
    if (report.coindex.hi > h || report.index.lo < h) {
        report.consistent = false;
        report.consistency_notes.push_back("refined intervals violate the chain inequality");
    }

    if (report.coindex.lo == report.index.hi) {
        report.tidiness = Tidiness::Tidy;
        report.provenance.push_back("tidy-by-collapse");
    } else if (report.coindex.hi < report.index.lo) {
        report.tidiness = Tidiness::NonTidy;
        report.provenance.push_back("nontidy-by-gap");
    }

    report.bu_top = (h == m) ? BuTop::Holds : BuTop::Fails;
    report.bu_max_guaranteed = report.index.lo;
    report.provenance.push_back("bu-top-from-height");

    const int conjectured = m - l;
    if (report.coindex.contains(conjectured)) report.coindex_conjecture = conjectured;

    report.annotations = topology_annotation(code);
    return report;
}

}  // namespace

std::vector<std::string> topology_annotation(const GeneticCode& code) {
    std::vector<std::string> out;
    if (code.degenerate()) return out;
    const int n = code.n();
    const int m = code.m();
    const auto gees = code.gees();
    if (code.monogenic() && set_size(gees[0]) == 0) {
        out.push_back("M ≅ S^" + std::to_string(m) + ", quotient ≅ RP^" + std::to_string(m));
        return out;
    }
    if (code.monogenic() && set_size(gees[0]) == 1) {
        const int b = elements_of(gees[0])[0];
        if (n == 5) {
            out.push_back("M ≅ genus-" + std::to_string(b) + " orientable surface");
            return out;
        }
        if (n >= 6) {
            out.push_back("M ≅ #_" + std::to_string(b) + "(S^1 × S^" + std::to_string(m - 1) + ")");
            if (b == n - 1) {
                out.push_back("quotient ≅ #_" + std::to_string(n) + " RP^" + std::to_string(m));
            }
        }
    }
    return out;
}

AnalysisReport classify(const GeneticCode& code) { return classify_code(code, std::nullopt); }

AnalysisReport classify(const LengthVector& v) {
    GeneticCode code = genetic_code(v);  // throws NonGenericError when not generic
    return classify_code(code, v);
}

namespace {

std::string interval_text(const Interval& i) {
    if (i.exact()) return std::to_string(i.lo);
    return std::to_string(i.lo) + ".." + std::to_string(i.hi);
}

}  // namespace

std::string render_text(const AnalysisReport& r) {
    std::string out;
    if (r.input_lengths) out += "lengths: " + r.input_lengths->to_string() + "\n";
    out += "n=" + std::to_string(r.n);
    if (r.empty_moduli) {
        out += "  moduli space: empty (the longest side is long)\n";
        return out;
    }
    out += "  m=" + std::to_string(r.m) + "  genetic code: " + r.code.to_string() + "\n";
    out += "height: ht=" + std::to_string(r.height) + "\n";
    if (r.tidiness == Tidiness::Tidy) {
        out += "tidy: ht=ind=coind=" + std::to_string(r.height) + "\n";
    } else if (r.tidiness == Tidiness::NonTidy && r.coindex.exact() && r.index.exact()) {
        out += "non-tidy: coind=" + std::to_string(r.coindex.lo) + " < ind=" + std::to_string(r.index.lo) +
               "\n";
    }
    out += "index: " + interval_text(r.index) + "  coindex: " + interval_text(r.coindex) + "\n";
    out += "tidiness: " + std::string(to_string(r.tidiness)) + "\n";
    out += "BU-triple at d=m: " + std::string(to_string(r.bu_top)) +
           "; guaranteed for every d <= " + std::to_string(r.bu_max_guaranteed) + "\n";
    if (r.coindex_conjecture) {
        out += "coindex conjecture (smallest-gee bound tight): " + std::to_string(*r.coindex_conjecture) +
               " [CONJECTURE, not asserted]\n";
    }
    for (const auto& a : r.annotations) out += "note: " + a + "\n";
    out += "provenance:";
    for (const auto& p : r.provenance) out += " " + p;
    out += "\n";
    if (!r.consistent) {
        out += "CONSISTENCY FAILURE:";
        for (const auto& c : r.consistency_notes) out += " " + c + ";";
        out += "\n";
    }
    return out;
}

std::string render_json(const AnalysisReport& r) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    if (r.empty_moduli) {
        j["status"] = "empty";
        j["genetic_code"] = "";
        if (r.input_lengths) j["lengths"] = r.input_lengths->to_string();
        return j.dump();
    }
    j["status"] = r.consistent ? "ok" : "inconsistent";
    j["m"] = r.m;
    j["genetic_code"] = r.code.to_string();
    if (r.input_lengths) j["lengths"] = r.input_lengths->to_string();
    j["height"] = r.height;
    j["index"] = {{"lo", r.index.lo}, {"hi", r.index.hi}};
    j["coindex"] = {{"lo", r.coindex.lo}, {"hi", r.coindex.hi}};
    j["tidiness"] = to_string(r.tidiness);
    j["bu_top"] = to_string(r.bu_top);
    j["bu_max_guaranteed"] = r.bu_max_guaranteed;
    j["annotations"] = r.annotations;
    j["provenance"] = r.provenance;
    if (r.coindex_conjecture) {
        j["conjecture"] = {{"coindex", *r.coindex_conjecture}, {"label", "CONJECTURE"}};
    } else {
        j["conjecture"] = nullptr;
    }
    if (!r.consistent) j["consistency_notes"] = r.consistency_notes;
    return j.dump();
}

}  // namespace polyspace
