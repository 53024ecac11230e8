#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyspace/cohomology.hpp"
#include "polyspace/genetics.hpp"
#include "polyspace/interval.hpp"
#include "polyspace/lengths.hpp"

namespace polyspace {

enum class Tidiness { Tidy, NonTidy, Unknown };
enum class BuTop { Holds, Fails, Unknown };

const char* to_string(Tidiness t);
const char* to_string(BuTop b);

struct AnalysisReport {
    bool empty_moduli = false;  // {n} long: no closed polygon exists
    int n = 0;
    int m = -1;
    GeneticCode code;
    std::optional<LengthVector> input_lengths;

    int height = -1;
    Interval index;
    Interval coindex;
    Tidiness tidiness = Tidiness::Unknown;
    BuTop bu_top = BuTop::Unknown;
    int bu_max_guaranteed = -1;

    // Conjectured exact coindex (the smallest-gee lower bound, believed
    // tight); only reported, never asserted.
    std::optional<int> coindex_conjecture;

    std::vector<std::string> annotations;
    std::vector<std::string> provenance;

    bool consistent = true;
    std::vector<std::string> consistency_notes;
};

// Full pipeline: genetic code (for a length vector input), cohomology ring,
// height, closed-form agreement checks, chain bounds, special-family
// refinements, Borsuk-Ulam verdicts. Formula/engine disagreement or
// contradictory refinements mark the report inconsistent.
AnalysisReport classify(const GeneticCode& code);
AnalysisReport classify(const LengthVector& v);

// Known homeomorphism types for the matched families; empty otherwise.
std::vector<std::string> topology_annotation(const GeneticCode& code);

std::string render_text(const AnalysisReport& report);
std::string render_json(const AnalysisReport& report);  // fixed field order

}  // namespace polyspace
