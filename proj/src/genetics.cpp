#include "polyspace/genetics.hpp"

#include <algorithm>
#include <cctype>

#include "polyspace/errors.hpp"

namespace polyspace {

namespace {

bool size_mask_less(Mask a, Mask b) {
    int sa = set_size(a), sb = set_size(b);
    if (sa != sb) return sa < sb;
    return a < b;
}

}  // namespace

GeneticCode::GeneticCode(int n, std::vector<Mask> genes) : n_(n), genes_(std::move(genes)) {
    std::sort(genes_.begin(), genes_.end(), size_mask_less);
    genes_.erase(std::unique(genes_.begin(), genes_.end()), genes_.end());
}

std::vector<Mask> GeneticCode::gees() const {
    std::vector<Mask> out;
    out.reserve(genes_.size());
    for (Mask g : genes_) out.push_back(without_element(g, n_));
    return out;
}

int GeneticCode::smallest_gee_size() const {
    int best = n_;  // degenerate code never queried for this
    for (Mask g : genes_) best = std::min(best, set_size(g) - 1);
    return best;
}

int GeneticCode::largest_gee_size() const {
    int best = 0;
    for (Mask g : genes_) best = std::max(best, set_size(g) - 1);
    return best;
}

std::string GeneticCode::to_string() const {
    if (genes_.empty()) return "<empty>";
    std::string out;
    for (std::size_t i = 0; i < genes_.size(); ++i) {
        if (i) out += ',';
        out += set_to_string(genes_[i]);
    }
    return out;
}

CodeValidation validate_code(const GeneticCode& code) {
    CodeValidation result;
    auto fail = [&](std::string msg) {
        result.valid = false;
        result.problems.push_back(std::move(msg));
    };
    const int n = code.n();
    if (n < 3) fail("n must be at least 3, got " + std::to_string(n));
    if (code.genes().empty()) fail("code has no genes");
    for (Mask g : code.genes()) {
        if (g == 0) {
            fail("empty gene");
            continue;
        }
        if (n >= 1 && n <= 32 && !contains(g, n)) fail("gene " + set_to_string(g) + " does not contain n=" + std::to_string(n));
        if (n >= 1 && n <= 31 && (g & ~full_mask(n)) != 0) fail("gene " + set_to_string(g) + " has elements above n=" + std::to_string(n));
    }
    const auto& genes = code.genes();
    for (std::size_t i = 0; i < genes.size(); ++i) {
        for (std::size_t j = 0; j < genes.size(); ++j) {
            if (i != j && dominated_by(genes[i], genes[j])) {
                fail("not an antichain: " + set_to_string(genes[i]) + " <= " + set_to_string(genes[j]));
            }
        }
    }
    return result;
}

GeneticCode parse_code(const std::string& text, std::optional<int> n_override) {
    std::vector<Mask> genes;
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    int max_element = 0;
    skip_ws();
    if (i >= text.size()) throw ParseError("empty genetic code");
    while (i < text.size()) {
        skip_ws();
        if (i >= text.size()) break;
        if (text[i] != '{') throw ParseError("expected '{' at position " + std::to_string(i) + " in code text");
        ++i;
        Mask gene = 0;
        while (true) {
            skip_ws();
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (start == i) throw ParseError("expected an integer inside gene at position " + std::to_string(i));
            long value = std::stol(text.substr(start, i - start));
            if (value < 1 || value > kMaxSides) {
                throw ParseError("gene element " + std::to_string(value) + " out of range [1," +
                                 std::to_string(kMaxSides) + "]");
            }
            max_element = std::max(max_element, static_cast<int>(value));
            gene = with_element(gene, static_cast<int>(value));
            skip_ws();
            if (i < text.size() && text[i] == ',') { ++i; continue; }
            if (i < text.size() && text[i] == '}') { ++i; break; }
            throw ParseError("expected ',' or '}' inside gene at position " + std::to_string(i));
        }
        genes.push_back(gene);
        skip_ws();
        if (i < text.size()) {
            if (text[i] != ',') throw ParseError("expected ',' between genes at position " + std::to_string(i));
            ++i;
        }
    }
    const int n = n_override.value_or(max_element);
    if (n > kMaxSides) throw ParseError("n=" + std::to_string(n) + " exceeds the cap of " + std::to_string(kMaxSides));
    GeneticCode code(n, std::move(genes));
    CodeValidation validation = validate_code(code);
    if (!validation.valid) {
        std::string msg = "invalid genetic code:";
        for (const auto& p : validation.problems) msg += " " + p + ";";
        throw ParseError(msg);
    }
    return code;
}

SubgeePoset::SubgeePoset(const GeneticCode& code) : code_(code), n_(code.n()) {
    const std::vector<Mask> gees = code.gees();
    auto dominated_by_some_gee = [&](Mask S) {
        for (Mask g : gees)
            if (dominated_by(S, g)) return true;
        return false;
    };
    const int universe = n_ - 1;
    member_bits_.assign((std::size_t{1} << universe) / 64 + 1, 0);
    auto mark = [&](Mask S) { member_bits_[S >> 6] |= std::uint64_t{1} << (S & 63); };

    // Subgees are down-closed, so grow by single-element extensions.
    by_size_.assign(1, {Mask{0}});
    if (!code.degenerate()) mark(0);
    std::vector<Mask> frontier = {0};
    if (code.degenerate()) frontier.clear();
    while (!frontier.empty()) {
        std::vector<Mask> next;
        for (Mask S : frontier) {
            for (int s = 1; s <= universe; ++s) {
                if (contains(S, s)) continue;
                Mask cand = with_element(S, s);
                if (is_subgee(cand)) continue;  // already recorded
                if (dominated_by_some_gee(cand)) {
                    mark(cand);
                    next.push_back(cand);
                }
            }
        }
        std::sort(next.begin(), next.end());
        if (!next.empty()) by_size_.push_back(next);
        frontier = std::move(next);
    }
    max_size_ = static_cast<int>(by_size_.size()) - 1;
    if (code.degenerate()) {
        by_size_.clear();
        max_size_ = -1;
    }
    for (const auto& level : by_size_) all_.insert(all_.end(), level.begin(), level.end());
}

bool SubgeePoset::is_subgee(Mask S) const {
    if (code_.degenerate()) return false;
    return (member_bits_[S >> 6] >> (S & 63)) & 1;
}

const std::vector<Mask>& SubgeePoset::of_size(int i) const {
    static const std::vector<Mask> empty;
    if (i < 0 || i > max_size_) return empty;
    return by_size_[static_cast<std::size_t>(i)];
}

Mask SubgeePoset::support(Mask P) const {
    if (!is_subgee(P)) throw ParseError("support requested for a non-subgee " + set_to_string(P));
    Mask out = 0;
    for (int s = 1; s <= n_ - 1; ++s) {
        if (!contains(P, s) && is_subgee(with_element(P, s))) out = with_element(out, s);
    }
    return out;
}

std::vector<Mask> SubgeePoset::size_filtered(int t, Mask P, int s) const {
    std::vector<Mask> out;
    if (t < 0 || t > max_size_) return out;
    for (Mask S : of_size(t)) {
        if ((S & P) == P && !contains(S, s)) out.push_back(S);
    }
    return out;
}

std::vector<int> theta(Mask J, Mask gee) {
    std::vector<int> g = elements_of(gee);
    const int k = static_cast<int>(g.size());
    if (J != 0 && (k == 0 || elements_of(J).back() > g.back())) {
        throw ParseError("theta: element of " + set_to_string(J) + " exceeds the gee top " + set_to_string(gee));
    }
    std::vector<int> counts(static_cast<std::size_t>(k), 0);
    int prev = 0;
    for (int i = 0; i < k; ++i) {
        for (int j = prev + 1; j <= g[static_cast<std::size_t>(i)]; ++j) {
            if (contains(J, j)) ++counts[static_cast<std::size_t>(i)];
        }
        prev = g[static_cast<std::size_t>(i)];
    }
    return counts;
}

bool in_S_k(const std::vector<int>& b) {
    const int k = static_cast<int>(b.size());
    int suffix = 0;
    for (int i = 1; i <= k; ++i) {
        int entry = b[static_cast<std::size_t>(k - i)];
        if (entry < 0) throw ParseError("in_S_k: negative entry");
        suffix += entry;
        if (suffix > i) return false;
    }
    return true;
}

}  // namespace polyspace
