#include "polyspace/lengths.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <limits>
#include <unordered_map>

#include "polyspace/errors.hpp"

namespace polyspace {

namespace {

constexpr std::int64_t kMaxEntry = std::int64_t{1} << 40;  // keeps all subset sums in 64 bits

// Split-table subset sums: sum(I) = lo[I & loMask] + hi[I >> loBits].
struct SumTables {
    int lo_bits;
    Mask lo_mask;
    std::vector<std::int64_t> lo, hi;

    explicit SumTables(const std::vector<std::int64_t>& lengths, int bits) {
        lo_bits = std::min(bits, 12);
        lo_mask = full_mask(lo_bits);
        int hi_bits = bits - lo_bits;
        lo.assign(std::size_t{1} << lo_bits, 0);
        hi.assign(std::size_t{1} << hi_bits, 0);
        for (Mask m = 1; m < lo.size(); ++m) {
            int bit = std::countr_zero(m);
            lo[m] = lo[m & (m - 1)] + lengths[static_cast<std::size_t>(bit)];
        }
        for (Mask m = 1; m < hi.size(); ++m) {
            int bit = std::countr_zero(m);
            hi[m] = hi[m & (m - 1)] + lengths[static_cast<std::size_t>(lo_bits + bit)];
        }
    }

    std::int64_t operator()(Mask I) const {
        return lo[I & lo_mask] + hi[I >> lo_bits];
    }
};

void check_enumeration_cap(const LengthVector& v) {
    if (v.n() > kMaxSides) {
        throw ParseError("subset enumeration supports at most " + std::to_string(kMaxSides) +
                         " sides, got " + std::to_string(v.n()));
    }
}

}  // namespace

std::int64_t LengthVector::total() const {
    std::int64_t t = 0;
    for (auto x : lengths) t += x;
    return t;
}

std::int64_t LengthVector::sum_of(Mask I) const {
    std::int64_t t = 0;
    for (int e : elements_of(I)) t += lengths[static_cast<std::size_t>(e - 1)];
    return t;
}

std::string LengthVector::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < lengths.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(lengths[i]);
    }
    out += ')';
    return out;
}

LengthVector make_length_vector(std::vector<std::int64_t> lengths) {
    if (lengths.size() < 3) {
        throw ParseError("need at least 3 side lengths, got " + std::to_string(lengths.size()));
    }
    if (lengths.size() > static_cast<std::size_t>(kMaxSides)) {
        throw ParseError("at most " + std::to_string(kMaxSides) + " side lengths are supported, got " +
                         std::to_string(lengths.size()));
    }
    for (auto x : lengths) {
        if (x <= 0) throw ParseError("nonpositive length " + std::to_string(x));
        if (x > kMaxEntry) throw ParseError("length " + std::to_string(x) + " too large");
    }
    std::sort(lengths.begin(), lengths.end());
    return LengthVector{std::move(lengths)};
}

LengthVector parse_lengths(const std::string& text) {
    std::vector<std::int64_t> values;
    std::size_t i = 0;
    while (i <= text.size()) {
        std::size_t comma = text.find(',', i);
        std::string token = text.substr(i, (comma == std::string::npos ? text.size() : comma) - i);
        std::size_t a = 0, b = token.size();
        while (a < b && std::isspace(static_cast<unsigned char>(token[a]))) ++a;
        while (b > a && std::isspace(static_cast<unsigned char>(token[b - 1]))) --b;
        std::string trimmed = token.substr(a, b - a);
        if (trimmed.empty()) throw ParseError("empty token in length list");
        std::size_t pos = 0;
        std::int64_t value = 0;
        try {
            value = std::stoll(trimmed, &pos);
        } catch (const std::exception&) {
            throw ParseError("not an integer: '" + trimmed + "'");
        }
        if (pos != trimmed.size()) throw ParseError("not an integer: '" + trimmed + "'");
        if (value <= 0) throw ParseError("nonpositive length: '" + trimmed + "'");
        values.push_back(value);
        if (comma == std::string::npos) break;
        i = comma + 1;
    }
    return make_length_vector(std::move(values));
}

bool is_short(const LengthVector& v, Mask I) {
    if ((I & ~full_mask(v.n())) != 0) throw ParseError("subset index out of range for n=" + std::to_string(v.n()));
    return 2 * v.sum_of(I) < v.total();
}

bool is_generic(const LengthVector& v) {
    check_enumeration_cap(v);
    const std::int64_t total = v.total();
    if (total % 2 != 0) return true;
    const int bits = v.n() - 1;  // fix side n in the complement: each bipartition seen once
    const SumTables sum(v.lengths, bits);
    const std::int64_t half = total / 2;
    const Mask limit = full_mask(bits);
    std::atomic<bool> found{false};
#pragma omp parallel for schedule(static)
    for (std::int64_t m = 0; m <= static_cast<std::int64_t>(limit); ++m) {
        if (found.load(std::memory_order_relaxed)) continue;
        if (sum(static_cast<Mask>(m)) == half) found.store(true, std::memory_order_relaxed);
    }
    return !found.load();
}

GeneticCode genetic_code(const LengthVector& v) {
    check_enumeration_cap(v);
    if (!is_generic(v)) throw NonGenericError("length vector " + v.to_string() + " is not generic");
    const int n = v.n();
    const std::int64_t total = v.total();
    const std::int64_t alpha_n = v.lengths.back();
    const SumTables sum(v.lengths, n - 1);
    const Mask limit = full_mask(n - 1);
    // short(I ∪ {n}) for I ⊆ [n-1]
    auto short_with_n = [&](Mask I) { return 2 * (sum(I) + alpha_n) < total; };

    std::vector<std::uint8_t> maximal(std::size_t{limit} + 1, 0);
#pragma omp parallel for schedule(static)
    for (std::int64_t mi = 0; mi <= static_cast<std::int64_t>(limit); ++mi) {
        const Mask I = static_cast<Mask>(mi);
        if (!short_with_n(I)) continue;
        bool is_max = true;
        for (int j = 1; j <= n - 1 && is_max; ++j) {
            if (!contains(I, j) && short_with_n(with_element(I, j))) is_max = false;  // can add j
        }
        for (int i = 1; i <= n - 2 && is_max; ++i) {
            if (contains(I, i) && !contains(I, i + 1) &&
                short_with_n(with_element(without_element(I, i), i + 1))) {
                is_max = false;  // can bump i -> i+1
            }
        }
        maximal[static_cast<std::size_t>(I)] = is_max ? 1 : 0;
    }
    std::vector<Mask> genes;
    for (Mask I = 0; I <= limit; ++I) {
        if (maximal[I]) genes.push_back(with_element(I, n));
    }
    return GeneticCode(n, std::move(genes));
}

LengthVector reduce_by_subset(const LengthVector& v, Mask S) {
    const int n = v.n();
    if ((S & ~full_mask(n - 1)) != 0) throw ParseError("reduce_by_subset: S must be a subset of [n-1]");
    if (!is_short(v, with_element(S, n))) {
        throw ParseError("reduce_by_subset: " + set_to_string(S) + " ∪ {n} is not short");
    }
    std::vector<std::int64_t> out;
    for (int i = 1; i <= n - 1; ++i) {
        if (!contains(S, i)) out.push_back(v.lengths[static_cast<std::size_t>(i - 1)]);
    }
    out.push_back(v.lengths.back() + v.sum_of(S));
    return make_length_vector(std::move(out));
}

namespace {

// Enumerates nondecreasing vectors with n entries in [1, bound],
// lexicographically, invoking fn; fn returns false to stop the search.
template <typename Fn>
bool enumerate_sorted_vectors(int n, std::int64_t bound, Fn&& fn) {
    std::vector<std::int64_t> v(static_cast<std::size_t>(n), 1);
    while (true) {
        if (!fn(v)) return false;
        int i = n - 1;
        while (i >= 0 && v[static_cast<std::size_t>(i)] == bound) --i;
        if (i < 0) return true;
        std::int64_t next = v[static_cast<std::size_t>(i)] + 1;
        for (int j = i; j < n; ++j) v[static_cast<std::size_t>(j)] = next;
    }
}

}  // namespace

std::optional<LengthVector> realize_code(const GeneticCode& code, std::int64_t search_bound) {
    const int n = code.n();
    std::optional<LengthVector> witness;
    enumerate_sorted_vectors(n, search_bound, [&](const std::vector<std::int64_t>& raw) {
        LengthVector v{raw};
        if (!is_generic(v)) return true;
        if (genetic_code(v) == code) {
            witness = v;
            return false;
        }
        return true;
    });
    return witness;
}

std::vector<std::pair<GeneticCode, LengthVector>> realized_codes(int n, std::int64_t bound) {
    if (n < 3 || n > kMaxSides) throw ParseError("realized_codes expects 3 <= n <= " + std::to_string(kMaxSides));
    std::vector<std::pair<GeneticCode, LengthVector>> out;
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets;
    const Mask limit = full_mask(n - 1);
    std::vector<std::int64_t> sums(std::size_t{limit} + 1, 0);
    std::vector<Mask> genes;
    genes.reserve(64);

    enumerate_sorted_vectors(n, bound, [&](const std::vector<std::int64_t>& raw) {
        // subset sums over [n-1] by shared-prefix recurrence
        for (Mask m = 1; m <= limit; ++m) {
            sums[m] = sums[m & (m - 1)] + raw[static_cast<std::size_t>(std::countr_zero(m))];
        }
        std::int64_t total = sums[limit] + raw[static_cast<std::size_t>(n - 1)];
        if (total % 2 == 0) {
            bool balanced = false;
            const std::int64_t half = total / 2;
            for (Mask m = 0; m <= limit && !balanced; ++m) balanced = (sums[m] == half);
            if (balanced) return true;  // not generic
        }
        const std::int64_t alpha_n = raw[static_cast<std::size_t>(n - 1)];
        auto short_with_n = [&](Mask I) { return 2 * (sums[I] + alpha_n) < total; };
        genes.clear();
        for (Mask I = 0; I <= limit; ++I) {
            if (!short_with_n(I)) continue;
            bool is_max = true;
            for (int j = 1; j <= n - 1 && is_max; ++j) {
                if (!contains(I, j) && short_with_n(with_element(I, j))) is_max = false;
            }
            for (int i = 1; i <= n - 2 && is_max; ++i) {
                if (contains(I, i) && !contains(I, i + 1) &&
                    short_with_n(with_element(without_element(I, i), i + 1))) {
                    is_max = false;
                }
            }
            if (is_max) genes.push_back(with_element(I, n));
        }
        std::sort(genes.begin(), genes.end(), [](Mask a, Mask b) {
            int sa = set_size(a), sb = set_size(b);
            return sa != sb ? sa < sb : a < b;
        });  // canonical gene order, so the comparison below matches GeneticCode
        std::uint64_t hash = 1469598103934665603ull;
        for (Mask g : genes) {
            hash ^= g;
            hash *= 1099511628211ull;
        }
        auto& bucket = buckets[hash];
        for (std::size_t idx : bucket) {
            if (out[idx].first.genes() == genes) return true;  // seen
        }
        bucket.push_back(out.size());
        out.emplace_back(GeneticCode(n, genes), LengthVector{raw});
        return true;
    });
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first.to_string() < b.first.to_string(); });
    return out;
}

namespace ref {

bool is_generic(const LengthVector& v) {
    check_enumeration_cap(v);
    const std::int64_t total = v.total();
    const Mask limit = full_mask(v.n() - 1);
    for (Mask I = 0; I <= limit; ++I) {
        if (2 * v.sum_of(I) == total) return false;
    }
    return true;
}

GeneticCode genetic_code(const LengthVector& v) {
    check_enumeration_cap(v);
    if (!ref::is_generic(v)) throw NonGenericError("length vector " + v.to_string() + " is not generic");
    const int n = v.n();
    std::vector<Mask> shorts;
    const Mask limit = full_mask(n - 1);
    for (Mask I = 0; I <= limit; ++I) {
        if (is_short(v, with_element(I, n))) shorts.push_back(with_element(I, n));
    }
    std::vector<Mask> genes;
    for (Mask a : shorts) {
        bool maximal = true;
        for (Mask b : shorts) {
            if (a != b && dominated_by(a, b)) { maximal = false; break; }
        }
        if (maximal) genes.push_back(a);
    }
    return GeneticCode(n, std::move(genes));
}

}  // namespace ref

}  // namespace polyspace
