#include "polyspace/quasieq.hpp"

#include <algorithm>
#include <bit>

#include "polyspace/errors.hpp"
#include "polyspace/formulas.hpp"

namespace polyspace {

int QuasiEqParams::t() const {
    if (e() < 1) throw ParseError("t is defined for gee size e >= 1");
    return std::bit_width(static_cast<unsigned>(e())) - 1;
}

QuasiEqParams QuasiEqParams::make(int n, int r) {
    if (n < 4) throw ParseError("quasi-equilateral analysis needs n >= 4, got n=" + std::to_string(n));
    if (r < 1) throw ParseError("r must be positive, got r=" + std::to_string(r));
    if ((n - r) % 2 != 0) {
        throw ParseError("r=" + std::to_string(r) + " and n=" + std::to_string(n) +
                         " have different parity; (1,...,1,r) is not generic");
    }
    if (r > n - 2) {
        throw ParseError("r=" + std::to_string(r) + " exceeds n-2; the moduli space is empty");
    }
    return QuasiEqParams{n, r};
}

int k_of(int n, int r) {
    QuasiEqParams p = QuasiEqParams::make(n, r);
    const int e = p.e();
    if (e == 0) throw ParseError("k_of has an empty index range when e = 0");
    for (int i = e - 1; i >= 0; --i) {
        if (binom_mod2(p.D() - e + i, i)) return i;
    }
    return 0;  // unreachable: i = 0 gives C(.,0) = 1
}

int kamiyama_height(int n, int r) {
    QuasiEqParams p = QuasiEqParams::make(n, r);
    if (binom_mod2(p.D(), p.e())) return n - 3;
    return (n + r) / 2 + k_of(n, r) - 2;
}

std::vector<int> ResidueTable::residues_of_n(int offset) const {
    std::vector<int> out;
    for (int q : rows[static_cast<std::size_t>(offset)]) out.push_back((q + 2) % modulus);
    std::sort(out.begin(), out.end());
    return out;
}

ResidueTable residue_table(int e) {
    if (e < 1) throw ParseError("residue_table needs e >= 1");
    if (e > 24) throw ParseError("residue_table supports e <= 24");
    const int k = e;
    const int t = std::bit_width(static_cast<unsigned>(k)) - 1;
    const int modulus = 1 << (t + 1);

    using ResidueSet = std::uint64_t;  // modulus <= 2*e <= 48 < 64
    auto to_sorted = [&](ResidueSet s) {
        std::vector<int> out;
        for (int q = 0; q < modulus; ++q) {
            if ((s >> q) & 1) out.push_back(q);
        }
        return out;
    };

    ResidueTable table;
    table.e = e;
    table.t = t;
    table.modulus = modulus;

    // A_1 by Lucas: residues whose low bits dominate the bits of k.
    ResidueSet A = 0;
    for (int q = 0; q < modulus; ++q) {
        if ((q & k) == k) A |= ResidueSet{1} << q;
    }
    ResidueSet covered = A;
    table.rows.push_back(to_sorted(A));

    for (int j = 1; j <= k; ++j) {
        const int d = k - (j - 1);
        ResidueSet next = 0;
        auto add = [&](int q) { next |= ResidueSet{1} << (((q % modulus) + modulus) % modulus); };
        if (d % 2 == 1) {
            for (int q = 0; q < modulus; ++q) {
                if ((A >> q) & 1) {
                    add(q);
                    add(q + 1);
                }
            }
        } else {
            const int p1 = std::countr_zero(static_cast<unsigned>(d));
            const int block = 1 << p1;
            for (int q = 0; q < modulus; ++q) {
                if (!((A >> q) & 1)) continue;
                const int residue = ((q - (j - 1)) % block + block) % block;
                if (residue == 0) add(q);
                if (residue == block - 1) add(q + 1);
            }
        }
        ResidueSet fresh = next & ~covered;  // B_{j+1} = A_{j+1} \ C_j
        covered |= next;
        table.rows.push_back(to_sorted(fresh));
        A = next;
    }
    return table;
}

GeneticCode genetic_code_quasieq(int n, int r) {
    QuasiEqParams p = QuasiEqParams::make(n, r);
    if (n > kMaxSides) throw ParseError("n exceeds the cap of " + std::to_string(kMaxSides));
    Mask gene = with_element(0, n);
    for (int i = n - p.e(); i <= n - 1; ++i) gene = with_element(gene, i);
    return GeneticCode(n, {gene});
}

std::optional<SmallRFacts> small_r_bounds(int n, int r) {
    QuasiEqParams p = QuasiEqParams::make(n, r);
    (void)p;
    auto log2_exact = [](int x) { return std::bit_width(static_cast<unsigned>(x)) - 1; };
    if (r == 1) {
        if (std::has_single_bit(static_cast<unsigned>(n + 1)) && n >= 7) {
            const int s = log2_exact(n + 1) - 1;  // n = 2^(s+1) - 1
            const int h = (1 << s) - 2;
            return SmallRFacts{h, Interval{h, h}, std::nullopt, "r=1, n=2^(s+1)-1"};
        }
        if (std::has_single_bit(static_cast<unsigned>(n - 1)) && n >= 5) {
            const int s = log2_exact(n - 1);  // n = 2^s + 1
            const int h = (1 << s) - 2;
            return SmallRFacts{h, Interval{(1 << (s - 1)) - 1, h}, std::nullopt, "r=1, n=2^s+1"};
        }
    }
    if (r == 2) {
        if (std::has_single_bit(static_cast<unsigned>(n + 2)) && n >= 6) {
            const int s = log2_exact(n + 2) - 1;  // n = 2^(s+1) - 2
            const int h = (1 << s) - 2;
            return SmallRFacts{h, Interval{h, h}, std::nullopt, "r=2, n=2^(s+1)-2"};
        }
        if (std::has_single_bit(static_cast<unsigned>(n)) && n >= 4) {
            const int s = log2_exact(n);  // n = 2^s
            const int h = (1 << s) - 3;
            return SmallRFacts{h, Interval{(1 << (s - 1)) - 1, h}, h, "r=2, n=2^s"};
        }
    }
    return std::nullopt;
}

}  // namespace polyspace
