#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace polyspace {

namespace gf2 {
using Row = std::vector<std::uint64_t>;

inline Row zero_row(int cols) { return Row(static_cast<std::size_t>((cols + 63) / 64), 0); }
inline void set_bit(Row& r, int i) { r[static_cast<std::size_t>(i >> 6)] ^= std::uint64_t{1} << (i & 63); }
inline bool get_bit(const Row& r, int i) { return (r[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1; }
inline bool is_zero(const Row& r) {
    for (auto w : r)
        if (w) return false;
    return true;
}
inline void xor_into(Row& dst, const Row& src) {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] ^= src[i];
}
int lowest_bit(const Row& r);  // -1 when zero

// Visits the set bit positions in ascending order.
template <typename Fn>
void for_each_bit(const Row& r, Fn&& fn) {
    for (std::size_t w = 0; w < r.size(); ++w) {
        std::uint64_t word = r[w];
        while (word) {
            fn(static_cast<int>(w * 64) + std::countr_zero(word));
            word &= word - 1;
        }
    }
}
}  // namespace gf2

// A subspace of F_2^cols maintained in reduced row echelon form. RREF is the
// canonical basis of a row space, so the result is independent of insertion
// order; reduce() gives canonical coset representatives.
class Gf2RowSpace {
public:
    explicit Gf2RowSpace(int cols) : cols_(cols) {}

    int cols() const { return cols_; }
    int rank() const { return static_cast<int>(rows_.size()); }

    // Canonicalizes v modulo the row space (pivot positions eliminated).
    void reduce(gf2::Row& v) const;
    bool in_span(gf2::Row v) const;

    // Returns true when the row was new (rank grew).
    bool insert(gf2::Row v);

    const std::vector<gf2::Row>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }
    std::vector<int> free_columns() const;

    bool operator==(const Gf2RowSpace& other) const = default;

private:
    int cols_;
    std::vector<gf2::Row> rows_;  // sorted by pivot, fully back-substituted
    std::vector<int> pivots_;
};

}  // namespace polyspace
