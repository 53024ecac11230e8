#include "polyspace/gf2.hpp"

#include <algorithm>
#include <bit>

namespace polyspace {

namespace gf2 {
int lowest_bit(const Row& r) {
    for (std::size_t w = 0; w < r.size(); ++w) {
        if (r[w]) return static_cast<int>(w * 64) + std::countr_zero(r[w]);
    }
    return -1;
}
}  // namespace gf2

void Gf2RowSpace::reduce(gf2::Row& v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (gf2::get_bit(v, pivots_[i])) gf2::xor_into(v, rows_[i]);
    }
}

bool Gf2RowSpace::in_span(gf2::Row v) const {
    reduce(v);
    return gf2::is_zero(v);
}

bool Gf2RowSpace::insert(gf2::Row v) {
    reduce(v);
    int pivot = gf2::lowest_bit(v);
    if (pivot < 0) return false;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (gf2::get_bit(rows_[i], pivot)) gf2::xor_into(rows_[i], v);
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
    std::size_t idx = static_cast<std::size_t>(pos - pivots_.begin());
    pivots_.insert(pos, pivot);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
    return true;
}

std::vector<int> Gf2RowSpace::free_columns() const {
    std::vector<int> out;
    std::size_t next = 0;
    for (int c = 0; c < cols_; ++c) {
        if (next < pivots_.size() && pivots_[next] == c) {
            ++next;
        } else {
            out.push_back(c);
        }
    }
    return out;
}

}  // namespace polyspace
