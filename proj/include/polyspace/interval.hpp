#pragma once

namespace polyspace {

// Inclusive integer interval of provable values.
struct Interval {
    int lo = 0;
    int hi = 0;

    bool exact() const { return lo == hi; }
    bool contains(int x) const { return lo <= x && x <= hi; }
    bool operator==(const Interval& other) const = default;
};

}  // namespace polyspace
