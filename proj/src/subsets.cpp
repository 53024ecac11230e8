#include "polyspace/subsets.hpp"

namespace polyspace {

std::vector<int> elements_of(Mask m) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(set_size(m)));
    while (m) {
        int bit = std::countr_zero(m);
        out.push_back(bit + 1);
        m &= m - 1;
    }
    return out;
}

Mask mask_of(const std::vector<int>& elements) {
    Mask m = 0;
    for (int e : elements) m = with_element(m, e);
    return m;
}

Mask mask_of(std::initializer_list<int> elements) {
    Mask m = 0;
    for (int e : elements) m = with_element(m, e);
    return m;
}

std::string set_to_string(Mask m) {
    std::string out = "{";
    bool first = true;
    for (int e : elements_of(m)) {
        if (!first) out += ',';
        out += std::to_string(e);
        first = false;
    }
    out += '}';
    return out;
}

bool dominated_by(Mask I, Mask J) {
    if (set_size(I) > set_size(J)) return false;
    int ci = 0, cj = 0;
    for (int bit = 31; bit >= 0; --bit) {
        ci += (I >> bit) & 1;
        cj += (J >> bit) & 1;
        if (ci > cj) return false;
    }
    return true;
}

}  // namespace polyspace
