#include "friable/smooth_sets.hpp"

#include "friable/errors.hpp"

namespace friable {

namespace {

void check_window(std::uint64_t lo, std::uint64_t hi, const FactorTable &table) {
    if (lo < 1 || lo > hi)
        throw argument_error("window: need 1 <= lo <= hi");
    if (hi > table.limit())
        throw range_error("window: hi exceeds table limit");
}

} // namespace

SortedIntSet friable_window(const SmoothnessThreshold &y, std::uint64_t lo,
                            std::uint64_t hi, const FactorTable &table) {
    check_window(lo, hi, table);
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = lo; n <= hi; ++n) {
        if (is_smooth(n, y, table))
            out.push_back(n);
    }
    return SortedIntSet::from_sorted(std::move(out));
}

SortedIntSet shifted_friable_window(const SmoothnessThreshold &y,
                                    std::uint64_t lo, std::uint64_t hi,
                                    const FactorTable &table) {
    check_window(lo, hi, table);
    std::vector<std::uint64_t> out;
    // g = f + 1 with f in F_y; f >= 1, so g starts at max(lo, 2)
    for (std::uint64_t g = std::max<std::uint64_t>(lo, 2); g <= hi; ++g) {
        if (is_smooth(g - 1, y, table))
            out.push_back(g);
    }
    return SortedIntSet::from_sorted(std::move(out));
}

} // namespace friable
