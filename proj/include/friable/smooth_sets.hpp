#pragma once

#include <cstdint>

#include "friable/factor_table.hpp"
#include "friable/sorted_set.hpp"
#include "friable/threshold.hpp"

namespace friable {

/// F_y restricted to [lo, hi]: all n there with p+(n) <= y(n).
/// Requires 1 <= lo <= hi <= table.limit().
SortedIntSet friable_window(const SmoothnessThreshold &y, std::uint64_t lo,
                            std::uint64_t hi, const FactorTable &table);

/// G_y = F_y + {1} restricted to [lo, hi]: {f + 1 : f in F_y, lo <= f+1 <= hi}.
SortedIntSet shifted_friable_window(const SmoothnessThreshold &y,
                                    std::uint64_t lo, std::uint64_t hi,
                                    const FactorTable &table);

} // namespace friable
