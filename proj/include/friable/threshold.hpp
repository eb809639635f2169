#pragma once

#include <cstdint>
#include <string>

#include "friable/factor_table.hpp"

namespace friable {

/// A monotone increasing smoothness threshold y(n), positive for n >= 2.
///
/// Three shapes: constant y0, c*ln(n), and n^eps.  Set membership uses
/// y(n) evaluated per element; the pipeline reports instead fix y = y(N)
/// for a whole window — both entry points exist (is_smooth vs
/// is_smooth_fixed below).
class SmoothnessThreshold {
  public:
    enum class Kind { Constant, LogScaled, Power };

    static SmoothnessThreshold constant(double y0);
    static SmoothnessThreshold log_scaled(double c);
    static SmoothnessThreshold power(double eps);

    /// Evaluate y(n).
    double operator()(std::uint64_t n) const;

    Kind kind() const { return kind_; }
    double parameter() const { return param_; }

    /// "constant:5", "log_scaled:0.25", "power:0.5".
    static SmoothnessThreshold parse(const std::string &spec);
    std::string describe() const;

  private:
    SmoothnessThreshold(Kind k, double p) : kind_(k), param_(p) {}
    Kind kind_;
    double param_;
};

/// n is y-smooth: p+(n) <= y(n).  n = 1 is smooth under every threshold
/// (p+(1) = 1 by convention).
bool is_smooth(std::uint64_t n, const SmoothnessThreshold &y,
               const FactorTable &table, bool trial_fallback = false);

/// Fixed-cutoff variant: p+(n) <= y_cut.
bool is_smooth_fixed(std::uint64_t n, double y_cut, const FactorTable &table,
                     bool trial_fallback = false);

} // namespace friable
