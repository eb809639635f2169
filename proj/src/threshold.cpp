#include "friable/threshold.hpp"

#include <cmath>

#include "friable/errors.hpp"

namespace friable {

SmoothnessThreshold SmoothnessThreshold::constant(double y0) {
    if (!(y0 > 0))
        throw argument_error("threshold: constant level must be positive");
    return {Kind::Constant, y0};
}

SmoothnessThreshold SmoothnessThreshold::log_scaled(double c) {
    if (!(c > 0))
        throw argument_error("threshold: log scale must be positive");
    return {Kind::LogScaled, c};
}

SmoothnessThreshold SmoothnessThreshold::power(double eps) {
    if (!(eps > 0))
        throw argument_error("threshold: exponent must be positive");
    return {Kind::Power, eps};
}

double SmoothnessThreshold::operator()(std::uint64_t n) const {
    const double x = static_cast<double>(n);
    switch (kind_) {
    case Kind::Constant:
        return param_;
    case Kind::LogScaled:
        return param_ * std::log(x);
    case Kind::Power:
        return std::pow(x, param_);
    }
    return param_;
}

SmoothnessThreshold SmoothnessThreshold::parse(const std::string &spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw argument_error("threshold: expected kind:parameter, got '" + spec +
                             "'");
    const std::string kind = spec.substr(0, colon);
    double param = 0;
    try {
        param = std::stod(spec.substr(colon + 1));
    } catch (const std::exception &) {
        throw argument_error("threshold: bad parameter in '" + spec + "'");
    }
    if (kind == "constant")
        return constant(param);
    if (kind == "log_scaled" || kind == "log")
        return log_scaled(param);
    if (kind == "power")
        return power(param);
    throw argument_error("threshold: unknown kind '" + kind + "'");
}

std::string SmoothnessThreshold::describe() const {
    switch (kind_) {
    case Kind::Constant:
        return "constant:" + std::to_string(param_);
    case Kind::LogScaled:
        return "log_scaled:" + std::to_string(param_);
    case Kind::Power:
        return "power:" + std::to_string(param_);
    }
    return "";
}

bool is_smooth(std::uint64_t n, const SmoothnessThreshold &y,
               const FactorTable &table, bool trial_fallback) {
    if (n == 0)
        throw range_error("is_smooth: n must be positive");
    if (n == 1)
        return true; // p+(1) = 1, smooth under every positive threshold
    const std::uint64_t p = table.greatest_prime_factor(n, trial_fallback);
    return static_cast<double>(p) <= y(n);
}

bool is_smooth_fixed(std::uint64_t n, double y_cut, const FactorTable &table,
                     bool trial_fallback) {
    if (n == 0)
        throw range_error("is_smooth_fixed: n must be positive");
    if (n == 1)
        return true; // p+(1) = 1; n = 1 counts as smooth under every cutoff
    const std::uint64_t p = table.greatest_prime_factor(n, trial_fallback);
    return static_cast<double>(p) <= y_cut;
}

} // namespace friable
