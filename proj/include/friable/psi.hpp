#pragma once

#include <cstdint>

namespace friable {

/// Default feasibility cap for exact-Psi evaluation inside reports.
inline constexpr std::uint64_t kDefaultPsiMaxX = 100'000'000;

/// Empirical acceptance corridor for log Psi / Z.  De Bruijn's theorem has
/// an unspecified O-constant, so this envelope is an engineering default,
/// adjustable wherever it is consumed.
inline constexpr double kDebruijnCorridorLo = 0.3;
inline constexpr double kDebruijnCorridorHi = 3.0;

/// Psi(x, y) = |{n <= x : p+(n) <= y}|, exact.
///
/// Buchstab recursion Psi(x, p_k) = Psi(x, p_{k-1}) + Psi(floor(x/p_k), p_k)
/// with a process-wide memo keyed on (x, prime index); for primes above
/// sqrt(x) the recursion telescopes to floor(x/p) terms.  Distinct real y
/// with the same prime cutoff share cache entries.  Thread-safe: identical
/// inputs always produce identical outputs, never torn values.
///
/// psi_exact(0, y) = 0; y < 2 counts only n = 1.
std::uint64_t psi_exact(std::uint64_t x, double y);

/// Psi(x, 2) = floor(log2 x) + 1 by integer bit length (exact at powers of
/// two, no floating point).  psi_base2(0) = 0.
std::uint64_t psi_base2(std::uint64_t x);

/// One evaluated point of the counting function.  count <= x always, with
/// equality exactly when y >= x.
struct PsiValue {
    std::uint64_t x = 0;
    double y = 0;
    std::uint64_t count = 0;
};

inline PsiValue psi_value(std::uint64_t x, double y) {
    return {x, y, psi_exact(x, y)};
}

/// De Bruijn's main term
///   Z = (ln x / ln y) ln(1 + y/ln x) + (y / ln y) ln(1 + ln x / y),
/// valid uniformly for x >= y >= 2 (argument_error outside that domain).
double debruijn_Z(double x, double y);

/// Same, with x supplied as ln x (for x too large to represent).
double debruijn_Z_from_log(double log_x, double y);

struct DeBruijnReport {
    std::uint64_t x = 0;
    double y = 0;
    std::uint64_t count = 0; // Psi(x, y)
    double Z = 0;
    double log_psi = 0; // ln Psi(x, y)
    double ratio = 0;   // log_psi / Z
};

/// Compares ln Psi(x,y) against Z.  Requires x >= y >= 2; x beyond max_x is
/// a capacity_error (exact Psi infeasible).
DeBruijnReport debruijn_ratio(std::uint64_t x, double y,
                              std::uint64_t max_x = kDefaultPsiMaxX);

} // namespace friable
