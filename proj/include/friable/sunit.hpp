#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "friable/factor_table.hpp"

namespace friable {

/// A finite set of primes p_1 < ... < p_s.
class PrimeSet {
  public:
    PrimeSet() = default;

    /// Validates primality and strict ordering; throws argument_error.
    static PrimeSet from_primes(std::vector<std::uint64_t> primes);

    /// S = {p prime : p <= y}.
    static PrimeSet up_to(double y);

    const std::vector<std::uint64_t> &primes() const { return primes_; }
    std::size_t size() const { return primes_.size(); }

    bool operator==(const PrimeSet &) const = default;

  private:
    std::vector<std::uint64_t> primes_;
};

/// An S-unit: a nonzero rational sign * prod p_i^{e_i} whose numerator and
/// denominator factor entirely over S.  Stored as sign and exponent vector.
struct SUnit {
    int sign = 1;                       // +1 or -1
    std::vector<std::int64_t> exponents; // one per prime of S, may be negative

    mpq_class value(const PrimeSet &S) const;
    std::uint64_t max_abs_exponent() const;
    bool is_positive_integer() const; // sign +1 and all exponents >= 0
};

/// Factors q over S; nullopt if q is zero or has a prime outside S.
std::optional<SUnit> sunit_from_rational(const mpq_class &q, const PrimeSet &S);

/// The equation U X + V Y = 1 with X, Y ranging over S-units.
struct SUnitEquation {
    mpq_class U, V;

    /// Throws argument_error when U V = 0.
    static SUnitEquation make(mpq_class U, mpq_class V);
};

enum class Domain { PositiveIntegers, SignedRationals };

std::string to_string(Domain d);
Domain domain_from_string(const std::string &s);

/// Solutions found for one equation over one bounded S-unit grid.
struct SolutionList {
    SUnitEquation equation;
    PrimeSet S;
    Domain domain = Domain::SignedRationals;
    std::uint64_t exponent_bound = 0;
    std::vector<std::pair<SUnit, SUnit>> solutions; // each satisfies the equation exactly

    std::uint64_t count() const { return solutions.size(); } // M
};

/// The Beukers–Schlickewei ceiling 2^{8(2s+2)} on the number of solutions
/// of a two-term S-unit equation.  Kept in exponent form; the integer is
/// materialized on demand.
struct BsBound {
    std::uint64_t exponent = 0; // 8(2s+2)
    mpz_class value() const;
};

/// Requires s >= 1 (with no primes the unit group is just {-1, +1}).
BsBound bs_bound(std::uint64_t s);

inline constexpr std::uint64_t kDefaultEnumBudget = 10'000'000;

/// All S-units with every |e_i| <= exponent_bound, restricted to the domain,
/// sorted ascending by value.  Throws capacity_error (reporting the grid
/// size) when the grid exceeds the budget.
std::vector<SUnit> enumerate_sunits(const PrimeSet &S,
                                    std::uint64_t exponent_bound, Domain domain,
                                    std::uint64_t budget = kDefaultEnumBudget);

/// Exhaustive over the bounded grid: for each candidate X solve
/// Y = (1 - U X) / V in exact rational arithmetic and accept iff Y is an
/// S-unit within the domain and bound.  Every accepted pair is re-verified
/// by substitution.  Solutions sorted by X.
SolutionList enumerate_solutions(const SUnitEquation &eq, const PrimeSet &S,
                                 std::uint64_t exponent_bound, Domain domain,
                                 std::uint64_t budget = kDefaultEnumBudget);

/// All pairs (X, Y) with X - Y = d, both y-smooth under the fixed cutoff,
/// lo <= Y < X <= hi, sorted by Y.  These solve the equation
/// (1/d) X - (1/d) Y = 1 over S = {p <= y}.
SolutionList smooth_pair_difference(double y, std::uint64_t d, std::uint64_t lo,
                                    std::uint64_t hi, const FactorTable &table);

/// The b-values in (n0/a1, N/a2] with a1*b - 1 and a2*b - 1 both y-smooth,
/// plus the induced solutions X_b = a1*b - 1, Y_b = a2*b - 1 of
/// (a2/(a1-a2)) X - (a1/(a1-a2)) Y = 1.  The map b -> (X_b, Y_b) is injective.
struct MultiplicativePairs {
    std::vector<std::uint64_t> b_values;
    SolutionList list;
};

MultiplicativePairs multiplicative_pairs(std::uint64_t a1, std::uint64_t a2,
                                         double y, std::uint64_t n0,
                                         std::uint64_t N,
                                         const FactorTable &table);

/// M versus the 2^{8(2s+2)} ceiling.  certified == false would mean the
/// ceiling was violated, which signals an enumeration bug.
struct CertificationReport {
    std::uint64_t M = 0;
    std::uint64_t s = 0;
    std::uint64_t exponent = 0; // 8(2s+2)
    bool certified = false;
};

CertificationReport certify_count(const SolutionList &sol);

} // namespace friable
