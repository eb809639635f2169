#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace friable {

/// Greatest-prime-factor table for [1, N], built by a sieve pass per prime.
/// Immutable after construction; all queries are pure and thread-safe.
class FactorTable {
  public:
    /// Default capacity budget: 2^30 entries (4 GiB of table).
    static constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 30;

    /// Builds the table for [1, limit].  threads == 0 means hardware
    /// concurrency.  Throws capacity_error for limit == 0 or limit > budget.
    static FactorTable build(std::uint64_t limit, unsigned threads = 0,
                             std::uint64_t budget = kDefaultBudget);

    std::uint64_t limit() const { return limit_; }

    /// p+(n): the greatest prime factor, with p+(1) = 1.
    /// Throws range_error for n == 0 or n > limit(), unless trial_fallback
    /// is set, in which case n > limit() is factored by trial division.
    std::uint64_t greatest_prime_factor(std::uint64_t n,
                                        bool trial_fallback = false) const;

    bool is_prime(std::uint64_t n) const {
        return n >= 2 && greatest_prime_factor(n) == n;
    }

    /// Full factorization as (prime, exponent) pairs, primes descending
    /// (peeled off by repeated greatest-prime-factor division).
    std::vector<std::pair<std::uint64_t, std::uint32_t>>
    factorization(std::uint64_t n) const;

  private:
    std::uint64_t limit_ = 0;
    std::vector<std::uint32_t> gpf_; // gpf_[n] for n in [1, limit]; gpf_[0] unused
};

/// Greatest prime factor by trial division; independent of any table.
std::uint64_t greatest_prime_factor_trial(std::uint64_t n);

/// pi(y): number of primes <= y.  Backed by a cached sieve that grows on
/// demand; y above the supported ceiling throws capacity_error.
std::uint64_t prime_count(double y);

/// The primes <= y, ascending.
std::vector<std::uint64_t> primes_up_to(double y);

} // namespace friable
