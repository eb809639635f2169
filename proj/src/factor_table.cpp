#include "friable/factor_table.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <thread>

#include "friable/errors.hpp"

namespace friable {

namespace {

// Plain sieve of Eratosthenes; returns primes <= limit.
std::vector<std::uint64_t> sieve_primes(std::uint64_t limit) {
    std::vector<std::uint64_t> primes;
    if (limit < 2)
        return primes;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t p = 2; p <= limit; ++p) {
        if (composite[p])
            continue;
        primes.push_back(p);
        for (std::uint64_t m = p * p; m <= limit; m += p)
            composite[m] = true;
    }
    return primes;
}

// Process-wide prime cache for prime_count / primes_up_to, grown on demand.
struct PrimeCache {
    std::mutex mu;
    std::uint64_t limit = 0;
    std::vector<std::uint64_t> primes;

    void ensure(std::uint64_t want) {
        if (want <= limit)
            return;
        std::uint64_t target = std::max<std::uint64_t>(want, 1024);
        target = std::max(target, limit * 2);
        primes = sieve_primes(target);
        limit = target;
    }
};

PrimeCache &prime_cache() {
    static PrimeCache cache;
    return cache;
}

constexpr std::uint64_t kPrimeCeiling = 1'000'000'000;

// Writes gpf for every n in [lo, hi] (ascending prime passes, so the last
// write per cell is the greatest prime factor).
void sieve_gpf_segment(std::vector<std::uint32_t> &gpf,
                       const std::vector<std::uint64_t> &primes,
                       std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t p : primes) {
        if (p > hi)
            break;
        std::uint64_t start = ((lo + p - 1) / p) * p;
        if (start < p)
            start = p;
        for (std::uint64_t m = start; m <= hi; m += p)
            gpf[m] = static_cast<std::uint32_t>(p);
    }
}

} // namespace

FactorTable FactorTable::build(std::uint64_t limit, unsigned threads,
                               std::uint64_t budget) {
    if (limit == 0)
        throw capacity_error("FactorTable: limit must be positive");
    if (limit > budget || limit > UINT32_MAX)
        throw capacity_error("FactorTable: limit " + std::to_string(limit) +
                             " exceeds table budget");

    FactorTable t;
    t.limit_ = limit;
    t.gpf_.assign(limit + 1, 0);
    t.gpf_[1] = 1;
    if (limit == 1)
        return t;

    const auto primes = sieve_primes(limit);

    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    const std::uint64_t span = limit - 1; // cells [2, limit]
    threads = static_cast<unsigned>(
        std::min<std::uint64_t>(threads, std::max<std::uint64_t>(1, span / 4096)));

    if (threads <= 1) {
        sieve_gpf_segment(t.gpf_, primes, 2, limit);
        return t;
    }

    // Independent segments; each cell is written by exactly one worker, so
    // the result does not depend on the thread count.
    std::vector<std::thread> workers;
    workers.reserve(threads);
    const std::uint64_t chunk = (span + threads - 1) / threads;
    for (unsigned i = 0; i < threads; ++i) {
        std::uint64_t lo = 2 + i * chunk;
        if (lo > limit)
            break;
        std::uint64_t hi = std::min(limit, lo + chunk - 1);
        workers.emplace_back([&t, &primes, lo, hi] {
            sieve_gpf_segment(t.gpf_, primes, lo, hi);
        });
    }
    for (auto &w : workers)
        w.join();
    return t;
}

std::uint64_t FactorTable::greatest_prime_factor(std::uint64_t n,
                                                 bool trial_fallback) const {
    if (n == 0)
        throw range_error("greatest_prime_factor: n must be positive");
    if (n > limit_) {
        if (trial_fallback)
            return greatest_prime_factor_trial(n);
        throw range_error("greatest_prime_factor: n " + std::to_string(n) +
                          " exceeds table limit " + std::to_string(limit_));
    }
    return gpf_[n];
}

std::vector<std::pair<std::uint64_t, std::uint32_t>>
FactorTable::factorization(std::uint64_t n) const {
    if (n == 0 || n > limit_)
        throw range_error("factorization: n out of table range");
    std::vector<std::pair<std::uint64_t, std::uint32_t>> factors;
    while (n > 1) {
        std::uint64_t p = gpf_[n];
        std::uint32_t e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        factors.emplace_back(p, e);
    }
    return factors;
}

std::uint64_t greatest_prime_factor_trial(std::uint64_t n) {
    if (n == 0)
        throw range_error("greatest_prime_factor_trial: n must be positive");
    if (n == 1)
        return 1;
    std::uint64_t best = 1;
    for (std::uint64_t p = 2; p <= n / p; p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) {
            best = p;
            n /= p;
        }
    }
    return n > 1 ? n : best;
}

std::uint64_t prime_count(double y) {
    if (!(y >= 0))
        return 0; // NaN or negative: no primes
    if (y < 2)
        return 0;
    if (y > static_cast<double>(kPrimeCeiling))
        throw capacity_error("prime_count: cutoff beyond supported sieve size");
    auto cutoff = static_cast<std::uint64_t>(y);
    auto &cache = prime_cache();
    std::lock_guard<std::mutex> lock(cache.mu);
    cache.ensure(cutoff);
    return static_cast<std::uint64_t>(
        std::upper_bound(cache.primes.begin(), cache.primes.end(), cutoff) -
        cache.primes.begin());
}

std::vector<std::uint64_t> primes_up_to(double y) {
    if (!(y >= 2))
        return {};
    if (y > static_cast<double>(kPrimeCeiling))
        throw capacity_error("primes_up_to: cutoff beyond supported sieve size");
    auto cutoff = static_cast<std::uint64_t>(y);
    auto &cache = prime_cache();
    std::lock_guard<std::mutex> lock(cache.mu);
    cache.ensure(cutoff);
    auto end = std::upper_bound(cache.primes.begin(), cache.primes.end(), cutoff);
    return std::vector<std::uint64_t>(cache.primes.begin(), end);
}

} // namespace friable
