#include "friable/psi.hpp"

#include <bit>
#include <cmath>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "friable/errors.hpp"
#include "friable/factor_table.hpp"

namespace friable {

namespace {

std::uint64_t isqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r > n / r)
        --r;
    while ((r + 1) <= n / (r + 1))
        ++r;
    return r;
}

// Shared evaluator.  Two caches, both keyed on (x, prime index):
//  - memo: Buchstab states Psi(x, p_k) for cutoffs at or below sqrt(x);
//  - tail: per-x resume points for the telescoped sum over primes in
//    (sqrt(x), y], so a scan with growing y extends in O(1) per prime.
class PsiEvaluator {
  public:
    std::uint64_t eval(std::uint64_t x, double y) {
        if (x == 0)
            return 0;
        if (y < 2)
            return 1; // only n = 1
        if (y >= static_cast<double>(x))
            return x;
        const auto cutoff = static_cast<std::uint64_t>(y);

        std::lock_guard<std::mutex> lock(mu_);
        ensure_primes(cutoff);
        const std::uint64_t root = isqrt(x);

        if (cutoff <= root) {
            const std::uint64_t k = pi_index(cutoff);
            return psi_low(x, k);
        }

        const std::uint64_t j0 = pi_index(root);
        const std::uint64_t k = pi_index(cutoff);

        std::uint64_t from = j0;
        std::uint64_t val = 0;
        if (auto it = tail_.find(x);
            it != tail_.end() && it->second.first >= j0 &&
            it->second.first <= k) {
            from = it->second.first;
            val = it->second.second;
        } else {
            val = psi_low(x, j0);
        }
        // Psi(x, p_{j+1}) = Psi(x, p_j) + floor(x / p_{j+1}) once p_{j+1}
        // exceeds sqrt(x): the cofactors are below the prime, hence all smooth.
        for (std::uint64_t j = from; j < k; ++j)
            val += x / primes_[j];
        if (tail_.size() > kTailCap)
            tail_.clear();
        tail_[x] = {k, val};
        return val;
    }

  private:
    static constexpr std::uint64_t kMemoCap = std::uint64_t{1} << 25;
    static constexpr std::uint64_t kTailCap = std::uint64_t{1} << 22;
    static constexpr std::uint64_t kIndexBits = 16;

    void ensure_primes(std::uint64_t want) {
        if (prime_limit_ >= want)
            return;
        std::uint64_t target = std::max<std::uint64_t>(want, 64);
        target = std::max(target, prime_limit_ * 2);
        primes_ = primes_up_to(static_cast<double>(target));
        prime_limit_ = target;
    }

    // Number of cached primes <= cutoff (cutoff must be within prime_limit_).
    std::uint64_t pi_index(std::uint64_t cutoff) const {
        auto it = std::upper_bound(primes_.begin(), primes_.end(), cutoff);
        return static_cast<std::uint64_t>(it - primes_.begin());
    }

    // Psi(x, p_k) for p_k <= x, by Buchstab recursion with memoization.
    std::uint64_t psi_low(std::uint64_t x, std::uint64_t k) {
        if (x == 0)
            return 0;
        if (k == 0)
            return 1;
        if (primes_[k - 1] >= x)
            return x; // every n <= x is p_k-smooth
        if (k >= (std::uint64_t{1} << kIndexBits) ||
            x >= (std::uint64_t{1} << (64 - kIndexBits)))
            throw capacity_error("psi_exact: argument exceeds memo key range");
        const std::uint64_t key = (x << kIndexBits) | k;
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
        const std::uint64_t v = psi_low(x, k - 1) + psi_low(x / primes_[k - 1], k);
        if (memo_.size() > kMemoCap)
            memo_.clear();
        memo_.emplace(key, v);
        return v;
    }

    std::mutex mu_;
    std::vector<std::uint64_t> primes_;
    std::uint64_t prime_limit_ = 0;
    std::unordered_map<std::uint64_t, std::uint64_t> memo_;
    std::unordered_map<std::uint64_t, std::pair<std::uint64_t, std::uint64_t>>
        tail_;
};

PsiEvaluator &evaluator() {
    static PsiEvaluator ev;
    return ev;
}

} // namespace

std::uint64_t psi_exact(std::uint64_t x, double y) {
    return evaluator().eval(x, y);
}

std::uint64_t psi_base2(std::uint64_t x) {
    return static_cast<std::uint64_t>(std::bit_width(x));
}

double debruijn_Z_from_log(double log_x, double y) {
    if (!(y >= 2) || !(log_x >= std::log(y)))
        throw argument_error("debruijn_Z: domain is x >= y >= 2");
    const double ly = std::log(y);
    return (log_x / ly) * std::log1p(y / log_x) +
           (y / ly) * std::log1p(log_x / y);
}

double debruijn_Z(double x, double y) {
    if (!(y >= 2) || !(x >= y))
        throw argument_error("debruijn_Z: domain is x >= y >= 2");
    return debruijn_Z_from_log(std::log(x), y);
}

DeBruijnReport debruijn_ratio(std::uint64_t x, double y, std::uint64_t max_x) {
    if (!(y >= 2) || static_cast<double>(x) < y)
        throw argument_error("debruijn_ratio: domain is x >= y >= 2");
    if (x > max_x)
        throw capacity_error("debruijn_ratio: x beyond exact-Psi cap " +
                             std::to_string(max_x));
    DeBruijnReport r;
    r.x = x;
    r.y = y;
    r.count = psi_exact(x, y);
    r.Z = debruijn_Z(static_cast<double>(x), y);
    r.log_psi = std::log(static_cast<double>(r.count));
    r.ratio = r.log_psi / r.Z;
    return r;
}

} // namespace friable
