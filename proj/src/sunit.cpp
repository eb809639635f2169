#include "friable/sunit.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "friable/errors.hpp"
#include "friable/threshold.hpp"

namespace friable {

namespace {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t p = 2; p <= n / p; p += (p == 2 ? 1 : 2))
        if (n % p == 0)
            return false;
    return true;
}

mpz_class pow_mpz(std::uint64_t base, std::uint64_t exp) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(exp));
    return r;
}

// Every S-unit integer <= n has all exponents <= floor(log2 n).
std::uint64_t covering_exponent_bound(std::uint64_t n) {
    return static_cast<std::uint64_t>(std::bit_width(n));
}

} // namespace

PrimeSet PrimeSet::from_primes(std::vector<std::uint64_t> primes) {
    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (!is_prime_u64(primes[i]))
            throw argument_error("PrimeSet: " + std::to_string(primes[i]) +
                                 " is not prime");
        if (i > 0 && primes[i] <= primes[i - 1])
            throw argument_error("PrimeSet: primes must be strictly increasing");
    }
    PrimeSet s;
    s.primes_ = std::move(primes);
    return s;
}

PrimeSet PrimeSet::up_to(double y) {
    PrimeSet s;
    s.primes_ = primes_up_to(y);
    return s;
}

mpq_class SUnit::value(const PrimeSet &S) const {
    if (exponents.size() != S.size())
        throw argument_error("SUnit: exponent vector does not match S");
    mpz_class num = sign;
    mpz_class den = 1;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        const std::int64_t e = exponents[i];
        if (e > 0)
            num *= pow_mpz(S.primes()[i], static_cast<std::uint64_t>(e));
        else if (e < 0)
            den *= pow_mpz(S.primes()[i], static_cast<std::uint64_t>(-e));
    }
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

std::uint64_t SUnit::max_abs_exponent() const {
    std::uint64_t m = 0;
    for (std::int64_t e : exponents)
        m = std::max<std::uint64_t>(m, e < 0 ? static_cast<std::uint64_t>(-e)
                                             : static_cast<std::uint64_t>(e));
    return m;
}

bool SUnit::is_positive_integer() const {
    if (sign != 1)
        return false;
    return std::all_of(exponents.begin(), exponents.end(),
                       [](std::int64_t e) { return e >= 0; });
}

std::optional<SUnit> sunit_from_rational(const mpq_class &q, const PrimeSet &S) {
    if (q == 0)
        return std::nullopt;
    mpz_class num = q.get_num();
    mpz_class den = q.get_den(); // canonical: den > 0, gcd(num, den) = 1
    SUnit u;
    u.sign = sgn(num) > 0 ? 1 : -1;
    num = abs(num);
    u.exponents.assign(S.size(), 0);
    for (std::size_t i = 0; i < S.size(); ++i) {
        const auto p = static_cast<unsigned long>(S.primes()[i]);
        while (mpz_divisible_ui_p(num.get_mpz_t(), p)) {
            mpz_divexact_ui(num.get_mpz_t(), num.get_mpz_t(), p);
            ++u.exponents[i];
        }
        while (mpz_divisible_ui_p(den.get_mpz_t(), p)) {
            mpz_divexact_ui(den.get_mpz_t(), den.get_mpz_t(), p);
            --u.exponents[i];
        }
    }
    if (num != 1 || den != 1)
        return std::nullopt; // a prime outside S survives
    return u;
}

SUnitEquation SUnitEquation::make(mpq_class U, mpq_class V) {
    if (U == 0 || V == 0)
        throw argument_error("SUnitEquation: U and V must be nonzero");
    return SUnitEquation{std::move(U), std::move(V)};
}

std::string to_string(Domain d) {
    return d == Domain::PositiveIntegers ? "positive-integers"
                                         : "signed-rationals";
}

Domain domain_from_string(const std::string &s) {
    if (s == "positive-integers" || s == "positive")
        return Domain::PositiveIntegers;
    if (s == "signed-rationals" || s == "rational")
        return Domain::SignedRationals;
    throw argument_error("unknown domain '" + s + "'");
}

mpz_class BsBound::value() const {
    if (exponent > (std::uint64_t{1} << 30))
        throw capacity_error("bs_bound: value too large to materialize");
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(exponent));
    return r;
}

BsBound bs_bound(std::uint64_t s) {
    if (s == 0)
        throw argument_error("bs_bound: need at least one prime in S");
    return BsBound{8 * (2 * s + 2)};
}

namespace {

// Sorted unit grids, cached per (S, bound, domain) with their values.
struct UnitGrid {
    std::vector<SUnit> units;      // ascending by value
    std::vector<mpq_class> values; // parallel to units
};

// Grid size: (b+1)^s for positive integers, 2(2b+1)^s for signed rationals.
double grid_size_estimate(std::size_t s, std::uint64_t exponent_bound,
                          Domain domain) {
    double est = (domain == Domain::PositiveIntegers) ? 1.0 : 2.0;
    const double per = (domain == Domain::PositiveIntegers)
                           ? static_cast<double>(exponent_bound + 1)
                           : static_cast<double>(2 * exponent_bound + 1);
    for (std::size_t i = 0; i < s; ++i)
        est *= per;
    return est;
}

std::shared_ptr<const UnitGrid> build_unit_grid(const PrimeSet &S,
                                                std::uint64_t exponent_bound,
                                                Domain domain) {
    const std::size_t s = S.size();
    const std::int64_t lo =
        (domain == Domain::PositiveIntegers)
            ? 0
            : -static_cast<std::int64_t>(exponent_bound);
    const auto hi = static_cast<std::int64_t>(exponent_bound);

    std::vector<std::pair<mpq_class, SUnit>> units;
    std::vector<std::int64_t> e(s, lo);
    const int max_sign = 1;
    const int min_sign = (domain == Domain::PositiveIntegers) ? 1 : -1;
    bool done = false;
    while (!done) {
        for (int sign = max_sign; sign >= min_sign; sign -= 2) {
            SUnit u;
            u.sign = sign;
            u.exponents = e;
            units.emplace_back(u.value(S), std::move(u));
        }
        // odometer
        done = true;
        for (std::size_t i = 0; i < s; ++i) {
            if (e[i] < hi) {
                ++e[i];
                for (std::size_t j = 0; j < i; ++j)
                    e[j] = lo;
                done = false;
                break;
            }
        }
        if (s == 0)
            done = true;
    }

    std::sort(units.begin(), units.end(),
              [](const auto &a, const auto &b) { return a.first < b.first; });
    auto grid = std::make_shared<UnitGrid>();
    grid->units.reserve(units.size());
    grid->values.reserve(units.size());
    for (auto &[v, u] : units) {
        grid->values.push_back(v);
        grid->units.push_back(std::move(u));
    }
    return grid;
}

std::shared_ptr<const UnitGrid> unit_grid(const PrimeSet &S,
                                          std::uint64_t exponent_bound,
                                          Domain domain, std::uint64_t budget) {
    if (exponent_bound == 0)
        throw argument_error("enumerate_sunits: exponent bound must be positive");
    const double est = grid_size_estimate(S.size(), exponent_bound, domain);
    if (est > static_cast<double>(budget))
        throw capacity_error("enumerate_sunits: grid of " +
                             std::to_string(est) + " units exceeds budget " +
                             std::to_string(budget));

    static std::mutex mu;
    static std::map<std::tuple<std::vector<std::uint64_t>, std::uint64_t, int>,
                    std::shared_ptr<const UnitGrid>>
        cache;
    const auto key = std::make_tuple(S.primes(), exponent_bound,
                                     static_cast<int>(domain));
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find(key); it != cache.end())
            return it->second;
    }
    auto grid = build_unit_grid(S, exponent_bound, domain);
    std::lock_guard<std::mutex> lock(mu);
    if (cache.size() > 64)
        cache.clear();
    cache.emplace(key, grid);
    return grid;
}

} // namespace

std::vector<SUnit> enumerate_sunits(const PrimeSet &S,
                                    std::uint64_t exponent_bound, Domain domain,
                                    std::uint64_t budget) {
    return unit_grid(S, exponent_bound, domain, budget)->units;
}

SolutionList enumerate_solutions(const SUnitEquation &eq, const PrimeSet &S,
                                 std::uint64_t exponent_bound, Domain domain,
                                 std::uint64_t budget) {
    if (eq.U == 0 || eq.V == 0)
        throw argument_error("enumerate_solutions: U and V must be nonzero");
    SolutionList result;
    result.equation = eq;
    result.S = S;
    result.domain = domain;
    result.exponent_bound = exponent_bound;

    const auto grid = unit_grid(S, exponent_bound, domain, budget);
    for (std::size_t i = 0; i < grid->units.size(); ++i) {
        const SUnit &X = grid->units[i];
        const mpq_class &xv = grid->values[i];
        mpq_class yv = (1 - eq.U * xv) / eq.V;
        if (yv == 0)
            continue;
        auto Y = sunit_from_rational(yv, S);
        if (!Y)
            continue;
        if (Y->max_abs_exponent() > exponent_bound)
            continue;
        if (domain == Domain::PositiveIntegers && !Y->is_positive_integer())
            continue;
        // substitution check, exact
        if (eq.U * xv + eq.V * yv != 1)
            continue;
        result.solutions.emplace_back(X, std::move(*Y));
    }
    return result;
}

namespace {

// Exponent vector of a y-smooth n over S = {p <= y}, via the factor table.
SUnit integer_sunit(std::uint64_t n, const PrimeSet &S,
                    const FactorTable &table) {
    SUnit u;
    u.sign = 1;
    u.exponents.assign(S.size(), 0);
    for (const auto &[p, e] : table.factorization(n)) {
        auto it = std::lower_bound(S.primes().begin(), S.primes().end(), p);
        if (it == S.primes().end() || *it != p)
            throw argument_error("integer_sunit: factor outside S");
        u.exponents[static_cast<std::size_t>(it - S.primes().begin())] = e;
    }
    return u;
}

} // namespace

SolutionList smooth_pair_difference(double y, std::uint64_t d, std::uint64_t lo,
                                    std::uint64_t hi, const FactorTable &table) {
    if (d == 0)
        throw argument_error("smooth_pair_difference: d must be positive");
    if (lo < 1 || lo > hi)
        throw argument_error("smooth_pair_difference: need 1 <= lo <= hi");
    if (hi > table.limit())
        throw range_error("smooth_pair_difference: window exceeds table limit");

    SolutionList result;
    result.S = PrimeSet::up_to(y);
    result.domain = Domain::PositiveIntegers;
    result.exponent_bound = covering_exponent_bound(hi);
    mpq_class U(1, static_cast<unsigned long>(d));
    U.canonicalize();
    result.equation = SUnitEquation::make(U, -U);

    if (hi - lo < d)
        return result;
    for (std::uint64_t Y = lo; Y <= hi - d; ++Y) {
        if (!is_smooth_fixed(Y, y, table) || !is_smooth_fixed(Y + d, y, table))
            continue;
        result.solutions.emplace_back(integer_sunit(Y + d, result.S, table),
                                      integer_sunit(Y, result.S, table));
    }
    return result;
}

MultiplicativePairs multiplicative_pairs(std::uint64_t a1, std::uint64_t a2,
                                         double y, std::uint64_t n0,
                                         std::uint64_t N,
                                         const FactorTable &table) {
    if (a1 == 0 || a1 >= a2)
        throw argument_error("multiplicative_pairs: need 1 <= a1 < a2");
    if (n0 == 0)
        throw argument_error("multiplicative_pairs: n0 must be positive");

    MultiplicativePairs result;
    result.list.S = PrimeSet::up_to(y);
    result.list.domain = Domain::PositiveIntegers;
    result.list.exponent_bound = covering_exponent_bound(N);
    // a2/(a1-a2) X - a1/(a1-a2) Y = 1, with a1 - a2 < 0
    mpq_class U(static_cast<long>(a2),
                static_cast<long>(a1) - static_cast<long>(a2));
    U.canonicalize();
    mpq_class V(static_cast<long>(a1),
                static_cast<long>(a2) - static_cast<long>(a1));
    V.canonicalize();
    result.list.equation = SUnitEquation::make(std::move(U), std::move(V));

    const std::uint64_t b_lo = n0 / a1 + 1; // smallest b with a1*b > n0
    const std::uint64_t b_hi = N / a2;
    if (b_hi < b_lo)
        return result;
    if (a2 * b_hi - 1 > table.limit())
        throw range_error("multiplicative_pairs: a2*b-1 exceeds table limit");

    for (std::uint64_t b = b_lo; b <= b_hi; ++b) {
        const std::uint64_t X = a1 * b - 1;
        const std::uint64_t Y = a2 * b - 1;
        if (!is_smooth_fixed(X, y, table) || !is_smooth_fixed(Y, y, table))
            continue;
        result.b_values.push_back(b);
        result.list.solutions.emplace_back(
            integer_sunit(X, result.list.S, table),
            integer_sunit(Y, result.list.S, table));
    }
    return result;
}

CertificationReport certify_count(const SolutionList &sol) {
    CertificationReport r;
    r.M = sol.count();
    r.s = sol.S.size();
    r.exponent = 8 * (2 * r.s + 2);
    r.certified = r.exponent >= 64 || r.M <= (std::uint64_t{1} << r.exponent);
    return r;
}

} // namespace friable
