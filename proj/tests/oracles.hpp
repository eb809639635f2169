// Test-side reference implementations, deliberately independent of the
// library's algorithms: trial division instead of sieved tables, direct
// counting instead of the Buchstab recursion, exhaustive loops instead of
// pruned search.
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace oracles {

inline std::uint64_t gpf(std::uint64_t n) {
    if (n == 1)
        return 1;
    std::uint64_t best = 1;
    for (std::uint64_t p = 2; p <= n / p; ++p) {
        while (n % p == 0) {
            best = p;
            n /= p;
        }
    }
    return n > 1 ? n : best;
}

inline bool smooth(std::uint64_t n, double y) {
    return n == 1 || static_cast<double>(gpf(n)) <= y;
}

// Psi(x, y) by factoring every n <= x.
inline std::uint64_t psi(std::uint64_t x, double y) {
    std::uint64_t count = 0;
    for (std::uint64_t n = 1; n <= x; ++n)
        if (smooth(n, y))
            ++count;
    return count;
}

inline std::vector<std::uint64_t> primes(std::uint64_t limit) {
    std::vector<std::uint64_t> ps;
    for (std::uint64_t n = 2; n <= limit; ++n) {
        bool prime = true;
        for (std::uint64_t p = 2; p <= n / p; ++p)
            if (n % p == 0) {
                prime = false;
                break;
            }
        if (prime)
            ps.push_back(n);
    }
    return ps;
}

// Exact rational with small integer parts; enough for the naive S-unit
// checks where all values stay far below 2^31.
struct Rat {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rat make(std::int64_t n, std::int64_t d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        const std::int64_t g = std::gcd(n < 0 ? -n : n, d);
        return g ? Rat{n / g, d / g} : Rat{0, 1};
    }
    friend bool operator==(const Rat &a, const Rat &b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Rat &a, const Rat &b) {
        return static_cast<__int128>(a.num) * b.den <
               static_cast<__int128>(b.num) * a.den;
    }
};

// All S-unit values with |e_i| <= bound as (num, den) pairs, signed domain.
inline std::vector<Rat> sunit_values(const std::vector<std::uint64_t> &S,
                                     std::uint64_t bound, bool positive_only) {
    std::vector<Rat> vals{Rat{1, 1}};
    for (std::uint64_t p : S) {
        std::vector<Rat> next;
        for (const Rat &r : vals) {
            for (std::int64_t e = positive_only ? 0 : -static_cast<std::int64_t>(bound);
                 e <= static_cast<std::int64_t>(bound); ++e) {
                Rat q = r;
                for (std::int64_t i = 0; i < (e < 0 ? -e : e); ++i) {
                    if (e > 0)
                        q.num *= static_cast<std::int64_t>(p);
                    else
                        q.den *= static_cast<std::int64_t>(p);
                }
                next.push_back(Rat::make(q.num, q.den));
            }
        }
        vals = std::move(next);
    }
    if (!positive_only) {
        std::vector<Rat> with_sign;
        with_sign.reserve(vals.size() * 2);
        for (const Rat &r : vals) {
            with_sign.push_back(r);
            with_sign.push_back(Rat{-r.num, r.den});
        }
        vals = std::move(with_sign);
    }
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    return vals;
}

// Naive double loop: every pair (X, Y), checked by cross-multiplication.
// U = un/ud, V = vn/vd.
inline std::vector<std::pair<Rat, Rat>>
sunit_solutions(std::int64_t un, std::int64_t ud, std::int64_t vn,
                std::int64_t vd, const std::vector<Rat> &units) {
    std::vector<std::pair<Rat, Rat>> out;
    for (const Rat &x : units) {
        const std::int64_t uxn = un * x.num, uxd = ud * x.den;
        for (const Rat &y : units) {
            const std::int64_t vyn = vn * y.num, vyd = vd * y.den;
            // un*xn/(ud*xd) + vn*yn/(vd*yd) == 1
            if (static_cast<__int128>(uxn) * vyd +
                    static_cast<__int128>(vyn) * uxd ==
                static_cast<__int128>(uxd) * vyd)
                out.emplace_back(x, y);
        }
    }
    return out;
}

// Windowed decomposition oracle: enumerate every B over the universe
// [base, max_el] as a bitmask, take the maximal compatible C, and test
// coverage.  A valid (B, C) exists iff a valid (B, maximal C) exists,
// because shrinking C only loses coverage.
struct DecompInstance {
    std::vector<std::uint64_t> A; // target elements, ascending
    std::uint64_t lo, hi;         // verify window
    bool multiplicative;
    std::uint64_t max_el;
};

// Every valid certificate pair over the universe, canonicalized (B <= C
// lexicographically), by brute force over both bitmasks.  Only for tiny
// universes.
inline std::vector<std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>>>
all_certificates(const DecompInstance &in) {
    const std::uint64_t base = in.multiplicative ? 1 : 0;
    std::vector<std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>>>
        out;
    if (in.A.empty())
        return out;
    auto elem = [&](std::uint64_t v) {
        return std::binary_search(in.A.begin(), in.A.end(), v);
    };
    auto comb = [&](std::uint64_t a, std::uint64_t b) {
        return in.multiplicative ? a * b : a + b;
    };
    auto ok = [&](std::uint64_t s) { return s <= in.hi && (s < in.lo || elem(s)); };

    const std::uint64_t n = in.max_el - base + 1;
    std::vector<std::uint64_t> universe(n);
    for (std::uint64_t i = 0; i < n; ++i)
        universe[i] = base + i;
    auto unpack = [&](std::uint64_t mask) {
        std::vector<std::uint64_t> s;
        for (std::uint64_t i = 0; i < n; ++i)
            if (mask & (std::uint64_t{1} << i))
                s.push_back(universe[i]);
        return s;
    };

    for (std::uint64_t bm = 0; bm < (std::uint64_t{1} << n); ++bm) {
        if (std::popcount(bm) < 2)
            continue;
        const auto B = unpack(bm);
        for (std::uint64_t cm = bm; cm < (std::uint64_t{1} << n); ++cm) {
            if (std::popcount(cm) < 2)
                continue;
            const auto C = unpack(cm);
            bool valid = true;
            for (std::uint64_t b : B) {
                for (std::uint64_t c : C)
                    if (!ok(comb(b, c))) {
                        valid = false;
                        break;
                    }
                if (!valid)
                    break;
            }
            if (!valid)
                continue;
            for (std::uint64_t a : in.A) {
                bool covered = false;
                for (std::uint64_t b : B) {
                    for (std::uint64_t c : C)
                        if (comb(b, c) == a) {
                            covered = true;
                            break;
                        }
                    if (covered)
                        break;
                }
                if (!covered) {
                    valid = false;
                    break;
                }
            }
            if (valid) {
                auto p = std::make_pair(B, C);
                if (p.second < p.first)
                    std::swap(p.first, p.second);
                out.push_back(std::move(p));
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline bool decomposable(const DecompInstance &in) {
    const std::uint64_t base = in.multiplicative ? 1 : 0;
    if (in.A.empty())
        return false;
    auto elem = [&](std::uint64_t v) {
        return std::binary_search(in.A.begin(), in.A.end(), v);
    };
    auto comb = [&](std::uint64_t a, std::uint64_t b) {
        return in.multiplicative ? a * b : a + b;
    };
    auto ok = [&](std::uint64_t s) { return s <= in.hi && (s < in.lo || elem(s)); };

    const std::uint64_t n = in.max_el - base + 1;
    std::vector<std::uint64_t> universe(n);
    for (std::uint64_t i = 0; i < n; ++i)
        universe[i] = base + i;

    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (std::popcount(mask) < 2)
            continue;
        std::vector<std::uint64_t> B;
        for (std::uint64_t i = 0; i < n; ++i)
            if (mask & (std::uint64_t{1} << i))
                B.push_back(universe[i]);
        // maximal compatible C
        std::vector<std::uint64_t> C;
        for (std::uint64_t c : universe) {
            bool fine = true;
            for (std::uint64_t b : B)
                if (!ok(comb(b, c))) {
                    fine = false;
                    break;
                }
            if (fine)
                C.push_back(c);
        }
        if (C.size() < 2)
            continue;
        // coverage of the window content
        bool covered_all = true;
        for (std::uint64_t a : in.A) {
            bool covered = false;
            for (std::uint64_t b : B) {
                if (covered)
                    break;
                for (std::uint64_t c : C)
                    if (comb(b, c) == a) {
                        covered = true;
                        break;
                    }
            }
            if (!covered) {
                covered_all = false;
                break;
            }
        }
        if (covered_all)
            return true;
    }
    return false;
}

} // namespace oracles
