#include "friable/decomp.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "friable/errors.hpp"
#include "friable/psi.hpp"
#include "friable/sunit.hpp"

namespace friable {

std::string to_string(Mode m) {
    return m == Mode::Additive ? "additive" : "multiplicative";
}

Mode mode_from_string(const std::string &s) {
    if (s == "additive" || s == "add")
        return Mode::Additive;
    if (s == "multiplicative" || s == "mul")
        return Mode::Multiplicative;
    throw argument_error("unknown mode '" + s + "'");
}

std::string to_string(CaseLabel c) {
    switch (c) {
    case CaseLabel::Case1:
        return "CASE1";
    case CaseLabel::Case2:
        return "CASE2";
    case CaseLabel::OutOfHypothesis:
        return "out-of-hypothesis";
    }
    return "";
}

WindowSet WindowSet::make(SortedIntSet elements, std::uint64_t n0,
                          std::uint64_t N) {
    if (n0 > N)
        throw argument_error("WindowSet: inverted window");
    if (!elements.empty() && (elements.min() < n0 || elements.max() > N))
        throw argument_error("WindowSet: elements outside [n0, N]");
    return WindowSet{std::move(elements), n0, N};
}

namespace {

std::uint64_t checked_combine(std::uint64_t a, std::uint64_t b, Mode mode) {
    if (mode == Mode::Additive) {
        const std::uint64_t s = a + b;
        if (s < a)
            throw capacity_error("combine: addition overflow");
        return s;
    }
    if (a != 0 && b > UINT64_MAX / a)
        throw capacity_error("combine: multiplication overflow");
    return a * b;
}

} // namespace

SortedIntSet combine(const SortedIntSet &B, const SortedIntSet &C, Mode mode) {
    if (mode == Mode::Multiplicative) {
        if ((!B.empty() && B.min() == 0) || (!C.empty() && C.min() == 0))
            throw argument_error(
                "combine: multiplicative sets must have positive elements");
    }
    std::vector<std::uint64_t> out;
    out.reserve(B.size() * C.size());
    for (std::uint64_t b : B.values())
        for (std::uint64_t c : C.values())
            out.push_back(checked_combine(b, c, mode));
    return SortedIntSet::from_values(std::move(out));
}

bool verify_certificate(const WindowSet &target,
                        const DecompositionCertificate &cert) {
    if (cert.verify_lo > cert.verify_hi || cert.verify_lo < target.n0 ||
        cert.verify_hi > target.N)
        throw argument_error(
            "verify_certificate: verify window outside the target window");
    if (cert.B.size() < 2 || cert.C.size() < 2)
        return false;

    const SortedIntSet combined = combine(cert.B, cert.C, cert.mode);
    // Values above the verify window cannot be checked against the target,
    // so a certificate that produces them is rejected outright.  Values
    // below the window fall in the unconstrained low segment.
    if (!combined.empty() && combined.max() > cert.verify_hi)
        return false;

    auto in_window = [&](const SortedIntSet &s) {
        std::vector<std::uint64_t> w;
        for (std::uint64_t v : s.values())
            if (v >= cert.verify_lo && v <= cert.verify_hi)
                w.push_back(v);
        return w;
    };
    return in_window(combined) == in_window(target.elements);
}

namespace {

// Growable bitset over the target's element indices.
class CoverMask {
  public:
    explicit CoverMask(std::size_t bits = 0) : bits_(bits), words_((bits + 63) / 64, 0) {}
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void or_with(const CoverMask &o) {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= o.words_[i];
    }
    bool covers_all_with(const CoverMask &o) const {
        const std::size_t full_words = bits_ / 64;
        for (std::size_t i = 0; i < full_words; ++i)
            if ((words_[i] | o.words_[i]) != ~std::uint64_t{0})
                return false;
        const std::size_t rem = bits_ & 63;
        if (rem) {
            const std::uint64_t m = (std::uint64_t{1} << rem) - 1;
            if (((words_.back() | o.words_.back()) & m) != m)
                return false;
        }
        return true;
    }

  private:
    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

struct Searcher {
    Mode mode;
    std::vector<std::uint64_t> A; // target elements, ascending
    std::uint64_t lo, hi;         // verify window
    std::uint64_t base;           // smallest legal element (0 or 1)
    std::uint64_t max_element;
    SearchLimits limits;

    std::uint64_t nodes = 0;
    bool budget_hit = false;
    bool done = false; // max_certificates reached
    std::set<std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>>>
        found;

    bool element_of_A(std::uint64_t v) const {
        return std::binary_search(A.begin(), A.end(), v);
    }

    std::size_t index_of_A(std::uint64_t v) const {
        return static_cast<std::size_t>(
            std::lower_bound(A.begin(), A.end(), v) - A.begin());
    }

    std::uint64_t prod(std::uint64_t a, std::uint64_t b) const {
        return mode == Mode::Additive ? a + b : a * b;
    }

    // A candidate pair is admissible when its combined value either lies in
    // the target or falls below the window.  (Values above the window are
    // excluded by the anchor: everything here is <= max(A).)
    bool pair_ok(std::uint64_t b, std::uint64_t c) const {
        const std::uint64_t s = prod(b, c);
        return s < lo || element_of_A(s);
    }

    bool tick() {
        if (++nodes > limits.node_budget) {
            budget_hit = true;
            return false;
        }
        return true;
    }

    void emit(const std::vector<std::uint64_t> &B,
              const std::vector<std::uint64_t> &C) {
        auto canon = std::make_pair(B, C);
        if (canon.second < canon.first)
            std::swap(canon.first, canon.second);
        found.insert(std::move(canon));
        if (found.size() >= limits.max_certificates)
            done = true;
    }

    // Enumerate all covering C subsets of c_pool (v is already in C).
    void enumerate_C(const std::vector<std::uint64_t> &B,
                     const std::vector<std::uint64_t> &c_pool,
                     std::uint64_t v) {
        // Per-candidate coverage masks over A.
        std::vector<std::uint64_t> cands; // descending, excluding v
        for (auto it = c_pool.rbegin(); it != c_pool.rend(); ++it)
            if (*it != v)
                cands.push_back(*it);

        auto mask_of = [&](std::uint64_t c) {
            CoverMask m(A.size());
            for (std::uint64_t b : B) {
                const std::uint64_t s = prod(b, c);
                if (s >= lo && element_of_A(s))
                    m.set(index_of_A(s));
            }
            return m;
        };

        std::vector<CoverMask> masks;
        masks.reserve(cands.size());
        for (std::uint64_t c : cands)
            masks.push_back(mask_of(c));
        // suffix_or[i] = union of masks[i..]; suffix_or[n] = empty
        std::vector<CoverMask> suffix_or(cands.size() + 1, CoverMask(A.size()));
        for (std::size_t i = cands.size(); i-- > 0;) {
            suffix_or[i] = suffix_or[i + 1];
            suffix_or[i].or_with(masks[i]);
        }

        std::vector<std::uint64_t> C{v};
        CoverMask covered = mask_of(v);

        auto rec = [&](auto &&self, std::size_t idx) -> void {
            if (budget_hit || done || !tick())
                return;
            if (!covered.covers_all_with(suffix_or[idx]))
                return; // cannot cover the target anymore
            if (idx == cands.size()) {
                // the coverage prune above already checked against the
                // empty suffix, so C covers the whole target here
                if (C.size() >= 2) {
                    std::vector<std::uint64_t> c_sorted(C);
                    std::sort(c_sorted.begin(), c_sorted.end());
                    emit(B, c_sorted);
                }
                return;
            }
            if (C.size() < limits.max_set_size) {
                CoverMask saved = covered;
                C.push_back(cands[idx]);
                covered.or_with(masks[idx]);
                self(self, idx + 1);
                C.pop_back();
                covered = saved;
            }
            self(self, idx + 1);
        };
        rec(rec, 0);
    }

    // Can every target element still be produced from (B or rest) x c_pool?
    bool coverage_feasible(const std::vector<std::uint64_t> &B,
                           const std::vector<std::uint64_t> &b_rest,
                           const std::vector<std::uint64_t> &c_pool) const {
        for (std::uint64_t a : A) {
            bool ok = false;
            auto try_b = [&](std::uint64_t b) {
                if (ok)
                    return;
                if (mode == Mode::Additive) {
                    if (b > a)
                        return;
                    ok = std::binary_search(c_pool.begin(), c_pool.end(), a - b);
                } else {
                    if (b == 0 || a % b != 0)
                        return;
                    ok = std::binary_search(c_pool.begin(), c_pool.end(), a / b);
                }
            };
            for (std::uint64_t b : B) {
                try_b(b);
                if (ok)
                    break;
            }
            if (!ok)
                for (std::uint64_t b : b_rest) {
                    try_b(b);
                    if (ok)
                        break;
                }
            if (!ok)
                return false;
        }
        return true;
    }

    // DFS over b_cands (descending).  B always contains the anchor u.
    void search_B(std::vector<std::uint64_t> &B,
                  const std::vector<std::uint64_t> &b_cands, std::size_t idx,
                  const std::vector<std::uint64_t> &c_pool, std::uint64_t v) {
        if (budget_hit || done || !tick())
            return;
        if (c_pool.size() < 2 ||
            !std::binary_search(c_pool.begin(), c_pool.end(), v))
            return;
        std::vector<std::uint64_t> rest(b_cands.begin() +
                                            static_cast<std::ptrdiff_t>(idx),
                                        b_cands.end());
        if (!coverage_feasible(B, rest, c_pool))
            return;
        if (idx == b_cands.size()) {
            if (B.size() >= 2) {
                std::vector<std::uint64_t> b_sorted(B);
                std::sort(b_sorted.begin(), b_sorted.end());
                enumerate_C(b_sorted, c_pool, v);
            }
            return;
        }
        const std::uint64_t e = b_cands[idx];
        if (B.size() < limits.max_set_size) {
            std::vector<std::uint64_t> filtered;
            filtered.reserve(c_pool.size());
            for (std::uint64_t c : c_pool)
                if (pair_ok(e, c))
                    filtered.push_back(c);
            B.push_back(e);
            search_B(B, b_cands, idx + 1, filtered, v);
            B.pop_back();
        }
        search_B(B, b_cands, idx + 1, c_pool, v);
    }

    void run_anchor(std::uint64_t u, std::uint64_t v) {
        // Pool scans count against the node budget.
        std::vector<std::uint64_t> b_pool, c_pool;
        for (std::uint64_t e = base; e < u; ++e) {
            if (!tick())
                return;
            if (pair_ok(e, v))
                b_pool.push_back(e); // ascending; u handled separately
        }
        for (std::uint64_t e = base; e < v; ++e) {
            if (!tick())
                return;
            if (pair_ok(u, e))
                c_pool.push_back(e);
        }
        c_pool.push_back(v);
        if (b_pool.empty() || c_pool.size() < 2)
            return; // |B| >= 2 needs at least one candidate besides u

        std::vector<std::uint64_t> b_cands(b_pool.rbegin(), b_pool.rend());
        std::vector<std::uint64_t> B{u};
        search_B(B, b_cands, 0, c_pool, v);
    }

    void run() {
        if (A.empty())
            return;
        const std::uint64_t aK = A.back();
        if (mode == Mode::Additive) {
            for (std::uint64_t u = base; u <= aK - u; ++u) {
                if (budget_hit || done)
                    break;
                const std::uint64_t v = aK - u;
                if (u > max_element || v > max_element)
                    continue;
                run_anchor(u, v);
                if (u * 2 == aK)
                    break;
            }
        } else {
            for (std::uint64_t u = 1; u <= aK / u; ++u) {
                if (budget_hit || done)
                    break;
                if (aK % u != 0)
                    continue;
                const std::uint64_t v = aK / u;
                if (u > max_element || v > max_element)
                    continue;
                run_anchor(u, v);
            }
        }
    }
};

} // namespace

SearchResult search_decompositions(const WindowSet &target, Mode mode,
                                   std::uint64_t max_element,
                                   const SearchLimits &limits) {
    if (mode == Mode::Multiplicative && !target.elements.empty() &&
        target.elements.min() == 0)
        throw argument_error(
            "search_decompositions: multiplicative target contains 0");

    Searcher s;
    s.mode = mode;
    s.A = target.elements.values();
    s.lo = target.n0;
    s.hi = target.N;
    s.base = (mode == Mode::Additive) ? 0 : 1;
    s.max_element = max_element;
    s.limits = limits;
    s.run();

    SearchResult result;
    result.status =
        s.budget_hit || (s.done && s.found.size() >= limits.max_certificates)
            ? SearchStatus::BudgetExceeded
            : SearchStatus::Exhausted;
    result.nodes = s.nodes;
    result.universe_lo = s.base;
    result.universe_hi = max_element;
    result.mode = mode;
    result.window_lo = target.n0;
    result.window_hi = target.N;
    for (const auto &[B, C] : s.found) {
        DecompositionCertificate cert;
        cert.B = SortedIntSet::from_sorted(B);
        cert.C = SortedIntSet::from_sorted(C);
        cert.mode = mode;
        cert.verify_lo = target.n0;
        cert.verify_hi = target.N;
        result.certificates.push_back(std::move(cert));
    }
    std::sort(result.certificates.begin(), result.certificates.end(),
              [](const DecompositionCertificate &a,
                 const DecompositionCertificate &b) {
                  if (a.B.size() != b.B.size())
                      return a.B.size() < b.B.size();
                  if (a.B.values() != b.B.values())
                      return a.B.values() < b.B.values();
                  if (a.C.size() != b.C.size())
                      return a.C.size() < b.C.size();
                  return a.C.values() < b.C.values();
              });
    return result;
}

std::vector<std::uint64_t> growth_scales(const SortedIntSet &A,
                                         const SortedIntSet &B,
                                         std::uint64_t m, std::uint64_t D_max) {
    if (m == 0)
        throw argument_error("growth_scales: m must be positive");
    std::vector<std::uint64_t> out;
    for (std::uint64_t D = 1; D <= D_max; ++D) {
        const std::uint64_t mD = (m > UINT64_MAX / D) ? UINT64_MAX : m * D;
        const unsigned __int128 lhs =
            static_cast<unsigned __int128>(A.counting(mD)) * B.counting(mD);
        const unsigned __int128 rhs =
            (static_cast<unsigned __int128>(m) * m + 1) *
            (static_cast<unsigned __int128>(A.counting(D)) * B.counting(D));
        if (lhs < rhs)
            out.push_back(D);
    }
    return out;
}

CaseLabel case_classifier(double log_N, double y_value) {
    if (!(log_N > std::numbers::e))
        throw argument_error("case_classifier: need log N > e");
    const double loglog = std::log(log_N);
    if (y_value < 2)
        return CaseLabel::OutOfHypothesis;
    if (y_value <= loglog)
        return CaseLabel::Case1;
    if (y_value < std::ldexp(log_N, -32)) // 2^-32 * log N
        return CaseLabel::Case2;
    return CaseLabel::OutOfHypothesis;
}

namespace {

PipelineReport finish_report(PipelineReport r, double y, std::uint64_t N,
                             std::uint64_t m) {
    r.y_value = y;
    r.s = prime_count(y);
    r.psi = psi_exact(N, y);
    r.log2_psi = std::log2(static_cast<double>(r.psi));
    r.lhs = std::sqrt(static_cast<double>(r.psi)) / (3.0 * static_cast<double>(m));
    r.lhs_log2 = 0.5 * r.log2_psi - std::log2(3.0 * static_cast<double>(m));
    r.rhs_exponent = 8 * (2 * r.s + 2);
    // lhs >= 2^rhs_exponent, compared in log2 to dodge astronomic values
    r.contradiction_reached =
        r.lhs_log2 >= static_cast<double>(r.rhs_exponent);
    const double log_N = std::log(static_cast<double>(N));
    r.case_label = log_N > std::numbers::e ? case_classifier(log_N, y)
                                           : CaseLabel::OutOfHypothesis;
    r.N = N;
    r.m = m;
    return r;
}

} // namespace

PipelineReport theorem1_pipeline(double y, std::uint64_t a1, std::uint64_t a2,
                                 std::uint64_t n0, std::uint64_t N,
                                 const FactorTable &table) {
    if (a1 >= a2)
        throw argument_error("theorem1_pipeline: need a1 < a2");
    if (n0 < 1 || n0 > N)
        throw argument_error("theorem1_pipeline: need 1 <= n0 <= N");
    if (N > table.limit())
        throw range_error("theorem1_pipeline: N exceeds table limit");

    const std::uint64_t d = a2 - a1;
    const SolutionList pairs = smooth_pair_difference(y, d, n0, N, table);

    PipelineReport r;
    // b = Y - a1 restricted to [max(0, n0 - a1), N - a2]; the scan already
    // enforces n0 <= Y and X <= N, so only b >= 0 needs the filter.
    for (const auto &[X, Y] : pairs.solutions) {
        const mpq_class yv = Y.value(pairs.S);
        const std::uint64_t Yi = mpz_get_ui(yv.get_num().get_mpz_t());
        if (Yi >= a1)
            r.b_values.push_back(Yi - a1);
    }
    r.M = r.b_values.size();
    r.a1 = a1;
    r.a2 = a2;
    r.n0 = n0;
    return finish_report(std::move(r), y, N, 1);
}

PipelineReport theorem2_pipeline(double y, std::uint64_t a1, std::uint64_t a2,
                                 std::uint64_t n0, std::uint64_t N,
                                 std::uint64_t m, const FactorTable &table) {
    if (m == 0)
        throw argument_error("theorem2_pipeline: m must be positive");
    if (n0 > N)
        throw argument_error("theorem2_pipeline: need n0 <= N");

    const MultiplicativePairs mp = multiplicative_pairs(a1, a2, y, n0, N, table);

    PipelineReport r;
    r.b_values = mp.b_values;
    r.M = mp.b_values.size();
    r.a1 = a1;
    r.a2 = a2;
    r.n0 = n0;
    return finish_report(std::move(r), y, N, m);
}

} // namespace friable
