#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "friable/factor_table.hpp"
#include "friable/sorted_set.hpp"

namespace friable {

enum class Mode { Additive, Multiplicative };

std::string to_string(Mode m);
Mode mode_from_string(const std::string &s);

/// A finite set together with the window [n0, N] on which it is
/// authoritative.  Below n0 the underlying infinite set is unconstrained
/// (asymptotic-equality semantics); above N it is unknown.
struct WindowSet {
    SortedIntSet elements;
    std::uint64_t n0 = 0;
    std::uint64_t N = 0;

    /// Validates n0 <= N and elements within [n0, N].
    static WindowSet make(SortedIntSet elements, std::uint64_t n0,
                          std::uint64_t N);
};

/// A witnessing pair (B, C) for target = B + C (or B * C), checked on
/// [verify_lo, verify_hi].
struct DecompositionCertificate {
    SortedIntSet B, C;
    Mode mode = Mode::Additive;
    std::uint64_t verify_lo = 0;
    std::uint64_t verify_hi = 0;
};

/// Sumset {b+c} or product set {b*c}, sorted and deduplicated.
/// Multiplicative mode requires positive elements (argument_error on 0);
/// overflow is a capacity_error, never a silent wrap.
SortedIntSet combine(const SortedIntSet &B, const SortedIntSet &C, Mode mode);

/// True iff |B|, |C| >= 2, combine(B, C) agrees with the target on
/// [verify_lo, verify_hi], and no combined value exceeds verify_hi.
/// Combined values below verify_lo are ignored (the low segment is
/// unconstrained); values above the window would be unverifiable against
/// the target and so invalidate the certificate.
/// Requires [verify_lo, verify_hi] within [target.n0, target.N].
bool verify_certificate(const WindowSet &target,
                        const DecompositionCertificate &cert);

struct SearchLimits {
    std::uint64_t node_budget = 1'000'000;
    std::uint64_t max_certificates = UINT64_MAX;
    std::uint64_t max_set_size = 64; // cap on |B| and |C|
};

enum class SearchStatus {
    Exhausted,     // full candidate space explored
    BudgetExceeded // partial result; absence of certificates proves nothing
};

/// Search outcome plus a record of the space that was covered.
struct SearchResult {
    SearchStatus status = SearchStatus::Exhausted;
    std::vector<DecompositionCertificate> certificates; // canonical, B <=lex C
    std::uint64_t nodes = 0;
    std::uint64_t universe_lo = 0; // candidate elements ranged over
    std::uint64_t universe_hi = 0; // [universe_lo, universe_hi]
    Mode mode = Mode::Additive;
    std::uint64_t window_lo = 0;
    std::uint64_t window_hi = 0;
};

/// Exhaustive windowed decomposition search over candidate elements
/// <= max_element.  Every unordered certificate pair is reported once
/// (B lexicographically <= C), in deterministic order sorted by (|B|, B).
/// Anchored on max(B) o max(C) = max(target): candidate generators are cut
/// down by compatibility with the anchor element on the opposite side.
SearchResult search_decompositions(const WindowSet &target, Mode mode,
                                   std::uint64_t max_element,
                                   const SearchLimits &limits = {});

/// All D in [1, D_max] with A(mD) B(mD) < (m^2 + 1) A(D) B(D), where A(.)
/// and B(.) are the counting functions.  Requires m >= 1.
std::vector<std::uint64_t> growth_scales(const SortedIntSet &A,
                                         const SortedIntSet &B,
                                         std::uint64_t m, std::uint64_t D_max);

enum class CaseLabel { Case1, Case2, OutOfHypothesis };

std::string to_string(CaseLabel c);

/// Classifies the cutoff against the two proof regimes:
///   CASE1 when 2 <= y <= ln(log_N),
///   CASE2 when ln(log_N) < y < 2^-32 * log_N,
/// out-of-hypothesis otherwise (including every y < 2).
/// N is supplied as log_N = ln N (argument_error unless log_N > e).
CaseLabel case_classifier(double log_N, double y_value);

/// Two-sided report of the contradiction inequality
///   (1/(3m)) Psi(N, y)^{1/2}  <  2^{8(2 pi(y) + 2)}.
/// At desk scale the left side never reaches the right; the report shows
/// both sides (and their log2) rather than claiming a proof.
struct PipelineReport {
    double y_value = 0;
    std::uint64_t s = 0;            // pi(y)
    std::uint64_t psi = 0;          // Psi(N, y), exact
    double log2_psi = 0;
    double lhs = 0;                 // (1/(3m)) * sqrt(psi)
    double lhs_log2 = 0;
    std::uint64_t rhs_exponent = 0; // 8(2s+2)
    std::uint64_t M = 0;            // solution count from the pair scan
    std::vector<std::uint64_t> b_values;
    CaseLabel case_label = CaseLabel::OutOfHypothesis;
    bool contradiction_reached = false;
    // echo of the instance
    std::uint64_t a1 = 0, a2 = 0, n0 = 0, N = 0, m = 1;
};

/// Additive pipeline: M counts b with a1 + b and a2 + b both y-smooth,
/// b in [max(0, n0 - a1), N - a2], via the difference-pair scan with
/// d = a2 - a1; lhs uses m = 1.
PipelineReport theorem1_pipeline(double y, std::uint64_t a1, std::uint64_t a2,
                                 std::uint64_t n0, std::uint64_t N,
                                 const FactorTable &table);

/// Multiplicative pipeline: M counts b in (n0/a1, N/a2] with a1 b - 1 and
/// a2 b - 1 both y-smooth; lhs carries the caller-supplied 1/(3m) factor.
PipelineReport theorem2_pipeline(double y, std::uint64_t a1, std::uint64_t a2,
                                 std::uint64_t n0, std::uint64_t N,
                                 std::uint64_t m, const FactorTable &table);

} // namespace friable
