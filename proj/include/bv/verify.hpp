#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "bv/bounds.hpp"
#include "bv/enclosure.hpp"
#include "bv/sieve.hpp"
#include "bv/sums.hpp"
#include "bv/weights.hpp"

namespace bv {

// PASS requires the claim to hold with the enclosures fully separated
// (center distance at least the combined abs_err); a claim violated even
// under the optimistic reading is FAIL; anything in between is INCONCLUSIVE,
// never silently passed. SKIPPED marks out-of-regime grid points.
enum class Verdict { Pass, Fail, Inconclusive, Skipped };

const char* to_string(Verdict v);

struct CaseResult {
    std::vector<std::pair<std::string, double>> params;
    std::string note;
    Enclosure lhs;
    Enclosure rhs;
    double margin = 0.0;
    Verdict verdict = Verdict::Skipped;
};

using Params = std::vector<std::pair<std::string, double>>;

// claim lhs <= rhs; margin = (rhs - lhs) center distance minus combined abs_err
CaseResult check_le(Params params, Enclosure lhs, Enclosure rhs,
                    std::string note = "");
// claim lhs >= rhs (mirrored)
CaseResult check_ge(Params params, Enclosure lhs, Enclosure rhs,
                    std::string note = "");
// claim lhs > rhs (strict: PASS needs margin > 0)
CaseResult check_gt(Params params, Enclosure lhs, Enclosure rhs,
                    std::string note = "");
// claim lhs = rhs within combined abs_err; margin = budget - |difference|
CaseResult check_eq(Params params, Enclosure lhs, Enclosure rhs,
                    std::string note = "");

struct ReportSummary {
    std::size_t n_cases = 0;
    std::size_t n_pass = 0;
    std::size_t n_fail = 0;
    std::size_t n_inconclusive = 0;
    std::size_t n_skipped = 0;
    double min_margin = std::numeric_limits<double>::infinity();
    Params argmin_params;
};

// Range scans check millions of prime intervals; they record only the
// worst-margin case and every non-PASS case (capped), while the summary
// counts all checks. Grid campaigns record every case.
struct VerificationReport {
    std::string campaign;
    std::vector<CaseResult> cases;
    ReportSummary summary;
    double runtime_seconds = 0.0;  // printed, never serialized

    Verdict overall() const;
    // 0 all PASS, 1 any FAIL, 3 any INCONCLUSIVE (no FAIL)
    int exit_code() const;
    std::string one_line_summary() const;
};

// Appends a case and folds it into the summary.
void add_case(VerificationReport& r, CaseResult c);
void sort_cases(VerificationReport& r);

// Proves S(Y) >= 0.318 log^2 Y on the whole continuum [y_min, y_max]:
// between consecutive primes the prefix sums are frozen, so
// g(u) = P1 u - P2 - 0.318 u^2 (u = log Y) is concave and it suffices to
// check both endpoints of every prime interval intersecting the range.
// y_min >= 100.
VerificationReport scan_mertens(double y_min, double y_max,
                                const SieveTables& tables);

// Claim theta(t) > c * t over [t_min, t_max], t_min >= 2. theta is constant
// on [p_k, p_{k+1}), so each interval reduces to one endpoint check:
//   IntegerGrid (default): against the largest integer t in the interval,
//     proving the claim for every integer t in range;
//   Continuum: against the open right end c * p_{k+1}, proving the claim for
//     every real t in range. The continuum claim is strictly stronger; with
//     c = 0.835 it genuinely fails on a sub-interval of (100, 101) (theta(100)
//     = 83.728 < 0.835 * t for t > 100.27) while the integer-grid claim holds
//     from 100 on, so the canonical range check runs on the integer grid.
enum class ThetaScanMode { IntegerGrid, Continuum };
VerificationReport scan_theta(double t_min, double t_max, double c,
                              const SieveTables& tables,
                              ThetaScanMode mode = ThetaScanMode::IntegerGrid);

struct Thm1Point {
    double z1;
    double tau;
    double eps;
    uint64_t n;  // truncation point of the lower-bound LHS
};
VerificationReport verify_theorem1(std::span<const Thm1Point> grid,
                                   const SieveTables& tables,
                                   bool allow_out_of_regime = false);

struct CorPoint {
    double z1;
    double tau;
    uint64_t x;
    double alpha = 1.0;  // used by verify_cor3 only
};
VerificationReport verify_cor2(std::span<const CorPoint> grid,
                               const SieveTables& tables);
VerificationReport verify_cor3(std::span<const CorPoint> grid,
                               const SieveTables& tables);

// Truncated Mobius log-sum grid: 0 <= m_q(X, sigma, k) <= mcheck_rhs, two
// checks per point.
struct McheckPoint {
    uint64_t q;
    double x;
    double sigma;
    int k;
};
VerificationReport verify_mcheck(std::span<const McheckPoint> grid,
                                 const SieveTables& tables);

// U(Y) <= u_rhs(Y, sigma - 1) per point.
struct UsumPoint {
    double y;
    double sigma;
};
VerificationReport verify_usum(std::span<const UsumPoint> grid,
                               const SieveTables& tables);

// Three sub-suites: the gcd identity (d,e)^s = sum_{delta | (d,e)} phi_s(delta)
// exactly in integer arithmetic for s in {1,2} and squarefree d,e <= 30;
// bilinear vs diagonal route agreement for each (cfg, sigma); and 100
// random-weight non-negativity trials of the quadratic form (seeded).
VerificationReport verify_identities(std::span<const WeightConfig> configs,
                                     std::span<const double> sigmas,
                                     const SieveTables& tables,
                                     uint64_t seed = 12345,
                                     int n_trials = 100);

// Audits every explicit constant: P1(100) >= 3.369, P2(100) <= 8.739, the
// prime product prod_{p>=3}(1 + 1/(4p(p-1))) <= 1.08 (partial product to 1e6
// plus an integral tail cover), e^{1+gamma/log 100} <= 3.09, the A and B
// covers of 1.00303*1.08 and 1.00303*1.297, f(2) <= 30, the sharpened tau=2
// constant <= 29.18, and zeta(1+eps) <= e^{gamma eps}/eps on an eps grid.
VerificationReport audit_constants(const SieveTables& tables);

}  // namespace bv
