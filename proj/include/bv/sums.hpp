#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "bv/enclosure.hpp"
#include "bv/sieve.hpp"
#include "bv/weights.hpp"

namespace bv {

// m_q(X, sigma, k) = sum_{n <= X, (n,q)=1} mu(n) n^{-sigma} log^k(X/n).
// Finite truncated sum; the enclosure covers rounding only. Requires the mu
// table to reach floor(X). k >= 1, X > 0.
Enclosure mcheck(uint64_t q, double x, double sigma, int k,
                 const SieveTables& tables);

// S(Y) = sum_{p <= Y} (log p / p) log(Y/p) = log(Y) * P1(Y) - P2(Y) with
// P1 = sum log p / p and P2 = sum log^2 p / p, exposed separately for the
// range-scan reducer. For 0 < Y < 2 the sums are empty: value 0 with
// below_two set. Y <= 0 is a usage error.
struct MertensSums {
    Enclosure p1;
    Enclosure p2;
    Enclosure value;
    bool below_two = false;
};
MertensSums mertens_weighted_sum(double y, const SieveTables& tables);

// U(Y) = sum_{delta <= Y squarefree} phi_sigma(delta) delta^{-2 sigma}
//        * m_delta(Y/delta, sigma)^2.
// Double loop, O(Y log Y) inner terms; capped at Y <= cap (default 1e5).
Enclosure u_sum(double y, double sigma, const SieveTables& tables,
                double cap = 1e5);

// T(n) = sum_{d | n} lambda_d for all n <= X, accumulated harmonically:
// every squarefree d < z2 adds lambda_d to its multiples, ascending d, so a
// per-n divisor enumeration in ascending d order reproduces the values
// exactly. Work is sum_d X/d = O(X log min(z2, X)).
struct DivisorSumTable {
    uint64_t limit = 0;
    WeightConfig cfg;
    std::vector<double> value;    // [0, limit], value[0] unused
    std::vector<double> abs_err;
    Enclosure at(uint64_t n) const { return {value[n], abs_err[n]}; }
};
DivisorSumTable divisor_sums(uint64_t x, const WeightConfig& cfg,
                             const SieveTables& tables);

// sum_{n <= N} T(n)^2 / n^{1+eps}: a certified lower bound of the full
// series (all terms are nonnegative), usable for one-sided checks at any N.
Enclosure sigma_eps_truncated(const DivisorSumTable& t, double eps);
Enclosure sigma_eps_truncated(const WeightConfig& cfg, double eps, uint64_t n,
                              const SieveTables& tables);

// sum_{n <= X} T(n)^2 / n, exact finite sum.
Enclosure sigma_zero(const DivisorSumTable& t);
Enclosure sigma_zero(const WeightConfig& cfg, uint64_t x,
                     const SieveTables& tables);

// sum_{n <= X} T(n)^2 / n^{2 alpha - 1}, alpha in [1/2, 1]. alpha = 1 takes
// the sigma_zero path verbatim; alpha = 1/2 sums T(n)^2.
Enclosure sigma_alpha(const DivisorSumTable& t, double alpha);
Enclosure sigma_alpha(const WeightConfig& cfg, uint64_t x, double alpha,
                      const SieveTables& tables);

// sum over squarefree d, e < z2 of w_d w_e / lcm(d,e)^sigma for an arbitrary
// weight vector (always nonnegative by the diagonalized form).
Enclosure quadratic_form(
    std::span<const std::pair<uint64_t, Enclosure>> weights, double sigma);

// The two routes to the same quadratic form in the Barban-Vehov weights:
// expanded double sum over pairs, and the Selberg-diagonalized sum of
// squares sum_delta phi_sigma(delta) delta^{-2 sigma}
// (sum_{(l,delta)=1} lambda_{delta l} / l^sigma)^2.
// Both require sigma > 1 and cap the support at z2 <= z2_cap (default 2000).
Enclosure bilinear_form(const WeightConfig& cfg, double sigma,
                        const SieveTables& tables, double z2_cap = 2000.0);
Enclosure diagonal_form(const WeightConfig& cfg, double sigma,
                        const SieveTables& tables, double z2_cap = 2000.0);

// lcm on 64-bit integers with an overflow check.
uint64_t lcm_checked(uint64_t a, uint64_t b);

}  // namespace bv
