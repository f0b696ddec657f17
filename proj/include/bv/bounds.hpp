#pragma once

#include <cstdint>

#include "bv/enclosure.hpp"

namespace bv {

// Every explicit constant used by the bound evaluators, in one place. Bound
// code references this table only; no literals are scattered elsewhere.
struct Constants {
    // main bound: A(tau+1) + [B - C/z1^eps + (B - C/z2^eps) tau^2] eps log z1
    static constexpr double A = 1.084;
    static constexpr double B = 1.301;
    static constexpr double C = 0.318;
    // truncated Mobius log-sum bound, k = 1 (k >= 2 drops to 1)
    static constexpr double mcheck_c = 1.00303;
    // harmonic L2 bound: 3.09 * (A(tau+1) + B(1+tau^2) - 0.116) / (tau-1)
    static constexpr double cor2_c = 3.09;
    static constexpr double cor2_drop = 0.116;  // covers C/e = 0.11698...
    static constexpr double cor2_headline = 30.0;   // rounded cover of f(2)
    static constexpr double cor2_f2_rounded = 29.79;
    static constexpr double cor2_sharp_tau2 = 29.18;
    // weighted Mertens sum lower bound coefficient
    static constexpr double mertens_c = 0.318;
    // theta(t) > theta_lo * t on [100, theta_threshold]; above the threshold
    // theta(t) > theta_hi * t is assumed (external result, not verified here)
    static constexpr double theta_lo = 0.835;
    static constexpr double theta_hi = 0.998697;
    static constexpr double theta_threshold = 1155901.0;
    // U(Y) proof constants: 1.00303 * (1.08 log Y + eps log^2 Y (1.297 - C/Y^eps))
    static constexpr double u_proof_a = 1.08;
    static constexpr double u_proof_b = 1.297;
    static constexpr double euler_gamma = 0.5772156649015329;
};

// zeta(1+eps) bracketed by the partial sum to M plus the integral tail
// [int_{M+1}^inf t^{-(1+eps)} dt, int_M^inf t^{-(1+eps)} dt], paired with the
// upper bound e^{gamma*eps}/eps.
struct ZetaCheck {
    Enclosure zeta;   // encloses zeta(1+eps)
    Enclosure bound;  // e^{gamma*eps}/eps
};
ZetaCheck zeta_upper_enclosure(double eps, uint64_t m = 100000);

// Right-hand side of the main L2 bound at z2 = z1^tau:
//   e^{gamma eps}/(eps log(z2/z1)) *
//   (A(tau+1) + [B - C/z1^eps + (B - C/z2^eps) tau^2] eps log z1) / (tau-1).
// Requires z1 >= 100, tau > 1, eps > 0 unless allow_out_of_regime.
Enclosure thm1_rhs(double z1, double tau, double eps,
                   bool allow_out_of_regime = false);

// f(tau) = 3.09 (A(tau+1) + B(1+tau^2) - 0.116) / (tau-1); f(2) = 29.79...
Enclosure f_tau(double tau);

// f(tau) * log X / log(z2/z1). Requires X >= z1 >= 100, tau > 1.
Enclosure cor2_rhs(double x, double z1, double tau,
                   bool allow_out_of_regime = false);

// X^{2-2alpha} * cor2_rhs; alpha in [1/2, 1].
Enclosure cor3_rhs(double x, double z1, double tau, double alpha,
                   bool allow_out_of_regime = false);

// 0.318 * log^2 Y.
Enclosure mertens_lower(double y);

// 1.00303 * (1.08 log Y + eps log^2 Y (1.297 - 0.318/Y^eps)), the proof-final
// form of the U(Y) bound. Requires Y >= 100, eps >= 0 unless allowed.
Enclosure u_rhs(double y, double eps, bool allow_out_of_regime = false);

// c_k * (q/phi(q)) * (k + (sigma-1) log X) * log^{k-1} X with c_1 = 1.00303
// and c_k = 1 for k >= 2.
Enclosure mcheck_rhs(uint64_t q, double x, double sigma, int k);

}  // namespace bv
