#include "bv/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "bv/sieve.hpp"

namespace bv {

namespace {

Enclosure dec(double v) { return Enclosure::decimal(v); }

void require(bool ok, const char* msg, bool allow) {
    if (!ok && !allow) throw std::invalid_argument(msg);
}

}  // namespace

ZetaCheck zeta_upper_enclosure(double eps, uint64_t m) {
    if (!(eps > 0.0))
        throw std::invalid_argument("zeta_upper_enclosure: eps must be > 0");
    if (m < 10) throw std::invalid_argument("zeta_upper_enclosure: m too small");

    Enclosure sigma(1.0 + eps, ulp(1.0 + eps));
    ErrorBudgetSum partial;
    for (uint64_t n = 1; n <= m; ++n)
        partial.add(enc_pow(Enclosure(static_cast<double>(n)), -sigma));
    // int_x^inf t^{-(1+eps)} dt = x^{-eps} / eps
    Enclosure eps_e(eps);
    Enclosure tail_hi =
        enc_pow(Enclosure(static_cast<double>(m)), -eps_e) / eps_e;
    Enclosure tail_lo =
        enc_pow(Enclosure(static_cast<double>(m + 1)), -eps_e) / eps_e;
    double lo = (partial.result() + tail_lo).lower();
    double hi = (partial.result() + tail_hi).upper();

    ZetaCheck zc;
    zc.zeta = Enclosure(0.5 * (lo + hi), 0.5 * (hi - lo) + ulp(hi));
    zc.bound = enc_exp(dec(Constants::euler_gamma) * eps_e) / eps_e;
    return zc;
}

Enclosure thm1_rhs(double z1, double tau, double eps, bool allow_out_of_regime) {
    require(z1 >= 100.0, "thm1_rhs: z1 must be >= 100", allow_out_of_regime);
    if (!(tau > 1.0)) throw std::invalid_argument("thm1_rhs: tau must be > 1");
    if (!(eps > 0.0)) throw std::invalid_argument("thm1_rhs: eps must be > 0");

    Enclosure lz1 = enc_log(Enclosure(z1));
    Enclosure e(eps), t(tau);
    Enclosure a = dec(Constants::A), b = dec(Constants::B),
              c = dec(Constants::C);
    // z2 = z1^tau exactly, so z1^{-eps} = e^{-eps log z1} and
    // z2^{-eps} = e^{-eps tau log z1}, log(z2/z1) = (tau - 1) log z1.
    Enclosure z1_me = enc_exp(-(e * lz1));
    Enclosure z2_me = enc_exp(-(e * t * lz1));
    Enclosure bracket = b - c * z1_me + (b - c * z2_me) * t * t;
    Enclosure num = a * (t + Enclosure(1.0)) + bracket * e * lz1;
    Enclosure tm1 = t - Enclosure(1.0);
    Enclosure pref = enc_exp(dec(Constants::euler_gamma) * e) / (e * tm1 * lz1);
    return pref * num / tm1;
}

Enclosure f_tau(double tau) {
    if (!(tau > 1.0)) throw std::invalid_argument("f_tau: tau must be > 1");
    Enclosure t(tau);
    Enclosure num = dec(Constants::A) * (t + Enclosure(1.0)) +
                    dec(Constants::B) * (Enclosure(1.0) + t * t) -
                    dec(Constants::cor2_drop);
    return dec(Constants::cor2_c) * num / (t - Enclosure(1.0));
}

Enclosure cor2_rhs(double x, double z1, double tau, bool allow_out_of_regime) {
    require(z1 >= 100.0 && x >= z1, "cor2_rhs: need X >= z1 >= 100",
            allow_out_of_regime);
    if (!(tau > 1.0)) throw std::invalid_argument("cor2_rhs: tau must be > 1");
    Enclosure log_ratio = (Enclosure(tau) - Enclosure(1.0)) * enc_log(Enclosure(z1));
    return f_tau(tau) * enc_log(Enclosure(x)) / log_ratio;
}

Enclosure cor3_rhs(double x, double z1, double tau, double alpha,
                   bool allow_out_of_regime) {
    if (!(alpha >= 0.5 && alpha <= 1.0))
        throw std::invalid_argument("cor3_rhs: alpha must be in [1/2, 1]");
    Enclosure base = cor2_rhs(x, z1, tau, allow_out_of_regime);
    if (alpha == 1.0) return base;                       // X^0 = 1
    if (alpha == 0.5) return Enclosure(x) * base;        // X^1
    double expo = 2.0 - 2.0 * alpha;  // exact: 2alpha in [1,2], Sterbenz
    return enc_exp(Enclosure(expo) * enc_log(Enclosure(x))) * base;
}

Enclosure mertens_lower(double y) {
    if (!(y > 1.0)) throw std::invalid_argument("mertens_lower: y must be > 1");
    Enclosure ly = enc_log(Enclosure(y));
    return dec(Constants::mertens_c) * ly * ly;
}

Enclosure u_rhs(double y, double eps, bool allow_out_of_regime) {
    require(y >= 100.0, "u_rhs: Y must be >= 100", allow_out_of_regime);
    if (!(eps >= 0.0)) throw std::invalid_argument("u_rhs: eps must be >= 0");
    Enclosure ly = enc_log(Enclosure(y));
    Enclosure e(eps);
    Enclosure y_me = eps == 0.0 ? Enclosure(1.0) : enc_exp(-(e * ly));
    Enclosure inner = dec(Constants::u_proof_a) * ly +
                      e * ly * ly * (dec(Constants::u_proof_b) -
                                     dec(Constants::C) * y_me);
    return dec(Constants::mcheck_c) * inner;
}

Enclosure mcheck_rhs(uint64_t q, double x, double sigma, int k) {
    if (q < 1) throw std::invalid_argument("mcheck_rhs: q must be >= 1");
    if (!(x > 0.0)) throw std::invalid_argument("mcheck_rhs: X must be > 0");
    if (!(sigma >= 1.0))
        throw std::invalid_argument("mcheck_rhs: sigma must be >= 1");
    if (k < 1) throw std::invalid_argument("mcheck_rhs: k must be >= 1");

    Enclosure c = k == 1 ? dec(Constants::mcheck_c) : Enclosure(1.0);
    Enclosure ratio = Enclosure(static_cast<double>(q)) /
                      Enclosure(static_cast<double>(totient(q)));
    Enclosure lx = enc_log(Enclosure(x));
    Enclosure r = c * ratio *
                  (Enclosure(static_cast<double>(k)) +
                   (Enclosure(sigma) - Enclosure(1.0)) * lx);
    for (int i = 1; i < k; ++i) r = r * lx;
    return r;
}

}  // namespace bv
