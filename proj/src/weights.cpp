#include "bv/weights.hpp"

#include <cmath>
#include <stdexcept>

namespace bv {

WeightConfig make_weight_config(double z1, double tau) {
    if (!(z1 > 1.0))
        throw std::invalid_argument("weight config: z1 must be > 1");
    if (!(tau > 1.0))
        throw std::invalid_argument("weight config: tau must be > 1");
    WeightConfig cfg;
    cfg.z1 = z1;
    cfg.tau = tau;
    cfg.z2 = std::pow(z1, tau);
    cfg.in_theorem_regime = z1 >= 100.0;
    return cfg;
}

Enclosure lambda_from_mu(int mu, uint64_t d, const WeightConfig& cfg) {
    if (d < 1) throw std::invalid_argument("lambda: d must be >= 1");
    if (mu == 0) return Enclosure(0.0);
    double dd = static_cast<double>(d);
    if (dd >= cfg.z2) return Enclosure(0.0);
    // both log+ terms full: the ratio is exactly 1
    if (dd <= cfg.z1) return Enclosure(static_cast<double>(mu));

    double q_num = cfg.z2 / dd;
    double q_den = cfg.z2 / cfg.z1;
    Enclosure ramp = enc_log({q_num, ulp(q_num)}) / enc_log({q_den, ulp(q_den)});
    // 0 < log(z2/d) < log(z2/z1) here; clamp rounding spill past 1
    if (ramp.value > 1.0) {
        ramp.abs_err += ramp.value - 1.0;
        ramp.value = 1.0;
    }
    if (ramp.value < 0.0) {
        ramp.abs_err += -ramp.value;
        ramp.value = 0.0;
    }
    return mu > 0 ? ramp : -ramp;
}

Enclosure lambda(uint64_t d, const WeightConfig& cfg) {
    return lambda_from_mu(mobius_single(d), d, cfg);
}

uint64_t weight_support_max(const WeightConfig& cfg) {
    double c = std::ceil(cfg.z2);
    uint64_t m = static_cast<uint64_t>(c);
    if (static_cast<double>(m) >= cfg.z2) --m;  // strictly below z2
    return m;
}

WeightTable lambda_table(const WeightConfig& cfg, const SieveTables& tables) {
    uint64_t dmax = weight_support_max(cfg);
    detail::require_mobius(tables, dmax, "lambda_table");
    WeightTable wt;
    wt.cfg = cfg;
    for (uint64_t d = 1; d <= dmax; ++d) {
        int8_t mu = tables.mobius[d];
        if (mu == 0) continue;
        wt.entries.push_back({d, mu, lambda_from_mu(mu, d, cfg)});
    }
    return wt;
}

}  // namespace bv
