#pragma once

#include <cstdint>
#include <vector>

#include "bv/enclosure.hpp"
#include "bv/sieve.hpp"

namespace bv {

// Parameters of the Barban-Vehov weights
//   lambda_d = mu(d) * (log+(z2/d) - log+(z1/d)) / log(z2/z1),
// with log+ = max(log, 0) and z2 = z1^tau. in_theorem_regime marks the
// z1 >= 100 range required by the main bound.
//
// d <= z1 and d < z2 are exact real comparisons on the stored doubles: the
// log+ cutoffs are continuous, so a tie at d == z1 or d == z2 yields the same
// lambda through either branch.
struct WeightConfig {
    double z1 = 0.0;
    double tau = 0.0;
    double z2 = 0.0;
    bool in_theorem_regime = false;
};

// z2 = z1^tau. Requires z1 > 1 (so z2 > z1) and tau > 1; degenerate
// configurations with z2 <= 2 (support reduced to d = 1) are allowed.
WeightConfig make_weight_config(double z1, double tau);

// lambda_d via trial-division mu(d). Exactly mu(d) for d <= z1, zero for
// d >= z2 or mu(d) = 0, and mu(d) * log(z2/d)/log(z2/z1) in between;
// |lambda_d| <= 1 always. d >= 1.
Enclosure lambda(uint64_t d, const WeightConfig& cfg);

// Same ramp evaluation from a known mu(d); the single-argument path and the
// table path share this.
Enclosure lambda_from_mu(int mu, uint64_t d, const WeightConfig& cfg);

struct WeightTable {
    struct Entry {
        uint64_t d;
        int8_t mu;
        Enclosure lam;
    };
    WeightConfig cfg;
    std::vector<Entry> entries;  // ascending d, squarefree d < z2 only
};

// All weights with nonzero support: squarefree d < z2, ascending. Requires
// the mu table to cover ceil(z2) - 1.
WeightTable lambda_table(const WeightConfig& cfg, const SieveTables& tables);

// Largest integer d that can carry a nonzero weight (d < z2).
uint64_t weight_support_max(const WeightConfig& cfg);

}  // namespace bv
