#include "bv/sums.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace bv {

namespace {

constexpr uint64_t kChunk = 1 << 16;

// n^{-sigma} with a fast exact-division path for sigma == 1.
inline Enclosure inv_pow(uint64_t n, double sigma) {
    double nd = static_cast<double>(n);
    if (sigma == 1.0) {
        double q = 1.0 / nd;
        return {q, ulp(q)};
    }
    return enc_pow(Enclosure(nd), Enclosure(-sigma));
}

// Deterministic chunked reduction: fixed chunk boundaries, chunks evaluated
// independently (in parallel), then folded in index order. Results are
// bit-identical for any thread count.
template <typename Fn>
Enclosure chunked_sum(uint64_t lo, uint64_t hi, const Fn& fn,
                      uint64_t chunk = kChunk) {
    if (hi < lo) return Enclosure(0.0);
    uint64_t n_chunks = (hi - lo) / chunk + 1;
    std::vector<ErrorBudgetSum> parts(n_chunks);
#pragma omp parallel for schedule(dynamic)
    for (int64_t c = 0; c < static_cast<int64_t>(n_chunks); ++c) {
        uint64_t a = lo + static_cast<uint64_t>(c) * chunk;
        uint64_t b = std::min(hi, a + chunk - 1);
        fn(a, b, parts[static_cast<std::size_t>(c)]);
    }
    ErrorBudgetSum total;
    for (const auto& p : parts) total.merge(p);
    return total.result();
}

void mcheck_range(uint64_t q, double x, double sigma, int k,
                  const SieveTables& tables, uint64_t a, uint64_t b,
                  ErrorBudgetSum& acc) {
    for (uint64_t n = a; n <= b; ++n) {
        int mu = tables.mobius[n];
        if (mu == 0) continue;
        if (q > 1 && std::gcd(n, q) != 1) continue;
        double quot = x / static_cast<double>(n);
        Enclosure lg = enc_log({quot, ulp(quot)});
        Enclosure term = inv_pow(n, sigma);
        for (int i = 0; i < k; ++i) term = term * lg;
        acc.add(mu > 0 ? term : -term);
    }
}

}  // namespace

Enclosure mcheck(uint64_t q, double x, double sigma, int k,
                 const SieveTables& tables) {
    if (!(x > 0.0)) throw std::invalid_argument("mcheck: X must be > 0");
    if (k < 1) throw std::invalid_argument("mcheck: k must be >= 1");
    if (x >= 4.3e9) throw ResourceError("mcheck: X above the sieve range");
    uint64_t nmax = static_cast<uint64_t>(x);
    if (static_cast<double>(nmax) > x) --nmax;  // floor for safety
    if (nmax == 0) return Enclosure(0.0);
    detail::require_mobius(tables, nmax, "mcheck");

    if (nmax < 4 * kChunk) {  // not worth spawning a parallel region
        ErrorBudgetSum acc;
        mcheck_range(q, x, sigma, k, tables, 1, nmax, acc);
        return acc.result();
    }
    return chunked_sum(1, nmax, [&](uint64_t a, uint64_t b, ErrorBudgetSum& s) {
        mcheck_range(q, x, sigma, k, tables, a, b, s);
    });
}

MertensSums mertens_weighted_sum(double y, const SieveTables& tables) {
    if (!(y > 0.0))
        throw std::invalid_argument("mertens_weighted_sum: Y must be > 0");
    MertensSums out;
    if (y < 2.0) {
        out.below_two = true;
        return out;
    }
    detail::require_primes(tables, y, "mertens_weighted_sum");
    std::size_t last = tables.prime_index_at_most(y);

    ErrorBudgetSum p1, p2;
    for (std::size_t i = 0; i <= last; ++i) {
        double p = static_cast<double>(tables.primes[i]);
        double lp = std::log(p);
        double t1 = lp / p;
        double t2 = lp * lp / p;
        // one ulp for the log, one for each divide/multiply
        double lp_err = ulp(lp);
        p1.add(t1, lp_err / p + ulp(t1));
        p2.add(t2, 2.0 * lp * lp_err / p + ulp(lp * lp) / p + ulp(t2));
    }
    out.p1 = p1.result();
    out.p2 = p2.result();
    out.value = enc_log(Enclosure(y)) * out.p1 - out.p2;
    return out;
}

Enclosure u_sum(double y, double sigma, const SieveTables& tables, double cap) {
    if (!(y >= 1.0)) throw std::invalid_argument("u_sum: Y must be >= 1");
    if (y > cap || y >= 4.3e9)
        throw ResourceError("u_sum: Y above cap " + std::to_string(cap) +
                            " (raise the cap to override)");
    uint64_t dmax = static_cast<uint64_t>(y);
    detail::require_mobius(tables, dmax, "u_sum");

    return chunked_sum(
        1, dmax,
        [&](uint64_t a, uint64_t b, ErrorBudgetSum& acc) {
            for (uint64_t d = a; d <= b; ++d) {
                if (tables.mobius[d] == 0) continue;
                Enclosure m = mcheck(d, y / static_cast<double>(d), sigma, 1,
                                     tables);
                Enclosure w = phi_sigma(d, sigma) * inv_pow(d, 2.0 * sigma);
                acc.add(w * m * m);
            }
        },
        256);
}

DivisorSumTable divisor_sums(uint64_t x, const WeightConfig& cfg,
                             const SieveTables& tables) {
    if (x < 1) throw std::invalid_argument("divisor_sums: X must be >= 1");
    uint64_t dmax = std::min(x, weight_support_max(cfg));
    detail::require_mobius(tables, dmax, "divisor_sums");

    struct Ent {
        uint64_t d;
        double v, e;
    };
    std::vector<Ent> ws;
    for (uint64_t d = 1; d <= dmax; ++d) {
        int8_t mu = tables.mobius[d];
        if (mu == 0) continue;
        Enclosure l = lambda_from_mu(mu, d, cfg);
        ws.push_back({d, l.value, l.abs_err});
    }

    DivisorSumTable t;
    t.limit = x;
    t.cfg = cfg;
    t.value.assign(x + 1, 0.0);
    t.abs_err.assign(x + 1, 0.0);

    // Parallel over disjoint n-blocks: each block accumulates ascending d
    // into its own slice, so values are independent of the thread count and
    // per-n addition order matches a plain divisor enumeration.
    const uint64_t block = kChunk;
    const uint64_t n_blocks = (x - 1) / block + 1;
#pragma omp parallel for schedule(dynamic)
    for (int64_t bi = 0; bi < static_cast<int64_t>(n_blocks); ++bi) {
        uint64_t lo = 1 + static_cast<uint64_t>(bi) * block;
        uint64_t hi = std::min(x, lo + block - 1);
        for (const Ent& w : ws) {
            if (w.d > hi) break;
            uint64_t first = ((lo + w.d - 1) / w.d) * w.d;
            for (uint64_t n = first; n <= hi; n += w.d) {
                double v = t.value[n] + w.v;
                t.value[n] = v;
                t.abs_err[n] += w.e + ulp(v);
            }
        }
    }
    return t;
}

namespace {

Enclosure sigma_weighted(const DivisorSumTable& t, double expo) {
    // sum of T(n)^2 * n^{-expo}
    return chunked_sum(1, t.limit, [&](uint64_t a, uint64_t b,
                                       ErrorBudgetSum& acc) {
        for (uint64_t n = a; n <= b; ++n) {
            Enclosure tn = t.at(n);
            if (tn.value == 0.0 && tn.abs_err == 0.0) continue;
            Enclosure term = tn * tn;
            if (expo == 0.0) {
                acc.add(term);
                continue;
            }
            acc.add(term * inv_pow(n, expo));
        }
    });
}

}  // namespace

Enclosure sigma_eps_truncated(const DivisorSumTable& t, double eps) {
    if (!(eps > 0.0))
        throw std::invalid_argument("sigma_eps_truncated: eps must be > 0");
    return sigma_weighted(t, 1.0 + eps);
}

Enclosure sigma_eps_truncated(const WeightConfig& cfg, double eps, uint64_t n,
                              const SieveTables& tables) {
    if (n < 1) throw std::invalid_argument("sigma_eps_truncated: N must be >= 1");
    return sigma_eps_truncated(divisor_sums(n, cfg, tables), eps);
}

Enclosure sigma_zero(const DivisorSumTable& t) { return sigma_weighted(t, 1.0); }

Enclosure sigma_zero(const WeightConfig& cfg, uint64_t x,
                     const SieveTables& tables) {
    return sigma_zero(divisor_sums(x, cfg, tables));
}

Enclosure sigma_alpha(const DivisorSumTable& t, double alpha) {
    if (!(alpha >= 0.5 && alpha <= 1.0))
        throw std::invalid_argument("sigma_alpha: alpha must be in [1/2, 1]");
    // 2*alpha is exact, and 2*alpha - 1 is exact by Sterbenz
    return sigma_weighted(t, 2.0 * alpha - 1.0);
}

Enclosure sigma_alpha(const WeightConfig& cfg, uint64_t x, double alpha,
                      const SieveTables& tables) {
    return sigma_alpha(divisor_sums(x, cfg, tables), alpha);
}

uint64_t lcm_checked(uint64_t a, uint64_t b) {
    uint64_t g = std::gcd(a, b);
    uint64_t q = a / g;
    if (b != 0 && q > UINT64_MAX / b)
        throw ResourceError("lcm_checked: 64-bit overflow");
    return q * b;
}

namespace {

struct DenseWeights {
    uint64_t dmax = 0;
    std::vector<double> v, e;   // indexed by d
    std::vector<uint64_t> support;  // ascending d with nonzero entry
};

DenseWeights densify(std::span<const std::pair<uint64_t, Enclosure>> weights) {
    DenseWeights dw;
    for (const auto& [d, w] : weights) dw.dmax = std::max(dw.dmax, d);
    dw.v.assign(dw.dmax + 1, 0.0);
    dw.e.assign(dw.dmax + 1, 0.0);
    for (const auto& [d, w] : weights) {
        if (d < 1) throw std::invalid_argument("quadratic_form: d must be >= 1");
        if (mobius_single(d) == 0)
            throw std::invalid_argument("quadratic_form: support must be squarefree");
        dw.v[d] = w.value;
        dw.e[d] = w.abs_err;
        dw.support.push_back(d);
    }
    std::sort(dw.support.begin(), dw.support.end());
    return dw;
}

// diag + 2 * upper triangle, rows chunked; row order fixed.
Enclosure pair_sum(const DenseWeights& dw, double sigma) {
    const auto& sup = dw.support;
    const uint64_t n = sup.size();
    return chunked_sum(
        0, n == 0 ? 0 : n - 1,
        [&](uint64_t a, uint64_t b, ErrorBudgetSum& acc) {
            if (sup.empty()) return;
            for (uint64_t i = a; i <= b; ++i) {
                uint64_t d = sup[i];
                Enclosure wd{dw.v[d], dw.e[d]};
                acc.add(wd * wd * inv_pow(d, sigma));
                for (uint64_t j = i + 1; j < n; ++j) {
                    uint64_t e = sup[j];
                    Enclosure we{dw.v[e], dw.e[e]};
                    Enclosure term =
                        wd * we * inv_pow(lcm_checked(d, e), sigma);
                    acc.add(Enclosure(2.0) * term);
                }
            }
        },
        64);
}

Enclosure diag_sum(const DenseWeights& dw, double sigma) {
    return chunked_sum(
        1, dw.dmax,
        [&](uint64_t a, uint64_t b, ErrorBudgetSum& acc) {
            for (uint64_t delta = a; delta <= b; ++delta) {
                if (mobius_single(delta) == 0) continue;
                ErrorBudgetSum inner;
                for (uint64_t l = 1; l * delta <= dw.dmax; ++l) {
                    uint64_t dl = l * delta;
                    if (dw.v[dl] == 0.0 && dw.e[dl] == 0.0) continue;
                    if (std::gcd(l, delta) != 1) continue;
                    inner.add(Enclosure{dw.v[dl], dw.e[dl]} *
                              inv_pow(l, sigma));
                }
                Enclosure s = inner.result();
                if (s.value == 0.0 && s.abs_err == 0.0) continue;
                acc.add(phi_sigma(delta, sigma) * inv_pow(delta, 2.0 * sigma) *
                        s * s);
            }
        },
        256);
}

std::vector<std::pair<uint64_t, Enclosure>> lambda_weights(
    const WeightConfig& cfg, const SieveTables& tables, double z2_cap,
    const char* who) {
    if (cfg.z2 > z2_cap)
        throw ResourceError(std::string(who) + ": z2 above cap " +
                            std::to_string(z2_cap) +
                            " (raise the cap to override)");
    WeightTable wt = lambda_table(cfg, tables);
    std::vector<std::pair<uint64_t, Enclosure>> w;
    w.reserve(wt.entries.size());
    for (const auto& en : wt.entries) w.emplace_back(en.d, en.lam);
    return w;
}

}  // namespace

Enclosure quadratic_form(
    std::span<const std::pair<uint64_t, Enclosure>> weights, double sigma) {
    if (!(sigma > 1.0))
        throw std::invalid_argument("quadratic_form: sigma must be > 1");
    return pair_sum(densify(weights), sigma);
}

Enclosure bilinear_form(const WeightConfig& cfg, double sigma,
                        const SieveTables& tables, double z2_cap) {
    if (!(sigma > 1.0))
        throw std::invalid_argument("bilinear_form: sigma must be > 1");
    auto w = lambda_weights(cfg, tables, z2_cap, "bilinear_form");
    return pair_sum(densify(w), sigma);
}

Enclosure diagonal_form(const WeightConfig& cfg, double sigma,
                        const SieveTables& tables, double z2_cap) {
    if (!(sigma > 1.0))
        throw std::invalid_argument("diagonal_form: sigma must be > 1");
    auto w = lambda_weights(cfg, tables, z2_cap, "diagonal_form");
    return diag_sum(densify(w), sigma);
}

}  // namespace bv
