#include "bv/reference.hpp"

#include <algorithm>
#include <cmath>

namespace bv::ref {

std::vector<uint32_t> primes_upto(uint64_t limit) {
    std::vector<uint8_t> composite(limit + 1, 0);
    std::vector<uint32_t> ps;
    for (uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        ps.push_back(static_cast<uint32_t>(i));
        for (uint64_t j = i * i; j <= limit; j += i) composite[j] = 1;
    }
    return ps;
}

int mobius_of(uint64_t n) {
    if (n == 0) return 0;
    int k = 0;
    for (uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        ++k;
    }
    if (n > 1) ++k;
    return k % 2 == 0 ? 1 : -1;
}

bool is_squarefree(uint64_t n) { return mobius_of(n) != 0; }

uint64_t totient(uint64_t n) {
    uint64_t r = n;
    for (uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        r = r / p * (p - 1);
        while (n % p == 0) n /= p;
    }
    if (n > 1) r = r / n * (n - 1);
    return r;
}

SieveTables build_tables_simple(uint64_t limit) {
    SieveTables t;
    t.limit = limit;
    t.mobius_limit = limit;
    t.primes = primes_upto(limit);
    t.theta.resize(t.primes.size());
    double s = 0.0, comp = 0.0;
    for (std::size_t i = 0; i < t.primes.size(); ++i) {
        double y = std::log(static_cast<double>(t.primes[i])) - comp;
        double s2 = s + y;
        comp = (s2 - s) - y;
        s = s2;
        t.theta[i] = s;
    }
    t.mobius.resize(limit + 1);
    for (uint64_t n = 0; n <= limit; ++n)
        t.mobius[n] = static_cast<int8_t>(mobius_of(n));
    return t;
}

std::vector<double> theta_dense(uint64_t t_max) {
    std::vector<double> th(t_max + 1, 0.0);
    auto ps = primes_upto(t_max);
    long double s = 0.0L;
    std::size_t k = 0;
    for (uint64_t t = 2; t <= t_max; ++t) {
        if (k < ps.size() && ps[k] == t) {
            s += logl(static_cast<long double>(t));
            ++k;
        }
        th[t] = static_cast<double>(s);
    }
    return th;
}

Enclosure divisor_sum_direct(uint64_t n, const WeightConfig& cfg) {
    std::vector<uint64_t> divs;
    for (uint64_t d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        divs.push_back(d);
        if (d != n / d) divs.push_back(n / d);
    }
    std::sort(divs.begin(), divs.end());
    double v = 0.0, e = 0.0;
    for (uint64_t d : divs) {
        Enclosure l = lambda(d, cfg);
        if (l.value == 0.0 && l.abs_err == 0.0) continue;
        v += l.value;
        e += l.abs_err + ulp(v);
    }
    return {v, e};
}

DivisorSumTable divisor_sums_serial(uint64_t x, const WeightConfig& cfg,
                                    const SieveTables& tables) {
    uint64_t dmax = std::min(x, weight_support_max(cfg));
    detail::require_mobius(tables, dmax, "divisor_sums_serial");
    DivisorSumTable t;
    t.limit = x;
    t.cfg = cfg;
    t.value.assign(x + 1, 0.0);
    t.abs_err.assign(x + 1, 0.0);
    for (uint64_t d = 1; d <= dmax; ++d) {
        int8_t mu = tables.mobius[d];
        if (mu == 0) continue;
        Enclosure l = lambda_from_mu(mu, d, cfg);
        for (uint64_t n = d; n <= x; n += d) {
            double v = t.value[n] + l.value;
            t.value[n] = v;
            t.abs_err[n] += l.abs_err + ulp(v);
        }
    }
    return t;
}

double sigma_zero_direct(const WeightConfig& cfg, uint64_t x) {
    long double total = 0.0L;
    for (uint64_t n = 1; n <= x; ++n) {
        Enclosure t = divisor_sum_direct(n, cfg);
        long double tv = t.value;
        total += tv * tv / static_cast<long double>(n);
    }
    return static_cast<double>(total);
}

double mertens_direct(double y, const std::vector<uint32_t>& primes) {
    long double p1 = 0.0L, p2 = 0.0L;
    for (uint32_t p : primes) {
        if (static_cast<double>(p) > y) break;
        long double lp = logl(static_cast<long double>(p));
        p1 += lp / p;
        p2 += lp * lp / p;
    }
    return static_cast<double>(logl(static_cast<long double>(y)) * p1 - p2);
}

uint64_t squarefree_count(uint64_t n) {
    uint64_t c = 0;
    for (uint64_t i = 1; i <= n; ++i)
        if (is_squarefree(i)) ++c;
    return c;
}

}  // namespace bv::ref
