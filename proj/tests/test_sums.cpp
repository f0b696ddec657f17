#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numeric>
#include <random>

#include "bv/bounds.hpp"
#include "bv/reference.hpp"
#include "bv/sums.hpp"

using namespace bv;

namespace {

SieveTables tables_upto(uint64_t n) {
    SieveOptions o;
    o.use_cache = false;
    return build_tables(n, o);
}

}  // namespace

TEST_CASE("mcheck small examples") {
    SieveTables t = tables_upto(100);
    // only n=1 and log(1) = 0
    Enclosure m1 = mcheck(1, 1.0, 1.3, 1, t);
    CHECK(m1.value == 0.0);
    // n=1 term log 2; n=2 term vanishes
    Enclosure m2 = mcheck(1, 2.0, 1.0, 1, t);
    CHECK(std::fabs(m2.value - std::log(2.0)) <= m2.abs_err + 1e-15);
    // log 4 - (1/2) log 2 - (1/3) log(4/3); mu(4) = 0
    Enclosure m4 = mcheck(1, 4.0, 1.0, 1, t);
    double expect =
        std::log(4.0) - std::log(2.0) / 2.0 - std::log(4.0 / 3.0) / 3.0;
    CHECK(std::fabs(m4.value - expect) <= m4.abs_err + 1e-15);
    CHECK(m4.value == doctest::Approx(0.94383).epsilon(1e-5));
    // non-integer X
    Enclosure m25 = mcheck(1, 2.5, 1.0, 1, t);
    double expect25 = std::log(2.5) - std::log(2.5 / 2.0) / 2.0;
    CHECK(std::fabs(m25.value - expect25) <= m25.abs_err + 1e-15);
    // coprimality filter: q = 2 drops even n
    Enclosure mq = mcheck(2, 4.0, 1.0, 1, t);
    double expectq = std::log(4.0) - std::log(4.0 / 3.0) / 3.0;
    CHECK(std::fabs(mq.value - expectq) <= mq.abs_err + 1e-15);

    CHECK_THROWS_AS(mcheck(1, 0.0, 1.0, 1, t), std::invalid_argument);
    CHECK_THROWS_AS(mcheck(1, 4.0, 1.0, 0, t), std::invalid_argument);
}

TEST_CASE("mcheck long double oracle and positivity grid") {
    SieveTables t = tables_upto(1000);
    for (uint64_t q : {1, 2, 6, 30})
        for (double x : {10.0, 100.0, 1000.0})
            for (double sigma : {1.0, 1.1, 1.5})
                for (int k : {1, 2}) {
                    Enclosure m = mcheck(q, x, sigma, k, t);
                    long double direct = 0.0L;
                    for (uint64_t n = 1; n <= (uint64_t)x; ++n) {
                        int mu = ref::mobius_of(n);
                        if (mu == 0 || std::gcd(n, q) != 1) continue;
                        direct += mu *
                                  powl((long double)n, -(long double)sigma) *
                                  powl(logl((long double)x / n), k);
                    }
                    CHECK(fabsl((long double)m.value - direct) <=
                          (long double)m.abs_err + 1e-13L);
                    // the sums are nonnegative on this grid
                    CHECK(m.value >= -m.abs_err);
                }
}

TEST_CASE("mertens sums: boundary, flags, and values at 100") {
    SieveTables t = tables_upto(1024);
    MertensSums m2 = mertens_weighted_sum(2.0, t);
    CHECK(std::fabs(m2.value.value) <= m2.value.abs_err);  // log(2/2) = 0

    MertensSums warn = mertens_weighted_sum(1.5, t);
    CHECK(warn.below_two);
    CHECK(warn.value.value == 0.0);
    CHECK_THROWS_AS(mertens_weighted_sum(0.0, t), std::invalid_argument);

    MertensSums m = mertens_weighted_sum(100.0, t);
    CHECK(m.p1.lower() >= 3.369);   // sum log p / p over p <= 100
    CHECK(m.p2.upper() <= 8.739);   // sum log^2 p / p
    CHECK(m.value.value == doctest::Approx(6.7789190273803).epsilon(1e-12));
    // independent long double oracle over an independently sieved list
    double direct = ref::mertens_direct(100.0, ref::primes_upto(100));
    CHECK(std::fabs(m.value.value - direct) <= m.value.abs_err + 1e-12);
    // comparison point of the lower bound
    CHECK(m.value.value > 0.318 * std::log(100.0) * std::log(100.0));
}

TEST_CASE("u_sum small examples") {
    SieveTables t = tables_upto(256);
    CHECK(u_sum(1.0, 1.0, t).value == 0.0);  // m_1(1) = 0
    Enclosure u15 = u_sum(1.5, 1.2, t);      // single delta = 1 term
    double l15 = std::log(1.5);
    CHECK(std::fabs(u15.value - l15 * l15) <= u15.abs_err + 1e-15);
    Enclosure u2 = u_sum(2.0, 1.0, t);  // (log 2)^2 + phi(2)/4 * m_2(1)^2
    double l2 = std::log(2.0);
    CHECK(std::fabs(u2.value - l2 * l2) <= u2.abs_err + 1e-15);
    CHECK(u2.value == doctest::Approx(0.48045).epsilon(1e-5));
}

TEST_CASE("u_sum long double oracle at Y=100") {
    SieveTables t = tables_upto(128);
    for (double sigma : {1.0, 1.2}) {
        Enclosure u = u_sum(100.0, sigma, t);
        long double direct = 0.0L;
        for (uint64_t d = 1; d <= 100; ++d) {
            if (!ref::is_squarefree(d)) continue;
            long double x = 100.0L / d;
            long double m = 0.0L;
            for (uint64_t n = 1; n <= (uint64_t)x; ++n) {
                int mu = ref::mobius_of(n);
                if (mu == 0 || std::gcd(n, d) != 1) continue;
                m += mu * powl((long double)n, -(long double)sigma) *
                     logl(x / n);
            }
            long double phi = powl((long double)d, (long double)sigma);
            for (auto [p, e] : factorize(d)) {
                (void)e;
                phi *= 1.0L - powl((long double)p, -(long double)sigma);
            }
            direct += phi * powl((long double)d, -2.0L * sigma) * m * m;
        }
        CHECK(fabsl((long double)u.value - direct) <=
              (long double)u.abs_err + 1e-12L);
    }
}

TEST_CASE("u_sum cap is a resource error, and configurable") {
    SieveTables t = tables_upto(4096);
    CHECK_THROWS_AS(u_sum(2000.0, 1.0, t, /*cap=*/1000.0), ResourceError);
    CHECK_NOTHROW(u_sum(2000.0, 1.0, t, /*cap=*/4000.0));
}

TEST_CASE("divisor sums: exact cancellation and the enumeration oracle") {
    SieveTables t = tables_upto(10000);
    WeightConfig cfgs[] = {make_weight_config(10.0, 2.0),
                           make_weight_config(100.0, 1.5),
                           make_weight_config(5.0, 2.5)};
    for (const WeightConfig& cfg : cfgs) {
        DivisorSumTable dt = divisor_sums(10000, cfg, t);
        CHECK(dt.value[1] == 1.0);  // T(1) = lambda_1 = 1
        for (uint64_t n = 1; n <= 10000; ++n) {
            // harmonic accumulation == per-n divisor enumeration, bit for bit
            Enclosure direct = ref::divisor_sum_direct(n, cfg);
            CHECK(dt.value[n] == direct.value);
            CHECK(dt.abs_err[n] < 1e-9);
            // crude bound: at most one unit per squarefree divisor
            uint64_t sqfree_divs = 0;
            for (uint64_t d = 1; d * d <= n; ++d) {
                if (n % d) continue;
                sqfree_divs += ref::is_squarefree(d);
                if (d != n / d) sqfree_divs += ref::is_squarefree(n / d);
            }
            CHECK(std::fabs(dt.value[n]) <=
                  static_cast<double>(sqfree_divs) + 1e-9);
        }
    }
    // all divisors of 6 sit below z1 = 10: T(6) = 1 - 1 - 1 + 1 = 0 exactly
    DivisorSumTable dt = divisor_sums(100, cfgs[0], t);
    CHECK(dt.value[6] == 0.0);
    CHECK_THROWS_AS(divisor_sums(0, cfgs[0], t), std::invalid_argument);
}

TEST_CASE("sigma_zero against the brute-force double loop") {
    SieveTables t = tables_upto(10000);
    WeightConfig cfg = make_weight_config(10.0, 2.0);
    DivisorSumTable dt = divisor_sums(10000, cfg, t);
    CHECK(sigma_zero(divisor_sums(1, cfg, t)).value == 1.0);  // X=1: T(1)^2/1
    Enclosure s = sigma_zero(dt);
    double direct = ref::sigma_zero_direct(cfg, 10000);
    CHECK(std::fabs(s.value - direct) <= s.abs_err + 1e-9);
}

TEST_CASE("sigma_eps_truncated: degenerate config and monotonicity") {
    SieveTables t = tables_upto(4096);
    // z2 <= 2: support is d = 1 only, so T(n) = 1 for every n
    WeightConfig deg = make_weight_config(1.4, 1.5);
    REQUIRE(deg.z2 <= 2.0);
    DivisorSumTable one = divisor_sums(2000, deg, t);
    for (uint64_t n = 1; n <= 2000; ++n) CHECK(one.value[n] == 1.0);

    Enclosure s = sigma_eps_truncated(one, 1.0);
    long double direct = 0.0L;  // partial zeta(2)
    for (uint64_t n = 1; n <= 2000; ++n) direct += 1.0L / ((long double)n * n);
    CHECK(fabsl((long double)s.value - direct) <= (long double)s.abs_err + 1e-13L);

    // value at N=1 is exactly 1, and the truncation is nondecreasing in N
    CHECK(sigma_eps_truncated(divisor_sums(1, deg, t), 0.5).value == 1.0);
    double prev = 0.0;
    for (uint64_t n : {10, 100, 1000}) {
        double cur = sigma_eps_truncated(divisor_sums(n, deg, t), 0.5).value;
        CHECK(cur >= prev);
        prev = cur;
    }
    CHECK_THROWS_AS(sigma_eps_truncated(one, 0.0), std::invalid_argument);
}

TEST_CASE("sigma_alpha endpoints") {
    SieveTables t = tables_upto(2000);
    WeightConfig cfg = make_weight_config(10.0, 2.0);
    DivisorSumTable dt = divisor_sums(2000, cfg, t);

    Enclosure a1 = sigma_alpha(dt, 1.0);
    Enclosure s0 = sigma_zero(dt);
    CHECK(a1.value == s0.value);  // exponent 1, same path
    CHECK(a1.abs_err == s0.abs_err);

    Enclosure ah = sigma_alpha(dt, 0.5);  // exponent 0: plain sum of squares
    long double direct = 0.0L;
    for (uint64_t n = 1; n <= 2000; ++n)
        direct += (long double)dt.value[n] * dt.value[n];
    CHECK(fabsl((long double)ah.value - direct) <=
          (long double)ah.abs_err + 1e-10L);

    CHECK_THROWS_AS(sigma_alpha(dt, 0.4), std::invalid_argument);
    CHECK_THROWS_AS(sigma_alpha(dt, 1.1), std::invalid_argument);
}

TEST_CASE("bilinear and diagonal forms: degenerate and small configs") {
    SieveTables t = tables_upto(128);
    WeightConfig deg = make_weight_config(1.4, 1.5);  // z2 <= 2
    CHECK(bilinear_form(deg, 1.5, t).value == 1.0);   // single pair d=e=1
    CHECK(diagonal_form(deg, 1.5, t).value == 1.0);

    WeightConfig cfg = make_weight_config(5.0, 2.0);  // z2 = 25
    for (double sigma : {1.2, 1.5, 2.0}) {
        Enclosure b = bilinear_form(cfg, sigma, t);
        Enclosure d = diagonal_form(cfg, sigma, t);
        CHECK(std::fabs(b.value - d.value) <= b.abs_err + d.abs_err);
        CHECK(b.abs_err + d.abs_err < 1e-9);
        CHECK(b.value >= -b.abs_err);  // nonnegative for any weights
    }
    // Sigma(sigma) >= T(1)^2 = 1 forces the factored form above 1/zeta
    CHECK(bilinear_form(cfg, 1.5, t).value > 0.3);
    CHECK_THROWS_AS(bilinear_form(cfg, 1.0, t), std::invalid_argument);
}

TEST_CASE("bilinear form against a plain long double double loop") {
    SieveTables t = tables_upto(128);
    WeightConfig cfg = make_weight_config(5.0, 2.0);
    double sigma = 1.5;
    Enclosure b = bilinear_form(cfg, sigma, t);
    long double direct = 0.0L;
    for (uint64_t d = 1; d < 25; ++d) {
        if (!ref::is_squarefree(d)) continue;
        for (uint64_t e = 1; e < 25; ++e) {
            if (!ref::is_squarefree(e)) continue;
            long double ld = lambda(d, cfg).value;
            long double le = lambda(e, cfg).value;
            uint64_t l = d / std::gcd(d, e) * e;
            direct += ld * le * powl((long double)l, -(long double)sigma);
        }
    }
    CHECK(fabsl((long double)b.value - direct) <=
          (long double)b.abs_err + 1e-12L);
}

TEST_CASE("gcd identity in enclosure arithmetic at sigma = 1.5") {
    // (d e / [d,e])^sigma = sum_{delta | (d,e)} phi_sigma(delta) at d=6, e=10:
    // gcd = 2, so 2^sigma = 1 + phi_sigma(2)
    double sigma = 1.5;
    Enclosure lhs = enc_pow(Enclosure(2.0), Enclosure(sigma));
    Enclosure rhs = Enclosure(1.0) + phi_sigma(2, sigma);
    CHECK(std::fabs(lhs.value - rhs.value) <= lhs.abs_err + rhs.abs_err);
}

TEST_CASE("quadratic_form: random weights stay nonnegative") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    std::vector<uint64_t> support;
    for (uint64_t d = 1; d <= 50; ++d)
        if (ref::is_squarefree(d)) support.push_back(d);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::pair<uint64_t, Enclosure>> w;
        for (uint64_t d : support) w.emplace_back(d, Enclosure(uni(rng)));
        Enclosure f = quadratic_form(w, 1.2);
        CHECK(f.value >= -f.abs_err);
    }
    // non-squarefree support is rejected
    std::vector<std::pair<uint64_t, Enclosure>> bad{{4, Enclosure(1.0)}};
    CHECK_THROWS_AS(quadratic_form(bad, 1.2), std::invalid_argument);
}

TEST_CASE("caps and overflow guards") {
    SieveTables t = tables_upto(128);
    WeightConfig big = make_weight_config(60.0, 2.0);  // z2 = 3600
    CHECK_THROWS_AS(bilinear_form(big, 1.5, t), ResourceError);
    CHECK_THROWS_AS(diagonal_form(big, 1.5, t), ResourceError);
    CHECK(lcm_checked(6, 10) == 30);
    CHECK_THROWS_AS(lcm_checked(uint64_t(1) << 40, (uint64_t(1) << 40) + 1),
                    ResourceError);
}

TEST_CASE("factored form matches the truncated series plus a tail allowance") {
    SieveTables t = tables_upto(200000);
    WeightConfig cfg = make_weight_config(5.0, 2.0);  // z2 = 25
    double sigma = 1.5;
    Enclosure lhs = zeta_upper_enclosure(sigma - 1.0, 200000).zeta *
                    bilinear_form(cfg, sigma, t);
    Enclosure trunc = sigma_eps_truncated(cfg, sigma - 1.0, 100000, t);
    // |T(n)| <= #squarefree d < 25 = 17 uniformly; tail <= K^2 N^{1-s}/(s-1)
    double k = 17.0;
    double tail = k * k * std::pow(1e5, 1.0 - sigma) / (sigma - 1.0);
    CHECK(lhs.value >= trunc.value - lhs.abs_err - trunc.abs_err);
    CHECK(lhs.value <= trunc.value + tail + lhs.abs_err + trunc.abs_err);
}
