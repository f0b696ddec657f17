#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "bv/bounds.hpp"

using namespace bv;

TEST_CASE("zeta enclosure brackets known values and respects the bound") {
    // zeta(2) = pi^2/6
    ZetaCheck z1 = zeta_upper_enclosure(1.0);
    CHECK(z1.zeta.lower() <= 1.6449340668482264);
    CHECK(z1.zeta.upper() >= 1.6449340668482264);
    CHECK(z1.bound.value == doctest::Approx(1.7810724179901979).epsilon(1e-12));
    CHECK(z1.zeta.upper() <= z1.bound.lower());

    // zeta(6) = pi^6/945
    ZetaCheck z5 = zeta_upper_enclosure(5.0);
    CHECK(z5.zeta.lower() <= 1.0173430619844491);
    CHECK(z5.zeta.upper() >= 1.0173430619844491);
    CHECK(z5.zeta.upper() <= z5.bound.lower());

    CHECK_THROWS_AS(zeta_upper_enclosure(0.0), std::invalid_argument);
    CHECK_THROWS_AS(zeta_upper_enclosure(-1.0), std::invalid_argument);
}

TEST_CASE("zeta enclosure width shrinks with M") {
    double w3 = zeta_upper_enclosure(0.5, 1000).zeta.abs_err;
    double w6 = zeta_upper_enclosure(0.5, 1000000).zeta.abs_err;
    CHECK(w6 < w3);
}

namespace {

// Independent transcription of the main bound in long double, arranged
// differently (powl instead of the exp/log chain, z2 materialized).
long double thm1_rhs_alt(long double z1, long double tau, long double eps) {
    const long double g = 0.57721566490153286L;
    long double z2 = powl(z1, tau);
    long double lz = logl(z2 / z1);
    long double bracket = 1.301L - 0.318L / powl(z1, eps) +
                          (1.301L - 0.318L / powl(z2, eps)) * tau * tau;
    long double num = 1.084L * (tau + 1.0L) + bracket * eps * logl(z1);
    return expl(g * eps) / (eps * lz) * (num / (tau - 1.0L));
}

}  // namespace

TEST_CASE("thm1_rhs agrees with a second transcription to 10 ulps") {
    for (double z1 : {100.0, 1000.0, 10000.0})
        for (double tau : {1.2, 1.5, 2.0, 3.0})
            for (double eps : {0.01, 0.05, 0.1, 0.5, 1.0}) {
                Enclosure r = thm1_rhs(z1, tau, eps);
                long double alt = thm1_rhs_alt(z1, tau, eps);
                long double tol =
                    (long double)r.abs_err + 10.0L * (long double)ulp(r.value);
                CHECK(fabsl((long double)r.value - alt) <= tol);
            }
}

TEST_CASE("thm1_rhs shape checks") {
    // (tau - 1) denominator blows up as tau -> 1+
    CHECK(thm1_rhs(100, 1.01, 0.1).value > thm1_rhs(100, 2.0, 0.1).value);
    // decreasing in z1 at fixed tau, eps
    double prev = thm1_rhs(100, 2.0, 0.1).value;
    for (double z1 : {1000.0, 10000.0}) {
        double cur = thm1_rhs(z1, 2.0, 0.1).value;
        CHECK(cur < prev);
        prev = cur;
    }
    CHECK(thm1_rhs(100, 2.0, 0.1).value > 0.0);
    CHECK_THROWS_AS(thm1_rhs(50, 2.0, 0.1), std::invalid_argument);
    CHECK_NOTHROW(thm1_rhs(50, 2.0, 0.1, /*allow_out_of_regime=*/true));
    CHECK_THROWS_AS(thm1_rhs(100, 1.0, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(thm1_rhs(100, 2.0, 0.0), std::invalid_argument);
}

TEST_CASE("f_tau and the corollary bounds") {
    // f(2) = 3.09 * (1.084*3 + 1.301*5 - 0.116) = 3.09 * 9.641
    Enclosure f2 = f_tau(2.0);
    CHECK(f2.value == doctest::Approx(29.79069).epsilon(1e-9));
    CHECK(f2.upper() <= 30.0);

    // cor2_rhs = f(tau) log X / log(z2/z1)
    Enclosure c = cor2_rhs(1e6, 100.0, 2.0);
    double expect = 29.79069 * std::log(1e6) / std::log(100.0);
    CHECK(c.value == doctest::Approx(expect).epsilon(1e-8));

    // f(2) <= 30 makes cor2_rhs <= 30 log X / log z1 across a grid
    for (double z1 : {100.0, 1000.0, 31622.0})
        for (double lx : {1.0, 2.0, 4.0}) {
            double x = std::pow(z1, lx);
            CHECK(cor2_rhs(x, z1, 2.0).upper() <=
                  30.0 * std::log(x) / std::log(z1) + 1e-9);
        }

    CHECK_THROWS_AS(cor2_rhs(50.0, 100.0, 2.0), std::invalid_argument);
}

TEST_CASE("cor3_rhs special cases") {
    Enclosure base = cor2_rhs(1e4, 100.0, 2.0);
    Enclosure a1 = cor3_rhs(1e4, 100.0, 2.0, 1.0);
    CHECK(a1.value == base.value);  // X^0 = 1, bit-identical
    CHECK(a1.abs_err == base.abs_err);

    Enclosure ah = cor3_rhs(1e4, 100.0, 2.0, 0.5);
    CHECK(ah.value == doctest::Approx(1e4 * base.value).epsilon(1e-13));

    Enclosure aq = cor3_rhs(1e4, 100.0, 2.0, 0.75);  // X^{1/2}
    CHECK(aq.value == doctest::Approx(100.0 * base.value).epsilon(1e-12));

    CHECK_THROWS_AS(cor3_rhs(1e4, 100.0, 2.0, 0.3), std::invalid_argument);
    CHECK_THROWS_AS(cor3_rhs(1e4, 100.0, 2.0, 1.2), std::invalid_argument);
}

TEST_CASE("mertens_lower") {
    Enclosure m = mertens_lower(100.0);
    double expect = 0.318 * std::log(100.0) * std::log(100.0);
    CHECK(m.value == doctest::Approx(expect).epsilon(1e-14));
    CHECK(m.value == doctest::Approx(6.744014).epsilon(1e-6));
}

TEST_CASE("u_rhs and the A/B covers") {
    // eps = 0 collapses the second term: 1.00303 * 1.08 * log Y
    Enclosure u0 = u_rhs(100.0, 0.0);
    CHECK(u0.value ==
          doctest::Approx(1.00303 * 1.08 * std::log(100.0)).epsilon(1e-14));
    // the covers behind A and B
    CHECK(1.00303 * 1.08 <= 1.084);
    CHECK(1.00303 * 1.297 <= 1.301);
    Enclosure u = u_rhs(1000.0, 0.2);
    double ly = std::log(1000.0);
    double expect =
        1.00303 * (1.08 * ly + 0.2 * ly * ly * (1.297 - 0.318 / std::pow(1000.0, 0.2)));
    CHECK(u.value == doctest::Approx(expect).epsilon(1e-13));
    CHECK_THROWS_AS(u_rhs(50.0, 0.1), std::invalid_argument);
    CHECK_NOTHROW(u_rhs(50.0, 0.1, /*allow_out_of_regime=*/true));
}

TEST_CASE("mcheck_rhs") {
    // q=1, X=4, sigma=1, k=1 -> 1.00303
    Enclosure b = mcheck_rhs(1, 4.0, 1.0, 1);
    CHECK(b.value == doctest::Approx(1.00303).epsilon(1e-14));
    // k = 2 drops the constant to 1: 1 * (2 + 0) * log e = 2
    Enclosure b2 = mcheck_rhs(1, std::exp(1.0), 1.0, 2);
    CHECK(b2.value == doctest::Approx(2.0).epsilon(1e-14));
    // q/phi(q) factor: 30/8
    Enclosure b30 = mcheck_rhs(30, 4.0, 1.0, 1);
    CHECK(b30.value == doctest::Approx(3.75 * 1.00303).epsilon(1e-13));
    CHECK_THROWS_AS(mcheck_rhs(1, 0.0, 1.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(mcheck_rhs(1, 4.0, 0.9, 1), std::invalid_argument);
    CHECK_THROWS_AS(mcheck_rhs(1, 4.0, 1.0, 0), std::invalid_argument);
    CHECK_THROWS_AS(mcheck_rhs(0, 4.0, 1.0, 1), std::invalid_argument);
}

TEST_CASE("constants are pinned") {
    CHECK(Constants::A == 1.084);
    CHECK(Constants::B == 1.301);
    CHECK(Constants::C == 0.318);
    CHECK(Constants::mcheck_c == 1.00303);
    CHECK(Constants::cor2_c == 3.09);
    CHECK(Constants::mertens_c == 0.318);
    CHECK(Constants::theta_lo == 0.835);
    CHECK(Constants::theta_hi == 0.998697);
    CHECK(Constants::theta_threshold == 1155901.0);
    CHECK(Constants::euler_gamma == 0.5772156649015329);
}
