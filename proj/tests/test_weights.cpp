#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "bv/reference.hpp"
#include "bv/weights.hpp"

using bv::Enclosure;
using bv::lambda;
using bv::make_weight_config;
using bv::WeightConfig;

namespace {

bv::SieveTables tables_upto(uint64_t n) {
    bv::SieveOptions o;
    o.use_cache = false;
    return bv::build_tables(n, o);
}

}  // namespace

TEST_CASE("config construction and regime flag") {
    WeightConfig c = make_weight_config(10.0, 2.0);
    CHECK(c.z2 == 100.0);
    CHECK(!c.in_theorem_regime);
    CHECK(make_weight_config(100.0, 1.5).in_theorem_regime);
    CHECK_THROWS_AS(make_weight_config(1.0, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(make_weight_config(10.0, 1.0), std::invalid_argument);
    // degenerate support (z2 <= 2) is constructible
    WeightConfig d = make_weight_config(1.1, 2.0);
    CHECK(d.z2 <= 2.0);
    CHECK(bv::weight_support_max(d) == 1);
}

TEST_CASE("lambda branch structure") {
    WeightConfig c = make_weight_config(10.0, 2.0);  // z1=10, z2=100
    // d <= z1: exactly mu(d), zero error
    Enclosure l6 = lambda(6, c);
    CHECK(l6.value == 1.0);
    CHECK(l6.abs_err == 0.0);
    CHECK(lambda(10, c).value == 1.0);  // boundary d == z1
    CHECK(lambda(7, c).value == -1.0);
    // mu(d) = 0 kills the weight
    CHECK(lambda(50, c).value == 0.0);
    // d >= z2
    CHECK(lambda(101, c).value == 0.0);
    CHECK(lambda(100, c).value == 0.0);  // boundary d == z2, log+(1) = 0
    CHECK_THROWS_AS(lambda(0, c), std::invalid_argument);
}

TEST_CASE("lambda ramp value against direct evaluation") {
    WeightConfig c = make_weight_config(10.0, 2.0);
    // lambda(30) = mu(30) log(100/30)/log(10) = -log(10/3)/log(10)
    Enclosure l = lambda(30, c);
    double expect = -std::log(10.0 / 3.0) / std::log(10.0);
    CHECK(std::fabs(l.value - expect) <= l.abs_err + 1e-15);
    CHECK(l.value == doctest::Approx(-0.52288).epsilon(1e-5));
}

TEST_CASE("lambda table: support, membership, exact low range") {
    bv::SieveTables t = tables_upto(128);
    WeightConfig c = make_weight_config(10.0, 2.0);
    bv::WeightTable wt = lambda_table(c, t);

    // entry count = number of squarefree d <= 99, counted independently
    CHECK(wt.entries.size() == bv::ref::squarefree_count(99));
    CHECK(wt.entries.size() == 61);

    CHECK(wt.entries.front().d == 1);
    CHECK(wt.entries.front().lam.value == 1.0);  // lambda_1 = 1 always

    uint64_t prev = 0;
    for (const auto& e : wt.entries) {
        CHECK(e.d > prev);  // ascending, squarefree only
        prev = e.d;
        CHECK(bv::ref::is_squarefree(e.d));
        // table path equals the single-d path bit for bit (mu computed
        // independently by trial division there)
        Enclosure single = lambda(e.d, c);
        CHECK(e.lam.value == single.value);
        CHECK(e.lam.abs_err == single.abs_err);
        if (static_cast<double>(e.d) <= c.z1)
            CHECK(e.lam.value == static_cast<double>(e.mu));
    }
}

TEST_CASE("sign pattern and monotone envelope on the ramp") {
    bv::SieveTables t = tables_upto(1024);
    WeightConfig c = make_weight_config(10.0, 2.0);
    bv::WeightTable wt = lambda_table(c, t);
    double prev_abs = 2.0;
    for (const auto& e : wt.entries) {
        double d = static_cast<double>(e.d);
        if (d <= c.z1 || d >= c.z2) continue;
        CHECK((e.lam.value > 0) == (e.mu > 0));
        // |lambda_d| = log(z2/d)/log(z2/z1) strictly decreasing in d
        double a = std::fabs(e.lam.value);
        CHECK(a < prev_abs + e.lam.abs_err);
        prev_abs = a;
    }
}

TEST_CASE("|lambda| <= 1 over random configs") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> z1d(1.5, 500.0), taud(1.01, 3.0);
    std::uniform_int_distribution<uint64_t> dd(1, 1 << 20);
    for (int i = 0; i < 1000; ++i) {
        WeightConfig c = make_weight_config(z1d(rng), taud(rng));
        Enclosure l = lambda(dd(rng), c);
        CHECK(std::fabs(l.value) <= 1.0);
    }
}

TEST_CASE("lambda_table requires mu coverage") {
    bv::SieveTables t = tables_upto(50);   // mu only to 50
    WeightConfig c = make_weight_config(10.0, 2.0);  // needs d <= 99
    CHECK_THROWS_AS(lambda_table(c, t), std::invalid_argument);
}
