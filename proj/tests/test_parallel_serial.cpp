// The OpenMP kernels against their serial references: identical tables from
// the segmented and flat sieves, bit-identical divisor sums and scan verdicts
// for any thread count (fixed chunk decomposition, ordered merges).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <omp.h>

#include "bv/reference.hpp"
#include "bv/report_io.hpp"
#include "bv/sums.hpp"
#include "bv/verify.hpp"

using namespace bv;

namespace {

SieveTables tables_upto(uint64_t n) {
    SieveOptions o;
    o.use_cache = false;
    return build_tables(n, o);
}

struct ThreadGuard {
    int saved = omp_get_max_threads();
    ~ThreadGuard() { omp_set_num_threads(saved); }
};

}  // namespace

TEST_CASE("segmented parallel sieve equals the flat serial sieve") {
    ThreadGuard g;
    SieveOptions o;
    o.use_cache = false;
    o.segment_size = 4096;
    omp_set_num_threads(4);
    SieveTables par = build_tables(300000, o);
    omp_set_num_threads(1);
    SieveTables ser = build_tables(300000, o);
    SieveTables ref = ref::build_tables_simple(300000);
    CHECK(par.primes == ser.primes);
    CHECK(par.primes == ref.primes);
    CHECK(par.mobius == ref.mobius);
    CHECK(par.theta == ser.theta);
    CHECK(par.theta == ref.theta);
}

TEST_CASE("divisor sums: parallel harmonic == serial harmonic == enumeration") {
    ThreadGuard g;
    SieveTables t = tables_upto(200000);
    WeightConfig cfg = make_weight_config(100.0, 2.0);

    omp_set_num_threads(4);
    DivisorSumTable par = divisor_sums(200000, cfg, t);
    omp_set_num_threads(1);
    DivisorSumTable one = divisor_sums(200000, cfg, t);
    DivisorSumTable ser = ref::divisor_sums_serial(200000, cfg, t);

    CHECK(par.value == one.value);
    CHECK(par.abs_err == one.abs_err);
    CHECK(par.value == ser.value);
    for (uint64_t n : {1, 97, 9240, 100000, 199999})
        CHECK(par.value[n] == ref::divisor_sum_direct(n, cfg).value);
}

TEST_CASE("weighted sums are thread-count invariant") {
    ThreadGuard g;
    SieveTables t = tables_upto(300000);
    WeightConfig cfg = make_weight_config(100.0, 2.0);
    DivisorSumTable dt = divisor_sums(300000, cfg, t);

    omp_set_num_threads(4);
    Enclosure s4 = sigma_zero(dt);
    Enclosure e4 = sigma_eps_truncated(dt, 0.1);
    Enclosure m4 = mcheck(1, 300000.0, 1.1, 1, t);
    omp_set_num_threads(1);
    Enclosure s1 = sigma_zero(dt);
    Enclosure e1 = sigma_eps_truncated(dt, 0.1);
    Enclosure m1 = mcheck(1, 300000.0, 1.1, 1, t);

    CHECK(s4.value == s1.value);
    CHECK(s4.abs_err == s1.abs_err);
    CHECK(e4.value == e1.value);
    CHECK(m4.value == m1.value);
}

TEST_CASE("scan reports are identical across thread counts") {
    ThreadGuard g;
    SieveTables t = tables_upto(500000);

    omp_set_num_threads(4);
    VerificationReport m4 = scan_mertens(100.0, 500000.0, t);
    VerificationReport t4 = scan_theta(100.0, 500000.0, 0.835, t);
    omp_set_num_threads(1);
    VerificationReport m1 = scan_mertens(100.0, 500000.0, t);
    VerificationReport t1 = scan_theta(100.0, 500000.0, 0.835, t);

    CHECK(report_to_csv(m4) == report_to_csv(m1));
    CHECK(report_to_csv(t4) == report_to_csv(t1));
    CHECK(m4.summary.min_margin == m1.summary.min_margin);
    CHECK(m4.summary.n_cases == m1.summary.n_cases);
}

TEST_CASE("u_sum and the quadratic forms are thread-count invariant") {
    ThreadGuard g;
    SieveTables t = tables_upto(4000);
    WeightConfig cfg = make_weight_config(10.0, 2.0);

    omp_set_num_threads(4);
    Enclosure u4 = u_sum(4000.0, 1.1, t);
    Enclosure b4 = bilinear_form(cfg, 1.5, t);
    Enclosure d4 = diagonal_form(cfg, 1.5, t);
    omp_set_num_threads(1);
    Enclosure u1 = u_sum(4000.0, 1.1, t);
    Enclosure b1 = bilinear_form(cfg, 1.5, t);
    Enclosure d1 = diagonal_form(cfg, 1.5, t);

    CHECK(u4.value == u1.value);
    CHECK(b4.value == b1.value);
    CHECK(d4.value == d1.value);
}
