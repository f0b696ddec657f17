// Timing harness comparing the OpenMP kernels against the serial reference
// implementations, verifying agreement as it goes.
//
//   bv_bench [--limit N] [--x N] [--threads N]

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

#include "bv/reference.hpp"
#include "bv/sieve.hpp"
#include "bv/sums.hpp"
#include "bv/verify.hpp"
#include "bv/weights.hpp"

namespace {

double now() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch())
        .count();
}

struct Row {
    const char* name;
    double serial_s;
    double parallel_s;
    bool ok;
};

void print_row(const Row& r) {
    std::printf("%-34s %10.3fs %10.3fs %8.2fx   %s\n", r.name, r.serial_s,
                r.parallel_s, r.serial_s / r.parallel_s,
                r.ok ? "agree" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    uint64_t limit = 10'000'000;
    uint64_t x = 1'000'000;
    int threads = omp_get_max_threads();
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--limit") && i + 1 < argc)
            limit = std::strtoull(argv[++i], nullptr, 10);
        else if (!std::strcmp(argv[i], "--x") && i + 1 < argc)
            x = std::strtoull(argv[++i], nullptr, 10);
        else if (!std::strcmp(argv[i], "--threads") && i + 1 < argc)
            threads = std::atoi(argv[++i]);
        else {
            std::fprintf(stderr, "usage: bv_bench [--limit N] [--x N] [--threads N]\n");
            return 2;
        }
    }
    std::printf("threads=%d limit=%llu x=%llu\n\n", threads,
                static_cast<unsigned long long>(limit),
                static_cast<unsigned long long>(x));
    std::printf("%-34s %11s %11s %9s\n", "kernel", "serial", "parallel",
                "speedup");

    bv::SieveOptions no_cache;
    no_cache.use_cache = false;

    // flat serial reference vs segmented OpenMP, both at a small limit (the
    // per-n factorization in the reference does not scale further)
    {
        uint64_t small = std::min<uint64_t>(limit, 2'000'000);
        double t0 = now();
        bv::SieveTables ref = bv::ref::build_tables_simple(small);
        double t_ser = now() - t0;
        omp_set_num_threads(threads);
        t0 = now();
        bv::SieveTables seg = bv::build_tables(small, no_cache);
        double t_par = now() - t0;
        bool ok = ref.primes == seg.primes && ref.mobius == seg.mobius &&
                  ref.theta == seg.theta;
        print_row({"sieve build @2e6 (flat ref)", t_ser, t_par, ok});
    }

    // segmented sieve at the full limit, 1 thread vs N threads
    omp_set_num_threads(1);
    double t0 = now();
    bv::SieveTables tables = bv::build_tables(limit, no_cache);
    double t_ser = now() - t0;
    omp_set_num_threads(threads);
    t0 = now();
    bv::SieveTables tables2 = bv::build_tables(limit, no_cache);
    double t_par = now() - t0;
    bool ok = tables.primes == tables2.primes &&
              tables.mobius == tables2.mobius && tables.theta == tables2.theta;
    print_row({"segmented sieve @limit", t_ser, t_par, ok});

    // divisor-sum accumulation
    bv::WeightConfig cfg = bv::make_weight_config(100.0, 2.0);
    uint64_t xx = std::min(x, tables.mobius_limit);
    omp_set_num_threads(1);
    t0 = now();
    bv::DivisorSumTable ts = bv::ref::divisor_sums_serial(xx, cfg, tables);
    t_ser = now() - t0;
    omp_set_num_threads(threads);
    t0 = now();
    bv::DivisorSumTable tp = bv::divisor_sums(xx, cfg, tables);
    t_par = now() - t0;
    ok = true;
    for (uint64_t n = 1; n <= xx; ++n) ok = ok && ts.value[n] == tp.value[n];
    print_row({"divisor sums T(n)", t_ser, t_par, ok});

    // harmonic L2 sum over the table
    omp_set_num_threads(1);
    t0 = now();
    bv::Enclosure s1 = bv::sigma_zero(ts);
    t_ser = now() - t0;
    omp_set_num_threads(threads);
    t0 = now();
    bv::Enclosure s2 = bv::sigma_zero(tp);
    t_par = now() - t0;
    print_row({"sigma_zero", t_ser, t_par, s1.value == s2.value});

    // Mertens continuum scan
    double ymax = static_cast<double>(limit);
    omp_set_num_threads(1);
    t0 = now();
    bv::VerificationReport r1 = bv::scan_mertens(100.0, ymax, tables);
    t_ser = now() - t0;
    omp_set_num_threads(threads);
    t0 = now();
    bv::VerificationReport r2 = bv::scan_mertens(100.0, ymax, tables);
    t_par = now() - t0;
    ok = r1.summary.min_margin == r2.summary.min_margin &&
         r1.overall() == r2.overall();
    print_row({"mertens scan", t_ser, t_par, ok});

    // theta step scan
    omp_set_num_threads(1);
    t0 = now();
    r1 = bv::scan_theta(100.0, ymax, 0.835, tables);
    t_ser = now() - t0;
    omp_set_num_threads(threads);
    t0 = now();
    r2 = bv::scan_theta(100.0, ymax, 0.835, tables);
    t_par = now() - t0;
    ok = r1.summary.min_margin == r2.summary.min_margin &&
         r1.overall() == r2.overall();
    print_row({"theta scan", t_ser, t_par, ok});

    return 0;
}
