#pragma once

// Straightforward serial implementations kept as independent oracles for the
// tests and as baselines for the benchmark target. Nothing here shares an
// algorithm with the production path: primes come from a flat sieve, mu from
// per-n factorization, divisor sums from per-n divisor enumeration, and the
// big sums from plain long double loops.

#include <cstdint>
#include <vector>

#include "bv/sieve.hpp"
#include "bv/sums.hpp"
#include "bv/weights.hpp"

namespace bv::ref {

// Flat (non-segmented) sieve; serial.
std::vector<uint32_t> primes_upto(uint64_t limit);

// mu(n) by dividing out the smallest factor repeatedly.
int mobius_of(uint64_t n);

bool is_squarefree(uint64_t n);

uint64_t totient(uint64_t n);

// Full tables from the serial building blocks above.
SieveTables build_tables_simple(uint64_t limit);

// theta(t) for every integer t in [0, t_max], dense, long double accumulation.
std::vector<double> theta_dense(uint64_t t_max);

// T(n) = sum_{d | n} lambda_d by enumerating the divisors of n ascending.
Enclosure divisor_sum_direct(uint64_t n, const WeightConfig& cfg);

// Serial harmonic accumulation (same method as production, no threading);
// baseline for the benchmark.
DivisorSumTable divisor_sums_serial(uint64_t x, const WeightConfig& cfg,
                                    const SieveTables& tables);

// sum_{n <= X} T(n)^2 / n with per-n divisor enumeration, long double.
double sigma_zero_direct(const WeightConfig& cfg, uint64_t x);

// S(Y) = sum_{p <= Y} (log p / p) log(Y/p) in long double over a prime list.
double mertens_direct(double y, const std::vector<uint32_t>& primes);

// Number of squarefree integers in [1, n], by trial division.
uint64_t squarefree_count(uint64_t n);

}  // namespace bv::ref
