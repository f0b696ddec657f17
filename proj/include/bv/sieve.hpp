#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "bv/enclosure.hpp"

namespace bv {

// Thrown when a requested computation exceeds a configured size cap.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Immutable multiplicative-function tables shared by all computations.
//
//   primes  : all primes p <= limit, ascending.
//   theta   : theta[i] = sum_{p' <= primes[i]} log p'  (Chebyshev theta at the
//             i-th prime). Error model: per term one ulp for the log plus one
//             ulp of the running sum; theta_abs_err(i) = 2*(i+1)*ulp(theta[i])
//             covers both charges.
//   mobius  : mu(n) for n in [0, mobius_limit] as signed bytes (mu(0) = 0).
//             The mu table is only materialized up to the largest argument a
//             run needs, never up to the theta scan limit.
//
// Tables are immutable after construction and safe to share across threads.
struct SieveTables {
    uint64_t limit = 0;
    uint64_t mobius_limit = 0;
    std::vector<uint32_t> primes;
    std::vector<double> theta;
    std::vector<int8_t> mobius;

    int mu(uint64_t n) const {
        if (n > mobius_limit)
            throw std::invalid_argument("mu(" + std::to_string(n) +
                                        "): beyond mobius table limit " +
                                        std::to_string(mobius_limit));
        return mobius[n];
    }
    bool is_squarefree(uint64_t n) const { return mu(n) != 0; }

    double theta_abs_err(std::size_t i) const {
        return 2.0 * static_cast<double>(i + 1) * ulp(theta[i]);
    }

    // Index of the largest prime <= t, or npos if t < 2.
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t prime_index_at_most(double t) const;

    // theta(t) as an enclosure; zero (exact) for t < 2.
    Enclosure theta_at(double t) const;
};

struct SieveOptions {
    // Clamped to `limit`; 0 skips the mu table entirely.
    uint64_t mobius_limit = UINT64_MAX;
    // Integers per segment; segments are sieved independently.
    uint64_t segment_size = uint64_t(1) << 22;
    // Binary table cache, used only when the BV_CACHE_DIR environment
    // variable points at a directory. Purely an optimization: a missing,
    // stale or unreadable cache file triggers a normal rebuild.
    bool use_cache = true;
};

// Segmented sieve: base primes to sqrt(limit), then fixed-size segments, each
// sieved independently (and in parallel). Live memory is O(segment) plus the
// output tables; results are bit-identical for any segment size and thread
// count because theta is accumulated over the final ordered prime list.
// limit must be in [2, 2^32 - 2]; mobius_limit is capped at 2^31 (one byte
// plus one uint32 of scratch per entry while sieving).
SieveTables build_tables(uint64_t limit, const SieveOptions& opt);
SieveTables build_tables(uint64_t limit);

// Prime factorization by trial division; adequate for q up to ~10^12.
std::vector<std::pair<uint64_t, int>> factorize(uint64_t n);

// mu(n) for a single n, by trial division (independent of the sieve tables).
int mobius_single(uint64_t n);

// Euler totient, exact.
uint64_t totient(uint64_t n);

// Generalized Euler function phi_s(q) = q^s * prod_{p|q} (1 - p^{-s}) for
// real s; phi_1 is the Euler totient. q >= 1.
Enclosure phi_sigma(uint64_t q, double s);

// phi_k(q) for integer k >= 1 and squarefree q, exactly:
// prod_{p|q} (p^k - 1). Throws if q is not squarefree or the product
// overflows uint64.
uint64_t phi_sigma_integer(uint64_t q, int k);

namespace detail {
void require_primes(const SieveTables& t, double x, const char* who);
void require_mobius(const SieveTables& t, uint64_t n, const char* who);
}  // namespace detail

}  // namespace bv
