#include "bv/sieve.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <numeric>

namespace bv {

namespace {

constexpr uint64_t kMaxLimit = (uint64_t(1) << 32) - 2;
constexpr uint64_t kMaxMobius = uint64_t(1) << 31;

uint64_t isqrt64(uint64_t n) {
    uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

std::vector<uint32_t> simple_sieve(uint64_t limit) {
    std::vector<uint8_t> composite(limit + 1, 0);
    std::vector<uint32_t> primes;
    for (uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(static_cast<uint32_t>(i));
        for (uint64_t j = i * i; j <= limit; j += i) composite[j] = 1;
    }
    return primes;
}

// --- binary cache ------------------------------------------------------

constexpr uint32_t kCacheMagic = 0x42565356;  // "BVSV"
constexpr uint32_t kCacheVersion = 1;

struct CacheHeader {
    uint32_t magic;
    uint32_t version;
    uint64_t limit;
    uint64_t mobius_limit;
    uint64_t prime_count;
};

std::string cache_path(uint64_t limit, uint64_t mobius_limit) {
    const char* dir = std::getenv("BV_CACHE_DIR");
    if (!dir || !*dir) return {};
    return std::string(dir) + "/bv_tables_v" + std::to_string(kCacheVersion) +
           "_" + std::to_string(limit) + "_" + std::to_string(mobius_limit) +
           ".bin";
}

bool load_cache(const std::string& path, SieveTables& t) {
    std::FILE* f = std::fopen(path.c_str(), "rb");
    if (!f) return false;
    CacheHeader h{};
    bool ok = std::fread(&h, sizeof h, 1, f) == 1 && h.magic == kCacheMagic &&
              h.version == kCacheVersion && h.limit == t.limit &&
              h.mobius_limit == t.mobius_limit;
    if (ok) {
        t.primes.resize(h.prime_count);
        t.theta.resize(h.prime_count);
        t.mobius.resize(h.mobius_limit ? h.mobius_limit + 1 : 0);
        ok = std::fread(t.primes.data(), sizeof(uint32_t), h.prime_count, f) ==
                 h.prime_count &&
             std::fread(t.theta.data(), sizeof(double), h.prime_count, f) ==
                 h.prime_count &&
             (t.mobius.empty() ||
              std::fread(t.mobius.data(), 1, t.mobius.size(), f) ==
                  t.mobius.size());
    }
    std::fclose(f);
    return ok;
}

void store_cache(const std::string& path, const SieveTables& t) {
    std::string tmp = path + ".tmp";
    std::FILE* f = std::fopen(tmp.c_str(), "wb");
    if (!f) return;
    CacheHeader h{kCacheMagic, kCacheVersion, t.limit, t.mobius_limit,
                  t.primes.size()};
    bool ok =
        std::fwrite(&h, sizeof h, 1, f) == 1 &&
        std::fwrite(t.primes.data(), sizeof(uint32_t), t.primes.size(), f) ==
            t.primes.size() &&
        std::fwrite(t.theta.data(), sizeof(double), t.theta.size(), f) ==
            t.theta.size() &&
        (t.mobius.empty() ||
         std::fwrite(t.mobius.data(), 1, t.mobius.size(), f) ==
             t.mobius.size());
    std::fclose(f);
    std::error_code ec;
    if (ok)
        std::filesystem::rename(tmp, path, ec);
    else
        std::filesystem::remove(tmp, ec);
}

}  // namespace

std::size_t SieveTables::prime_index_at_most(double t) const {
    if (t < 2.0) return npos;
    uint64_t tt = static_cast<uint64_t>(t);
    auto it = std::upper_bound(primes.begin(), primes.end(), tt);
    if (it == primes.begin()) return npos;
    return static_cast<std::size_t>(it - primes.begin()) - 1;
}

Enclosure SieveTables::theta_at(double t) const {
    std::size_t i = prime_index_at_most(t);
    if (i == npos) return Enclosure(0.0);
    return {theta[i], theta_abs_err(i)};
}

SieveTables build_tables(uint64_t limit) {
    return build_tables(limit, SieveOptions{});
}

SieveTables build_tables(uint64_t limit, const SieveOptions& opt) {
    if (limit < 2)
        throw std::invalid_argument("build_tables: limit must be >= 2");
    if (limit > kMaxLimit)
        throw ResourceError("build_tables: limit above implementation max 2^32-2");
    uint64_t mob = std::min(opt.mobius_limit, limit);
    if (mob > kMaxMobius)
        throw ResourceError("build_tables: mobius_limit above 2^31 cap");
    uint64_t seg = std::max<uint64_t>(opt.segment_size, 1024);

    SieveTables t;
    t.limit = limit;
    t.mobius_limit = mob;

    std::string cpath = opt.use_cache ? cache_path(limit, mob) : std::string();
    if (!cpath.empty() && load_cache(cpath, t)) return t;

    const std::vector<uint32_t> base = simple_sieve(std::max<uint64_t>(isqrt64(limit), 2));

    const uint64_t n_segments = (limit - 1 + seg) / seg;  // covers [2, limit]
    std::vector<std::vector<uint32_t>> seg_primes(n_segments);
    if (mob >= 1) t.mobius.assign(mob + 1, 0);

#pragma omp parallel
    {
        std::vector<uint8_t> composite;
        std::vector<uint32_t> rem;

#pragma omp for schedule(dynamic)
        for (int64_t s = 0; s < static_cast<int64_t>(n_segments); ++s) {
            const uint64_t lo = 2 + static_cast<uint64_t>(s) * seg;
            const uint64_t hi = std::min(lo + seg - 1, limit);  // inclusive
            const uint64_t len = hi - lo + 1;

            composite.assign(len, 0);
            for (uint32_t p : base) {
                uint64_t pp = uint64_t(p) * p;
                if (pp > hi) break;
                uint64_t start = std::max(pp, ((lo + p - 1) / p) * uint64_t(p));
                for (uint64_t j = start; j <= hi; j += p)
                    composite[j - lo] = 1;
            }
            auto& sp = seg_primes[static_cast<std::size_t>(s)];
            for (uint64_t j = 0; j < len; ++j)
                if (!composite[j]) sp.push_back(static_cast<uint32_t>(lo + j));

            // mu over the part of this segment inside [1, mob]
            if (lo <= mob) {
                const uint64_t mhi = std::min(hi, mob);
                const uint64_t mlen = mhi - lo + 1;
                rem.resize(mlen);
                std::vector<int8_t> m(mlen, 1);
                for (uint64_t j = 0; j < mlen; ++j)
                    rem[j] = static_cast<uint32_t>(lo + j);
                // at most one prime factor exceeds sqrt(mhi); the leftover
                // flip below accounts for it
                for (uint32_t p : base) {
                    if (uint64_t(p) * p > mhi) break;
                    uint64_t start = ((lo + p - 1) / p) * uint64_t(p);
                    for (uint64_t j = start; j <= mhi; j += p) {
                        m[j - lo] = static_cast<int8_t>(-m[j - lo]);
                        rem[j - lo] /= p;
                    }
                    uint64_t pp = uint64_t(p) * p;
                    if (pp > mhi) continue;
                    start = ((lo + pp - 1) / pp) * pp;
                    for (uint64_t j = start; j <= mhi; j += pp)
                        m[j - lo] = 0;
                }
                for (uint64_t j = 0; j < mlen; ++j) {
                    // leftover factor > sqrt(limit) flips the sign once
                    if (m[j] != 0 && rem[j] > 1) m[j] = static_cast<int8_t>(-m[j]);
                    t.mobius[lo + j] = m[j];
                }
            }
        }
    }
    if (mob >= 1) t.mobius[1] = 1;

    std::size_t total = 0;
    for (const auto& sp : seg_primes) total += sp.size();
    t.primes.reserve(total);
    for (const auto& sp : seg_primes)
        t.primes.insert(t.primes.end(), sp.begin(), sp.end());

    // theta prefix: logs in parallel, then one compensated sweep over the
    // ordered list (independent of segmentation and thread count).
    t.theta.resize(total);
#pragma omp parallel for schedule(static)
    for (int64_t i = 0; i < static_cast<int64_t>(total); ++i)
        t.theta[i] = std::log(static_cast<double>(t.primes[i]));
    double sum = 0.0, comp = 0.0;
    for (std::size_t i = 0; i < total; ++i) {
        double y = t.theta[i] - comp;
        double s2 = sum + y;
        comp = (s2 - sum) - y;
        sum = s2;
        t.theta[i] = sum;
    }

    if (!cpath.empty()) store_cache(cpath, t);
    return t;
}

std::vector<std::pair<uint64_t, int>> factorize(uint64_t n) {
    std::vector<std::pair<uint64_t, int>> f;
    for (uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.emplace_back(p, e);
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

int mobius_single(uint64_t n) {
    if (n == 0) return 0;
    int sign = 1;
    for (uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        sign = -sign;
    }
    if (n > 1) sign = -sign;
    return sign;
}

uint64_t totient(uint64_t n) {
    uint64_t r = n;
    for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
    return r;
}

Enclosure phi_sigma(uint64_t q, double s) {
    if (q < 1) throw std::invalid_argument("phi_sigma: q must be >= 1");
    if (q == 1) return Enclosure(1.0);  // empty product
    Enclosure r = enc_pow(Enclosure(static_cast<double>(q)), Enclosure(s));
    for (auto [p, e] : factorize(q)) {
        (void)e;
        Enclosure pe = enc_pow(Enclosure(static_cast<double>(p)), Enclosure(-s));
        r = r * (Enclosure(1.0) - pe);
    }
    return r;
}

uint64_t phi_sigma_integer(uint64_t q, int k) {
    if (q < 1 || k < 1)
        throw std::invalid_argument("phi_sigma_integer: need q >= 1, k >= 1");
    uint64_t r = 1;
    for (auto [p, e] : factorize(q)) {
        if (e > 1)
            throw std::invalid_argument("phi_sigma_integer: q not squarefree");
        uint64_t pk = 1;
        for (int i = 0; i < k; ++i) {
            if (pk > UINT64_MAX / p)
                throw ResourceError("phi_sigma_integer: overflow");
            pk *= p;
        }
        if (r > UINT64_MAX / (pk - 1))
            throw ResourceError("phi_sigma_integer: overflow");
        r *= pk - 1;
    }
    return r;
}

namespace detail {

void require_primes(const SieveTables& t, double x, const char* who) {
    if (static_cast<double>(t.limit) < x)
        throw std::invalid_argument(std::string(who) +
                                    ": sieve tables too small (limit " +
                                    std::to_string(t.limit) + ")");
}

void require_mobius(const SieveTables& t, uint64_t n, const char* who) {
    if (t.mobius_limit < n)
        throw std::invalid_argument(std::string(who) +
                                    ": mobius table too small (have " +
                                    std::to_string(t.mobius_limit) + ", need " +
                                    std::to_string(n) + ")");
}

}  // namespace detail

}  // namespace bv
