#include "bv/verify.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <stdexcept>

namespace bv {

namespace {

constexpr std::size_t kScanCaseCap = 64;

Enclosure dec(double v) { return Enclosure::decimal(v); }

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                             t0)
            .count();
    }
};

}  // namespace

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        case Verdict::Inconclusive: return "INCONCLUSIVE";
        case Verdict::Skipped: return "SKIPPED";
    }
    return "?";
}

CaseResult check_le(Params params, Enclosure lhs, Enclosure rhs,
                    std::string note) {
    CaseResult c{std::move(params), std::move(note), lhs, rhs, 0.0,
                 Verdict::Inconclusive};
    c.margin = (rhs.value - lhs.value) - (lhs.abs_err + rhs.abs_err);
    if (c.margin >= 0.0)
        c.verdict = Verdict::Pass;
    else if (lhs.lower() > rhs.upper())
        c.verdict = Verdict::Fail;
    return c;
}

CaseResult check_ge(Params params, Enclosure lhs, Enclosure rhs,
                    std::string note) {
    CaseResult c = check_le(std::move(params), rhs, lhs, std::move(note));
    std::swap(c.lhs, c.rhs);
    return c;
}

CaseResult check_gt(Params params, Enclosure lhs, Enclosure rhs,
                    std::string note) {
    CaseResult c{std::move(params), std::move(note), lhs, rhs, 0.0,
                 Verdict::Inconclusive};
    c.margin = (lhs.value - rhs.value) - (lhs.abs_err + rhs.abs_err);
    if (c.margin > 0.0)
        c.verdict = Verdict::Pass;
    else if (lhs.upper() <= rhs.lower())
        c.verdict = Verdict::Fail;
    return c;
}

CaseResult check_eq(Params params, Enclosure lhs, Enclosure rhs,
                    std::string note) {
    CaseResult c{std::move(params), std::move(note), lhs, rhs, 0.0,
                 Verdict::Inconclusive};
    c.margin = (lhs.abs_err + rhs.abs_err) - std::fabs(lhs.value - rhs.value);
    c.verdict = c.margin >= 0.0 ? Verdict::Pass : Verdict::Fail;
    return c;
}

Verdict VerificationReport::overall() const {
    if (summary.n_fail) return Verdict::Fail;
    if (summary.n_inconclusive) return Verdict::Inconclusive;
    return Verdict::Pass;
}

int VerificationReport::exit_code() const {
    switch (overall()) {
        case Verdict::Fail: return 1;
        case Verdict::Inconclusive: return 3;
        default: return 0;
    }
}

std::string VerificationReport::one_line_summary() const {
    char buf[512];
    std::string argmin;
    for (const auto& [k, v] : summary.argmin_params) {
        char pb[64];
        std::snprintf(pb, sizeof pb, "%s%s=%.6g", argmin.empty() ? "" : ",",
                      k.c_str(), v);
        argmin += pb;
    }
    std::snprintf(buf, sizeof buf,
                  "%-10s %-12s cases=%zu pass=%zu fail=%zu inconclusive=%zu "
                  "skipped=%zu min_margin=%.6g argmin={%s} (%.2fs)",
                  campaign.c_str(), to_string(overall()), summary.n_cases,
                  summary.n_pass, summary.n_fail, summary.n_inconclusive,
                  summary.n_skipped, summary.min_margin, argmin.c_str(),
                  runtime_seconds);
    return buf;
}

namespace {

void fold_summary(ReportSummary& s, const CaseResult& c) {
    ++s.n_cases;
    switch (c.verdict) {
        case Verdict::Pass: ++s.n_pass; break;
        case Verdict::Fail: ++s.n_fail; break;
        case Verdict::Inconclusive: ++s.n_inconclusive; break;
        case Verdict::Skipped: ++s.n_skipped; break;
    }
    if (c.verdict != Verdict::Skipped && c.margin < s.min_margin) {
        s.min_margin = c.margin;
        s.argmin_params = c.params;
    }
}

}  // namespace

void add_case(VerificationReport& r, CaseResult c) {
    fold_summary(r.summary, c);
    r.cases.push_back(std::move(c));
}

void sort_cases(VerificationReport& r) {
    std::stable_sort(r.cases.begin(), r.cases.end(),
                     [](const CaseResult& a, const CaseResult& b) {
                         if (a.params != b.params) return a.params < b.params;
                         return a.note < b.note;
                     });
}

// ---------------------------------------------------------------------------
// scan_mertens
// ---------------------------------------------------------------------------

namespace {

struct ScanChunk {
    ReportSummary summary;
    CaseResult min_case;
    bool has_min = false;
    std::vector<CaseResult> bad;  // non-PASS cases, capped
};

void scan_fold_case(ScanChunk& ch, CaseResult c) {
    fold_summary(ch.summary, c);
    if (!ch.has_min || c.margin < ch.min_case.margin) {
        ch.min_case = c;
        ch.has_min = true;
    }
    if (c.verdict != Verdict::Pass && ch.bad.size() < kScanCaseCap)
        ch.bad.push_back(std::move(c));
}

VerificationReport merge_scan_chunks(std::string campaign,
                                     std::vector<ScanChunk>& chunks) {
    VerificationReport r;
    r.campaign = std::move(campaign);
    CaseResult min_case;
    bool has_min = false;
    for (auto& ch : chunks) {
        r.summary.n_cases += ch.summary.n_cases;
        r.summary.n_pass += ch.summary.n_pass;
        r.summary.n_fail += ch.summary.n_fail;
        r.summary.n_inconclusive += ch.summary.n_inconclusive;
        r.summary.n_skipped += ch.summary.n_skipped;
        if (ch.summary.min_margin < r.summary.min_margin) {
            r.summary.min_margin = ch.summary.min_margin;
            r.summary.argmin_params = ch.summary.argmin_params;
        }
        if (ch.has_min && (!has_min || ch.min_case.margin < min_case.margin)) {
            min_case = ch.min_case;
            has_min = true;
        }
        for (auto& c : ch.bad)
            if (r.cases.size() < kScanCaseCap) r.cases.push_back(std::move(c));
    }
    if (has_min &&
        std::none_of(r.cases.begin(), r.cases.end(), [&](const CaseResult& c) {
            return c.params == min_case.params;
        }))
        r.cases.push_back(std::move(min_case));
    sort_cases(r);
    return r;
}

// Per-term budget matching mertens_weighted_sum.
inline void mertens_add_terms(ErrorBudgetSum& p1, ErrorBudgetSum& p2,
                              double p) {
    double lp = std::log(p);
    double lp_err = ulp(lp);
    double t1 = lp / p;
    double t2 = lp * lp / p;
    p1.add(t1, lp_err / p + ulp(t1));
    p2.add(t2, 2.0 * lp * lp_err / p + ulp(lp * lp) / p + ulp(t2));
}

CaseResult mertens_endpoint_case(double y, Enclosure p1, Enclosure p2) {
    Enclosure u = enc_log(Enclosure(y));
    Enclosure lhs = p1 * u - p2;
    Enclosure rhs = dec(Constants::mertens_c) * u * u;
    return check_ge({{"y", y}}, lhs, rhs);
}

}  // namespace

VerificationReport scan_mertens(double y_min, double y_max,
                                const SieveTables& tables) {
    if (!(y_min >= 100.0))
        throw std::invalid_argument("scan_mertens: y_min must be >= 100");
    if (!(y_max > y_min))
        throw std::invalid_argument("scan_mertens: y_max must exceed y_min");
    detail::require_primes(tables, y_max, "scan_mertens");
    Timer timer;

    const std::size_t last = tables.prime_index_at_most(y_max);
    const std::size_t n = last + 1;
    const std::size_t chunk = 1 << 16;
    const std::size_t n_chunks = (n - 1) / chunk + 1;

    // pass 1: per-chunk partial sums of log p / p and log^2 p / p
    std::vector<ErrorBudgetSum> part1(n_chunks), part2(n_chunks);
#pragma omp parallel for schedule(dynamic)
    for (int64_t c = 0; c < static_cast<int64_t>(n_chunks); ++c) {
        std::size_t a = static_cast<std::size_t>(c) * chunk;
        std::size_t b = std::min(n, a + chunk);
        for (std::size_t i = a; i < b; ++i)
            mertens_add_terms(part1[c], part2[c],
                              static_cast<double>(tables.primes[i]));
    }
    // prefix bases per chunk, folded in order
    std::vector<Enclosure> base1(n_chunks), base2(n_chunks);
    {
        ErrorBudgetSum b1, b2;
        for (std::size_t c = 0; c < n_chunks; ++c) {
            base1[c] = b1.result();
            base2[c] = b2.result();
            b1.merge(part1[c]);
            b2.merge(part2[c]);
        }
    }

    // pass 2: interval checks with running sums rebuilt per chunk
    std::vector<ScanChunk> chunks(n_chunks);
#pragma omp parallel for schedule(dynamic)
    for (int64_t c = 0; c < static_cast<int64_t>(n_chunks); ++c) {
        std::size_t a = static_cast<std::size_t>(c) * chunk;
        std::size_t b = std::min(n, a + chunk);
        ErrorBudgetSum l1, l2;
        for (std::size_t i = a; i < b; ++i) {
            double p = static_cast<double>(tables.primes[i]);
            mertens_add_terms(l1, l2, p);
            double next = i + 1 < tables.primes.size()
                              ? static_cast<double>(tables.primes[i + 1])
                              : y_max;
            double left = std::max(p, y_min);
            double right = std::min(next, y_max);
            if (right <= y_min || left > y_max || left > right) continue;
            Enclosure p1 = base1[c] + l1.result();
            Enclosure p2 = base2[c] + l2.result();
            // g is concave in u = log Y with the sums frozen, so the two
            // endpoints dominate the interval
            CaseResult lo = mertens_endpoint_case(left, p1, p2);
            CaseResult hi = mertens_endpoint_case(right, p1, p2);
            CaseResult worst = hi.margin < lo.margin ? hi : lo;
            double arg_y = worst.params[0].second;
            worst.params = {{"y_lo", left}, {"y_hi", right}, {"y", arg_y}};
            scan_fold_case(chunks[c], std::move(worst));
        }
    }
    VerificationReport r = merge_scan_chunks("mertens", chunks);
    r.runtime_seconds = timer.seconds();
    return r;
}

// ---------------------------------------------------------------------------
// scan_theta
// ---------------------------------------------------------------------------

VerificationReport scan_theta(double t_min, double t_max, double c,
                              const SieveTables& tables, ThetaScanMode mode) {
    if (!(t_min >= 2.0 && t_max > t_min))
        throw std::invalid_argument("scan_theta: need 2 <= t_min < t_max");
    if (!(c > 0.0)) throw std::invalid_argument("scan_theta: c must be > 0");
    detail::require_primes(tables, t_max, "scan_theta");
    Timer timer;

    const std::size_t first = tables.prime_index_at_most(t_min);
    const std::size_t last = tables.prime_index_at_most(t_max);
    const std::size_t n = last - first + 1;
    const std::size_t chunk = 1 << 16;
    const std::size_t n_chunks = (n - 1) / chunk + 1;
    const Enclosure ce = dec(c);

    std::vector<ScanChunk> chunks(n_chunks);
#pragma omp parallel for schedule(dynamic)
    for (int64_t ci = 0; ci < static_cast<int64_t>(n_chunks); ++ci) {
        std::size_t a = first + static_cast<std::size_t>(ci) * chunk;
        std::size_t b = std::min(last + 1, a + chunk);
        for (std::size_t i = a; i < b; ++i) {
            double p = static_cast<double>(tables.primes[i]);
            double next = i + 1 < tables.primes.size()
                              ? static_cast<double>(tables.primes[i + 1])
                              : t_max + 1.0;
            double lo = std::max(p, t_min);
            double hi;
            if (mode == ThetaScanMode::IntegerGrid) {
                // largest integer t in [lo, min(next - eps, t_max)]
                hi = std::min(std::floor(t_max),
                              next - 1.0);
                lo = std::ceil(lo);
                if (lo > hi) continue;
            } else {
                hi = std::min(next, t_max);
                if (hi <= t_min) continue;
            }
            Enclosure theta{tables.theta[i], tables.theta_abs_err(i)};
            CaseResult cr = check_gt({{"t_lo", lo}, {"t_hi", hi}}, theta,
                                     ce * Enclosure(hi));
            scan_fold_case(chunks[ci], std::move(cr));
        }
    }
    VerificationReport r = merge_scan_chunks(
        mode == ThetaScanMode::IntegerGrid ? "theta" : "theta_continuum",
        chunks);
    r.runtime_seconds = timer.seconds();
    return r;
}

// ---------------------------------------------------------------------------
// grid campaigns
// ---------------------------------------------------------------------------

VerificationReport verify_theorem1(std::span<const Thm1Point> grid,
                                   const SieveTables& tables,
                                   bool allow_out_of_regime) {
    Timer timer;
    VerificationReport r;
    r.campaign = "thm1";

    DivisorSumTable table;
    bool have_table = false;
    for (const Thm1Point& pt : grid) {
        Params params{{"z1", pt.z1},
                      {"tau", pt.tau},
                      {"eps", pt.eps},
                      {"n", static_cast<double>(pt.n)}};
        bool in_regime = pt.z1 >= 100.0 && pt.tau > 1.0 && pt.eps > 0.0;
        if (!in_regime && !allow_out_of_regime) {
            CaseResult c{std::move(params), "out of regime (z1 >= 100 required)",
                         Enclosure(0.0), Enclosure(0.0), 0.0, Verdict::Skipped};
            add_case(r, std::move(c));
            continue;
        }
        WeightConfig cfg = make_weight_config(pt.z1, pt.tau);
        if (!have_table || table.cfg.z1 != pt.z1 || table.cfg.tau != pt.tau ||
            table.limit != pt.n) {
            table = divisor_sums(pt.n, cfg, tables);
            have_table = true;
        }
        Enclosure lhs = sigma_eps_truncated(table, pt.eps);
        Enclosure rhs = thm1_rhs(pt.z1, pt.tau, pt.eps, allow_out_of_regime);
        add_case(r, check_le(std::move(params), lhs, rhs,
                             "LHS truncated at N (lower bound)"));
    }
    sort_cases(r);
    r.runtime_seconds = timer.seconds();
    return r;
}

namespace {

Enclosure headline_rhs(double constant, double x, double z1, double tau) {
    Enclosure log_ratio =
        (Enclosure(tau) - Enclosure(1.0)) * enc_log(Enclosure(z1));
    return dec(constant) * enc_log(Enclosure(x)) / log_ratio;
}

}  // namespace

VerificationReport verify_cor2(std::span<const CorPoint> grid,
                               const SieveTables& tables) {
    Timer timer;
    VerificationReport r;
    r.campaign = "cor2";
    for (const CorPoint& pt : grid) {
        WeightConfig cfg = make_weight_config(pt.z1, pt.tau);
        Enclosure lhs = sigma_zero(cfg, pt.x, tables);
        double xd = static_cast<double>(pt.x);
        Params params{{"z1", pt.z1}, {"tau", pt.tau}, {"x", xd}};
        Enclosure rhs = cor2_rhs(xd, pt.z1, pt.tau);
        if (pt.tau == 2.0) {
            add_case(r, check_le(params, lhs,
                                 headline_rhs(Constants::cor2_headline, xd,
                                              pt.z1, pt.tau),
                                 "headline 30 log X / log(z2/z1)"));
            add_case(r, check_le(params, lhs,
                                 headline_rhs(Constants::cor2_f2_rounded, xd,
                                              pt.z1, pt.tau),
                                 "rounded f(2) = 29.79"));
            add_case(r, check_le(params, lhs,
                                 headline_rhs(Constants::cor2_sharp_tau2, xd,
                                              pt.z1, pt.tau),
                                 "sharpened tau=2 constant 29.18"));
        }
        // empirical ratio recorded for documentation; only upper bounds are
        // asserted
        double ratio = lhs.value /
                       (std::log(xd) / ((pt.tau - 1.0) * std::log(pt.z1)));
        params.emplace_back("ratio", ratio);
        add_case(r, check_le(std::move(params), lhs, rhs, "f(tau) bound"));
    }
    sort_cases(r);
    r.runtime_seconds = timer.seconds();
    return r;
}

VerificationReport verify_cor3(std::span<const CorPoint> grid,
                               const SieveTables& tables) {
    Timer timer;
    VerificationReport r;
    r.campaign = "cor3";
    DivisorSumTable table;
    bool have_table = false;
    for (const CorPoint& pt : grid) {
        WeightConfig cfg = make_weight_config(pt.z1, pt.tau);
        if (!have_table || table.cfg.z1 != pt.z1 || table.cfg.tau != pt.tau ||
            table.limit != pt.x) {
            table = divisor_sums(pt.x, cfg, tables);
            have_table = true;
        }
        double xd = static_cast<double>(pt.x);
        Enclosure lhs = sigma_alpha(table, pt.alpha);
        Enclosure rhs = cor3_rhs(xd, pt.z1, pt.tau, pt.alpha);
        add_case(r, check_le({{"z1", pt.z1},
                              {"tau", pt.tau},
                              {"x", xd},
                              {"alpha", pt.alpha}},
                             lhs, rhs));
    }
    sort_cases(r);
    r.runtime_seconds = timer.seconds();
    return r;
}

VerificationReport verify_mcheck(std::span<const McheckPoint> grid,
                                 const SieveTables& tables) {
    Timer timer;
    VerificationReport r;
    r.campaign = "mcheck";
    for (const McheckPoint& pt : grid) {
        Params params{{"q", static_cast<double>(pt.q)},
                      {"x", pt.x},
                      {"sigma", pt.sigma},
                      {"k", static_cast<double>(pt.k)}};
        Enclosure m = mcheck(pt.q, pt.x, pt.sigma, pt.k, tables);
        add_case(r, check_ge(params, m, Enclosure(0.0), "lower, m >= 0"));
        add_case(r, check_le(std::move(params), m,
                             mcheck_rhs(pt.q, pt.x, pt.sigma, pt.k), "upper"));
    }
    sort_cases(r);
    r.runtime_seconds = timer.seconds();
    return r;
}

VerificationReport verify_usum(std::span<const UsumPoint> grid,
                               const SieveTables& tables) {
    Timer timer;
    VerificationReport r;
    r.campaign = "usum";
    for (const UsumPoint& pt : grid) {
        Enclosure u = u_sum(pt.y, pt.sigma, tables);
        // sigma - 1 is exact for sigma in [1, 2] (Sterbenz)
        Enclosure rhs = u_rhs(pt.y, pt.sigma - 1.0);
        add_case(r, check_le({{"y", pt.y}, {"sigma", pt.sigma}}, u, rhs));
    }
    sort_cases(r);
    r.runtime_seconds = timer.seconds();
    return r;
}

// ---------------------------------------------------------------------------
// identities
// ---------------------------------------------------------------------------

namespace {

uint64_t pow_u64(uint64_t b, int k) {
    uint64_t r = 1;
    for (int i = 0; i < k; ++i) r *= b;
    return r;
}

// sum_{delta | g} phi_k(delta) over the (squarefree) divisors of g
uint64_t divisor_phi_sum(uint64_t g, int k) {
    std::vector<uint64_t> ps;
    for (auto [p, e] : factorize(g)) {
        (void)e;
        ps.push_back(p);
    }
    uint64_t total = 0;
    for (uint64_t mask = 0; mask < (uint64_t(1) << ps.size()); ++mask) {
        uint64_t delta = 1;
        for (std::size_t i = 0; i < ps.size(); ++i)
            if (mask & (uint64_t(1) << i)) delta *= ps[i];
        total += phi_sigma_integer(delta, k);
    }
    return total;
}

}  // namespace

VerificationReport verify_identities(std::span<const WeightConfig> configs,
                                     std::span<const double> sigmas,
                                     const SieveTables& tables, uint64_t seed,
                                     int n_trials) {
    Timer timer;
    VerificationReport r;
    r.campaign = "identities";

    // (a) gcd identity, exact integer arithmetic, zero tolerance
    for (int k : {1, 2}) {
        uint64_t mismatches = 0, pairs = 0;
        for (uint64_t d = 1; d <= 30; ++d) {
            if (mobius_single(d) == 0) continue;
            for (uint64_t e = 1; e <= 30; ++e) {
                if (mobius_single(e) == 0) continue;
                ++pairs;
                uint64_t g = std::gcd(d, e);
                if (pow_u64(g, k) != divisor_phi_sum(g, k)) ++mismatches;
            }
        }
        CaseResult c{{{"sigma", static_cast<double>(k)},
                      {"pairs", static_cast<double>(pairs)}},
                     "gcd identity, squarefree d,e <= 30",
                     Enclosure(static_cast<double>(mismatches)),
                     Enclosure(0.0),
                     mismatches == 0 ? 0.0 : -static_cast<double>(mismatches),
                     mismatches == 0 ? Verdict::Pass : Verdict::Fail};
        add_case(r, std::move(c));
    }

    // (b) expanded pair sum vs the diagonalized sum of squares
    for (const WeightConfig& cfg : configs) {
        for (double s : sigmas) {
            Enclosure b = bilinear_form(cfg, s, tables);
            Enclosure d = diagonal_form(cfg, s, tables);
            add_case(r, check_eq({{"z1", cfg.z1}, {"tau", cfg.tau},
                                  {"sigma", s}},
                                 b, d, "bilinear = diagonal"));
        }
    }

    // (c) non-negativity for arbitrary weights (the diagonalized form is a
    // sum of squares for any weight vector, not just lambda)
    std::vector<uint64_t> support;
    for (uint64_t d = 1; d <= 50; ++d)
        if (mobius_single(d) != 0) support.push_back(d);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    for (int t = 0; t < n_trials; ++t) {
        std::vector<std::pair<uint64_t, Enclosure>> w;
        w.reserve(support.size());
        for (uint64_t d : support) w.emplace_back(d, Enclosure(uni(rng)));
        Enclosure form = quadratic_form(w, 1.2);
        add_case(r, check_ge({{"trial", static_cast<double>(t)}}, form,
                             Enclosure(0.0), "random weights, sigma=1.2"));
    }
    sort_cases(r);
    r.runtime_seconds = timer.seconds();
    return r;
}

// ---------------------------------------------------------------------------
// constants audit
// ---------------------------------------------------------------------------

VerificationReport audit_constants(const SieveTables& tables) {
    detail::require_primes(tables, 1e6, "audit_constants");
    Timer timer;
    VerificationReport r;
    r.campaign = "audit";

    MertensSums m100 = mertens_weighted_sum(100.0, tables);
    add_case(r, check_ge({{"y", 100.0}}, m100.p1, dec(3.369),
                         "P1(100) = sum log p / p"));
    add_case(r, check_le({{"y", 100.0}}, m100.p2, dec(8.739),
                         "P2(100) = sum log^2 p / p"));

    {
        // prod_{3 <= p <= 1e6} (1 + 1/(4p(p-1))), then a tail cover from
        // sum_{n > 1e6} 1/(4n(n-1)) = 1/(4e6)
        Enclosure prod(1.0);
        std::size_t last = tables.prime_index_at_most(1e6);
        for (std::size_t i = 1; i <= last; ++i) {
            double p = static_cast<double>(tables.primes[i]);
            double den = 4.0 * p * (p - 1.0);  // exact below 2^53
            double q = 1.0 / den;
            prod = prod * (Enclosure(1.0) + Enclosure{q, ulp(q)});
        }
        double tq = 1.0 / 4e6;
        double hi = enc_exp({tq, ulp(tq)}).upper();
        Enclosure tail{0.5 * (1.0 + hi), 0.5 * (hi - 1.0) + ulp(hi)};
        add_case(r, check_le({{"p_max", 1e6}}, prod * tail, dec(1.08),
                             "prod_{p>=3}(1 + 1/(4p(p-1))) with tail cover"));
    }

    Enclosure e1 = enc_exp(Enclosure(1.0) +
                           dec(Constants::euler_gamma) / enc_log(Enclosure(100.0)));
    add_case(r, check_le({}, e1, dec(Constants::cor2_c), "e^{1+gamma/log 100}"));

    add_case(r, check_le({}, dec(Constants::mcheck_c) * dec(Constants::u_proof_a),
                         dec(Constants::A), "1.00303 * 1.08 <= A"));
    add_case(r, check_le({}, dec(Constants::mcheck_c) * dec(Constants::u_proof_b),
                         dec(Constants::B), "1.00303 * 1.297 <= B"));

    add_case(r, check_le({{"tau", 2.0}}, f_tau(2.0),
                         dec(Constants::cor2_headline), "f(2) <= 30"));

    {
        // sharpened tau=2 constant: both readings of the final display,
        // C tau^2/e and C tau^2/e^2, stay below 29.18
        Enclosure a = dec(Constants::A), b = dec(Constants::B),
                  c = dec(Constants::C);
        Enclosure e = enc_exp(Enclosure(1.0));
        Enclosure common = a * Enclosure(3.0) + b * Enclosure(5.0) - c / e;
        add_case(r, check_le({{"tau", 2.0}},
                             e1 * (common - Enclosure(4.0) * c / e),
                             dec(Constants::cor2_sharp_tau2),
                             "sharp display, C tau^2 / e"));
        add_case(r, check_le({{"tau", 2.0}},
                             e1 * (common - Enclosure(4.0) * c / (e * e)),
                             dec(Constants::cor2_sharp_tau2),
                             "sharp display, C tau^2 / e^2"));
    }

    for (double eps : {0.05, 0.1, 0.5, 1.0, 5.0}) {
        ZetaCheck zc = zeta_upper_enclosure(eps, 1000000);
        add_case(r, check_le({{"eps", eps}}, zc.zeta, zc.bound,
                             "zeta(1+eps) <= e^{gamma eps}/eps"));
    }

    sort_cases(r);
    r.runtime_seconds = timer.seconds();
    return r;
}

}  // namespace bv
