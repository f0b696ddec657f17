#include "bv/cli.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <set>
#include <sstream>

namespace bv {

namespace {

namespace fs = std::filesystem;

const std::set<std::string> kBoolFlags = {"extended"};
const std::set<std::string> kGlobalKeys = {"command", "sub", "output_dir",
                                           "format", "workers"};

[[noreturn]] void usage_error(const std::string& msg) {
    throw std::invalid_argument(msg);
}

std::string get_str(const KeyValues& kv, const std::string& key) {
    auto it = kv.find(key);
    if (it == kv.end()) usage_error("missing required --" + key);
    return it->second;
}

double get_double(const KeyValues& kv, const std::string& key) {
    std::string s = get_str(kv, key);
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (!end || *end != '\0')
        usage_error("--" + key + ": cannot parse '" + s + "' as a number");
    return v;
}

uint64_t get_u64(const KeyValues& kv, const std::string& key) {
    double v = get_double(kv, key);
    if (!(v >= 0.0) || v > 9.0e15 || v != std::floor(v))
        usage_error("--" + key + ": expected a nonnegative integer");
    return static_cast<uint64_t>(v);
}

int get_int(const KeyValues& kv, const std::string& key) {
    return static_cast<int>(get_u64(kv, key));
}

bool get_bool(const KeyValues& kv, const std::string& key) {
    std::string s = get_str(kv, key);
    if (s == "1" || s == "true") return true;
    if (s == "0" || s == "false") return false;
    usage_error("--" + key + ": expected 0 or 1");
}

void ensure(KeyValues& kv, const std::string& key, const std::string& value) {
    kv.emplace(key, value);
}

void check_keys(const KeyValues& kv, std::set<std::string> allowed) {
    allowed.insert(kGlobalKeys.begin(), kGlobalKeys.end());
    for (const auto& [k, v] : kv)
        if (!allowed.count(k)) usage_error("unknown key '" + k + "'");
}

std::string out_path(const KeyValues& kv, const std::string& name) {
    fs::path p(name);
    if (p.is_absolute()) return name;
    return (fs::path(get_str(kv, "output_dir")) / p).string();
}

void write_manifest(const KeyValues& kv, const std::string& stem) {
    write_file(out_path(kv, stem + ".manifest.cfg"), config_to_text(kv));
}

void write_report_files(const KeyValues& kv, const VerificationReport& r) {
    std::string format = get_str(kv, "format");
    if (format != "csv" && format != "json" && format != "both")
        usage_error("--format must be csv, json or both");
    if (format == "csv" || format == "both")
        write_file(out_path(kv, r.campaign + ".report.csv"), report_to_csv(r));
    if (format == "json" || format == "both")
        write_file(out_path(kv, r.campaign + ".report.json"),
                   report_to_json(r));
}

SieveTables tables_for(double limit, uint64_t mobius_limit) {
    SieveOptions opt;
    opt.mobius_limit = mobius_limit;
    return build_tables(
        std::max<uint64_t>(2, static_cast<uint64_t>(std::ceil(limit))), opt);
}

// --- csv rows for plain computations ---------------------------------------

struct CsvRows {
    std::string text = "quantity,params,value,abs_err\n";
    void add(const std::string& quantity, const Params& params, Enclosure v) {
        text += quantity;
        text += ',';
        std::string ps;
        for (const auto& [k, val] : params) {
            if (!ps.empty()) ps += ';';
            ps += k + "=" + fmt_g17(val);
        }
        text += ps + ',' + fmt_g17(v.value) + ',' + fmt_g17(v.abs_err) + '\n';
    }
};

int finish_value_command(KeyValues& kv, const std::string& stem,
                         const CsvRows& rows, const std::string& print_line) {
    write_file(out_path(kv, stem + ".csv"), rows.text);
    write_manifest(kv, stem);
    std::cout << print_line << "\n";
    return 0;
}

// --- command handlers -------------------------------------------------------

int run_weights(KeyValues& kv) {
    ensure(kv, "out", "weights.csv");
    check_keys(kv, {"z1", "tau", "out"});
    WeightConfig cfg = make_weight_config(get_double(kv, "z1"),
                                          get_double(kv, "tau"));
    uint64_t dmax = weight_support_max(cfg);
    if (dmax > 20'000'000)
        throw ResourceError("weights: z2 too large for a table dump");
    SieveTables tables = tables_for(static_cast<double>(std::max<uint64_t>(dmax, 2)), UINT64_MAX);
    WeightTable wt = lambda_table(cfg, tables);
    std::string csv = "d,mu,lambda\n";
    for (const auto& e : wt.entries)
        csv += std::to_string(e.d) + ',' + std::to_string(e.mu) + ',' +
               fmt_g17(e.lam.value) + '\n';
    write_file(out_path(kv, get_str(kv, "out")), csv);
    write_manifest(kv, "weights");
    std::cout << "weights: " << wt.entries.size() << " rows (z1=" << cfg.z1
              << ", z2=" << cfg.z2 << ")\n";
    return 0;
}

int run_sums(KeyValues& kv) {
    std::string op = get_str(kv, "sub");
    CsvRows rows;
    std::ostringstream line;
    if (op == "mcheck") {
        ensure(kv, "q", "1");
        ensure(kv, "sigma", "1");
        ensure(kv, "k", "1");
        check_keys(kv, {"q", "x", "sigma", "k"});
        uint64_t q = get_u64(kv, "q");
        double x = get_double(kv, "x");
        double sigma = get_double(kv, "sigma");
        int k = get_int(kv, "k");
        SieveTables t = tables_for(x, UINT64_MAX);
        Enclosure v = mcheck(q, x, sigma, k, t);
        rows.add("mcheck",
                 {{"q", double(q)}, {"x", x}, {"sigma", sigma}, {"k", double(k)}},
                 v);
        line << "mcheck = " << fmt_g17(v.value) << " +- " << fmt_g17(v.abs_err);
    } else if (op == "mertens") {
        check_keys(kv, {"y"});
        double y = get_double(kv, "y");
        SieveTables t = tables_for(y, 0);
        MertensSums m = mertens_weighted_sum(y, t);
        rows.add("mertens_s", {{"y", y}}, m.value);
        rows.add("mertens_p1", {{"y", y}}, m.p1);
        rows.add("mertens_p2", {{"y", y}}, m.p2);
        line << "S(Y) = " << fmt_g17(m.value.value) << " +- "
             << fmt_g17(m.value.abs_err);
    } else if (op == "usum") {
        ensure(kv, "sigma", "1");
        ensure(kv, "cap", "100000");
        check_keys(kv, {"y", "sigma", "cap"});
        double y = get_double(kv, "y");
        double sigma = get_double(kv, "sigma");
        SieveTables t = tables_for(y, UINT64_MAX);
        Enclosure v = u_sum(y, sigma, t, get_double(kv, "cap"));
        rows.add("usum", {{"y", y}, {"sigma", sigma}}, v);
        line << "U(Y) = " << fmt_g17(v.value) << " +- " << fmt_g17(v.abs_err);
    } else if (op == "divisor") {
        check_keys(kv, {"x", "z1", "tau"});
        uint64_t x = get_u64(kv, "x");
        if (x > 1'000'000)
            throw ResourceError("sums divisor: table dump capped at X = 1e6");
        WeightConfig cfg = make_weight_config(get_double(kv, "z1"),
                                              get_double(kv, "tau"));
        SieveTables t = tables_for(
            double(std::max<uint64_t>(2, std::min(x, weight_support_max(cfg)))),
            UINT64_MAX);
        DivisorSumTable dt = divisor_sums(x, cfg, t);
        for (uint64_t n = 1; n <= x; ++n)
            rows.add("T", {{"n", double(n)}}, dt.at(n));
        line << "T(n) table, " << x << " rows";
    } else if (op == "sigma-eps") {
        ensure(kv, "n", "1000000");
        check_keys(kv, {"z1", "tau", "eps", "n"});
        uint64_t n = get_u64(kv, "n");
        if (n > 30'000'000)
            throw ResourceError("sums sigma-eps: N capped at 3e7");
        WeightConfig cfg = make_weight_config(get_double(kv, "z1"),
                                              get_double(kv, "tau"));
        double eps = get_double(kv, "eps");
        SieveTables t = tables_for(double(n), UINT64_MAX);
        Enclosure v = sigma_eps_truncated(cfg, eps, n, t);
        rows.add("sigma_eps_truncated",
                 {{"z1", cfg.z1}, {"tau", cfg.tau}, {"eps", eps}, {"n", double(n)}},
                 v);
        line << "Sigma(1+eps) truncated = " << fmt_g17(v.value) << " +- "
             << fmt_g17(v.abs_err) << " (lower bound, N=" << n << ")";
    } else if (op == "sigma0" || op == "sigma-alpha") {
        std::set<std::string> keys = {"z1", "tau", "x"};
        if (op == "sigma-alpha") keys.insert("alpha");
        check_keys(kv, keys);
        uint64_t x = get_u64(kv, "x");
        if (x > 30'000'000) throw ResourceError("sums: X capped at 3e7");
        WeightConfig cfg = make_weight_config(get_double(kv, "z1"),
                                              get_double(kv, "tau"));
        SieveTables t = tables_for(double(x), UINT64_MAX);
        if (op == "sigma0") {
            Enclosure v = sigma_zero(cfg, x, t);
            rows.add("sigma_zero",
                     {{"z1", cfg.z1}, {"tau", cfg.tau}, {"x", double(x)}}, v);
            line << "Sigma(0) = " << fmt_g17(v.value) << " +- "
                 << fmt_g17(v.abs_err);
        } else {
            double alpha = get_double(kv, "alpha");
            Enclosure v = sigma_alpha(cfg, x, alpha, t);
            rows.add("sigma_alpha",
                     {{"z1", cfg.z1}, {"tau", cfg.tau}, {"x", double(x)},
                      {"alpha", alpha}},
                     v);
            line << "Sigma_alpha = " << fmt_g17(v.value) << " +- "
                 << fmt_g17(v.abs_err);
        }
    } else if (op == "bilinear" || op == "diagonal") {
        ensure(kv, "cap", "2000");
        check_keys(kv, {"z1", "tau", "sigma", "cap"});
        WeightConfig cfg = make_weight_config(get_double(kv, "z1"),
                                              get_double(kv, "tau"));
        double sigma = get_double(kv, "sigma");
        double cap = get_double(kv, "cap");
        SieveTables t = tables_for(
            double(std::max<uint64_t>(2, weight_support_max(cfg))), UINT64_MAX);
        Enclosure v = op == "bilinear" ? bilinear_form(cfg, sigma, t, cap)
                                       : diagonal_form(cfg, sigma, t, cap);
        rows.add(op, {{"z1", cfg.z1}, {"tau", cfg.tau}, {"sigma", sigma}}, v);
        line << op << " = " << fmt_g17(v.value) << " +- " << fmt_g17(v.abs_err);
    } else {
        usage_error("unknown sums operation '" + op + "'");
    }
    return finish_value_command(kv, "sums_" + op, rows, line.str());
}

KeyValues parse_param_list(const std::string& s) {
    KeyValues kv;
    std::istringstream is(s);
    std::string item;
    while (std::getline(is, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            usage_error("--params: expected comma-separated key=value pairs");
        kv[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return kv;
}

int run_bounds(KeyValues& kv) {
    if (get_str(kv, "sub") != "eval")
        usage_error("bounds: expected 'bounds eval --which ... --params ...'");
    ensure(kv, "params", "");
    check_keys(kv, {"which", "params"});
    std::string which = get_str(kv, "which");
    KeyValues p = parse_param_list(get_str(kv, "params"));
    // exploratory evaluation outside the stated hypotheses
    bool allow = p.count("override") && get_double(p, "override") != 0.0;
    p.erase("override");
    CsvRows rows;
    std::ostringstream line;
    Params rp;
    for (const auto& [k, v] : p) rp.emplace_back(k, get_double(p, k));
    if (allow) line << "[out-of-regime] ";
    if (which == "thm1") {
        Enclosure v = thm1_rhs(get_double(p, "z1"), get_double(p, "tau"),
                               get_double(p, "eps"), allow);
        rows.add("thm1_rhs", rp, v);
        line << "thm1_rhs = " << fmt_g17(v.value) << " +- " << fmt_g17(v.abs_err);
    } else if (which == "cor2") {
        Enclosure v = cor2_rhs(get_double(p, "x"), get_double(p, "z1"),
                               get_double(p, "tau"), allow);
        rows.add("cor2_rhs", rp, v);
        line << "cor2_rhs = " << fmt_g17(v.value) << " +- " << fmt_g17(v.abs_err);
    } else if (which == "cor3") {
        Enclosure v = cor3_rhs(get_double(p, "x"), get_double(p, "z1"),
                               get_double(p, "tau"), get_double(p, "alpha"),
                               allow);
        rows.add("cor3_rhs", rp, v);
        line << "cor3_rhs = " << fmt_g17(v.value) << " +- " << fmt_g17(v.abs_err);
    } else if (which == "u") {
        Enclosure v = u_rhs(get_double(p, "y"), get_double(p, "eps"), allow);
        rows.add("u_rhs", rp, v);
        line << "u_rhs = " << fmt_g17(v.value) << " +- " << fmt_g17(v.abs_err);
    } else if (which == "mcheck") {
        Enclosure v = mcheck_rhs(static_cast<uint64_t>(get_double(p, "q")),
                                 get_double(p, "x"), get_double(p, "sigma"),
                                 static_cast<int>(get_double(p, "k")));
        rows.add("mcheck_rhs", rp, v);
        line << "mcheck_rhs = " << fmt_g17(v.value) << " +- "
             << fmt_g17(v.abs_err);
    } else if (which == "mertens") {
        Enclosure v = mertens_lower(get_double(p, "y"));
        rows.add("mertens_lower", rp, v);
        line << "mertens_lower = " << fmt_g17(v.value) << " +- "
             << fmt_g17(v.abs_err);
    } else if (which == "zeta") {
        uint64_t m = p.count("m") ? static_cast<uint64_t>(get_double(p, "m"))
                                  : 100000;
        ZetaCheck zc = zeta_upper_enclosure(get_double(p, "eps"), m);
        rows.add("zeta_enclosure", rp, zc.zeta);
        rows.add("zeta_bound", rp, zc.bound);
        line << "zeta(1+eps) = " << fmt_g17(zc.zeta.value) << " +- "
             << fmt_g17(zc.zeta.abs_err) << ", bound = "
             << fmt_g17(zc.bound.value);
    } else {
        usage_error("unknown bound '" + which + "'");
    }
    return finish_value_command(kv, "bounds_" + which, rows, line.str());
}

int finish_campaign(KeyValues& kv, const VerificationReport& r) {
    write_report_files(kv, r);
    write_manifest(kv, "verify_" + r.campaign);
    std::cout << r.one_line_summary() << "\n";
    return r.exit_code();
}

int run_verify(KeyValues& kv) {
    std::string campaign = get_str(kv, "sub");
    if (campaign == "mertens") {
        ensure(kv, "extended", "0");
        bool ext = get_bool(kv, "extended");
        ensure(kv, "ymin", "100");
        ensure(kv, "ymax", ext ? "1e8" : "1e6");
        check_keys(kv, {"ymin", "ymax", "extended"});
        double ymax = get_double(kv, "ymax");
        SieveTables t = tables_for(ymax, 0);
        return finish_campaign(kv, scan_mertens(get_double(kv, "ymin"), ymax, t));
    }
    if (campaign == "theta") {
        ensure(kv, "tmin", "100");
        ensure(kv, "tmax", "1155901");
        ensure(kv, "threshold", "0.835");
        ensure(kv, "mode", "integer");
        check_keys(kv, {"tmin", "tmax", "threshold", "mode"});
        std::string mode = get_str(kv, "mode");
        if (mode != "integer" && mode != "continuum")
            usage_error("--mode must be integer or continuum");
        SieveTables t = tables_for(get_double(kv, "tmax"), 0);
        return finish_campaign(
            kv, scan_theta(get_double(kv, "tmin"), get_double(kv, "tmax"),
                           get_double(kv, "threshold"), t,
                           mode == "integer" ? ThetaScanMode::IntegerGrid
                                             : ThetaScanMode::Continuum));
    }
    if (campaign == "thm1") {
        ensure(kv, "n", "1000000");
        ensure(kv, "override", "0");
        check_keys(kv, {"z1", "tau", "eps", "n", "override"});
        uint64_t n = get_u64(kv, "n");
        if (n > 30'000'000) throw ResourceError("verify thm1: N capped at 3e7");
        std::vector<Thm1Point> grid;
        if (kv.count("z1") || kv.count("tau") || kv.count("eps")) {
            grid.push_back({get_double(kv, "z1"), get_double(kv, "tau"),
                            get_double(kv, "eps"), n});
        } else {
            for (double z1 : {100.0, 1000.0})
                for (double tau : {1.5, 2.0, 3.0})
                    for (double eps : {0.05, 0.1, 0.5})
                        grid.push_back({z1, tau, eps, n});
        }
        SieveTables t = tables_for(double(n), UINT64_MAX);
        return finish_campaign(kv, verify_theorem1(grid, t, get_bool(kv, "override")));
    }
    if (campaign == "cor2") {
        ensure(kv, "z1", "100");
        ensure(kv, "tau", "2");
        ensure(kv, "x", "1e6");
        check_keys(kv, {"z1", "tau", "x"});
        uint64_t x = get_u64(kv, "x");
        if (x > 30'000'000) throw ResourceError("verify cor2: X capped at 3e7");
        std::vector<CorPoint> grid{
            {get_double(kv, "z1"), get_double(kv, "tau"), x, 1.0}};
        SieveTables t = tables_for(double(x), UINT64_MAX);
        return finish_campaign(kv, verify_cor2(grid, t));
    }
    if (campaign == "cor3") {
        ensure(kv, "z1", "100");
        ensure(kv, "tau", "2");
        ensure(kv, "x", "1e4");
        check_keys(kv, {"z1", "tau", "x", "alpha"});
        uint64_t x = get_u64(kv, "x");
        if (x > 30'000'000) throw ResourceError("verify cor3: X capped at 3e7");
        std::vector<CorPoint> grid;
        double z1 = get_double(kv, "z1"), tau = get_double(kv, "tau");
        if (kv.count("alpha")) {
            grid.push_back({z1, tau, x, get_double(kv, "alpha")});
        } else {
            for (double alpha : {0.5, 0.75, 1.0})
                grid.push_back({z1, tau, x, alpha});
        }
        SieveTables t = tables_for(double(x), UINT64_MAX);
        return finish_campaign(kv, verify_cor3(grid, t));
    }
    if (campaign == "identities") {
        ensure(kv, "seed", "12345");
        check_keys(kv, {"seed"});
        std::vector<WeightConfig> cfgs{make_weight_config(5.0, 2.0),
                                       make_weight_config(4.0, 2.0),
                                       make_weight_config(3.0, 2.5)};
        std::vector<double> sigmas{1.2, 1.5};
        SieveTables t = tables_for(32, UINT64_MAX);
        return finish_campaign(
            kv, verify_identities(cfgs, sigmas, t, get_u64(kv, "seed")));
    }
    if (campaign == "mcheck") {
        check_keys(kv, {});
        std::vector<McheckPoint> grid;
        for (uint64_t q : {1, 2, 6, 30})
            for (double x : {10.0, 100.0, 1000.0})
                for (double sigma : {1.0, 1.1, 1.5})
                    for (int k : {1, 2}) grid.push_back({q, x, sigma, k});
        SieveTables t = tables_for(1000, UINT64_MAX);
        return finish_campaign(kv, verify_mcheck(grid, t));
    }
    if (campaign == "usum") {
        check_keys(kv, {});
        std::vector<UsumPoint> grid;
        for (double y : {100.0, 1000.0, 1e4})
            for (double sigma : {1.0, 1.05, 1.2}) grid.push_back({y, sigma});
        SieveTables t = tables_for(1e4, UINT64_MAX);
        return finish_campaign(kv, verify_usum(grid, t));
    }
    if (campaign == "audit") {
        check_keys(kv, {});
        SieveTables t = tables_for(1e6, 0);
        return finish_campaign(kv, audit_constants(t));
    }
    usage_error("unknown verify campaign '" + campaign + "'");
}

int run_sweep(KeyValues& kv) {
    std::string quantity = get_str(kv, "sub");
    if (quantity != "mertens-ratio")
        usage_error("unknown sweep quantity '" + quantity + "'");
    ensure(kv, "ymin", "100");
    ensure(kv, "ymax", "1e6");
    ensure(kv, "points", "50");
    check_keys(kv, {"ymin", "ymax", "points"});
    double ymin = get_double(kv, "ymin"), ymax = get_double(kv, "ymax");
    uint64_t points = get_u64(kv, "points");
    if (!(ymin >= 2.0 && ymax > ymin && points >= 2))
        usage_error("sweep: need 2 <= ymin < ymax and points >= 2");
    SieveTables t = tables_for(ymax, 0);
    std::string csv = "y,s_value,s_abs_err,lower_value,ratio\n";
    for (uint64_t i = 0; i < points; ++i) {
        double f = double(i) / double(points - 1);
        double y = std::exp(std::log(ymin) + f * (std::log(ymax) - std::log(ymin)));
        y = std::clamp(y, ymin, ymax);  // exp/log round-trip can spill past ymax
        MertensSums m = mertens_weighted_sum(y, t);
        double l2 = std::log(y) * std::log(y);
        csv += fmt_g17(y) + ',' + fmt_g17(m.value.value) + ',' +
               fmt_g17(m.value.abs_err) + ',' +
               fmt_g17(Constants::mertens_c * l2) + ',' +
               fmt_g17(m.value.value / l2) + '\n';
    }
    write_file(out_path(kv, "sweep_mertens_ratio.csv"), csv);
    write_manifest(kv, "sweep_mertens_ratio");
    std::cout << "sweep mertens-ratio: " << points << " points to "
              << out_path(kv, "sweep_mertens_ratio.csv") << "\n";
    return 0;
}

}  // namespace

RunConfig parse_args(int argc, const char* const* argv) {
    std::vector<std::string> pos;
    KeyValues flags;
    std::string config_file;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--help" || a == "-h") {
            flags.clear();
            pos.assign(1, "help");
            break;
        }
        if (a.rfind("--", 0) == 0) {
            std::string key = a.substr(2);
            std::replace(key.begin(), key.end(), '-', '_');
            if (key.empty()) usage_error("empty flag name");
            if (kBoolFlags.count(key)) {
                flags[key] = "1";
                continue;
            }
            if (i + 1 >= argc) usage_error("--" + key + " needs a value");
            std::string val = argv[++i];
            if (key == "config")
                config_file = val;
            else
                flags[key] = val;
        } else {
            pos.push_back(a);
        }
    }
    if (pos.size() > 2) usage_error("too many positional arguments");

    RunConfig rc;
    if (!config_file.empty()) rc.kv = load_config_file(config_file);
    if (!pos.empty()) rc.kv["command"] = pos[0];
    if (pos.size() > 1) rc.kv["sub"] = pos[1];
    for (const auto& [k, v] : flags) rc.kv[k] = v;
    return rc;
}

int run(const RunConfig& cfg) {
    KeyValues kv = cfg.kv;
    if (!kv.count("command")) usage_error("no command given");
    std::string command = kv.at("command");
    if (command == "help") {
        std::cout << usage_text();
        return 0;
    }
    ensure(kv, "output_dir", ".");
    ensure(kv, "format", "both");
    ensure(kv, "workers", std::to_string(omp_get_max_threads()));
    int workers = get_int(kv, "workers");
    if (workers < 1) usage_error("--workers must be >= 1");
    omp_set_num_threads(workers);
    std::filesystem::create_directories(get_str(kv, "output_dir"));

    if (command == "weights") return run_weights(kv);
    if (command == "sums") return run_sums(kv);
    if (command == "bounds") return run_bounds(kv);
    if (command == "verify") return run_verify(kv);
    if (command == "audit") {
        kv["command"] = "verify";
        kv["sub"] = "audit";
        return run_verify(kv);
    }
    if (command == "sweep") return run_sweep(kv);
    usage_error("unknown command '" + command + "'");
}

std::string usage_text() {
    return
        "bv - Barban-Vehov weight computations and rigorous inequality checks\n"
        "\n"
        "usage: bv <command> [<sub>] [--key value]... [--config FILE]\n"
        "\n"
        "commands:\n"
        "  weights --z1 R --tau R [--out FILE]        weight table CSV (d,mu,lambda)\n"
        "  sums <op> ...                              one computed quantity, CSV + stdout\n"
        "       ops: mcheck --q I --x R [--sigma R] [--k I]\n"
        "            mertens --y R\n"
        "            usum --y R [--sigma R] [--cap R]\n"
        "            divisor --x I --z1 R --tau R\n"
        "            sigma-eps --z1 R --tau R --eps R [--n I]\n"
        "            sigma0 --z1 R --tau R --x I\n"
        "            sigma-alpha --z1 R --tau R --x I --alpha R\n"
        "            bilinear|diagonal --z1 R --tau R --sigma R [--cap R]\n"
        "  bounds eval --which W --params k=v,...     evaluate a bound\n"
        "       W: thm1|cor2|cor3|u|mcheck|mertens|zeta (add override=1 to\n"
        "       evaluate outside the stated hypotheses)\n"
        "  verify <campaign> ...                      run checks, write report files\n"
        "       mertens  [--ymin R] [--ymax R] [--extended]\n"
        "       theta    [--tmin R] [--tmax R] [--threshold R] [--mode integer|continuum]\n"
        "       thm1     [--z1 R --tau R --eps R] [--n I] [--override 1]\n"
        "                (default: the full acceptance grid at N = 1e6)\n"
        "       cor2     [--z1 R] [--tau R] [--x I]\n"
        "       cor3     [--z1 R] [--tau R] [--x I] [--alpha R]\n"
        "       identities [--seed I]\n"
        "       mcheck | usum | audit\n"
        "  audit                                      alias for `verify audit`\n"
        "  sweep mertens-ratio [--ymin R] [--ymax R] [--points I]\n"
        "\n"
        "global flags: --output-dir D  --format csv|json|both  --workers N\n"
        "              --config FILE (flags override file values)\n"
        "\n"
        "exit codes: 0 all PASS, 1 any FAIL, 2 usage error, 3 any INCONCLUSIVE\n";
}

}  // namespace bv
