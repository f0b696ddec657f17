#include "bv/report_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace bv {

std::string fmt_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::string params_to_string(const Params& params) {
    std::string s;
    for (const auto& [k, v] : params) {
        if (!s.empty()) s += ';';
        s += k;
        s += '=';
        s += fmt_g17(v);
    }
    return s;
}

}  // namespace

std::string report_to_csv(const VerificationReport& r) {
    std::ostringstream os;
    os << "campaign,params,note,lhs_value,lhs_abs_err,rhs_value,rhs_abs_err,"
          "margin,verdict\n";
    for (const CaseResult& c : r.cases) {
        os << r.campaign << ',' << params_to_string(c.params) << ',' << c.note
           << ',' << fmt_g17(c.lhs.value) << ',' << fmt_g17(c.lhs.abs_err)
           << ',' << fmt_g17(c.rhs.value) << ',' << fmt_g17(c.rhs.abs_err)
           << ',' << fmt_g17(c.margin) << ',' << to_string(c.verdict) << '\n';
    }
    return os.str();
}

std::string report_to_json(const VerificationReport& r) {
    using json = nlohmann::ordered_json;
    json j;
    j["campaign"] = r.campaign;
    j["cases"] = json::array();
    for (const CaseResult& c : r.cases) {
        json params = json::object();
        for (const auto& [k, v] : c.params) params[k] = v;
        json jc;
        jc["params"] = std::move(params);
        if (!c.note.empty()) jc["note"] = c.note;
        jc["lhs"] = {{"value", c.lhs.value}, {"abs_err", c.lhs.abs_err}};
        jc["rhs"] = {{"value", c.rhs.value}, {"abs_err", c.rhs.abs_err}};
        jc["margin"] = c.margin;
        jc["verdict"] = to_string(c.verdict);
        j["cases"].push_back(std::move(jc));
    }
    json argmin = json::object();
    for (const auto& [k, v] : r.summary.argmin_params) argmin[k] = v;
    j["summary"] = {{"n_cases", r.summary.n_cases},
                    {"n_pass", r.summary.n_pass},
                    {"n_fail", r.summary.n_fail},
                    {"n_inconclusive", r.summary.n_inconclusive},
                    {"n_skipped", r.summary.n_skipped},
                    {"min_margin", r.summary.min_margin},
                    {"argmin_params", std::move(argmin)}};
    return j.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << content;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot read " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

KeyValues parse_config_text(const std::string& text) {
    KeyValues kv;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto last = line.find_last_not_of(" \t\r");
        line = line.substr(first, last - first + 1);
        auto eq = line.find('=');
        if (eq == std::string::npos || eq == 0)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected key=value");
        std::string key = line.substr(0, eq);
        auto kend = key.find_last_not_of(" \t");
        key = key.substr(0, kend + 1);
        std::string val = line.substr(eq + 1);
        auto vstart = val.find_first_not_of(" \t");
        val = vstart == std::string::npos ? "" : val.substr(vstart);
        kv[key] = val;
    }
    return kv;
}

KeyValues load_config_file(const std::string& path) {
    return parse_config_text(read_file(path));
}

std::string config_to_text(const KeyValues& kv) {
    std::string s;
    for (const auto& [k, v] : kv) {
        s += k;
        s += '=';
        s += v;
        s += '\n';
    }
    return s;
}

}  // namespace bv
