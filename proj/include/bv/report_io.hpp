#pragma once

#include <map>
#include <string>

#include "bv/verify.hpp"

namespace bv {

// 17 significant digits, '.' decimal separator, C locale; round-trips any
// double.
std::string fmt_g17(double v);

// Report serialization. runtime_seconds is deliberately omitted from both
// formats: file contents must be byte-identical for a fixed config.
std::string report_to_csv(const VerificationReport& r);
std::string report_to_json(const VerificationReport& r);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

// Flat key=value config grammar: one `key=value` per line, '#' starts a
// comment, blank lines ignored. No sections, no nesting, no quoting.
using KeyValues = std::map<std::string, std::string>;
KeyValues parse_config_text(const std::string& text);
KeyValues load_config_file(const std::string& path);
std::string config_to_text(const KeyValues& kv);

}  // namespace bv
