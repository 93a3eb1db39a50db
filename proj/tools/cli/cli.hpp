#pragma once

// Command-line surface: verify, omega, band, example.

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "moebius/certificates.hpp"

namespace moebius::cli {

inline constexpr const char* kSchema = "moebius-cert/1";

enum Exit { ok = 0, failed = 1, usage = 2 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

nlohmann::json to_json(const cert::Verdict& v);
cert::Verdict verdict_from_json(const nlohmann::json& j);

// The SVG plot of the slope region.
std::string omega_svg(int grid, double eps);

}  // namespace moebius::cli
