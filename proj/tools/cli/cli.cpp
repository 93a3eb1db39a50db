#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <future>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "moebius/band.hpp"
#include "moebius/example.hpp"
#include "moebius/slope_domain.hpp"

#ifndef MOEBIUS_VERSION
#define MOEBIUS_VERSION "0.0.0"
#endif

namespace moebius::cli {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

std::string fmt(double x, int digits) {
  std::ostringstream os;
  os << std::setprecision(std::min(digits, 17)) << x;
  return os.str();
}

std::string fmt(const hp::Real& x, int digits) { return hp::to_string(x, digits); }

// Decimal places, truncated toward zero and marked with "...".
std::string truncated(const hp::Real& x, int places) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(places + 6) << x;
  std::string s = os.str();
  auto dot = s.find('.');
  if (dot == std::string::npos) return s;
  return s.substr(0, dot + 1 + places) + "...";
}

std::string yes(bool b) { return b ? "true" : "false"; }

json report(const std::string& command, json inputs, Clock::time_point start) {
  json j;
  j["schema"] = kSchema;
  j["tool_version"] = MOEBIUS_VERSION;
  j["command"] = command;
  j["inputs"] = std::move(inputs);
  j["deviations"] = json::array();
  j["wall_time_s"] = std::chrono::duration<double>(Clock::now() - start).count();
  return j;
}

algebra::Rational parse_rational(const std::string& text) {
  std::string s = text;
  bool neg = !s.empty() && s[0] == '-';
  if (neg || (!s.empty() && s[0] == '+')) s = s.substr(1);
  algebra::Rational q;
  auto dot = s.find('.');
  if (dot == std::string::npos) {
    if (s.empty() || s.find_first_not_of("0123456789/") != std::string::npos || q.set_str(s, 10) != 0) {
      throw CLI::ValidationError("not a rational number: " + text);
    }
    if (q.get_den() == 0) throw CLI::ValidationError("zero denominator: " + text);
    q.canonicalize();
  } else {
    std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if (ip.empty()) ip = "0";
    if ((ip + fp).find_first_not_of("0123456789") != std::string::npos || (ip + fp).empty()) {
      throw CLI::ValidationError("not a decimal number: " + text);
    }
    q = algebra::Rational(mpz_class(ip + fp), mpz_class("1" + std::string(fp.size(), '0')));
    q.canonicalize();
  }
  return neg ? algebra::Rational(-q) : q;
}

// ---- verify ----------------------------------------------------------------

int cmd_verify(const std::string& name, bool as_json, std::ostream& out) {
  auto start = Clock::now();
  auto names = cert::certificate_names();
  std::vector<std::string> todo;
  if (name == "all") {
    todo = names;
  } else if (std::find(names.begin(), names.end(), name) != names.end()) {
    todo = {name};
  } else {
    throw UnknownCertificate(name);
  }
  std::vector<std::future<cert::Verdict>> jobs;
  for (const auto& n : todo) {
    jobs.push_back(std::async(std::launch::async, [n] { return cert::run_certificate(n); }));
  }
  std::vector<cert::Verdict> verdicts;
  for (auto& f : jobs) verdicts.push_back(f.get());
  bool all = std::all_of(verdicts.begin(), verdicts.end(), [](const auto& v) { return v.passed; });

  if (as_json) {
    json j = report("verify", {{"name", name}}, start);
    j["verdicts"] = json::array();
    for (const auto& v : verdicts) {
      j["verdicts"].push_back(to_json(v));
      for (const auto& d : v.deviations) j["deviations"].push_back(v.name + ": " + d);
    }
    j["passed"] = all;
    out << j.dump(2) << "\n";
  } else {
    for (const auto& v : verdicts) {
      out << (v.passed ? "PASS " : "FAIL ") << v.name << "\n";
      for (const auto& s : v.steps) {
        if (!s.passed) out << "  failed step: " << s.description << " (" << s.claim << ")\n";
      }
    }
  }
  return all ? ok : failed;
}

// ---- omega -----------------------------------------------------------------

int cmd_omega_contains(double b, double t, double eps, bool as_json, std::ostream& out) {
  auto start = Clock::now();
  slope::SlopePair s{b, t};
  bool in_omega = slope::omega_contains(s, eps);
  bool in_hat = slope::omegahat_contains(s);
  if (as_json) {
    json j = report("omega contains", {{"b", b}, {"t", t}, {"eps", eps}}, start);
    j["omega"] = in_omega;
    j["omegahat"] = in_hat;
    out << j.dump(2) << "\n";
  } else {
    out << "Ω: " << yes(in_omega) << ", Ω̂: " << yes(in_hat) << "\n";
  }
  return ok;
}

int cmd_omega_plot(int grid, double eps, const std::string& path, std::ostream& out) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << omega_svg(grid, eps);
  if (!f) throw std::runtime_error("write failed: " + path);
  out << "wrote " << path << "\n";
  return ok;
}

// ---- band ------------------------------------------------------------------

struct Checks {
  json list = json::array();
  bool all = true;
  void add(const std::string& name, bool passed, double value) {
    list.push_back({{"name", name}, {"passed", passed}, {"value", value}});
    all = all && passed;
  }
};

json lemma_json(const band::TrapezoidLemma& l) {
  return {{"L", l.L},
          {"R", l.R},
          {"value", l.value},
          {"sum_defect", l.sum_defect},
          {"diff_defect", l.diff_defect},
          {"chain", l.chain},
          {"chain_holds", l.chain_holds}};
}

int cmd_band(const std::string& path, double tol, bool as_json, int digits, std::ostream& out) {
  auto start = Clock::now();
  band::BandFile file = band::read_band_file(path);
  band::ImmersedBand b = band::load_band(file, tol);
  const band::FlatBand& flat = b.flat();
  Checks checks;
  json j = report("band", {{"file", path}, {"tol", tol}}, start);
  j["lambda"] = flat.lambda();
  j["triangles"] = flat.size();
  j["signs"] = flat.signs();
  j["seam_kink"] = flat.seam_kink();
  j["residuals"] = {{"isometry", b.isometry_residual()},
                    {"shared_edge", b.shared_edge_residual()},
                    {"closure", b.closure_residual()}};
  checks.add("isometry", b.isometry_residual() <= band::kTolIso, b.isometry_residual());
  checks.add("shared edges", b.shared_edge_residual() <= band::kTolIso, b.shared_edge_residual());
  checks.add("closure", b.closure_residual() <= tol, b.closure_residual());

  band::RidgeCurve ridge = band::ridge_curve(b);
  double ridge_defect = std::abs(ridge.length() - 2 * flat.lambda());
  j["ridge"] = {{"length", ridge.length()},
                {"tangency_defect", ridge.tangency_defect()},
                {"min_vertex_norm", ridge.min_vertex_norm()}};
  checks.add("ridge length = 2 lambda", ridge_defect <= 1e-9, ridge_defect);
  checks.add("ridge tangent to unit sphere", ridge.tangency_defect() <= 1e-6, ridge.tangency_defect());

  auto patterns = band::find_t_patterns(b);
  j["pattern_count"] = patterns.size();
  bool sim = false;
  if (!patterns.empty()) {
    const band::TPattern& tp = patterns.front();
    band::Normalization n = band::normalize(b, tp);
    sim = flat.lambda() < std::sqrt(3.0);
    j["pattern"] = {{"s_b", tp.s_b}, {"s_t", tp.s_t}, {"dot", tp.dot}, {"coplanar", tp.coplanar}};
    j["normalization"] = {{"B", n.B},   {"T", n.T},   {"L1", n.L1}, {"R1", n.R1}, {"L2", n.L2},
                          {"R2", n.R2}, {"S1", n.S1}, {"S2", n.S2}, {"x", n.x},   {"y", n.y},
                          {"b", n.b},   {"t", n.t},   {"swapped", n.swapped}};
    bool hat = slope::omegahat_contains(slope::SlopePair{n.b, n.t}, 1e-9);
    j["in_omegahat"] = hat;
    checks.add("(b, t) in closed trapezoid", hat, 0);
    checks.add("lambda = (S1 + S2)/2", std::abs(n.lambda_defect()) <= 1e-9, std::abs(n.lambda_defect()));

    band::AspectProperties p = band::aspect_properties(n);
    j["properties"] = {{"S_margin", p.S_margin},
                       {"statement1", p.statement1},
                       {"statement2", p.statement2},
                       {"statement3", p.statement3},
                       {"hull_degenerate", p.hull.degenerate},
                       {"hull_min_angle", p.hull.min_angle},
                       {"applies", sim}};
    if (sim) {
      checks.add("statement 1: S_j >= sqrt3 - b(1-2b)/3", p.statement1, std::min(p.S_margin[0], p.S_margin[1]));
      checks.add("statement 2: x < 1/18, |y| < 1/30", p.statement2, n.x);
      checks.add("statement 3: hull angles > pi/4", p.statement3, p.hull.min_angle);
    }

    auto lem = band::lemma42_check(b, n);
    j["lemma"] = {lemma_json(lem[0]), lemma_json(lem[1])};
    for (int k = 0; k < 2; ++k) {
      double defect = std::max(lem[k].sum_defect, lem[k].diff_defect);
      checks.add("trapezoid " + std::to_string(k + 1) + " ridge sums", defect <= 1e-9, defect);
      checks.add("trapezoid " + std::to_string(k + 1) + " chain", lem[k].chain_holds, lem[k].value);
    }

    json backtrack = json::array();
    for (int k = 1; k <= 2; ++k) {
      try {
        double bt = band::max_backtrack(band::pitch_profile(b, n, k));
        backtrack.push_back(bt);
        checks.add("trapezoid " + std::to_string(k) + " pitch backtrack < pi/30", bt < M_PI / 30, bt);
      } catch (const ProjectionDegenerate& e) {
        backtrack.push_back(nullptr);
        checks.add("trapezoid " + std::to_string(k) + " pitch projection", false, 0);
      }
    }
    j["max_backtrack"] = backtrack;
    try {
      j["zero_slope_bends"] = band::zero_slope_bends(b, n).size();
    } catch (const NotSim&) {
      j["zero_slope_bends"] = nullptr;
    }
  }
  j["sim"] = sim;
  j["checks"] = checks.list;
  j["passed"] = checks.all;
  j["wall_time_s"] = std::chrono::duration<double>(Clock::now() - start).count();

  if (as_json) {
    out << j.dump(2) << "\n";
    return checks.all ? ok : failed;
  }
  out << "lambda = " << fmt(flat.lambda(), digits) << "  (" << flat.size() << " triangles)\n";
  out << "residuals: isometry " << fmt(b.isometry_residual(), 3) << ", shared edges "
      << fmt(b.shared_edge_residual(), 3) << ", closure " << fmt(b.closure_residual(), 3) << "\n";
  out << "ridge length = " << fmt(ridge.length(), digits) << ", tangency defect "
      << fmt(ridge.tangency_defect(), 3) << "\n";
  out << "T-patterns: " << patterns.size() << "\n";
  if (!patterns.empty()) {
    const auto& n = j["normalization"];
    out << "(b, t) = (" << fmt(n["b"].get<double>(), digits) << ", " << fmt(n["t"].get<double>(), digits) << ")\n";
    out << "(x, y) = (" << fmt(n["x"].get<double>(), digits) << ", " << fmt(n["y"].get<double>(), digits) << ")\n";
    out << "B = " << fmt(n["B"].get<double>(), digits) << ", T = " << fmt(n["T"].get<double>(), digits)
        << ", S1 = " << fmt(n["S1"].get<double>(), digits) << ", S2 = " << fmt(n["S2"].get<double>(), digits)
        << "\n";
    out << "lemma values: " << fmt(j["lemma"][0]["value"].get<double>(), digits) << ", "
        << fmt(j["lemma"][1]["value"].get<double>(), digits) << "\n";
    out << "max pitch backtrack:";
    for (const auto& v : j["max_backtrack"]) out << " " << (v.is_null() ? "n/a" : fmt(v.get<double>(), digits));
    out << "\n";
  }
  for (const auto& c : checks.list) {
    out << (c["passed"].get<bool>() ? "  ok   " : "  FAIL ") << c["name"].get<std::string>() << "\n";
  }
  return checks.all ? ok : failed;
}

// ---- example ---------------------------------------------------------------

int cmd_example(const std::string& a_s, const std::string& b_s, const std::string& c_s, int digits,
                const std::string& path, bool as_json, std::ostream& out) {
  auto start = Clock::now();
  algebra::Rational a = parse_rational(a_s), b = parse_rational(b_s), c = parse_rational(c_s);
  example::SolveResult s = example::solve_de(a, b, c);
  example::FoldParams p{hp::from_rational(a), hp::from_rational(b), hp::from_rational(c), s.d, s.e};
  example::Sim sim = example::build_sim(p);
  const auto& r = sim.report;
  if (!path.empty()) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << example::explicit_band_json(p, 32);
  }
  const auto& n = r.normalization;
  bool lemma_ok = r.lemma[0].value < 0 && r.lemma[1].value < 0;
  bool passed = r.lambda_minus_sqrt3 < 0 && r.in_omegahat && r.properties.statement1 && r.properties.statement2 &&
                r.properties.statement3 && r.max_backtrack < M_PI / 30 && r.zero_slope_count == 2 && lemma_ok;
  if (as_json) {
    json j = report("example", {{"a", a.get_str()}, {"b", b.get_str()}, {"c", c.get_str()}, {"digits", digits}},
                    start);
    j["d"] = fmt(s.d, digits);
    j["e"] = fmt(s.e, digits);
    j["d_interval"] = {s.d_interval.lo, s.d_interval.hi};
    j["e_interval"] = {s.e_interval.lo, s.e_interval.hi};
    j["residual"] = fmt(s.residual, 6);
    j["iterations"] = s.iterations;
    j["jacobian_condition"] = s.condition;
    j["lambda_minus_sqrt3"] = fmt(r.lambda_minus_sqrt3, digits);
    j["midpoint_offset"] = {fmt(r.midpoint_offset[0], digits), fmt(r.midpoint_offset[1], digits)};
    j["perpendicularity"] = fmt(r.perpendicularity, 6);
    j["closure_residual"] = r.closure_residual;
    j["pattern_count"] = r.pattern_count;
    j["normalization"] = {{"B", n.B}, {"T", n.T}, {"x", n.x}, {"y", n.y}, {"b", n.b}, {"t", n.t},
                          {"S1", n.S1}, {"S2", n.S2}};
    j["in_omegahat"] = r.in_omegahat;
    j["properties"] = {{"statement1", r.properties.statement1},
                       {"statement2", r.properties.statement2},
                       {"statement3", r.properties.statement3},
                       {"hull_min_angle", r.properties.hull.min_angle}};
    j["lemma"] = {lemma_json(r.lemma[0]), lemma_json(r.lemma[1])};
    j["max_backtrack"] = r.max_backtrack;
    j["zero_slope_bends"] = r.zero_slope_count;
    if (!path.empty()) j["band_file"] = path;
    j["passed"] = passed;
    j["wall_time_s"] = std::chrono::duration<double>(Clock::now() - start).count();
    out << j.dump(2) << "\n";
  } else {
    out << "d = " << truncated(s.d, digits) << "\n";
    out << "e = " << truncated(s.e, digits) << "\n";
    out << "lambda - sqrt3 = " << fmt(r.lambda_minus_sqrt3, digits) << "\n";
    out << "midpoint offset = (" << fmt(r.midpoint_offset[0], digits) << ", " << fmt(r.midpoint_offset[1], digits)
        << ")\n";
    out << "(b, t) = (" << fmt(n.b, digits) << ", " << fmt(n.t, digits) << "), (x, y) = (" << fmt(n.x, digits)
        << ", " << fmt(n.y, digits) << ")\n";
    out << "max pitch backtrack = " << fmt(r.max_backtrack, digits) << "\n";
    if (!path.empty()) out << "wrote " << path << "\n";
  }
  return passed ? ok : failed;
}

}  // namespace

json to_json(const cert::Verdict& v) {
  json steps = json::array();
  for (const auto& s : v.steps) {
    json w = json::array();
    for (const auto& [k, val] : s.witness) w.push_back({k, val});
    steps.push_back({{"description", s.description},
                     {"claim", s.claim},
                     {"method", cert::to_string(s.method)},
                     {"passed", s.passed},
                     {"witness", w}});
  }
  return {{"name", v.name}, {"passed", v.passed}, {"steps", steps}, {"deviations", v.deviations}};
}

cert::Verdict verdict_from_json(const json& j) {
  cert::Verdict v;
  v.name = j.at("name").get<std::string>();
  v.passed = j.at("passed").get<bool>();
  v.deviations = j.at("deviations").get<std::vector<std::string>>();
  for (const auto& s : j.at("steps")) {
    cert::Step step;
    step.description = s.at("description").get<std::string>();
    step.claim = s.at("claim").get<std::string>();
    step.method = cert::method_from_string(s.at("method").get<std::string>());
    step.passed = s.at("passed").get<bool>();
    for (const auto& w : s.at("witness")) step.witness.emplace_back(w.at(0).get<std::string>(), w.at(1).get<std::string>());
    v.steps.push_back(std::move(step));
  }
  return v;
}

std::string omega_svg(int grid, double eps) {
  const double b0 = -0.05, b1 = 0.55, t0 = -0.65, t1 = -0.1;
  const double W = 720, H = W * (t1 - t0) / (b1 - b0), pad = 40;
  auto X = [&](double b) { return pad + (b - b0) / (b1 - b0) * W; };
  auto Y = [&](double t) { return pad + (t1 - t) / (t1 - t0) * H; };
  std::ostringstream s;
  s << std::setprecision(10);
  s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << W + 2 * pad << "\" height=\""
    << H + 2 * pad << "\">\n"
    << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  // Axes through b = 0 and along the bottom.
  s << "<line class=\"axis\" x1=\"" << X(0) << "\" y1=\"" << Y(t0) << "\" x2=\"" << X(0) << "\" y2=\"" << Y(t1)
    << "\" stroke=\"#888\" stroke-width=\"1\"/>\n";
  s << "<text x=\"" << X(b1) - 10 << "\" y=\"" << Y(t0) - 6 << "\" font-size=\"14\">b</text>\n";
  s << "<text x=\"" << X(0) + 6 << "\" y=\"" << Y(t1) + 14 << "\" font-size=\"14\">t</text>\n";

  auto boundary = slope::sample_omega_boundary(grid, eps);
  s << "<polygon class=\"omega\" data-eps=\"" << eps << "\" fill=\"#cfe3f7\" stroke=\"#1f5fa8\" stroke-width=\"1.5\" points=\"";
  for (const auto& p : boundary) s << X(p.b) << "," << Y(p.t) << " ";
  s << "\"/>\n";

  const double r3 = std::sqrt(3.0);
  const double a = slope::a_value().convert_to<double>();
  struct L { const char* name; double bx, tx, by, ty; };
  const L lines[] = {
      {"b = 0", 0, t0, 0, t1},
      {"b = a", a, t0, a, t1},
      {"t = (2/3)b - 1/sqrt3", b0, 2 * b0 / 3 - 1 / r3, b1, 2 * b1 / 3 - 1 / r3},
      {"t = (2/3)b - 1/2", b0, 2 * b0 / 3 - 0.5, b1, 2 * b1 / 3 - 0.5},
      {"t = (4/3)b - 1/sqrt3", b0, 4 * b0 / 3 - 1 / r3, b1, 4 * b1 / 3 - 1 / r3},
  };
  for (const auto& l : lines) {
    s << "<line class=\"omegahat\" data-label=\"" << l.name << "\" x1=\"" << X(l.bx) << "\" y1=\"" << Y(l.tx)
      << "\" x2=\"" << X(l.by) << "\" y2=\"" << Y(l.ty) << "\" stroke=\"#c0392b\" stroke-width=\"1\" "
      << "stroke-dasharray=\"6 4\"/>\n";
  }
  for (auto [vb, vt] : {std::pair{0.0, -1 / r3}, std::pair{a, -a / 2}}) {
    s << "<circle class=\"vertex\" data-b=\"" << vb << "\" data-t=\"" << vt << "\" cx=\"" << X(vb) << "\" cy=\""
      << Y(vt) << "\" r=\"4\" fill=\"black\"/>\n";
  }
  s << "</svg>\n";
  return s.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Moebius band aspect-ratio certificates and band checks", "moebius"};
  app.require_subcommand(1);
  app.set_version_flag("--version", MOEBIUS_VERSION);

  std::string cert_name;
  bool json_out = false;
  auto* verify = app.add_subcommand("verify", "Run certificates");
  verify->add_option("name", cert_name, "Certificate name or 'all'")->required();
  verify->add_flag("--json", json_out, "JSON report");

  auto* omega = app.add_subcommand("omega", "Slope region queries and plots");
  omega->require_subcommand(1);
  double ob = 0, ot = 0, eps = 0;
  int grid = 128;
  std::string plot_out;
  auto* contains = omega->add_subcommand("contains", "Membership in the region and the trapezoid");
  contains->add_option("--b", ob, "Slope b")->required();
  contains->add_option("--t", ot, "Slope t")->required();
  contains->add_option("--eps", eps, "Enlargement")->check(CLI::NonNegativeNumber);
  contains->add_flag("--json", json_out, "JSON report");
  auto* plot = omega->add_subcommand("plot", "SVG of the region, trapezoid lines and vertices");
  plot->add_option("--grid", grid, "Boundary samples")->check(CLI::Range(8, 1 << 16));
  plot->add_option("--eps", eps, "Enlargement")->check(CLI::NonNegativeNumber);
  plot->add_option("--out", plot_out, "Output SVG path")->required();

  auto* bandc = app.add_subcommand("band", "Check a band file");
  std::string band_path;
  double tol = band::kTolClose;
  int digits = 12;
  bandc->add_option("file", band_path, "Band file")->required();
  bandc->add_option("--tol", tol, "Closure tolerance")->check(CLI::PositiveNumber);
  bandc->add_option("--digits", digits, "Significant digits")->check(CLI::Range(1, 60));
  bandc->add_flag("--json", json_out, "JSON report");

  auto* ex = app.add_subcommand("example", "Solve and fold the explicit example");
  std::string ea = example::default_a().get_str(), eb = example::default_b().get_str(),
              ec = example::default_c().get_str(), ex_out;
  ex->add_option("--a", ea, "Parameter a (rational or decimal)");
  ex->add_option("--b", eb, "Parameter b");
  ex->add_option("--c", ec, "Parameter c");
  ex->add_option("--digits", digits, "Digits in the printed values")->check(CLI::Range(1, 60));
  ex->add_option("--out", ex_out, "Write the explicit band file here");
  ex->add_flag("--json", json_out, "JSON report");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForVersion&) {
    out << MOEBIUS_VERSION << "\n";
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  }

  try {
    if (*verify) return cmd_verify(cert_name, json_out, out);
    if (*contains) return cmd_omega_contains(ob, ot, eps, json_out, out);
    if (*plot) return cmd_omega_plot(grid, eps, plot_out, out);
    if (*bandc) return cmd_band(band_path, tol, json_out, digits, out);
    if (*ex) return cmd_example(ea, eb, ec, digits, ex_out, json_out, out);
  } catch (const ClosureFailure& e) {
    err << "error: " << e.what() << "\n";
    return failed;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  }
  return usage;
}

}  // namespace moebius::cli
