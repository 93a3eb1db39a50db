#include <fstream>
#include <sstream>

#include <json.hpp>

#include "moebius/band.hpp"

namespace moebius::band {

using nlohmann::json;

namespace {

double number(const json& j, const std::string& what) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      throw ParseError(what + ": not a number: " + s);
    }
    if (used != s.size()) throw ParseError(what + ": trailing characters in " + s);
    return v;
  }
  throw ParseError(what + ": expected a decimal string");
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field: ") + key);
  return j.at(key);
}

std::string decimal(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

BandFile parse_band_file(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("band file is not valid JSON: ") + e.what());
  }
  const std::string format = field(j, "format").is_string() ? field(j, "format").get<std::string>() : "";
  if (format != "folded" && format != "explicit") throw ParseError("format must be folded or explicit");
  double lambda = number(field(j, "lambda"), "lambda");
  double base_left = 0, base_right = 0;
  if (j.contains("base")) {
    const json& b = j.at("base");
    if (!b.is_array() || b.size() != 2) throw ParseError("base must be [left, right]");
    base_left = number(b[0], "base");
    base_right = number(b[1], "base");
  }
  std::optional<std::pair<double, double>> top;
  if (j.contains("top")) {
    const json& t = j.at("top");
    if (!t.is_array() || t.size() != 2) throw ParseError("top must be [left, right]");
    top = std::pair{number(t[0], "top"), number(t[1], "top")};
  }
  const json& ap = field(j, "apexes");
  if (!ap.is_array()) throw ParseError("apexes must be an array");
  std::vector<Apex> apexes;
  for (const auto& a : ap) {
    const json& side = field(a, "side");
    if (!side.is_string()) throw ParseError("apex side must be a string");
    apexes.push_back({side_from_string(side.get<std::string>()), number(field(a, "height"), "height")});
  }
  BandFile f{FlatBand(lambda, std::move(apexes), base_left, base_right, top), std::nullopt, std::nullopt};
  if (format == "folded") {
    const json& c = field(j, "creases");
    if (!c.is_array()) throw ParseError("creases must be an array");
    std::vector<double> creases;
    for (const auto& x : c) creases.push_back(number(x, "crease"));
    f.creases = std::move(creases);
  } else {
    const json& fs = field(j, "facets");
    if (!fs.is_array()) throw ParseError("facets must be an array");
    std::vector<Facet> facets;
    for (const auto& tri : fs) {
      if (!tri.is_array() || tri.size() != 3) throw ParseError("each facet needs three vertices");
      Facet facet;
      for (int k = 0; k < 3; ++k) {
        if (!tri[k].is_array() || tri[k].size() != 3) throw ParseError("each vertex needs three coordinates");
        for (int c = 0; c < 3; ++c) facet.vertices[k][c] = number(tri[k][c], "coordinate");
      }
      facets.push_back(facet);
    }
    f.facets = std::move(facets);
  }
  return f;
}

BandFile read_band_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open band file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_band_file(ss.str());
}

ImmersedBand load_band(const BandFile& f, double tol) {
  if (f.creases) return build_immersed(f.flat, *f.creases, tol);
  return import_explicit(f.flat, *f.facets, tol);
}

std::string write_band_file_folded(const FlatBand& flat, const std::vector<double>& creases) {
  json j;
  j["format"] = "folded";
  j["lambda"] = decimal(flat.lambda());
  j["base"] = {decimal(flat.base_left()), decimal(flat.base_right())};
  if (!flat.default_top()) j["top"] = {decimal(flat.top_left()), decimal(flat.top_right())};
  j["apexes"] = json::array();
  for (const auto& a : flat.apexes()) j["apexes"].push_back({{"side", to_string(a.side)}, {"height", decimal(a.height)}});
  j["creases"] = json::array();
  for (double c : creases) j["creases"].push_back(decimal(c));
  return j.dump(2) + "\n";
}

}  // namespace moebius::band
