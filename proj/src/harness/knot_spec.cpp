#include "qf/harness/knot_spec.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "qf/diagrams/builders.hpp"

namespace qf::harness {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

long integer(const std::string& s, const std::string& spec) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    throw InputError("bad integer '" + s + "' in knot spec '" + spec + "'");
  }
  if (used != s.size()) throw InputError("bad integer '" + s + "' in knot spec '" + spec + "'");
  return v;
}

std::vector<long> integers(const std::string& body, const std::string& spec, std::size_t count) {
  const auto parts = split(body, ',');
  if (parts.size() != count) {
    throw InputError("knot spec '" + spec + "' needs " + std::to_string(count) + " comma-separated values");
  }
  std::vector<long> out;
  for (const auto& p : parts) out.push_back(integer(p, spec));
  return out;
}

KnotInput from_pd(std::string id, const std::string& text) {
  KnotInput k;
  k.id = std::move(id);
  k.pd = parse_pd(text);
  return k;
}

}  // namespace

const Catalog& builtin_catalog() {
  static const Catalog catalog = {
      {"3_1", "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"},
      {"4_1", "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)"},
      {"5_1", "X(1,6,2,7) X(3,8,4,9) X(5,10,6,1) X(7,2,8,3) X(9,4,10,5)"},
      {"5_2", "X(1,4,2,5) X(3,8,4,9) X(5,10,6,1) X(9,6,10,7) X(7,2,8,3)"},
  };
  return catalog;
}

Catalog load_catalog(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open catalog " + path.string());
  try {
    return nlohmann::json::parse(in).get<Catalog>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError("catalog " + path.string() + ": " + e.what());
  }
}

KnotInput parse_knot_spec(const std::string& spec, const Catalog& catalog) {
  if (spec == "unknot") {
    KnotInput k;
    k.id = "unknot";
    k.unknot = true;
    return k;
  }
  const auto colon = spec.find(':');
  const std::string kind = colon == std::string::npos ? "" : spec.substr(0, colon);
  const std::string body = colon == std::string::npos ? spec : spec.substr(colon + 1);
  if (kind == "catalog" || (kind.empty() && catalog.count(spec))) {
    const auto it = catalog.find(body);
    if (it == catalog.end()) throw InputError("no catalog entry '" + body + "'");
    return from_pd("catalog:" + body, it->second);
  }
  if (kind == "rational") {
    const auto v = integers(body, spec, 2);
    KnotInput k;
    k.id = "rational:" + std::to_string(v[0]) + "," + std::to_string(v[1]);
    k.pd = build_rational(v[0], v[1]);
    return k;
  }
  if (kind == "torus") {
    const auto v = integers(body, spec, 2);
    KnotInput k;
    k.id = "torus:" + std::to_string(v[0]) + "," + std::to_string(v[1]);
    k.pd = build_torus(v[0], v[1]);
    return k;
  }
  if (kind == "montesinos") {
    const auto parts = split(body, ',');
    if (parts.size() != 4) throw InputError("montesinos spec needs b and three fractions");
    const long b = integer(parts[0], spec);
    std::vector<std::pair<long, long>> fractions;
    std::string id = "montesinos:" + std::to_string(b);
    for (std::size_t i = 1; i < 4; ++i) {
      const auto f = split(parts[i], '/');
      if (f.size() != 2) throw InputError("fraction '" + parts[i] + "' is not of the form beta/alpha");
      fractions.emplace_back(integer(f[0], spec), integer(f[1], spec));
      id += "," + std::to_string(fractions.back().first) + "/" + std::to_string(fractions.back().second);
    }
    const auto m = build_montesinos(b, fractions);
    KnotInput k;
    k.id = id;
    k.pd = m.pd;
    k.mu1 = m.mu1;
    k.mu2 = m.mu2;
    return k;
  }
  if (!kind.empty() && !std::filesystem::exists(spec)) throw InputError("unknown knot spec kind '" + kind + "'");
  std::ifstream in(spec);
  if (!in) throw InputError("'" + spec + "' is not a knot spec or a readable PD file");
  std::stringstream text;
  text << in.rdbuf();
  return from_pd(spec, text.str());
}

const char* builder_syntax() {
  return "unknot\n"
         "catalog:NAME or NAME\n"
         "rational:ALPHA,BETA        2-bridge S(alpha,beta), alpha odd\n"
         "torus:2,Q                  T(2,q), q odd\n"
         "montesinos:B,B1/A1,B2/A2,B3/A3\n"
         "PATH                       file holding X(a,b,c,d) tokens\n";
}

}  // namespace qf::harness
