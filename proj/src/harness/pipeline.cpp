#include "qf/harness/pipeline.hpp"

#include <chrono>
#include <cstdlib>

#include "json.hpp"
#include "qf/homology/quandle_homology.hpp"

namespace qf::harness {

namespace {

using Clock = std::chrono::steady_clock;

class Stopwatch {
 public:
  explicit Stopwatch(PipelineResult& r) : r_(r), last_(Clock::now()) {}
  void lap(const char* stage) {
    const auto now = Clock::now();
    r_.timings_ms.emplace_back(stage, std::chrono::duration<double, std::milli>(now - last_).count());
    last_ = now;
  }

 private:
  PipelineResult& r_;
  Clock::time_point last_;
};

nlohmann::ordered_json group_json(const AbelianGroup& g) { return nlohmann::ordered_json::parse(qf::to_json(g)); }

void add_checks(PipelineResult& r) {
  if (!r.g_n_order || !r.pi1_order || !r.longitude_order) return;
  const auto n = static_cast<std::size_t>(r.n);
  r.checks.emplace_back("g_n_is_n_times_pi1", *r.g_n_order == n * *r.pi1_order);
  r.checks.emplace_back("pi1_is_qn_times_l_order", *r.pi1_order == r.qn_size * *r.longitude_order);
  if (r.h2) r.checks.emplace_back("h2_torsion_is_l_order", r.h2->torsion_order() == Integer(*r.longitude_order));
}

}  // namespace

bool PipelineResult::consistent() const {
  for (const auto& [name, ok] : checks) {
    if (!ok) return false;
  }
  return true;
}

PipelineResult run_pipeline(const KnotInput& knot, const PipelineOptions& options) {
  if (options.n < 1) throw InputError("n must be at least 1");
  PipelineResult r;
  r.knot = knot.id;
  r.n = options.n;
  r.mu1 = knot.mu1;
  r.mu2 = knot.mu2;
  r.artifacts = std::make_shared<PipelineArtifacts>();

  if (knot.unknot) {
    // Q_n(unknot) is a point; G_n is Z/n and the branched cover is S^3.
    r.qn_size = 1;
    r.type = 1;
    r.connected = true;
    r.artifacts->quandle = FiniteQuandle::trivial(1);
    if (options.full) {
      r.g_n_order = static_cast<std::size_t>(options.n);
      r.pi1_order = 1;
      r.longitude_order = 1;
      r.h1 = AbelianGroup::free(1);
      r.h2 = AbelianGroup{};
    }
    add_checks(r);
    return r;
  }

  std::optional<CosetCache> cache;
  if (options.cache_dir) cache.emplace(*options.cache_dir);
  CosetCache* c = cache ? &*cache : nullptr;
  Stopwatch watch(r);

  auto& a = *r.artifacts;
  a.diagram = analyze(knot.pd);
  a.peripheral = wirtinger_with_peripherals(*a.diagram);
  watch.lap("diagram");
  a.cosets = peripheral_cosets(*a.peripheral, options.n, options.max_cosets, c);
  watch.lap("cosets");
  a.quandle = quandle_from_cosets(*a.cosets, a.peripheral->meridian_word());
  r.qn_size = a.quandle->size();
  r.type = quandle_type(*a.quandle);
  r.connected = is_connected(*a.quandle);
  watch.lap("quandle");

  if (options.full) {
    if (options.n == 1) {
      const auto g = enumerate_cosets(g_n_presentation(*a.peripheral, 1), {}, options.max_cosets, c);
      r.g_n_order = g.cosets;
      r.pi1_order = g.cosets;
      r.longitude_order = 1;
    } else {
      a.cover = branched_cover_group(*a.peripheral, options.n, options.max_cosets, c);
      r.g_n_order = a.cover->g_n_order;
      r.pi1_order = a.cover->pi1->order();
      r.longitude_order = element_order(*a.cover->pi1, a.cover->longitude);
    }
    watch.lap("cover");
    const auto slice = boundaries(*a.quandle);
    r.h1 = h1(slice);
    r.h2 = h2(slice);
    watch.lap("homology");
  }
  if (c) {
    r.cache_hits = c->hits();
    r.cache_misses = c->misses();
  }
  add_checks(r);
  return r;
}

namespace {

nlohmann::ordered_json as_json(const PipelineResult& r, const std::string& command, bool stats) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["command"] = command;
  j["knot"] = r.knot;
  j["n"] = r.n;
  j["qn_size"] = r.qn_size;
  j["type"] = r.type;
  j["connected"] = r.connected;
  if (r.g_n_order) j["g_n_order"] = *r.g_n_order;
  if (r.pi1_order) j["pi1_order"] = *r.pi1_order;
  if (r.longitude_order) j["longitude_order"] = *r.longitude_order;
  if (r.h1) j["h1"] = group_json(*r.h1);
  if (r.h2) j["h2"] = group_json(*r.h2);
  if (r.mu1) j["mu1"] = *r.mu1;
  if (r.mu2) j["mu2"] = *r.mu2;
  if (!r.checks.empty()) {
    nlohmann::ordered_json checks;
    for (const auto& [name, ok] : r.checks) checks[name] = ok;
    j["checks"] = checks;
    j["consistent"] = r.consistent();
  }
  if (stats) {
    nlohmann::ordered_json t;
    for (const auto& [stage, ms] : r.timings_ms) t[stage] = ms;
    j["timings_ms"] = t;
    j["cache"] = {{"hits", r.cache_hits}, {"misses", r.cache_misses}};
  }
  return j;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string csv_field(const nlohmann::ordered_json& v) {
  if (v.is_string()) return csv_quote(v.get<std::string>());
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  return v.dump();
}

}  // namespace

std::string to_json(const PipelineResult& r, const std::string& command, bool stats) {
  return as_json(r, command, stats).dump(2) + "\n";
}

std::string to_csv(const PipelineResult& r, bool stats) {
  // Flattened JSON: nested objects become dotted keys, groups become text.
  const auto j = as_json(r, "", stats);
  std::string header, values;
  auto emit = [&](const std::string& key, const std::string& value) {
    if (!header.empty()) {
      header += ',';
      values += ',';
    }
    header += key;
    values += value;
  };
  for (const auto& [key, v] : j.items()) {
    if (key == "command") continue;
    if ((key == "h1" || key == "h2") && v.is_object()) {
      emit(key, key == "h1" ? r.h1->to_string() : r.h2->to_string());
    } else if (v.is_object()) {
      for (const auto& [sub, sv] : v.items()) emit(key + "." + sub, csv_field(sv));
    } else {
      emit(key, csv_field(v));
    }
  }
  return header + "\n" + values + "\n";
}

std::filesystem::path resolve_cache_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return *flag;
  if (const char* env = std::getenv("QF_CACHE_DIR"); env && *env) return env;
  return ".qf-cache";
}

}  // namespace qf::harness
