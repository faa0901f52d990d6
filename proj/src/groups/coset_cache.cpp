#include "qf/groups/coset_cache.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <thread>

#include "json.hpp"

namespace qf {

namespace {

constexpr const char* kFormat = "v1";

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::vector<Word> reduced(const std::vector<Word>& words) {
  std::vector<Word> out;
  for (const auto& w : words) {
    Word r = free_reduce(w);
    if (!r.empty()) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

CosetCache::CosetCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::string CosetCache::key(const GroupPresentation& g, const std::vector<Word>& subgroup, std::size_t max_cosets) {
  std::string k = std::string(kFormat) + "|" + g.canonical() + "|sub=";
  for (const auto& w : reduced(subgroup)) {
    for (int l : w) k += std::to_string(l) + ",";
    k += ";";
  }
  k += "|cap=" + std::to_string(max_cosets);
  return k;
}

std::filesystem::path CosetCache::file_for(const std::string& key) const {
  char name[32];
  std::snprintf(name, sizeof name, "%016llx.json", static_cast<unsigned long long>(fnv1a(key)));
  return dir_ / name;
}

std::optional<CosetTable> CosetCache::load(const GroupPresentation& g, const std::vector<Word>& subgroup,
                                           std::size_t max_cosets) {
  const std::string k = key(g, subgroup, max_cosets);
  std::ifstream in(file_for(k));
  if (!in) {
    ++misses_;
    return std::nullopt;
  }
  try {
    const auto j = nlohmann::json::parse(in);
    if (j.at("key").get<std::string>() != k) {
      ++misses_;
      return std::nullopt;
    }
    CosetTable t;
    t.generators = j.at("generators").get<std::size_t>();
    t.cosets = j.at("cosets").get<std::size_t>();
    t.action = j.at("action").get<kernels::ActionTable>();
    t.subgroup = reduced(subgroup);
    rebuild_spanning_tree(t);
    if (j.at("representatives").get<std::vector<Word>>() != t.representatives) throw IncompleteTable("representatives differ");
    verify_coset_table(g, t);
    ++hits_;
    return t;
  } catch (const std::exception&) {
    ++misses_;
    return std::nullopt;
  }
}

void CosetCache::store(const GroupPresentation& g, const CosetTable& t, std::size_t max_cosets) {
  const std::string k = key(g, t.subgroup, max_cosets);
  nlohmann::json j;
  j["key"] = k;
  j["generators"] = t.generators;
  j["cosets"] = t.cosets;
  j["action"] = t.action;
  j["representatives"] = t.representatives;
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  const auto path = file_for(k);
  // Write then rename so concurrent readers never see a partial file.
  const auto tmp = path.string() + "." + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id())) + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << j.dump();
  }
  std::filesystem::rename(tmp, path, ec);
}

CosetTable enumerate_cosets(const GroupPresentation& g, const std::vector<Word>& subgroup, std::size_t max_cosets,
                            CosetCache* cache) {
  if (cache) {
    if (auto t = cache->load(g, subgroup, max_cosets)) return *std::move(t);
  }
  CosetTable t = todd_coxeter(g, subgroup, max_cosets);
  if (cache) cache->store(g, t, max_cosets);
  return t;
}

}  // namespace qf
