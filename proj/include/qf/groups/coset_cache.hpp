#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "qf/groups/coset_table.hpp"

namespace qf {

/// On-disk store of completed coset tables, one JSON file per key.
///
/// The key covers the presentation, the subgroup words, the coset cap and a
/// format version. Loaded tables are re-verified, so a stale or corrupt file
/// is treated as a miss.
class CosetCache {
 public:
  explicit CosetCache(std::filesystem::path dir);

  std::optional<CosetTable> load(const GroupPresentation& g, const std::vector<Word>& subgroup,
                                 std::size_t max_cosets);
  void store(const GroupPresentation& g, const CosetTable& t, std::size_t max_cosets);

  const std::filesystem::path& dir() const { return dir_; }
  std::size_t hits() const { return hits_; }
  std::size_t misses() const { return misses_; }

  static std::string key(const GroupPresentation& g, const std::vector<Word>& subgroup, std::size_t max_cosets);

 private:
  std::filesystem::path file_for(const std::string& key) const;

  std::filesystem::path dir_;
  std::size_t hits_ = 0;
  std::size_t misses_ = 0;
};

/// todd_coxeter through an optional cache.
CosetTable enumerate_cosets(const GroupPresentation& g, const std::vector<Word>& subgroup,
                            std::size_t max_cosets, CosetCache* cache);

}  // namespace qf
