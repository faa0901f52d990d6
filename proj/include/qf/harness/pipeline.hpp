#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qf/diagrams/diagram.hpp"
#include "qf/groups/knot_groups.hpp"
#include "qf/harness/knot_spec.hpp"
#include "qf/linalg/abelian_group.hpp"

namespace qf::harness {

struct PipelineOptions {
  long n = 2;
  std::size_t max_cosets = kDefaultMaxCosets;
  /// No caching when empty.
  std::optional<std::filesystem::path> cache_dir;
  /// Enumerate G_n and pi1 and compute H1, H2; otherwise stop at Q_n.
  bool full = true;
};

/// Objects behind a result, kept for the table checks.
struct PipelineArtifacts {
  std::optional<Diagram> diagram;
  std::optional<PeripheralPresentation> peripheral;
  std::optional<CosetTable> cosets;
  std::optional<FiniteQuandle> quandle;
  std::optional<BranchedCover> cover;
};

struct PipelineResult {
  std::string knot;
  long n = 0;
  std::optional<std::size_t> g_n_order;
  std::optional<std::size_t> pi1_order;
  std::size_t qn_size = 0;
  std::optional<std::size_t> longitude_order;
  std::uint64_t type = 0;
  bool connected = false;
  std::optional<AbelianGroup> h1, h2;
  std::optional<long> mu1, mu2;
  /// Arithmetic consistency checks, in a fixed order.
  std::vector<std::pair<std::string, bool>> checks;
  std::vector<std::pair<std::string, double>> timings_ms;
  std::size_t cache_hits = 0;
  std::size_t cache_misses = 0;
  std::shared_ptr<PipelineArtifacts> artifacts;

  bool consistent() const;
};

/// Throws Overflow when an enumeration exceeds the cap.
PipelineResult run_pipeline(const KnotInput& knot, const PipelineOptions& options);

/// Deterministic JSON; timings and cache counters only with `stats`.
std::string to_json(const PipelineResult& r, const std::string& command, bool stats);
/// Header line and one value line with the same fields as the JSON.
std::string to_csv(const PipelineResult& r, bool stats);

/// Flag, then QF_CACHE_DIR, then .qf-cache/.
std::filesystem::path resolve_cache_dir(const std::optional<std::string>& flag);

}  // namespace qf::harness
