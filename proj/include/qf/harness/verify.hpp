#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "qf/harness/knot_spec.hpp"
#include "qf/core/extension.hpp"
#include "qf/harness/pipeline.hpp"

namespace qf::harness {

/// One row of the classification table and what it must reproduce.
struct TableRow {
  std::string name;
  std::string knot;
  long n = 2;
  /// Expected |Q_n|; for Montesinos rows 12 mu1 is taken from the builder.
  std::optional<std::size_t> qn_size;
  std::optional<std::size_t> pi1_order;
  std::size_t longitude_order = 1;
  AbelianGroup h2;
  bool montesinos = false;
  bool schlafli = false;
};

std::vector<TableRow> table_rows();

struct RowCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

enum class RowStatus { pass, fail, skip, overflow };
const char* to_string(RowStatus s);

struct RowOutcome {
  std::string name;
  RowStatus status = RowStatus::fail;
  std::vector<RowCheck> checks;
  std::string detail;
  std::optional<PipelineResult> result;
};

struct VerifyOptions {
  std::size_t max_cosets = kDefaultMaxCosets;
  std::optional<std::filesystem::path> cache_dir;
  unsigned threads = 0;  // 0 picks the hardware concurrency
};

/// Runs one row; never throws for enumeration or input failures.
RowOutcome verify_row(const TableRow& row, const Catalog& catalog, const VerifyOptions& options);
/// All rows, possibly in parallel; the output order is the row order.
std::vector<RowOutcome> verify_tables(const Catalog& catalog, const VerifyOptions& options);

/// 3 if any row overflowed, else 4 if any failed, else 0.
int exit_code(const std::vector<RowOutcome>& rows);

std::string format_text(const std::vector<RowOutcome>& rows);
std::string format_json(const std::vector<RowOutcome>& rows);
std::string format_csv(const std::vector<RowOutcome>& rows);

/// Pieces of the table checks, exposed for tests.
bool model_matches(const PipelineResult& r);
ExtensionReport extension_report(const PipelineResult& r);
/// (v*w)*v = w, (w*v)*w = v, w*^n v = w and v*^n w = v with v, w the first
/// two arcs of the diagram.
bool schlafli_relators_hold(const PipelineResult& r);

}  // namespace qf::harness
