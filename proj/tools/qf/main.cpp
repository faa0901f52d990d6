#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "qf/diagrams/builders.hpp"
#include "qf/diagrams/diagram.hpp"
#include "qf/harness/knot_spec.hpp"
#include "qf/harness/pipeline.hpp"
#include "qf/harness/verify.hpp"

namespace {

namespace h = qf::harness;

constexpr int kInputError = 2;
constexpr int kOverflow = 3;
constexpr int kMismatch = 4;

struct Flags {
  std::string knot;
  long n = 2;
  std::size_t max_cosets = qf::kDefaultMaxCosets;
  std::string format;
  std::optional<std::string> cache_dir;
  std::optional<std::string> catalog;
  bool stats = false;
  unsigned threads = 0;
};

h::Catalog catalog_for(const Flags& f) {
  return f.catalog ? h::load_catalog(*f.catalog) : h::builtin_catalog();
}

int run_knot(const Flags& f, bool full) {
  const std::string command = full ? "homology" : "enumerate";
  const auto knot = h::parse_knot_spec(f.knot, catalog_for(f));
  h::PipelineOptions o;
  o.n = f.n;
  o.max_cosets = f.max_cosets;
  o.cache_dir = h::resolve_cache_dir(f.cache_dir);
  o.full = full;
  const auto r = h::run_pipeline(knot, o);
  std::cout << (f.format == "csv" ? h::to_csv(r, f.stats) : h::to_json(r, command, f.stats));
  if (!r.consistent()) {
    std::cerr << "qf: arithmetic consistency check failed\n";
    return kMismatch;
  }
  return 0;
}

int run_verify(const Flags& f) {
  h::VerifyOptions o;
  o.max_cosets = f.max_cosets;
  o.cache_dir = h::resolve_cache_dir(f.cache_dir);
  o.threads = f.threads;
  const auto rows = h::verify_tables(catalog_for(f), o);
  if (f.format == "json") {
    std::cout << h::format_json(rows);
  } else if (f.format == "csv") {
    std::cout << h::format_csv(rows);
  } else {
    std::cout << h::format_text(rows);
  }
  return h::exit_code(rows);
}

int run_catalog(const Flags& f) {
  const auto catalog = catalog_for(f);
  if (f.format == "json") {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["command"] = "catalog";
    j["knots"] = nlohmann::ordered_json::object();
    for (const auto& [name, pd] : catalog) j["knots"][name] = pd;
    j["builders"] = h::builder_syntax();
    std::cout << j.dump(2) << "\n";
  } else if (f.format == "csv") {
    std::cout << "name,pd\n";
    for (const auto& [name, pd] : catalog) std::cout << name << ",\"" << pd << "\"\n";
  } else {
    for (const auto& [name, pd] : catalog) std::cout << name << "  " << pd << "\n";
    std::cout << "\n" << h::builder_syntax();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Knot n-quandles via coset enumeration"};
  app.require_subcommand(1);
  Flags f;
  app.add_option("--catalog", f.catalog, "JSON catalog replacing the built-in one");
  app.add_option("--cache-dir", f.cache_dir, "Coset table cache (default $QF_CACHE_DIR or .qf-cache)");

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate Q_n(K): size and type");
  auto* homology = app.add_subcommand("homology", "Q_n(K), the branched cover group and H1, H2");
  for (auto* sub : {enumerate, homology}) {
    sub->add_option("--knot", f.knot, "Knot spec")->required();
    sub->add_option("--n", f.n, "Quandle index")->check(CLI::Range(1L, 1000L));
    sub->add_option("--max-cosets", f.max_cosets, "Coset enumeration cap")->check(CLI::PositiveNumber);
    sub->add_option("--format", f.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_flag("--stats", f.stats, "Include timings and cache counters");
  }
  auto* verify = app.add_subcommand("verify-tables", "Check the classification tables");
  verify->add_option("--max-cosets", f.max_cosets, "Coset enumeration cap")->check(CLI::PositiveNumber);
  verify->add_option("--format", f.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  verify->add_option("--threads", f.threads, "Worker threads (0 picks the core count)");
  auto* catalog = app.add_subcommand("catalog", "List the catalog and builder syntax");
  catalog->add_option("--format", f.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*enumerate) return run_knot(f, false);
    if (*homology) return run_knot(f, true);
    if (*verify) return run_verify(f);
    return run_catalog(f);
  } catch (const qf::Overflow& e) {
    std::cerr << "qf: " << e.what() << "\n";
    return kOverflow;
  } catch (const qf::SyntaxError& e) {
    std::cerr << "qf: " << e.what() << "\n";
    return kInputError;
  } catch (const h::InputError& e) {
    std::cerr << "qf: " << e.what() << "\n";
    return kInputError;
  } catch (const qf::LabelError& e) {
    std::cerr << "qf: " << e.what() << "\n";
    return kInputError;
  } catch (const qf::MultiComponent& e) {
    std::cerr << "qf: " << e.what() << "\n";
    return kInputError;
  } catch (const qf::ParameterError& e) {
    std::cerr << "qf: " << e.what() << "\n";
    return kInputError;
  } catch (const qf::OrientationInconsistent& e) {
    std::cerr << "qf: " << e.what() << "\n";
    return kInputError;
  } catch (const qf::KernelSizeMismatch& e) {
    std::cerr << "qf: " << e.what() << "\n";
    return kMismatch;
  } catch (const qf::IncompleteTable& e) {
    std::cerr << "qf: " << e.what() << "\n";
    return kMismatch;
  } catch (const std::exception& e) {
    std::cerr << "qf: internal error: " << e.what() << "\n";
    return EXIT_FAILURE;
  }
}
