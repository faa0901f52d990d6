#include "qf/harness/verify.hpp"

#include <algorithm>
#include <future>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "qf/core/finite_group.hpp"
#include "qf/core/isomorphism.hpp"
#include "qf/core/terms.hpp"
#include "qf/diagrams/builders.hpp"

namespace qf::harness {

namespace {

TableRow rational_row(long a, long b) {
  TableRow r;
  r.name = "S(" + std::to_string(a) + "," + std::to_string(b) + ") n=2";
  r.knot = "rational:" + std::to_string(a) + "," + std::to_string(b);
  r.n = 2;
  r.qn_size = static_cast<std::size_t>(a);
  r.pi1_order = static_cast<std::size_t>(a);
  r.longitude_order = 1;
  return r;
}

TableRow knot_row(const std::string& name, long n, std::size_t qn, std::size_t pi1, std::size_t l, bool schlafli) {
  TableRow r;
  r.name = name + " n=" + std::to_string(n);
  r.knot = "catalog:" + name;
  r.n = n;
  r.qn_size = qn;
  r.pi1_order = pi1;
  r.longitude_order = l;
  r.h2 = AbelianGroup::cyclic(static_cast<long>(l));
  r.schlafli = schlafli;
  return r;
}

TableRow montesinos_row(const std::string& spec) {
  TableRow r;
  r.name = "M(" + spec + ") n=2";
  r.knot = "montesinos:" + spec;
  r.n = 2;
  r.longitude_order = 2;
  r.h2 = AbelianGroup::cyclic(2);
  r.montesinos = true;
  return r;
}

template <class T>
RowCheck equal(const std::string& name, const T& got, const T& want) {
  std::ostringstream d;
  d << "got " << got << ", want " << want;
  return {name, got == want, d.str()};
}

RowCheck equal_groups(const std::string& name, const AbelianGroup& got, const AbelianGroup& want) {
  return {name, got == want, "got " + got.to_string() + ", want " + want.to_string()};
}

std::vector<Element> model_to_enumerated(const PipelineResult& r, std::vector<Element>* coset_of) {
  const auto& cover = *r.artifacts->cover;
  const auto a = cover.pi1->generated_subgroup(std::vector<Element>{cover.longitude});
  const auto model = coset_quandle(*cover.pi1, cover.phi, a, coset_of);
  auto iso = is_isomorphic(model, *r.artifacts->quandle);
  return iso ? *iso : std::vector<Element>{};
}

}  // namespace

const char* to_string(RowStatus s) {
  switch (s) {
    case RowStatus::pass:
      return "PASS";
    case RowStatus::fail:
      return "FAIL";
    case RowStatus::skip:
      return "SKIP";
    case RowStatus::overflow:
      return "OVERFLOW";
  }
  return "FAIL";
}

std::vector<TableRow> table_rows() {
  std::vector<TableRow> rows;
  for (auto [a, b] : std::vector<std::pair<long, long>>{{3, 1}, {5, 1}, {5, 3}, {7, 3}, {9, 5}}) {
    rows.push_back(rational_row(a, b));
  }
  rows.push_back(knot_row("3_1", 3, 4, 8, 2, true));
  rows.push_back(knot_row("3_1", 4, 6, 24, 4, true));
  rows.push_back(knot_row("3_1", 5, 12, 120, 10, true));
  rows.push_back(knot_row("5_1", 3, 20, 120, 6, false));
  rows.push_back(montesinos_row("1,1/2,1/3,1/3"));
  rows.push_back(montesinos_row("0,1/2,-1/3,-1/3"));
  return rows;
}

bool model_matches(const PipelineResult& r) {
  if (!r.artifacts || !r.artifacts->cover || !r.artifacts->quandle) return false;
  return !model_to_enumerated(r, nullptr).empty();
}

ExtensionReport extension_report(const PipelineResult& r) {
  if (!r.artifacts || !r.artifacts->cover || !r.artifacts->quandle) return {};
  const auto& cover = *r.artifacts->cover;
  std::vector<Element> coset_of;
  const auto iso = model_to_enumerated(r, &coset_of);
  if (iso.empty()) return {};
  const auto& g = *cover.pi1;
  ExtensionWitness w{galex(g, cover.phi), *r.artifacts->quandle, {}, element_order(g, cover.longitude), {}};
  std::vector<Element> shift(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    w.projection.push_back(iso[coset_of[x]]);
    shift[x] = g.mul(cover.longitude, x);
  }
  w.action.push_back(std::move(shift));
  return verify_extension(w);
}

bool schlafli_relators_hold(const PipelineResult& r) {
  if (!r.artifacts || !r.artifacts->diagram || !r.artifacts->cosets || !r.artifacts->quandle) return false;
  const auto& d = *r.artifacts->diagram;
  if (d.arcs() < 2) return false;
  const auto words = arc_words(d);
  const Assignment a{{"v", r.artifacts->cosets->act(0, words[0])}, {"w", r.artifacts->cosets->act(0, words[1])}};
  const std::string n = std::to_string(r.n);
  const auto relators = parse_equations({"(v*w)*v = w", "(w*v)*w = v", "w*^" + n + " v = w", "v*^" + n + " w = v"});
  return check_relators(*r.artifacts->quandle, a, relators);
}

RowOutcome verify_row(const TableRow& row, const Catalog& catalog, const VerifyOptions& options) {
  RowOutcome out;
  out.name = row.name;
  KnotInput knot;
  try {
    knot = parse_knot_spec(row.knot, catalog);
  } catch (const MultiComponent& e) {
    out.status = row.montesinos ? RowStatus::skip : RowStatus::fail;
    out.detail = e.what();
    return out;
  } catch (const std::exception& e) {
    out.detail = std::string("input: ") + e.what();
    return out;
  }

  PipelineOptions po;
  po.n = row.n;
  po.max_cosets = options.max_cosets;
  po.cache_dir = options.cache_dir;
  try {
    out.result = run_pipeline(knot, po);
  } catch (const Overflow& e) {
    out.status = RowStatus::overflow;
    out.detail = e.what();
    return out;
  } catch (const std::exception& e) {
    out.detail = e.what();
    return out;
  }
  const auto& r = *out.result;
  auto& c = out.checks;

  std::size_t want_qn = row.qn_size.value_or(0);
  std::size_t want_pi1 = row.pi1_order.value_or(0);
  if (row.montesinos) {
    if (!knot.mu1) {
      out.status = RowStatus::fail;
      out.detail = "builder reports no mu1 for this shape";
      return out;
    }
    want_qn = 12 * static_cast<std::size_t>(*knot.mu1);
    want_pi1 = 24 * static_cast<std::size_t>(*knot.mu1);
  }
  c.push_back(equal<std::size_t>("qn_size", r.qn_size, want_qn));
  c.push_back(equal<std::uint64_t>("type", r.type, static_cast<std::uint64_t>(row.n)));
  c.push_back({"connected", r.connected, ""});
  c.push_back(equal<std::size_t>("pi1_order", r.pi1_order.value_or(0), want_pi1));
  c.push_back(equal<std::size_t>("longitude_order", r.longitude_order.value_or(0), row.longitude_order));
  c.push_back(equal_groups("h2", r.h2.value_or(AbelianGroup{}), row.h2));
  c.push_back(equal_groups("h1", r.h1.value_or(AbelianGroup{}), AbelianGroup::free(1)));
  for (const auto& [name, ok] : r.checks) c.push_back({name, ok, ""});
  if (r.artifacts->cover) {
    c.push_back({"phi_fixes_l", r.artifacts->cover->phi(r.artifacts->cover->longitude) == r.artifacts->cover->longitude, ""});
  }
  c.push_back({"model_isomorphic", model_matches(r), ""});
  const auto ext = extension_report(r);
  c.push_back({"extension", ext.all(), "generated order " + std::to_string(ext.generated_order)});
  if (row.schlafli) c.push_back({"schlafli_relators", schlafli_relators_hold(r), ""});

  const bool ok = std::all_of(c.begin(), c.end(), [](const RowCheck& k) { return k.ok; });
  out.status = ok ? RowStatus::pass : RowStatus::fail;
  return out;
}

std::vector<RowOutcome> verify_tables(const Catalog& catalog, const VerifyOptions& options) {
  const auto rows = table_rows();
  std::vector<RowOutcome> out(rows.size());
  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(rows.size()));
  std::size_t next = 0;
  while (next < rows.size()) {
    std::vector<std::future<RowOutcome>> batch;
    const std::size_t begin = next;
    for (unsigned t = 0; t < threads && next < rows.size(); ++t, ++next) {
      batch.push_back(std::async(std::launch::async, verify_row, std::cref(rows[next]), std::cref(catalog), std::cref(options)));
    }
    for (std::size_t i = 0; i < batch.size(); ++i) out[begin + i] = batch[i].get();
  }
  return out;
}

int exit_code(const std::vector<RowOutcome>& rows) {
  bool failed = false;
  for (const auto& r : rows) {
    if (r.status == RowStatus::overflow) return 3;
    failed = failed || r.status == RowStatus::fail;
  }
  return failed ? 4 : 0;
}

std::string format_text(const std::vector<RowOutcome>& rows) {
  std::ostringstream s;
  for (const auto& r : rows) {
    s << to_string(r.status) << "  " << r.name;
    if (r.result) {
      s << "  |Q|=" << r.result->qn_size << " type=" << r.result->type;
      if (r.result->longitude_order) s << " ord(l)=" << *r.result->longitude_order;
      if (r.result->pi1_order) s << " |pi1|=" << *r.result->pi1_order;
      if (r.result->h2) s << " H2=" << r.result->h2->to_string();
    }
    if (!r.detail.empty()) s << "  (" << r.detail << ")";
    s << "\n";
    for (const auto& c : r.checks) {
      if (!c.ok) s << "    failed " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    }
  }
  return s.str();
}

std::string format_json(const std::vector<RowOutcome>& rows) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["command"] = "verify-tables";
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json row;
    row["name"] = r.name;
    row["status"] = to_string(r.status);
    if (!r.detail.empty()) row["detail"] = r.detail;
    if (r.result) row["result"] = nlohmann::ordered_json::parse(to_json(*r.result, "verify-tables", false));
    nlohmann::ordered_json checks;
    for (const auto& c : r.checks) checks[c.name] = c.ok;
    row["checks"] = checks;
    j["rows"].push_back(row);
  }
  j["exit_code"] = exit_code(rows);
  return j.dump(2) + "\n";
}

std::string format_csv(const std::vector<RowOutcome>& rows) {
  std::string s = "name,status,qn_size,type,pi1_order,longitude_order,h2,failed_checks\n";
  for (const auto& r : rows) {
    std::string failed;
    for (const auto& c : r.checks) {
      if (!c.ok) failed += (failed.empty() ? "" : ";") + c.name;
    }
    s += r.name + "," + to_string(r.status) + ",";
    if (r.result) {
      s += std::to_string(r.result->qn_size) + "," + std::to_string(r.result->type) + "," +
           (r.result->pi1_order ? std::to_string(*r.result->pi1_order) : "") + "," +
           (r.result->longitude_order ? std::to_string(*r.result->longitude_order) : "") + "," +
           (r.result->h2 ? r.result->h2->to_string() : "");
    } else {
      s += ",,,,";
    }
    s += "," + failed + "\n";
  }
  return s;
}

}  // namespace qf::harness
