// One line per acceptance criterion: PASS or FAIL, the evidence, and the
// wall time against its budget. Exit status is nonzero if any line fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qf/core/finite_group.hpp"
#include "qf/core/isomorphism.hpp"
#include "qf/diagrams/builders.hpp"
#include "qf/harness/verify.hpp"
#include "qf/homology/quandle_homology.hpp"
#include "qf/linalg/smith_normal_form.hpp"

using namespace qf;
using namespace qf::harness;

namespace {

using Clock = std::chrono::steady_clock;

// Wall-clock budgets in seconds.
constexpr double kBudgetCardinality = 5;
constexpr double kBudgetLongitude = 10;
constexpr double kBudgetH2 = 60;
constexpr double kBudgetMontesinos = 60;
constexpr double kBudgetExact = 60;
constexpr double kBudgetCyclic = 5;
constexpr double kBudgetProperties = 120;

constexpr std::size_t kOverflowCap = 1'000'000;

struct Case {
  std::string name;
  std::string spec;
  long n;
};

const std::vector<Case> kTwoBridge = {
    {"S(3,1)", "rational:3,1", 2}, {"S(5,1)", "rational:5,1", 2}, {"S(5,3)", "rational:5,3", 2},
    {"S(7,3)", "rational:7,3", 2}, {"S(9,5)", "rational:9,5", 2}};
const std::vector<Case> kTorus = {
    {"3_1", "catalog:3_1", 3}, {"3_1", "catalog:3_1", 4}, {"3_1", "catalog:3_1", 5}, {"5_1", "catalog:5_1", 3}};
const std::vector<Case> kMontesinos = {
    {"M(1;1/2,1/3,1/3)", "montesinos:1,1/2,1/3,1/3", 2}, {"M(0;1/2,-1/3,-1/3)", "montesinos:0,1/2,-1/3,-1/3", 2}};

std::string label(const Case& c) { return c.name + " n=" + std::to_string(c.n); }

PipelineResult run(const Case& c, bool full) {
  PipelineOptions o;
  o.n = c.n;
  o.full = full;
  return run_pipeline(parse_knot_spec(c.spec, builtin_catalog()), o);
}

// Results of full runs, computed once and shared by criteria 5 to 7 and 10.
std::map<std::string, PipelineResult>& full_results() {
  static std::map<std::string, PipelineResult> cache;
  return cache;
}

const PipelineResult& full(const Case& c) {
  auto& m = full_results();
  const auto key = c.spec + "@" + std::to_string(c.n);
  auto it = m.find(key);
  if (it == m.end()) it = m.emplace(key, run(c, true)).first;
  return it->second;
}

std::vector<Case> all_rows() {
  std::vector<Case> v = kTwoBridge;
  v.insert(v.end(), kTorus.begin(), kTorus.end());
  v.insert(v.end(), kMontesinos.begin(), kMontesinos.end());
  return v;
}

struct Verdict {
  bool ok = true;
  std::ostringstream evidence;
  std::ostringstream failures;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      failures << " [" << what << "]";
    }
  }
};

int failed = 0;

void criterion(int id, const char* title, double budget, const std::function<void(Verdict&)>& body) {
  Verdict v;
  const auto start = Clock::now();
  try {
    body(v);
  } catch (const std::exception& e) {
    v.ok = false;
    v.failures << " [exception: " << e.what() << "]";
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  v.expect(secs < budget, "over budget");
  if (!v.ok) ++failed;
  std::printf("%s %2d %s: %s%s (%.2f s, budget %.0f s)\n", v.ok ? "PASS" : "FAIL", id, title,
              v.evidence.str().c_str(), v.failures.str().c_str(), secs, budget);
  std::fflush(stdout);
}

SparseIntMatrix sparse_of(const oracle::Dense& d) {
  std::vector<Triplet> t;
  for (std::size_t r = 0; r < d.size(); ++r) {
    for (std::size_t c = 0; c < d[r].size(); ++c) t.push_back({r, c, d[r][c]});
  }
  return {d.size(), d.empty() ? 0 : d[0].size(), t};
}

}  // namespace

int main() {
  criterion(1, "cardinality table", kBudgetCardinality, [](Verdict& v) {
    const std::vector<std::size_t> torus_sizes{4, 6, 12, 20};
    for (const auto& c : kTwoBridge) {
      const auto r = run(c, false);
      const auto alpha = static_cast<std::size_t>(std::stoul(c.spec.substr(9)));
      v.evidence << c.name << "=" << r.qn_size << " ";
      v.expect(r.qn_size == alpha, label(c));
    }
    for (std::size_t i = 0; i < kTorus.size(); ++i) {
      const auto r = run(kTorus[i], false);
      v.evidence << label(kTorus[i]) << ":" << r.qn_size << " ";
      v.expect(r.qn_size == torus_sizes[i], label(kTorus[i]));
    }
  });

  criterion(2, "longitude orders", kBudgetLongitude, [](Verdict& v) {
    for (const auto& c : kTwoBridge) {
      const auto r = run(c, true);
      v.expect(r.longitude_order == 1u, label(c));
    }
    v.evidence << "2-bridge all 1; ";
    const std::vector<std::size_t> want{2, 4, 10, 6};
    for (std::size_t i = 0; i < kTorus.size(); ++i) {
      const auto& r = full(kTorus[i]);
      v.evidence << label(kTorus[i]) << ":" << r.longitude_order.value_or(0) << " ";
      v.expect(r.longitude_order == want[i], label(kTorus[i]));
    }
  });

  criterion(3, "H2 classification", kBudgetH2, [](Verdict& v) {
    // Recomputed from the enumerated table so the time here is the SNF work.
    for (const auto& c : kTwoBridge) v.expect(h2(*full(c).artifacts->quandle) == AbelianGroup{}, label(c));
    v.evidence << "2-bridge all 0; ";
    const std::vector<long> want{2, 4, 10, 6};
    for (std::size_t i = 0; i < kTorus.size(); ++i) {
      const auto& r = full(kTorus[i]);
      const auto got = h2(*r.artifacts->quandle);
      v.evidence << label(kTorus[i]) << ":" << got.to_string() << " ";
      v.expect(got == AbelianGroup::cyclic(want[i]), label(kTorus[i]));
      v.expect(r.h2 == got, label(kTorus[i]) + " pipeline field");
    }
  });

  criterion(4, "Montesinos 12 mu1", kBudgetMontesinos, [](Verdict& v) {
    for (const auto& c : kMontesinos) {
      const auto knot = parse_knot_spec(c.spec, builtin_catalog());
      if (!knot.mu1) {
        v.expect(false, c.name + " has no mu1");
        continue;
      }
      const auto mu = static_cast<std::size_t>(*knot.mu1);
      const auto& r = full(c);
      v.evidence << c.name << " mu1=" << mu << " |Q2|=" << r.qn_size << " |pi1|=" << r.pi1_order.value_or(0)
                 << " H2=" << (r.h2 ? r.h2->to_string() : "-") << "; ";
      v.expect(mu <= 2, c.name + " mu1 > 2");
      v.expect(r.qn_size == 12 * mu, c.name + " |Q2|");
      v.expect(r.pi1_order == 24 * mu, c.name + " |pi1|");
      v.expect(r.h2 == AbelianGroup::cyclic(2), c.name + " H2");
    }
  });

  criterion(5, "type equals n", kBudgetExact, [](Verdict& v) {
    std::size_t count = 0;
    for (const auto& c : all_rows()) {
      const auto& r = full(c);
      // Recomputed from the table, not taken from the pipeline field.
      const auto type = quandle_type(*r.artifacts->quandle);
      v.expect(type == static_cast<std::uint64_t>(c.n), label(c) + " type " + std::to_string(type));
      ++count;
    }
    v.evidence << count << " quandles";
  });

  criterion(6, "extension (E1)/(E2)", kBudgetExact, [](Verdict& v) {
    for (const auto& c : kTorus) {
      const auto& r = full(c);
      const auto report = extension_report(r);
      const auto& cover = *r.artifacts->cover;
      const auto l = element_order(*cover.pi1, cover.longitude);
      // Fiber sizes from the projection built for the witness.
      std::vector<Element> coset_of;
      const auto a = cover.pi1->generated_subgroup(std::vector<Element>{cover.longitude});
      const auto model = coset_quandle(*cover.pi1, cover.phi, a, &coset_of);
      std::vector<std::size_t> fiber(model.size(), 0);
      for (auto k : coset_of) ++fiber[k];
      const bool uniform = std::all_of(fiber.begin(), fiber.end(), [&](std::size_t f) { return f == l; });
      v.evidence << label(c) << " |fiber|=" << fiber.front() << " ";
      v.expect(report.all(), label(c) + " witness");
      v.expect(report.generated_order == l, label(c) + " group order");
      v.expect(uniform, label(c) + " fibers");
    }
  });

  criterion(7, "coset model isomorphism", kBudgetExact, [](Verdict& v) {
    std::size_t count = 0;
    for (const auto& c : all_rows()) {
      v.expect(model_matches(full(c)), label(c));
      ++count;
    }
    v.evidence << count << " finite rows";
  });

  criterion(8, "trefoil cover algebra", kBudgetCyclic, [](Verdict& v) {
    const std::vector<std::pair<long, AbelianGroup>> ab{{6, AbelianGroup::free(2)},
                                                        {5, AbelianGroup{}},
                                                        {7, AbelianGroup{}},
                                                        {8, AbelianGroup::cyclic(3)},
                                                        {9, abelian_group_from_factors(0, {2, 2})}};
    for (const auto& [n, want] : ab) {
      const auto got = abelianization(trefoil_branched_presentation(n).group);
      v.evidence << "n=" << n << ":" << got.to_string() << " ";
      v.expect(got == want, "abelianization n=" + std::to_string(n));
    }
    const std::vector<std::size_t> orders{3, 8, 24, 120};
    for (long n = 2; n <= 5; ++n) {
      const auto order = todd_coxeter(trefoil_branched_presentation(n).group, {}).cosets;
      v.evidence << "|G" << n << "|=" << order << " ";
      v.expect(order == orders[static_cast<std::size_t>(n - 2)], "order n=" + std::to_string(n));
    }
    for (std::size_t i = 0; i < 3; ++i) {
      const auto& r = full(kTorus[i]);
      v.expect(r.pi1_order == orders[i + 1], label(kTorus[i]) + " pipeline pi1");
      v.expect(r.pi1_order == r.qn_size * r.longitude_order.value_or(0), label(kTorus[i]) + " |Q| ord(l)");
    }
  });

  criterion(9, "Schlafli identification", kBudgetExact, [](Verdict& v) {
    const std::vector<std::size_t> sizes{4, 6, 12};
    for (std::size_t i = 0; i < 3; ++i) {
      const auto& r = full(kTorus[i]);
      v.evidence << label(kTorus[i]) << " |Q|=" << r.qn_size << " ";
      v.expect(r.qn_size == sizes[i], label(kTorus[i]) + " size");
      v.expect(schlafli_relators_hold(r), label(kTorus[i]) + " relators");
    }
  });

  criterion(10, "property suites", kBudgetProperties, [](Verdict& v) {
    // (a) mutated tables.
    std::mt19937_64 rng(20240611);
    int broken = 0, caught = 0;
    while (broken < 1000) {
      auto [t, n] = oracle::random_small_quandle(rng);
      if (n < 2) continue;
      t[rng() % t.size()] = static_cast<std::uint32_t>(rng() % n);
      if (oracle::is_quandle(t, n)) continue;
      ++broken;
      try {
        (void)FiniteQuandle::from_table(t, n);
      } catch (const AxiomViolation&) {
        ++caught;
      }
    }
    v.evidence << "(a) " << caught << "/" << broken << " caught; ";
    v.expect(caught == broken, "(a)");

    // (b) and (c) on random quandles.
    int zero = 0, connected = 0, h1_ok = 0;
    for (int trial = 0; trial < 100; ++trial) {
      const auto [t, n] = oracle::random_small_quandle(rng);
      const auto c = boundaries(FiniteQuandle::from_table(t, n));
      zero += multiply(c.d2, c.d3).is_zero();
      if (is_connected(c.quandle)) {
        ++connected;
        h1_ok += h1(c) == AbelianGroup::free(1);
      }
    }
    // ... and on every knot quandle computed above plus the rest of the catalog.
    std::vector<Case> knots = all_rows();
    for (const char* name : {"3_1", "4_1", "5_1", "5_2"}) knots.push_back({name, std::string("catalog:") + name, 2});
    int knot_zero = 0, knot_h1 = 0;
    for (const auto& k : knots) {
      const auto c = boundaries(*full(k).artifacts->quandle);
      knot_zero += multiply(c.d2, c.d3).is_zero();
      knot_h1 += is_connected(c.quandle) && h1(c) == AbelianGroup::free(1);
    }
    v.evidence << "(b) " << zero << "/100 random, " << knot_zero << "/" << knots.size() << " knot; ";
    v.evidence << "(c) " << h1_ok << "/" << connected << " random, " << knot_h1 << "/" << knots.size() << " knot; ";
    v.expect(zero == 100 && knot_zero == static_cast<int>(knots.size()), "(b)");
    v.expect(h1_ok == connected && knot_h1 == static_cast<int>(knots.size()), "(c)");

    // (d) SNF under row/column permutations, sign flips and row additions.
    int invariant = 0;
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t rows = 2 + rng() % 6, cols = 2 + rng() % 6;
      oracle::Dense d(rows, std::vector<mpz_class>(cols, 0));
      for (auto& row : d) {
        for (auto& x : row) x = rng() % 3 ? long(rng() % 19) - 9 : 0;
      }
      const auto base = smith_normal_form(sparse_of(d)).factors;
      std::shuffle(d.begin(), d.end(), rng);
      std::vector<std::size_t> perm(cols);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      oracle::Dense e(rows, std::vector<mpz_class>(cols));
      for (std::size_t r = 0; r < rows; ++r) {
        const long sign = rng() % 2 ? 1 : -1;
        for (std::size_t c = 0; c < cols; ++c) e[r][perm[c]] = sign * d[r][c];
      }
      const std::size_t i = rng() % rows, j = (i + 1) % rows;
      const long k = long(rng() % 7) - 3;
      for (std::size_t c = 0; c < cols; ++c) e[j][c] += k * e[i][c];
      const auto moved = smith_normal_form(sparse_of(e)).factors;
      const auto expected = oracle::smith_by_minimum(e);
      invariant += moved == base && moved == expected;
    }
    v.evidence << "(d) " << invariant << "/100; ";
    v.expect(invariant == 100, "(d)");

    // (e) the square knot has infinite Q_2.
    const auto square = connected_sum(parse_pd(builtin_catalog().at("3_1")), parse_pd(builtin_catalog().at("3_1")));
    bool overflowed = false;
    try {
      PipelineOptions o;
      o.n = 2;
      o.max_cosets = kOverflowCap;
      o.full = false;
      (void)run_pipeline(KnotInput{"3_1#3_1", false, square, std::nullopt, std::nullopt}, o);
    } catch (const Overflow&) {
      overflowed = true;
    }
    v.evidence << "(e) Q2(3_1#3_1) " << (overflowed ? "Overflow" : "finite") << " at cap " << kOverflowCap;
    v.expect(overflowed, "(e)");
  });

  std::printf("%s\n", failed ? "acceptance: FAIL" : "acceptance: PASS");
  return failed ? 1 : 0;
}
