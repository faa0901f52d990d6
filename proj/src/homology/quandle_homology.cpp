#include "qf/homology/quandle_homology.hpp"

#include "json.hpp"
#include "qf/linalg/smith_normal_form.hpp"

namespace qf {

QuandleComplexSlice boundaries(const FiniteQuandle& q) {
  const std::size_t n = q.size();
  const std::size_t pairs = n * (n - 1);
  const std::size_t triples = pairs * (n == 0 ? 0 : n - 1);

  std::vector<Triplet> e2;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      const std::size_t xy = q.op(static_cast<Element>(x), static_cast<Element>(y));
      if (xy == x) continue;
      const std::size_t col = kernels::pair_index(x, y, n);
      e2.push_back({x, col, Integer(1)});
      e2.push_back({xy, col, Integer(-1)});
    }
  }
  std::vector<Triplet> e3;
  for (const auto& t : kernels::omp::quandle_d3(q.table(), n)) e3.push_back({t.row, t.col, Integer(t.value)});
  return {q, SparseIntMatrix(n, pairs, std::move(e2)), SparseIntMatrix(pairs, triples, std::move(e3))};
}

AbelianGroup h1(const QuandleComplexSlice& c) {
  return homology_of_pair(SparseIntMatrix(0, c.quandle.size()), c.d2);
}
AbelianGroup h1(const FiniteQuandle& q) { return h1(boundaries(q)); }

AbelianGroup h2(const QuandleComplexSlice& c) { return homology_of_pair(c.d2, c.d3); }
AbelianGroup h2(const FiniteQuandle& q) { return h2(boundaries(q)); }

long h2_order_via_extension(long pi1_order, long qn_order) {
  if (qn_order <= 0 || pi1_order <= 0 || pi1_order % qn_order != 0) {
    throw DivisibilityError(std::to_string(qn_order) + " does not divide " + std::to_string(pi1_order));
  }
  return pi1_order / qn_order;
}

std::string to_json(const AbelianGroup& g) {
  nlohmann::ordered_json j;
  j["free_rank"] = g.free_rank;
  j["torsion"] = nlohmann::ordered_json::array();
  for (const auto& d : g.torsion) {
    if (d.fits_slong_p()) {
      j["torsion"].push_back(d.get_si());
    } else {
      j["torsion"].push_back(d.get_str());
    }
  }
  return j.dump();
}

}  // namespace qf
