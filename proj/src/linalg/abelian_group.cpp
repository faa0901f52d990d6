#include "qf/linalg/abelian_group.hpp"

namespace qf {

Integer AbelianGroup::torsion_order() const {
  Integer order = 1;
  for (const auto& d : torsion) order *= d;
  return order;
}

std::string AbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::string s;
  if (free_rank > 0) s = free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
  for (const auto& d : torsion) {
    if (!s.empty()) s += " + ";
    s += "Z/" + d.get_str();
  }
  return s;
}

AbelianGroup AbelianGroup::cyclic(long order) {
  if (order == 0) return free(1);
  return abelian_group_from_factors(0, {Integer(order < 0 ? -order : order)});
}

AbelianGroup AbelianGroup::free(std::size_t rank) { return {rank, {}}; }

AbelianGroup abelian_group_from_factors(std::size_t free_rank, const std::vector<Integer>& factors) {
  AbelianGroup g{free_rank, {}};
  for (const auto& d : factors) {
    if (d > 1) g.torsion.push_back(d);
  }
  return g;
}

}  // namespace qf
