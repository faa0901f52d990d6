#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qf/linalg/sparse_int_matrix.hpp"

namespace qf {

/// Finitely generated abelian group Z^free_rank + Z/d1 + Z/d2 + ...
/// with d1 | d2 | ... and every d_i >= 2.
struct AbelianGroup {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  /// Order of the torsion subgroup (1 when torsion-free).
  Integer torsion_order() const;
  /// Human-readable form such as "Z^2 + Z/3".
  std::string to_string() const;

  static AbelianGroup cyclic(long order);
  static AbelianGroup free(std::size_t rank);

  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
    return a.free_rank == b.free_rank && a.torsion == b.torsion;
  }
};

/// Builds an AbelianGroup from invariant factors, dropping the units.
AbelianGroup abelian_group_from_factors(std::size_t free_rank, const std::vector<Integer>& factors);

}  // namespace qf
