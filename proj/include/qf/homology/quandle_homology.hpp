#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "qf/core/finite_quandle.hpp"
#include "qf/linalg/abelian_group.hpp"
#include "qf/linalg/sparse_int_matrix.hpp"

namespace qf {

class DivisibilityError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Degree 1..3 of the normalized quandle chain complex. Bases are the
/// elements, the pairs (x, y) with x != y and the triples with x != y != z,
/// in lexicographic order (see kernels::pair_index and triple_index).
struct QuandleComplexSlice {
  FiniteQuandle quandle;
  /// d2(x, y) = <x> - <x*y>.
  SparseIntMatrix d2;
  /// d3(x, y, z) = <x,z> - <x*y,z> - <x,y> + <x*z,y*z>, degenerate pairs dropped.
  SparseIntMatrix d3;
};

QuandleComplexSlice boundaries(const FiniteQuandle& q);

/// Z^n / im d2.
AbelianGroup h1(const FiniteQuandle& q);
AbelianGroup h1(const QuandleComplexSlice& c);
/// ker d2 / im d3.
AbelianGroup h2(const FiniteQuandle& q);
AbelianGroup h2(const QuandleComplexSlice& c);

/// |pi1| / |Q_n|; throws DivisibilityError unless qn_order divides pi1_order.
long h2_order_via_extension(long pi1_order, long qn_order);

/// {"free_rank": r, "torsion": [d1, ...]}.
std::string to_json(const AbelianGroup& g);

}  // namespace qf
