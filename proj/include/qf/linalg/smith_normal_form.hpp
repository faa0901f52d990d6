#pragma once

#include <cstddef>
#include <vector>

#include "qf/linalg/abelian_group.hpp"
#include "qf/linalg/sparse_int_matrix.hpp"

namespace qf {

struct SNFResult {
  std::vector<Integer> factors;  // d1 | d2 | ... | d_rank, all positive
  std::size_t rank = 0;
};

/// Invariant factors of an integer matrix.
///
/// Unit pivots are eliminated first by Schur complement, chosen by least
/// Markowitz cost with ties on (row, col). The surviving block goes through
/// smith_normal_form_modular.
SNFResult smith_normal_form(const SparseIntMatrix& m);

/// Dense path for what the unit phase leaves behind. Bareiss elimination with
/// full pivoting gives the rank r and a nonzero r x r minor D; every
/// invariant factor divides D, so the rest of the reduction runs modulo D and
/// entries stay bounded.
SNFResult smith_normal_form_modular(std::vector<std::vector<Integer>> a);

/// Textbook Euclidean reduction over Z with no size control. Kept as an
/// independent cross-check for small matrices.
SNFResult smith_normal_form_dense(std::vector<std::vector<Integer>> a);

/// Normalizes a multiset of nonzero diagonal entries into a divisibility chain.
std::vector<Integer> invariant_factors_from_diagonal(std::vector<Integer> diagonal);

/// Rank over Q and the absolute value of a nonzero maximal minor (1 for rank 0).
struct RankCertificate {
  std::size_t rank = 0;
  Integer minor = 1;
};
RankCertificate bareiss_rank(std::vector<std::vector<Integer>> a);

class NotAComplex : public LinalgError {
 public:
  using LinalgError::LinalgError;
};

/// ker(d_low) / im(d_high). Throws NotAComplex unless d_low * d_high == 0.
AbelianGroup homology_of_pair(const SparseIntMatrix& d_low, const SparseIntMatrix& d_high);

}  // namespace qf
