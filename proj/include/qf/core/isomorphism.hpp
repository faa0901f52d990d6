#pragma once

#include <optional>
#include <vector>

#include "qf/core/finite_quandle.hpp"

namespace qf {

/// Lexicographically least isomorphism a -> b as a permutation array, if any.
///
/// Candidates are pruned by size, type, orbit sizes and per-element column
/// cycle type, then assigned in index order with closure under the operation.
std::optional<std::vector<Element>> is_isomorphic(const FiniteQuandle& a, const FiniteQuandle& b);

}  // namespace qf
