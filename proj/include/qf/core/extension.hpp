#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "qf/core/finite_quandle.hpp"

namespace qf {

class MalformedWitness : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Candidate central extension total -> base with a group acting on total.
/// `action` holds one permutation of the total quandle per group generator.
struct ExtensionWitness {
  FiniteQuandle total;
  FiniteQuandle base;
  std::vector<Element> projection;
  std::size_t group_order = 1;
  std::vector<std::vector<Element>> action;
};

struct ExtensionReport {
  bool homomorphism = false;
  bool surjective = false;
  /// The generated permutation group is abelian of the stated order.
  bool group_order = false;
  bool abelian = false;
  bool e1 = false;
  bool e2 = false;
  std::size_t generated_order = 0;

  bool all() const { return homomorphism && surjective && group_order && abelian && e1 && e2; }
};

ExtensionReport verify_extension(const ExtensionWitness& w);

}  // namespace qf
