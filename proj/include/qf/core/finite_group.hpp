#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qf/core/finite_quandle.hpp"

namespace qf {

class GroupAxiomViolation : public std::runtime_error {
  using std::runtime_error::runtime_error;
};
class AutomorphismInvalid : public std::runtime_error {
  using std::runtime_error::runtime_error;
};
class NotASubgroup : public std::runtime_error {
  using std::runtime_error::runtime_error;
};
class NotInvariant : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A finite group as a full multiplication table on indices 0..order-1.
class FiniteGroupElementSet {
 public:
  /// Validates the group axioms. Associativity is exhaustive up to order 256
  /// and sampled with 10^4 fixed-seed random triples above that; identity and
  /// inverses are always checked exhaustively.
  static FiniteGroupElementSet from_table(std::vector<Element> mult, std::size_t order,
                                          std::vector<std::string> labels = {});
  /// Z/n under addition.
  static FiniteGroupElementSet cyclic(std::size_t n);

  std::size_t order() const { return order_; }
  Element identity() const { return identity_; }
  Element mul(Element a, Element b) const { return mult_[a * order_ + b]; }
  Element inv(Element a) const { return inv_[a]; }
  std::span<const Element> mult_table() const { return mult_; }
  std::span<const Element> inverse() const { return inv_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Subgroup generated by `gens`, sorted.
  std::vector<Element> generated_subgroup(std::span<const Element> gens) const;

 private:
  FiniteGroupElementSet() = default;

  std::size_t order_ = 0;
  Element identity_ = 0;
  std::vector<Element> mult_;
  std::vector<Element> inv_;
  std::vector<std::string> labels_;
};

Element element_order(const FiniteGroupElementSet& g, Element x);

class GroupAutomorphism {
 public:
  /// Throws AutomorphismInvalid unless `map` is a bijective homomorphism.
  GroupAutomorphism(std::shared_ptr<const FiniteGroupElementSet> source, std::vector<Element> map);

  static GroupAutomorphism identity(std::shared_ptr<const FiniteGroupElementSet> source);
  /// g -> c^-1 g c.
  static GroupAutomorphism conjugation(std::shared_ptr<const FiniteGroupElementSet> source, Element c);

  const FiniteGroupElementSet& source() const { return *source_; }
  const std::shared_ptr<const FiniteGroupElementSet>& source_ptr() const { return source_; }
  Element operator()(Element x) const { return map_[x]; }
  std::span<const Element> map() const { return map_; }

 private:
  std::shared_ptr<const FiniteGroupElementSet> source_;
  std::vector<Element> map_;
};

/// GAlex(G, phi): x*y = phi(x y^-1) y on the elements of G.
FiniteQuandle galex(const FiniteGroupElementSet& g, const GroupAutomorphism& phi);

/// Right cosets of A with Ax * Ay = A phi(x y^-1) y. Cosets are numbered by
/// their least element. `coset_of`, when given, receives the coset index of
/// every group element.
FiniteQuandle coset_quandle(const FiniteGroupElementSet& g, const GroupAutomorphism& phi,
                            std::span<const Element> subgroup,
                            std::vector<Element>* coset_of = nullptr);

}  // namespace qf
