#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qf/kernels.hpp"

namespace qf {

using Element = kernels::Element;

/// Hard cap on quandle and group sizes handled as dense tables.
inline constexpr std::size_t kMaxTableSize = std::size_t{1} << 16;

class AxiomViolation : public std::runtime_error {
 public:
  AxiomViolation(kernels::AxiomWitness witness, const std::string& what)
      : std::runtime_error(what), witness_(witness) {}
  const kernels::AxiomWitness& witness() const { return witness_; }

 private:
  kernels::AxiomWitness witness_;
};

/// A finite quandle given by its full operation table.
///
/// Instances only come out of from_table (or helpers that call it), so the
/// three axioms always hold. Immutable after construction.
class FiniteQuandle {
 public:
  /// Validates and wraps `table` (row-major, table[x*n+y] = x*y).
  /// Throws AxiomViolation naming the first failing witness, or
  /// std::invalid_argument for out-of-range entries or a bad shape.
  static FiniteQuandle from_table(std::vector<Element> table, std::size_t n);
  static FiniteQuandle from_rows(const std::vector<std::vector<Element>>& rows);

  static FiniteQuandle trivial(std::size_t n);
  /// Dihedral quandle R_n: x*y = 2y - x mod n.
  static FiniteQuandle dihedral(std::size_t n);

  std::size_t size() const { return n_; }
  Element op(Element x, Element y) const { return table_[x * n_ + y]; }
  Element inv_op(Element x, Element y) const { return inverse_[x * n_ + y]; }
  /// S_y^k(x), k of either sign.
  Element power(Element x, Element y, long k) const;

  std::span<const Element> table() const { return table_; }
  std::span<const Element> inverse_table() const { return inverse_; }
  std::vector<std::vector<Element>> rows() const;

  /// The quandle obtained by renaming x to perm[x].
  FiniteQuandle relabeled(std::span<const Element> perm) const;

  friend bool operator==(const FiniteQuandle& a, const FiniteQuandle& b) {
    return a.n_ == b.n_ && a.table_ == b.table_;
  }

 private:
  FiniteQuandle(std::vector<Element> table, std::vector<Element> inverse, std::size_t n)
      : n_(n), table_(std::move(table)), inverse_(std::move(inverse)) {}

  std::size_t n_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
};

/// Least n >= 1 with x *^n y = x for all x, y: the lcm of the column
/// permutation orders.
std::uint64_t quandle_type(const FiniteQuandle& q);

/// Orbits of the inner automorphism group, each sorted, listed by least element.
std::vector<std::vector<Element>> components(const FiniteQuandle& q);
inline bool is_connected(const FiniteQuandle& q) { return components(q).size() == 1; }

/// Sorted cycle lengths of the column permutation S_y.
std::vector<std::size_t> column_cycle_type(const FiniteQuandle& q, Element y);

/// Whether f is a quandle homomorphism a -> b.
bool is_homomorphism(const FiniteQuandle& a, const FiniteQuandle& b, std::span<const Element> f);

// JSON {"size": n, "table": [[...], ...]} and a plain-text form with one
// space-separated row per line.
std::string to_json(const FiniteQuandle& q);
FiniteQuandle quandle_from_json(const std::string& text);
void write_text(std::ostream& out, const FiniteQuandle& q);
FiniteQuandle read_text(std::istream& in);

}  // namespace qf
