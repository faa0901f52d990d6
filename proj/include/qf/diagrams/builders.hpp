#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qf/diagrams/pd_code.hpp"

namespace qf {

class ParameterError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Unoriented planar diagram with boundary, built from crossings and wires.
/// Crossing slots are counterclockwise with the understrand on slots 0 and 2.
class Tangle {
 public:
  /// The 0 tangle (NW-NE, SW-SE) and the infinity tangle (NW-SW, NE-SE).
  static Tangle zero();
  static Tangle infinity();
  /// Integer tangle [k]: k horizontal half twists.
  static Tangle integer(long k);
  /// Rational tangle with Conway fraction p/q (q may be 0 only for infinity).
  static Tangle rational(long p, long q);

  /// Adds |k| crossings at the right (horizontal, fraction + k) or bottom
  /// (vertical, 1/fraction + k). Positive crossings put the positive-slope
  /// strand on top.
  void twist_horizontal(long k);
  void twist_vertical(long k);

  /// Horizontal sum: this tangle on the left, `right` on the right.
  void add(const Tangle& right);

  /// Closures, labelled along one orientation starting at crossing 0.
  /// Throw MultiComponent for more than one component and ParameterError for
  /// a crossingless knot.
  PDCode numerator() const;
  PDCode denominator() const;

  std::size_t crossings() const { return slots_.size(); }

 private:
  enum Corner { BL, BR, TR, TL };
  std::array<std::size_t, 4> add_crossing(int sign);
  std::size_t add_wire_end();
  void connect(std::size_t a, std::size_t b);
  std::size_t count_components(const std::vector<std::size_t>& link) const;
  PDCode closed(std::size_t a1, std::size_t b1, std::size_t a2, std::size_t b2) const;

  // Node ids: crossing slots and wire ends. link_ joins nodes across an edge,
  // partner_ joins the two ends of a wire.
  std::vector<std::array<std::size_t, 4>> slots_;
  std::vector<std::size_t> link_, partner_;
  std::vector<std::pair<std::size_t, std::size_t>> owner_;
  std::size_t nw_ = 0, ne_ = 0, sw_ = 0, se_ = 0;
};

/// 2-bridge knot S(alpha, beta) as the numerator closure of alpha/beta.
PDCode build_rational(long alpha, long beta);

/// Standard closed 2-braid diagram of T(2, q).
PDCode build_torus(long p, long q);

struct MontesinosBuild {
  PDCode pd;
  /// |6(-b + 1/2 + b2/3 + b3/3)| for shape (1/2, b2/3, b3/3).
  std::optional<long> mu1;
  /// |30(-b + 1/2 + b2/3 + b3/5)| for shape (1/2, b2/3, b3/5).
  std::optional<long> mu2;
};

/// N([-b] + T(b1/a1) + T(b2/a2) + T(b3/a3)); fractions are (beta, alpha) pairs.
MontesinosBuild build_montesinos(long b, const std::vector<std::pair<long, long>>& fractions);

/// Splices the two diagrams at edge 1.
PDCode connected_sum(const PDCode& a, const PDCode& b);

}  // namespace qf
