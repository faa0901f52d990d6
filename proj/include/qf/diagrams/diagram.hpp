#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "qf/core/terms.hpp"
#include "qf/diagrams/pd_code.hpp"
#include "qf/groups/knot_groups.hpp"

namespace qf {

class OrientationInconsistent : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Crossing chi_i met as the i-th undercrossing along the orientation.
struct DiagramCrossing {
  std::size_t pd_index = 0;
  std::size_t under_in = 0;
  std::size_t under_out = 0;
  std::size_t over = 0;
  int sign = 1;
};

/// Oriented diagram with arcs a_0..a_{m-1}; a_0 carries edge 1 and crossing i
/// takes a_i to a_{i+1 mod m}.
struct Diagram {
  PDCode pd;
  std::vector<DiagramCrossing> crossings;
  /// Arc of every edge label (index 0 unused).
  std::vector<std::size_t> arc_of_edge;
  long writhe = 0;

  std::size_t arcs() const { return crossings.size(); }
};

/// Orients from edge 1 (it leaves the crossing where label 2 sits opposite it
/// when such a crossing exists) and numbers arcs along the orientation.
/// Throws OrientationInconsistent if an understrand is entered from the
/// position where the code says it leaves.
Diagram analyze(const PDCode& pd);

/// One generator per arc and one relator x_out = x_over^-e x_in x_over^e per
/// crossing. The longitude multiplies x_over^e over the undercrossings read
/// from a_0 and then x_0^-writhe.
PeripheralPresentation wirtinger_with_peripherals(const Diagram& d);

/// Words g_i with x_i = g_i^-1 x_0 g_i, g_0 empty; arc a_i corresponds to the
/// coset P g_i of the knot n-quandle.
std::vector<Word> arc_words(const Diagram& d);

struct QuandlePresentation {
  std::vector<std::string> generators;
  std::vector<Equation> relators;
};

/// Relators a_{i-1} *^e a_k = a_i per crossing, plus a_i *^n a_0 = a_i for
/// i >= 1 when n >= 1.
QuandlePresentation quandle_presentation(const Diagram& d, long n);

}  // namespace qf
