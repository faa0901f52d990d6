#pragma once

// Data-parallel inner loops of the toolkit.
//
// Every kernel exists twice: `serial::` is the straightforward reference and
// `omp::` is the OpenMP version the library actually calls. Both must return
// identical results; tests compare them and bench/ times them.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qf/linalg/sparse_int_matrix.hpp"

namespace qf::kernels {

using Element = std::uint32_t;

enum class AxiomKind { none, idempotence, bijectivity, distributivity };

/// First axiom failure of a row-major table (table[x*n+y] = x*y).
/// Checks run in the order idempotence, bijectivity, distributivity and
/// report the lexicographically least witness within the first failing kind.
/// For bijectivity, (x, y, z) = (first x, column y, later x' with equal image).
struct AxiomWitness {
  AxiomKind kind = AxiomKind::none;
  Element x = 0;
  Element y = 0;
  Element z = 0;
};

struct SmallTriplet {
  std::uint32_t row;
  std::uint32_t col;
  std::int32_t value;
};

/// Entry [i*words.size()+j] is coset i acted on (from the right) by words[j].
/// `actions[c]` is the permutation of signed generator column c.
using ActionTable = std::vector<std::vector<Element>>;

namespace serial {

AxiomWitness first_axiom_violation(std::span<const Element> table, std::size_t n);
std::vector<Element> galex_table(std::span<const Element> mult, std::span<const Element> inverse,
                                 std::span<const Element> phi, std::size_t n);
std::vector<Element> word_action_table(const ActionTable& actions,
                                       std::span<const std::vector<int>> words, std::size_t n);
std::vector<Element> regular_multiplication_table(const ActionTable& actions,
                                                  std::span<const Element> parent,
                                                  std::span<const int> parent_column,
                                                  std::span<const Element> order, std::size_t n);
std::vector<SmallTriplet> quandle_d3(std::span<const Element> table, std::size_t n);
bool product_is_zero(const SparseIntMatrix& a, const SparseIntMatrix& b);

}  // namespace serial

namespace omp {

AxiomWitness first_axiom_violation(std::span<const Element> table, std::size_t n);
std::vector<Element> galex_table(std::span<const Element> mult, std::span<const Element> inverse,
                                 std::span<const Element> phi, std::size_t n);
std::vector<Element> word_action_table(const ActionTable& actions,
                                       std::span<const std::vector<int>> words, std::size_t n);
std::vector<Element> regular_multiplication_table(const ActionTable& actions,
                                                  std::span<const Element> parent,
                                                  std::span<const int> parent_column,
                                                  std::span<const Element> order, std::size_t n);
std::vector<SmallTriplet> quandle_d3(std::span<const Element> table, std::size_t n);
bool product_is_zero(const SparseIntMatrix& a, const SparseIntMatrix& b);

int max_threads();

}  // namespace omp

// Basis indexing shared by the boundary kernels and the homology module.
// Pairs (x, y) with x != y and triples (x, y, z) with x != y, y != z are
// numbered lexicographically.
inline std::size_t pair_index(std::size_t x, std::size_t y, std::size_t n) {
  return x * (n - 1) + (y < x ? y : y - 1);
}
inline std::size_t triple_index(std::size_t x, std::size_t y, std::size_t z, std::size_t n) {
  return pair_index(x, y, n) * (n - 1) + (z < y ? z : z - 1);
}

}  // namespace qf::kernels
