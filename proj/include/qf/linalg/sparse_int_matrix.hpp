#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qf {

using Integer = mpz_class;

struct Triplet {
  std::size_t row = 0;
  std::size_t col = 0;
  Integer value;
};

class LinalgError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact integer matrix in coordinate form.
///
/// Entries are kept sorted by (row, col) with no duplicate coordinates and no
/// stored zeros; the constructors enforce this by summing duplicates.
class SparseIntMatrix {
 public:
  SparseIntMatrix() = default;
  SparseIntMatrix(std::size_t rows, std::size_t cols);
  SparseIntMatrix(std::size_t rows, std::size_t cols, std::vector<Triplet> entries);

  static SparseIntMatrix from_dense(const std::vector<std::vector<long>>& dense);
  static SparseIntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const { return entries_.size(); }
  const std::vector<Triplet>& entries() const { return entries_; }

  Integer at(std::size_t r, std::size_t c) const;
  SparseIntMatrix transposed() const;
  std::vector<std::vector<Integer>> to_dense() const;
  bool is_zero() const { return entries_.empty(); }

  friend bool operator==(const SparseIntMatrix& a, const SparseIntMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Triplet> entries_;
};

SparseIntMatrix multiply(const SparseIntMatrix& a, const SparseIntMatrix& b);

// Coordinate text format: header "rows cols nnz", then one "r c v" line per entry.
void write_coordinate(std::ostream& out, const SparseIntMatrix& m);
SparseIntMatrix read_coordinate(std::istream& in);

}  // namespace qf
