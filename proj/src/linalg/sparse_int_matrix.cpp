#include "qf/linalg/sparse_int_matrix.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace qf {

SparseIntMatrix::SparseIntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

SparseIntMatrix::SparseIntMatrix(std::size_t rows, std::size_t cols, std::vector<Triplet> entries)
    : rows_(rows), cols_(cols) {
  for (const auto& t : entries) {
    if (t.row >= rows || t.col >= cols) {
      throw LinalgError("SparseIntMatrix: entry (" + std::to_string(t.row) + "," +
                        std::to_string(t.col) + ") out of range");
    }
  }
  std::sort(entries.begin(), entries.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  for (auto& t : entries) {
    if (!entries_.empty() && entries_.back().row == t.row && entries_.back().col == t.col) {
      entries_.back().value += t.value;
    } else {
      entries_.push_back(std::move(t));
    }
  }
  std::erase_if(entries_, [](const Triplet& t) { return t.value == 0; });
}

SparseIntMatrix SparseIntMatrix::from_dense(const std::vector<std::vector<long>>& dense) {
  const std::size_t rows = dense.size();
  const std::size_t cols = rows == 0 ? 0 : dense.front().size();
  std::vector<Triplet> entries;
  for (std::size_t r = 0; r < rows; ++r) {
    if (dense[r].size() != cols) throw LinalgError("from_dense: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) {
      if (dense[r][c] != 0) entries.push_back({r, c, Integer(dense[r][c])});
    }
  }
  return {rows, cols, std::move(entries)};
}

SparseIntMatrix SparseIntMatrix::identity(std::size_t n) {
  std::vector<Triplet> entries;
  for (std::size_t i = 0; i < n; ++i) entries.push_back({i, i, Integer(1)});
  return {n, n, std::move(entries)};
}

Integer SparseIntMatrix::at(std::size_t r, std::size_t c) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair{r, c},
                             [](const Triplet& t, const std::pair<std::size_t, std::size_t>& key) {
                               return t.row != key.first ? t.row < key.first : t.col < key.second;
                             });
  if (it != entries_.end() && it->row == r && it->col == c) return it->value;
  return 0;
}

SparseIntMatrix SparseIntMatrix::transposed() const {
  std::vector<Triplet> t;
  t.reserve(entries_.size());
  for (const auto& e : entries_) t.push_back({e.col, e.row, e.value});
  return {cols_, rows_, std::move(t)};
}

std::vector<std::vector<Integer>> SparseIntMatrix::to_dense() const {
  std::vector<std::vector<Integer>> d(rows_, std::vector<Integer>(cols_, 0));
  for (const auto& e : entries_) d[e.row][e.col] = e.value;
  return d;
}

bool operator==(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.entries_.size() != b.entries_.size()) return false;
  for (std::size_t i = 0; i < a.entries_.size(); ++i) {
    const auto& x = a.entries_[i];
    const auto& y = b.entries_[i];
    if (x.row != y.row || x.col != y.col || x.value != y.value) return false;
  }
  return true;
}

SparseIntMatrix multiply(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  if (a.cols() != b.rows()) throw LinalgError("multiply: dimension mismatch");
  std::vector<std::vector<const Triplet*>> b_rows(b.rows());
  for (const auto& t : b.entries()) b_rows[t.row].push_back(&t);
  std::vector<Triplet> out;
  std::map<std::size_t, Integer> row_acc;
  std::size_t current = a.rows();
  auto flush = [&] {
    for (auto& [c, v] : row_acc) {
      if (v != 0) out.push_back({current, c, v});
    }
    row_acc.clear();
  };
  for (const auto& ta : a.entries()) {
    if (ta.row != current) {
      flush();
      current = ta.row;
    }
    for (const Triplet* tb : b_rows[ta.col]) row_acc[tb->col] += ta.value * tb->value;
  }
  flush();
  return {a.rows(), b.cols(), std::move(out)};
}

void write_coordinate(std::ostream& out, const SparseIntMatrix& m) {
  out << m.rows() << ' ' << m.cols() << ' ' << m.nnz() << '\n';
  for (const auto& t : m.entries()) out << t.row << ' ' << t.col << ' ' << t.value << '\n';
}

SparseIntMatrix read_coordinate(std::istream& in) {
  std::size_t rows = 0, cols = 0, nnz = 0;
  if (!(in >> rows >> cols >> nnz)) throw LinalgError("coordinate format: bad header");
  std::vector<Triplet> entries;
  entries.reserve(nnz);
  for (std::size_t i = 0; i < nnz; ++i) {
    Triplet t;
    std::string value;
    if (!(in >> t.row >> t.col >> value)) {
      throw LinalgError("coordinate format: expected " + std::to_string(nnz) + " entries, got " +
                        std::to_string(i));
    }
    if (t.value.set_str(value, 10) != 0) throw LinalgError("coordinate format: bad value '" + value + "'");
    entries.push_back(std::move(t));
  }
  return {rows, cols, std::move(entries)};
}

}  // namespace qf
