#include <map>

#include "qf/kernels.hpp"

namespace qf::kernels::serial {

AxiomWitness first_axiom_violation(std::span<const Element> table, std::size_t n) {
  for (Element x = 0; x < n; ++x) {
    if (table[x * n + x] != x) return {AxiomKind::idempotence, x, x, table[x * n + x]};
  }
  for (Element y = 0; y < n; ++y) {
    std::vector<Element> seen_at(n, static_cast<Element>(n));
    for (Element x = 0; x < n; ++x) {
      const Element img = table[x * n + y];
      if (seen_at[img] != n) return {AxiomKind::bijectivity, seen_at[img], y, x};
      seen_at[img] = x;
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        const Element lhs = table[table[x * n + y] * n + z];
        const Element rhs = table[table[x * n + z] * n + table[y * n + z]];
        if (lhs != rhs) return {AxiomKind::distributivity, x, y, z};
      }
    }
  }
  return {};
}

std::vector<Element> galex_table(std::span<const Element> mult, std::span<const Element> inverse,
                                 std::span<const Element> phi, std::size_t n) {
  std::vector<Element> out(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Element xy_inv = mult[x * n + inverse[y]];
      out[x * n + y] = mult[phi[xy_inv] * n + y];
    }
  }
  return out;
}

std::vector<Element> word_action_table(const ActionTable& actions,
                                       std::span<const std::vector<int>> words, std::size_t n) {
  const std::size_t w = words.size();
  std::vector<Element> out(n * w);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < w; ++j) {
      Element c = static_cast<Element>(i);
      for (int col : words[j]) c = actions[static_cast<std::size_t>(col)][c];
      out[i * w + j] = c;
    }
  }
  return out;
}

std::vector<Element> regular_multiplication_table(const ActionTable& actions,
                                                  std::span<const Element> parent,
                                                  std::span<const int> parent_column,
                                                  std::span<const Element> order, std::size_t n) {
  std::vector<Element> out(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (Element b : order) {
      if (parent_column[b] < 0) {
        out[a * n + b] = static_cast<Element>(a);
      } else {
        const Element via = out[a * n + parent[b]];
        out[a * n + b] = actions[static_cast<std::size_t>(parent_column[b])][via];
      }
    }
  }
  return out;
}

std::vector<SmallTriplet> quandle_d3(std::span<const Element> table, std::size_t n) {
  std::vector<SmallTriplet> out;
  if (n < 2) return out;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (y == x) continue;
      for (std::size_t z = 0; z < n; ++z) {
        if (z == y) continue;
        const auto col = static_cast<std::uint32_t>(triple_index(x, y, z, n));
        std::map<std::uint32_t, std::int32_t> column;
        auto add = [&](std::size_t a, std::size_t b, int sign) {
          if (a != b) column[static_cast<std::uint32_t>(pair_index(a, b, n))] += sign;
        };
        const std::size_t xy = table[x * n + y];
        const std::size_t xz = table[x * n + z];
        const std::size_t yz = table[y * n + z];
        add(x, z, +1);
        add(xy, z, -1);
        add(x, y, -1);
        add(xz, yz, +1);
        for (auto [row, v] : column) {
          if (v != 0) out.push_back({row, col, v});
        }
      }
    }
  }
  return out;
}

bool product_is_zero(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  if (a.cols() != b.rows()) throw LinalgError("product_is_zero: dimension mismatch");
  std::map<std::pair<std::size_t, std::size_t>, Integer> product;
  for (const auto& ea : a.entries()) {
    for (const auto& eb : b.entries()) {
      if (ea.col == eb.row) product[{ea.row, eb.col}] += ea.value * eb.value;
    }
  }
  for (const auto& [coord, v] : product) {
    if (v != 0) return false;
  }
  return true;
}

}  // namespace qf::kernels::serial
