#include <algorithm>
#include <array>
#include <atomic>
#include <limits>
#include <optional>

#include <omp.h>

#include "qf/kernels.hpp"

namespace qf::kernels::omp {

namespace {

constexpr Element kNone = std::numeric_limits<Element>::max();

// Per-index results are written to their own slot and scanned afterwards, so
// the reported witness does not depend on thread scheduling.
template <typename Witness, typename Fn>
std::optional<Witness> first_of(std::size_t count, Fn&& per_index) {
  std::vector<std::optional<Witness>> found(count);
  std::atomic<std::size_t> cutoff{count};
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t i = 0; i < count; ++i) {
    if (i > cutoff.load(std::memory_order_relaxed)) continue;
    found[i] = per_index(i);
    if (found[i]) {
      std::size_t cur = cutoff.load();
      while (i < cur && !cutoff.compare_exchange_weak(cur, i)) {
      }
    }
  }
  for (auto& f : found) {
    if (f) return f;
  }
  return std::nullopt;
}

}  // namespace

int max_threads() { return omp_get_max_threads(); }

AxiomWitness first_axiom_violation(std::span<const Element> table, std::size_t n) {
  if (auto w = first_of<AxiomWitness>(n, [&](std::size_t x) -> std::optional<AxiomWitness> {
        const auto xe = static_cast<Element>(x);
        if (table[x * n + x] != xe) return AxiomWitness{AxiomKind::idempotence, xe, xe, table[x * n + x]};
        return std::nullopt;
      })) {
    return *w;
  }
  if (auto w = first_of<AxiomWitness>(n, [&](std::size_t y) -> std::optional<AxiomWitness> {
        std::vector<Element> seen_at(n, kNone);
        for (Element x = 0; x < n; ++x) {
          const Element img = table[x * n + y];
          if (seen_at[img] != kNone) {
            return AxiomWitness{AxiomKind::bijectivity, seen_at[img], static_cast<Element>(y), x};
          }
          seen_at[img] = x;
        }
        return std::nullopt;
      })) {
    return *w;
  }
  if (auto w = first_of<AxiomWitness>(n, [&](std::size_t x) -> std::optional<AxiomWitness> {
        for (std::size_t y = 0; y < n; ++y) {
          const Element xy = table[x * n + y];
          for (std::size_t z = 0; z < n; ++z) {
            if (table[xy * n + z] != table[table[x * n + z] * n + table[y * n + z]]) {
              return AxiomWitness{AxiomKind::distributivity, static_cast<Element>(x),
                                  static_cast<Element>(y), static_cast<Element>(z)};
            }
          }
        }
        return std::nullopt;
      })) {
    return *w;
  }
  return {};
}

std::vector<Element> galex_table(std::span<const Element> mult, std::span<const Element> inverse,
                                 std::span<const Element> phi, std::size_t n) {
  std::vector<Element> out(n * n);
#pragma omp parallel for schedule(static)
  for (std::size_t x = 0; x < n; ++x) {
    const Element* row = mult.data() + x * n;
    for (std::size_t y = 0; y < n; ++y) {
      out[x * n + y] = mult[phi[row[inverse[y]]] * n + y];
    }
  }
  return out;
}

std::vector<Element> word_action_table(const ActionTable& actions,
                                       std::span<const std::vector<int>> words, std::size_t n) {
  const std::size_t w = words.size();
  std::vector<Element> out(n * w);
  // Column-wise: compose each word once as a permutation of all cosets.
#pragma omp parallel for schedule(dynamic, 4)
  for (std::size_t j = 0; j < w; ++j) {
    std::vector<Element> image(n);
    for (std::size_t i = 0; i < n; ++i) image[i] = static_cast<Element>(i);
    for (int col : words[j]) {
      const auto& perm = actions[static_cast<std::size_t>(col)];
      for (auto& v : image) v = perm[v];
    }
    for (std::size_t i = 0; i < n; ++i) out[i * w + j] = image[i];
  }
  return out;
}

std::vector<Element> regular_multiplication_table(const ActionTable& actions,
                                                  std::span<const Element> parent,
                                                  std::span<const int> parent_column,
                                                  std::span<const Element> order, std::size_t n) {
  std::vector<Element> out(n * n);
#pragma omp parallel for schedule(static)
  for (std::size_t a = 0; a < n; ++a) {
    Element* row = out.data() + a * n;
    for (Element b : order) {
      row[b] = parent_column[b] < 0
                   ? static_cast<Element>(a)
                   : actions[static_cast<std::size_t>(parent_column[b])][row[parent[b]]];
    }
  }
  return out;
}

std::vector<SmallTriplet> quandle_d3(std::span<const Element> table, std::size_t n) {
  if (n < 2) return {};
  std::vector<std::vector<SmallTriplet>> blocks(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t x = 0; x < n; ++x) {
    auto& block = blocks[x];
    block.reserve((n - 1) * (n - 1) * 4);
    for (std::size_t y = 0; y < n; ++y) {
      if (y == x) continue;
      const std::size_t xy = table[x * n + y];
      for (std::size_t z = 0; z < n; ++z) {
        if (z == y) continue;
        const auto col = static_cast<std::uint32_t>(triple_index(x, y, z, n));
        const std::size_t xz = table[x * n + z];
        const std::size_t yz = table[y * n + z];
        // At most four terms; merge equal rows in place and keep them sorted.
        std::array<std::pair<std::uint32_t, std::int32_t>, 4> terms{};
        std::size_t count = 0;
        auto add = [&](std::size_t a, std::size_t b, std::int32_t sign) {
          if (a == b) return;
          const auto row = static_cast<std::uint32_t>(pair_index(a, b, n));
          for (std::size_t k = 0; k < count; ++k) {
            if (terms[k].first == row) {
              terms[k].second += sign;
              return;
            }
          }
          terms[count++] = {row, sign};
        };
        add(x, z, +1);
        add(xy, z, -1);
        add(x, y, -1);
        add(xz, yz, +1);
        std::sort(terms.begin(), terms.begin() + static_cast<std::ptrdiff_t>(count));
        for (std::size_t k = 0; k < count; ++k) {
          if (terms[k].second != 0) block.push_back({terms[k].first, col, terms[k].second});
        }
      }
    }
  }
  std::vector<SmallTriplet> out;
  for (auto& b : blocks) out.insert(out.end(), b.begin(), b.end());
  return out;
}

bool product_is_zero(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  if (a.cols() != b.rows()) throw LinalgError("product_is_zero: dimension mismatch");
  // Column-compressed views of both operands.
  auto by_column = [](const SparseIntMatrix& m) {
    std::vector<std::vector<const Triplet*>> cols(m.cols());
    for (const auto& t : m.entries()) cols[t.col].push_back(&t);
    return cols;
  };
  const auto a_cols = by_column(a);
  const auto b_cols = by_column(b);
  std::atomic<bool> zero{true};
#pragma omp parallel
  {
    std::vector<Integer> acc(a.rows());
    std::vector<std::size_t> touched;
#pragma omp for schedule(dynamic, 64)
    for (std::size_t j = 0; j < b_cols.size(); ++j) {
      if (!zero.load(std::memory_order_relaxed)) continue;
      touched.clear();
      for (const Triplet* tb : b_cols[j]) {
        for (const Triplet* ta : a_cols[tb->row]) {
          if (acc[ta->row] == 0) touched.push_back(ta->row);
          acc[ta->row] += ta->value * tb->value;
        }
      }
      for (std::size_t r : touched) {
        if (acc[r] != 0) zero.store(false);
        acc[r] = 0;
      }
    }
  }
  return zero.load();
}

}  // namespace qf::kernels::omp
