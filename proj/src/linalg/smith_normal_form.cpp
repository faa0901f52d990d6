#include "qf/linalg/smith_normal_form.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "qf/kernels.hpp"

namespace qf {

std::vector<Integer> invariant_factors_from_diagonal(std::vector<Integer> d) {
  for (auto& v : d) v = abs(v);
  std::erase_if(d, [](const Integer& v) { return v == 0; });
  std::sort(d.begin(), d.end());
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      Integer g = gcd(d[i], d[j]);
      if (g == d[i]) continue;
      Integer l = (d[i] / g) * d[j];
      d[i] = g;
      d[j] = l;
    }
  }
  return d;
}

SNFResult smith_normal_form_dense(std::vector<std::vector<Integer>> a) {
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? 0 : a.front().size();
  std::vector<Integer> diagonal;
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // Smallest nonzero magnitude in the trailing block becomes the pivot.
    auto find_min = [&](bool only_cross) -> std::optional<std::pair<std::size_t, std::size_t>> {
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t i = t; i < m; ++i) {
        for (std::size_t j = t; j < n; ++j) {
          if (only_cross && i != t && j != t) continue;
          if (a[i][j] == 0) continue;
          if (!best || abs(a[i][j]) < abs(a[best->first][best->second])) best = {{i, j}};
        }
      }
      return best;
    };
    auto pos = find_min(false);
    if (!pos) break;
    while (true) {
      std::swap(a[t], a[pos->first]);
      for (auto& row : a) std::swap(row[t], row[pos->second]);
      bool residue = false;
      const Integer pivot = a[t][t];
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a[i][t] == 0) continue;
        Integer q = a[i][t] / pivot;
        if (q != 0) {
          for (std::size_t j = t; j < n; ++j) a[i][j] -= q * a[t][j];
        }
        if (a[i][t] != 0) residue = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        Integer q = a[t][j] / pivot;
        if (q != 0) {
          for (std::size_t i = t; i < m; ++i) a[i][j] -= q * a[i][t];
        }
        if (a[t][j] != 0) residue = true;
      }
      if (!residue) break;
      pos = find_min(true);
    }
    diagonal.push_back(a[t][t]);
  }
  SNFResult r;
  r.rank = diagonal.size();
  r.factors = invariant_factors_from_diagonal(std::move(diagonal));
  return r;
}

namespace {

// Row-major sparse workspace with column occupancy for the unit phase.
class Workspace {
 public:
  explicit Workspace(const SparseIntMatrix& m) : rows_(m.rows()), cols_(m.cols()) {
    for (const auto& t : m.entries()) {
      rows_[t.row].emplace(t.col, t.value);
      cols_[t.col].insert(t.row);
    }
  }

  // Unit entry of least Markowitz cost, ties on (row, col).
  std::optional<std::pair<std::size_t, std::size_t>> best_unit() const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    std::size_t best_cost = 0;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::size_t row_fill = rows_[r].size() - (rows_[r].empty() ? 0 : 1);
      for (const auto& [c, v] : rows_[r]) {
        if (v != 1 && v != -1) continue;
        const std::size_t cost = row_fill * (cols_[c].size() - 1);
        if (!best || cost < best_cost) {
          best = {{r, c}};
          best_cost = cost;
          if (cost == 0) return best;
        }
      }
    }
    return best;
  }

  // Clears column pc with row operations; the pivot row then only needs
  // column operations that touch nothing else, so it is dropped.
  void eliminate_unit(std::size_t p, std::size_t pc) {
    const Integer u = rows_[p].at(pc);
    const std::vector<std::size_t> others(cols_[pc].begin(), cols_[pc].end());
    for (std::size_t r : others) {
      if (r == p) continue;
      const Integer f = rows_[r].at(pc) * u;
      add_row_multiple(r, p, -f);
    }
    drop_row(p);
  }

  std::vector<std::vector<Integer>> to_dense() const {
    std::vector<std::size_t> col_ids;
    std::map<std::size_t, std::size_t> col_pos;
    for (std::size_t c = 0; c < cols_.size(); ++c) {
      if (!cols_[c].empty()) {
        col_pos[c] = col_ids.size();
        col_ids.push_back(c);
      }
    }
    std::vector<std::vector<Integer>> dense;
    for (const auto& row : rows_) {
      if (row.empty()) continue;
      std::vector<Integer> d(col_ids.size(), 0);
      for (const auto& [c, v] : row) d[col_pos.at(c)] = v;
      dense.push_back(std::move(d));
    }
    return dense;
  }

 private:
  void set(std::size_t r, std::size_t c, Integer v) {
    if (v == 0) {
      if (rows_[r].erase(c) != 0) cols_[c].erase(r);
    } else {
      auto [it, inserted] = rows_[r].insert_or_assign(c, std::move(v));
      if (inserted) cols_[c].insert(r);
    }
  }

  Integer get(std::size_t r, std::size_t c) const {
    auto it = rows_[r].find(c);
    return it == rows_[r].end() ? Integer(0) : it->second;
  }

  // row_r += f * row_p
  void add_row_multiple(std::size_t r, std::size_t p, const Integer& f) {
    for (const auto& [c, v] : rows_[p]) set(r, c, get(r, c) + f * v);
  }

  void drop_row(std::size_t p) {
    for (const auto& [c, v] : rows_[p]) cols_[c].erase(p);
    rows_[p].clear();
  }

  std::vector<std::map<std::size_t, Integer>> rows_;
  std::vector<std::set<std::size_t>> cols_;
};

}  // namespace

RankCertificate bareiss_rank(std::vector<std::vector<Integer>> a) {
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? 0 : a.front().size();
  RankCertificate cert;
  Integer prev = 1;
  for (std::size_t k = 0; k < std::min(m, n); ++k) {
    // Smallest nonzero magnitude in the trailing block, first in row-major order.
    std::optional<std::pair<std::size_t, std::size_t>> pos;
    for (std::size_t i = k; i < m; ++i) {
      for (std::size_t j = k; j < n; ++j) {
        if (a[i][j] != 0 && (!pos || abs(a[i][j]) < abs(a[pos->first][pos->second]))) pos = {{i, j}};
      }
    }
    if (!pos) break;
    std::swap(a[k], a[pos->first]);
    for (auto& row : a) std::swap(row[k], row[pos->second]);
    for (std::size_t i = k + 1; i < m; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
    cert.rank = k + 1;
  }
  cert.minor = abs(prev);
  return cert;
}

namespace {

Integer mod(const Integer& v, const Integer& d) {
  Integer r;
  mpz_mod(r.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
  return r;
}

}  // namespace

SNFResult smith_normal_form_modular(std::vector<std::vector<Integer>> a) {
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? 0 : a.front().size();
  const RankCertificate cert = bareiss_rank(a);
  SNFResult result;
  result.rank = cert.rank;
  if (cert.rank == 0) return result;
  // Work with [a | D*I]: its invariant factors are d_1..d_r followed by D
  // repeated, so any entry may be reduced mod D without changing d_1..d_r.
  const Integer& d = cert.minor;
  for (auto& row : a) {
    for (auto& v : row) v = mod(v, d);
  }
  auto row_combine = [&](std::size_t p, std::size_t r, std::size_t from, const Integer& s, const Integer& t,
                         const Integer& u, const Integer& v) {
    for (std::size_t j = from; j < n; ++j) {
      const Integer xp = a[p][j], xr = a[r][j];
      a[p][j] = mod(s * xp + t * xr, d);
      a[r][j] = mod(u * xp + v * xr, d);
    }
  };
  auto col_combine = [&](std::size_t p, std::size_t c, std::size_t from, const Integer& s, const Integer& t,
                         const Integer& u, const Integer& v) {
    for (std::size_t i = from; i < m; ++i) {
      const Integer xp = a[i][p], xc = a[i][c];
      a[i][p] = mod(s * xp + t * xc, d);
      a[i][c] = mod(u * xp + v * xc, d);
    }
  };

  std::vector<Integer> diagonal;
  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    std::optional<std::pair<std::size_t, std::size_t>> pos;
    for (std::size_t i = t; i < m; ++i) {
      for (std::size_t j = t; j < n; ++j) {
        if (a[i][j] != 0 && (!pos || a[i][j] < a[pos->first][pos->second])) pos = {{i, j}};
      }
    }
    if (!pos) break;
    std::swap(a[t], a[pos->first]);
    for (auto& row : a) std::swap(row[t], row[pos->second]);
    bool clear = false;
    while (!clear) {
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a[i][t] == 0) continue;
        const Integer p = a[t][t], b = a[i][t];
        Integer g, s, u;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), u.get_mpz_t(), p.get_mpz_t(), b.get_mpz_t());
        if (g == p) {
          row_combine(t, i, t, 1, 0, -(b / p), 1);
        } else {
          row_combine(t, i, t, s, u, -(b / g), p / g);
        }
      }
      clear = true;
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        const Integer p = a[t][t], b = a[t][j];
        Integer g, s, u;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), u.get_mpz_t(), p.get_mpz_t(), b.get_mpz_t());
        if (g == p) {
          col_combine(t, j, t, 1, 0, -(b / p), 1);
        } else {
          col_combine(t, j, t, s, u, -(b / g), p / g);
          clear = false;
        }
      }
    }
    Integer g;
    mpz_gcd(g.get_mpz_t(), a[t][t].get_mpz_t(), d.get_mpz_t());
    diagonal.push_back(g);
  }
  for (std::size_t i = t; i < m; ++i) diagonal.push_back(d);
  auto chain = invariant_factors_from_diagonal(std::move(diagonal));
  chain.resize(cert.rank);
  result.factors = std::move(chain);
  return result;
}

SNFResult smith_normal_form(const SparseIntMatrix& m) {
  Workspace w(m);
  std::size_t units = 0;
  while (auto pivot = w.best_unit()) {
    w.eliminate_unit(pivot->first, pivot->second);
    ++units;
  }
  SNFResult rest = smith_normal_form_modular(w.to_dense());
  SNFResult r;
  r.rank = units + rest.rank;
  r.factors.assign(units, Integer(1));
  r.factors.insert(r.factors.end(), rest.factors.begin(), rest.factors.end());
  r.factors = invariant_factors_from_diagonal(std::move(r.factors));
  return r;
}

AbelianGroup homology_of_pair(const SparseIntMatrix& d_low, const SparseIntMatrix& d_high) {
  if (d_low.cols() != d_high.rows()) {
    throw NotAComplex("homology_of_pair: d_low has " + std::to_string(d_low.cols()) +
                      " columns but d_high has " + std::to_string(d_high.rows()) + " rows");
  }
  if (!kernels::omp::product_is_zero(d_low, d_high)) {
    throw NotAComplex("homology_of_pair: d_low * d_high != 0");
  }
  const std::size_t rank_low = smith_normal_form(d_low).rank;
  const SNFResult high = smith_normal_form(d_high);
  const std::size_t kernel_dim = d_low.cols() - rank_low;
  return abelian_group_from_factors(kernel_dim - high.rank, high.factors);
}

}  // namespace qf
