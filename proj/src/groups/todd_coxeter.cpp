#include <algorithm>
#include <cstdint>

#include "qf/groups/coset_table.hpp"

namespace qf {

namespace {

using Index = std::int32_t;
constexpr Index kUndefined = -1;

struct TableFull {};

class Enumerator {
 public:
  Enumerator(const GroupPresentation& g, std::size_t cap) : cols_(2 * g.generators()), cap_(cap) {
    for (const auto& r : g.relators()) relators_.push_back(to_columns(r));
    add_coset();
  }

  std::vector<int> to_columns(const Word& w) const {
    std::vector<int> c;
    c.reserve(w.size());
    for (int l : w) c.push_back(letter_column(l));
    return c;
  }

  void run(const std::vector<std::vector<int>>& subgroup) {
    while (true) {
      try {
        for (const auto& w : subgroup) scan_and_fill(0, w, true);
        break;
      } catch (const TableFull&) {
        make_room(nullptr);
      }
    }
    std::size_t alpha = 0;
    while (alpha < size()) {
      try {
        close_coset(static_cast<Index>(alpha));
        ++alpha;
      } catch (const TableFull&) {
        make_room(&alpha);
      }
    }
    compact(nullptr);
  }

  // Live, complete table as action[column][coset].
  kernels::ActionTable actions() const {
    const std::size_t n = size();
    kernels::ActionTable a(cols_, std::vector<kernels::Element>(n));
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t x = 0; x < cols_; ++x) a[x][c] = static_cast<kernels::Element>(at(static_cast<Index>(c), static_cast<int>(x)));
    }
    return a;
  }

  std::size_t size() const { return parent_.size(); }

 private:
  Index& at(Index c, int x) { return table_[static_cast<std::size_t>(c) * cols_ + static_cast<std::size_t>(x)]; }
  Index at(Index c, int x) const { return table_[static_cast<std::size_t>(c) * cols_ + static_cast<std::size_t>(x)]; }
  bool live(Index c) const { return parent_[static_cast<std::size_t>(c)] == c; }

  Index add_coset() {
    const auto c = static_cast<Index>(parent_.size());
    parent_.push_back(c);
    table_.resize(table_.size() + cols_, kUndefined);
    ++live_;
    return c;
  }

  void define(Index c, int x) {
    if (size() >= cap_) throw TableFull{};
    const Index d = add_coset();
    at(c, x) = d;
    at(d, x ^ 1) = c;
  }

  void close_coset(Index alpha) {
    for (const auto& r : relators_) {
      if (!live(alpha)) return;
      scan_and_fill(alpha, r, true);
    }
    if (!live(alpha)) return;
    for (int x = 0; x < static_cast<int>(cols_); ++x) {
      if (at(alpha, x) == kUndefined) define(alpha, x);
    }
  }

  void scan_and_fill(Index alpha, const std::vector<int>& w, bool allow_define) {
    if (w.empty()) return;
    Index f = alpha, b = alpha;
    long i = 0, j = static_cast<long>(w.size()) - 1;
    while (true) {
      while (i <= j && at(f, w[static_cast<std::size_t>(i)]) != kUndefined) f = at(f, w[static_cast<std::size_t>(i++)]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && at(b, w[static_cast<std::size_t>(j)] ^ 1) != kUndefined) b = at(b, w[static_cast<std::size_t>(j--)] ^ 1);
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        const int x = w[static_cast<std::size_t>(i)];
        at(f, x) = b;
        at(b, x ^ 1) = f;
        return;
      }
      if (!allow_define) return;
      define(f, w[static_cast<std::size_t>(i)]);
    }
  }

  Index rep(Index k) {
    Index root = k;
    while (parent_[static_cast<std::size_t>(root)] != root) root = parent_[static_cast<std::size_t>(root)];
    while (parent_[static_cast<std::size_t>(k)] != root) {
      const Index next = parent_[static_cast<std::size_t>(k)];
      parent_[static_cast<std::size_t>(k)] = root;
      k = next;
    }
    return root;
  }

  void merge(Index k, Index l) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    const Index lo = std::min(k, l), hi = std::max(k, l);
    parent_[static_cast<std::size_t>(hi)] = lo;
    queue_.push_back(hi);
    --live_;
  }

  void coincidence(Index a, Index b) {
    queue_.clear();
    merge(a, b);
    for (std::size_t q = 0; q < queue_.size(); ++q) {
      const Index gamma = queue_[q];
      for (int x = 0; x < static_cast<int>(cols_); ++x) {
        const Index delta = at(gamma, x);
        if (delta == kUndefined) continue;
        at(delta, x ^ 1) = kUndefined;
        const Index mu = rep(gamma), nu = rep(delta);
        if (at(mu, x) != kUndefined) {
          merge(nu, at(mu, x));
        } else if (at(nu, x ^ 1) != kUndefined) {
          merge(mu, at(nu, x ^ 1));
        } else {
          at(mu, x) = nu;
          at(nu, x ^ 1) = mu;
        }
      }
    }
  }

  // Deduction-only pass over every live coset, then compaction.
  void make_room(std::size_t* alpha) {
    for (Index c = 0; c < static_cast<Index>(size()); ++c) {
      for (const auto& r : relators_) {
        if (!live(c)) break;
        scan_and_fill(c, r, false);
      }
    }
    compact(alpha);
    const std::size_t free = cap_ - size();
    if (free == 0 || free < cap_ / 64) throw Overflow(cap_);
  }

  // Renumbers live cosets densely, keeping their relative order.
  void compact(std::size_t* alpha) {
    std::vector<Index> fresh(size(), kUndefined);
    Index next = 0;
    for (std::size_t c = 0; c < size(); ++c) {
      if (live(static_cast<Index>(c))) fresh[c] = next++;
    }
    if (alpha) {
      std::size_t a = 0;
      for (std::size_t c = 0; c < *alpha && c < size(); ++c) a += fresh[c] != kUndefined;
      *alpha = a;
    }
    std::vector<Index> table(static_cast<std::size_t>(next) * cols_, kUndefined);
    for (std::size_t c = 0; c < size(); ++c) {
      if (fresh[c] == kUndefined) continue;
      for (std::size_t x = 0; x < cols_; ++x) {
        const Index v = table_[c * cols_ + x];
        table[static_cast<std::size_t>(fresh[c]) * cols_ + x] = v == kUndefined ? kUndefined : fresh[static_cast<std::size_t>(v)];
      }
    }
    table_ = std::move(table);
    parent_.resize(static_cast<std::size_t>(next));
    for (Index c = 0; c < next; ++c) parent_[static_cast<std::size_t>(c)] = c;
    live_ = static_cast<std::size_t>(next);
  }

  std::size_t cols_;
  std::size_t cap_;
  std::vector<std::vector<int>> relators_;
  std::vector<Index> table_;
  std::vector<Index> parent_;
  std::vector<Index> queue_;
  std::size_t live_ = 0;
};

int column_letter(int column) { return generator_letter(static_cast<std::size_t>(column / 2), column % 2 == 1); }

}  // namespace

kernels::Element CosetTable::act(kernels::Element coset, const Word& w) const {
  for (int l : w) coset = action[static_cast<std::size_t>(letter_column(l))][coset];
  return coset;
}

std::vector<int> CosetTable::columns(const Word& w) const {
  std::vector<int> c;
  c.reserve(w.size());
  for (int l : w) c.push_back(letter_column(l));
  return c;
}

void rebuild_spanning_tree(CosetTable& t) {
  const std::size_t n = t.cosets;
  constexpr auto kUnseen = ~kernels::Element{0};
  std::vector<kernels::Element> order{0};
  std::vector<kernels::Element> label(n, kUnseen);
  label[0] = 0;
  t.parent.assign(n, 0);
  t.parent_column.assign(n, -1);
  for (std::size_t k = 0; k < order.size(); ++k) {
    const kernels::Element c = order[k];
    for (std::size_t x = 0; x < t.action.size(); ++x) {
      const kernels::Element d = t.action[x][c];
      if (label[d] != kUnseen) continue;
      label[d] = static_cast<kernels::Element>(order.size());
      if (label[d] != d) throw IncompleteTable("coset table is not in standard BFS order");
      t.parent[d] = c;
      t.parent_column[d] = static_cast<int>(x);
      order.push_back(d);
    }
  }
  if (order.size() != n) throw IncompleteTable("coset table is not connected");
  t.representatives.assign(n, {});
  for (std::size_t c = 1; c < n; ++c) {
    t.representatives[c] = t.representatives[t.parent[c]];
    t.representatives[c].push_back(column_letter(t.parent_column[c]));
  }
}

void verify_coset_table(const GroupPresentation& g, const CosetTable& t) {
  const std::size_t n = t.cosets;
  if (t.action.size() != 2 * g.generators()) throw IncompleteTable("coset table has the wrong column count");
  for (std::size_t x = 0; x < t.action.size(); ++x) {
    if (t.action[x].size() != n) throw IncompleteTable("coset table column has the wrong length");
    for (std::size_t c = 0; c < n; ++c) {
      const auto d = t.action[x][c];
      if (d >= n || t.action[x ^ 1][d] != c) throw IncompleteTable("paired columns are not inverse permutations");
    }
  }
  std::vector<std::vector<int>> words;
  for (const auto& r : g.relators()) words.push_back(t.columns(r));
  const auto image = kernels::omp::word_action_table(t.action, words, n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t j = 0; j < words.size(); ++j) {
      if (image[c * words.size() + j] != c) {
        throw IncompleteTable("relator " + std::to_string(j) + " moves coset " + std::to_string(c));
      }
    }
  }
  for (const auto& w : t.subgroup) {
    if (t.act(0, w) != 0) throw IncompleteTable("subgroup generator does not fix coset 0");
  }
}

CosetTable todd_coxeter(const GroupPresentation& g, const std::vector<Word>& subgroup, std::size_t max_cosets) {
  if (max_cosets == 0) throw Overflow(0);
  std::vector<Word> reduced;
  for (const auto& w : subgroup) {
    g.check_word(w);
    Word r = free_reduce(w);
    if (!r.empty()) reduced.push_back(std::move(r));
  }
  Enumerator e(g, max_cosets);
  std::vector<std::vector<int>> sub_cols;
  for (const auto& w : reduced) sub_cols.push_back(e.to_columns(w));
  e.run(sub_cols);
  const auto raw = e.actions();
  const std::size_t n = e.size();

  // Standardize: renumber in BFS discovery order from coset 0.
  std::vector<kernels::Element> order{0};
  constexpr auto kUnseen = ~kernels::Element{0};
  std::vector<kernels::Element> label(n, kUnseen);
  label[0] = 0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (std::size_t x = 0; x < raw.size(); ++x) {
      const auto d = raw[x][order[k]];
      if (label[d] == kUnseen) {
        label[d] = static_cast<kernels::Element>(order.size());
        order.push_back(d);
      }
    }
  }
  CosetTable t;
  t.generators = g.generators();
  t.cosets = order.size();
  t.subgroup = reduced;
  t.action.assign(raw.size(), std::vector<kernels::Element>(t.cosets));
  for (std::size_t x = 0; x < raw.size(); ++x) {
    for (std::size_t c = 0; c < t.cosets; ++c) t.action[x][c] = label[raw[x][order[c]]];
  }
  rebuild_spanning_tree(t);
  verify_coset_table(g, t);
  return t;
}

}  // namespace qf
