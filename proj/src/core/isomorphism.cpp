#include "qf/core/isomorphism.hpp"

#include <algorithm>

namespace qf {

namespace {

struct Profile {
  std::size_t orbit_size;
  std::vector<std::size_t> cycles;
  auto operator<=>(const Profile&) const = default;
};

std::vector<Profile> profiles(const FiniteQuandle& q) {
  std::vector<Profile> p(q.size());
  for (const auto& orbit : components(q)) {
    for (Element x : orbit) p[x].orbit_size = orbit.size();
  }
  for (Element x = 0; x < q.size(); ++x) p[x].cycles = column_cycle_type(q, x);
  return p;
}

class Search {
 public:
  Search(const FiniteQuandle& a, const FiniteQuandle& b)
      : a_(a), b_(b), n_(a.size()), fwd_(n_, kUnset), back_(n_, kUnset) {
    const auto pa = profiles(a);
    const auto pb = profiles(b);
    candidates_.resize(n_);
    for (Element x = 0; x < n_; ++x) {
      for (Element y = 0; y < n_; ++y) {
        if (pa[x] == pb[y]) candidates_[x].push_back(y);
      }
    }
    compatible_.assign(n_ * n_, false);
    for (Element x = 0; x < n_; ++x) {
      for (Element y : candidates_[x]) compatible_[x * n_ + y] = true;
    }
  }

  std::optional<std::vector<Element>> run() {
    if (dfs()) return fwd_;
    return std::nullopt;
  }

 private:
  static constexpr Element kUnset = ~Element{0};

  bool dfs() {
    Element x = 0;
    while (x < n_ && fwd_[x] != kUnset) ++x;
    if (x == n_) return true;
    for (Element y : candidates_[x]) {
      if (back_[y] != kUnset) continue;
      const std::size_t mark = trail_.size();
      if (assign(x, y) && close(mark) && dfs()) return true;
      undo(mark);
    }
    return false;
  }

  bool assign(Element x, Element y) {
    if (fwd_[x] != kUnset) return fwd_[x] == y;
    if (back_[y] != kUnset || !compatible_[x * n_ + y]) return false;
    fwd_[x] = y;
    back_[y] = x;
    trail_.push_back(x);
    return true;
  }

  // Extend the partial map through f(x*y) = f(x)*f(y) and the inverse
  // operation until nothing new is forced.
  bool close(std::size_t from) {
    for (std::size_t i = from; i < trail_.size(); ++i) {
      const Element x = trail_[i];
      for (std::size_t j = 0; j <= i; ++j) {
        const Element y = trail_[j];
        if (!assign(a_.op(x, y), b_.op(fwd_[x], fwd_[y]))) return false;
        if (!assign(a_.op(y, x), b_.op(fwd_[y], fwd_[x]))) return false;
        if (!assign(a_.inv_op(x, y), b_.inv_op(fwd_[x], fwd_[y]))) return false;
        if (!assign(a_.inv_op(y, x), b_.inv_op(fwd_[y], fwd_[x]))) return false;
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const Element x = trail_.back();
      trail_.pop_back();
      back_[fwd_[x]] = kUnset;
      fwd_[x] = kUnset;
    }
  }

  const FiniteQuandle& a_;
  const FiniteQuandle& b_;
  std::size_t n_;
  std::vector<Element> fwd_, back_, trail_;
  std::vector<std::vector<Element>> candidates_;
  std::vector<bool> compatible_;
};

}  // namespace

std::optional<std::vector<Element>> is_isomorphic(const FiniteQuandle& a, const FiniteQuandle& b) {
  if (a.size() != b.size() || quandle_type(a) != quandle_type(b)) return std::nullopt;
  auto sizes = [](const FiniteQuandle& q) {
    std::vector<std::size_t> s;
    for (const auto& c : components(q)) s.push_back(c.size());
    std::sort(s.begin(), s.end());
    return s;
  };
  if (sizes(a) != sizes(b)) return std::nullopt;
  return Search(a, b).run();
}

}  // namespace qf
