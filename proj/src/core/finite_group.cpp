#include "qf/core/finite_group.hpp"

#include <algorithm>
#include <random>

namespace qf {

namespace {

constexpr std::size_t kExhaustiveAssociativity = 256;
constexpr std::size_t kSampledTriples = 10000;

}  // namespace

FiniteGroupElementSet FiniteGroupElementSet::from_table(std::vector<Element> mult, std::size_t order,
                                                        std::vector<std::string> labels) {
  if (order == 0 || order > kMaxTableSize) throw GroupAxiomViolation("group order out of range");
  if (mult.size() != order * order) throw GroupAxiomViolation("multiplication table is not order x order");
  if (!labels.empty() && labels.size() != order) throw GroupAxiomViolation("label count does not match order");
  for (Element v : mult) {
    if (v >= order) throw GroupAxiomViolation("multiplication table entry out of range");
  }
  const auto at = [&](std::size_t a, std::size_t b) { return mult[a * order + b]; };

  std::optional<Element> identity;
  for (Element e = 0; e < order && !identity; ++e) {
    bool ok = true;
    for (Element a = 0; a < order && ok; ++a) ok = at(e, a) == a && at(a, e) == a;
    if (ok) identity = e;
  }
  if (!identity) throw GroupAxiomViolation("no identity element");

  std::vector<Element> inv(order, 0);
  for (Element a = 0; a < order; ++a) {
    bool found = false;
    for (Element b = 0; b < order && !found; ++b) {
      if (at(a, b) == *identity) {
        if (at(b, a) != *identity) break;
        inv[a] = b;
        found = true;
      }
    }
    if (!found) throw GroupAxiomViolation("element " + std::to_string(a) + " has no two-sided inverse");
  }

  auto check = [&](std::size_t a, std::size_t b, std::size_t c) {
    if (at(at(a, b), c) != at(a, at(b, c))) {
      throw GroupAxiomViolation("associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                std::to_string(c) + ")");
    }
  };
  if (order <= kExhaustiveAssociativity) {
    for (std::size_t a = 0; a < order; ++a) {
      for (std::size_t b = 0; b < order; ++b) {
        for (std::size_t c = 0; c < order; ++c) check(a, b, c);
      }
    }
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, order - 1);
    for (std::size_t i = 0; i < kSampledTriples; ++i) {
      const std::size_t a = pick(rng), b = pick(rng), c = pick(rng);
      check(a, b, c);
    }
  }

  FiniteGroupElementSet g;
  g.order_ = order;
  g.identity_ = *identity;
  g.mult_ = std::move(mult);
  g.inv_ = std::move(inv);
  g.labels_ = std::move(labels);
  return g;
}

FiniteGroupElementSet FiniteGroupElementSet::cyclic(std::size_t n) {
  std::vector<Element> t(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = static_cast<Element>((a + b) % n);
  }
  return from_table(std::move(t), n);
}

std::vector<Element> FiniteGroupElementSet::generated_subgroup(std::span<const Element> gens) const {
  std::vector<bool> in(order_, false);
  std::vector<Element> elems{identity_};
  in[identity_] = true;
  for (std::size_t k = 0; k < elems.size(); ++k) {
    for (Element s : gens) {
      const Element p = mul(elems[k], s);
      if (!in[p]) {
        in[p] = true;
        elems.push_back(p);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

Element element_order(const FiniteGroupElementSet& g, Element x) {
  Element k = 1;
  for (Element p = x; p != g.identity(); p = g.mul(p, x)) ++k;
  return k;
}

GroupAutomorphism::GroupAutomorphism(std::shared_ptr<const FiniteGroupElementSet> source,
                                     std::vector<Element> map)
    : source_(std::move(source)), map_(std::move(map)) {
  const auto& g = *source_;
  const std::size_t n = g.order();
  if (map_.size() != n) throw AutomorphismInvalid("automorphism map has the wrong length");
  std::vector<bool> hit(n, false);
  for (Element v : map_) {
    if (v >= n || hit[v]) throw AutomorphismInvalid("automorphism map is not a permutation");
    hit[v] = true;
  }
  if (map_[g.identity()] != g.identity()) throw AutomorphismInvalid("automorphism does not fix the identity");
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (map_[g.mul(a, b)] != g.mul(map_[a], map_[b])) {
        throw AutomorphismInvalid("map(a*b) != map(a)*map(b) at (" + std::to_string(a) + "," +
                                  std::to_string(b) + ")");
      }
    }
  }
}

GroupAutomorphism GroupAutomorphism::identity(std::shared_ptr<const FiniteGroupElementSet> source) {
  std::vector<Element> map(source->order());
  for (Element a = 0; a < map.size(); ++a) map[a] = a;
  return GroupAutomorphism(std::move(source), std::move(map));
}

GroupAutomorphism GroupAutomorphism::conjugation(std::shared_ptr<const FiniteGroupElementSet> source,
                                                 Element c) {
  const auto& g = *source;
  std::vector<Element> map(g.order());
  for (Element a = 0; a < map.size(); ++a) map[a] = g.mul(g.mul(g.inv(c), a), c);
  return GroupAutomorphism(std::move(source), std::move(map));
}

FiniteQuandle galex(const FiniteGroupElementSet& g, const GroupAutomorphism& phi) {
  if (phi.source().order() != g.order()) throw AutomorphismInvalid("automorphism acts on a different group");
  return FiniteQuandle::from_table(
      kernels::omp::galex_table(g.mult_table(), g.inverse(), phi.map(), g.order()), g.order());
}

FiniteQuandle coset_quandle(const FiniteGroupElementSet& g, const GroupAutomorphism& phi,
                            std::span<const Element> subgroup, std::vector<Element>* coset_of) {
  const std::size_t n = g.order();
  if (phi.source().order() != n) throw AutomorphismInvalid("automorphism acts on a different group");
  std::vector<bool> in(n, false);
  for (Element a : subgroup) {
    if (a >= n) throw NotASubgroup("subgroup element out of range");
    in[a] = true;
  }
  if (!in[g.identity()]) throw NotASubgroup("subgroup does not contain the identity");
  std::vector<Element> a_elems;
  for (Element a = 0; a < n; ++a) {
    if (in[a]) a_elems.push_back(a);
  }
  for (Element a : a_elems) {
    if (!in[g.inv(a)]) throw NotASubgroup("subgroup is not closed under inverses");
    for (Element b : a_elems) {
      if (!in[g.mul(a, b)]) throw NotASubgroup("subgroup is not closed under multiplication");
    }
  }
  // phi(Ax) = A phi(x) is needed for the operation to be well defined on
  // cosets; that is exactly phi(A) = A.
  for (Element a : a_elems) {
    if (!in[phi(a)]) throw NotInvariant("phi does not preserve the subgroup");
  }

  constexpr Element kUnset = ~Element{0};
  std::vector<Element> label(n, kUnset);
  std::vector<Element> rep;
  for (Element x = 0; x < n; ++x) {
    if (label[x] != kUnset) continue;
    const auto id = static_cast<Element>(rep.size());
    rep.push_back(x);
    for (Element a : a_elems) label[g.mul(a, x)] = id;
  }
  const std::size_t k = rep.size();
  std::vector<Element> table(k * k);
  for (Element i = 0; i < k; ++i) {
    for (Element j = 0; j < k; ++j) {
      const Element x = rep[i], y = rep[j];
      table[i * k + j] = label[g.mul(phi(g.mul(x, g.inv(y))), y)];
    }
  }
  if (coset_of) *coset_of = label;
  return FiniteQuandle::from_table(std::move(table), k);
}

}  // namespace qf
