#include "qf/core/extension.hpp"

#include <algorithm>
#include <set>

namespace qf {

namespace {

using Perm = std::vector<Element>;

Perm compose(const Perm& first, const Perm& then) {
  Perm r(first.size());
  for (std::size_t i = 0; i < first.size(); ++i) r[i] = then[first[i]];
  return r;
}

// Closure of the generators, stopping once it exceeds `cap` elements.
std::vector<Perm> generated_group(const std::vector<Perm>& gens, std::size_t size, std::size_t cap) {
  Perm id(size);
  for (std::size_t i = 0; i < size; ++i) id[i] = static_cast<Element>(i);
  std::set<Perm> seen{id};
  std::vector<Perm> elems{id};
  for (std::size_t k = 0; k < elems.size() && elems.size() <= cap; ++k) {
    for (const auto& g : gens) {
      Perm p = compose(elems[k], g);
      if (seen.insert(p).second) elems.push_back(std::move(p));
    }
  }
  return elems;
}

}  // namespace

ExtensionReport verify_extension(const ExtensionWitness& w) {
  const std::size_t nt = w.total.size();
  const std::size_t nb = w.base.size();
  if (w.projection.size() != nt) throw MalformedWitness("projection length differs from the total size");
  for (Element v : w.projection) {
    if (v >= nb) throw MalformedWitness("projection value out of range");
  }
  if (w.group_order == 0) throw MalformedWitness("group order must be positive");
  for (const auto& g : w.action) {
    if (g.size() != nt) throw MalformedWitness("action permutation has the wrong length");
    std::vector<bool> hit(nt, false);
    for (Element v : g) {
      if (v >= nt || hit[v]) throw MalformedWitness("action entry is not a permutation");
      hit[v] = true;
    }
  }

  ExtensionReport r;
  r.homomorphism = is_homomorphism(w.total, w.base, w.projection);
  {
    std::vector<bool> hit(nb, false);
    for (Element v : w.projection) hit[v] = true;
    r.surjective = std::find(hit.begin(), hit.end(), false) == hit.end();
  }

  const auto group = generated_group(w.action, nt, nt);
  r.generated_order = group.size();
  r.group_order = group.size() == w.group_order;
  r.abelian = true;
  for (std::size_t i = 0; i < w.action.size() && r.abelian; ++i) {
    for (std::size_t j = i + 1; j < w.action.size() && r.abelian; ++j) {
      r.abelian = compose(w.action[i], w.action[j]) == compose(w.action[j], w.action[i]);
    }
  }

  // (E1) on generators is enough: both identities are preserved by composition.
  r.e1 = true;
  for (const auto& g : w.action) {
    for (Element x = 0; x < nt && r.e1; ++x) {
      for (Element y = 0; y < nt && r.e1; ++y) {
        r.e1 = g[w.total.op(x, y)] == w.total.op(g[x], y) && w.total.op(x, g[y]) == w.total.op(x, y);
      }
    }
  }

  // (E2): every fiber is one orbit and the action on it is free.
  r.e2 = r.group_order;
  if (r.e2) {
    for (Element x = 0; x < nt && r.e2; ++x) {
      std::set<Element> orbit;
      for (const auto& p : group) orbit.insert(p[x]);
      std::size_t fiber = 0;
      for (Element y = 0; y < nt; ++y) fiber += w.projection[y] == w.projection[x];
      bool same_fiber = true;
      for (Element y : orbit) same_fiber = same_fiber && w.projection[y] == w.projection[x];
      r.e2 = same_fiber && orbit.size() == fiber && orbit.size() == group.size();
    }
  }
  return r;
}

}  // namespace qf
