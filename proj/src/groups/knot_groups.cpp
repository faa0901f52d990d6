#include "qf/groups/knot_groups.hpp"

#include <algorithm>
#include <string>

#include "qf/linalg/smith_normal_form.hpp"

namespace qf {

GroupPresentation g_n_presentation(const PeripheralPresentation& p, long n) {
  if (n < 1) throw PresentationError("n must be at least 1");
  return p.group.with_relators({power(p.meridian_word(), n)});
}

CosetTable peripheral_cosets(const PeripheralPresentation& p, long n, std::size_t max_cosets, CosetCache* cache) {
  return enumerate_cosets(g_n_presentation(p, n), {p.meridian_word(), p.longitude}, max_cosets, cache);
}

FiniteQuandle quandle_from_cosets(const CosetTable& t, const Word& meridian) {
  const std::size_t n = t.cosets;
  if (n > kMaxTableSize) throw IncompleteTable("coset count exceeds the quandle size cap");
  if (t.representatives.size() != n) throw IncompleteTable("coset table has no representatives");
  std::vector<std::vector<int>> words;
  words.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    const Word& r = t.representatives[j];
    words.push_back(t.columns(concat(concat(inverse(r), meridian), r)));
  }
  // Entry [i*n+j] is coset i acted on by rep(j)^-1 m rep(j), which is i*j.
  auto table = kernels::omp::word_action_table(t.action, words, n);
  return FiniteQuandle::from_table(std::move(table), n);
}

BranchedCover branched_cover_group(const PeripheralPresentation& p, long n, std::size_t max_cosets,
                                   CosetCache* cache) {
  if (n < 2) throw PresentationError("branched covers need n >= 2");
  const GroupPresentation g = g_n_presentation(p, n);
  const CosetTable t = enumerate_cosets(g, {}, max_cosets, cache);
  const std::size_t order = t.cosets;
  if (order > kMaxTableSize) throw KernelSizeMismatch("G_n exceeds the table size cap");

  std::vector<Element> bfs(order);
  for (std::size_t c = 0; c < order; ++c) bfs[c] = static_cast<Element>(c);
  const auto mult = kernels::omp::regular_multiplication_table(t.action, t.parent, t.parent_column, bfs, order);

  std::vector<Element> kernel;
  std::vector<Element> position(order, 0);
  for (std::size_t c = 0; c < order; ++c) {
    const long grade = exponent_sum(t.representatives[c]) % n;
    if (grade == 0) {
      position[c] = static_cast<Element>(kernel.size());
      kernel.push_back(static_cast<Element>(c));
    }
  }
  if (order != static_cast<std::size_t>(n) * kernel.size()) {
    throw KernelSizeMismatch("|G_n| = " + std::to_string(order) + " but the kernel has " +
                             std::to_string(kernel.size()) + " elements");
  }

  const std::size_t k = kernel.size();
  std::vector<Element> sub(k * k);
  std::vector<std::string> labels;
  labels.reserve(k);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      const Element prod = mult[kernel[a] * order + kernel[b]];
      if (exponent_sum(t.representatives[prod]) % n != 0) {
        throw KernelSizeMismatch("kernel is not closed under multiplication");
      }
      sub[a * k + b] = position[prod];
    }
    labels.push_back(g.word_to_string(t.representatives[kernel[a]]));
  }

  auto pi1 = std::make_shared<const FiniteGroupElementSet>(FiniteGroupElementSet::from_table(std::move(sub), k, labels));

  // Element index of a word is the coset it sends 0 to.
  const Element m = t.act(0, p.meridian_word());
  Element m_inv = 0;
  while (mult[m * order + m_inv] != 0) ++m_inv;
  std::vector<Element> phi(k);
  for (std::size_t a = 0; a < k; ++a) {
    const Element conj = mult[mult[m_inv * order + kernel[a]] * order + m];
    if (exponent_sum(t.representatives[conj]) % n != 0) throw KernelSizeMismatch("conjugation leaves the kernel");
    phi[a] = position[conj];
  }
  BranchedCover out{order, pi1, GroupAutomorphism(pi1, std::move(phi)), 0, kernel};

  const Element l = t.act(0, p.longitude);
  if (exponent_sum(t.representatives[l]) % n != 0) throw KernelSizeMismatch("longitude is not in the kernel");
  out.longitude = position[l];
  return out;
}

AbelianGroup abelianization(const GroupPresentation& g) {
  std::vector<Triplet> entries;
  for (std::size_t r = 0; r < g.relators().size(); ++r) {
    for (std::size_t x = 0; x < g.generators(); ++x) {
      const long e = exponent_sum(g.relators()[r], x);
      if (e != 0) entries.push_back({x, r, Integer(e)});
    }
  }
  const SparseIntMatrix m(g.generators(), g.relators().size(), std::move(entries));
  const SNFResult snf = smith_normal_form(m);
  return abelian_group_from_factors(g.generators() - snf.rank, snf.factors);
}

CyclicPresentation trefoil_branched_presentation(long n, long index) {
  if (n < 2) throw PresentationError("n must be at least 2");
  auto x = [n](long k, bool inv = false) {
    const long g = (((k - 1) % n) + n) % n;
    return generator_letter(static_cast<std::size_t>(g), inv);
  };
  std::vector<Word> relators;
  std::vector<std::string> names;
  for (long i = 1; i <= n; ++i) {
    relators.push_back({x(i - 1, true), x(i), x(i - 2)});
    names.push_back("x" + std::to_string(i));
  }
  Word l = free_reduce({x(index), x(index - 1, true), x(index, true), x(index - 1)});
  return {GroupPresentation(static_cast<std::size_t>(n), std::move(relators), std::move(names)), std::move(l)};
}

}  // namespace qf
