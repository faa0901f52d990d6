#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <vector>

#include "qf/core/finite_group.hpp"
#include "qf/core/finite_quandle.hpp"
#include "qf/groups/coset_cache.hpp"
#include "qf/groups/coset_table.hpp"
#include "qf/groups/presentation.hpp"
#include "qf/linalg/abelian_group.hpp"

namespace qf {

/// Knot group with its peripheral pair. The meridian is a generator; the
/// longitude is a word with total exponent sum 0.
struct PeripheralPresentation {
  GroupPresentation group;
  std::size_t meridian = 0;
  Word longitude;
  long writhe = 0;

  Word meridian_word() const { return {generator_letter(meridian)}; }
};

class KernelSizeMismatch : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// G(K) / <<m^n>>.
GroupPresentation g_n_presentation(const PeripheralPresentation& p, long n);

/// Coset table of P = <m, l> in G_n(K).
CosetTable peripheral_cosets(const PeripheralPresentation& p, long n, std::size_t max_cosets = kDefaultMaxCosets,
                             CosetCache* cache = nullptr);

/// Quandle on coset indices with i*j = i . rep(j)^-1 m rep(j).
FiniteQuandle quandle_from_cosets(const CosetTable& t, const Word& meridian);

struct BranchedCover {
  std::size_t g_n_order = 0;
  std::shared_ptr<const FiniteGroupElementSet> pi1;
  GroupAutomorphism phi;
  /// Image of the longitude in pi1.
  Element longitude = 0;
  /// pi1 element index -> G_n element index.
  std::vector<Element> embedding;
};

/// pi1 of the n-fold cyclic branched cover as the kernel of G_n(K) -> Z/n,
/// with phi = conjugation by the meridian.
BranchedCover branched_cover_group(const PeripheralPresentation& p, long n,
                                   std::size_t max_cosets = kDefaultMaxCosets, CosetCache* cache = nullptr);

/// Exponent-sum matrix reduced to Smith form.
AbelianGroup abelianization(const GroupPresentation& g);

struct CyclicPresentation {
  GroupPresentation group;
  Word longitude;
};

/// <x_1..x_n | x_{i-1} = x_i x_{i-2}> with indices mod n; generator k-1
/// stands for x_k. The longitude is x_i x_{i-1}^-1 x_i^-1 x_{i-1} at `index`.
CyclicPresentation trefoil_branched_presentation(long n, long index = 1);

}  // namespace qf
