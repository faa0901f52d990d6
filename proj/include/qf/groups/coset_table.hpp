#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "qf/groups/presentation.hpp"
#include "qf/kernels.hpp"

namespace qf {

inline constexpr std::size_t kDefaultMaxCosets = 1'000'000;

class Overflow : public std::runtime_error {
 public:
  explicit Overflow(std::size_t cap)
      : std::runtime_error("coset enumeration exceeded " + std::to_string(cap) + " cosets"), cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

class IncompleteTable : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Complete, standardized coset table. Cosets are numbered in BFS order from
/// coset 0 (the subgroup itself) scanning columns in order; representative
/// words follow the BFS tree.
struct CosetTable {
  std::size_t generators = 0;
  std::size_t cosets = 0;
  /// action[column][coset], column = letter_column(letter); right action.
  kernels::ActionTable action;
  std::vector<Word> representatives;
  /// BFS tree: parent coset and the column leading from it (-1 at the root).
  std::vector<kernels::Element> parent;
  std::vector<int> parent_column;
  std::vector<Word> subgroup;

  kernels::Element act(kernels::Element coset, const Word& w) const;
  std::vector<int> columns(const Word& w) const;
};

/// Hasse-Lindenbaum-Todd coset enumeration with lookahead.
///
/// Relators are scanned in declaration order for cosets in ascending order.
/// When the table is full a deduction-only pass over all live cosets runs and
/// the table is compacted; Overflow is thrown if fewer than 1/64 of the slots
/// (at least one) come free. The finished table is compressed, standardized
/// and checked against every relator and subgroup generator.
CosetTable todd_coxeter(const GroupPresentation& g, const std::vector<Word>& subgroup,
                        std::size_t max_cosets = kDefaultMaxCosets);

/// Throws IncompleteTable unless every relator acts trivially, every
/// subgroup generator fixes coset 0 and paired columns are inverse permutations.
void verify_coset_table(const GroupPresentation& g, const CosetTable& t);

/// Rebuilds parent links and representative words from the actions by BFS.
/// Fails if the actions are not already in standard order.
void rebuild_spanning_tree(CosetTable& t);

}  // namespace qf
