#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qf {

/// A word in signed generators: letter +(i+1) is generator i, -(i+1) its inverse.
using Word = std::vector<int>;

inline std::size_t letter_generator(int letter) { return static_cast<std::size_t>(letter < 0 ? -letter : letter) - 1; }
/// Coset table column of a letter: 2i for generator i, 2i+1 for its inverse.
inline int letter_column(int letter) { return static_cast<int>(2 * letter_generator(letter)) + (letter < 0 ? 1 : 0); }
inline int generator_letter(std::size_t g, bool inverse = false) {
  return inverse ? -static_cast<int>(g + 1) : static_cast<int>(g + 1);
}

Word free_reduce(const Word& w);
/// Free reduction followed by cancelling inverse letters at the two ends.
Word cyclic_reduce(const Word& w);
Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
Word power(const Word& w, long k);
long exponent_sum(const Word& w);
long exponent_sum(const Word& w, std::size_t generator);

class PresentationError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Finitely presented group. Relators are freely and cyclically reduced on
/// construction and empty ones are dropped.
class GroupPresentation {
 public:
  GroupPresentation() = default;
  GroupPresentation(std::size_t generators, std::vector<Word> relators, std::vector<std::string> names = {});

  std::size_t generators() const { return generators_; }
  const std::vector<Word>& relators() const { return relators_; }
  const std::vector<std::string>& names() const { return names_; }

  /// The same presentation with extra relators appended.
  GroupPresentation with_relators(const std::vector<Word>& extra) const;

  void check_word(const Word& w) const;
  std::string word_to_string(const Word& w) const;
  /// Canonical text used for cache keys.
  std::string canonical() const;

 private:
  std::size_t generators_ = 0;
  std::vector<Word> relators_;
  std::vector<std::string> names_;
};

}  // namespace qf
