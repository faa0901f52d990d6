#include "qf/groups/presentation.hpp"

#include <algorithm>

namespace qf {

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (int l : w) {
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t a = 0, b = r.size();
  while (b - a >= 2 && r[a] == -r[b - 1]) {
    ++a;
    --b;
  }
  return Word(r.begin() + static_cast<long>(a), r.begin() + static_cast<long>(b));
}

Word inverse(const Word& w) {
  Word r(w.rbegin(), w.rend());
  for (int& l : r) l = -l;
  return r;
}

Word concat(const Word& a, const Word& b) {
  Word r = a;
  r.insert(r.end(), b.begin(), b.end());
  return free_reduce(r);
}

Word power(const Word& w, long k) {
  const Word base = k >= 0 ? w : inverse(w);
  Word r;
  for (long i = 0; i < (k >= 0 ? k : -k); ++i) r.insert(r.end(), base.begin(), base.end());
  return free_reduce(r);
}

long exponent_sum(const Word& w) {
  long s = 0;
  for (int l : w) s += l > 0 ? 1 : -1;
  return s;
}

long exponent_sum(const Word& w, std::size_t generator) {
  long s = 0;
  for (int l : w) {
    if (letter_generator(l) == generator) s += l > 0 ? 1 : -1;
  }
  return s;
}

GroupPresentation::GroupPresentation(std::size_t generators, std::vector<Word> relators,
                                     std::vector<std::string> names)
    : generators_(generators), names_(std::move(names)) {
  if (!names_.empty() && names_.size() != generators_) {
    throw PresentationError("generator name count does not match generator count");
  }
  if (names_.empty()) {
    for (std::size_t g = 0; g < generators_; ++g) names_.push_back("x" + std::to_string(g));
  }
  for (auto& r : relators) {
    check_word(r);
    Word c = cyclic_reduce(r);
    if (!c.empty()) relators_.push_back(std::move(c));
  }
}

GroupPresentation GroupPresentation::with_relators(const std::vector<Word>& extra) const {
  std::vector<Word> all = relators_;
  all.insert(all.end(), extra.begin(), extra.end());
  return GroupPresentation(generators_, std::move(all), names_);
}

void GroupPresentation::check_word(const Word& w) const {
  for (int l : w) {
    if (l == 0 || letter_generator(l) >= generators_) {
      throw PresentationError("letter " + std::to_string(l) + " does not name a generator");
    }
  }
}

std::string GroupPresentation::word_to_string(const Word& w) const {
  if (w.empty()) return "1";
  std::string s;
  for (int l : w) {
    if (!s.empty()) s += ' ';
    s += names_[letter_generator(l)];
    if (l < 0) s += "^-1";
  }
  return s;
}

std::string GroupPresentation::canonical() const {
  std::string s = "gens=" + std::to_string(generators_) + ";rels=";
  for (const auto& r : relators_) {
    for (int l : r) s += std::to_string(l) + ",";
    s += ";";
  }
  return s;
}

}  // namespace qf
