#include "qf/diagrams/pd_code.hpp"

#include <cctype>
#include <map>

namespace qf {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  PDCode parse() {
    PDCode pd;
    skip_space();
    if (at_end()) throw SyntaxError("empty diagram", pos_);
    while (!at_end()) {
      pd.crossings.push_back(crossing());
      skip_space();
    }
    return pd;
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip_space();
    if (at_end() || s_[pos_] != c) throw SyntaxError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  int number() {
    skip_space();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw SyntaxError("expected an edge label", start);
    if (pos_ - start > 9) throw SyntaxError("edge label too large", start);
    return std::stoi(s_.substr(start, pos_ - start));
  }

  std::array<int, 4> crossing() {
    expect('X');
    expect('(');
    std::array<int, 4> c{};
    for (int i = 0; i < 4; ++i) {
      if (i > 0) {
        skip_space();
        if (!at_end() && s_[pos_] == ')') throw SyntaxError("crossing needs four labels", pos_);
        expect(',');
      }
      c[static_cast<std::size_t>(i)] = number();
    }
    skip_space();
    if (!at_end() && s_[pos_] == ',') throw SyntaxError("crossing has more than four labels", pos_);
    expect(')');
    return c;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

void validate_pd(const PDCode& pd) {
  const std::size_t c = pd.size();
  if (c == 0) throw LabelError("diagram has no crossings");
  std::map<int, int> count;
  for (const auto& x : pd.crossings) {
    for (int l : x) {
      if (l < 1 || static_cast<std::size_t>(l) > 2 * c) {
        throw LabelError("label " + std::to_string(l) + " outside 1.." + std::to_string(2 * c));
      }
      ++count[l];
    }
  }
  for (const auto& [label, k] : count) {
    if (k != 2) throw LabelError("label " + std::to_string(label) + " used " + std::to_string(k) + " times");
  }
  // Strand walk: enter at position p, leave at p+2, follow the label to its other slot.
  std::vector<std::array<std::size_t, 2>> slots(2 * c + 1, {SIZE_MAX, SIZE_MAX});
  for (std::size_t k = 0; k < c; ++k) {
    for (std::size_t p = 0; p < 4; ++p) {
      auto& s = slots[static_cast<std::size_t>(pd.crossings[k][p])];
      (s[0] == SIZE_MAX ? s[0] : s[1]) = 4 * k + p;
    }
  }
  std::vector<bool> seen(2 * c + 1, false);
  std::size_t slot = slots[1][0];
  std::size_t visited = 0;
  while (true) {
    const std::size_t out = (slot & ~std::size_t{3}) | ((slot + 2) & 3);
    const int label = pd.crossings[out / 4][out % 4];
    if (seen[static_cast<std::size_t>(label)]) break;
    seen[static_cast<std::size_t>(label)] = true;
    ++visited;
    const auto& s = slots[static_cast<std::size_t>(label)];
    slot = s[0] == out ? s[1] : s[0];
  }
  if (visited != 2 * c) {
    throw MultiComponent("strands through edge 1 cover " + std::to_string(visited) + " of " +
                         std::to_string(2 * c) + " edges");
  }
}

PDCode parse_pd(const std::string& text) {
  PDCode pd = Parser(text).parse();
  validate_pd(pd);
  return pd;
}

std::string to_string(const PDCode& pd) {
  std::string s;
  for (const auto& x : pd.crossings) {
    if (!s.empty()) s += ' ';
    s += "X(" + std::to_string(x[0]) + "," + std::to_string(x[1]) + "," + std::to_string(x[2]) + "," +
         std::to_string(x[3]) + ")";
  }
  return s;
}

}  // namespace qf
