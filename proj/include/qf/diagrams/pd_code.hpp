#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qf {

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at offset " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class LabelError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};
class MultiComponent : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Planar diagram code. Each crossing lists its four edge labels
/// counterclockwise, starting at the incoming understrand.
struct PDCode {
  std::vector<std::array<int, 4>> crossings;

  std::size_t size() const { return crossings.size(); }
  friend bool operator==(const PDCode&, const PDCode&) = default;
};

/// Parses whitespace-separated X(a,b,c,d) tokens. Labels must be 1..2c, each
/// used exactly twice, and the strands must close up into one component.
PDCode parse_pd(const std::string& text);

/// "X(1,4,2,5) X(3,6,4,1) ..." form accepted by parse_pd.
std::string to_string(const PDCode& pd);

/// Label checks and the single-component check shared by parse_pd and builders.
void validate_pd(const PDCode& pd);

}  // namespace qf
