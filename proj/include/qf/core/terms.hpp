#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "qf/core/finite_quandle.hpp"

namespace qf {

class UnknownGenerator : public std::runtime_error {
 public:
  explicit UnknownGenerator(const std::string& name)
      : std::runtime_error("unknown generator '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class TermSyntaxError : public std::runtime_error {
 public:
  TermSyntaxError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at offset " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Quandle term: a generator name, or lhs *^power rhs meaning S_rhs^power(lhs).
struct Term {
  std::string generator;
  std::shared_ptr<const Term> lhs, rhs;
  long power = 1;

  bool is_generator() const { return !lhs; }

  static Term gen(std::string name);
  static Term op(Term lhs, Term rhs, long power = 1);
};

struct Equation {
  Term lhs, rhs;
};

/// Grammar: term := atom (('*' | '*^' int) atom)*, left-associative;
/// atom := name | '(' term ')'. Equations are "term = term".
Term parse_term(const std::string& text);
Equation parse_equation(const std::string& text);
std::vector<Equation> parse_equations(const std::vector<std::string>& lines);

std::string to_string(const Term& t);
std::string to_string(const Equation& e);

using Assignment = std::map<std::string, Element>;

Element evaluate(const FiniteQuandle& q, const Assignment& assignment, const Term& t);

/// Whether every equation holds under the assignment. Throws UnknownGenerator.
bool check_relators(const FiniteQuandle& q, const Assignment& assignment, const std::vector<Equation>& relators);

}  // namespace qf
