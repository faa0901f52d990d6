#include "qf/core/terms.hpp"

#include <cctype>

namespace qf {

Term Term::gen(std::string name) {
  Term t;
  t.generator = std::move(name);
  return t;
}

Term Term::op(Term lhs, Term rhs, long power) {
  Term t;
  t.lhs = std::make_shared<const Term>(std::move(lhs));
  t.rhs = std::make_shared<const Term>(std::move(rhs));
  t.power = power;
  return t;
}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  Term term() {
    Term t = atom();
    while (true) {
      skip();
      if (!eat('*')) return t;
      long power = 1;
      skip();
      if (eat('^')) power = integer();
      Term rhs = atom();
      t = Term::op(std::move(t), std::move(rhs), power);
    }
  }

  Equation equation() {
    Equation e{term(), {}};
    skip();
    if (!eat('=')) fail("expected '='");
    e.rhs = term();
    end();
    return e;
  }

  void end() {
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
  }

 private:
  Term atom() {
    skip();
    if (eat('(')) {
      Term t = term();
      skip();
      if (!eat(')')) fail("expected ')'");
      return t;
    }
    const std::size_t start = pos_;
    if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      return Term::gen(s_.substr(start, pos_ - start));
    }
    fail("expected a generator or '('");
  }

  long integer() {
    skip();
    const std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == digits) fail("expected an integer exponent");
    return std::stol(s_.substr(start, pos_ - start));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) { throw TermSyntaxError(what, pos_); }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

Term parse_term(const std::string& text) {
  Parser p(text);
  Term t = p.term();
  p.end();
  return t;
}

Equation parse_equation(const std::string& text) { return Parser(text).equation(); }

std::vector<Equation> parse_equations(const std::vector<std::string>& lines) {
  std::vector<Equation> out;
  out.reserve(lines.size());
  for (const auto& l : lines) out.push_back(parse_equation(l));
  return out;
}

std::string to_string(const Term& t) {
  if (t.is_generator()) return t.generator;
  std::string s = to_string(*t.lhs);
  s += t.power == 1 ? "*" : "*^" + std::to_string(t.power);
  s += t.rhs->is_generator() ? to_string(*t.rhs) : "(" + to_string(*t.rhs) + ")";
  return s;
}

std::string to_string(const Equation& e) { return to_string(e.lhs) + " = " + to_string(e.rhs); }

Element evaluate(const FiniteQuandle& q, const Assignment& assignment, const Term& t) {
  if (t.is_generator()) {
    auto it = assignment.find(t.generator);
    if (it == assignment.end()) throw UnknownGenerator(t.generator);
    if (it->second >= q.size()) throw std::out_of_range("generator '" + t.generator + "' assigned out of range");
    return it->second;
  }
  const Element x = evaluate(q, assignment, *t.lhs);
  const Element y = evaluate(q, assignment, *t.rhs);
  return q.power(x, y, t.power);
}

bool check_relators(const FiniteQuandle& q, const Assignment& assignment, const std::vector<Equation>& relators) {
  bool ok = true;
  // Evaluate everything so an unknown generator is reported even after a failure.
  for (const auto& r : relators) ok = (evaluate(q, assignment, r.lhs) == evaluate(q, assignment, r.rhs)) && ok;
  return ok;
}

}  // namespace qf
