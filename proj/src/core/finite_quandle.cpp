#include "qf/core/finite_quandle.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace qf {

namespace {

std::string describe(const kernels::AxiomWitness& w) {
  switch (w.kind) {
    case kernels::AxiomKind::idempotence:
      return "idempotence fails: " + std::to_string(w.x) + "*" + std::to_string(w.x) + " = " +
             std::to_string(w.z);
    case kernels::AxiomKind::bijectivity:
      return "bijectivity fails in column " + std::to_string(w.y) + ": rows " + std::to_string(w.x) +
             " and " + std::to_string(w.z) + " have the same image";
    case kernels::AxiomKind::distributivity:
      return "distributivity fails at (x,y,z) = (" + std::to_string(w.x) + "," + std::to_string(w.y) +
             "," + std::to_string(w.z) + ")";
    case kernels::AxiomKind::none:
      break;
  }
  return "no violation";
}

}  // namespace

FiniteQuandle FiniteQuandle::from_table(std::vector<Element> table, std::size_t n) {
  if (n == 0) throw std::invalid_argument("from_table: a quandle must be non-empty");
  if (n > kMaxTableSize) throw std::invalid_argument("from_table: size exceeds 2^16");
  if (table.size() != n * n) throw std::invalid_argument("from_table: table is not n x n");
  for (Element v : table) {
    if (v >= n) throw std::invalid_argument("from_table: entry " + std::to_string(v) + " out of range");
  }
  const auto w = kernels::omp::first_axiom_violation(table, n);
  if (w.kind != kernels::AxiomKind::none) throw AxiomViolation(w, describe(w));
  std::vector<Element> inverse(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) inverse[table[x * n + y] * n + y] = static_cast<Element>(x);
  }
  return FiniteQuandle(std::move(table), std::move(inverse), n);
}

FiniteQuandle FiniteQuandle::from_rows(const std::vector<std::vector<Element>>& rows) {
  const std::size_t n = rows.size();
  std::vector<Element> table;
  table.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n) throw std::invalid_argument("from_rows: table is not square");
    table.insert(table.end(), row.begin(), row.end());
  }
  return from_table(std::move(table), n);
}

FiniteQuandle FiniteQuandle::trivial(std::size_t n) {
  std::vector<Element> t(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) t[x * n + y] = static_cast<Element>(x);
  }
  return from_table(std::move(t), n);
}

FiniteQuandle FiniteQuandle::dihedral(std::size_t n) {
  std::vector<Element> t(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) t[x * n + y] = static_cast<Element>((2 * y + n - x) % n);
  }
  return from_table(std::move(t), n);
}

Element FiniteQuandle::power(Element x, Element y, long k) const {
  const auto& t = k >= 0 ? table_ : inverse_;
  for (long i = 0, e = k >= 0 ? k : -k; i < e; ++i) x = t[x * n_ + y];
  return x;
}

std::vector<std::vector<Element>> FiniteQuandle::rows() const {
  std::vector<std::vector<Element>> r(n_);
  for (std::size_t x = 0; x < n_; ++x) r[x].assign(table_.begin() + x * n_, table_.begin() + (x + 1) * n_);
  return r;
}

FiniteQuandle FiniteQuandle::relabeled(std::span<const Element> perm) const {
  std::vector<Element> t(n_ * n_);
  for (std::size_t x = 0; x < n_; ++x) {
    for (std::size_t y = 0; y < n_; ++y) t[perm[x] * n_ + perm[y]] = perm[table_[x * n_ + y]];
  }
  return from_table(std::move(t), n_);
}

std::vector<std::size_t> column_cycle_type(const FiniteQuandle& q, Element y) {
  const std::size_t n = q.size();
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> cycles;
  for (Element x = 0; x < n; ++x) {
    if (seen[x]) continue;
    std::size_t len = 0;
    for (Element c = x; !seen[c]; c = q.op(c, y)) {
      seen[c] = true;
      ++len;
    }
    cycles.push_back(len);
  }
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

std::uint64_t quandle_type(const FiniteQuandle& q) {
  std::uint64_t type = 1;
  for (Element y = 0; y < q.size(); ++y) {
    for (std::size_t len : column_cycle_type(q, y)) type = std::lcm(type, static_cast<std::uint64_t>(len));
  }
  return type;
}

std::vector<std::vector<Element>> components(const FiniteQuandle& q) {
  const std::size_t n = q.size();
  std::vector<int> label(n, -1);
  std::vector<std::vector<Element>> out;
  for (Element start = 0; start < n; ++start) {
    if (label[start] >= 0) continue;
    const int id = static_cast<int>(out.size());
    std::vector<Element> orbit{start};
    label[start] = id;
    // Orbits of <S_y> and their inverses coincide for finite permutations.
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      const Element x = orbit[k];
      for (Element y = 0; y < n; ++y) {
        const Element z = q.op(x, y);
        if (label[z] < 0) {
          label[z] = id;
          orbit.push_back(z);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

bool is_homomorphism(const FiniteQuandle& a, const FiniteQuandle& b, std::span<const Element> f) {
  if (f.size() != a.size()) return false;
  for (Element v : f) {
    if (v >= b.size()) return false;
  }
  for (Element x = 0; x < a.size(); ++x) {
    for (Element y = 0; y < a.size(); ++y) {
      if (f[a.op(x, y)] != b.op(f[x], f[y])) return false;
    }
  }
  return true;
}

std::string to_json(const FiniteQuandle& q) {
  nlohmann::json j;
  j["size"] = q.size();
  j["table"] = q.rows();
  return j.dump();
}

FiniteQuandle quandle_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  const auto n = j.at("size").get<std::size_t>();
  auto rows = j.at("table").get<std::vector<std::vector<Element>>>();
  if (rows.size() != n) throw std::invalid_argument("quandle JSON: size does not match table");
  return FiniteQuandle::from_rows(rows);
}

void write_text(std::ostream& out, const FiniteQuandle& q) {
  for (Element x = 0; x < q.size(); ++x) {
    for (Element y = 0; y < q.size(); ++y) out << (y ? " " : "") << q.op(x, y);
    out << '\n';
  }
}

FiniteQuandle read_text(std::istream& in) {
  std::vector<std::vector<Element>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<Element> row;
    long v = 0;
    while (ls >> v) {
      if (v < 0) throw std::invalid_argument("quandle text: negative entry");
      row.push_back(static_cast<Element>(v));
    }
    if (!ls.eof()) throw std::invalid_argument("quandle text: non-numeric token in '" + line + "'");
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return FiniteQuandle::from_rows(rows);
}

}  // namespace qf
