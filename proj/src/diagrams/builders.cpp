#include "qf/diagrams/builders.hpp"

#include <cstdint>
#include <numeric>
#include <string>

#include "qf/diagrams/diagram.hpp"

namespace qf {

namespace {
constexpr std::size_t kOpen = SIZE_MAX;
}

std::array<std::size_t, 4> Tangle::add_crossing(int sign) {
  const std::size_t base = link_.size();
  const std::size_t k = slots_.size();
  std::array<std::size_t, 4> corner{base, base + 1, base + 2, base + 3};
  for (std::size_t i = 0; i < 4; ++i) {
    link_.push_back(kOpen);
    partner_.push_back(kOpen);
  }
  // Counterclockwise from an understrand end: BR, TR, TL, BL puts BL-TR on
  // top; BL, BR, TR, TL puts it underneath.
  std::array<std::size_t, 4> order = sign > 0 ? std::array<std::size_t, 4>{corner[BR], corner[TR], corner[TL], corner[BL]}
                                              : std::array<std::size_t, 4>{corner[BL], corner[BR], corner[TR], corner[TL]};
  slots_.push_back(order);
  owner_.resize(link_.size());
  for (std::size_t p = 0; p < 4; ++p) owner_[order[p]] = {k, p};
  return corner;
}

std::size_t Tangle::add_wire_end() {
  link_.push_back(kOpen);
  partner_.push_back(kOpen);
  owner_.push_back({kOpen, kOpen});
  return link_.size() - 1;
}

void Tangle::connect(std::size_t a, std::size_t b) {
  link_[a] = b;
  link_[b] = a;
}

Tangle Tangle::zero() {
  Tangle t;
  t.nw_ = t.add_wire_end();
  t.ne_ = t.add_wire_end();
  t.sw_ = t.add_wire_end();
  t.se_ = t.add_wire_end();
  t.partner_[t.nw_] = t.ne_;
  t.partner_[t.ne_] = t.nw_;
  t.partner_[t.sw_] = t.se_;
  t.partner_[t.se_] = t.sw_;
  return t;
}

Tangle Tangle::infinity() {
  Tangle t = zero();
  t.partner_[t.nw_] = t.sw_;
  t.partner_[t.sw_] = t.nw_;
  t.partner_[t.ne_] = t.se_;
  t.partner_[t.se_] = t.ne_;
  return t;
}

Tangle Tangle::integer(long k) {
  Tangle t = zero();
  t.twist_horizontal(k);
  return t;
}

void Tangle::twist_horizontal(long k) {
  for (long i = 0; i < (k < 0 ? -k : k); ++i) {
    const auto c = add_crossing(k > 0 ? 1 : -1);
    connect(ne_, c[TL]);
    connect(se_, c[BL]);
    ne_ = c[TR];
    se_ = c[BR];
  }
}

void Tangle::twist_vertical(long k) {
  for (long i = 0; i < (k < 0 ? -k : k); ++i) {
    const auto c = add_crossing(k > 0 ? 1 : -1);
    connect(sw_, c[TL]);
    connect(se_, c[TR]);
    sw_ = c[BL];
    se_ = c[BR];
  }
}

Tangle Tangle::rational(long p, long q) {
  if (q == 0) {
    if (p == 0) throw ParameterError("0/0 is not a tangle fraction");
    return infinity();
  }
  if (q < 0) {
    p = -p;
    q = -q;
  }
  // p/q = c1 + 1/(c2 + 1/(... + 1/ck)), floor quotients.
  std::vector<long> terms;
  long a = p, b = q;
  while (b != 0) {
    long c = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --c;
    terms.push_back(c);
    const long r = a - c * b;
    a = b;
    b = r;
  }
  // Build from the innermost term outwards, ending with a horizontal twist by c1.
  const bool start_vertical = terms.size() % 2 == 0;
  Tangle t = start_vertical ? infinity() : zero();
  bool vertical = start_vertical;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    if (vertical) {
      t.twist_vertical(*it);
    } else {
      t.twist_horizontal(*it);
    }
    vertical = !vertical;
  }
  return t;
}

void Tangle::add(const Tangle& right) {
  const std::size_t shift = link_.size();
  const std::size_t kshift = slots_.size();
  auto moved = [shift](std::size_t v) { return v == kOpen ? kOpen : v + shift; };
  for (std::size_t v = 0; v < right.link_.size(); ++v) {
    link_.push_back(moved(right.link_[v]));
    partner_.push_back(moved(right.partner_[v]));
    const auto [k, p] = right.owner_[v];
    owner_.push_back({k == kOpen ? kOpen : k + kshift, p});
  }
  for (const auto& s : right.slots_) slots_.push_back({s[0] + shift, s[1] + shift, s[2] + shift, s[3] + shift});
  connect(ne_, right.nw_ + shift);
  connect(se_, right.sw_ + shift);
  ne_ = right.ne_ + shift;
  se_ = right.se_ + shift;
}

PDCode Tangle::numerator() const { return closed(nw_, ne_, sw_, se_); }
PDCode Tangle::denominator() const { return closed(nw_, sw_, ne_, se_); }

std::size_t Tangle::count_components(const std::vector<std::size_t>& link) const {
  std::vector<bool> seen(link.size(), false);
  std::size_t count = 0;
  for (std::size_t start = 0; start < link.size(); ++start) {
    if (seen[start]) continue;
    ++count;
    std::size_t v = start;
    while (!seen[v]) {
      // Cross the node's own strand, then the edge to the next node.
      const auto [k, p] = owner_[v];
      const std::size_t across = k == kOpen ? partner_[v] : slots_[k][(p + 2) & 3];
      seen[v] = seen[across] = true;
      v = link[across];
    }
  }
  return count;
}

PDCode Tangle::closed(std::size_t a1, std::size_t b1, std::size_t a2, std::size_t b2) const {
  if (slots_.empty()) throw ParameterError("closure has no crossings");
  auto link = link_;
  link[a1] = b1;
  link[b1] = a1;
  link[a2] = b2;
  link[b2] = a2;
  if (const std::size_t k = count_components(link); k != 1) {
    throw MultiComponent("closure has " + std::to_string(k) + " components");
  }
  const std::size_t c = slots_.size();
  std::vector<std::array<int, 4>> labels(c, {0, 0, 0, 0});
  std::vector<int> under_in(c, -1);
  std::vector<bool> wire_seen(link.size(), false);

  std::size_t k = 0, p = 0;
  int label = 0;
  for (std::size_t step = 0; step < 2 * c; ++step) {
    if (p % 2 == 0) {
      if (under_in[k] != -1) throw MultiComponent("closure has more than one component");
      under_in[k] = static_cast<int>(p);
    }
    const std::size_t out = (p + 2) & 3;
    labels[k][out] = ++label;
    std::size_t v = link[slots_[k][out]];
    while (owner_[v].first == kOpen) {
      wire_seen[v] = wire_seen[partner_[v]] = true;
      v = link[partner_[v]];
    }
    std::tie(k, p) = owner_[v];
    labels[k][p] = label;
    if (step + 1 < 2 * c && k == 0 && p == 0) throw MultiComponent("closure has more than one component");
  }
  if (k != 0 || p != 0) throw MultiComponent("closure has more than one component");
  for (std::size_t v = 0; v < link.size(); ++v) {
    if (owner_[v].first == kOpen && !wire_seen[v]) throw MultiComponent("closure has a crossingless component");
  }
  PDCode pd;
  for (std::size_t i = 0; i < c; ++i) {
    const auto u = static_cast<std::size_t>(under_in[i]);
    pd.crossings.push_back({labels[i][u], labels[i][(u + 1) & 3], labels[i][(u + 2) & 3], labels[i][(u + 3) & 3]});
  }
  validate_pd(pd);
  return pd;
}

PDCode build_rational(long alpha, long beta) {
  if (alpha < 3 || alpha % 2 == 0) throw ParameterError("alpha must be odd and at least 3");
  if (beta <= 0 || beta >= alpha || std::gcd(alpha, beta) != 1) {
    throw ParameterError("beta must lie in (0, alpha) and be coprime to alpha");
  }
  return Tangle::rational(alpha, beta).numerator();
}

PDCode build_torus(long p, long q) {
  if (p != 2) throw ParameterError("only torus knots T(2, q) are supported");
  if (q < 3 || q % 2 == 0) throw ParameterError("q must be odd and at least 3");
  PDCode pd;
  const long m = 2 * q;
  auto wrap = [m](long v) { return static_cast<int>((v - 1) % m + 1); };
  for (long k = 0; k < q; ++k) {
    pd.crossings.push_back({wrap(2 * k + 1), wrap(2 * k + 1 + q), wrap(2 * k + 2), wrap(2 * k + 2 + q)});
  }
  validate_pd(pd);
  return pd;
}

MontesinosBuild build_montesinos(long b, const std::vector<std::pair<long, long>>& fractions) {
  if (fractions.size() != 3) throw ParameterError("Montesinos knots here take exactly three fractions");
  for (const auto& [beta, alpha] : fractions) {
    if (alpha < 2) throw ParameterError("every alpha must be at least 2");
    if (std::gcd(alpha, beta) != 1) throw ParameterError("every fraction must be in lowest terms");
  }
  Tangle t = Tangle::integer(-b);
  for (const auto& [beta, alpha] : fractions) t.add(Tangle::rational(beta, alpha));
  MontesinosBuild out{t.numerator(), std::nullopt, std::nullopt};
  const auto& f = fractions;
  if (f[0] == std::pair<long, long>{1, 2} && f[1].second == 3) {
    if (f[2].second == 3) {
      const long v = -6 * b + 3 + 2 * f[1].first + 2 * f[2].first;
      out.mu1 = v < 0 ? -v : v;
    } else if (f[2].second == 5) {
      const long v = -30 * b + 15 + 10 * f[1].first + 6 * f[2].first;
      out.mu2 = v < 0 ? -v : v;
    }
  }
  return out;
}

namespace {

// Position of the occurrence of label 1 that leaves its crossing.
std::pair<std::size_t, std::size_t> tail_of_edge_one(const PDCode& pd) {
  const Diagram d = analyze(pd);
  std::vector<int> sign(pd.size(), 0);
  for (const auto& c : d.crossings) sign[c.pd_index] = c.sign;
  for (std::size_t k = 0; k < pd.size(); ++k) {
    for (std::size_t p = 0; p < 4; ++p) {
      if (pd.crossings[k][p] != 1) continue;
      const bool out = p == 2 || (p == 3 && sign[k] > 0) || (p == 1 && sign[k] < 0);
      if (out) return {k, p};
    }
  }
  throw LabelError("edge 1 has no outgoing end");
}

}  // namespace

PDCode connected_sum(const PDCode& a, const PDCode& b) {
  const auto [ka, pa] = tail_of_edge_one(a);
  const auto [kb, pb] = tail_of_edge_one(b);
  const int shift = static_cast<int>(2 * a.size());
  PDCode out = a;
  out.crossings[ka][pa] = shift + 1;
  for (std::size_t k = 0; k < b.size(); ++k) {
    std::array<int, 4> x = b.crossings[k];
    for (std::size_t p = 0; p < 4; ++p) x[p] = (k == kb && p == pb) ? 1 : x[p] + shift;
    out.crossings.push_back(x);
  }
  validate_pd(out);
  return out;
}

}  // namespace qf
