#include "qf/diagrams/diagram.hpp"

#include <cstdint>
#include <optional>

namespace qf {

namespace {

using Slots = std::vector<std::array<std::size_t, 2>>;

Slots slots_by_label(const PDCode& pd) {
  Slots slots(2 * pd.size() + 1, {SIZE_MAX, SIZE_MAX});
  for (std::size_t k = 0; k < pd.size(); ++k) {
    for (std::size_t p = 0; p < 4; ++p) {
      auto& s = slots[static_cast<std::size_t>(pd.crossings[k][p])];
      (s[0] == SIZE_MAX ? s[0] : s[1]) = 4 * k + p;
    }
  }
  return slots;
}

int label_at(const PDCode& pd, std::size_t slot) { return pd.crossings[slot / 4][slot % 4]; }

// Walks the knot entering at `start`; empty if some understrand is entered at position 2.
std::optional<Diagram> walk(const PDCode& pd, const Slots& slots, std::size_t start) {
  const std::size_t c = pd.size();
  Diagram d;
  d.pd = pd;
  d.arc_of_edge.assign(2 * c + 1, 0);
  std::vector<std::size_t> over_arc(c, 0);
  std::vector<int> over_sign(c, 0);
  std::vector<std::size_t> under_order;
  std::size_t arc = 0;
  std::size_t slot = start;
  for (std::size_t step = 0; step < 2 * c; ++step) {
    const std::size_t k = slot / 4, p = slot % 4;
    d.arc_of_edge[static_cast<std::size_t>(label_at(pd, slot))] = arc;
    if (p == 2) return std::nullopt;
    if (p == 0) {
      under_order.push_back(k);
      ++arc;
    } else {
      over_arc[k] = arc;
      over_sign[k] = p == 1 ? 1 : -1;
    }
    const std::size_t out = 4 * k + ((p + 2) & 3);
    const auto& s = slots[static_cast<std::size_t>(label_at(pd, out))];
    slot = s[0] == out ? s[1] : s[0];
  }
  if (slot != start || under_order.size() != c) return std::nullopt;
  for (auto& a : d.arc_of_edge) a %= c;
  for (auto& a : over_arc) a %= c;
  for (std::size_t i = 0; i < c; ++i) {
    const std::size_t k = under_order[i];
    d.crossings.push_back({k, i, (i + 1) % c, over_arc[k], over_sign[k]});
    d.writhe += over_sign[k];
  }
  return d;
}

}  // namespace

Diagram analyze(const PDCode& pd) {
  validate_pd(pd);
  const Slots slots = slots_by_label(pd);
  // Try edge 1 in both directions; the code's position-0 convention admits one.
  for (std::size_t start : {slots[1][0], slots[1][1]}) {
    if (auto d = walk(pd, slots, start)) return *std::move(d);
  }
  throw OrientationInconsistent("no orientation enters every understrand at the first listed position");
}

PeripheralPresentation wirtinger_with_peripherals(const Diagram& d) {
  const std::size_t m = d.arcs();
  std::vector<Word> relators;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i) names.push_back("x" + std::to_string(i));
  Word longitude;
  for (const auto& c : d.crossings) {
    const int over = generator_letter(c.over);
    const int e = c.sign > 0 ? over : -over;
    relators.push_back({-generator_letter(c.under_out), -e, generator_letter(c.under_in), e});
    longitude.push_back(e);
  }
  PeripheralPresentation p;
  p.group = GroupPresentation(m, std::move(relators), std::move(names));
  p.meridian = 0;
  p.longitude = concat(longitude, power({generator_letter(0)}, -d.writhe));
  p.writhe = d.writhe;
  return p;
}

std::vector<Word> arc_words(const Diagram& d) {
  std::vector<Word> g(d.arcs());
  for (std::size_t i = 1; i < d.arcs(); ++i) {
    const auto& c = d.crossings[i - 1];
    const int over = generator_letter(c.over);
    g[i] = concat(g[i - 1], {c.sign > 0 ? over : -over});
  }
  return g;
}

QuandlePresentation quandle_presentation(const Diagram& d, long n) {
  QuandlePresentation q;
  const std::size_t m = d.arcs();
  for (std::size_t i = 0; i < m; ++i) q.generators.push_back("a" + std::to_string(i));
  for (const auto& c : d.crossings) {
    q.relators.push_back({Term::op(Term::gen(q.generators[c.under_in]), Term::gen(q.generators[c.over]), c.sign),
                          Term::gen(q.generators[c.under_out])});
  }
  if (n >= 1) {
    for (std::size_t i = 1; i < m; ++i) {
      q.relators.push_back({Term::op(Term::gen(q.generators[i]), Term::gen(q.generators[0]), n),
                            Term::gen(q.generators[i])});
    }
  }
  return q;
}

}  // namespace qf
