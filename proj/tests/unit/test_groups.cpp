#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "oracles.hpp"
#include "qf/core/finite_quandle.hpp"
#include "qf/core/isomorphism.hpp"
#include "qf/groups/knot_groups.hpp"

using namespace qf;

namespace {

constexpr int x = 1, y = 2, X = -1, Y = -2;

// Trefoil group <x, y | xyx = yxy> with meridian x and longitude y x^2 y x^-4.
PeripheralPresentation braid_trefoil() {
  PeripheralPresentation p;
  p.group = GroupPresentation(2, {{x, y, x, Y, X, Y}}, {"x", "y"});
  p.meridian = 0;
  p.longitude = {y, x, x, y, X, X, X, X};
  return p;
}

std::size_t group_order(const GroupPresentation& g) { return todd_coxeter(g, {}).cosets; }

// Exhaustive check that each relator and its inverse close up from every coset.
bool table_consistent(const GroupPresentation& g, const CosetTable& t) {
  for (std::size_t c = 0; c < t.cosets; ++c) {
    for (const auto& r : g.relators()) {
      if (t.act(static_cast<Element>(c), r) != c) return false;
      if (t.act(static_cast<Element>(c), inverse(r)) != c) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("word helpers") {
  CHECK(free_reduce({1, -1, 2}) == Word{2});
  CHECK(free_reduce({1, 2, -2, -1}).empty());
  CHECK(cyclic_reduce({-1, 2, 3, 1}) == Word{2, 3});
  CHECK(inverse({1, -2}) == Word{2, -1});
  CHECK(power({1, 2}, -2) == Word{-2, -1, -2, -1});
  CHECK(exponent_sum({1, 1, -2}) == 1);
  CHECK(exponent_sum({1, 1, -2}, 1) == -1);
  CHECK(letter_column(-2) == 3);
  CHECK(letter_column(2) == 2);
}

TEST_CASE("presentation normalizes relators") {
  GroupPresentation g(2, {{1, -1}, {-2, 1, 1, 2}});
  CHECK(g.relators().size() == 1);
  CHECK(g.relators()[0] == Word{1, 1});
  CHECK_THROWS_AS(GroupPresentation(1, {{2}}), PresentationError);
  CHECK(g.word_to_string({1, -2}) == "x0 x1^-1");
}

TEST_CASE("todd_coxeter on small groups") {
  CHECK(group_order(GroupPresentation(1, {{1}})) == 1);
  CHECK(group_order(GroupPresentation(1, {{1, 1, 1, 1, 1}})) == 5);
  // S3 = <a, b | a^2, b^3, (ab)^2>.
  GroupPresentation s3(2, {{1, 1}, {2, 2, 2}, {1, 2, 1, 2}});
  CHECK(group_order(s3) == 6);
  CHECK(todd_coxeter(s3, {{1}}).cosets == 3);
  CHECK(todd_coxeter(s3, {{2}}).cosets == 2);
  // A5 = <a, b | a^2, b^3, (ab)^5>.
  GroupPresentation a5(2, {{1, 1}, {2, 2, 2}, {1, 2, 1, 2, 1, 2, 1, 2, 1, 2}});
  CHECK(group_order(a5) == 60);
  // Quaternion group <a, b | a^4, a^2 b^-2, b^-1 a b a>.
  GroupPresentation q8(2, {{1, 1, 1, 1}, {1, 1, -2, -2}, {-2, 1, 2, 1}});
  CHECK(group_order(q8) == 8);
  // Free abelian quotient with a tiny cap overflows.
  CHECK_THROWS_AS(todd_coxeter(GroupPresentation(2, {{1, 2, -1, -2}}), {}, 50), Overflow);
  CHECK_THROWS_AS(todd_coxeter(GroupPresentation(1, {{1, 1, 1, 1, 1}}), {}, 4), Overflow);
}

TEST_CASE("coset tables are standardized and verified") {
  GroupPresentation a5(2, {{1, 1}, {2, 2, 2}, {1, 2, 1, 2, 1, 2, 1, 2, 1, 2}});
  for (const std::vector<Word>& sub : {std::vector<Word>{}, {{1}}, {{2}}, {{1, 2}}}) {
    const auto t = todd_coxeter(a5, sub);
    CHECK(table_consistent(a5, t));
    for (const auto& w : sub) CHECK(t.act(0, w) == 0);
    for (std::size_t c = 0; c < t.cosets; ++c) CHECK(t.act(0, t.representatives[c]) == c);
    CosetTable copy = t;
    rebuild_spanning_tree(copy);
    CHECK(copy.representatives == t.representatives);
    CHECK_NOTHROW(verify_coset_table(a5, t));
  }
  CHECK(todd_coxeter(a5, {{1}}).cosets == 30);
  CHECK(todd_coxeter(a5, {{1, 2}}).cosets == 12);
}

TEST_CASE("verify_coset_table rejects a corrupted table") {
  GroupPresentation s3(2, {{1, 1}, {2, 2, 2}, {1, 2, 1, 2}});
  auto t = todd_coxeter(s3, {});
  std::swap(t.action[0][1], t.action[0][2]);
  CHECK_THROWS_AS(verify_coset_table(s3, t), IncompleteTable);
}

TEST_CASE("small caps still complete when lookahead frees room") {
  // Index 60 with a cap that forces at least one lookahead pass.
  GroupPresentation a5(2, {{1, 1}, {2, 2, 2}, {1, 2, 1, 2, 1, 2, 1, 2, 1, 2}});
  const auto loose = todd_coxeter(a5, {});
  for (std::size_t cap : {64, 70, 90, 120}) {
    try {
      const auto t = todd_coxeter(a5, {}, cap);
      CHECK(t.action == loose.action);
    } catch (const Overflow& e) {
      CHECK(e.cap() == cap);
    }
  }
}

TEST_CASE("trefoil quotients G_n") {
  const auto p = braid_trefoil();
  CHECK(group_order(g_n_presentation(p, 1)) == 1);
  CHECK(group_order(g_n_presentation(p, 2)) == 6);
  CHECK(group_order(g_n_presentation(p, 3)) == 24);
  CHECK(group_order(g_n_presentation(p, 4)) == 96);
  CHECK(group_order(g_n_presentation(p, 5)) == 600);
}

TEST_CASE("meridian and longitude commute in G_n") {
  const auto p = braid_trefoil();
  for (long n = 2; n <= 5; ++n) {
    const auto g = g_n_presentation(p, n);
    const auto t = todd_coxeter(g, {});
    const Word ml = concat(p.meridian_word(), p.longitude);
    const Word lm = concat(p.longitude, p.meridian_word());
    for (std::size_t c = 0; c < t.cosets; ++c) CHECK(t.act(static_cast<Element>(c), ml) == t.act(static_cast<Element>(c), lm));
  }
}

TEST_CASE("knot n-quandles of the trefoil from P cosets") {
  const auto p = braid_trefoil();
  const std::size_t sizes[] = {0, 1, 3, 4, 6, 12};
  for (long n = 1; n <= 5; ++n) {
    const auto t = peripheral_cosets(p, n);
    const auto q = quandle_from_cosets(t, p.meridian_word());
    CHECK(q.size() == sizes[n]);
    CHECK(oracle::is_quandle(std::vector<std::uint32_t>(q.table().begin(), q.table().end()), q.size()));
    CHECK(is_connected(q));
    CHECK(quandle_type(q) == static_cast<std::uint64_t>(n));
  }
}

TEST_CASE("branched cover groups of the trefoil") {
  const auto p = braid_trefoil();
  struct Row {
    long n;
    std::size_t pi1;
    Element l_order;
  };
  for (const Row row : {Row{2, 3, 1}, Row{3, 8, 2}, Row{4, 24, 4}, Row{5, 120, 10}}) {
    CAPTURE(row.n);
    const auto bc = branched_cover_group(p, row.n);
    CHECK(bc.g_n_order == static_cast<std::size_t>(row.n) * bc.pi1->order());
    CHECK(bc.pi1->order() == row.pi1);
    CHECK(element_order(*bc.pi1, bc.longitude) == row.l_order);
    CHECK(bc.phi(bc.longitude) == bc.longitude);

    // The P\G_n model agrees with A\pi1 under phi.
    const auto a = bc.pi1->generated_subgroup(std::vector<Element>{bc.longitude});
    const auto model = coset_quandle(*bc.pi1, bc.phi, a);
    const auto enumerated = quandle_from_cosets(peripheral_cosets(p, row.n), p.meridian_word());
    CHECK(is_isomorphic(model, enumerated).has_value());
    CHECK(model.size() * row.l_order == row.pi1);
  }
}

TEST_CASE("cyclic presentation of trefoil branched covers") {
  const std::size_t orders[] = {0, 0, 3, 8, 24, 120};
  for (long n = 2; n <= 5; ++n) {
    const auto c = trefoil_branched_presentation(n);
    CHECK(group_order(c.group) == orders[n]);
  }
  CHECK(abelianization(trefoil_branched_presentation(5).group) == AbelianGroup{});
  CHECK(abelianization(trefoil_branched_presentation(6).group) == AbelianGroup::free(2));
  CHECK(abelianization(trefoil_branched_presentation(7).group) == AbelianGroup{});
  CHECK(abelianization(trefoil_branched_presentation(8).group) == AbelianGroup::cyclic(3));
  CHECK(abelianization(trefoil_branched_presentation(9).group) ==
        abelian_group_from_factors(0, {Integer(2), Integer(2)}));
  CHECK(abelianization(trefoil_branched_presentation(12).group) == AbelianGroup::free(2));

  // Longitude order from the cyclic model.
  const Element expected[] = {0, 0, 1, 2, 4, 10};
  for (long n = 2; n <= 5; ++n) {
    const auto c = trefoil_branched_presentation(n);
    const auto t = todd_coxeter(c.group, {});
    Element k = 1;
    Element at = t.act(0, c.longitude);
    while (at != 0) {
      at = t.act(at, c.longitude);
      ++k;
    }
    CHECK(k == expected[n]);
  }
}

TEST_CASE("longitudes at different indices are conjugate") {
  for (long n = 3; n <= 5; ++n) {
    const auto base = trefoil_branched_presentation(n, 1);
    const auto t = todd_coxeter(base.group, {});
    // Conjugacy class of l_1 as a set of group elements.
    std::vector<bool> klass(t.cosets, false);
    const Element l1 = t.act(0, base.longitude);
    for (std::size_t g = 0; g < t.cosets; ++g) {
      const Word& r = t.representatives[g];
      klass[t.act(0, concat(concat(inverse(r), t.representatives[l1]), r))] = true;
    }
    for (long i = 2; i <= n; ++i) {
      const auto other = trefoil_branched_presentation(n, i);
      CHECK(klass[t.act(0, other.longitude)]);
    }
  }
}

TEST_CASE("abelianization of knot and free groups") {
  CHECK(abelianization(braid_trefoil().group) == AbelianGroup::free(1));
  CHECK(abelianization(GroupPresentation(3, {})) == AbelianGroup::free(3));
  CHECK(abelianization(GroupPresentation(1, {{1, 1, 1, 1}})) == AbelianGroup::cyclic(4));
}

TEST_CASE("coset cache round trip") {
  const auto dir = std::filesystem::temp_directory_path() / "qf-test-cache";
  std::filesystem::remove_all(dir);
  const auto p = braid_trefoil();
  const auto g = g_n_presentation(p, 4);
  CosetCache cache(dir);
  const auto first = enumerate_cosets(g, {}, 1000, &cache);
  CHECK(cache.misses() == 1);
  const auto second = enumerate_cosets(g, {}, 1000, &cache);
  CHECK(cache.hits() == 1);
  CHECK(second.action == first.action);
  CHECK(second.representatives == first.representatives);
  // A different cap is a different key.
  enumerate_cosets(g, {}, 2000, &cache);
  CHECK(cache.misses() == 2);

  // Corrupt file is a miss and gets rewritten.
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    std::ofstream(e.path()) << "{\"key\": 1}";
  }
  CosetCache again(dir);
  CHECK(enumerate_cosets(g, {}, 1000, &again).action == first.action);
  CHECK(again.hits() == 0);
  std::filesystem::remove_all(dir);
}
