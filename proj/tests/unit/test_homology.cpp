#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "qf/homology/quandle_homology.hpp"
#include "qf/linalg/smith_normal_form.hpp"

using namespace qf;

namespace {

FiniteQuandle from_oracle(const oracle::Table& t, std::size_t n) { return FiniteQuandle::from_table(t, n); }

AbelianGroup expected_h2(const oracle::Table& t, std::size_t n) {
  const auto h = oracle::quandle_h2(t, n);
  return abelian_group_from_factors(h.free_rank, h.torsion);
}

}  // namespace

TEST_CASE("boundary shapes") {
  const auto one = boundaries(FiniteQuandle::trivial(1));
  CHECK(one.d2.rows() == 1);
  CHECK(one.d2.cols() == 0);
  CHECK(one.d3.rows() == 0);
  CHECK(one.d3.cols() == 0);

  const auto r3 = boundaries(FiniteQuandle::dihedral(3));
  CHECK(r3.d2.rows() == 3);
  CHECK(r3.d2.cols() == 6);
  CHECK(r3.d3.rows() == 6);
  CHECK(r3.d3.cols() == 12);
  for (std::size_t c = 0; c < 6; ++c) {
    int plus = 0, minus = 0;
    for (std::size_t r = 0; r < 3; ++r) {
      const Integer v = r3.d2.at(r, c);
      plus += v == 1;
      minus += v == -1;
    }
    CHECK(plus == 1);
    CHECK(minus == 1);
  }
  CHECK(r3.d2.at(0, kernels::pair_index(0, 1, 3)) == 1);
  CHECK(r3.d2.at(2, kernels::pair_index(0, 1, 3)) == -1);
}

TEST_CASE("small homology groups") {
  CHECK(h1(FiniteQuandle::trivial(1)) == AbelianGroup::free(1));
  CHECK(h2(FiniteQuandle::trivial(1)).is_trivial());
  CHECK(h1(FiniteQuandle::trivial(2)) == AbelianGroup::free(2));
  CHECK(h2(FiniteQuandle::trivial(2)) == AbelianGroup::free(2));
  CHECK(h1(FiniteQuandle::dihedral(3)) == AbelianGroup::free(1));
  CHECK(h2(FiniteQuandle::dihedral(3)).is_trivial());
  CHECK(h1(FiniteQuandle::dihedral(4)) == AbelianGroup::free(2));
  // Tetrahedral quandle: Alexander quandle on F_4 with t a cube root of unity.
  const oracle::Table tetra = {0, 2, 3, 1, 3, 1, 0, 2, 1, 3, 2, 0, 2, 0, 1, 3};
  REQUIRE(oracle::is_quandle(tetra, 4));
  CHECK(h1(from_oracle(tetra, 4)) == AbelianGroup::free(1));
  CHECK(h2(from_oracle(tetra, 4)) == AbelianGroup::cyclic(2));
}

TEST_CASE("d2 d3 = 0 and h2 matches the dense oracle on random quandles") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const auto [t, n] = oracle::random_small_quandle(rng);
    CAPTURE(trial);
    const auto q = from_oracle(t, n);
    const auto c = boundaries(q);
    CHECK(multiply(c.d2, c.d3).is_zero());
    CHECK(kernels::serial::product_is_zero(c.d2, c.d3));
    CHECK(h2(c) == expected_h2(t, n));
    if (is_connected(q)) CHECK(h1(c) == AbelianGroup::free(1));
    CHECK(h1(c).free_rank == components(q).size());
  }
}

TEST_CASE("h2 is invariant under relabeling") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    const auto [t, n] = oracle::random_small_quandle(rng);
    const auto q = from_oracle(t, n);
    std::vector<Element> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(h2(q.relabeled(perm)) == h2(q));
    CHECK(h1(q.relabeled(perm)) == h1(q));
  }
}

TEST_CASE("Alexander quandles against the oracle") {
  for (auto [m, s] : std::vector<std::pair<std::size_t, std::size_t>>{{5, 2}, {5, 3}, {7, 3}, {7, 2}, {8, 3}, {9, 2}}) {
    CAPTURE(m);
    CAPTURE(s);
    const auto t = oracle::alexander(m, s);
    CHECK(h2(from_oracle(t, m)) == expected_h2(t, m));
  }
}

TEST_CASE("extension orders") {
  CHECK(h2_order_via_extension(120, 20) == 6);
  CHECK(h2_order_via_extension(8, 4) == 2);
  CHECK(h2_order_via_extension(7, 7) == 1);
  CHECK_THROWS_AS(h2_order_via_extension(10, 4), DivisibilityError);
  CHECK_THROWS_AS(h2_order_via_extension(10, 0), DivisibilityError);
}

TEST_CASE("json form") {
  CHECK(to_json(AbelianGroup::cyclic(4)) == R"({"free_rank":0,"torsion":[4]})");
  CHECK(to_json(AbelianGroup::free(1)) == R"({"free_rank":1,"torsion":[]})");
}
