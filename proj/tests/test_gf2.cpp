#include <gatelim/gf2.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

using namespace gatelim;

namespace {

bit_matrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  bit_matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      m.set(r, c, rng() & 1u);
  return m;
}

bit_vector random_vector(std::size_t n, std::mt19937_64& rng) {
  bit_vector v(n);
  for (std::size_t i = 0; i < n; ++i)
    v.set(i, rng() & 1u);
  return v;
}

// Exhaustive point set of a subspace over a small ambient space.
std::set<std::string> point_set(const affine_subspace& s) {
  std::set<std::string> pts;
  for (const auto& p : enumerate_points(s))
    pts.insert(p.to_string());
  return pts;
}

affine_subspace random_subspace(std::size_t n, std::size_t dim, std::mt19937_64& rng) {
  while (true) {
    bit_matrix d = random_matrix(n, dim, rng);
    if (rank(d) == dim)
      return {d, random_vector(n, rng)};
  }
}

} // namespace

TEST_CASE("solve on identity returns the right-hand side") {
  auto x = solve(bit_matrix::identity(3), bit_vector::from_string("101"));
  REQUIRE(x.has_value());
  CHECK(x->to_string() == "101");
}

TEST_CASE("solve picks the leftmost pivot solution") {
  // single parity row over two variables
  bit_matrix m(1, 2);
  m.set(0, 0, true);
  m.set(0, 1, true);
  auto x = solve(m, bit_vector::from_string("1"));
  REQUIRE(x.has_value());
  CHECK(x->to_string() == "10");
}

TEST_CASE("solve reports inconsistency") {
  bit_matrix m(2, 2);
  CHECK_FALSE(solve(m, bit_vector::from_string("10")).has_value());
}

TEST_CASE("kernel of identity is empty") {
  CHECK(kernel_basis(bit_matrix::identity(4)).empty());
}

TEST_CASE("kernel of an all-ones row has n-1 vectors") {
  const std::size_t n = 6;
  bit_matrix m(1, n);
  for (std::size_t c = 0; c < n; ++c)
    m.set(0, c, true);
  auto basis = kernel_basis(m);
  CHECK(basis.size() == n - 1);
  for (const auto& b : basis)
    CHECK_FALSE(m.apply(b).get(0));
}

TEST_CASE("kernel vectors are annihilated and independent") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 200; ++iter) {
    auto m = random_matrix(4, 6, rng);
    auto basis = kernel_basis(m);
    CHECK(basis.size() == 6 - rank(m));
    for (const auto& b : basis)
      CHECK(m.apply(b).none());
    if (!basis.empty()) {
      auto bm = bit_matrix::from_columns(basis, 6);
      CHECK(rank(bm) == basis.size());
    }
  }
}

TEST_CASE("solve finds a solution whenever one exists") {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 500; ++iter) {
    const std::size_t rows = 1 + rng() % 8, cols = 1 + rng() % 8;
    auto m = random_matrix(rows, cols, rng);
    auto x0 = random_vector(cols, rng);
    auto v = m.apply(x0);
    auto x = solve(m, v);
    REQUIRE(x.has_value());
    CHECK(m.apply(*x) == v);
  }
}

TEST_CASE("constraint_to_affine matches the parity constraint") {
  SECTION("single variable") {
    auto s = constraint_to_affine({1}, true, 2);
    CHECK(point_set(s) == std::set<std::string>{"10", "11"});
  }
  SECTION("equality constraint") {
    auto s = constraint_to_affine({1, 2}, false, 2);
    CHECK(point_set(s) == std::set<std::string>{"00", "11"});
  }
  SECTION("odd parity on three bits") {
    auto s = constraint_to_affine({1, 2, 3}, true, 3);
    CHECK(s.dim() == 2);
    auto pts = point_set(s);
    CHECK(pts.size() == 4);
    for (const auto& p : pts)
      CHECK(bit_vector::from_string(p).parity());
  }
  SECTION("empty index set is rejected") {
    CHECK_THROWS_AS(constraint_to_affine({}, false, 3), input_error);
  }
}

TEST_CASE("affine_intersect against enumeration") {
  SECTION("full plane with equality constraint") {
    auto s1 = affine_subspace::full(2);
    auto s2 = constraint_to_affine({1, 2}, false, 2);
    auto w = affine_intersect(s1, s2);
    CHECK(w.dim() == 1);
    CHECK(point_set(w) == std::set<std::string>{"00", "11"});
  }
  SECTION("subset stays unchanged") {
    auto s1 = constraint_to_affine({1}, false, 3);
    auto s2 = constraint_to_affine({1}, false, 3);
    auto w = affine_intersect(s1, s2);
    CHECK(w.dim() == s1.dim());
    CHECK(point_set(w) == point_set(s1));
  }
  SECTION("two coordinate constraints") {
    auto s1 = constraint_to_affine({1}, false, 3);
    auto s2 = constraint_to_affine({2}, true, 3);
    auto w = affine_intersect(s1, s2);
    CHECK(w.dim() == 1);
    CHECK(point_set(w) == std::set<std::string>{"010", "011"});
  }
  SECTION("empty intersection is an error") {
    auto s1 = constraint_to_affine({1}, false, 2);
    auto s2 = constraint_to_affine({1}, true, 2);
    CHECK_THROWS_AS(affine_intersect(s1, s2), input_error);
  }
}

TEST_CASE("affine_intersect point set equals pairwise containment") {
  std::mt19937_64 rng(23);
  for (int iter = 0; iter < 300; ++iter) {
    const std::size_t n = 2 + rng() % 5;
    const std::size_t d1 = 1 + rng() % n;
    auto s1 = random_subspace(n, d1, rng);
    auto s2 = random_subspace(n, n - 1, rng);
    std::set<std::string> expected;
    for (const auto& p : enumerate_points(s1))
      if (subspace_contains(s2, p))
        expected.insert(p.to_string());
    if (expected.empty()) {
      CHECK_THROWS_AS(affine_intersect(s1, s2), input_error);
      continue;
    }
    auto w = affine_intersect(s1, s2);
    CHECK(rank(w.direction) == w.dim());
    CHECK((w.dim() == d1 || w.dim() + 1 == d1));
    CHECK(point_set(w) == expected);
  }
}

TEST_CASE("subspace containment and subset") {
  auto full = affine_subspace::full(3);
  CHECK(subspace_contains(full, bit_vector::from_string("101")));
  CHECK(subspace_subset(full, full));
  auto s1 = affine_intersect(constraint_to_affine({1}, false, 3),
                             constraint_to_affine({2}, true, 3));
  CHECK(subspace_subset(s1, constraint_to_affine({1}, false, 3)));
  CHECK_FALSE(subspace_subset(constraint_to_affine({1}, false, 3), s1));
}

TEST_CASE("enumerate yields exactly 2^dim distinct contained points") {
  std::mt19937_64 rng(31);
  for (int iter = 0; iter < 100; ++iter) {
    const std::size_t n = 1 + rng() % 6;
    const std::size_t dim = rng() % (n + 1);
    auto s = random_subspace(n, dim, rng);
    auto pts = enumerate_points(s);
    std::set<std::string> distinct;
    for (const auto& p : pts) {
      distinct.insert(p.to_string());
      CHECK(subspace_contains(s, p));
    }
    CHECK(distinct.size() == (std::size_t{1} << dim));
  }
}

TEST_CASE("enumerate cap is enforced") {
  auto s = affine_subspace::full(8);
  CHECK_THROWS_AS(enumerate_points(s, 4), resource_error);
}
