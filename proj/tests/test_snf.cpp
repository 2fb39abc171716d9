#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>

#include "brauerlab/rng.hpp"
#include "brauerlab/snf.hpp"

using namespace brauerlab;

namespace {

IntMatrix random_matrix(Rng& rng, std::size_t r, std::size_t c, long lo, long hi) {
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.uniform(lo, hi);
  return m;
}

// gcd of all k x k minors, by cofactor expansion on small matrices
Int determinantal_divisor(const IntMatrix& a, std::size_t k) {
  std::function<Int(const IntMatrix&)> det = [&](const IntMatrix& m) -> Int {
    if (m.rows() == 1) return m(0, 0);
    Int s = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      IntMatrix minor(m.rows() - 1, m.cols() - 1);
      for (std::size_t i = 1; i < m.rows(); ++i)
        for (std::size_t c = 0, cc = 0; c < m.cols(); ++c)
          if (c != j) minor(i - 1, cc++) = m(i, c);
      s += (j % 2 ? -1 : 1) * m(0, j) * det(minor);
    }
    return s;
  };
  Int g = 0;
  std::vector<std::size_t> rows, cols;
  std::function<void(std::size_t)> pick_cols;
  std::function<void(std::size_t)> pick_rows = [&](std::size_t start) {
    if (rows.size() == k) {
      pick_cols(0);
      return;
    }
    for (std::size_t i = start; i < a.rows(); ++i) {
      rows.push_back(i);
      pick_rows(i + 1);
      rows.pop_back();
    }
  };
  pick_cols = [&](std::size_t start) {
    if (cols.size() == k) {
      IntMatrix m(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m(i, j) = a(rows[i], cols[j]);
      Int d = det(m);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      return;
    }
    for (std::size_t j = start; j < a.cols(); ++j) {
      cols.push_back(j);
      pick_cols(j + 1);
      cols.pop_back();
    }
  };
  pick_rows(0);
  return g;
}

}  // namespace

TEST_CASE("smith normal form postconditions on random matrices") {
  Rng rng(2024);
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t r = static_cast<std::size_t>(rng.uniform(1, 30));
    std::size_t c = static_cast<std::size_t>(rng.uniform(1, 30));
    IntMatrix a = random_matrix(rng, r, c, -50, 50);
    if (trial % 5 == 0 && r > 2) {
      // force rank deficiency
      for (std::size_t j = 0; j < c; ++j) a(r - 1, j) = 3 * a(0, j) - 2 * a(1, j);
    }
    SNFResult s = smith_normal_form(a);
    REQUIRE(s.U * a * s.V == s.D);
    Int du = determinant(s.U), dv = determinant(s.V);
    REQUIRE((du == 1 || du == -1));
    REQUIRE((dv == 1 || dv == -1));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j) REQUIRE(sgn(s.D(i, j)) == 0);
    for (std::size_t i = 0; i < s.rank; ++i) {
      REQUIRE(sgn(s.D(i, i)) > 0);
      if (i + 1 < s.rank) REQUIRE(mpz_divisible_p(s.D(i + 1, i + 1).get_mpz_t(), s.D(i, i).get_mpz_t()));
    }
    for (std::size_t i = s.rank; i < std::min(r, c); ++i) REQUIRE(sgn(s.D(i, i)) == 0);
  }
}

TEST_CASE("elementary divisors agree with determinantal divisors") {
  Rng rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = static_cast<std::size_t>(rng.uniform(1, 4));
    std::size_t c = static_cast<std::size_t>(rng.uniform(1, 4));
    IntMatrix a = random_matrix(rng, r, c, -6, 6);
    auto d = elementary_divisors(a);
    Int prod = 1;
    for (std::size_t k = 1; k <= std::min(r, c); ++k) {
      Int dk = determinantal_divisor(a, k);
      if (k <= d.size()) {
        prod *= d[k - 1];
        CHECK(prod == dk);
      } else {
        CHECK(dk == 0);
      }
    }
  }
}

TEST_CASE("known smith forms") {
  IntMatrix a = from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  auto d = elementary_divisors(a);
  REQUIRE(d.size() == 3);
  CHECK(d[0] == 2);
  CHECK(d[1] == 6);
  CHECK(d[2] == 12);
  CHECK(integer_rank(from_rows({{1, 2}, {2, 4}})) == 1);
  CHECK(elementary_divisors(int_zero(3, 2)).empty());
}

TEST_CASE("saturated kernel") {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t r = static_cast<std::size_t>(rng.uniform(1, 6));
    std::size_t c = static_cast<std::size_t>(rng.uniform(r, 10));
    IntMatrix a = random_matrix(rng, r, c, -9, 9);
    IntMatrix k = integer_kernel(a);
    CHECK(k.cols() == c - integer_rank(a));
    if (k.cols() > 0) {
      CHECK(is_zero(a * k));
      CHECK(has_unit_divisors(k));
    }
  }
  // kernel of (2 2) is spanned by (1,-1), not (2,-2)
  IntMatrix k = integer_kernel(from_rows({{2, 2}}));
  REQUIRE(k.cols() == 1);
  CHECK(abs(k(0, 0)) == 1);
  CHECK(k(0, 0) + k(1, 0) == 0);
}

TEST_CASE("integer membership") {
  auto x = solve_membership({1, 1}, {{1, 0}, {0, 1}});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == 1);
  CHECK((*x)[1] == 1);
  CHECK_FALSE(solve_membership({1, 0}, {{2, 0}}).has_value());
  CHECK(solve_membership({2, 0}, {{2, 0}}).has_value());
  CHECK_FALSE(solve_membership({1, 1}, {{1, 0}}).has_value());
}

TEST_CASE("left inverse and determinant") {
  IntMatrix b = from_rows({{1, 0}, {-1, 1}, {0, -1}});
  auto l = left_inverse(b);
  REQUIRE(l.has_value());
  CHECK(is_identity(*l * b));
  CHECK_FALSE(left_inverse(from_rows({{2}, {0}})).has_value());
  CHECK(determinant(from_rows({{1, 2}, {3, 4}})) == -2);
  CHECK(determinant(from_rows({{0, 1}, {1, 0}})) == -1);
  CHECK(determinant(from_rows({{2, 0, 1}, {1, 3, 2}, {1, 1, 2}})) == 6);
}
