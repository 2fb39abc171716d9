#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "brauerlab/factorsets.hpp"
#include "brauerlab/rng.hpp"

using namespace brauerlab;

namespace {

// antisymmetric with zero row sums: the linear description of wedge^2 A inside U(x)U
bool antisymmetric_zero_rows(const FactorSetMonomial& m) {
  for (int i = 0; i < m.n(); ++i) {
    long row = 0;
    for (int j = 0; j < m.n(); ++j) {
      if (m.zeta(i, j) != -m.zeta(j, i)) return false;
      row += m.zeta(i, j);
    }
    if (row != 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("factor set entries") {
  auto c = udn_factor_set(3);
  FactorSetMonomial want(3);
  want.zeta(0, 1) = 1;
  want.zeta(1, 2) = 1;
  want.zeta(0, 2) = -1;
  CHECK(c.at(0, 1, 2) == want);
  CHECK(c.at(0, 1, 2).to_string() == "z12 z13^-1 z23");
  CHECK(c.at(0, 0, 0) == zeta_monomial(3, 0, 0));
  for (int i = 0; i < 3; ++i)
    for (int h = 0; h < 3; ++h) CHECK(c.at(i, i, h) == zeta_monomial(3, i, i));
  CHECK_THROWS_WITH(normalized_factor_set(4), doctest::Contains("n must be odd"));
}

TEST_CASE("normalized factor set") {
  auto c = normalized_factor_set(5);
  auto e = udn_factor_set(5);
  // exponent 3 on the antisymmetric base
  auto base = e.at(0, 1, 2) * e.at(2, 1, 0).inverse();
  CHECK(c.at(0, 1, 2) == base.pow(3));
  CHECK(c.at(0, 1, 2).zeta(0, 1) == 3);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      CHECK(c.at(i, j, i).is_one());
      for (int h = 0; h < 5; ++h) CHECK((c.at(i, j, h) * c.at(h, j, i)).is_one());
    }
  CHECK(check_normalized(c).ok());
  CHECK_FALSE(check_reduced(e).ok());
}

TEST_CASE("equivariance") {
  for (int n : {3, 5, 7}) {
    CHECK(check_equivariance(udn_factor_set(n)).ok());
    CHECK(check_equivariance(normalized_factor_set(n)).ok());
  }
  auto c = udn_factor_set(5);
  c.at(0, 1, 2).zeta(3, 4) += 1;
  auto cert = check_equivariance(c);
  CHECK_FALSE(cert.ok());
  CHECK(cert.failure().find("(1,2,3)") != std::string::npos);
}

TEST_CASE("cocycle identity") {
  for (int n = 2; n <= 7; ++n) {
    INFO("n = " << n);
    CHECK(check_cocycle(udn_factor_set(n)).ok());
    if (n % 2 == 1 && n >= 3) CHECK(check_cocycle(normalized_factor_set(n)).ok());
  }
  // with c_jhl inverted the identity fails, e.g. at (1,2,3,4)
  auto lit = check_cocycle_literal(udn_factor_set(4));
  CHECK_FALSE(lit.ok());
  CHECK(lit.failure().find("l=4") != std::string::npos);
}

TEST_CASE("wedge membership") {
  auto e = udn_factor_set(5);
  auto base = e.at(0, 1, 2) * e.at(2, 1, 0).inverse();
  auto x = wedge_membership(base);
  REQUIRE(x.has_value());
  CHECK(wedge_element(5, *x) == base);
  // (u1-u2)^(u2-u3) expansion
  FactorSetMonomial expect(5);
  expect.zeta(0, 1) = 1;
  expect.zeta(1, 0) = -1;
  expect.zeta(1, 2) = 1;
  expect.zeta(2, 1) = -1;
  expect.zeta(2, 0) = 1;
  expect.zeta(0, 2) = -1;
  CHECK(base == expect);

  CHECK_FALSE(wedge_membership(zeta_monomial(5, 0, 1)).has_value());
  auto zero = wedge_membership(FactorSetMonomial(5));
  REQUIRE(zero.has_value());
  for (const auto& v : *zero) CHECK(v == 0);
  FactorSetMonomial diag(5);
  diag.zeta_diag(2) = 1;
  CHECK_THROWS_WITH(wedge_membership(diag), doctest::Contains("diagonal variables present"));

  for (int n : {5, 7}) CHECK(check_wedge_entries(normalized_factor_set(n)).ok());
  CHECK_FALSE(check_wedge_entries(udn_factor_set(5)).ok());
}

TEST_CASE("wedge membership agrees with the linear description") {
  Rng rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    int n = static_cast<int>(rng.uniform(3, 7));
    FactorSetMonomial m(n);
    if (trial % 2 == 0) {
      // random antisymmetric, zero row sums
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n - 1; ++j) {
          long v = rng.uniform(-3, 3);
          m.zeta(i, j) += v;
          m.zeta(j, i) -= v;
        }
      for (int i = 0; i < n - 1; ++i) {
        long row = 0;
        for (int j = 0; j < n; ++j) row += m.zeta(i, j);
        m.zeta(i, n - 1) -= row;
        m.zeta(n - 1, i) += row;
      }
    } else {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.zeta(i, j) = rng.uniform(-1, 1);
    }
    auto x = wedge_membership(m);
    CHECK(x.has_value() == antisymmetric_zero_rows(m));
    if (x) CHECK(wedge_element(n, *x) == m);
  }
}

TEST_CASE("y generators") {
  auto s3 = symmetric_group(3);
  auto y = y_generators(CosetSpace(s3, Subgroup::generated_by(s3, std::vector<std::string>{"(1 2)"})));
  CHECK(y.span_rank == 4);
  CHECK(y.certificate.ok());
  // y_iji = y_jij
  for (std::size_t k = 0; k < y.labels.size(); ++k) {
    auto [i, j, h] = y.labels[k];
    if (h == i) {
      std::size_t other = (j * 3 + i) * 3 + j;
      CHECK(y.elements[k] == y.elements[other]);
    }
  }
  auto c2 = cyclic_group(2);
  auto y2 = y_generators(CosetSpace(c2, Subgroup::trivial(c2)));
  CHECK(y2.span_rank == 1);
  CHECK(y2.certificate.ok());
  for (const auto& fam : group_family())
    for (const auto& h : fam.subgroups) {
      CosetSpace cs(fam.group, h);
      if (cs.index() < 2) continue;
      INFO(fam.name << "/" << h.name());
      CHECK(y_generators(cs).certificate.ok());
    }
}

TEST_CASE("field of definition bookkeeping") {
  auto r5 = field_of_definition_report(5);
  CHECK(r5.trdeg == 6);
  CHECK(r5.m == 16);
  CHECK(r5.t_count == 4);
  CHECK(r5.kernel_rank == 26);
  INFO(r5.certificate.failure());
  CHECK(r5.certificate.ok());
  REQUIRE(r5.q_character.has_value());

  auto r7 = field_of_definition_report(7, false);
  CHECK(r7.trdeg == 15);
  CHECK(r7.m == 29);
  CHECK(r7.wedge_rank == 15);
  CHECK(r7.certificate.ok());
  CHECK_THROWS_WITH(field_of_definition_report(4), doctest::Contains("n must be odd"));
}
