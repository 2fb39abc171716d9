#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "brauerlab/semilinear.hpp"

using namespace brauerlab;

namespace {

FieldElement random_poly(const FieldPtr& F, Rng& rng, int terms, int maxdeg) {
  FieldElement r(F, Rat(0));
  for (int t = 0; t < terms; ++t) {
    Rat q(rng.uniform(-5, 5), rng.uniform(1, 3));
    q.canonicalize();
    FieldElement m(F, q);
    if (F->conductor() > 2 && rng.uniform(0, 2) == 0) m = m * FieldElement::zeta(F, rng.uniform(0, F->conductor() - 1));
    for (std::size_t i = 0; i < F->nvars(); ++i) m = m * FieldElement::variable(F, i).pow(rng.uniform(0, maxdeg));
    r += m;
  }
  return r;
}

FieldElement random_element(const FieldPtr& F, Rng& rng) {
  FieldElement d = random_poly(F, rng, 2, 1);
  while (d.is_zero()) d = random_poly(F, rng, 2, 1);
  return random_poly(F, rng, 3, 2) / d;
}

// field value at a point, computed independently of the rational-function arithmetic
Cyc value(const FieldElement& f, const std::vector<Rat>& pt) { return f.evaluate(pt); }

}  // namespace

TEST_CASE("cyclotomic arithmetic") {
  auto* q4 = cyclotomic_field(4);
  auto z = Cyc::zeta(q4);
  CHECK(z * z == Cyc(q4, Rat(-1)));
  for (int n : {1, 2, 3, 4, 5, 6, 8, 12}) {
    auto* f = cyclotomic_field(n);
    auto zn = Cyc::zeta(f);
    CHECK(zn.pow(n).is_one());
    for (int m = 1; m < n; ++m) CHECK_FALSE(zn.pow(m).is_one());
    CHECK(static_cast<int>(f->degree()) == static_cast<int>(cyclotomic_polynomial(n).size()) - 1);
  }
  CHECK(Cyc::zeta(cyclotomic_field(2)) == Cyc(cyclotomic_field(2), Rat(-1)));
  auto* q5 = cyclotomic_field(5);
  auto a = Cyc::zeta(q5) + Cyc(q5, Rat(2));
  CHECK((a * a.inverse()).is_one());
  CHECK(a.galois(2).galois(3) == a);
  CHECK_THROWS_WITH(Cyc(q5).inverse(), "division by zero");
  CHECK(Cyc(q4, Rat(-1)).sqrt().value() * Cyc(q4, Rat(-1)).sqrt().value() == Cyc(q4, Rat(-1)));
  CHECK_FALSE(Cyc(cyclotomic_field(1), Rat(2)).sqrt().has_value());
  // sqrt 2 = zeta_8 + zeta_8^-1
  auto* q8 = cyclotomic_field(8);
  auto r2 = Cyc(q8, Rat(2)).sqrt();
  REQUIRE(r2.has_value());
  CHECK(*r2 * *r2 == Cyc(q8, Rat(2)));
  auto* q12 = cyclotomic_field(12);
  auto b = Cyc::zeta(q12) * Rat(3, 2) - Cyc::zeta(q12, 5) + Cyc(q12, Rat(7));
  auto rb = (b * b).sqrt();
  REQUIRE(rb.has_value());
  CHECK((*rb == b || *rb == -b));
  CHECK_FALSE(Cyc::zeta(q8).sqrt().has_value());  // zeta_16 is not in Q(zeta_8)
  CHECK_FALSE((Cyc(q12, Rat(1)) + Cyc::zeta(q12)).sqrt().has_value());
}

TEST_CASE("field arithmetic examples") {
  auto F = make_field(4, {"x", "y"});
  auto z = FieldElement::zeta(F);
  CHECK(z * z == FieldElement(F, Rat(-1)));
  auto x = FieldElement::variable(F, "x"), y = FieldElement::variable(F, "y");
  CHECK((x * x - y * y) / (x - y) == x + y);
  CHECK(((x * x - y * y) / (x - y)).denominator().empty());
  auto g = (x - y).inverse();
  std::map<std::size_t, FieldElement> at;
  at.emplace(0, FieldElement(F, Rat(1)));
  at.emplace(1, FieldElement(F, Rat(1)));
  CHECK_THROWS_WITH(g.substitute(at), "pole at specialization point");
  CHECK_THROWS_WITH(g.evaluate({Rat(3), Rat(3)}), "pole at specialization point");
  CHECK_THROWS_WITH(FieldElement(F, Rat(0)).inverse(), "division by zero");
  CHECK_THROWS_WITH(x / FieldElement(F, Rat(0)), "division by zero");
  CHECK(g.evaluate({Rat(3), Rat(1)}) == Cyc(F->scalars(), Rat(1, 2)));
}

TEST_CASE("parser") {
  auto F = make_field(4, {"a", "b"});
  auto e = parse_field_element(F, "(a^2 - b^2)/(a - b) - b");
  CHECK(e == FieldElement::variable(F, "a"));
  CHECK(parse_field_element(F, "zeta^2 + 1").is_zero());
  CHECK(parse_field_element(F, "3/6") == FieldElement(F, Rat(1, 2)));
  CHECK(parse_field_element(F, "a^-2 * a^2").is_one());
  CHECK_THROWS_WITH(parse_field_element(F, "a + c"), doctest::Contains("undeclared variable c"));
  CHECK_THROWS_WITH(parse_field_element(F, "(a + b"), doctest::Contains("missing ')'"));
  CHECK_THROWS_WITH(parse_field_element(F, "1/(a-a)"), "division by zero");
  auto r = parse_field_element(F, "(a + zeta*b)/(a^2 + 1)");
  CHECK(parse_field_element(F, r.to_string()) == r);
  auto j = to_json(r);
  CHECK(j["denominator"].size() == 1);
}

TEST_CASE("square roots") {
  auto F = make_field(4, {"x", "y"});
  auto x = FieldElement::variable(F, "x"), y = FieldElement::variable(F, "y");
  auto s = is_square(x * x + x * y * Rat(2) + y * y);
  REQUIRE(s.has_value());
  CHECK(*s * *s == x * x + x * y * Rat(2) + y * y);
  CHECK((*s == x + y || *s == -(x + y)));
  CHECK_FALSE(is_square(x).has_value());
  auto m1 = is_square(FieldElement(F, Rat(-1)));
  REQUIRE(m1.has_value());
  CHECK((*m1 == FieldElement::zeta(F) || *m1 == -FieldElement::zeta(F)));
  auto q = make_field(1, {"x"});
  CHECK_FALSE(is_square(FieldElement(q, Rat(-1))).has_value());
  auto r = is_square(parse_field_element(F, "4*(x+1)^2/(y^3*(x-y))^2"));
  REQUIRE(r.has_value());
  CHECK(*r * *r == parse_field_element(F, "4*(x+1)^2/(y^3*(x-y))^2"));
  CHECK_FALSE(is_square(parse_field_element(F, "x^2/(x-y)")).has_value());
}

TEST_CASE("field axioms on random triples") {
  auto F = make_field(3, {"u", "v"});
  Rng rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    auto a = random_element(F, rng), b = random_element(F, rng), c = random_element(F, rng);
    INFO("a = " << a.to_string() << ", b = " << b.to_string());
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    // independent oracle: evaluation commutes with the operations
    if (trial % 10 == 0) {
      std::vector<Rat> pt{Rat(rng.uniform(-20, 20)), Rat(rng.uniform(-20, 20))};
      try {
        Cyc va = value(a, pt), vb = value(b, pt), vc = value(c, pt);
        CHECK(value(a * b + c, pt) == va * vb + vc);
      } catch (const std::domain_error&) {
      }
    }
  }
}

TEST_CASE("automorphisms are multiplicative") {
  auto F = make_field(4, {"x", "y", "w"});
  FieldAutomorphism sigma;
  sigma.images.emplace(0, FieldElement::variable(F, "y"));
  sigma.images.emplace(1, FieldElement::variable(F, "x") * Rat(2) + FieldElement::variable(F, "w"));
  sigma.images.emplace(2, -FieldElement::variable(F, "w"));
  sigma.zeta_power = 3;
  Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    auto f = random_element(F, rng), g = random_element(F, rng);
    CHECK(sigma.apply(f * g) == sigma.apply(f) * sigma.apply(g));
    CHECK(sigma.apply(f + g) == sigma.apply(f) + sigma.apply(g));
  }
  CHECK(sigma.apply(FieldElement::zeta(F)) == -FieldElement::zeta(F));
}

TEST_CASE("averaging operator") {
  auto F = make_field(1, {"w"});
  auto w = FieldElement::variable(F, "w");
  auto c2 = cyclic_group(2);
  FieldAutomorphism neg;
  neg.images.emplace(0, -w);
  auto zero = FieldElement(F, Rat(0)), one = FieldElement(F, Rat(1));

  SUBCASE("swap of e1 and e2") {
    FieldMatrix swap(2, 2, zero);
    swap(0, 1) = one;
    swap(1, 0) = one;
    SemilinearAction act(c2, F, {"e1", "e2"}, {neg}, {swap});
    CHECK(act.check_action().ok());
    auto inv = invariant_basis_average(act);
    REQUIRE(inv.size() == 2);
    CHECK(inv[0] == FieldVector{one, one});
    CHECK(inv[1] == FieldVector{w, -w});
    FieldMatrix m(2, 2);
    for (std::size_t c = 0; c < 2; ++c)
      for (std::size_t i = 0; i < 2; ++i) m(i, c) = inv[c][i];
    CHECK_FALSE(determinant(m).is_zero());
  }
  SUBCASE("sign on e1") {
    FieldMatrix sgnm(1, 1, -one);
    SemilinearAction act(c2, F, {"e1"}, {neg}, {sgnm});
    auto inv = invariant_basis_average(act);
    REQUIRE(inv.size() == 1);
    CHECK(inv[0] == FieldVector{w});
  }
  SUBCASE("trivial group") {
    auto triv = generate_group(std::vector<std::string>{}, 1, "trivial");
    SemilinearAction act(triv, F, {"e1", "e2", "e3"}, {}, {});
    auto inv = invariant_basis_average(act);
    REQUIRE(inv.size() == 3);
    for (std::size_t j = 0; j < 3; ++j) CHECK(inv[j] == act.basis_vector(j));
  }
  SUBCASE("unfaithful scalar action") {
    FieldAutomorphism id;
    FieldMatrix swap(2, 2, zero);
    swap(0, 1) = one;
    swap(1, 0) = one;
    SemilinearAction act(c2, F, {"e1", "e2"}, {id}, {swap});
    CHECK_THROWS_WITH(invariant_basis_average(act), "action not faithful");
  }
  SUBCASE("non-primitive multiplier") {
    FieldMatrix sgnm(1, 1, -one);
    SemilinearAction act(c2, F, {"e1"}, {neg}, {sgnm});
    CHECK_THROWS_WITH(invariant_basis_average(act, w * w), "averaging degenerate");
  }
}

TEST_CASE("averaging over S3 permuting variables") {
  auto F = make_field(3, {"x1", "x2", "x3"});
  auto s3 = symmetric_group(3);
  std::vector<FieldAutomorphism> autos;
  std::vector<FieldMatrix> mats;
  for (auto gi : s3->generators()) {
    const auto& p = s3->element(gi);
    FieldAutomorphism a;
    FieldMatrix m = field_zero(F, 3, 3);
    for (int i = 0; i < 3; ++i) {
      a.images.emplace(i, FieldElement::variable(F, static_cast<std::size_t>(p[static_cast<std::size_t>(i)])));
      m(static_cast<std::size_t>(p[static_cast<std::size_t>(i)]), static_cast<std::size_t>(i)) = FieldElement(F, Rat(1));
    }
    autos.push_back(a);
    mats.push_back(m);
  }
  SemilinearAction act(s3, F, {"e1", "e2", "e3"}, autos, mats);
  CHECK(act.check_action().ok());
  auto inv = invariant_basis_average(act);
  REQUIRE(inv.size() == 3);
  for (const auto& v : inv)
    for (std::size_t k = 0; k < s3->generators().size(); ++k) CHECK(act.apply_generator(k, v) == v);
  FieldMatrix m(3, 3);
  for (std::size_t c = 0; c < 3; ++c)
    for (std::size_t i = 0; i < 3; ++i) m(i, c) = inv[c][i];
  CHECK_FALSE(determinant(m).is_zero());
}

TEST_CASE("square of random elements") {
  auto F = make_field(4, {"x", "y"});
  Rng rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    auto f = random_element(F, rng);
    auto g = is_square(f * f);
    REQUIRE(g.has_value());
    CHECK(*g * *g == f * f);
  }
}

TEST_CASE("linear algebra") {
  auto F = make_field(1, {"t"});
  auto t = FieldElement::variable(F, "t");
  auto one = FieldElement(F, Rat(1)), zero = FieldElement(F, Rat(0));
  FieldMatrix a(2, 2);
  a(0, 0) = t;
  a(0, 1) = one;
  a(1, 0) = one;
  a(1, 1) = t;
  CHECK(determinant(a) == t * t - one);
  auto ai = inverse(a);
  CHECK(a * ai == field_identity(F, 2));
  FieldMatrix s(2, 2);
  s(0, 0) = t;
  s(0, 1) = t * t;
  s(1, 0) = one;
  s(1, 1) = t;
  CHECK(rank(s) == 1);
  auto k = kernel(s);
  REQUIRE(k.size() == 1);
  auto sk = s * k[0];
  CHECK(sk[0].is_zero());
  CHECK(sk[1].is_zero());
  CHECK_THROWS_WITH(inverse(s), "singular matrix");
  auto x = solve(a, FieldVector{one, zero});
  REQUIRE(x.has_value());
  CHECK(a * *x == FieldVector{one, zero});
  CHECK_FALSE(solve(s, FieldVector{one, zero}).has_value());
}

TEST_CASE("specialization sampler") {
  auto F = make_field(1, {"a", "b"});
  auto a = FieldElement::variable(F, "a"), b = FieldElement::variable(F, "b");
  Rng rng(3);
  auto pt = sample_point(F, {a, b, a - b, (a + b).inverse()}, rng);
  CHECK(pt[0] != 0);
  CHECK(pt[0] != pt[1]);
  CHECK(pt[0] + pt[1] != 0);
  CHECK_THROWS_WITH(sample_point(F, {a - a}, rng), doctest::Contains("no nondegenerate specialization point"));
}
