#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "brauerlab/decompose.hpp"

using namespace brauerlab;

namespace {

FieldElement var(const FieldPtr& F, const char* s) { return FieldElement::variable(F, s); }
FieldElement num(const FieldPtr& F, long v) { return FieldElement(F, Rat(v)); }

KummerPtr kummer(const FieldPtr& F, int m, const FieldElement& a1, const FieldElement& a2) {
  return std::make_shared<const KummerField>(F, m, a1, a2);
}

KummerField::Elem random_elem(const KummerPtr& K, Rng& rng, bool fixed1, bool fixed2) {
  auto x = K->zero();
  const int m = K->m();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < 2; ++j) {
      if ((fixed1 && i > 0) || (fixed2 && j > 0)) continue;
      x[KummerField::index(i, j, m)] = num(K->base(), rng.uniform(-4, 4));
    }
  if (K->is_zero(x)) x = K->one();
  return x;
}

bool same_params(const CrossedAlgebra& a, const CrossedAlgebra& b) {
  const auto& K = a.kummer();
  return K->equal(a.u(), b.u()) && K->equal(a.b1(), b.b1()) && K->equal(a.b2(), b.b2());
}

}  // namespace

TEST_CASE("symbol algebras") {
  auto F = make_field(4, {"a", "b"});
  auto Q = symbol_algebra(F, var(F, "a"), var(F, "b"), 2);
  auto xy = Q.mul(Q.x(), Q.y()), yx = Q.mul(Q.y(), Q.x());
  for (std::size_t i = 0; i < xy.size(); ++i) CHECK(xy[i] == -yx[i]);
  CHECK(Q.check_relations().ok());
  auto S4 = symbol_algebra(F, var(F, "a"), var(F, "b"), 4);
  CHECK(S4.dim() == 16);
  CHECK(S4.check_relations().ok());
  auto F3 = make_field(6, {"b"});
  auto S3 = symbol_algebra(F3, num(F3, 1), var(F3, "b"), 3);
  CHECK(S3.pow(S3.x(), 3) == S3.one());
  CHECK_THROWS_WITH(symbol_algebra(F, num(F, 0), var(F, "b"), 2), "zero parameter");
}

TEST_CASE("crossed_from_data examples") {
  auto F = make_field(4, {"a1", "a2", "f1", "f2", "g", "h"});
  auto K = kummer(F, 2, var(F, "a1"), var(F, "a2"));
  // u = 1 with b1, b2 in F: ordinary abelian crossed product
  auto A = crossed_from_data(K, K->one(), K->from_base(var(F, "g")), K->from_base(var(F, "h")), true);
  CHECK(A.check_relations().ok());
  CHECK(A.dim() == 16);
  // u = 1, b1 = f1 + f2 alpha2 with f2 != 0: sigma2(b1) != b1, rejected by the checker
  CHECK_THROWS_WITH_AS(crossed_from_data(K, K->one(), K->in_alpha2(var(F, "f1"), var(F, "f2")),
                                         K->from_base(var(F, "h"))),
                       doctest::Contains("associativity violated: incompatible (u, b1, b2)"), std::invalid_argument);
  CHECK_THROWS_WITH(crossed_from_data(K, K->one(), K->zero(), K->one()), "zero parameter");
  CHECK_THROWS_WITH(crossed_from_data(K, K->one(), K->alpha1(), K->one()), "b1 must lie in F(alpha2)");
}

TEST_CASE("cocycle criterion agrees with literal associativity") {
  // oracle: the structure-constant algebra is checked on all basis triples independently
  Rng rng(11);
  int accepted = 0, rejected = 0;
  for (int m : {2, 3}) {
    auto F = make_field(crossed_conductor(m), {});
    for (int trial = 0; trial < (m == 2 ? 30 : 6); ++trial) {
      auto K = kummer(F, m, num(F, 2 + trial), num(F, -3 - trial));
      CrossedAlgebra A(K, random_elem(K, rng, false, false), random_elem(K, rng, true, false),
                       random_elem(K, rng, false, true));
      if (trial % 3 == 0) A = twist(CrossedAlgebra(K, K->one(), K->from_base(num(F, 3)), K->from_base(num(F, 5))),
                                    random_elem(K, rng, false, false), random_elem(K, rng, false, false));
      if (K->norm(A.u()).is_zero()) continue;
      bool cocycle = A.check_cocycle().ok();
      bool literal = A.check_basis_associativity(0).ok();
      bool table = A.structure().check_associative(m == 2 ? 0 : 2000).ok();
      CHECK(cocycle == literal);
      CHECK(literal == table);
      (cocycle ? accepted : rejected)++;
    }
  }
  CHECK(accepted > 0);
  CHECK(rejected > 0);
}

TEST_CASE("conjugation relations and unit on twisted instances") {
  Rng rng(5);
  for (int m : {2, 3, 4}) {
    auto A = random_crossed_instance(m, rng);
    CHECK(A.check_cocycle().ok());
    auto rel = A.check_relations();
    CHECK_MESSAGE(rel.ok(), rel.failure());
    if (m == 4) CHECK(A.check_basis_associativity(10000).ok());
  }
  auto S = symbolic_crossed_family(2);
  CHECK(S.check_cocycle().ok());
  CHECK(S.check_relations().ok());
  CHECK(S.check_basis_associativity(0).ok());
}

TEST_CASE("twisted family coefficients") {
  auto S = symbolic_crossed_family(2);
  const auto& F = S.base();
  auto beta = var(F, "beta"), k0 = var(F, "k0"), k1 = var(F, "k1"), k2 = var(F, "k2");
  auto a1 = var(F, "a1"), a2 = var(F, "a2");
  CHECK(S.b1()[0] == beta * (k0 * k0 + k2 * k2 * a2 - a1 * k1 * k1));
  CHECK(S.b1()[2] == beta * k0 * k2 * Rat(2));
}

TEST_CASE("tensor_brauer") {
  Rng rng(3);
  auto A = random_crossed_instance(2, rng);
  const auto& K = A.kummer();
  const auto& F = A.base();
  CrossedAlgebra unit(K, K->one(), K->one(), K->one());
  CHECK(same_params(tensor_brauer(A, unit), A));
  auto f = num(F, 7);
  CrossedAlgebra Uf(K, K->one(), K->from_base(f), K->one());
  auto Af = tensor_brauer(A, Uf);
  CHECK(K->equal(Af.b1(), K->scale(A.b1(), f)));
  CHECK(K->equal(Af.u(), A.u()));
  auto B = twist(A, random_elem(K, rng, false, false), random_elem(K, rng, false, false));
  auto C = twist(A, random_elem(K, rng, false, false), K->one());
  CHECK(same_params(tensor_brauer(A, B), tensor_brauer(B, A)));
  auto abc = tensor_brauer(tensor_brauer(A, B), C);
  CHECK(K->equal(abc.u(), K->mul(K->mul(A.u(), B.u()), C.u())));
  CHECK(K->equal(abc.b1(), K->mul(K->mul(A.b1(), B.b1()), C.b1())));
  CHECK(K->equal(abc.b2(), K->mul(K->mul(A.b2(), B.b2()), C.b2())));
  CHECK(same_params(abc, tensor_brauer(A, tensor_brauer(B, C))));
  CHECK(abc.check_cocycle().ok());
  auto K2 = kummer(F, 2, K->a1() + num(F, 1), K->a2());
  CHECK_THROWS_WITH(tensor_brauer(A, CrossedAlgebra(K2, K2->one(), K2->one(), K2->one())), "mismatched K-data");
}

TEST_CASE("Bergman cancellation with symbolic parameters") {
  for (int m = 2; m <= 5; ++m) {
    auto F = make_field(crossed_conductor(m), {"a1", "a2", "b1", "b2"});
    auto K = kummer(F, m, var(F, "a1"), var(F, "a2"));
    CrossedAlgebra A(K, K->one(), K->from_base(var(F, "b1")), K->from_base(var(F, "b2")));
    auto c = bergman_power(A);
    CHECK_MESSAGE(c.ok(), "m = ", m, ": ", c.failure());
  }
  // also with a nontrivial commutator twist
  auto S = symbolic_crossed_family(3);
  CHECK(bergman_power(S).ok());
}

TEST_CASE("decompose: symbolic generic branch, m = 2") {
  auto A = symbolic_crossed_family(2);
  auto cert = decompose(A);
  CHECK(cert.branch == Branch::generic);
  CHECK_MESSAGE(cert.checks.ok(), cert.checks.failure());
  const auto& K = A.kummer();
  CHECK(*cert.c == -(K->a1() * cert.f2 / cert.f1));
  // (c alpha2)^2 = c^2 a2
  auto ca2 = K->scale(K->alpha2(), *cert.c);
  CHECK(K->equal(K->mul(ca2, ca2), K->from_base(*cert.c * *cert.c * K->a2())));
  REQUIRE(cert.symbols.size() == 2);
  CHECK(cert.symbols[1].m == 4);
  CHECK(cert.symbols[1].b == *cert.c * *cert.c * K->a2());
}

TEST_CASE("decompose: f1 = 0 and f2 = 0 branches") {
  // u = zeta_4, b1 = f2 alpha2, b2 = y alpha1
  auto F = make_field(4, {"a1", "a2", "f2", "y"});
  auto K = kummer(F, 2, var(F, "a1"), var(F, "a2"));
  auto A = crossed_from_data(K, K->from_base(FieldElement::zeta(F)), K->scale(K->alpha2(), var(F, "f2")),
                             K->scale(K->alpha1(), var(F, "y")), true);
  auto c1 = decompose(A);
  CHECK(c1.branch == Branch::f1_zero);
  CHECK_MESSAGE(c1.checks.ok(), c1.checks.failure());
  auto z4 = A.as_scalar(A.pow(A.z1(), 4));
  REQUIRE(z4);
  CHECK(*z4 == var(F, "f2") * var(F, "f2") * var(F, "a2"));

  auto G = make_field(4, {"a1", "a2", "g", "h"});
  auto K2 = kummer(G, 2, var(G, "a1"), var(G, "a2"));
  auto B = crossed_from_data(K2, K2->one(), K2->from_base(var(G, "g")), K2->from_base(var(G, "h")));
  auto c2 = decompose(B);
  CHECK(c2.branch == Branch::f2_zero);
  CHECK_MESSAGE(c2.checks.ok(), c2.checks.failure());
  REQUIRE(c2.symbols.size() == 2);
  CHECK(c2.symbols[0].m == 2);

  Rng rng(17);
  for (int m : {2, 3}) {
    for (Branch b : {Branch::f1_zero, Branch::f2_zero}) {
      auto R = random_crossed_instance(m, rng, b);
      auto c = decompose(R);
      CHECK(c.branch == b);
      CHECK_MESSAGE(c.checks.ok(), branch_name(b), " m=", m, ": ", c.checks.failure());
    }
  }
}

TEST_CASE("decompose: 20 rational instances over Q(zeta_4)") {
  Rng rng(2024);
  for (int i = 0; i < 20; ++i) {
    auto A = random_crossed_instance(2, rng);
    auto cert = decompose(A);
    CHECK(cert.branch == Branch::generic);
    CHECK_MESSAGE(cert.checks.ok(), "instance ", i, ": ", cert.checks.failure());
  }
}

TEST_CASE("decompose: rational instances for m = 3, 4") {
  Rng rng(99);
  for (int m : {3, 4}) {
    auto A = random_crossed_instance(m, rng);
    auto cert = decompose(A);
    CHECK_MESSAGE(cert.checks.ok(), "m=", m, ": ", cert.checks.failure());
  }
}

TEST_CASE("cyclic_to_symbol") {
  Rng rng(8);
  auto F = make_field(4, {});
  auto K = kummer(F, 2, num(F, 3), num(F, 7));
  // split: twist of the trivial data
  auto M4 = twisted_crossed(K, random_elem(K, rng, false, false), random_elem(K, rng, false, false), num(F, 1),
                            num(F, 1));
  auto cert = decompose(M4);
  CHECK_MESSAGE(cert.checks.ok(), cert.checks.failure());
  // central gamma: delta gamma = zeta gamma delta forces delta = 0
  CHECK_THROWS_WITH(cyclic_to_symbol(M4, M4.from_base(num(F, 2))),
                    doctest::Contains("no invertible solution found (kernel dimension 0)"));
  auto A = random_crossed_instance(2, rng);
  auto Af = tensor_brauer(A, CrossedAlgebra(K == A.kummer() ? K : A.kummer(), A.kummer()->one(),
                                            A.kummer()->from_base(-(A.kummer()->a1() / A.b1()[0])),
                                            A.kummer()->one()));
  auto cs = cyclic_to_symbol(Af, Af.add(Af.z1(), Af.alpha1()));
  CHECK(cs.kernel_dim >= 1);
  CHECK(cs.checks.ok());
  // delta gamma delta^-1 = zeta_4 gamma, with delta^-1 = delta^3 / d
  auto dinv = Af.scale(Af.pow(cs.delta, 3), cs.d.inverse());
  CHECK(Af.equal(Af.mul(dinv, cs.delta), Af.one()));
  auto conj = Af.mul(Af.mul(cs.delta, cs.gamma), dinv);
  CHECK(Af.equal(conj, Af.scale(cs.gamma, FieldElement::zeta(Af.base()))));
}

TEST_CASE("certificate JSON re-verifies") {
  Rng rng(4);
  auto A = random_crossed_instance(2, rng);
  auto cert = decompose(A);
  auto j = to_json(cert, A);
  CHECK(j["status"] == "pass");
  auto again = reverify_decomposition(nlohmann::json::parse(j.dump()));
  CHECK_MESSAGE(again.ok(), again.failure());
  auto bad = j;
  bad["witnesses"]["c"] = "17";
  CHECK_FALSE(reverify_decomposition(bad).ok());

  auto S = symbolic_crossed_family(2);
  auto sc = decompose(S);
  auto sj = to_json(sc, S);
  auto s2 = reverify_decomposition(nlohmann::json::parse(sj.dump()));
  CHECK_MESSAGE(s2.ok(), s2.failure());
}

TEST_CASE("decompose rejects b1 = 0 data") {
  auto F = make_field(4, {});
  auto K = kummer(F, 2, num(F, 3), num(F, 7));
  CHECK_THROWS_WITH(CrossedAlgebra(K, K->one(), K->zero(), K->one()), "zero parameter");
}

TEST_CASE("specialize_decomposition") {
  auto F = make_field(4, {"t"});
  auto t = var(F, "t");
  auto M2 = matrix_algebra(F, 2);
  auto zero = num(F, 0), one = num(F, 1);
  // x(t) = [[0,1],[t,0]], y = diag(1,-1): (t, 1)_2
  FieldVector x{zero, one, t, zero}, y{one, zero, zero, -one};
  Rng rng(1);
  auto s = specialize_decomposition(M2, "t", {{x, y, 2}}, {t}, rng);
  CHECK(s.t0 != 0);
  CHECK_MESSAGE(s.checks.ok(), s.checks.failure());
  CHECK(s.symbols[0].a == FieldElement(F, s.t0));

  // pole at t = 1
  FieldVector xp{zero, one, one / (t - one), zero};
  for (int trial = 0; trial < 20; ++trial) {
    auto sp = specialize_decomposition(M2, "t", {{xp, y, 2}}, {}, rng);
    CHECK(sp.t0 != 1);
  }

  // degree 4 from two commuting quaternion factors
  auto M4 = tensor_product(M2, M2);
  auto lift1 = [&](const FieldVector& v) {
    FieldVector r(16, zero);
    for (std::size_t i = 0; i < 4; ++i) r[i * 4 + 0] = v[i], r[i * 4 + 3] = v[i];
    return r;
  };
  auto lift2 = [&](const FieldVector& v) {
    FieldVector r(16, zero);
    for (std::size_t i = 0; i < 4; ++i) r[0 * 4 + i] = v[i], r[3 * 4 + i] = v[i];
    return r;
  };
  FieldVector x2{zero, t + one, one, zero};
  auto s4 = specialize_decomposition(M4, "t", {{lift1(x), lift1(y), 2}, {lift2(x2), lift2(y), 2}}, {t, t + one}, rng);
  CHECK_MESSAGE(s4.checks.ok(), s4.checks.failure());
  CHECK(s4.symbols.size() == 2);

  // every draw is blocked
  std::vector<FieldElement> all;
  for (int v = -20; v <= 20; ++v) all.push_back(t - num(F, v));
  FieldElement blocker = one;
  for (const auto& a : all) blocker = blocker * a;
  CHECK_THROWS_WITH(specialize_decomposition(M2, "t", {{x, y, 2}}, {blocker}, rng), "no admissible t0 in sample box");
}

TEST_CASE("rationalize_symbol_params") {
  auto F = make_field(4, {"a", "b", "c", "d"});
  auto r0 = rationalize_symbol_params(F, {});
  CHECK(r0.symbols.empty());
  CHECK(r0.generators.empty());
  auto r1 = rationalize_symbol_params(F, {{var(F, "a"), var(F, "b"), 2}});
  REQUIRE(r1.symbols.size() == 1);
  CHECK(r1.generators.size() == 2);
  const auto& G = r1.field;
  CHECK(r1.symbols[0].a == var(G, "a") * var(G, "lambda1").pow(2));
  CHECK(r1.symbols[0].b == var(G, "b") * var(G, "mu1").pow(2));
  CHECK(r1.independent);
  auto r2 = rationalize_symbol_params(F, {{var(F, "a"), var(F, "b"), 2}, {var(F, "c"), var(F, "d"), 4}});
  CHECK(r2.generators.size() == 4);
  CHECK(r2.independent);
  // det = prod n a_i lambda_i^(n-1) * n b_i mu_i^(n-1)
  const auto& H = r2.field;
  auto expect = var(H, "a") * var(H, "lambda1") * Rat(2) * var(H, "b") * var(H, "mu1") * Rat(2) * var(H, "c") *
                var(H, "lambda2").pow(3) * Rat(4) * var(H, "d") * var(H, "mu2").pow(3) * Rat(4);
  CHECK(r2.jacobian == expect);
}
