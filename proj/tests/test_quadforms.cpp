#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "brauerlab/decompose.hpp"
#include "brauerlab/traceforms.hpp"

#include <set>

using namespace brauerlab;

namespace {

FieldElement num(const FieldPtr& F, const Rat& v) { return FieldElement(F, v); }
FieldElement var(const FieldPtr& F, const char* s) { return FieldElement::variable(F, s); }

Rat random_rat(Rng& rng, long bound = 50) {
  long n = 0;
  while (n == 0) n = rng.uniform(-bound, bound);
  return Rat(n, rng.uniform(1, bound));
}

FieldMatrix transpose_times(const FieldMatrix& P, const FieldMatrix& G) {
  return P.transpose() * G * P;
}

/// Solvability of z^2 = a x^2 + b y^2 over Q_p by search for primitive solutions modulo p^N
/// (a, b squarefree integers). N = 2 settles odd p; N = 5 settles p = 2.
int hilbert_by_search(long a, long b, long p) {
  const long N = p == 2 ? 5 : 2;
  long mod = 1;
  for (long i = 0; i < N; ++i) mod *= p;
  auto r = [&](long v) { return ((v % mod) + mod) % mod; };
  for (long x = 0; x < mod; ++x)
    for (long y = 0; y < mod; ++y)
      for (long z = 0; z < mod; ++z) {
        if (x % p == 0 && y % p == 0 && z % p == 0) continue;
        if (r(z * z) == r(a * x * x + b * y * y)) return 1;
      }
  return -1;
}

std::vector<CrossedAlgebra> rational_degree4_instances(std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<CrossedAlgebra> out;
  while (out.size() < count) {
    auto A = random_crossed_instance(2, rng);
    try {
      trace_data(A);
      out.push_back(A);
    } catch (const std::domain_error&) {
    }
  }
  return out;
}

}  // namespace

TEST_CASE("pfister and diagonal forms") {
  auto F = make_field(4, {"a", "b"});
  auto a = var(F, "a"), b = var(F, "b");
  auto p1 = pfister(F, {a});
  CHECK(p1.dim() == 2);
  CHECK(p1.entries()[0].is_one());
  CHECK(p1.entries()[1] == a);
  auto z1 = pfister0(F, {a});
  CHECK(z1.dim() == 1);
  CHECK(z1.entries()[0] == a);
  auto p2 = pfister(F, {a, b});
  REQUIRE(p2.dim() == 4);
  CHECK(p2.entries()[3] == a * b);
  CHECK(pfister0(F, {a, b, a}).dim() == 7);
  CHECK_THROWS_WITH(pfister(F, {a, num(F, 0)}), "zero entry");
  CHECK_THROWS_WITH(diagonal(F, {num(F, 0)}), "zero entry");
  CHECK(tensor(pfister(F, {a}), pfister(F, {b})).entries() == pfister(F, {b, a}).entries());
}

TEST_CASE("diagonalize: hyperbolic plane, identity and 1x1") {
  auto F = make_field(4, {});
  FieldMatrix H = field_zero(F, 2, 2);
  H(0, 1) = num(F, 1);
  H(1, 0) = num(F, 1);
  auto d = diagonalize(QuadraticForm(F, H));
  CHECK(!d.degenerate);
  CHECK(d.form.entries()[0] == num(F, 2));
  CHECK(d.form.entries()[1] == num(F, Rat(-1, 2)));
  CHECK(transpose_times(d.P, H) == d.form.gram());

  auto q = diagonal(F, {num(F, 3), num(F, -5)});
  auto dq = diagonalize(q);
  CHECK(dq.P == field_identity(F, 2));
  CHECK(dq.form.gram() == q.gram());

  FieldMatrix one = field_zero(F, 1, 1);
  one(0, 0) = num(F, 7);
  CHECK(diagonalize(QuadraticForm(F, one)).form.entries()[0] == num(F, 7));
}

TEST_CASE("diagonalize: P^T G P is diagonal and P invertible on random symmetric matrices") {
  Rng rng(21);
  auto F = make_field(4, {"x"});
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 2 + rng.index(4);
    FieldMatrix G = field_zero(F, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        long c = rng.uniform(-3, 3);
        FieldElement e = trial % 3 == 0 && rng.index(2) ? num(F, c) * var(F, "x") : num(F, c);
        if (i == j && trial % 4 == 1) e = num(F, 0);  // force the off-diagonal pivot rule
        G(i, j) = e;
        G(j, i) = e;
      }
    auto d = diagonalize(QuadraticForm(F, G));
    CHECK(!determinant(d.P).is_zero());
    auto D = transpose_times(d.P, G);
    CHECK(D == d.form.gram());
    CHECK(d.form.is_diagonal());
    CHECK(d.degenerate == determinant(G).is_zero());
  }
}

TEST_CASE("hyperbolic_sufficient examples") {
  auto F = make_field(4, {"x"});
  auto x = var(F, "x");
  CHECK(!hyperbolic_sufficient(diagonal(F, {num(F, 1), x})));
  auto p = hyperbolic_sufficient(diagonal(F, {x, x}));
  REQUIRE(p);
  CHECK(p->size() == 1);
  CHECK(!hyperbolic_sufficient(diagonal(F, {x})));
  auto Q = make_field(1, {});
  CHECK_THROWS(hyperbolic_sufficient(diagonal(Q, {num(Q, 1), num(Q, -1)})));
}

TEST_CASE("trace form of M2 over Q(zeta4): <1,1> plus a hyperbolic plane") {
  auto F = make_field(4, {});
  auto M = matrix_algebra(F, 2);
  auto q = trace_form(M);
  // basis E11, E12, E21, E22: Trd(E11^2) = Trd(E22^2) = 1, Trd(E12 E21) = 1
  FieldMatrix want = field_zero(F, 4, 4);
  want(0, 0) = num(F, 1);
  want(3, 3) = num(F, 1);
  want(1, 2) = num(F, 1);
  want(2, 1) = num(F, 1);
  CHECK(q.gram() == want);
  CHECK(M.reduced_trace(M.unit()) == num(F, 2));
  auto p = hyperbolic_sufficient(q);
  REQUIRE(p);
  CHECK(p->size() == 2);
}

TEST_CASE("trace form of M2(E) for rational quaternion algebras E is hyperbolic") {
  auto F = make_field(4, {});
  Rng rng(5);
  for (int trial = 0; trial < 5; ++trial) {
    auto a = num(F, rng.uniform(1, 30) * (rng.index(2) ? 1 : -1));
    auto b = num(F, rng.uniform(1, 30) * (rng.index(2) ? 1 : -1));
    auto E = symbol_algebra(F, a, b, 2);
    auto A = tensor_product(matrix_algebra(F, 2), E.structure());
    auto q = trace_form(A);
    CHECK(q.dim() == 16);
    CHECK(A.reduced_trace(A.unit()) == num(F, 4));
    CHECK_MESSAGE(hyperbolic_sufficient(q).has_value(), "E = (" << a.to_string() << ", " << b.to_string() << ")");
  }
}

TEST_CASE("trace form of a degree-4 crossed product") {
  auto A = rational_degree4_instances(1, 3)[0];
  auto q = trace_form(A);
  CHECK(q.dim() == 16);
  CHECK(A.reduced_trace(A.one()) == num(A.base(), 4));
  // Gram entries agree with the structure-constant trace form
  CHECK(q.gram() == trace_form(A.structure()).gram());
}

TEST_CASE("Hilbert symbol: examples") {
  CHECK(hilbert_symbol(1, 7, 0) == 1);
  CHECK(hilbert_symbol(1, -3, 2) == 1);
  CHECK(hilbert_symbol(1, 10, 5) == 1);
  CHECK(hilbert_symbol(-1, -1, 2) == -1);
  CHECK(hilbert_symbol(-1, -1, 0) == -1);
  CHECK(hilbert_symbol(-1, -1, 3) == 1);
  CHECK(hilbert_symbol(Rat(3, 4), 5, 5) == hilbert_symbol(3, 5, 5));
  CHECK_THROWS(hilbert_symbol(0, 3, 3));
  CHECK_THROWS(hilbert_symbol(2, 3, 4));
}

TEST_CASE("Hilbert symbol agrees with a search for primitive solutions mod p^N") {
  const std::vector<long> sf{1, -1, 2, -2, 3, -3, 5, -5, 6, -6, 10, -10, 15, -15, 30, -30, 7, -7};
  for (long p : {2L, 3L, 5L})
    for (long a : sf)
      for (long b : sf) CHECK_MESSAGE(hilbert_symbol(a, b, p) == hilbert_by_search(a, b, p), "(" << a << ", " << b << ")_" << p);
}

TEST_CASE("Hilbert symbol: symmetry, bimultiplicativity and the product formula") {
  Rng rng(99);
  for (int i = 0; i < 500; ++i) {
    Rat a = random_rat(rng), b = random_rat(rng), c = random_rat(rng);
    std::set<Int> places{0, 2};
    for (const Rat& q : {a, b, c})
      for (const Int& n : {Int(q.get_num()), Int(q.get_den())})
        for (const auto& p : prime_factors(n)) places.insert(p);
    places.insert(Int(3));
    for (const auto& p : places) {
      CHECK(hilbert_symbol(a, b, p) == hilbert_symbol(b, a, p));
      CHECK(hilbert_symbol(a * b, c, p) == hilbert_symbol(a, c, p) * hilbert_symbol(b, c, p));
    }
  }
  for (int i = 0; i < 100; ++i) {
    Rat a = random_rat(rng, 1000), b = random_rat(rng, 1000);
    std::set<Int> places{0, 2};
    for (const Rat& q : {a, b})
      for (const Int& n : {Int(q.get_num()), Int(q.get_den())})
        for (const auto& p : prime_factors(n)) places.insert(p);
    int prod = 1;
    for (const auto& p : places) prod *= hilbert_symbol(a, b, p);
    CHECK(prod == 1);
  }
}

TEST_CASE("rational invariants and isometry") {
  CHECK(!isometry_over_Q({1, 1}, {1, -1}));
  CHECK(isometry_over_Q({1, 1}, {2, 2}));
  CHECK(isometry_over_Q({1, 1}, {5, 5}));
  CHECK(!isometry_over_Q({1, 1}, {3, 3}));  // 3 is not a sum of two squares
  auto inv = invariants_over_Q({1, 1});
  CHECK(inv.rank == 2);
  CHECK(inv.positive == 2);
  CHECK(inv.discriminant == 1);
  CHECK(witt_equivalent_over_Q({1, -1, 3}, {3}));
  CHECK(!witt_equivalent_over_Q({1, 1, 3}, {3}));
  CHECK(witt_equivalent_over_Qi({1, 1, 3}, {3}));
  CHECK(isometry_over_Qi({1, 3}, {-1, 3}));
  CHECK(!isometry_over_Qi({1, 1}, {1, 3}));
  CHECK(prime_factors(Int("1000000016000000063")) == std::vector<Int>{Int(1000000007), Int(1000000009)});
  CHECK(squarefree_part(Rat(-12, 5)) == -15);
  auto F = make_field(4, {});
  FieldMatrix zero = field_zero(F, 2, 2);
  CHECK_THROWS_WITH(invariants_over_Q(QuadraticForm(F, zero)), "degenerate form");
}

TEST_CASE("trace data on the symbolic degree-4 family") {
  // twist of (K, G, 1, beta, delta) by k = k0 + k1 alpha1 + k2 alpha2 and l = 1 + l1 alpha1
  auto F = make_field(4, {"a1", "a2", "k0", "k1", "k2", "l1", "beta", "delta"});
  auto K = std::make_shared<const KummerField>(F, 2, var(F, "a1"), var(F, "a2"));
  auto k = K->zero(), l = K->one();
  k[KummerField::index(0, 0, 2)] = var(F, "k0");
  k[KummerField::index(1, 0, 2)] = var(F, "k1");
  k[KummerField::index(0, 1, 2)] = var(F, "k2");
  l[KummerField::index(1, 0, 2)] = var(F, "l1");
  auto A = twisted_crossed(K, k, l, var(F, "beta"), var(F, "delta"));
  auto td = trace_data(A);
  auto get = [&](const std::string& name) {
    for (const auto& c : td.checks.checks)
      if (c.name == name) return c.passed;
    FAIL("missing check " << name);
    return false;
  };
  CHECK(get("t1 = f1"));
  CHECK(get("t1^2 - n1 = f2^2 a2"));
  // b1 = f1 + f2 alpha2 has norm f1^2 - a2 f2^2, so n1 - t1^2 = -f2^2 a2
  CHECK_FALSE(get("n1 - t1^2 = f2^2 a2"));
  CHECK(get("b3 = ((z1 z2)^-1)^2 fixed by sigma3"));
  CHECK(td.t[0] == td.f1);
}

TEST_CASE("trace data: f1 = 0 instance is degenerate") {
  Rng rng(4);
  auto A = random_crossed_instance(2, rng, Branch::f1_zero);
  CHECK_THROWS_WITH(trace_data(A), "degenerate: some t_i = 0 or n_i - t_i^2 = 0");
  auto F = make_field(6, {});
  auto K = std::make_shared<const KummerField>(F, 3, FieldElement(F, Rat(2)), FieldElement(F, Rat(3)));
  CHECK_THROWS(trace_data(twisted_crossed(K, K->one(), K->one(), FieldElement(F, Rat(5)), FieldElement(F, Rat(7)))));
}

TEST_CASE("serre_form: dimension, q2 expansion and hypotheses") {
  auto td = generic_trace_data();
  for (auto reading : {SerreReading::printed, SerreReading::corrected}) {
    auto q = serre_form(td, reading);
    CHECK(q.dim() == 20);
    auto e = q.entries();
    auto x = td.n[0] - td.t[0] * td.t[0];
    CHECK(e[0].is_one());
    CHECK(e[1] == x);
    CHECK(e[2] == td.n[1]);
    CHECK(e[3] == x * td.n[1]);
    for (const auto& v : e) CHECK(!v.is_zero());
  }
  CHECK(serre_form(td, SerreReading::printed).entries()[5] == td.t[0] - td.n[0] * td.n[0]);
  auto bad = td;
  bad.t[2] = FieldElement(td.field, Rat(0));
  CHECK_THROWS_WITH(serre_form(bad), "hypothesis violated");
  bad = td;
  bad.n[1] = bad.t[1] * bad.t[1];
  CHECK_THROWS_WITH(serre_form(bad, SerreReading::corrected), "hypothesis violated");
}

TEST_CASE("equiv_form: 16 entries over the four generators") {
  auto td = generic_trace_data();
  auto ef = equiv_form(td);
  CHECK(ef.form.dim() == 16);
  CHECK(ef.generator_names == std::vector<std::string>{"n1/t1^2", "n2/t2^2", "t1*t2", "t2*t3"});
  CHECK(ef.audit.ok());
  for (std::size_t i = 0; i < ef.entries.size(); ++i) CHECK(expr_evaluate(ef.entries[i], ef.generators) == ef.form.entries()[i]);
  auto g2 = td.n[1] / (td.t[1] * td.t[1]);
  CHECK(ef.form.entries()[0] == g2);
  CHECK(ef.form.entries()[8] == (FieldElement(td.field, Rat(1)) - td.n[0] / (td.t[0] * td.t[0])) * g2);
  auto bad = td;
  bad.t[1] = FieldElement(td.field, Rat(0));
  CHECK_THROWS_WITH(equiv_form(bad), "zero denominator");
}

TEST_CASE("Witt moves: witnesses, replay and JSON") {
  auto F = make_field(4, {"a", "t2"});
  auto a = var(F, "a"), t2 = var(F, "t2");
  auto i = root_of_unity(F, 4);
  auto st = witt_apply({{a}, {}}, {{WittMove::Kind::negate, {0}, i}});
  CHECK(st.entries[0] == -a);
  st = witt_apply({{a}, {}}, {{WittMove::Kind::scale, {0}, t2 * t2}});
  CHECK(st.entries[0] == a * t2.pow(4));
  CHECK_THROWS_WITH(witt_apply({{a}, {}}, {{WittMove::Kind::negate, {0}, num(F, 2)}}),
                    "witness fails: negate-entry [0] witness 2");
  CHECK_THROWS(witt_apply({{a, a}, {}}, {{WittMove::Kind::cancel_hyperbolic_pair, {0, 1}, {}}}));
  st = witt_apply({{a, -a, t2}, {}}, {{WittMove::Kind::cancel_hyperbolic_pair, {0, 1}, {}}});
  CHECK(st.entries == std::vector<FieldElement>{t2});
  st = witt_apply({{a, t2}, {}}, {{WittMove::Kind::split_off, {1}, {}}});
  CHECK(st.split == std::vector<FieldElement>{t2});
  WittMove m{WittMove::Kind::scale, {3}, t2 / a};
  auto back = witt_move_from_json(F, to_json(m));
  CHECK(back.kind == m.kind);
  CHECK(back.indices == m.indices);
  CHECK(back.witness == m.witness);
}

TEST_CASE("generic Witt certificate: serre_form to equiv_form") {
  const auto& good = generic_witt_certificate(SerreReading::corrected, WittTarget::equiv);
  REQUIRE(good.moves);
  auto td = generic_trace_data();
  auto r = witt_derive_equivalence(td);
  CHECK_MESSAGE(r.ok, r.detail);
  CHECK(r.final_state.entries.size() == 16);
  std::size_t cancels = 0;
  for (const auto& mv : r.moves) cancels += mv.kind == WittMove::Kind::cancel_hyperbolic_pair;
  CHECK(cancels == 2);
  // the printed q4 slot t1 - n1^2 admits no chain, nor does the 18-dimensional target
  CHECK(!generic_witt_certificate(SerreReading::printed, WittTarget::equiv).moves);
  CHECK(!generic_witt_certificate(SerreReading::corrected, WittTarget::split_plus_equiv).moves);
  CHECK(!witt_derive_equivalence(td, SerreReading::corrected, WittTarget::split_plus_equiv).ok);
}

TEST_CASE("Witt certificate replays at 10 rational specializations") {
  for (const auto& A : rational_degree4_instances(10, 17)) {
    auto td = trace_data(A);
    auto r = witt_derive_equivalence(td);
    CHECK_MESSAGE(r.ok, r.detail);
  }
}

TEST_CASE("Witt moves preserve invariants over Q(i) at 50 rational specializations") {
  for (const auto& A : rational_degree4_instances(50, 23)) {
    auto td = trace_data(A);
    auto r = witt_derive_equivalence(td);
    REQUIRE(r.ok);
    WittState st{serre_form(td).entries(), {}};
    auto start = *rational_diagonal(st.entries);
    for (const auto& mv : r.moves) {
      auto before = st.entries.size();
      st = witt_apply(st, {mv});
      auto now = *rational_diagonal(st.entries);
      CHECK(st.entries.size() + (mv.kind == WittMove::Kind::cancel_hyperbolic_pair ? 2 : 0) == before);
      CHECK(witt_equivalent_over_Qi(start, now));
      if (mv.kind != WittMove::Kind::cancel_hyperbolic_pair) CHECK(isometry_over_Qi(start, now));
    }
    // the 18-dimensional target differs from the trace form by <1, t1^2 - n1>, which stays anisotropic
    auto target = *rational_diagonal(witt_target_entries(td, WittTarget::split_plus_equiv));
    CHECK(!witt_equivalent_over_Qi(start, target));
  }
}

TEST_CASE("trace form is isometric to equiv_form over Q(i) at rational instances") {
  for (const auto& A : rational_degree4_instances(10, 31)) {
    auto td = trace_data(A);
    auto tf = rational_entries(trace_form(A));
    auto eq = *rational_diagonal(equiv_form(td).form.entries());
    CHECK(isometry_over_Qi(tf, eq));
    CHECK(witt_equivalent_over_Qi(tf, *rational_diagonal(serre_form(td).entries())));
  }
}

TEST_CASE("scaling descent and the form bound") {
  auto F = make_field(4, {"a1", "a2"});
  auto q = diagonal(F, {var(F, "a1"), var(F, "a2")});
  auto sd = scaling_descent(q);
  REQUIRE(sd.entries.size() == 2);
  auto t1 = var(sd.field, "t1");
  CHECK(sd.entries[0] == var(sd.field, "a1") * t1 * t1);
  CHECK(sd.generators.size() == 2);
  CHECK(sd.independent);
  auto b = tau_form_bound(q);
  CHECK(b.bound == 2);
  CHECK(b.equality);
  auto G = make_field(4, {});
  auto c = tau_form_bound(diagonal(G, {num(G, 1), num(G, 2), num(G, 3)}));
  CHECK(c.bound == 3);
  CHECK(!c.equality);
  CHECK_THROWS(scaling_descent(trace_form(matrix_algebra(G, 2))));
}
