#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "brauerlab/lattices.hpp"

using namespace brauerlab;

namespace {

Subgroup sub(const GroupPtr& g, std::vector<std::string> gens, const std::string& name = "") {
  return Subgroup::generated_by(g, gens, name);
}

void require_valid(const GLattice& l) {
  auto cert = validate_lattice(l, 200);
  INFO(l.label() << ": " << cert.failure());
  REQUIRE(cert.ok());
}

}  // namespace

TEST_CASE("permutation lattices") {
  auto s3 = symmetric_group(3);
  auto p = perm_lattice(CosetSpace(s3, sub(s3, {"(1 2)"})));
  CHECK(p->rank() == 3);
  require_valid(*p);
  CHECK(perm_lattice(CosetSpace(s3, Subgroup::whole(s3)))->rank() == 1);

  auto s5 = symmetric_group(5);
  auto u5 = perm_lattice(CosetSpace(s5, last_point_stabilizer(s5)));
  CHECK(u5->rank() == 5);
  // same character as the natural lattice U_5
  CHECK(character(*u5) == character(*point_lattice(s5)));
  // character at a transposition counts fixed cosets
  auto chi = character(*p);
  CHECK(chi[*s3->index_of(parse_cycles("(1 2)", 3))] == 1);
}

TEST_CASE("augmentation kernel") {
  auto s5 = symmetric_group(5);
  CosetSpace cs(s5, last_point_stabilizer(s5));
  auto [omega, embed] = augmentation_kernel(cs);
  CHECK(omega->rank() == 4);
  require_valid(*omega);
  CHECK(is_equivariant(embed));
  // augmentation after embedding is zero
  for (std::size_t j = 0; j < embed.matrix.cols(); ++j) {
    Int s = 0;
    for (std::size_t i = 0; i < embed.matrix.rows(); ++i) s += embed.matrix(i, j);
    CHECK(s == 0);
  }
  CHECK(augmentation_kernel(CosetSpace(s5, Subgroup::whole(s5))).first->rank() == 0);
}

TEST_CASE("tensor constructions") {
  auto s5 = symmetric_group(5);
  auto u = point_lattice(s5);
  auto a = augmentation_sublattice(u, "A4").first;
  auto [w, w_to_t] = wedge2(a);
  auto [s, t_to_s] = sym2(a);
  CHECK(w->rank() == 6);
  CHECK(tensor(u, u)->rank() == 25);
  CHECK(s->rank() == 10);
  require_valid(*w);
  require_valid(*s);
  CHECK(is_equivariant(w_to_t));
  CHECK(is_equivariant(t_to_s));
  Certificate exact = is_exact({w_to_t, t_to_s});
  INFO(exact.failure());
  CHECK(exact.ok());
  CHECK(direct_sum({u, a, w})->rank() == 15);
}

TEST_CASE("free presentation kernels") {
  auto c3 = cyclic_group(3);
  CosetSpace c3_1(c3, Subgroup::trivial(c3));
  auto gen = c3->generators().front();
  auto seq = freepres_sequence(c3_1, {gen});
  CHECK(seq.inner.source->rank() == 1);
  CHECK(is_exact(seq).ok());
  auto seq2 = freepres_sequence(c3_1, {gen, gen});
  CHECK(seq2.inner.source->rank() == 4);
  CHECK(is_exact(seq2).ok());
  CHECK_FALSE(is_faithful(*seq.inner.source));
  CHECK(is_faithful(*seq2.inner.source));

  auto s3 = symmetric_group(3);
  auto three = *s3->index_of(parse_cycles("(1 2 3)", 3));
  auto s = freepres_sequence(CosetSpace(s3, sub(s3, {"(1 2)"}, "S2")), {three});
  CHECK(s.inner.source->rank() == 4);
  CHECK(is_exact(s).ok());

  auto v4 = generate_group(std::vector<std::string>{"(1 2)", "(3 4)"}, 4, "C2xC2");
  auto v = freepres_sequence(CosetSpace(v4, Subgroup::trivial(v4)), v4->generators());
  CHECK(v.inner.source->rank() == 5);
  CHECK_THROWS_WITH(freepres_sequence(CosetSpace(v4, Subgroup::trivial(v4)), {v4->generators().front()}),
                    doctest::Contains("does not generate"));
}

TEST_CASE("faithfulness predicates") {
  auto c3 = cyclic_group(3);
  CHECK_FALSE(faithful_predicate_freepres(Subgroup::trivial(c3), 1));
  CHECK(faithful_predicate_freepres(Subgroup::trivial(c3), 2));
  auto s3 = symmetric_group(3);
  CHECK(faithful_predicate_freepres(sub(s3, {"(1 2)"}), 1));

  auto s4 = symmetric_group(4);
  CHECK(faithful_predicate_seq2(last_point_stabilizer(s4)));
  auto c2 = cyclic_group(2);
  CHECK_FALSE(faithful_predicate_seq2(Subgroup::trivial(c2)));
  auto c4 = cyclic_group(4);
  CHECK_FALSE(faithful_predicate_seq2(sub(c4, {"(1 3)(2 4)"})));
}

TEST_CASE("seq2 sequences") {
  auto s3 = symmetric_group(3);
  CosetSpace cs(s3, sub(s3, {"(1 2)"}, "S2"));
  auto seq = seq2_sequence(cs);
  CHECK(seq.inner.source->rank() == 4);
  CHECK(seq.inner.target->rank() == 6);
  CHECK(seq.outer.target->rank() == 2);
  auto cert = is_exact(seq);
  INFO(cert.failure());
  CHECK(cert.ok());

  auto m = seq2_m_map(cs);
  CHECK(is_equivariant(m));
  CHECK(abs(determinant(m.matrix)) == 1);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) {
      if (a == b) continue;
      IntVector image = m.matrix * seq2_m_basis_vector(cs, a, b);
      for (std::size_t k = 0; k < image.size(); ++k) CHECK(image[k] == (k == seq2_pair_index(3, a, b) ? 1 : 0));
    }

  auto s4 = symmetric_group(4);
  CHECK(is_exact(seq2_sequence(CosetSpace(s4, last_point_stabilizer(s4)))).ok());
  auto c2 = cyclic_group(2);
  auto small = seq2_sequence(CosetSpace(c2, Subgroup::trivial(c2)));
  CHECK(small.inner.source->rank() == 1);
  CHECK(small.inner.target->rank() == 2);
  CHECK(small.outer.target->rank() == 1);
}

TEST_CASE("exactness failures are named") {
  auto c2 = cyclic_group(2);
  auto z = trivial_lattice(c2);
  LatticeMap zero_in{z, z, int_zero(1, 1)};
  LatticeMap zero_out{z, z, int_zero(1, 1)};
  auto cert = is_exact({zero_in, zero_out});
  CHECK_FALSE(cert.ok());
  bool named = false;
  for (const auto& c : cert.checks)
    if (c.name == "pi surjective") named = !c.passed;
  CHECK(named);
}

TEST_CASE("formanek sequence") {
  for (int n : {3, 4}) {
    auto data = formanek_sequence(n);
    const std::size_t rank = data.sequence.inner.source->rank();
    CHECK(rank == static_cast<std::size_t>(n * n + 1));
    CHECK(is_exact(data.sequence).ok());
    CHECK(is_equivariant(data.decomposition));
    CHECK(abs(determinant(data.decomposition.matrix)) == 1);
  }
}

TEST_CASE("faithfulness of wedge squares") {
  auto s5 = symmetric_group(5);
  auto a4 = augmentation_sublattice(point_lattice(s5), "A4").first;
  CHECK(is_faithful(*wedge2(a4).first));
  auto s3 = symmetric_group(3);
  auto a2 = augmentation_sublattice(point_lattice(s3), "A2").first;
  auto w = wedge2(a2).first;
  CHECK(w->rank() == 1);
  CHECK_FALSE(is_faithful(*w));
  auto chi = character(*w);
  CHECK(chi[*s3->index_of(parse_cycles("(1 2)", 3))] == -1);
  CHECK_FALSE(perm_character_decomposition(*w, {Subgroup::trivial(s3), sub(s3, {"(1 2)"}),
                                                sub(s3, {"(1 2 3)"}), Subgroup::whole(s3)})
                  .has_value());
  CHECK_FALSE(is_faithful(*trivial_lattice(s3)));
}

TEST_CASE("permutation character of Sym2 A4 + U5 + Z") {
  auto s5 = symmetric_group(5);
  auto u = point_lattice(s5);
  auto a = augmentation_sublattice(u, "A4").first;
  auto q = direct_sum({sym2(a).first, u, trivial_lattice(s5)});
  CHECK(q->rank() == 16);
  std::vector<Subgroup> cands = {sub(s5, {"(1 2)", "(3 4)", "(3 4 5)"}, "S2xS3"), last_point_stabilizer(s5),
                                 Subgroup::whole(s5)};
  auto c = perm_character_decomposition(*q, cands);
  REQUIRE(c.has_value());
  CHECK(*c == std::vector<std::size_t>{1, 1, 1});
}

TEST_CASE("family theorems") {
  for (const auto& fam : group_family()) {
    for (const auto& h : fam.subgroups) {
      CosetSpace cs(fam.group, h);
      if (cs.index() >= 2) {
        auto omega = augmentation_kernel(cs).first;
        CHECK(is_faithful(*tensor(omega, omega)) == faithful_predicate_seq2(h));
      }
    }
  }
}
