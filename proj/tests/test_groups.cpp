#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "brauerlab/groups.hpp"
#include "brauerlab/rng.hpp"

using namespace brauerlab;

TEST_CASE("cycle notation round trip") {
  Perm p = parse_cycles("(1 2)(3 4 5)", 5);
  CHECK(p == Perm{1, 0, 3, 4, 2});
  CHECK(format_cycles(p) == "(1 2)(3 4 5)");
  CHECK(format_cycles(perm_identity(3)) == "()");
  CHECK(parse_cycles("()", 3) == perm_identity(3));
  CHECK_THROWS_WITH(parse_cycles("(1 2)(2 3)", 3), doctest::Contains("not a permutation"));
  CHECK_THROWS_WITH(parse_cycles("(1 4)", 3), doctest::Contains("not a permutation"));
}

TEST_CASE("generate_group examples") {
  CHECK(generate_group(std::vector<std::string>{"(1 2)", "(1 2 3 4 5)"}, 5)->order() == 120);
  CHECK(generate_group(std::vector<std::string>{}, 3)->order() == 1);
  CHECK(generate_group(std::vector<std::string>{"(1 2)"}, 2)->order() == 2);
  CHECK_THROWS_WITH(generate_group({parse_cycles("(1 2)", 8), parse_cycles("(1 2 3 4 5 6 7 8)", 8)}, 8, 10080),
                    doctest::Contains("order cap exceeded"));
  CHECK_THROWS_WITH(generate_group({Perm{0, 0}}, 2), doctest::Contains("not a permutation"));
}

TEST_CASE("table consistency") {
  for (auto g : {symmetric_group(4), symmetric_group(5), alternating_group(5), cyclic_times_c2(5)}) {
    REQUIRE(g->element(g->identity()) == perm_identity(g->degree()));
    for (std::size_t a = 0; a < g->order(); ++a) {
      CHECK(g->mul(a, g->inv(a)) == g->identity());
      CHECK(g->mul(g->inv(a), a) == g->identity());
    }
    Rng rng(5);
    for (int k = 0; k < 1000; ++k) {
      std::size_t a = rng.index(g->order()), b = rng.index(g->order()), c = rng.index(g->order());
      REQUIRE(g->mul(g->mul(a, b), c) == g->mul(a, g->mul(b, c)));
      REQUIRE(g->element(g->mul(a, b)) == perm_compose(g->element(a), g->element(b)));
    }
    auto reach = closure(*g, g->generators());
    for (char f : reach) CHECK(f);
  }
  CHECK(cyclic_times_c2(3)->order() == 6);
  CHECK(symmetric_group(7)->order() == 5040);
}

TEST_CASE("coset spaces") {
  auto s3 = symmetric_group(3);
  CHECK(coset_space(s3, Subgroup::generated_by(s3, std::vector<std::string>{"(1 2)"}, "S2")).index() == 3);
  CHECK(coset_space(s3, Subgroup::whole(s3)).index() == 1);

  auto s5 = symmetric_group(5);
  auto h = last_point_stabilizer(s5);
  REQUIRE(h.order() == 24);
  CosetSpace cs(s5, h);
  REQUIRE(cs.index() == 5);
  // coset g S4 is determined by g(5); the action matches the natural action on that point
  for (std::size_t g = 0; g < s5->order(); ++g)
    for (std::size_t c = 0; c < 5; ++c) {
      int point = s5->element(cs.representatives()[c])[4];
      int image = s5->element(cs.representatives()[cs.act(g, c)])[4];
      CHECK(image == s5->element(g)[point]);
    }
  // lexicographic minimality of representatives
  for (std::size_t c = 0; c < cs.index(); ++c)
    for (std::size_t x = 0; x < s5->order(); ++x)
      if (cs.coset_of(x) == c) CHECK(cs.representatives()[c] <= x);

  for (const auto& fam : group_family()) {
    if (fam.group->order() > 48) continue;
    for (const auto& sub : fam.subgroups) {
      CosetSpace space(fam.group, sub);
      const auto& g = *fam.group;
      for (std::size_t a = 0; a < g.order(); ++a)
        for (std::size_t b = 0; b < g.order(); ++b)
          for (std::size_t c = 0; c < space.index(); ++c)
            REQUIRE(space.act(g.mul(a, b), c) == space.act(a, space.act(b, c)));
    }
  }
  CHECK_THROWS_WITH(CosetSpace(s5, Subgroup::whole(s3)), doctest::Contains("not a subgroup"));
}

TEST_CASE("subgroup validation") {
  auto s3 = symmetric_group(3);
  auto t = *s3->index_of(parse_cycles("(1 2)", 3));
  auto c = *s3->index_of(parse_cycles("(1 2 3)", 3));
  CHECK_THROWS_WITH(Subgroup::from_members(s3, {0, t, c}), doctest::Contains("not a subgroup"));
  CHECK(Subgroup::from_members(s3, {0, t}).order() == 2);
}

TEST_CASE("min_generators_rel") {
  auto s5 = symmetric_group(5);
  CHECK(min_generators_rel(last_point_stabilizer(s5)) == 1);
  auto v4 = generate_group(std::vector<std::string>{"(1 2)", "(3 4)"}, 4);
  CHECK(min_generators_rel(Subgroup::trivial(v4)) == 2);
  CHECK(min_generators_rel(Subgroup::whole(v4)) == 0);

  // exhaustive oracle: the tuple generates, and no shorter tuple does
  for (const auto& fam : group_family()) {
    const auto& g = *fam.group;
    for (const auto& h : fam.subgroups) {
      auto tuple = min_generating_tuple(h);
      auto gens = h.generators();
      gens.insert(gens.end(), tuple.begin(), tuple.end());
      auto flags = closure(g, gens);
      for (char f : flags) REQUIRE(f);
      if (tuple.empty()) continue;
      const std::size_t r = tuple.size() - 1;
      std::vector<std::size_t> pick(r, 0);
      bool any = false;
      while (true) {
        auto gg = h.generators();
        gg.insert(gg.end(), pick.begin(), pick.end());
        auto fl = closure(g, gg);
        bool all = true;
        for (char f : fl) all = all && f;
        any = any || all;
        std::size_t k = 0;
        while (k < r && ++pick[k] == g.order()) pick[k++] = 0;
        if (k == r) break;
      }
      CHECK_FALSE(any);
    }
  }
}

TEST_CASE("normal core") {
  auto s5 = symmetric_group(5);
  CHECK(normal_core(last_point_stabilizer(s5)).is_trivial());
  auto s4 = symmetric_group(4);
  auto d4 = Subgroup::generated_by(s4, std::vector<std::string>{"(1 2 3 4)", "(1 3)"});
  REQUIRE(d4.order() == 8);
  auto core = normal_core(d4);
  CHECK(core.order() == 4);
  CHECK(core.contains(*s4->index_of(parse_cycles("(1 2)(3 4)", 4))));
  auto a4 = Subgroup::generated_by(s4, std::vector<std::string>{"(1 2 3)", "(1 2)(3 4)"});
  CHECK(normal_core(a4) == a4);
  // brute-force oracle on the family
  for (const auto& fam : group_family()) {
    const auto& g = *fam.group;
    for (const auto& h : fam.subgroups) {
      std::set<std::size_t> inter(h.members().begin(), h.members().end());
      for (std::size_t x = 0; x < g.order(); ++x) {
        std::set<std::size_t> conj;
        for (std::size_t m : h.members()) conj.insert(g.mul(g.mul(x, m), g.inv(x)));
        std::set<std::size_t> next;
        for (std::size_t y : inter)
          if (conj.count(y)) next.insert(y);
        inter = next;
      }
      CHECK(normal_core(h).order() == inter.size());
    }
  }
}

TEST_CASE("family orders") {
  std::vector<std::pair<std::string, std::size_t>> expect = {
      {"C2", 2}, {"C3", 3}, {"C4", 4}, {"C6", 6}, {"C2xC2", 4}, {"S3", 6},
      {"D4", 8}, {"Q8", 8}, {"A4", 12}, {"S4", 24}, {"C2xC2xC2", 8}};
  auto fam = group_family();
  REQUIRE(fam.size() == expect.size());
  for (std::size_t i = 0; i < fam.size(); ++i) {
    CHECK(fam[i].name == expect[i].first);
    CHECK(fam[i].group->order() == expect[i].second);
  }
  // Q8 has a unique involution
  const auto& q8 = *fam[7].group;
  std::size_t involutions = 0;
  for (std::size_t x = 0; x < q8.order(); ++x)
    if (q8.element_order(x) == 2) ++involutions;
  CHECK(involutions == 1);
}
