#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "springerkit/error.hpp"

using namespace springerkit;

namespace {

// Closure by brute force over sets of permutations.
std::size_t closure_order_oracle(std::size_t degree, const std::vector<std::vector<std::uint32_t>>& gens) {
  std::vector<std::uint32_t> id(degree);
  for (std::uint32_t i = 0; i < degree; ++i) id[i] = i;
  std::set<std::vector<std::uint32_t>> seen{id};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<std::uint32_t>> current(seen.begin(), seen.end());
    for (const auto& a : current)
      for (const auto& b : gens) {
        std::vector<std::uint32_t> c(degree);
        for (std::size_t j = 0; j < degree; ++j) c[j] = a[b[j]];
        grew |= seen.insert(c).second;
      }
  }
  return seen.size();
}

std::vector<Elem> center(const FiniteGroup& g) {
  std::vector<Elem> z;
  for (Elem a = 0; a < g.order(); ++a) {
    bool central = true;
    for (Elem b = 0; b < g.order() && central; ++b) central = g.mul(a, b) == g.mul(b, a);
    if (central) z.push_back(a);
  }
  return z;
}

void check_axioms(const FiniteGroup& g) {
  const Elem n = static_cast<Elem>(g.order());
  for (Elem a = 0; a < n; ++a) {
    CHECK(g.mul(0, a) == a);
    CHECK(g.mul(a, 0) == a);
    CHECK(g.mul(a, g.inv(a)) == 0);
    CHECK(g.mul(g.inv(a), a) == 0);
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) REQUIRE(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
  }
  for (Elem x : g.tree_order()) {
    if (x == 0) continue;
    CHECK(g.mul(g.parent(x), g.generators()[g.parent_generator(x)]) == x);
    Elem y = 0;
    for (auto i : g.word(x)) y = g.mul(y, g.generators()[i]);
    CHECK(y == x);
  }
}

}  // namespace

TEST_SUITE("grp") {
  TEST_CASE("group_make examples") {
    auto s3 = fixtures::s3();
    CHECK(s3->order() == 6);
    CHECK(closure_order_oracle(3, {{1, 0, 2}, {1, 2, 0}}) == 6);
    CHECK_FALSE(s3->is_abelian());
    check_axioms(*s3);

    auto q8 = fixtures::q8();
    CHECK(q8->order() == 8);
    CHECK(center(*q8) == std::vector<Elem>{0, 1});
    CHECK(q8->exponent() == 4);
    check_axioms(*q8);

    auto trivial = FiniteGroup::from_permutations(4, {});
    CHECK(trivial->order() == 1);
    CHECK(trivial->abelian_invariants() == std::vector<std::uint64_t>{});
  }

  TEST_CASE("closure matches brute force") {
    const std::vector<std::pair<std::size_t, std::vector<std::vector<std::uint32_t>>>> cases = {
        {4, {{1, 0, 2, 3}, {1, 2, 3, 0}}},
        {4, {{1, 2, 0, 3}, {1, 0, 3, 2}}},
        {5, {{1, 2, 3, 4, 0}, {0, 4, 3, 2, 1}}},
        {6, {{1, 0, 2, 3, 4, 5}, {0, 1, 3, 2, 4, 5}, {0, 1, 2, 3, 5, 4}}},
        {6, {{1, 2, 0, 4, 5, 3}}},
    };
    for (const auto& [deg, gens] : cases) {
      auto g = FiniteGroup::from_permutations(deg, gens);
      CHECK(g->order() == closure_order_oracle(deg, gens));
      check_axioms(*g);
      // BFS numbering: element i is the i-th permutation in the tree order.
      for (Elem x = 0; x < g->order(); ++x) CHECK(g->find_permutation(g->permutations()[x]) == x);
    }
  }

  TEST_CASE("table groups") {
    auto q = fixtures::q8_table();
    auto g = FiniteGroup::from_table(q);
    CHECK(g->order() == 8);
    check_axioms(*g);

    auto bad = q;
    std::swap(bad[2][3], bad[2][4]);
    CHECK_THROWS_WITH_AS(FiniteGroup::from_table(bad), doctest::Contains("NotAGroup"), Error);

    // Latin square that is not associative (a loop of order 5).
    std::vector<std::vector<std::uint32_t>> loop = {
        {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
    CHECK_THROWS_AS(FiniteGroup::from_table(loop), Error);

    std::vector<std::vector<std::uint32_t>> no_identity = {{1, 0}, {0, 1}};
    CHECK_THROWS_AS(FiniteGroup::from_table(no_identity), Error);

    CHECK_THROWS_AS(FiniteGroup::from_table(q, std::vector<Elem>{2}), Error);
  }

  TEST_CASE("construction errors") {
    CHECK_THROWS_WITH_AS(FiniteGroup::from_permutations(3, {{0, 0, 1}}), doctest::Contains("NotAGroup"), Error);
    CHECK_THROWS_AS(FiniteGroup::from_permutations(3, {{0, 1}}), Error);
    // S8 has order 40320
    try {
      FiniteGroup::from_permutations(8, {{1, 0, 2, 3, 4, 5, 6, 7}, {1, 2, 3, 4, 5, 6, 7, 0}});
      FAIL("expected ClosureTooLarge");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ClosureTooLarge);
    }
    CHECK_THROWS_AS(Subgroup::make(fixtures::s3(), {6}), Error);
  }

  TEST_CASE("subgroup_make examples") {
    auto s3 = fixtures::s3();
    const Elem t = s3->generators()[0], c = s3->generators()[1];
    auto a3 = Subgroup::make(s3, {c});
    CHECK(a3.order() == 3);
    CHECK(a3.is_normal());
    auto st = Subgroup::make(s3, {t});
    CHECK(st.order() == 2);
    CHECK_FALSE(st.is_normal());
    auto all = Subgroup::whole(s3);
    CHECK(all.order() == 6);
    CHECK(all.is_normal());
    CHECK(all.group() == s3);

    auto q8 = fixtures::q8();
    auto z = Subgroup::make(q8, {1});
    CHECK(z.order() == 2);
    CHECK(z.is_normal());

    // Local group views agree with the parent product.
    for (const Subgroup* s : {&a3, &st, &z})
      for (Elem a = 0; a < s->order(); ++a)
        for (Elem b = 0; b < s->order(); ++b)
          CHECK(s->to_parent(s->group()->mul(a, b)) == s->parent()->mul(s->to_parent(a), s->to_parent(b)));
  }

  TEST_CASE("normality against conjugation by every element") {
    for (const auto& [name, g] : fixtures::small_groups()) {
      CAPTURE(name);
      for (Elem x = 0; x < g->order(); ++x) {
        auto s = Subgroup::make(g, {x});
        bool normal = true;
        for (Elem h = 0; h < g->order(); ++h)
          for (Elem m : s.members()) normal = normal && s.contains(g->conj(h, m));
        CHECK(s.is_normal() == normal);
      }
    }
  }

  TEST_CASE("coset_reps examples") {
    auto s3 = fixtures::s3();
    auto a3 = Subgroup::make(s3, {s3->generators()[1]});
    CHECK(coset_reps(*s3, a3).size() == 2);
    CHECK(coset_reps(*s3, a3, &a3).size() == 2);
    auto all = Subgroup::whole(s3);
    CHECK(coset_reps(*s3, all, &all) == std::vector<Elem>{0});

    auto st = Subgroup::make(s3, {s3->generators()[0]});
    CHECK(coset_reps(*s3, st, &a3).size() == 1);
    CHECK(coset_reps(*s3, st, &st).size() == 2);
  }

  TEST_CASE("Lagrange and double coset partitions") {
    for (const auto& [name, g] : fixtures::small_groups()) {
      CAPTURE(name);
      std::vector<Subgroup> subs;
      for (Elem x = 0; x < g->order(); ++x) subs.push_back(Subgroup::make(g, {x}));
      subs.push_back(Subgroup::whole(g));
      if (g->generators().size() > 1) subs.push_back(Subgroup::make(g, {g->generators()[1]}));
      for (const auto& k : subs) {
        const auto reps = coset_reps(*g, k);
        CHECK(reps.size() * k.order() == g->order());
        CHECK(std::is_sorted(reps.begin(), reps.end()));
        const auto idx = coset_index(*g, k);
        for (Elem x = 0; x < g->order(); ++x) CHECK(reps[idx[x]] <= x);
      }
      for (std::size_t i = 0; i < subs.size(); i += 3)
        for (std::size_t j = 0; j < subs.size(); j += 2) {
          const auto& k = subs[i];
          const auto& l = subs[j];
          std::vector<int> hits(g->order(), 0);
          for (Elem r : coset_reps(*g, k, &l)) {
            std::set<Elem> dc;
            for (Elem a : k.members())
              for (Elem b : l.members()) dc.insert(g->mul(g->mul(a, r), b));
            CHECK(*dc.begin() == r);
            for (Elem y : dc) ++hits[y];
          }
          CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
        }
    }
  }

  TEST_CASE("quotient examples") {
    auto s3 = fixtures::s3();
    auto a3 = Subgroup::make(s3, {s3->generators()[1]});
    auto q = quotient(a3);
    CHECK(q.group->order() == 2);

    auto q8 = fixtures::q8();
    auto kq = quotient(Subgroup::make(q8, {1}));
    CHECK(kq.group->order() == 4);
    CHECK(kq.group->abelian_invariants() == std::vector<std::uint64_t>{2, 2});

    auto id = quotient(Subgroup::trivial(s3));
    CHECK(id.group->order() == 6);
    CHECK_FALSE(id.group->is_abelian());

    auto st = Subgroup::make(s3, {s3->generators()[0]});
    try {
      quotient(st);
      FAIL("expected NotNormal");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotNormal);
    }
  }

  TEST_CASE("quotient projection is a homomorphism with kernel N") {
    for (const auto& [name, g] : fixtures::small_groups()) {
      CAPTURE(name);
      for (Elem x = 0; x < g->order(); ++x) {
        auto n = Subgroup::make(g, {x});
        if (!n.is_normal()) continue;
        auto q = quotient(n);
        CHECK(q.group->order() * n.order() == g->order());
        for (Elem a = 0; a < g->order(); ++a) {
          CHECK((q.projection[a] == 0) == n.contains(a));
          for (Elem b = 0; b < g->order(); ++b)
            REQUIRE(q.projection[g->mul(a, b)] == q.group->mul(q.projection[a], q.projection[b]));
        }
      }
    }
  }

  TEST_CASE("abelian invariants") {
    CHECK(fixtures::cyclic(6)->abelian_invariants() == std::vector<std::uint64_t>{2, 3});
    CHECK(fixtures::cyclic(4)->abelian_invariants() == std::vector<std::uint64_t>{4});
    CHECK(fixtures::klein()->abelian_invariants() == std::vector<std::uint64_t>{2, 2});
    auto c2c4 = FiniteGroup::from_permutations(6, {{1, 0, 2, 3, 4, 5}, {0, 1, 3, 4, 5, 2}});
    CHECK(c2c4->abelian_invariants() == std::vector<std::uint64_t>{2, 4});
    CHECK_FALSE(fixtures::s3()->abelian_invariants().has_value());
  }

  TEST_CASE("conjugacy classes") {
    CHECK(fixtures::s3()->conjugacy_classes().size() == 3);
    CHECK(fixtures::q8()->conjugacy_classes().size() == 5);
    CHECK(fixtures::a4()->conjugacy_classes().size() == 4);
    CHECK(fixtures::s4()->conjugacy_classes().size() == 5);
    for (const auto& [name, g] : fixtures::small_groups()) {
      std::size_t total = 0;
      for (const auto& c : g->conjugacy_classes()) {
        CHECK(g->order() % c.size() == 0);
        total += c.size();
      }
      CHECK(total == g->order());
    }
  }

  TEST_CASE("relative subgroups and intersections") {
    auto g = fixtures::z2_s3();
    const auto& gens = g->generators();
    auto a3 = Subgroup::make(g, {gens[2]});
    auto z2a3 = Subgroup::make(g, {gens[0], gens[2]});
    auto rel = relative_to(a3, z2a3);
    CHECK(rel.order() == 3);
    CHECK(rel.is_normal());
    CHECK(rel.parent() == z2a3.group());
    auto s3 = Subgroup::make(g, {gens[1], gens[2]});
    CHECK(intersect(s3, z2a3).same_members(a3));
    CHECK_THROWS_AS(relative_to(s3, z2a3), Error);
    auto conj = Subgroup::make(g, {gens[1]}).conjugate(gens[2]);
    CHECK(conj.order() == 2);
    CHECK_FALSE(conj.same_members(Subgroup::make(g, {gens[1]})));
  }
}
