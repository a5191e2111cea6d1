#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "springerkit/clifford/clifford.hpp"
#include "springerkit/error.hpp"
#include "springerkit/modrep/meataxe.hpp"

using namespace springerkit;
using fixtures::from_ints;

namespace {

// dim Hom(M, N) from the full Kronecker-style system X A_i - B_i X = 0.
std::size_t hom_dim_oracle(const GModule& m, const GModule& n) {
  const Field& f = *m.field();
  const std::size_t dm = m.dim(), dn = n.dim(), unknowns = dm * dn;
  const std::size_t r = m.generators().size();
  Matrix sys(m.field(), r * unknowns, unknowns);
  for (std::size_t g = 0; g < r; ++g) {
    const Matrix& a = m.generators()[g];
    const Matrix& b = n.generators()[g];
    for (std::size_t p = 0; p < dn; ++p)
      for (std::size_t c = 0; c < dm; ++c) {
        const std::size_t row = g * unknowns + p * dm + c;
        // (X A)[p][c] = sum_q X[p][q] A[q][c]
        for (std::size_t q = 0; q < dm; ++q) sys(row, p * dm + q) = f.add(sys(row, p * dm + q), a(q, c));
        // (B X)[p][c] = sum_s B[p][s] X[s][c]
        for (std::size_t s = 0; s < dn; ++s) sys(row, s * dm + c) = f.sub(sys(row, s * dm + c), b(p, s));
      }
  }
  return unknowns - rank(sys);
}

bool invariant(const GModule& m, const Matrix& rows) {
  EchelonBasis span(m.field(), m.dim());
  for (std::size_t r = 0; r < rows.rows(); ++r) span.insert({rows.row(r).begin(), rows.row(r).end()});
  for (const Matrix& g : m.generators())
    for (std::size_t r = 0; r < rows.rows(); ++r)
      if (!span.contains(g.apply(rows.row(r)))) return false;
  return true;
}

// Number of conjugacy classes of elements of order prime to p.
std::size_t p_regular_classes(const FiniteGroup& g, std::uint64_t p) {
  std::size_t count = 0;
  for (const auto& c : g.conjugacy_classes())
    if (g.element_order(c.front()) % p != 0) ++count;
  return count;
}

// GF(q) contains the roots of unity of the p'-part of the exponent.
bool splits(const FiniteGroup& g, const Field& f) {
  std::uint64_t e = g.exponent();
  while (e % f.characteristic() == 0) e /= f.characteristic();
  return (f.order() - 1) % e == 0;
}

std::size_t dims_sum(const std::vector<Constituent>& cs) {
  std::size_t s = 0;
  for (const auto& c : cs) s += c.module.dim() * c.multiplicity;
  return s;
}

std::vector<std::size_t> sorted_dims(const std::vector<Constituent>& cs) {
  std::vector<std::size_t> d;
  for (const auto& c : cs) d.push_back(c.module.dim());
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

TEST_SUITE("modrep") {
  TEST_CASE("module_make examples") {
    auto gf7 = Field::make(7);
    auto a3 = fixtures::cyclic(3);
    auto chi = from_ints(a3, gf7, {{{2}}});
    CHECK(chi.dim() == 1);
    CHECK(chi.element(2) == Matrix::from_ints(gf7, {{4}}));

    auto s3 = fixtures::s3();
    auto triv = from_ints(s3, gf7, {{{1, 0}, {0, 1}}, {{1, 0}, {0, 1}}});
    for (const Matrix& x : triv.element_images()) CHECK(x == Matrix::identity(gf7, 2));

    try {
      from_ints(a3, gf7, {{{3}}});
      FAIL("expected NotARepresentation");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotARepresentation);
    }
    try {
      from_ints(a3, gf7, {{{0}}});
      FAIL("expected SingularMatrix");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::SingularMatrix);
    }
    // Generators of S3 swapped: the reflection module relations fail.
    CHECK_THROWS_AS(from_ints(s3, gf7, {{{0, -1}, {1, -1}}, {{-1, 1}, {0, 1}}}), Error);
    CHECK_THROWS_AS(from_ints(s3, gf7, {{{1}}}), Error);
    CHECK_THROWS_AS(GModule::make(s3, gf7, {Matrix::identity(Field::make(5), 1), Matrix::identity(gf7, 1)}), Error);
  }

  TEST_CASE("hom_space examples") {
    auto gf7 = Field::make(7);
    auto a3 = fixtures::cyclic(3);
    auto chi = from_ints(a3, gf7, {{{2}}});
    CHECK(hom_dim(chi, chi) == 1);

    auto s3 = fixtures::s3();
    auto triv = GModule::trivial(s3, gf7);
    auto sign = fixtures::s3_sign(s3, gf7);
    CHECK(hom_dim(triv, sign) == 0);

    auto a3s = Subgroup::make(s3, {s3->generators()[1]});
    auto ind = induce(a3s, GModule::trivial(a3s.group(), gf7)).total;
    CHECK(ind.dim() == 2);
    CHECK(hom_dim(ind, triv) == 1);

    auto other = Subgroup::make(s3, {s3->generators()[0]});
    CHECK_THROWS_AS(hom_space(GModule::trivial(other.group(), gf7), triv), Error);
    CHECK_THROWS_AS(hom_space(GModule::trivial(s3, Field::make(5)), triv), Error);

    for (const Matrix& x : hom_space(ind, direct_sum(triv, ind)))
      for (std::size_t g = 0; g < 2; ++g)
        CHECK(x * ind.generators()[g] == direct_sum(triv, ind).generators()[g] * x);
  }

  TEST_CASE("is_simple examples") {
    auto gf7 = Field::make(7);
    auto gf5 = Field::make(5);
    auto s3 = fixtures::s3();
    CHECK(is_simple(fixtures::s3_sign(s3, gf7)).simple);
    CHECK(is_simple(fixtures::s3_two(s3, gf7)).simple);

    auto q8 = fixtures::q8();
    auto z = Subgroup::make(q8, {1});
    auto sign = from_ints(z.group(), gf5, {{{-1}}});
    auto ind = induce(z, sign).total;
    CHECK(ind.dim() == 4);
    auto verdict = is_simple(ind);
    CHECK_FALSE(verdict.simple);
    CHECK(verdict.witness.rows() > 0);
    CHECK(verdict.witness.rows() < 4);
    CHECK(invariant(ind, verdict.witness));
    CHECK(is_simple(fixtures::q8_two_gf5(q8, gf5)).simple);

    // C3 over GF(2): simple of dimension 2 that is not absolutely simple.
    auto gf2 = Field::make(2);
    auto c3 = fixtures::cyclic(3);
    auto two = from_ints(c3, gf2, {{{0, 1}, {1, 1}}});
    CHECK(is_simple(two).simple);
    CHECK(hom_dim(two, two) == 2);
  }

  TEST_CASE("composition_factors examples") {
    auto s3 = fixtures::s3();
    auto a3s = Subgroup::make(s3, {s3->generators()[1]});
    auto gf7 = Field::make(7);
    auto ind7 = induce(a3s, GModule::trivial(a3s.group(), gf7)).total;
    auto f7 = composition_factors(ind7);
    REQUIRE(f7.size() == 2);
    CHECK(f7[0].multiplicity == 1);
    CHECK(f7[1].multiplicity == 1);
    CHECK(hom_dim(f7[0].module, GModule::trivial(s3, gf7)) == 1);
    CHECK(hom_dim(f7[1].module, fixtures::s3_sign(s3, gf7)) == 1);

    auto gf4 = Field::make(2, 2);
    auto ind4 = induce(a3s, GModule::trivial(a3s.group(), gf4)).total;
    auto f4 = composition_factors(ind4);
    REQUIRE(f4.size() == 1);
    CHECK(f4[0].multiplicity == 2);
    CHECK(hom_dim(f4[0].module, GModule::trivial(s3, gf4)) == 1);
    CHECK_FALSE(is_semisimple(ind4));

    auto two = fixtures::s3_two(s3, gf7);
    auto self = composition_factors(two);
    REQUIRE(self.size() == 1);
    CHECK(self[0].multiplicity == 1);
    CHECK(self[0].module.dim() == 2);
  }

  TEST_CASE("simple_modules examples") {
    auto s3 = fixtures::s3();
    auto l7 = simple_modules(s3, Field::make(7));
    CHECK(l7.dims() == std::vector<std::size_t>{1, 1, 2});
    auto l4 = simple_modules(s3, Field::make(2, 2));
    CHECK(l4.dims() == std::vector<std::size_t>{1, 2});
    auto l3 = simple_modules(s3, Field::make(3));
    CHECK(l3.dims() == std::vector<std::size_t>{1, 1});
    // Regular-module multiplicities over a splitting field equal dimensions
    // when the characteristic does not divide the order.
    for (const auto& e : l7.entries) CHECK(e.multiplicity == e.module.dim());
    CHECK(simple_modules(fixtures::s4(), Field::make(7)).dims() == std::vector<std::size_t>{1, 1, 2, 3, 3});
    CHECK(simple_modules(fixtures::s4(), Field::make(2)).dims() == std::vector<std::size_t>{1, 2});
    CHECK(simple_modules(fixtures::a4(), Field::make(2)).dims() == std::vector<std::size_t>{1, 2});
    CHECK(simple_modules(fixtures::a4(), Field::make(2, 2)).dims() == std::vector<std::size_t>{1, 1, 1});
    CHECK(simple_modules(fixtures::q8(), Field::make(3)).dims() == std::vector<std::size_t>{1, 1, 1, 1, 2});
    CHECK(simple_modules(fixtures::cyclic(5), Field::make(2)).dims() == std::vector<std::size_t>{1, 4});
    CHECK(l7.find(fixtures::s3_two(s3, Field::make(7))) == 2);
    CHECK(l7.find(fixtures::s3_sign(s3, Field::make(7))) == 1);
  }

  TEST_CASE("isotypic_decomposition examples") {
    auto gf5 = Field::make(5);
    auto gf7 = Field::make(7);
    auto q8 = fixtures::q8();
    auto z = Subgroup::make(q8, {1});
    auto res = restrict(z, fixtures::q8_two_gf5(q8, gf5));
    auto iso = isotypic_decomposition(res);
    REQUIRE(iso.size() == 1);
    CHECK(iso[0].multiplicity == 2);
    CHECK(iso[0].simple.generators()[0] == Matrix::from_ints(gf5, {{-1}}));

    auto s3 = fixtures::s3();
    auto sum = direct_sum(GModule::trivial(s3, gf7), fixtures::s3_sign(s3, gf7));
    auto iso2 = isotypic_decomposition(sum);
    REQUIRE(iso2.size() == 2);
    CHECK(iso2[0].multiplicity == 1);
    CHECK(iso2[1].multiplicity == 1);
    for (const auto& c : iso2) CHECK(invariant(sum, c.basis));

    auto a3s = Subgroup::make(s3, {s3->generators()[1]});
    auto iso3 = isotypic_decomposition(restrict(a3s, fixtures::s3_two(s3, gf7)));
    REQUIRE(iso3.size() == 2);
    std::vector<std::uint32_t> eig;
    for (const auto& c : iso3) eig.push_back(c.simple.generators()[0](0, 0).code);
    std::sort(eig.begin(), eig.end());
    CHECK(eig == std::vector<std::uint32_t>{2, 4});

    auto gf4 = Field::make(2, 2);
    auto ind4 = induce(a3s, GModule::trivial(a3s.group(), gf4)).total;
    CHECK_THROWS_AS(isotypic_decomposition(ind4), Error);
  }

  TEST_CASE("module_iso_test examples") {
    auto gf7 = Field::make(7);
    auto s3 = fixtures::s3();
    auto two = fixtures::s3_two(s3, gf7);
    CHECK(module_iso_test(two, two));
    CHECK_FALSE(module_iso_test(GModule::trivial(s3, gf7), fixtures::s3_sign(s3, gf7)));
    auto a3s = Subgroup::make(s3, {s3->generators()[1]});
    auto chi = from_ints(a3s.group(), gf7, {{{2}}});
    CHECK(module_iso_test(induce(a3s, chi).total, two));

    auto gf4 = Field::make(2, 2);
    auto ind4 = induce(a3s, GModule::trivial(a3s.group(), gf4)).total;
    try {
      module_iso_test(ind4, ind4);
      FAIL("expected NotSemisimple");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotSemisimple);
    }
  }

  TEST_CASE("algebra_make examples") {
    for (std::uint32_t p : {7U, 2U}) {
      auto f = Field::make(p);
      auto alg = group_algebra(fixtures::cyclic(2), f);
      CHECK(alg->unit() == std::vector<FieldElem>{f->one(), f->zero()});
      auto list = simple_modules(alg);
      CHECK(list.dims() == (p == 7 ? std::vector<std::size_t>{1, 1} : std::vector<std::size_t>{1}));
    }

    // Matrix units e_11, e_12, e_21, e_22 with e_ij e_kl = delta_jk e_il.
    auto gf7 = Field::make(7);
    std::vector<FieldElem> c(64, gf7->zero());
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t l = 0; l < 2; ++l) c[((i * 2 + j) * 4 + (j * 2 + l)) * 4 + (i * 2 + l)] = gf7->one();
    auto m2 = Algebra::make(gf7, 4, c);
    CHECK(m2->unit() == std::vector<FieldElem>{gf7->one(), gf7->zero(), gf7->zero(), gf7->one()});
    auto list = simple_modules(m2);
    CHECK(list.dims() == std::vector<std::size_t>{2});
    CHECK(list.entries[0].multiplicity == 2);

    // b0 b0 = b1 and all other products zero: associative, no unit.
    std::vector<FieldElem> nu(8, gf7->zero());
    nu[(0 * 2 + 0) * 2 + 1] = gf7->one();
    try {
      Algebra::make(gf7, 2, nu);
      FAIL("expected NoUnit");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NoUnit);
    }
    // b0 b0 = b1, everything else zero except b1 b0 = b0: not associative.
    std::vector<FieldElem> na(8, gf7->zero());
    na[(0 * 2 + 0) * 2 + 1] = gf7->one();
    na[(1 * 2 + 0) * 2 + 0] = gf7->one();
    try {
      Algebra::make(gf7, 2, na);
      FAIL("expected NotAssociative");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotAssociative);
    }

    // Modules over an algebra are validated.
    auto alg = group_algebra(fixtures::cyclic(2), gf7);
    auto sign = GModule::make(alg, {Matrix::from_ints(gf7, {{1}}), Matrix::from_ints(gf7, {{-1}})});
    CHECK(sign.dim() == 1);
    CHECK_THROWS_AS(GModule::make(alg, {Matrix::from_ints(gf7, {{1}}), Matrix::from_ints(gf7, {{2}})}), Error);
  }

  TEST_CASE("dimension cap") {
    auto g = fixtures::cyclic(65);
    auto reg = GModule::regular(g, Field::make(2));
    try {
      is_simple(reg);
      FAIL("expected DimensionCap");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DimensionCap);
    }
    CHECK_THROWS_AS(simple_modules(g, Field::make(2)), Error);
  }

  TEST_CASE("hom_space agrees with the linear-system oracle") {
    Rng rng(11);
    int instances = 0;
    for (const auto& [name, g] : fixtures::small_groups()) {
      if (g->order() > 12) continue;
      for (auto [p, k] : {std::pair{2U, 1U}, {3U, 1U}, {2U, 2U}, {5U, 1U}}) {
        CAPTURE(name);
        CAPTURE(p);
        auto f = Field::make(p, k);
        auto list = simple_modules(g, f, rng() % 3);
        std::vector<GModule> mods;
        for (const auto& e : list.entries) mods.push_back(e.module);
        mods.push_back(GModule::regular(g, f));
        if (mods.size() > 2) mods.push_back(direct_sum(mods[0], mods[1]));
        for (const auto& a : mods)
          for (const auto& b : mods) {
            if (a.dim() * b.dim() > 150) continue;
            CHECK(hom_dim(a, b) == hom_dim_oracle(a, b));
            ++instances;
          }
      }
    }
    CHECK(instances > 100);
  }

  TEST_CASE("simple modules: counts, dimensions, seeds") {
    for (const auto& [name, g] : fixtures::small_groups()) {
      for (auto [p, k] : {std::pair{2U, 1U}, {3U, 1U}, {2U, 2U}, {5U, 1U}, {7U, 1U}, {3U, 2U}}) {
        CAPTURE(name);
        CAPTURE(p);
        CAPTURE(k);
        auto f = Field::make(p, k);
        auto a = simple_modules(g, f, 0);
        auto b = simple_modules(g, f, 1);
        CHECK(a.fingerprints == b.fingerprints);
        std::size_t sq = 0;
        for (const auto& e : a.entries) {
          CHECK(is_simple(e.module, 5).simple);
          sq += e.module.dim() * e.module.dim();
        }
        if (splits(*g, *f)) {
          CHECK(a.size() == p_regular_classes(*g, p));
          for (const auto& e : a.entries) CHECK(hom_dim(e.module, e.module) == 1);
          if (g->order() % p != 0) CHECK(sq == g->order());
        }
        for (std::size_t i = 0; i < a.size(); ++i)
          for (std::size_t j = 0; j < a.size(); ++j)
            CHECK((hom_dim(a.entries[i].module, a.entries[j].module) > 0) == (i == j));
      }
    }
  }

  TEST_CASE("composition factors and semisimplicity on generated modules") {
    Rng rng(5);
    for (const auto& [name, g] : fixtures::small_groups()) {
      if (g->order() > 12) continue;
      for (auto [p, k] : {std::pair{2U, 1U}, {3U, 1U}, {7U, 1U}}) {
        CAPTURE(name);
        auto f = Field::make(p, k);
        auto reg = GModule::regular(g, f);
        auto fa = composition_factors(reg, 0);
        auto fb = composition_factors(reg, 9);
        CHECK(dims_sum(fa) == reg.dim());
        CHECK(sorted_dims(fa) == sorted_dims(fb));
        // Maschke: semisimple exactly when p does not divide |G|.
        CHECK(is_semisimple(reg, rng() % 5) == (g->order() % p != 0));
        auto v = is_simple(reg, rng() % 5);
        if (!v.simple) CHECK(invariant(reg, v.witness));
      }
    }
  }

  TEST_CASE("hom dimension symmetry for semisimple modules") {
    auto f = Field::make(7);
    for (const auto& [name, g] : fixtures::small_groups()) {
      if (g->order() > 12 || g->order() % 7 == 0) continue;
      auto list = simple_modules(g, f);
      GModule m = list.entries[0].module;
      for (std::size_t i = 1; i < list.size(); ++i) m = direct_sum(m, list.entries[i].module);
      GModule n = direct_sum(list.entries.back().module, m);
      CHECK(hom_dim(m, n) == hom_dim(n, m));
      CHECK(module_iso_test(direct_sum(m, n), direct_sum(n, m)));
    }
  }
}
