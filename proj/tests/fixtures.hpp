#pragma once

#include <string>
#include <vector>

#include "springerkit/grp/group.hpp"
#include "springerkit/modrep/module.hpp"

namespace fixtures {

using springerkit::FiniteGroup;
using springerkit::GroupPtr;
using Perm = std::vector<std::uint32_t>;

inline Perm cycle_perm(std::uint32_t degree, const std::vector<std::uint32_t>& cycle) {
  Perm p(degree);
  for (std::uint32_t i = 0; i < degree; ++i) p[i] = i;
  for (std::size_t i = 0; i < cycle.size(); ++i) p[cycle[i]] = cycle[(i + 1) % cycle.size()];
  return p;
}

inline GroupPtr cyclic(std::uint32_t n) {
  std::vector<std::uint32_t> c(n);
  for (std::uint32_t i = 0; i < n; ++i) c[i] = i;
  return FiniteGroup::from_permutations(n, {cycle_perm(n, c)});
}

// Generators: transposition (0 1), then 3-cycle (0 1 2).
inline GroupPtr s3() { return FiniteGroup::from_permutations(3, {{1, 0, 2}, {1, 2, 0}}); }

inline GroupPtr s4() { return FiniteGroup::from_permutations(4, {{1, 0, 2, 3}, {1, 2, 3, 0}}); }

inline GroupPtr a4() { return FiniteGroup::from_permutations(4, {{1, 2, 0, 3}, {1, 0, 3, 2}}); }

// Symmetries of an n-gon: rotation, then reflection.
inline GroupPtr dihedral(std::uint32_t n) {
  Perm rot(n), ref(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    ref[i] = (n - i) % n;
  }
  return FiniteGroup::from_permutations(n, {rot, ref});
}

inline GroupPtr klein() { return FiniteGroup::from_permutations(4, {{1, 0, 2, 3}, {0, 1, 3, 2}}); }

// Z/2 x S3 on 5 points: z swaps 3 and 4, then (0 1), then (0 1 2).
inline GroupPtr z2_s3() {
  return FiniteGroup::from_permutations(5, {{0, 1, 2, 4, 3}, {1, 0, 2, 3, 4}, {1, 2, 0, 3, 4}});
}

// Z/3 x S3 on 6 points.
inline GroupPtr z3_s3() {
  return FiniteGroup::from_permutations(6, {{0, 1, 2, 4, 5, 3}, {1, 0, 2, 3, 4, 5}, {1, 2, 0, 3, 4, 5}});
}

// Quaternion table: 0=1, 1=-1, 2=i, 3=-i, 4=j, 5=-j, 6=k, 7=-k.
inline std::vector<std::vector<std::uint32_t>> q8_table() {
  // unit products among 1,i,j,k as (sign, unit)
  const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  std::vector<std::vector<std::uint32_t>> t(8, std::vector<std::uint32_t>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const int ua = a / 2, ub = b / 2;
      int s = sign[ua][ub] * (a % 2 ? -1 : 1) * (b % 2 ? -1 : 1);
      t[a][b] = static_cast<std::uint32_t>(2 * unit[ua][ub] + (s < 0 ? 1 : 0));
    }
  return t;
}

inline GroupPtr q8() { return FiniteGroup::from_table(q8_table(), std::vector<springerkit::Elem>{2, 4}); }

struct NamedGroup {
  std::string name;
  GroupPtr group;
};

// Groups of order at most 24 used by the generated tests.
inline std::vector<NamedGroup> small_groups() {
  return {{"C1", FiniteGroup::from_permutations(1, {})},
          {"C2", cyclic(2)},
          {"C3", cyclic(3)},
          {"C4", cyclic(4)},
          {"C5", cyclic(5)},
          {"C6", cyclic(6)},
          {"V4", klein()},
          {"S3", s3()},
          {"D4", dihedral(4)},
          {"Q8", q8()},
          {"D5", dihedral(5)},
          {"A4", a4()},
          {"D6", dihedral(6)},
          {"Z2xS3", z2_s3()},
          {"Z3xS3", z3_s3()},
          {"S4", s4()}};
}

using springerkit::FieldPtr;
using springerkit::GModule;
using springerkit::Matrix;
using Ints = std::vector<std::vector<std::int64_t>>;

inline GModule from_ints(const GroupPtr& g, const FieldPtr& f, const std::vector<Ints>& images) {
  std::vector<Matrix> m;
  for (const auto& x : images) m.push_back(Matrix::from_ints(f, x));
  return GModule::make(g, f, std::move(m));
}

// Modules over s3(): sign and the 2-dimensional reflection module.
inline GModule s3_sign(const GroupPtr& g, const FieldPtr& f) { return from_ints(g, f, {{{-1}}, {{1}}}); }
inline GModule s3_two(const GroupPtr& g, const FieldPtr& f) {
  return from_ints(g, f, {{{-1, 1}, {0, 1}}, {{0, -1}, {1, -1}}});
}

// The 2-dimensional simple module of q8() over GF(5).
inline GModule q8_two_gf5(const GroupPtr& g, const FieldPtr& f) {
  return from_ints(g, f, {{{2, 0}, {0, 3}}, {{0, 4}, {1, 0}}});
}

}  // namespace fixtures
