#include "springerkit/clifford/clifford.hpp"

#include <algorithm>
#include <set>

#include "springerkit/error.hpp"

namespace springerkit {

namespace {

constexpr std::uint64_t kSectionSearchCap = 200000;

void require_module_over(const GModule& v, const GroupPtr& g, const char* what) {
  if (!v.over_group() || !v.group()->same_as(*g))
    throw Error(ErrorKind::SubgroupMismatch, std::string("module is not over ") + what);
}

std::vector<std::size_t> sorted_dims(const SimpleList& list) {
  auto d = list.dims();
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

InducedModule induce(const Subgroup& k, const GModule& v) {
  require_module_over(v, k.group(), "the subgroup being induced from");
  const FiniteGroup& h = *k.parent();
  InducedModule out;
  out.reps = coset_reps(h, k);
  out.base_dim = v.dim();
  const auto idx = coset_index(h, k);
  const std::size_t d = v.dim(), m = out.reps.size();
  const auto& images = v.element_images();
  std::vector<Matrix> gens;
  for (Elem g : h.generators()) {
    Matrix a(v.field(), m * d, m * d);
    for (std::size_t i = 0; i < m; ++i) {
      const Elem x = h.mul(g, out.reps[i]);
      const std::size_t j = idx[x];
      const Elem inner = h.mul(h.inv(out.reps[j]), x);
      a.set_block(j * d, i * d, images[k.to_local(inner)]);
    }
    gens.push_back(std::move(a));
  }
  out.total = GModule::trusted(k.parent(), v.field(), m * d, std::move(gens));
  return out;
}

GModule restrict(const Subgroup& k, const GModule& v) {
  require_module_over(v, k.parent(), "the ambient group");
  std::vector<Matrix> gens;
  for (Elem x : k.generators()) gens.push_back(v.element(x));
  return GModule::trusted(k.group(), v.field(), v.dim(), std::move(gens));
}

GModule twist(Elem g, const Subgroup& n, const GModule& v) {
  if (!n.is_normal()) throw Error(ErrorKind::NotNormal, "twisting needs a normal subgroup");
  require_module_over(v, n.group(), "the normal subgroup");
  const FiniteGroup& h = *n.parent();
  std::vector<Matrix> gens;
  for (Elem x : n.generators()) gens.push_back(v.element(n.to_local(h.conj(h.inv(g), x))));
  return GModule::trusted(n.group(), v.field(), v.dim(), std::move(gens));
}

GModule conjugate_module(Elem g, const Subgroup& l, const GModule& v) {
  require_module_over(v, l.group(), "the subgroup");
  const Subgroup c = l.conjugate(g);
  return GModule::trusted(c.group(), v.field(), v.dim(), v.generators());
}

Subgroup stabilizer(const Subgroup& n, const GModule& v, std::uint64_t seed) {
  if (!n.is_normal()) throw Error(ErrorKind::NotNormal, "stabilizer needs a normal subgroup");
  if (!is_simple(v, seed).simple) throw Error(ErrorKind::NotSimple, "stabilizer needs a simple module");
  const FiniteGroup& h = *n.parent();
  std::vector<Elem> members;
  for (Elem r : coset_reps(h, n)) {
    if (!simple_isomorphic(twist(r, n, v), v)) continue;
    for (Elem x : n.members()) members.push_back(h.mul(r, x));
  }
  return Subgroup::from_members(n.parent(), members);
}

CliffordReport clifford_restriction_report(const Subgroup& n, const GModule& v, std::uint64_t seed) {
  if (!n.is_normal()) throw Error(ErrorKind::NotNormal, "Clifford theory needs a normal subgroup");
  if (!is_simple(v, seed).simple) throw Error(ErrorKind::NotSimple, "restriction report needs a simple module");
  CliffordReport rep;
  const GModule res = restrict(n, v);
  rep.semisimple = is_semisimple(res, seed);
  rep.constituents = composition_factors(res, seed);
  rep.reps = coset_reps(*n.parent(), n);
  std::set<std::size_t> orbit;
  for (Elem r : rep.reps) {
    std::vector<std::size_t> perm;
    for (const auto& c : rep.constituents) {
      const GModule t = twist(r, n, c.module);
      std::size_t target = rep.constituents.size();
      for (std::size_t j = 0; j < rep.constituents.size(); ++j)
        if (simple_isomorphic(t, rep.constituents[j].module)) {
          target = j;
          break;
        }
      perm.push_back(target);
    }
    if (!perm.empty()) orbit.insert(perm[0]);
    rep.action.push_back(std::move(perm));
  }
  rep.transitive = orbit.size() == rep.constituents.size();
  rep.equal_multiplicities =
      std::all_of(rep.constituents.begin(), rep.constituents.end(),
                  [&](const Constituent& c) { return c.multiplicity == rep.constituents.front().multiplicity; });
  return rep;
}

std::vector<GModule> HeadSocle::common() const {
  std::vector<GModule> out;
  for (std::size_t i : socle) out.push_back(factors[i].module);
  return out;
}

HeadSocle head_socle_sets(const Subgroup& n, const GModule& v, std::uint64_t seed) {
  if (!n.is_normal()) throw Error(ErrorKind::NotNormal, "head and socle comparison needs a normal subgroup");
  if (!is_simple(v, seed).simple) throw Error(ErrorKind::NotSimple, "head and socle comparison needs a simple module");
  HeadSocle hs;
  hs.induced = induce(n, v);
  hs.factors = composition_factors(hs.induced.total, seed);
  hs.socle = socle_classes(hs.induced.total, hs.factors);
  hs.head = head_classes(hs.induced.total, hs.factors);
  hs.agree = hs.socle == hs.head;
  hs.restrictions_contain_v = true;
  for (std::size_t i : hs.socle)
    hs.restrictions_contain_v = hs.restrictions_contain_v && hom_dim(v, restrict(n, hs.factors[i].module)) > 0;
  return hs;
}

GradedEndAlgebra induced_end_algebra(const Subgroup& n, const GModule& v, std::uint64_t seed) {
  GradedEndAlgebra e;
  e.stabilizer = stabilizer(n, v, seed);
  e.normal = relative_to(n, e.stabilizer);
  e.weyl = quotient(e.normal);
  // relative_to keeps the generators of N, so V reads verbatim over the new copy
  const GModule vk = GModule::trusted(e.normal.group(), v.field(), v.dim(), v.generators());
  e.induced = induce(e.normal, vk);
  const GModule& ind = e.induced.total;
  const FieldPtr& field = v.field();
  const Field& f = *field;
  const std::size_t d = v.dim(), total = ind.dim();
  const FiniteGroup& k = *e.stabilizer.group();
  const GModule res = restrict(e.normal, ind);

  // Hom_N(V, block_j) for every block, carried to endomorphisms by Frobenius
  // reciprocity: f(s_i (x) v) = s_i . phi(v).
  std::vector<Matrix> phis;
  for (std::size_t j = 0; j < e.induced.reps.size(); ++j) {
    std::vector<Matrix> block_gens;
    for (const Matrix& g : res.generators()) block_gens.push_back(g.block(j * d, j * d, d, d));
    const GModule block = GModule::trusted(res.group(), field, d, std::move(block_gens));
    const Elem label = e.weyl.projection[k.inv(e.induced.reps[j])];
    for (const Matrix& x : hom_space(vk, block)) {
      Matrix phi(field, total, d);
      phi.set_block(j * d, 0, x);
      phis.push_back(std::move(phi));
      e.degree.push_back(label);
    }
  }
  const std::size_t m = phis.size();
  for (const Matrix& phi : phis) {
    Matrix end(field, total, total);
    for (std::size_t i = 0; i < e.induced.reps.size(); ++i) end.set_block(0, i * d, ind.element(e.induced.reps[i]) * phi);
    e.endomorphisms.push_back(std::move(end));
  }

  // Coordinates of an endomorphism from its first block column, through an
  // invertible square selection of the stacked phi columns.
  Matrix stacked(field, total * d, m);
  for (std::size_t c = 0; c < m; ++c)
    for (std::size_t r = 0; r < total; ++r)
      for (std::size_t s = 0; s < d; ++s) stacked(r * d + s, c) = phis[c](r, s);
  const std::vector<std::size_t> rows = row_reduce(stacked.transpose()).pivots;
  Matrix square(field, m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t c = 0; c < m; ++c) square(i, c) = stacked(rows[i], c);
  const Matrix select_inv = *inverse(square);

  std::vector<FieldElem> constants(m * m * m, f.zero());
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      const Matrix prod = e.endomorphisms[a] * e.endomorphisms[b];
      std::vector<FieldElem> picked(m);
      for (std::size_t i = 0; i < m; ++i) picked[i] = prod(rows[i] / d, rows[i] % d);
      const auto coords = select_inv.apply(picked);
      std::copy(coords.begin(), coords.end(), constants.begin() + static_cast<std::ptrdiff_t>((a * m + b) * m));
    }
  e.algebra = Algebra::make(field, m, std::move(constants));

  e.pieces.assign(e.weyl.group->order(), {});
  for (std::size_t i = 0; i < m; ++i) e.pieces[e.degree[i]].push_back(i);
  e.degree_one_dim = e.pieces[0].size();
  return e;
}

std::string to_string(CocycleStatus s) {
  switch (s) {
    case CocycleStatus::Trivial: return "Trivial";
    case CocycleStatus::Nontrivial: return "Nontrivial";
    case CocycleStatus::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

CocycleVerdict cocycle_verdict(const GradedEndAlgebra& e, std::uint64_t seed) {
  CocycleVerdict out;
  const FiniteGroup& w = *e.weyl.group;
  const Algebra& alg = *e.algebra;
  const FieldPtr& field = alg.field();
  const Field& f = *field;
  out.end_dims = sorted_dims(simple_modules(e.algebra, seed));
  out.group_algebra_dims = sorted_dims(simple_modules(e.weyl.group, field, seed));
  if (out.end_dims != out.group_algebra_dims) {
    out.status = CocycleStatus::Nontrivial;
    out.reason = "simple module dimensions differ from those of the group algebra of W";
    return out;
  }
  if (w.order() == 1) {
    out.status = CocycleStatus::Trivial;
    out.section = std::vector<std::vector<FieldElem>>{alg.unit()};
    out.reason = "W is trivial";
    return out;
  }
  for (const auto& piece : e.pieces)
    if (piece.size() != 1) {
      out.status = CocycleStatus::Inconclusive;
      out.reason = "graded pieces are not one-dimensional";
      return out;
    }

  // u_g = lambda_g b_g on generators, extended along the spanning tree of W;
  // a section is multiplicative iff every non-tree edge closes up.
  const auto& gens = w.generators();
  const std::size_t r = gens.size();
  const std::uint64_t units = f.order() - 1;
  std::uint64_t combos = 1;
  for (std::size_t i = 0; i < r && combos <= kSectionSearchCap; ++i) combos *= units;
  if (combos > kSectionSearchCap) {
    out.status = CocycleStatus::Inconclusive;
    out.reason = "section search space too large";
    return out;
  }
  const FieldElem prim = f.primitive_element();
  auto basis_vec = [&](Elem x) {
    std::vector<FieldElem> v(alg.dim(), f.zero());
    v[e.pieces[x][0]] = f.one();
    return v;
  };
  for (std::uint64_t code = 0; code < combos; ++code) {
    std::vector<std::vector<FieldElem>> u(w.order());
    u[0] = alg.unit();
    std::vector<std::vector<FieldElem>> ug(r);
    std::uint64_t c = code;
    for (std::size_t i = 0; i < r; ++i) {
      const FieldElem lambda = f.pow(prim, c % units);
      c /= units;
      ug[i] = basis_vec(gens[i]);
      for (auto& x : ug[i]) x = f.mul(lambda, x);
    }
    for (Elem x : w.tree_order())
      if (x != 0) u[x] = alg.multiply(u[w.parent(x)], ug[w.parent_generator(x)]);
    bool ok = true;
    for (Elem x = 0; x < w.order() && ok; ++x)
      for (std::size_t i = 0; i < r && ok; ++i) ok = alg.multiply(u[x], ug[i]) == u[w.mul(x, gens[i])];
    if (ok) {
      out.status = CocycleStatus::Trivial;
      out.section = std::move(u);
      out.reason = "multiplicative section found";
      return out;
    }
  }
  out.status = CocycleStatus::Inconclusive;
  out.reason = "no multiplicative section with one-dimensional pieces";
  return out;
}

bool same_composition_factors(const std::vector<Constituent>& a, const std::vector<Constituent>& b) {
  if (a.size() != b.size()) return false;
  for (const auto& x : a) {
    bool matched = false;
    for (const auto& y : b)
      if (x.module.dim() == y.module.dim() && simple_isomorphic(x.module, y.module)) {
        matched = x.multiplicity == y.multiplicity;
        break;
      }
    if (!matched) return false;
  }
  return true;
}

MackeyResult mackey_terms(const Subgroup& k, const Subgroup& l, const GModule& v, std::uint64_t seed) {
  if (!k.parent()->same_as(*l.parent())) throw Error(ErrorKind::SubgroupMismatch, "subgroups of different groups");
  require_module_over(v, l.group(), "L");
  const FiniteGroup& h = *k.parent();
  MackeyResult out;
  out.restricted_induced = restrict(k, induce(l, v).total);
  std::size_t dims = 0;
  GModule sum;
  for (Elem g : coset_reps(h, k, &l)) {
    Subgroup meet = intersect(k, l.conjugate(g));
    // x in K and gLg^-1 acts as g^-1 x g does on V
    std::vector<Matrix> gens;
    for (Elem x : meet.generators()) gens.push_back(v.element(l.to_local(h.conj(h.inv(g), x))));
    const Subgroup meet_in_k = relative_to(meet, k);
    const GModule inner = GModule::trusted(meet_in_k.group(), v.field(), v.dim(), std::move(gens));
    GModule term = induce(meet_in_k, inner).total;
    dims += term.dim();
    sum = sum.dim() == 0 ? term : direct_sum(sum, term);
    out.terms.push_back({g, std::move(meet), std::move(term)});
  }
  out.dims_match = dims == out.restricted_induced.dim();
  const auto lhs = composition_factors(out.restricted_induced, seed);
  out.semisimple = is_semisimple(out.restricted_induced, seed) && is_semisimple(sum, seed);
  if (out.semisimple) {
    out.modules_match = out.dims_match && module_iso_test(out.restricted_induced, sum, seed);
  } else {
    out.modules_match = out.dims_match && same_composition_factors(lhs, composition_factors(sum, seed));
  }
  return out;
}

}  // namespace springerkit
