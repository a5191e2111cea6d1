#include "springerkit/springer/springer.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "springerkit/error.hpp"

namespace springerkit {

namespace {

std::string join(const std::vector<std::uint64_t>& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return "[" + s + "]";
}

std::size_t end_simple_count(const CuspidalTriple& t, std::uint64_t seed) {
  return simple_modules(induced_end_algebra(t.a_l, t.v, seed).algebra, seed).size();
}

}  // namespace

std::vector<Pair> orbit_pairs(const GeometricDatum& d, const OrbitEntry& orbit, std::uint64_t seed) {
  const auto simples = simple_modules(orbit.a_g, d.field, seed);
  std::vector<Pair> out;
  for (std::size_t i = 0; i < simples.size(); ++i) {
    Pair p{orbit.label, i, orbit.label + ":" + std::to_string(i), simples.entries[i].module, false};
    for (const auto& ls : orbit.local_systems)
      if (simple_isomorphic(d.module(ls.module), p.module)) {
        p.label = ls.label;
        p.annotated = true;
        break;
      }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<Pair> enumerate_pairs(const GeometricDatum& d, std::uint64_t seed) {
  std::vector<Pair> out;
  for (const auto& o : d.orbits) {
    auto p = orbit_pairs(d, o, seed);
    out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  }
  return out;
}

WeylReport relative_weyl(const GeometricDatum& d, const std::string& label, std::uint64_t seed) {
  const CuspidalTriple& t = d.triple(label);
  WeylReport r;
  r.triple = label;
  r.stabilizer = stabilizer(t.a_l, t.v, seed);
  const Quotient full = quotient(t.a_l);
  r.quotient_order = full.group->order();
  r.order = r.stabilizer.order() / t.a_l.order();
  std::set<Elem> image;
  for (Elem x : r.stabilizer.members()) image.insert(full.projection[x]);
  r.elements.assign(image.begin(), image.end());
  r.abelian_invariants = quotient(relative_to(t.a_l, r.stabilizer)).group->abelian_invariants();

  if (t.w_expected) {
    const auto& w = *t.w_expected;
    auto mismatch = [&](const std::string& what, const std::string& want, const std::string& got) {
      throw Error(ErrorKind::ExpectationMismatch,
                  "triple " + label + ": W " + what + " expected " + want + ", computed " + got);
    };
    if (w.order && *w.order != r.order) mismatch("order", std::to_string(*w.order), std::to_string(r.order));
    if (w.quotient_order && *w.quotient_order != r.quotient_order)
      mismatch("ambient quotient order", std::to_string(*w.quotient_order), std::to_string(r.quotient_order));
    if (w.abelian_invariants && w.abelian_invariants != r.abelian_invariants)
      mismatch("abelian invariants", join(*w.abelian_invariants),
               r.abelian_invariants ? join(*r.abelian_invariants) : "non-abelian");
  }
  return r;
}

SeriesReport series_size(const GeometricDatum& d, const std::string& label, std::uint64_t seed) {
  const CuspidalTriple& t = d.triple(label);
  SeriesReport r;
  r.triple = label;
  r.weyl = relative_weyl(d, label, seed);
  const auto e = induced_end_algebra(t.a_l, t.v, seed);
  const auto simples = simple_modules(e.algebra, seed);
  r.end_dim = e.algebra->dim();
  r.series_size = simples.size();
  r.end_dims = simples.dims();
  std::sort(r.end_dims.begin(), r.end_dims.end());
  for (const auto& piece : e.pieces) r.piece_dims.push_back(piece.size());
  r.cocycle = cocycle_verdict(e, seed);
  r.members = t.expected_series;

  const auto hs = head_socle_sets(t.a_l, t.v, seed);
  r.head_socle_count = hs.socle.size();
  if (!hs.agree) r.problems.push_back("head and socle constituents of the induced module differ");
  if (r.head_socle_count != r.series_size)
    r.problems.push_back("socle of the induced module has " + std::to_string(r.head_socle_count) +
                         " classes, End has " + std::to_string(r.series_size) + " simples");
  if (r.members && r.members->size() != r.series_size)
    r.problems.push_back("expected_series lists " + std::to_string(r.members->size()) + " members, computed size " +
                         std::to_string(r.series_size));
  return r;
}

GammaReport gamma_decompose(const GeometricDatum& d, const std::string& orbit, const GModule& v0,
                            std::uint64_t seed) {
  const OrbitEntry& o = d.orbit(orbit);
  GammaReport r;
  r.orbit = orbit;
  const auto ind = induce(o.a_g0, v0).total;
  r.induced_dim = ind.dim();
  r.index = o.a_g0.index();
  r.modular_index = r.index % d.field->characteristic() == 0;
  r.semisimple = r.modular_index ? is_semisimple(ind, seed) : true;

  const auto pairs = orbit_pairs(d, o, seed);
  std::map<std::size_t, std::size_t> mult;
  for (const auto& f : composition_factors(ind, seed)) {
    auto it = std::find_if(pairs.begin(), pairs.end(),
                           [&](const Pair& p) { return simple_isomorphic(p.module, f.module); });
    // Every composition factor is one of the enumerated simples.
    if (it == pairs.end()) throw Error(ErrorKind::MeataxeFailure, "composition factor missing from the simple list");
    mult[it->index] += f.multiplicity;
  }
  for (const auto& [i, m] : mult) r.terms.push_back({pairs[i].label, pairs[i].module.dim(), m});
  return r;
}

PartitionReport partition_check(const GeometricDatum& d, std::uint64_t seed) {
  PartitionReport r;
  const auto pairs = enumerate_pairs(d, seed);
  r.total_pairs = pairs.size();
  r.annotated = !d.triples.empty();
  std::map<std::string, std::size_t> seen;
  for (const auto& t : d.triples) {
    const std::size_t n = end_simple_count(t, seed);
    r.sizes.emplace_back(t.label, n);
    r.sum += n;
    if (!t.expected_series) r.annotated = false;
    else
      for (const auto& m : *t.expected_series) ++seen[m];
  }
  r.covered = r.sum == r.total_pairs;
  if (r.annotated) {
    std::set<std::string> labels;
    for (const auto& p : pairs) labels.insert(p.label);
    for (const auto& [m, c] : seen) {
      if (c > 1) r.repeated.push_back(m);
      if (!labels.contains(m)) r.unknown.push_back(m);
    }
    for (const auto& p : pairs)
      if (!seen.contains(p.label)) r.missing.push_back(p.label);
    r.disjoint = r.repeated.empty();
    r.exact = r.missing.empty() && r.unknown.empty();
  }
  return r;
}

}  // namespace springerkit
