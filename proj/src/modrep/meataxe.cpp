#include "springerkit/modrep/meataxe.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "springerkit/error.hpp"
#include "springerkit/ffield/poly.hpp"

namespace springerkit {

namespace {

constexpr std::size_t kMaxAttempts = 500;
constexpr std::size_t kPoolSize = 12;

void check_cap(const GModule& m) {
  if (m.dim() > kMeataxeDimCap)
    throw Error(ErrorKind::DimensionCap, "module of dimension " + std::to_string(m.dim()) + " exceeds the cap of " +
                                             std::to_string(kMeataxeDimCap));
}

// A proper nonzero submodule (as rows), or nothing when M is simple.
std::optional<Matrix> find_submodule(const GModule& m, Rng& rng) {
  check_cap(m);
  const std::size_t d = m.dim();
  if (d <= 1) return std::nullopt;
  const FieldPtr& field = m.field();
  const Field& f = *field;
  const auto& gens = m.generators();
  std::vector<Matrix> transposes;
  for (const Matrix& g : gens) transposes.push_back(g.transpose());

  std::vector<Matrix> pool(gens.begin(), gens.end());
  for (std::size_t attempt = 0; attempt < kMaxAttempts; ++attempt) {
    if (!pool.empty() && pool.size() < kPoolSize) pool.push_back(pool[rng() % pool.size()] * pool[rng() % pool.size()]);
    Matrix a = f.random(rng) * Matrix::identity(field, d);
    for (const Matrix& p : pool) {
      const FieldElem c = f.random(rng);
      if (c.code != 0) a = a + c * p;
    }
    for (const PolyFactor& pf : factor_charpoly(a, rng())) {
      const Matrix fa = evaluate(pf.factor, a);
      const Matrix ker = nullspace(fa);
      const auto v = ker.row(0);
      const EchelonBasis sub = spin(field, {{v.begin(), v.end()}}, gens);
      if (sub.dim() < d) return sub.matrix();
      if (ker.rows() != static_cast<std::size_t>(pf.factor.degree())) continue;
      // Norton: the kernel is minimal, so M is simple iff some (any) kernel
      // vector of the transpose spins to everything under the transposes.
      const Matrix ker_t = nullspace(fa.transpose());
      const auto w = ker_t.row(0);
      const EchelonBasis dual = spin(field, {{w.begin(), w.end()}}, transposes);
      if (dual.dim() == d) return std::nullopt;
      return nullspace(dual.matrix());
    }
  }
  throw Error(ErrorKind::MeataxeFailure, "no decision after " + std::to_string(kMaxAttempts) + " random elements");
}

void collect_factors(const GModule& m, Rng& rng, std::vector<GModule>& out) {
  auto sub = find_submodule(m, rng);
  if (!sub) {
    out.push_back(m);
    return;
  }
  collect_factors(m.submodule(*sub), rng, out);
  collect_factors(m.quotient(*sub), rng, out);
}

std::vector<Constituent> deduplicate(std::vector<GModule> simples) {
  std::vector<Constituent> classes;
  std::vector<Fingerprint> prints;
  for (GModule& s : simples) {
    const Fingerprint fp = fingerprint(s);
    bool found = false;
    for (std::size_t i = 0; i < classes.size() && !found; ++i)
      if (prints[i] == fp && hom_dim(classes[i].module, s) > 0) {
        ++classes[i].multiplicity;
        found = true;
      }
    if (!found) {
      classes.push_back({std::move(s), 1});
      prints.push_back(fp);
    }
  }
  std::vector<std::size_t> order(classes.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return prints[a] < prints[b]; });
  std::vector<Constituent> sorted;
  for (std::size_t i : order) sorted.push_back(std::move(classes[i]));
  return sorted;
}

// dim of the socle from Hom(S, M) over the composition factors.
std::size_t socle_dim(const GModule& m, const std::vector<Constituent>& factors) {
  std::size_t total = 0;
  for (const auto& c : factors) {
    const std::size_t end = hom_dim(c.module, c.module);
    total += hom_dim(c.module, m) / end * c.module.dim();
  }
  return total;
}

}  // namespace

SimplicityVerdict is_simple(const GModule& m, std::uint64_t seed) {
  if (m.dim() == 0) throw Error(ErrorKind::DimensionMismatch, "the zero module is not simple");
  Rng rng(seed);
  auto sub = find_submodule(m, rng);
  if (!sub) return {true, Matrix()};
  return {false, *sub};
}

Fingerprint fingerprint(const GModule& m) {
  Fingerprint fp;
  fp.dim = m.dim();
  for (FieldElem t : m.trace_vector()) fp.traces.push_back(t.code);
  return fp;
}

std::vector<Constituent> composition_factors(const GModule& m, std::uint64_t seed) {
  check_cap(m);
  Rng rng(seed);
  std::vector<GModule> simples;
  if (m.dim() > 0) collect_factors(m, rng, simples);
  return deduplicate(std::move(simples));
}

std::vector<std::size_t> SimpleList::dims() const {
  std::vector<std::size_t> d;
  for (const auto& e : entries) d.push_back(e.module.dim());
  return d;
}

std::optional<std::size_t> SimpleList::find(const GModule& s) const {
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (simple_isomorphic(entries[i].module, s)) return i;
  return std::nullopt;
}

namespace {

SimpleList make_list(std::vector<Constituent> entries) {
  SimpleList list;
  list.entries = std::move(entries);
  for (const auto& e : list.entries) list.fingerprints.push_back(fingerprint(e.module));
  return list;
}

}  // namespace

SimpleList simple_modules(const GroupPtr& group, const FieldPtr& field, std::uint64_t seed) {
  if (group->order() > kMeataxeDimCap)
    throw Error(ErrorKind::DimensionCap, "regular module of a group of order " + std::to_string(group->order()) +
                                             " exceeds the cap of " + std::to_string(kMeataxeDimCap));
  return make_list(composition_factors(GModule::regular(group, field), seed));
}

SimpleList simple_modules(const AlgebraPtr& algebra, std::uint64_t seed) {
  return make_list(composition_factors(GModule::regular(algebra), seed));
}

bool simple_isomorphic(const GModule& s, const GModule& t) {
  require_compatible(s, t);
  return s.dim() == t.dim() && fingerprint(s) == fingerprint(t) && hom_dim(s, t) > 0;
}

bool is_semisimple(const GModule& m, std::uint64_t seed) {
  if (m.dim() == 0) return true;
  return socle_dim(m, composition_factors(m, seed)) == m.dim();
}

std::vector<IsotypicComponent> isotypic_decomposition(const GModule& m, std::uint64_t seed) {
  std::vector<IsotypicComponent> out;
  std::size_t total = 0;
  for (const auto& c : composition_factors(m, seed)) {
    Matrix basis = image_span(hom_space(c.module, m), m.field(), m.dim());
    const auto mult = static_cast<unsigned>(basis.rows() / c.module.dim());
    total += basis.rows();
    if (mult > 0) out.push_back({c.module, mult, std::move(basis)});
  }
  if (total != m.dim()) throw Error(ErrorKind::NotSemisimple, "module is not semisimple");
  return out;
}

bool module_iso_test(const GModule& a, const GModule& b, std::uint64_t seed) {
  require_compatible(a, b);
  const auto fa = composition_factors(a, seed);
  const auto fb = composition_factors(b, seed);
  if (socle_dim(a, fa) != a.dim() || socle_dim(b, fb) != b.dim())
    throw Error(ErrorKind::NotSemisimple, "isomorphism test needs semisimple modules");
  if (a.dim() != b.dim() || fa.size() != fb.size()) return false;
  for (const auto& x : fa) {
    bool matched = false;
    for (const auto& y : fb)
      if (simple_isomorphic(x.module, y.module)) {
        matched = x.multiplicity == y.multiplicity;
        break;
      }
    if (!matched) return false;
  }
  return true;
}

std::vector<std::size_t> socle_classes(const GModule& m, const std::vector<Constituent>& factors) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < factors.size(); ++i)
    if (hom_dim(factors[i].module, m) > 0) out.push_back(i);
  return out;
}

std::vector<std::size_t> head_classes(const GModule& m, const std::vector<Constituent>& factors) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < factors.size(); ++i)
    if (hom_dim(m, factors[i].module) > 0) out.push_back(i);
  return out;
}

}  // namespace springerkit
