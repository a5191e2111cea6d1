#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "springerkit/modrep/meataxe.hpp"

namespace springerkit {

/// Ind_K^H(V) on the basis s_i (x) v, where s_i runs over coset_reps(H, K).
/// Block i occupies coordinates [i * base_dim, (i + 1) * base_dim).
struct InducedModule {
  GModule total;
  std::vector<Elem> reps;
  std::size_t base_dim = 0;
};

/// V must be a module over k.group(); the result lives over k.parent().
InducedModule induce(const Subgroup& k, const GModule& v);

/// V over k.parent(), restricted to a module over k.group().
GModule restrict(const Subgroup& k, const GModule& v);

/// ^gV over n.group(): n acts as g^-1 n g does on V (NotNormal unless n is normal).
GModule twist(Elem g, const Subgroup& n, const GModule& v);

/// The same matrices read as a module over gLg^-1 (see Subgroup::conjugate).
GModule conjugate_module(Elem g, const Subgroup& l, const GModule& v);

/// Full preimage in H of {hN : ^hV = V}; V simple over n.group() (NotSimple otherwise).
Subgroup stabilizer(const Subgroup& n, const GModule& v, std::uint64_t seed = 0);

struct CliffordReport {
  bool semisimple = false;
  /// Simple N-modules occurring in Res V, with multiplicities.
  std::vector<Constituent> constituents;
  /// Coset representatives of H/N and, for each, the permutation it induces on
  /// constituents by twisting.
  std::vector<Elem> reps;
  std::vector<std::vector<std::size_t>> action;
  bool transitive = false;
  bool equal_multiplicities = false;
};

/// Res_N(V) for a simple H-module V.
CliffordReport clifford_restriction_report(const Subgroup& n, const GModule& v, std::uint64_t seed = 0);

struct HeadSocle {
  InducedModule induced;
  std::vector<Constituent> factors;
  std::vector<std::size_t> socle;  // indices into factors
  std::vector<std::size_t> head;
  bool agree = false;
  /// Every module in the common set restricts to something containing V.
  bool restrictions_contain_v = false;

  /// The common simple modules (meaningful when agree).
  std::vector<GModule> common() const;
};

HeadSocle head_socle_sets(const Subgroup& n, const GModule& v, std::uint64_t seed = 0);

/// End_H(Ind_N^H V), computed as End_K(Ind_N^K V) for K the stabilizer, with
/// its grading by W = K/N. Basis element i is an endomorphism of Ind_N^K V
/// sending the identity block into the block of a coset sN; it has degree (sN)^-1.
struct GradedEndAlgebra {
  AlgebraPtr algebra;
  Subgroup stabilizer;
  /// N as a normal subgroup of stabilizer.group().
  Subgroup normal;
  Quotient weyl;
  InducedModule induced;
  std::vector<Matrix> endomorphisms;
  std::vector<Elem> degree;
  /// Basis indices of each graded piece, indexed by elements of weyl.group.
  std::vector<std::vector<std::size_t>> pieces;
  std::size_t degree_one_dim = 0;
};

GradedEndAlgebra induced_end_algebra(const Subgroup& n, const GModule& v, std::uint64_t seed = 0);

enum class CocycleStatus { Trivial, Nontrivial, Inconclusive };
std::string to_string(CocycleStatus s);

struct CocycleVerdict {
  CocycleStatus status = CocycleStatus::Inconclusive;
  std::vector<std::size_t> end_dims;
  std::vector<std::size_t> group_algebra_dims;
  /// Coordinates of u_w for each w in W, when a multiplicative section was found.
  std::optional<std::vector<std::vector<FieldElem>>> section;
  std::string reason;
};

CocycleVerdict cocycle_verdict(const GradedEndAlgebra& e, std::uint64_t seed = 0);

struct MackeyTerm {
  Elem rep = 0;
  /// K intersected with gLg^-1.
  Subgroup intersection;
  /// Ind_{K and gLg^-1}^K of the twisted, restricted module; over k.group().
  GModule module;
};

struct MackeyResult {
  std::vector<MackeyTerm> terms;
  GModule restricted_induced;
  bool dims_match = false;
  /// Isomorphism when both sides are semisimple, matching composition
  /// factors otherwise.
  bool modules_match = false;
  bool semisimple = false;
};

/// Res_K Ind_L^H V against the sum over K\H/L; V over l.group().
MackeyResult mackey_terms(const Subgroup& k, const Subgroup& l, const GModule& v, std::uint64_t seed = 0);

/// Composition factors of a and b agree class by class.
bool same_composition_factors(const std::vector<Constituent>& a, const std::vector<Constituent>& b);

}  // namespace springerkit
