#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "springerkit/modrep/module.hpp"

namespace springerkit {

/// Modules above this dimension are refused with DimensionCap.
inline constexpr std::size_t kMeataxeDimCap = 64;

struct SimplicityVerdict {
  bool simple = false;
  /// Rows spanning a proper nonzero submodule when not simple.
  Matrix witness;
};

/// Holt-Rees meataxe with Norton's irreducibility criterion.
SimplicityVerdict is_simple(const GModule& m, std::uint64_t seed = 0);

struct Constituent {
  GModule module;
  unsigned multiplicity = 1;
};

/// (dimension, trace codes) used to order and pre-sort simple modules.
struct Fingerprint {
  std::size_t dim = 0;
  std::vector<std::uint32_t> traces;

  auto operator<=>(const Fingerprint&) const = default;
};

Fingerprint fingerprint(const GModule& m);

/// Composition factors up to isomorphism with multiplicities, sorted by
/// fingerprint.
std::vector<Constituent> composition_factors(const GModule& m, std::uint64_t seed = 0);

struct SimpleList {
  std::vector<Constituent> entries;
  std::vector<Fingerprint> fingerprints;

  std::size_t size() const noexcept { return entries.size(); }
  std::vector<std::size_t> dims() const;
  /// Index of the entry isomorphic to the simple module s.
  std::optional<std::size_t> find(const GModule& s) const;
};

/// All simple modules, found among the composition factors of the regular
/// module (so |G| or the algebra dimension must not exceed kMeataxeDimCap).
SimpleList simple_modules(const GroupPtr& group, const FieldPtr& field, std::uint64_t seed = 0);
SimpleList simple_modules(const AlgebraPtr& algebra, std::uint64_t seed = 0);

/// Simple modules isomorphic when fingerprints agree and a nonzero map exists.
bool simple_isomorphic(const GModule& s, const GModule& t);

/// Socle dimension (from Hom spaces out of each composition factor) equals dim M.
bool is_semisimple(const GModule& m, std::uint64_t seed = 0);

struct IsotypicComponent {
  GModule simple;
  unsigned multiplicity = 0;
  /// Rows spanning the component inside M.
  Matrix basis;
};

/// NotSemisimple unless M is semisimple.
std::vector<IsotypicComponent> isotypic_decomposition(const GModule& m, std::uint64_t seed = 0);

/// Isomorphism of semisimple modules (NotSemisimple otherwise).
bool module_iso_test(const GModule& a, const GModule& b, std::uint64_t seed = 0);

/// Simple submodule classes (socle constituents) and simple quotient classes
/// (head constituents), each as an index list into `factors`.
std::vector<std::size_t> socle_classes(const GModule& m, const std::vector<Constituent>& factors);
std::vector<std::size_t> head_classes(const GModule& m, const std::vector<Constituent>& factors);

}  // namespace springerkit
