#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "springerkit/clifford/clifford.hpp"
#include "springerkit/springer/datum.hpp"

namespace springerkit {

/// A simple A_G-module on an orbit. Labels come from the orbit's local
/// systems when one matches, otherwise "<orbit>:<index>".
struct Pair {
  std::string orbit;
  std::size_t index = 0;
  std::string label;
  GModule module;
  bool annotated = false;
};

std::vector<Pair> orbit_pairs(const GeometricDatum& d, const OrbitEntry& orbit, std::uint64_t seed = 0);
std::vector<Pair> enumerate_pairs(const GeometricDatum& d, std::uint64_t seed = 0);

struct WeylReport {
  std::string triple;
  /// Preimage of W in A_N.
  Subgroup stabilizer;
  std::size_t order = 0;
  std::size_t quotient_order = 0;
  std::optional<std::vector<std::uint64_t>> abelian_invariants;
  /// Images in A_N/A_L of the elements of W.
  std::vector<Elem> elements;
};

/// W = Stab(V)/A_L inside A_N/A_L; ExpectationMismatch against W_expected.
WeylReport relative_weyl(const GeometricDatum& d, const std::string& triple, std::uint64_t seed = 0);

struct SeriesReport {
  std::string triple;
  WeylReport weyl;
  std::size_t end_dim = 0;
  std::size_t series_size = 0;
  std::vector<std::size_t> end_dims;
  std::vector<std::size_t> piece_dims;
  CocycleVerdict cocycle;
  std::optional<std::vector<std::string>> members;
  /// Simple classes in the socle of Ind_{A_L}^{A_N} V, counted separately.
  std::size_t head_socle_count = 0;
  std::vector<std::string> problems;
};

SeriesReport series_size(const GeometricDatum& d, const std::string& triple, std::uint64_t seed = 0);

struct GammaTerm {
  std::string label;
  std::size_t dim = 0;
  std::size_t multiplicity = 0;
};

struct GammaReport {
  std::string orbit;
  std::size_t induced_dim = 0;
  std::size_t index = 0;
  std::vector<GammaTerm> terms;
  /// Characteristic divides [A_G : A_G0].
  bool modular_index = false;
  bool semisimple = false;
};

/// Composition factors of Ind_{A_G0}^{A_G} V0 as pair labels.
GammaReport gamma_decompose(const GeometricDatum& d, const std::string& orbit, const GModule& v0,
                            std::uint64_t seed = 0);

struct PartitionReport {
  std::size_t total_pairs = 0;
  std::vector<std::pair<std::string, std::size_t>> sizes;
  std::size_t sum = 0;
  bool covered = false;
  /// Every triple carries expected_series.
  bool annotated = false;
  bool disjoint = true;
  bool exact = true;
  std::vector<std::string> repeated;
  std::vector<std::string> missing;
  std::vector<std::string> unknown;
};

PartitionReport partition_check(const GeometricDatum& d, std::uint64_t seed = 0);

}  // namespace springerkit
