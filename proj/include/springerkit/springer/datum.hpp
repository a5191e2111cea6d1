#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "springerkit/modrep/module.hpp"

namespace springerkit {

/// GF(p^k) as requested on a command line: "p" or "p,k".
struct FieldSpec {
  std::uint32_t p = 0;
  std::uint32_t k = 1;
};

/// ParseError unless the text is "p" or "p,k" with positive integers.
FieldSpec parse_field_spec(std::string_view text);

struct LocalSystem {
  std::string label;
  std::string module;
};

struct OrbitEntry {
  std::string label;
  std::string a_g_name;
  std::string a_g0_name;
  GroupPtr a_g;
  /// Normal in a_g.
  Subgroup a_g0;
  /// Labelled simple A_G-modules; unlabelled simples get generated labels.
  std::vector<LocalSystem> local_systems;
};

struct WeylExpectation {
  std::optional<std::size_t> order;
  std::optional<std::size_t> quotient_order;
  std::optional<std::vector<std::uint64_t>> abelian_invariants;
};

struct CuspidalTriple {
  std::string label;
  std::string a_n_name;
  std::string a_l_name;
  std::string module_name;
  GroupPtr a_n;
  /// Normal in a_n.
  Subgroup a_l;
  /// Over a_l.group().
  GModule v;
  std::optional<std::vector<std::string>> expected_series;
  std::optional<WeylExpectation> w_expected;
  std::string note;
};

struct GammaInput {
  std::string module_name;
  /// Over the orbit's a_g0.group().
  GModule v0;
  /// Expected pair labels, with repetition for multiplicity.
  std::optional<std::vector<std::string>> targets;
};

struct GammaEntry {
  std::string orbit;
  std::vector<GammaInput> inputs;
};

/// Component-group data for one group and one coefficient field.
///
/// Groups are named; a group of kind "subgroup" is also recorded as a
/// Subgroup of its parent, and modules over it live over its own group.
struct GeometricDatum {
  std::string name;
  std::string description;
  FieldPtr field;
  /// Key of the field_overrides entry that was applied, empty if none.
  std::string override_key;

  std::vector<std::string> group_names;
  std::map<std::string, GroupPtr> groups;
  std::map<std::string, Subgroup> subgroups;
  std::vector<std::string> module_names;
  std::map<std::string, GModule> modules;

  std::vector<OrbitEntry> orbits;
  std::vector<CuspidalTriple> triples;
  std::vector<GammaEntry> gamma;

  const GroupPtr& group(const std::string& name) const;
  const Subgroup& subgroup(const std::string& name) const;
  const GModule& module(const std::string& name) const;
  const OrbitEntry& orbit(const std::string& label) const;
  const CuspidalTriple& triple(const std::string& label) const;

  /// True when the characteristic divides no group order in the datum.
  bool surrogate_characteristic() const;
};

/// Parses a datum document. With `field`, the document's field is replaced and
/// the matching field_overrides entry ("p,k", else "p") is applied first.
/// ParseError for malformed JSON, ValidationError (with a path) otherwise.
GeometricDatum datum_parse(std::string_view text, std::optional<FieldSpec> field = {}, std::string name = {});
GeometricDatum datum_load(const std::filesystem::path& path, std::optional<FieldSpec> field = {});

}  // namespace springerkit
