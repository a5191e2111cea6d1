#include "springerkit/springer/datum.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "springerkit/error.hpp"
#include "springerkit/modrep/meataxe.hpp"

namespace springerkit {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void invalid(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::ValidationError, path + ": " + what);
}

const Json& member(const Json& obj, const std::string& key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) invalid(path, "missing key \"" + key + "\"");
  return *it;
}

std::string get_string(const Json& obj, const std::string& key, const std::string& path) {
  const Json& v = member(obj, key, path);
  if (!v.is_string()) invalid(path + "." + key, "expected a string");
  return v.get<std::string>();
}

std::uint64_t get_uint(const Json& v, const std::string& path) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) invalid(path, "expected a non-negative integer");
  return v.get<std::uint64_t>();
}

void require_object(const Json& v, const std::string& path) {
  if (!v.is_object()) invalid(path, "expected an object");
}

void require_array(const Json& v, const std::string& path) {
  if (!v.is_array()) invalid(path, "expected an array");
}

void allow_keys(const Json& obj, std::initializer_list<const char*> keys, const std::string& path) {
  for (const auto& [k, _] : obj.items())
    if (std::none_of(keys.begin(), keys.end(), [&](const char* a) { return k == a; }))
      invalid(path, "unknown key \"" + k + "\"");
}

std::vector<std::string> string_list(const Json& v, const std::string& path) {
  require_array(v, path);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_string()) invalid(path + "[" + std::to_string(i) + "]", "expected a string");
    out.push_back(v[i].get<std::string>());
  }
  return out;
}

FieldElem parse_elem(const Field& f, const Json& v, const std::string& path) {
  if (v.is_number_integer()) return f.from_int(v.get<std::int64_t>());
  if (v.is_array()) {
    if (v.size() != f.degree())
      invalid(path, "element has " + std::to_string(v.size()) + " coefficients, field degree is " +
                        std::to_string(f.degree()));
    std::vector<std::int64_t> c;
    for (const auto& x : v) {
      if (!x.is_number_integer()) invalid(path, "coefficients must be integers");
      c.push_back(x.get<std::int64_t>());
    }
    return f.from_coeffs(c);
  }
  invalid(path, "expected an integer or a coefficient array");
}

Matrix parse_matrix(const FieldPtr& f, const Json& v, const std::string& path) {
  require_array(v, path);
  const std::size_t rows = v.size();
  if (rows == 0) invalid(path, "empty matrix");
  for (std::size_t r = 0; r < rows; ++r) {
    require_array(v[r], path + "[" + std::to_string(r) + "]");
    if (v[r].size() != rows) invalid(path, "matrix must be square");
  }
  Matrix m(f, rows, rows);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < rows; ++c)
      m(r, c) = parse_elem(*f, v[r][c], path + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
  return m;
}

std::vector<std::uint32_t> parse_perm(const Json& v, const std::string& path) {
  require_array(v, path);
  std::vector<std::uint32_t> p;
  for (const auto& x : v) p.push_back(static_cast<std::uint32_t>(get_uint(x, path)));
  return p;
}

class Loader {
 public:
  Loader(GeometricDatum& d) : d_(d) {}

  void groups(const Json& v) {
    require_object(v, "groups");
    for (const auto& [name, entry] : v.items()) {
      const std::string path = "groups." + name;
      require_object(entry, path);
      const std::string kind = get_string(entry, "kind", path);
      try {
        if (kind == "permutation") {
          allow_keys(entry, {"kind", "degree", "generators", "note"}, path);
          const auto degree = get_uint(member(entry, "degree", path), path + ".degree");
          const Json& gens = member(entry, "generators", path);
          require_array(gens, path + ".generators");
          std::vector<std::vector<std::uint32_t>> perms;
          for (std::size_t i = 0; i < gens.size(); ++i)
            perms.push_back(parse_perm(gens[i], path + ".generators[" + std::to_string(i) + "]"));
          add_group(name, FiniteGroup::from_permutations(degree, perms));
        } else if (kind == "table") {
          allow_keys(entry, {"kind", "table", "generators", "note"}, path);
          const Json& t = member(entry, "table", path);
          require_array(t, path + ".table");
          std::vector<std::vector<std::uint32_t>> table;
          for (std::size_t i = 0; i < t.size(); ++i) table.push_back(parse_perm(t[i], path + ".table"));
          std::optional<std::vector<Elem>> gens;
          if (entry.contains("generators")) {
            gens.emplace();
            for (const auto& x : entry["generators"]) gens->push_back(static_cast<Elem>(get_uint(x, path)));
          }
          add_group(name, FiniteGroup::from_table(table, gens));
        } else if (kind == "subgroup") {
          allow_keys(entry, {"kind", "of", "generators", "note"}, path);
          const std::string of = get_string(entry, "of", path);
          if (!d_.groups.contains(of) || d_.subgroups.contains(of))
            invalid(path + ".of", "\"" + of + "\" is not an earlier group of kind permutation or table");
          const GroupPtr& parent = d_.groups.at(of);
          const Json& gens = member(entry, "generators", path);
          require_array(gens, path + ".generators");
          std::vector<Elem> elems;
          for (std::size_t i = 0; i < gens.size(); ++i) {
            const std::string gp = path + ".generators[" + std::to_string(i) + "]";
            if (gens[i].is_array()) {
              auto e = parent->find_permutation(parse_perm(gens[i], gp));
              if (!e) invalid(gp, "not an element of " + of);
              elems.push_back(*e);
            } else {
              const auto e = get_uint(gens[i], gp);
              if (e >= parent->order()) invalid(gp, "element index out of range");
              elems.push_back(static_cast<Elem>(e));
            }
          }
          auto s = Subgroup::make(parent, std::move(elems));
          d_.subgroups.emplace(name, s);
          add_group(name, s.group());
        } else {
          invalid(path + ".kind", "expected permutation, table or subgroup");
        }
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::ValidationError) throw;
        invalid(path, e.what());
      }
    }
  }

  void modules(const Json& v) {
    require_object(v, "modules");
    for (const auto& [name, entry] : v.items()) {
      const std::string path = "modules." + name;
      require_object(entry, path);
      allow_keys(entry, {"group", "generator_images", "trivial", "note"}, path);
      const std::string gname = get_string(entry, "group", path);
      if (!d_.groups.contains(gname)) invalid(path + ".group", "unknown group \"" + gname + "\"");
      const GroupPtr& g = d_.groups.at(gname);
      GModule m;
      if (entry.contains("trivial") && entry["trivial"] == true) {
        m = GModule::trivial(g, d_.field);
      } else {
        const Json& images = member(entry, "generator_images", path);
        require_array(images, path + ".generator_images");
        if (images.size() != g->generators().size())
          invalid(path + ".generator_images", "expected " + std::to_string(g->generators().size()) + " matrices for " +
                                        gname + ", got " + std::to_string(images.size()));
        std::vector<Matrix> mats;
        for (std::size_t i = 0; i < images.size(); ++i)
          mats.push_back(parse_matrix(d_.field, images[i], path + ".generator_images[" + std::to_string(i) + "]"));
        try {
          m = GModule::make(g, d_.field, std::move(mats));
        } catch (const Error& e) {
          invalid(path, std::string(e.what()) + " over " + d_.field->describe());
        }
      }
      d_.module_names.push_back(name);
      d_.modules.emplace(name, std::move(m));
    }
  }

  void orbits(const Json& v) {
    require_array(v, "orbits");
    std::set<std::string> labels;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const std::string path = "orbits[" + std::to_string(i) + "]";
      const Json& o = v[i];
      require_object(o, path);
      allow_keys(o, {"label", "A_G", "A_G0", "local_systems", "note"}, path);
      OrbitEntry e;
      e.label = get_string(o, "label", path);
      if (!labels.insert(e.label).second) invalid(path + ".label", "duplicate orbit label");
      e.a_g_name = get_string(o, "A_G", path);
      e.a_g0_name = get_string(o, "A_G0", path);
      e.a_g = group_ref(e.a_g_name, path + ".A_G");
      e.a_g0 = normal_ref(e.a_g0_name, e.a_g, path + ".A_G0", e.a_g_name);
      if (o.contains("local_systems")) {
        const Json& ls = o["local_systems"];
        require_array(ls, path + ".local_systems");
        std::vector<const GModule*> seen;
        for (std::size_t j = 0; j < ls.size(); ++j) {
          const std::string lp = path + ".local_systems[" + std::to_string(j) + "]";
          require_object(ls[j], lp);
          allow_keys(ls[j], {"label", "module"}, lp);
          LocalSystem s{get_string(ls[j], "label", lp), get_string(ls[j], "module", lp)};
          const GModule& m = module_over(s.module, e.a_g, lp + ".module", e.a_g_name);
          if (!is_simple(m).simple) invalid(lp + ".module", "local system module is not simple");
          for (const GModule* prev : seen)
            if (simple_isomorphic(*prev, m)) invalid(lp + ".module", "isomorphic to an earlier local system");
          seen.push_back(&m);
          e.local_systems.push_back(std::move(s));
        }
      }
      d_.orbits.push_back(std::move(e));
    }
  }

  void triples(const Json& v) {
    require_array(v, "cuspidal_triples");
    std::set<std::string> labels;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const std::string path = "cuspidal_triples[" + std::to_string(i) + "]";
      const Json& t = v[i];
      require_object(t, path);
      allow_keys(t, {"label", "A_N", "A_L", "module", "expected_series", "W_expected", "note"}, path);
      CuspidalTriple c;
      c.label = get_string(t, "label", path);
      if (!labels.insert(c.label).second) invalid(path + ".label", "duplicate triple label");
      c.a_n_name = get_string(t, "A_N", path);
      c.a_l_name = get_string(t, "A_L", path);
      c.module_name = get_string(t, "module", path);
      c.a_n = group_ref(c.a_n_name, path + ".A_N");
      c.a_l = normal_ref(c.a_l_name, c.a_n, path + ".A_L", c.a_n_name);
      c.v = module_over(c.module_name, c.a_l.group(), path + ".module", c.a_l_name);
      if (t.contains("expected_series")) c.expected_series = string_list(t["expected_series"], path + ".expected_series");
      if (t.contains("W_expected")) {
        const Json& w = t["W_expected"];
        const std::string wp = path + ".W_expected";
        require_object(w, wp);
        allow_keys(w, {"order", "quotient_order", "abelian_invariants"}, wp);
        WeylExpectation x;
        if (w.contains("order")) x.order = get_uint(w["order"], wp + ".order");
        if (w.contains("quotient_order")) x.quotient_order = get_uint(w["quotient_order"], wp + ".quotient_order");
        if (w.contains("abelian_invariants")) {
          require_array(w["abelian_invariants"], wp + ".abelian_invariants");
          x.abelian_invariants.emplace();
          for (const auto& n : w["abelian_invariants"]) x.abelian_invariants->push_back(get_uint(n, wp));
        }
        c.w_expected = x;
      }
      if (t.contains("note")) {
        if (!t["note"].is_string()) invalid(path + ".note", "expected a string");
        c.note = t["note"].get<std::string>();
      }
      d_.triples.push_back(std::move(c));
    }
  }

  void gamma(const Json& v) {
    require_array(v, "gamma");
    for (std::size_t i = 0; i < v.size(); ++i) {
      const std::string path = "gamma[" + std::to_string(i) + "]";
      const Json& g = v[i];
      require_object(g, path);
      allow_keys(g, {"orbit", "modules", "note"}, path);
      GammaEntry e;
      e.orbit = get_string(g, "orbit", path);
      auto it = std::find_if(d_.orbits.begin(), d_.orbits.end(), [&](const OrbitEntry& o) { return o.label == e.orbit; });
      if (it == d_.orbits.end()) invalid(path + ".orbit", "unknown orbit \"" + e.orbit + "\"");
      const Json& mods = member(g, "modules", path);
      require_array(mods, path + ".modules");
      for (std::size_t j = 0; j < mods.size(); ++j) {
        const std::string mp = path + ".modules[" + std::to_string(j) + "]";
        require_object(mods[j], mp);
        allow_keys(mods[j], {"module", "targets"}, mp);
        GammaInput in;
        in.module_name = get_string(mods[j], "module", mp);
        in.v0 = module_over(in.module_name, it->a_g0.group(), mp + ".module", it->a_g0_name);
        if (mods[j].contains("targets")) in.targets = string_list(mods[j]["targets"], mp + ".targets");
        e.inputs.push_back(std::move(in));
      }
      d_.gamma.push_back(std::move(e));
    }
  }

 private:
  void add_group(const std::string& name, GroupPtr g) {
    if (d_.groups.contains(name)) invalid("groups." + name, "duplicate group name");
    d_.group_names.push_back(name);
    d_.groups.emplace(name, std::move(g));
  }

  const GroupPtr& group_ref(const std::string& name, const std::string& path) {
    auto it = d_.groups.find(name);
    if (it == d_.groups.end()) invalid(path, "unknown group \"" + name + "\"");
    return it->second;
  }

  Subgroup normal_ref(const std::string& name, const GroupPtr& parent, const std::string& path,
                      const std::string& parent_name) {
    auto it = d_.subgroups.find(name);
    if (it == d_.subgroups.end()) invalid(path, "\"" + name + "\" is not a group of kind subgroup");
    const Subgroup& s = it->second;
    Subgroup out;
    if (s.parent() == parent) {
      out = s;
    } else {
      // A subgroup of a subgroup: pull it back through the embedding.
      auto outer = d_.subgroups.find(parent_name);
      if (outer == d_.subgroups.end() || s.parent() != outer->second.parent())
        invalid(path, "\"" + name + "\" is not a subgroup of \"" + parent_name + "\"");
      for (Elem x : s.members())
        if (!outer->second.contains(x)) invalid(path, "\"" + name + "\" is not contained in \"" + parent_name + "\"");
      out = relative_to(s, outer->second);
    }
    if (!out.is_normal()) invalid(path, "\"" + name + "\" is not normal in \"" + parent_name + "\"");
    return out;
  }

  const GModule& module_over(const std::string& name, const GroupPtr& g, const std::string& path,
                             const std::string& group_name) {
    auto it = d_.modules.find(name);
    if (it == d_.modules.end()) invalid(path, "unknown module \"" + name + "\"");
    if (!it->second.group()->same_as(*g)) invalid(path, "module \"" + name + "\" is not over \"" + group_name + "\"");
    return it->second;
  }

  GeometricDatum& d_;
};

std::string override_key(std::uint32_t p, std::uint32_t k) {
  return std::to_string(p) + "," + std::to_string(k);
}

}  // namespace

FieldSpec parse_field_spec(std::string_view text) {
  FieldSpec s;
  auto bad = [&] { throw Error(ErrorKind::ParseError, "field must be given as p or p,k: \"" + std::string(text) + "\""); };
  const auto comma = text.find(',');
  auto num = [&](std::string_view part, std::uint32_t& out) {
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), out);
    if (ec != std::errc() || ptr != part.data() + part.size() || out == 0) bad();
  };
  std::uint32_t first = 0, second = 0;
  num(text.substr(0, comma), first);
  if (comma != std::string_view::npos) num(text.substr(comma + 1), second);
  if (first < 2 || is_prime(first)) {
    s.p = first;
    if (second) s.k = second;
    return s;
  }
  // A prime power q is read as GF(q); a second number must then be its
  // characteristic or its degree.
  auto primes = prime_factors(first);
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  if (primes.size() != 1) return s.p = first, s;
  s.p = static_cast<std::uint32_t>(primes[0]);
  s.k = 0;
  for (std::uint64_t q = first; q > 1; q /= s.p) ++s.k;
  if (second && second != s.p && second != s.k) bad();
  return s;
}

const GroupPtr& GeometricDatum::group(const std::string& n) const {
  auto it = groups.find(n);
  if (it == groups.end()) throw Error(ErrorKind::ValidationError, "unknown group \"" + n + "\"");
  return it->second;
}

const Subgroup& GeometricDatum::subgroup(const std::string& n) const {
  auto it = subgroups.find(n);
  if (it == subgroups.end()) throw Error(ErrorKind::ValidationError, "\"" + n + "\" is not a group of kind subgroup");
  return it->second;
}

const GModule& GeometricDatum::module(const std::string& n) const {
  auto it = modules.find(n);
  if (it == modules.end()) throw Error(ErrorKind::ValidationError, "unknown module \"" + n + "\"");
  return it->second;
}

const OrbitEntry& GeometricDatum::orbit(const std::string& label) const {
  for (const auto& o : orbits)
    if (o.label == label) return o;
  throw Error(ErrorKind::ValidationError, "unknown orbit \"" + label + "\"");
}

const CuspidalTriple& GeometricDatum::triple(const std::string& label) const {
  for (const auto& t : triples)
    if (t.label == label) return t;
  throw Error(ErrorKind::ValidationError, "unknown cuspidal triple \"" + label + "\"");
}

bool GeometricDatum::surrogate_characteristic() const {
  const auto p = field->characteristic();
  return std::all_of(groups.begin(), groups.end(), [&](const auto& g) { return g.second->order() % p != 0; });
}

GeometricDatum datum_parse(std::string_view text, std::optional<FieldSpec> field, std::string name) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  require_object(doc, "datum");
  allow_keys(doc, {"springerkit_datum", "name", "description", "notes", "field", "groups", "modules", "orbits",
                   "cuspidal_triples", "gamma", "field_overrides"},
             "datum");
  if (!doc.contains("springerkit_datum") || doc["springerkit_datum"] != 1)
    invalid("springerkit_datum", "expected schema version 1");

  GeometricDatum d;
  d.name = doc.contains("name") && doc["name"].is_string() ? doc["name"].get<std::string>() : std::move(name);

  FieldSpec fs;
  if (field) {
    fs = *field;
  } else {
    const Json& f = member(doc, "field", "datum");
    require_object(f, "field");
    allow_keys(f, {"p", "k"}, "field");
    fs.p = static_cast<std::uint32_t>(get_uint(member(f, "p", "field"), "field.p"));
    if (f.contains("k")) fs.k = static_cast<std::uint32_t>(get_uint(f["k"], "field.k"));
  }
  try {
    d.field = Field::make(fs.p, fs.k);
  } catch (const Error& e) {
    invalid("field", e.what());
  }

  if (doc.contains("field_overrides")) {
    const Json& ov = doc["field_overrides"];
    require_object(ov, "field_overrides");
    for (const std::string& key : {override_key(fs.p, fs.k), std::to_string(fs.p)}) {
      if (!ov.contains(key)) continue;
      const Json& patch = ov[key];
      const std::string path = "field_overrides." + key;
      require_object(patch, path);
      allow_keys(patch, {"description", "notes", "groups", "modules", "orbits", "cuspidal_triples", "gamma"}, path);
      for (const auto& [k, v] : patch.items()) doc[k] = v;
      d.override_key = key;
      break;
    }
  }
  if (doc.contains("description") && doc["description"].is_string())
    d.description = doc["description"].get<std::string>();

  Loader load(d);
  load.groups(member(doc, "groups", "datum"));
  load.modules(doc.contains("modules") ? doc["modules"] : Json::object());
  load.orbits(doc.contains("orbits") ? doc["orbits"] : Json::array());
  load.triples(doc.contains("cuspidal_triples") ? doc["cuspidal_triples"] : Json::array());
  load.gamma(doc.contains("gamma") ? doc["gamma"] : Json::array());
  return d;
}

GeometricDatum datum_load(const std::filesystem::path& path, std::optional<FieldSpec> field) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return datum_parse(buf.str(), field, path.stem().string());
}

}  // namespace springerkit
