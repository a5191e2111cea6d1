#include "springerkit/cli/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "springerkit/error.hpp"
#include "springerkit/springer/springer.hpp"

namespace springerkit::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string datum;
  std::string field;
  std::uint64_t seed = 0;
  std::string format = "text";
  std::string group, subgroup, module, triple, left, right, orbit;
};

struct Outcome {
  Json result = Json::object();
  std::ostringstream text;
  std::vector<std::string> notes;
  std::vector<std::string> failures;
};

const char* kSurrogateHelp =
    "Characteristic zero is modelled by a surrogate prime p that divides no group order in the datum; when "
    "p^k = 1 modulo every group exponent the field splits all groups and decomposition counts agree with "
    "characteristic zero. Reports say when this regime applies.";

const char* kTripleCaveat =
    "cuspidal triples are input data, one per equivalence class, each taken as its own Fourier partner; "
    "series labels are annotations checked for consistency, not derived";

std::string join(const auto& items, const char* sep = " ") {
  std::ostringstream s;
  bool first = true;
  for (const auto& x : items) {
    if (!first) s << sep;
    s << x;
    first = false;
  }
  return s.str();
}

const std::string& group_name(const GeometricDatum& d, const GroupPtr& g) {
  for (const auto& n : d.group_names)
    if (d.groups.at(n) == g) return n;
  throw Error(ErrorKind::ValidationError, "group not named in the datum");
}

/// Local-system label of a simple module over an orbit's A_G, if annotated.
std::string label_for(const GeometricDatum& d, const GModule& s) {
  for (const auto& o : d.orbits) {
    if (o.a_g != s.group()) continue;
    for (const auto& ls : o.local_systems)
      if (simple_isomorphic(d.module(ls.module), s)) return ls.label;
  }
  return "";
}

Json factors_json(const GeometricDatum& d, const std::vector<Constituent>& factors) {
  Json out = Json::array();
  for (const auto& f : factors) {
    Json j{{"dim", f.module.dim()}, {"multiplicity", f.multiplicity}};
    if (f.module.over_group())
      if (auto l = label_for(d, f.module); !l.empty()) j["label"] = l;
    out.push_back(std::move(j));
  }
  return out;
}

void factors_text(std::ostream& os, const Json& factors) {
  for (const auto& f : factors) {
    os << "  dim " << f["dim"].get<std::size_t>() << "  x" << f["multiplicity"].get<std::size_t>();
    if (f.contains("label")) os << "  " << f["label"].get<std::string>();
    os << "\n";
  }
}

Json invariants_json(const std::optional<std::vector<std::uint64_t>>& inv) {
  return inv ? Json(*inv) : Json(nullptr);
}

std::string invariants_text(const std::optional<std::vector<std::uint64_t>>& inv) {
  if (!inv) return "non-abelian";
  if (inv->empty()) return "trivial";
  return "Z/" + join(*inv, " x Z/");
}

Json cocycle_json(const CocycleVerdict& v) {
  return {{"status", to_string(v.status)},
          {"end_dims", v.end_dims},
          {"group_algebra_dims", v.group_algebra_dims},
          {"section_found", v.section.has_value()},
          {"reason", v.reason}};
}

// Subcommands.

void cmd_irreps(const GeometricDatum& d, const Options& o, Outcome& r) {
  std::vector<std::string> names = o.group.empty() ? d.group_names : std::vector<std::string>{o.group};
  Json groups = Json::array();
  for (const auto& name : names) {
    const GroupPtr& g = d.group(name);
    const auto simples = simple_modules(g, d.field, o.seed);
    Json rows = Json::array();
    for (std::size_t i = 0; i < simples.size(); ++i) {
      Json row{{"index", i}, {"dim", simples.entries[i].module.dim()}};
      if (auto l = label_for(d, simples.entries[i].module); !l.empty()) row["label"] = l;
      rows.push_back(std::move(row));
    }
    r.text << "group " << name << ", order " << g->order() << ": " << simples.size() << " simple modules, dims "
           << join(simples.dims()) << "\n";
    for (const auto& row : rows) {
      r.text << "  " << row["index"].get<std::size_t>() << "  dim " << row["dim"].get<std::size_t>();
      if (row.contains("label")) r.text << "  " << row["label"].get<std::string>();
      r.text << "\n";
    }
    groups.push_back(
        {{"name", name}, {"order", g->order()}, {"count", simples.size()}, {"dims", simples.dims()}, {"simples", rows}});
  }
  r.result["groups"] = std::move(groups);
}

void cmd_induce(const GeometricDatum& d, const Options& o, Outcome& r) {
  const Subgroup& s = d.subgroup(o.subgroup);
  const auto ind = induce(s, d.module(o.module));
  const auto factors = composition_factors(ind.total, o.seed);
  const bool ss = is_semisimple(ind.total, o.seed);
  const auto& parent = group_name(d, s.parent());
  Json fj = factors_json(d, factors);
  r.result = {{"subgroup", o.subgroup},   {"parent", parent},           {"index", s.index()},
              {"module", o.module},       {"module_dim", ind.base_dim}, {"induced_dim", ind.total.dim()},
              {"semisimple", ss},         {"factors", fj}};
  r.text << "Ind from " << o.subgroup << " to " << parent << " of " << o.module << " (index " << s.index()
         << "): dim " << ind.total.dim() << ", " << (ss ? "semisimple" : "not semisimple") << "\n";
  r.text << "composition factors:\n";
  factors_text(r.text, fj);
}

void cmd_clifford(const GeometricDatum& d, const Options& o, Outcome& r) {
  const Subgroup& n = d.subgroup(o.subgroup);
  if (!n.is_normal()) throw Error(ErrorKind::NotNormal, o.subgroup + " is not normal in its parent");
  const GModule& v = d.module(o.module);
  const auto& parent = group_name(d, n.parent());
  r.result = {{"subgroup", o.subgroup}, {"parent", parent}, {"module", o.module}};
  if (v.group()->same_as(*n.group())) {
    const auto k = stabilizer(n, v, o.seed);
    const auto hs = head_socle_sets(n, v, o.seed);
    std::vector<std::size_t> dims;
    for (std::size_t i : hs.socle) dims.push_back(hs.factors[i].module.dim());
    r.result["mode"] = "induction";
    r.result["stabilizer_order"] = k.order();
    r.result["w_order"] = k.order() / n.order();
    r.result["quotient_order"] = n.index();
    r.result["induced_dim"] = hs.induced.total.dim();
    r.result["head_socle"] = {{"agree", hs.agree},
                              {"count", hs.socle.size()},
                              {"dims", dims},
                              {"restrictions_contain_v", hs.restrictions_contain_v}};
    r.text << "stabilizer of " << o.module << " in " << parent << ": order " << k.order() << ", W order "
           << k.order() / n.order() << " of " << n.index() << "\n";
    r.text << "Ind to " << parent << ": dim " << hs.induced.total.dim() << "; head and socle "
           << (hs.agree ? "agree" : "differ") << ", " << hs.socle.size() << " classes, dims " << join(dims) << "\n";
    if (!hs.agree) r.failures.push_back("head and socle constituents differ");
    if (!hs.restrictions_contain_v) r.failures.push_back("a socle constituent does not restrict onto the module");
  } else {
    const auto rep = clifford_restriction_report(n, v, o.seed);
    Json cj = Json::array();
    for (const auto& c : rep.constituents) cj.push_back({{"dim", c.module.dim()}, {"multiplicity", c.multiplicity}});
    r.result["mode"] = "restriction";
    r.result["semisimple"] = rep.semisimple;
    r.result["constituents"] = cj;
    r.result["transitive"] = rep.transitive;
    r.result["equal_multiplicities"] = rep.equal_multiplicities;
    r.text << "Res to " << o.subgroup << " of " << o.module << ": " << (rep.semisimple ? "semisimple" : "not semisimple")
           << ", " << rep.constituents.size() << " conjugate constituents\n";
    factors_text(r.text, cj);
    r.text << "conjugation action " << (rep.transitive ? "transitive" : "not transitive") << ", multiplicities "
           << (rep.equal_multiplicities ? "equal" : "unequal") << "\n";
    if (!rep.semisimple || !rep.transitive || !rep.equal_multiplicities)
      r.failures.push_back("restriction of a simple module is not a single conjugacy orbit");
  }
}

void cmd_endalg(const GeometricDatum& d, const Options& o, Outcome& r) {
  Subgroup n;
  GModule v;
  std::string what;
  if (!o.triple.empty()) {
    const auto& t = d.triple(o.triple);
    n = t.a_l;
    v = t.v;
    what = "triple " + o.triple;
  } else {
    if (o.subgroup.empty() || o.module.empty())
      throw CLI::ValidationError("endalg needs --triple, or --subgroup with --module");
    n = d.subgroup(o.subgroup);
    v = d.module(o.module);
    what = o.module + " over " + o.subgroup;
  }
  const auto e = induced_end_algebra(n, v, o.seed);
  auto dims = simple_modules(e.algebra, o.seed).dims();
  std::sort(dims.begin(), dims.end());
  std::vector<std::size_t> pieces;
  for (const auto& p : e.pieces) pieces.push_back(p.size());
  const auto verdict = cocycle_verdict(e, o.seed);
  r.result = {{"source", what},
              {"dim", e.algebra->dim()},
              {"stabilizer_order", e.stabilizer.order()},
              {"w_order", e.weyl.group->order()},
              {"w_invariants", invariants_json(e.weyl.group->abelian_invariants())},
              {"pieces", pieces},
              {"degree_one_dim", e.degree_one_dim},
              {"simple_dims", dims},
              {"cocycle", cocycle_json(verdict)}};
  r.text << "End of the induced module for " << what << ": dim " << e.algebra->dim() << "\n";
  r.text << "grading by W of order " << e.weyl.group->order() << " (" << invariants_text(e.weyl.group->abelian_invariants())
         << "), piece dims " << join(pieces) << "\n";
  r.text << "simple modules: " << dims.size() << ", dims " << join(dims) << "\n";
  r.text << "cocycle: " << to_string(verdict.status) << " (" << verdict.reason << ")\n";
}

void cmd_mackey(const GeometricDatum& d, const Options& o, Outcome& r) {
  const Subgroup& k = d.subgroup(o.left);
  const Subgroup& l = d.subgroup(o.right);
  if (k.parent() != l.parent()) throw Error(ErrorKind::SubgroupMismatch, o.left + " and " + o.right + " have different parents");
  const auto m = mackey_terms(k, l, d.module(o.module), o.seed);
  Json terms = Json::array();
  std::vector<std::size_t> dims;
  for (const auto& t : m.terms) {
    terms.push_back({{"rep", t.rep}, {"intersection_order", t.intersection.order()}, {"dim", t.module.dim()}});
    dims.push_back(t.module.dim());
  }
  r.result = {{"left", o.left},
              {"right", o.right},
              {"module", o.module},
              {"double_cosets", m.terms.size()},
              {"terms", terms},
              {"restricted_induced_dim", m.restricted_induced.dim()},
              {"dims_match", m.dims_match},
              {"modules_match", m.modules_match},
              {"semisimple", m.semisimple}};
  r.text << "Res to " << o.left << " of Ind from " << o.right << " of " << o.module << ": dim "
         << m.restricted_induced.dim() << "\n";
  r.text << m.terms.size() << " double cosets, term dims " << join(dims, " + ") << "\n";
  for (const auto& t : terms)
    r.text << "  rep " << t["rep"].get<Elem>() << "  intersection order " << t["intersection_order"].get<std::size_t>()
           << "  dim " << t["dim"].get<std::size_t>() << "\n";
  r.text << "dimensions " << (m.dims_match ? "match" : "differ") << ", modules " << (m.modules_match ? "match" : "differ")
         << (m.semisimple ? " (isomorphism)" : " (composition factors)") << "\n";
  if (!m.dims_match || !m.modules_match) r.failures.push_back("Mackey decomposition does not match");
}

void cmd_series(const GeometricDatum& d, const Options& o, Outcome& r) {
  r.notes.push_back(kTripleCaveat);
  Json all = Json::array();
  for (const auto& t : d.triples) {
    if (!o.triple.empty() && t.label != o.triple) continue;
    const auto s = series_size(d, t.label, o.seed);
    Json j{{"triple", s.triple},
           {"w_order", s.weyl.order},
           {"quotient_order", s.weyl.quotient_order},
           {"w_invariants", invariants_json(s.weyl.abelian_invariants)},
           {"end_dim", s.end_dim},
           {"pieces", s.piece_dims},
           {"size", s.series_size},
           {"end_dims", s.end_dims},
           {"socle_count", s.head_socle_count},
           {"cocycle", cocycle_json(s.cocycle)}};
    if (s.members) j["members"] = *s.members;
    j["problems"] = s.problems;
    r.text << t.label << ": W order " << s.weyl.order << " of " << s.weyl.quotient_order << " ("
           << invariants_text(s.weyl.abelian_invariants) << "); End dim " << s.end_dim << ", simple dims "
           << join(s.end_dims) << "; series size " << s.series_size << "; cocycle " << to_string(s.cocycle.status)
           << "\n";
    if (s.members) r.text << "  members: " << join(*s.members) << "\n";
    for (const auto& p : s.problems) {
      r.text << "  problem: " << p << "\n";
      r.failures.push_back(t.label + ": " + p);
    }
    all.push_back(std::move(j));
  }
  if (!o.triple.empty() && all.empty()) d.triple(o.triple);
  r.result["series"] = std::move(all);
}

void cmd_partition(const GeometricDatum& d, const Options& o, Outcome& r) {
  r.notes.push_back(kTripleCaveat);
  const auto p = partition_check(d, o.seed);
  Json sizes = Json::array();
  std::vector<std::size_t> ns;
  for (const auto& [label, n] : p.sizes) {
    sizes.push_back({{"triple", label}, {"size", n}});
    ns.push_back(n);
  }
  r.result = {{"total_pairs", p.total_pairs}, {"series", sizes}, {"sum", p.sum}, {"covered", p.covered}};
  r.result["annotations"] = {{"present", p.annotated}, {"disjoint", p.disjoint}, {"exact", p.exact},
                             {"repeated", p.repeated}, {"missing", p.missing},   {"unknown", p.unknown}};
  for (const auto& [label, n] : p.sizes) r.text << label << ": " << n << "\n";
  r.text << (ns.empty() ? "0" : join(ns, " + ")) << " = " << p.sum << " of " << p.total_pairs << " pairs: "
         << (p.covered ? "covered" : "not covered") << "\n";
  if (p.annotated)
    r.text << "series labels: " << (p.disjoint ? "disjoint" : "overlapping") << ", "
           << (p.exact ? "exact cover" : "inexact cover") << "\n";
  if (!p.repeated.empty()) r.text << "  repeated: " << join(p.repeated) << "\n";
  if (!p.missing.empty()) r.text << "  missing: " << join(p.missing) << "\n";
  if (!p.unknown.empty()) r.text << "  unknown: " << join(p.unknown) << "\n";
  if (!p.covered) r.failures.push_back("series sizes do not add up to the number of pairs");
  if (p.annotated && (!p.disjoint || !p.exact)) r.failures.push_back("series labels do not partition the pairs");
}

void cmd_gamma(const GeometricDatum& d, const Options& o, Outcome& r) {
  struct Job {
    std::string orbit, module;
    GModule v0;
    std::optional<std::vector<std::string>> targets;
  };
  std::vector<Job> jobs;
  if (!o.module.empty()) {
    if (o.orbit.empty()) throw CLI::ValidationError("--module needs --orbit");
    d.orbit(o.orbit);
    jobs.push_back({o.orbit, o.module, d.module(o.module), std::nullopt});
  } else {
    for (const auto& e : d.gamma) {
      if (!o.orbit.empty() && e.orbit != o.orbit) continue;
      for (const auto& in : e.inputs) jobs.push_back({e.orbit, in.module_name, in.v0, in.targets});
    }
    if (!o.orbit.empty()) d.orbit(o.orbit);
  }
  Json all = Json::array();
  for (const auto& job : jobs) {
    const auto g = gamma_decompose(d, job.orbit, job.v0, o.seed);
    Json terms = Json::array();
    std::vector<std::string> got;
    for (const auto& t : g.terms) {
      terms.push_back({{"label", t.label}, {"dim", t.dim}, {"multiplicity", t.multiplicity}});
      for (std::size_t i = 0; i < t.multiplicity; ++i) got.push_back(t.label);
    }
    Json j{{"orbit", job.orbit},
           {"module", job.module},
           {"index", g.index},
           {"induced_dim", g.induced_dim},
           {"modular_index", g.modular_index},
           {"semisimple", g.semisimple},
           {"terms", terms}};
    r.text << "orbit " << job.orbit << ", Ind of " << job.module << " (index " << g.index << "): dim "
           << g.induced_dim << ", " << (g.semisimple ? "semisimple" : "not semisimple")
           << (g.modular_index ? "" : " (characteristic prime to the index)") << "\n";
    r.text << "  factors: " << join(got, " + ") << "\n";
    if (job.targets) {
      auto want = *job.targets;
      std::sort(want.begin(), want.end());
      std::sort(got.begin(), got.end());
      const bool match = want == got;
      j["targets"] = *job.targets;
      j["targets_match"] = match;
      r.text << "  expected: " << join(*job.targets, " + ") << (match ? " (match)" : " (MISMATCH)") << "\n";
      if (!match) r.failures.push_back("gamma decomposition of " + job.module + " differs from its targets");
    }
    all.push_back(std::move(j));
  }
  r.result["entries"] = std::move(all);
}

// Report framing.

std::vector<std::string> field_notes(const GeometricDatum& d) {
  std::vector<std::string> notes;
  if (!d.surrogate_characteristic()) return notes;
  const auto p = d.field->characteristic();
  const auto q = d.field->order();
  std::string name = "GF(" + std::to_string(q) + ")";
  notes.push_back("characteristic " + std::to_string(p) + " divides no group order in the datum: " + name +
                  " is a surrogate for characteristic 0");
  std::vector<std::string> unsplit;
  for (const auto& n : d.group_names)
    if ((q - 1) % d.groups.at(n)->exponent() != 0) unsplit.push_back(n);
  if (unsplit.empty())
    notes.push_back(name + " splits every group (q = 1 mod each exponent), so counts agree with characteristic 0");
  else
    notes.push_back("q = 1 fails modulo the exponent of " + join(unsplit, ", ") +
                    "; counts there may differ from characteristic 0");
  return notes;
}

Json field_json(const Field& f) {
  Json j{{"p", f.characteristic()}, {"k", f.degree()}, {"order", f.order()}};
  j["modulus"] = f.degree() > 1 ? Json(f.modulus()) : Json(nullptr);
  j["description"] = f.describe();
  return j;
}

std::string render(const std::string& command, const GeometricDatum& d, const Options& o, Outcome& r) {
  std::vector<std::string> notes = field_notes(d);
  notes.insert(notes.end(), r.notes.begin(), r.notes.end());
  const std::string status = r.failures.empty() ? "ok" : "check failed";
  std::ostringstream os;
  if (o.format == "json") {
    Json doc{{"command", command},
             {"datum", d.name},
             {"override", d.override_key.empty() ? Json(nullptr) : Json(d.override_key)},
             {"field", field_json(*d.field)},
             {"seed", o.seed},
             {"notes", notes},
             {"result", std::move(r.result)},
             {"status", status},
             {"failures", r.failures}};
    os << doc.dump(2) << "\n";
    return os.str();
  }
  os << "springerkit " << command << "\n";
  os << "datum: " << d.name;
  if (!d.override_key.empty()) os << " (field override " << d.override_key << ")";
  os << "\nfield: " << d.field->describe() << "\n";
  os << "seed: " << o.seed << "\n";
  for (const auto& n : notes) os << "note: " << n << "\n";
  os << "\n" << r.text.str();
  os << "\nstatus: " << status << "\n";
  for (const auto& f : r.failures) os << "  " << f << "\n";
  return os.str();
}

}  // namespace

std::filesystem::path resolve_datum(const std::string& path) {
  std::filesystem::path p(path);
  if (std::filesystem::exists(p)) return p;
  const std::filesystem::path bundled = std::filesystem::path(SPRINGERKIT_DATA_DIR) / p;
  if (p.is_relative() && std::filesystem::exists(bundled)) return bundled;
  return p;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Clifford theory over finite fields and the component-group side of the generalized Springer "
               "correspondence.",
               "springerkit"};
  app.footer(kSurrogateHelp);
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--datum", o.datum, "datum file; bundled fixtures are found by file name")->required();
    sub->add_option("--field", o.field, "coefficient field as p or p,k; applies the datum's field_overrides entry");
    sub->add_option("--seed", o.seed, "seed for randomized steps")->capture_default_str();
    sub->add_option("--format", o.format, "report format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  };

  using Command = void (*)(const GeometricDatum&, const Options&, Outcome&);
  std::vector<std::pair<CLI::App*, Command>> commands;
  auto add = [&](const char* name, const char* help, Command fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    common(sub);
    commands.emplace_back(sub, fn);
    return sub;
  };

  auto* irreps = add("irreps", "simple modules of the datum's groups", cmd_irreps);
  irreps->add_option("--group", o.group, "restrict to one group");

  auto* ind = add("induce", "induce a module from a subgroup to its parent", cmd_induce);
  ind->add_option("--subgroup", o.subgroup, "group of kind subgroup")->required();
  ind->add_option("--module", o.module, "module over the subgroup")->required();

  auto* cl = add("clifford", "stabilizer and head/socle of an induced module, or the restriction of a module",
                 cmd_clifford);
  cl->add_option("--subgroup", o.subgroup, "normal subgroup")->required();
  cl->add_option("--module", o.module, "simple module over the subgroup or over its parent")->required();

  auto* en = add("endalg", "graded endomorphism algebra of an induced module", cmd_endalg);
  en->add_option("--triple", o.triple, "cuspidal triple label");
  en->add_option("--subgroup", o.subgroup, "normal subgroup");
  en->add_option("--module", o.module, "simple module over the subgroup");

  auto* mk = add("mackey", "Mackey decomposition of Res_K Ind_L", cmd_mackey);
  mk->add_option("--left", o.left, "subgroup K restricted to")->required();
  mk->add_option("--right", o.right, "subgroup L induced from")->required();
  mk->add_option("--module", o.module, "module over L")->required();

  auto* se = add("series", "induction series sizes of the cuspidal triples", cmd_series);
  se->add_option("--triple", o.triple, "restrict to one triple");

  add("partition", "check that the series partition the pairs", cmd_partition);

  auto* ga = add("gamma", "induce A_G0-modules to A_G and name the constituents", cmd_gamma);
  ga->add_option("--orbit", o.orbit, "orbit label");
  ga->add_option("--module", o.module, "module over the orbit's A_G0 (default: the datum's gamma entries)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  std::optional<FieldSpec> field;
  try {
    if (!o.field.empty()) field = parse_field_spec(o.field);
  } catch (const Error& e) {
    err << "usage: " << e.what() << "\n";
    return kUsage;
  }

  for (const auto& [sub, fn] : commands) {
    if (!sub->parsed()) continue;
    try {
      const auto d = datum_load(resolve_datum(o.datum), field);
      Outcome r;
      fn(d, o, r);
      out << render(sub->get_name(), d, o, r);
      return r.failures.empty() ? kOk : kCheckFailed;
    } catch (const CLI::ValidationError& e) {
      err << "usage: " << e.what() << "\n";
      return kUsage;
    } catch (const Error& e) {
      err << e.what() << "\n";
      return e.kind() == ErrorKind::ExpectationMismatch ? kCheckFailed : kError;
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return kError;
    }
  }
  return kUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.push_back("springerkit");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace springerkit::cli
