#include "ncpb_tools/commands.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "ncpb/bundles.hpp"
#include "ncpb/cohomology.hpp"
#include "ncpb/crossed_products.hpp"
#include "ncpb/errors.hpp"
#include "ncpb/groups.hpp"
#include "ncpb_tools/catalog.hpp"
#include "ncpb_tools/cross_check.hpp"

namespace ncpb::tools {

Json Report::to_json() const {
  return Json{{"command", command}, {"status", status}, {"payload", payload}, {"transcript", transcript}};
}

int Report::exit_code() const {
  if (status == "ok") return kExitOk;
  if (status == "refused") return kExitRefused;
  return kExitFail;
}

namespace {

// Raised for unreadable or unwritable files; reported as a usage error.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  unsigned long conductor = 0;
  std::uint64_t budget = kDefaultBudget;
  std::string workspace;
  bool json = true;
  bool pretty = false;
  bool timing = false;
};

std::filesystem::path resolve(const Globals& g, const std::string& file) {
  std::filesystem::path p(file);
  if (p.is_relative() && !g.workspace.empty()) return std::filesystem::path(g.workspace) / p;
  return p;
}

Json read_json(const Globals& g, const std::string& file) {
  const auto path = resolve(g, file);
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open " + path.string());
  try {
    return Json::parse(is);
  } catch (const Json::parse_error& e) {
    throw ParseError(path.string() + ":", e.what());
  }
}

void write_json(const Globals& g, const std::string& file, const Json& j) {
  const auto path = resolve(g, file);
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw IoError("cannot write " + path.string());
  os << j.dump(2) << '\n';
  if (!os) throw IoError("write failed for " + path.string());
}

// The data of an envelope of the given kind; a catalog entry also yields its
// embedded factor system or dynamical system.
Json load_data(const Globals& g, const std::string& file, const std::string& kind) {
  Json j = read_json(g, file);
  const std::string k = j.is_object() && j.contains("kind") && j["kind"].is_string() ? j["kind"].get<std::string>() : "";
  if (k == "catalog-entry") {
    const Json& data = open_envelope(j, k);
    const char* key = kind == "factor-system" ? "factor_system" : kind == "dynamical-system" ? "system" : "";
    if (*key && data.contains(key)) return data[key];
  }
  return open_envelope(j, kind);
}

// Objects failing re-verification on load are rejected like malformed input.
template <class F>
auto verified_load(const std::string& file, F&& f) {
  try {
    return f();
  } catch (const DomainError& e) {
    throw ParseError(file + ": /data", std::string("rejected on re-verification: ") + e.what());
  }
}

FactorSystem load_factor_system(const Globals& g, const std::string& file) {
  return verified_load(file, [&] { return factor_system_from_json(load_data(g, file, "factor-system"), "/data"); });
}

DynamicalSystem load_system(const Globals& g, const std::string& file) {
  return verified_load(file, [&] { return system_from_json(load_data(g, file, "dynamical-system"), "/data"); });
}

StructureAlgebra load_algebra(const Globals& g, const std::string& file) {
  return verified_load(file, [&] { return algebra_from_json(load_data(g, file, "algebra"), "/data"); });
}

GradedAlgebra load_graded(const Globals& g, const std::string& file) {
  return verified_load(file, [&] { return graded_from_json(load_data(g, file, "graded-algebra"), "/data"); });
}

std::vector<long long> parse_orders(const std::string& text) {
  std::vector<long long> out;
  if (text.empty() || text == "1") return out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != part.size() || v < 1) throw CLI::ValidationError("orders", "expected positive integers like 2,4; got '" + text + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<GroupElement> parse_elements(const FinAbGroup& g, const std::string& text) {
  std::vector<GroupElement> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) {
    std::vector<long long> r;
    std::stringstream es(part);
    std::string x;
    while (std::getline(es, x, ',')) r.push_back(std::stoll(x));
    if (r.size() != g.rank()) throw CLI::ValidationError("generators", "element '" + part + "' has the wrong rank");
    out.push_back(g.element(r));
  }
  return out;
}

CoeffModule parse_module(const std::string& text, const FinAbGroup& acting) {
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
  if (kind == "mu") {
    auto o = parse_orders(arg);
    if (o.size() != 1) throw CLI::ValidationError("module", "mu:N takes one order");
    return CoeffModule::mu(o[0], acting);
  }
  if (kind == "trivial") return CoeffModule::trivial(FinAbGroup(parse_orders(arg)), acting);
  throw CLI::ValidationError("module", "expected mu:N or trivial:n1,n2,...; got '" + text + "'");
}

std::string ok_if(bool ok) { return ok ? "ok" : "fail"; }

void add_verdict(Report& r, const Verdict& v, const std::string& what) {
  r.transcript.push_back((v.ok ? "" : "FAILED: ") + what + (v.ok ? "" : " (" + v.detail + ")"));
  if (!v.ok && r.status == "ok") r.status = "fail";
}

std::string search_status(SearchStatus s) {
  return s == SearchStatus::found ? "ok" : s == SearchStatus::refused ? "refused" : "fail";
}

Json certify_payload(const CertifyReport& rep) {
  Json j{{"certified", rep.ok}, {"failures", rep.failures}};
  if (rep.certificate) j["certificate"] = to_json(*rep.certificate);
  return j;
}

CycloVector parse_vector_json(const Json& j, const std::string& path) { return vector_from_json(j, path); }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Globals g;
  CLI::App app{"ncpb: finite crossed products, factor systems and noncommutative principal bundles"};
  app.name("ncpb");
  app.require_subcommand(1);
  app.add_option("--conductor", g.conductor, "Working conductor (0 = automatic)");
  app.add_option("--budget", g.budget, "Enumeration budget for exhaustive searches");
  app.add_option("--workspace", g.workspace, "Directory for relative input and output files");
  app.add_flag("--json", g.json, "Machine-readable output (default)");
  app.add_flag("--pretty", g.pretty, "Indent the JSON report");
  app.add_flag("--timing", g.timing, "Print wall time to standard error");

  Report report;
  std::function<void()> action;
  auto bind = [&](CLI::App* sub, std::string name, std::function<void()> f) {
    sub->callback([&action, &report, name, f] {
      report.command = name;
      action = f;
    });
  };

  // group
  auto* group = app.add_subcommand("group", "Finite abelian groups")->require_subcommand(1);
  std::string orders;
  {
    auto* info = group->add_subcommand("info", "Order, exponent and invariant factors");
    info->add_option("--orders", orders, "Cyclic orders, e.g. 2,4")->required();
    bind(info, "group info", [&] {
      FinAbGroup grp(parse_orders(orders));
      SubgroupData trivial = subgroup_closure(grp, {});
      report.payload = Json{{"group", to_json(grp)},
                            {"name", grp.to_string()},
                            {"order", grp.order()},
                            {"exponent", grp.exponent()},
                            {"invariant_factors", quotient_invariants(trivial)}};
    });
  }
  std::string gens_text;
  {
    auto* quot = group->add_subcommand("quotient", "Invariant factors of G / <generators>");
    quot->add_option("--orders", orders, "Cyclic orders, e.g. 2,4")->required();
    quot->add_option("--generators", gens_text, "Subgroup generators, e.g. '1,0;0,2'")->required();
    bind(quot, "group quotient", [&] {
      FinAbGroup grp(parse_orders(orders));
      SubgroupData sub = subgroup_closure(grp, parse_elements(grp, gens_text));
      report.payload = Json{{"subgroup_order", sub.order()}, {"quotient_invariants", quotient_invariants(sub)}};
    });
  }

  // algebra
  auto* algebra = app.add_subcommand("algebra", "Structure-constant algebras")->require_subcommand(1);
  std::string alg_kind, points_text, file, out_file;
  long long size = 1;
  {
    auto* build = algebra->add_subcommand("build", "Build a standard algebra");
    build->add_option("--kind", alg_kind, "matrix | group | function | scalar")
        ->required()
        ->check(CLI::IsMember({"matrix", "group", "function", "scalar"}));
    build->add_option("--n", size, "Matrix size or number of points");
    build->add_option("--orders", orders, "Group for --kind group");
    build->add_option("--out", out_file, "Write the algebra here");
    bind(build, "algebra build", [&] {
      StructureAlgebra a = scalar_algebra();
      if (alg_kind == "matrix") a = matrix_algebra(static_cast<std::size_t>(size));
      if (alg_kind == "group") a = group_algebra(FinAbGroup(parse_orders(orders)));
      if (alg_kind == "function") {
        std::vector<std::string> pts;
        for (long long i = 0; i < size; ++i) pts.push_back("p" + std::to_string(i));
        a = function_algebra(pts);
      }
      add_verdict(report, verify_algebra(a), "associative and unital");
      report.payload = Json{{"algebra", to_json(a)}, {"dim", a.dim()}};
      if (!out_file.empty()) write_json(g, out_file, envelope("algebra", to_json(a)));
    });
  }
  for (const char* name : {"verify", "center", "spectrum"}) {
    auto* sub = algebra->add_subcommand(name, std::string("Algebra ") + name);
    sub->add_option("--file", file, "Algebra file")->required();
    const std::string which = name;
    bind(sub, std::string("algebra ") + name, [&, which] {
      StructureAlgebra a = load_algebra(g, file);
      if (which == "verify") {
        add_verdict(report, verify_algebra(a), "associative and unital");
        report.payload = Json{{"dim", a.dim()}, {"commutative", a.is_commutative()}, {"involution", a.has_involution()}};
      } else if (which == "center") {
        Json basis = Json::array();
        for (const auto& z : center(a)) basis.push_back(to_json(z));
        report.payload = Json{{"dim", basis.size()}, {"basis", basis}};
      } else {
        if (!a.is_commutative()) {
          report.status = "fail";
          report.transcript.push_back("FAILED: algebra is not commutative");
          return;
        }
        FiniteSpectrum sp = spectrum(a, g.conductor == 0 ? 1 : g.conductor);
        Json pts = Json::array();
        for (const auto& p : sp.points) pts.push_back(to_json(p));
        report.payload = Json{{"points", pts}};
      }
    });
  }

  // cohomology
  auto* coh = app.add_subcommand("cohomology", "Group cohomology")->require_subcommand(1);
  std::string module_text = "mu:2", method = "all";
  {
    auto* h2 = coh->add_subcommand("h2", "H^2(G, M)");
    h2->add_option("--group", orders, "Cyclic orders of G, e.g. 2,2")->required();
    h2->add_option("--module", module_text, "mu:N or trivial:n1,n2,...");
    h2->add_option("--method", method, "all | bruteforce | snf | structural | circle")
        ->check(CLI::IsMember({"all", "bruteforce", "snf", "structural", "circle"}));
    bind(h2, "cohomology h2", [&] {
      FinAbGroup grp(parse_orders(orders));
      CoeffModule mod = parse_module(module_text, grp);
      const bool mu = mod.roots_of_unity;
      const long long m = mu ? mod.carrier.orders().at(0) : 0;
      std::vector<CohomologyResult> results;
      auto need_mu = [&](const char* what) {
        if (!mu) throw CLI::ValidationError("method", std::string(what) + " needs --module mu:N");
      };
      if (method == "bruteforce" || method == "all") results.push_back(h2_bruteforce(mod, g.budget));
      if (method == "snf" || (method == "all" && mu)) {
        need_mu("snf");
        results.push_back(h2_snf(grp, m));
      }
      if (method == "structural" || method == "all") results.push_back(h2_twisted_structural(mod));
      if (method == "circle") {
        need_mu("circle");
        results.push_back(h2_circle(grp, m));
      }
      Json per = Json::object();
      for (const auto& r : results) per[r.method] = to_json(r);
      bool agree = true;
      for (const auto& r : results) agree = agree && r.factors == results.front().factors;
      report.payload = Json{{"group", grp.to_string()}, {"module", mod.name()}, {"factors", results.front().factors},
                            {"methods", per}, {"agree", agree}};
      report.transcript.push_back((agree ? "" : "FAILED: ") + std::string("methods agree"));
      if (!agree) report.status = "fail";
    });
  }

  // factor-system
  auto* fsys = app.add_subcommand("factor-system", "Factor systems (S, omega)")->require_subcommand(1);
  std::string other_file, cochain_file;
  long long torsion = 0;
  std::size_t generator = 0;
  bool no_omega = false;
  {
    auto* v = fsys->add_subcommand("validate", "Check delta_S = C o omega and d_S omega = 1");
    v->add_option("--file", file, "Factor system file")->required();
    bind(v, "factor-system validate", [&] {
      FactorSystem fs = load_factor_system(g, file);
      add_verdict(report, validate_factor_system(fs), "factor system identities");
      report.payload = Json{{"group", fs.action.group.to_string()}, {"dim", fs.action.algebra.dim()},
                            {"homomorphism", fs.action.is_homomorphism()}};
    });
    auto* ob = fsys->add_subcommand("obstruction", "The class of d_S omega in H^3");
    ob->add_option("--file", file, "Factor system file")->required();
    ob->add_flag("--no-omega", no_omega, "Ignore omega and construct one from S");
    ob->add_option("--torsion", torsion, "Search in mu_N (0 = automatic)");
    bind(ob, "factor-system obstruction", [&] {
      FactorSystem fs = load_factor_system(g, file);
      Obstruction o = nu_obstruction(fs.action, no_omega ? std::nullopt : std::optional(fs.omega), torsion, g.budget);
      report.status = search_status(o.status);
      report.payload = Json{{"torsion_order", o.torsion_order}, {"detail", o.detail}};
      if (o.values) report.payload["values"] = to_json(*o.values);
      if (o.witness) report.payload["witness"] = to_json(*o.witness);
      if (o.corrected) report.payload["corrected"] = to_json(*o.corrected);
      report.transcript.push_back(o.status == SearchStatus::found ? "d_S omega is a coboundary" : o.detail);
    });
    auto* ke = fsys->add_subcommand("kernel-equiv", "Whether two outer actions define the same kernel");
    ke->add_option("--file", file, "Factor system with S")->required();
    ke->add_option("--other", other_file, "Factor system with S'")->required();
    ke->add_option("--torsion", torsion, "Read d_S h in mu_N (0 = automatic)");
    bind(ke, "factor-system kernel-equiv", [&] {
      FactorSystem a = load_factor_system(g, file), b = load_factor_system(g, other_file);
      KernelEquivalence k = kernel_equivalent(a.action, b.action, torsion, g.budget);
      report.status = search_status(k.status);
      Json h = Json::array();
      for (const auto& u : k.corrected) h.push_back(to_json(u.value));
      report.payload = Json{{"torsion_order", k.torsion_order}, {"detail", k.detail}, {"witness", h}};
      report.transcript.push_back(k.status == SearchStatus::found ? "S' = (C o h) S with d_S h = 1" : k.detail);
    });
    auto* sp = fsys->add_subcommand("split", "Whether the restriction to <e_i> splits");
    sp->add_option("--file", file, "Factor system file")->required();
    sp->add_option("--generator", generator, "Index i of the generator e_i");
    sp->add_option("--torsion", torsion, "Scalars mu_N used for rescaling (0 = exponent)");
    bind(sp, "factor-system split", [&] {
      FactorSystem fs = load_factor_system(g, file);
      if (generator >= fs.action.group.rank()) throw CLI::ValidationError("generator", "index out of range");
      SplitTest t = restrict_and_test_split(fs, generator, torsion, {}, g.budget);
      report.status = ok_if(t.split);
      report.payload = certify_payload(t.report);
      report.payload["split"] = t.split;
      report.transcript = t.report.ok ? t.report.transcript : t.report.failures;
    });
    auto* act = fsys->add_subcommand("act", "Apply a unit cochain h to (S, omega)");
    act->add_option("--file", file, "Factor system file")->required();
    act->add_option("--cochain", cochain_file, "Unit cochain file (kind unit-cochain: {\"h\": [element per g]})")
        ->required();
    act->add_option("--out", out_file, "Write h.(S, omega) here");
    bind(act, "factor-system act", [&] {
      FactorSystem fs = load_factor_system(g, file);
      const Json data = load_data(g, cochain_file, "unit-cochain");
      if (!data.contains("h") || !data["h"].is_array()) throw ParseError("/data/h", "expected an array");
      UnitCochain h;
      for (std::size_t i = 0; i < data["h"].size(); ++i)
        h.push_back(make_unit(fs.action.algebra, parse_vector_json(data["h"][i], "/data/h/" + std::to_string(i))));
      if (static_cast<long long>(h.size()) != fs.action.group.order())
        throw ParseError("/data/h", "one value per group element is required");
      FactorSystem primed = act_unit_cochain(h, fs);
      add_verdict(report, validate_factor_system(primed), "h.(S, omega) is a factor system");
      report.payload = Json{{"factor_system", to_json(primed)}, {"stabilizes", stabilizer_check(h, fs)}};
      if (!out_file.empty()) write_json(g, out_file, envelope("factor-system", to_json(primed)));
    });
  }

  // crossed-product
  auto* cprod = app.add_subcommand("crossed-product", "Crossed products A_(S, omega)")->require_subcommand(1);
  {
    auto* b = cprod->add_subcommand("build", "Build and verify the crossed product");
    b->add_option("--file", file, "Factor system file")->required();
    b->add_option("--out", out_file, "Write the graded algebra here");
    bind(b, "crossed-product build", [&] {
      GradedAlgebra cp = build_crossed_product(load_factor_system(g, file));
      add_verdict(report, verify_algebra(cp.algebra), "associative and unital");
      add_verdict(report, verify_grading(cp), "graded by G with homogeneous units");
      report.payload = Json{{"graded_algebra", to_json(cp)}, {"involution", cp.algebra.has_involution()}};
      if (!out_file.empty()) write_json(g, out_file, envelope("graded-algebra", to_json(cp)));
    });
    auto* cl = cprod->add_subcommand("class", "Characteristic class from the unit table");
    cl->add_option("--file", file, "Graded algebra file")->required();
    bind(cl, "crossed-product class", [&] {
      GradedAlgebra a = load_graded(g, file);
      FactorSystem fs = extract_characteristic_class(a, table_section(a));
      report.transcript.push_back("extracted (S, omega) validates");
      report.payload = Json{{"factor_system", to_json(fs)}};
    });
    auto* eq = cprod->add_subcommand("equiv", "phi(b v_g) = b h(g) v_g between crossed products");
    eq->add_option("--primed", file, "Factor system h.(S, omega)")->required();
    eq->add_option("--base", other_file, "Factor system (S, omega)")->required();
    eq->add_option("--cochain", cochain_file, "Unit cochain h")->required();
    bind(eq, "crossed-product equiv", [&] {
      FactorSystem primed = load_factor_system(g, file), base = load_factor_system(g, other_file);
      const Json data = load_data(g, cochain_file, "unit-cochain");
      if (!data.contains("h") || !data["h"].is_array()) throw ParseError("/data/h", "expected an array");
      UnitCochain h;
      for (std::size_t i = 0; i < data["h"].size(); ++i)
        h.push_back(make_unit(base.action.algebra, parse_vector_json(data["h"][i], "/data/h/" + std::to_string(i))));
      GradedEquivalence e = build_equivalence(primed, base, h);
      add_verdict(report, e.verdict, "graded isomorphism");
      report.payload = Json{{"matrix", to_json(e.matrix)}};
    });
  }

  // bundle
  auto* bundle = app.add_subcommand("bundle", "Dynamical systems and principal bundle certificates")->require_subcommand(1);
  std::string system_file;
  for (const char* name : {"decompose", "certify", "trivialize", "spectrum"}) {
    auto* sub = bundle->add_subcommand(name, std::string("bundle ") + name);
    sub->add_option("--system", system_file, "Dynamical system file")->required();
    if (std::string(name) == "certify") sub->add_option("--torsion", torsion, "Scalars mu_N used for rescaling");
    const std::string which = name;
    bind(sub, std::string("bundle ") + name, [&, which] {
      DynamicalSystem ds = load_system(g, system_file);
      IsotypicDecomposition dec = fourier_decompose(ds, g.conductor);
      if (which == "decompose") {
        add_verdict(report, verify_decomposition(ds, dec), "isotypic decomposition");
        report.payload = to_json(dec);
        return;
      }
      CertifyOptions opt;
      opt.torsion_order = torsion;
      opt.budget = g.budget;
      if (which == "certify") {
        CertifyReport rep = certify_trivial(ds, dec, opt);
        report.status = ok_if(rep.ok);
        report.payload = certify_payload(rep);
        report.transcript = rep.ok ? rep.transcript : rep.failures;
        if (rep.ok) {
          SplitWitness sw = split_witness(ds, *rep.certificate);
          add_verdict(report, verify_split_witness(ds, sw), "split witness");
        }
        return;
      }
      SpectrumAction sa = spectrum_action(ds, g.conductor);
      Json fixed = nullptr;
      if (sa.fixed_point) fixed = Json{{"point", sa.fixed_point->first}, {"element", sa.fixed_point->second}};
      report.payload = Json{{"points", sa.spectrum.points.size()}, {"free", sa.free}, {"orbit_of", sa.orbit_of},
                            {"orbit_count", sa.orbit_count}, {"table", sa.table}, {"fixed_point", fixed}};
      if (which == "spectrum") {
        report.status = ok_if(sa.free);
        report.transcript.push_back(sa.free ? "action on the spectrum is free" : "FAILED: action has a fixed point");
        return;
      }
      CertifyReport rep = certify_trivial(ds, dec, opt);
      if (!rep.ok) {
        report.status = "fail";
        report.transcript = rep.failures;
        return;
      }
      CoveringTrivialization cov = trivialize_covering(ds, sa, *rep.certificate);
      Json fiber = Json::array();
      for (const auto& e : cov.fiber) fiber.push_back(e.residues);
      report.payload["fiber"] = fiber;
      add_verdict(report, cov.verdict, "equivariant bijection X -> X/Lambda x Lambda");
    });
  }

  // example
  auto* example = app.add_subcommand("example", "Built-in examples")->require_subcommand(1);
  long long n = 2;
  {
    auto* cs = example->add_subcommand("clock-shift", "Clock and shift on M_n");
    cs->add_option("--n", n, "Order")->check(CLI::Range(1, 12));
    cs->add_option("--out", out_file, "Write the dynamical system here");
    bind(cs, "example clock-shift", [&] {
      ClockShift c = clock_shift_system(n);
      for (const auto& [name, ok] : c.checks) report.transcript.push_back((ok ? "" : "FAILED: ") + name);
      report.status = ok_if(c.ok());
      report.payload = certify_payload(c.report);
      report.payload["n"] = n;
      report.payload["dimensions"] = c.decomposition.dimensions();
      report.payload["R"] = to_json(c.r);
      report.payload["S"] = to_json(c.s);
      if (!out_file.empty()) write_json(g, out_file, envelope("dynamical-system", to_json(c.system)));
    });
  }

  // catalog
  auto* catalog = app.add_subcommand("catalog", "Example gallery")->require_subcommand(1);
  std::string dir;
  {
    auto* ex = catalog->add_subcommand("export", "Write every catalog entry with its checks");
    ex->add_option("--dir", dir, "Target directory")->required();
    bind(ex, "catalog export", [&] {
      std::vector<std::string> names;
      try {
        names = export_catalog(resolve(g, dir));
      } catch (const std::filesystem::filesystem_error& e) {
        throw IoError(e.what());
      } catch (const std::runtime_error& e) {
        if (dynamic_cast<const Error*>(&e)) throw;
        throw IoError(e.what());
      }
      report.payload = Json{{"files", names}, {"count", names.size()}};
      report.transcript.push_back("wrote " + std::to_string(names.size()) + " files");
    });
  }

  // cross-check
  std::string level = "quick";
  {
    auto* cc = app.add_subcommand("cross-check", "Run the acceptance grid");
    cc->add_option("--level", level, "quick | full")->check(CLI::IsMember({"quick", "full"}));
    bind(cc, "cross-check", [&] {
      CrossCheckOptions opt;
      opt.full = level == "full";
      opt.budget = g.budget;
      auto results = run_cross_check(opt);
      bool all_pass = true, any_refused = false;
      for (const auto& r : results) {
        all_pass = all_pass && r.status == Status::pass;
        any_refused = any_refused || r.status == Status::refused;
        report.transcript.push_back(std::to_string(r.id) + " " + r.title + ": " + status_name(r.status) +
                                    (r.detail.empty() ? "" : " (" + r.detail + ")"));
        if (g.timing) err << "criterion " << r.id << ": " << r.seconds << " s\n";
      }
      report.status = all_pass ? "ok" : any_refused ? "refused" : "fail";
      report.payload = Json{{"level", level}, {"criteria", cross_check_json(results)}};
    });
  }

  auto usage_error = [&](const std::string& command, const std::string& msg) {
    Json j{{"command", command}, {"status", "error"}, {"error", msg}};
    out << (g.pretty ? j.dump(2) : j.dump()) << '\n';
    err << "ncpb: " << msg << '\n';
    return kExitUsage;
  };

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    return usage_error(report.command, e.what());
  }
  if (!action) return usage_error("", "no command given");

  const auto t0 = std::chrono::steady_clock::now();
  try {
    action();
  } catch (const IoError& e) {
    return usage_error(report.command, e.what());
  } catch (const ParseError& e) {
    return usage_error(report.command, e.what());
  } catch (const CLI::ValidationError& e) {
    return usage_error(report.command, e.what());
  } catch (const BudgetExceeded& e) {
    report.status = "refused";
    report.payload = Json{{"budget", e.budget()}, {"detail", e.what()}};
    report.transcript.push_back(e.what());
  } catch (const std::exception& e) {
    report.status = "fail";
    report.payload = Json{{"error", e.what()}};
    report.transcript.push_back(std::string("FAILED: ") + e.what());
  }
  if (g.timing)
    err << "time: " << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() << " s\n";
  const Json j = report.to_json();
  out << (g.pretty ? j.dump(2) : j.dump()) << '\n';
  return report.exit_code();
}

}  // namespace ncpb::tools
