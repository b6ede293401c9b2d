#include "ncpb_tools/catalog.hpp"

#include <cerrno>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace ncpb::tools {

namespace {

template <class F>
Check run_check(const std::string& name, F&& f) {
  try {
    Verdict v = f();
    return Check{name, v.ok, v.detail};
  } catch (const std::exception& e) {
    return Check{name, false, e.what()};
  }
}

CatalogEntry factor_entry(std::string name, FactorSystem fs, bool expected_fail = false) {
  CatalogEntry e;
  e.name = std::move(name);
  e.factor_system = std::move(fs);
  e.expected_fail = expected_fail;
  return e;
}

void run_factor_checks(CatalogEntry& e) {
  const FactorSystem& fs = *e.factor_system;
  e.checks.push_back(run_check("factor system validates", [&] { return validate_factor_system(fs); }));
  std::optional<GradedAlgebra> cp;
  e.checks.push_back(run_check("crossed product is a graded algebra", [&] {
    cp = build_crossed_product(fs);
    return verify_grading(*cp);
  }));
  if (!cp) return;
  if (fs.action.algebra.has_involution())
    e.checks.push_back(run_check("crossed product carries the involution", [&] {
      return cp->algebra.has_involution() ? Verdict::pass() : Verdict::fail("no involution installed");
    }));
  e.checks.push_back(run_check("characteristic class round trip", [&] {
    return extract_characteristic_class(*cp, table_section(*cp)) == fs ? Verdict::pass()
                                                                        : Verdict::fail("extracted (S, omega) differs");
  }));
  e.checks.push_back(run_check("obstruction is trivial", [&] {
    auto ob = nu_obstruction(fs.action, fs.omega);
    return ob.status == SearchStatus::found ? Verdict::pass() : Verdict::fail(ob.detail);
  }));
  DynamicalSystem ds = dual_action(*cp);
  IsotypicDecomposition dec = fourier_decompose(ds);
  e.system = ds;
  e.checks.push_back(run_check("dual action certified trivial", [&] {
    CertifyOptions opts;
    for (const auto& g : canonical_generators(cp->group).first)
      if (const auto& u = cp->units[static_cast<std::size_t>(cp->group.index_of(g))]) opts.candidates.push_back(u->value);
    CertifyReport r = certify_trivial(ds, dec, opts);
    if (r.ok) e.certificate = r.certificate;
    std::string detail;
    for (const auto& f : r.failures) detail += (detail.empty() ? "" : "; ") + f;
    return r.ok ? Verdict::pass() : Verdict::fail(detail);
  }));
}

}  // namespace

Json checks_json(const std::vector<Check>& checks) {
  Json out = Json::array();
  for (const auto& c : checks) {
    Json j{{"name", c.name}, {"status", c.ok ? "ok" : "fail"}};
    if (!c.ok) j["detail"] = c.detail;
    out.push_back(j);
  }
  return out;
}

bool CatalogEntry::ok() const {
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

Json CatalogEntry::to_json() const {
  Json j{{"name", name}, {"status", ok() ? "ok" : "fail"}, {"checks", checks_json(checks)}};
  if (expected_fail) j["expected_fail"] = true;
  if (factor_system) j["factor_system"] = ncpb::to_json(*factor_system);
  if (system) j["system"] = ncpb::to_json(*system);
  if (certificate) j["certificate"] = ncpb::to_json(*certificate);
  return j;
}

Cochain clock_shift_cocycle(long long n) {
  return bilinear_cocycle(FinAbGroup({n, n}), n, {{0, 0}, {1, 0}});
}

std::vector<CatalogEntry> catalog_factor_systems() {
  std::vector<CatalogEntry> out;
  const StructureAlgebra c = scalar_algebra();
  for (long long n = 1; n <= 6; ++n)
    out.push_back(factor_entry("group-algebra-C" + std::to_string(n),
                               trivial_factor_system(trivial_outer_action(FinAbGroup({n}), c))));
  for (std::size_t m = 2; m <= 3; ++m)
    for (long long n = 1; n <= 3; ++n)
      out.push_back(factor_entry("matrix-group-algebra-M" + std::to_string(m) + "-C" + std::to_string(n),
                                 trivial_factor_system(trivial_outer_action(FinAbGroup({n}), matrix_algebra(m)))));
  for (long long n = 1; n <= 4; ++n) {
    FinAbGroup g({n, n});
    out.push_back(factor_entry("twisted-group-algebra-C" + std::to_string(n) + "xC" + std::to_string(n),
                               scalar_factor_system(trivial_outer_action(g, c), clock_shift_cocycle(n), n)));
  }
  out.push_back(factor_entry("nonsplit-C2",
                             scalar_factor_system(trivial_outer_action(FinAbGroup({2}), c), Cochain{2, {0, 0, 0, 1}}, 2),
                             true));
  return out;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out = catalog_factor_systems();
  for (auto& e : out) run_factor_checks(e);
  for (long long n = 1; n <= 5; ++n) {
    ClockShift cs = clock_shift_system(n);
    CatalogEntry e;
    e.name = "clock-shift-" + std::to_string(n);
    for (const auto& [name, pass] : cs.checks) e.checks.push_back(Check{name, pass, pass ? "" : "relation fails"});
    std::string detail;
    for (const auto& f : cs.report.failures) detail += (detail.empty() ? "" : "; ") + f;
    e.checks.push_back(Check{"certified trivial with witnesses R*, S", cs.report.ok, detail});
    e.system = cs.system;
    e.certificate = cs.report.certificate;
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<std::string> export_catalog(const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::string> names;
  for (const auto& e : build_catalog()) {
    const std::filesystem::path file = dir / (e.name + ".json");
    std::ofstream os(file, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot write " + file.string() + ": " + std::strerror(errno));
    os << envelope("catalog-entry", e.to_json()).dump(2) << '\n';
    if (!os) throw std::runtime_error("write failed for " + file.string() + ": " + std::strerror(errno));
    names.push_back(file.filename().string());
  }
  return names;
}

}  // namespace ncpb::tools
