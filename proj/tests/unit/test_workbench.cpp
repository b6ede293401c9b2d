#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ncpb_tools/catalog.hpp"
#include "ncpb_tools/commands.hpp"
#include "ncpb_tools/cross_check.hpp"

using namespace ncpb;
using namespace ncpb::tools;

namespace {

struct Run {
  int code;
  Json report;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  Json j = out.str().empty() ? Json() : Json::parse(out.str());
  return {code, j, err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("ncpb_test_" + name);
  std::filesystem::remove_all(p);
  return p;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream is(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(is), {});
}

}  // namespace

TEST_CASE("example clock-shift") {
  Run r = run({"example", "clock-shift", "--n", "3"});
  CHECK(r.code == 0);
  CHECK(r.report["status"] == "ok");
  CHECK(r.report["payload"]["certified"] == true);
  CHECK(r.report["payload"]["certificate"]["orders"] == Json::array({3, 3}));
  CHECK(run({"example", "clock-shift", "--n", "3"}).report.dump() == r.report.dump());
}

TEST_CASE("cohomology h2") {
  Run r = run({"cohomology", "h2", "--group", "2,2", "--module", "mu:2", "--method", "all"});
  CHECK(r.code == 0);
  CHECK(r.report["payload"]["factors"] == Json::array({2, 2, 2}));
  CHECK(r.report["payload"]["agree"] == true);
  Run c = run({"cohomology", "h2", "--group", "3,3", "--module", "mu:3", "--method", "circle"});
  CHECK(c.report["payload"]["factors"] == Json::array({3}));
  Run t = run({"cohomology", "h2", "--group", "2", "--module", "trivial:2,2", "--method", "structural"});
  CHECK(t.report["payload"]["factors"] == Json::array({2, 2}));
  Run refused = run({"--budget", "0", "cohomology", "h2", "--group", "2", "--module", "mu:2"});
  CHECK(refused.code == 2);
  CHECK(refused.report["status"] == "refused");
  CHECK(refused.report["payload"]["budget"] == 0);
}

TEST_CASE("usage errors exit with 3") {
  CHECK(run({"bundle", "certify", "--system", "missing.json"}).code == 3);
  CHECK(run({"no-such-command"}).code == 3);
  CHECK(run({"cohomology", "h2", "--group", "x"}).code == 3);
  CHECK(run({"cohomology", "h2", "--group", "2", "--module", "bogus:1"}).code == 3);
  CHECK(run({}).code == 3);

  auto dir = scratch("usage");
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "bad.json") << "{ not json";
  Run bad = run({"--workspace", dir.string(), "algebra", "verify", "--file", "bad.json"});
  CHECK(bad.code == 3);
  CHECK(bad.report["error"].get<std::string>().find("bad.json") != std::string::npos);

  std::ofstream(dir / "kind.json") << envelope("certificate", Json::object()).dump();
  Run kind = run({"--workspace", dir.string(), "algebra", "verify", "--file", "kind.json"});
  CHECK(kind.code == 3);
  CHECK(kind.report["error"].get<std::string>().find("/kind") != std::string::npos);
}

TEST_CASE("workspace files are re-verified") {
  auto dir = scratch("workspace");
  Run built = run({"--workspace", dir.string(), "algebra", "build", "--kind", "group", "--orders", "3", "--out", "g.json"});
  REQUIRE(built.code == 0);
  CHECK(run({"--workspace", dir.string(), "algebra", "verify", "--file", "g.json"}).code == 0);
  CHECK(run({"--workspace", dir.string(), "algebra", "center", "--file", "g.json"}).report["payload"]["dim"] == 3);

  Json j = Json::parse(slurp(dir / "g.json"));
  for (auto& p : j["data"]["products"])
    if (p[0] == 1 && p[1] == 1) p[2][0][0] = 0;
  std::ofstream(dir / "tampered.json") << j.dump();
  Run t = run({"--workspace", dir.string(), "algebra", "verify", "--file", "tampered.json"});
  CHECK(t.code == 3);
  CHECK(t.report["error"].get<std::string>().find("re-verification") != std::string::npos);
}

TEST_CASE("factor systems, crossed products and bundles through the CLI") {
  auto dir = scratch("pipeline");
  Run cat = run({"catalog", "export", "--dir", dir.string()});
  REQUIRE(cat.code == 0);
  const std::string ws = dir.string();
  CHECK(run({"--workspace", ws, "factor-system", "validate", "--file", "nonsplit-C2.json"}).code == 0);
  CHECK(run({"--workspace", ws, "factor-system", "obstruction", "--file", "nonsplit-C2.json"}).code == 0);
  CHECK(run({"--workspace", ws, "factor-system", "split", "--file", "nonsplit-C2.json", "--torsion", "2"}).code == 1);
  CHECK(run({"--workspace", ws, "factor-system", "split", "--file", "nonsplit-C2.json", "--torsion", "4"}).code == 0);
  CHECK(run({"--workspace", ws, "bundle", "certify", "--system", "nonsplit-C2.json"}).code == 1);
  CHECK(run({"--workspace", ws, "bundle", "certify", "--system", "clock-shift-3.json"}).code == 0);
  CHECK(run({"--workspace", ws, "bundle", "decompose", "--system", "clock-shift-2.json"}).code == 0);
  CHECK(run({"--workspace", ws, "factor-system", "kernel-equiv", "--file", "matrix-group-algebra-M2-C2.json",
             "--other", "matrix-group-algebra-M2-C2.json"})
            .code == 0);

  Run cp = run({"--workspace", ws, "crossed-product", "build", "--file", "twisted-group-algebra-C2xC2.json", "--out",
                "cp.json"});
  CHECK(cp.code == 0);
  Run cl = run({"--workspace", ws, "crossed-product", "class", "--file", "cp.json"});
  CHECK(cl.code == 0);

  std::ofstream(dir / "h.json") << envelope("unit-cochain", Json{{"h", Json::array({to_json(CycloVector{Cyclo(1)}),
                                                                                     to_json(CycloVector{Cyclo(2)})})}})
                                       .dump();
  Run act = run({"--workspace", ws, "factor-system", "act", "--file", "group-algebra-C2.json", "--cochain", "h.json",
                 "--out", "primed.json"});
  CHECK(act.code == 0);
  Run eq = run({"--workspace", ws, "crossed-product", "equiv", "--primed", "primed.json", "--base",
                "group-algebra-C2.json", "--cochain", "h.json"});
  CHECK(eq.code == 0);
}

TEST_CASE("bundle spectrum and trivialize") {
  auto dir = scratch("spectrum");
  std::filesystem::create_directories(dir);
  CycloMatrix shift(4, 4);
  for (std::size_t x = 0; x < 4; ++x) shift((x + 3) % 4, x) = 1;
  DynamicalSystem ds = make_dynamical_system(function_algebra({"0", "1", "2", "3"}), FinAbGroup({4}), {shift});
  std::ofstream(dir / "c4.json") << envelope("dynamical-system", to_json(ds)).dump();
  Run sp = run({"--workspace", dir.string(), "bundle", "spectrum", "--system", "c4.json"});
  CHECK(sp.code == 0);
  CHECK(sp.report["payload"]["free"] == true);
  Run tr = run({"--workspace", dir.string(), "bundle", "trivialize", "--system", "c4.json"});
  CHECK(tr.code == 0);

  DynamicalSystem triv = make_dynamical_system(function_algebra({"p", "q"}), FinAbGroup({2}), {CycloMatrix::identity(2)});
  std::ofstream(dir / "triv.json") << envelope("dynamical-system", to_json(triv)).dump();
  Run nf = run({"--workspace", dir.string(), "bundle", "spectrum", "--system", "triv.json"});
  CHECK(nf.code == 1);
  CHECK(nf.report["payload"]["fixed_point"]["element"] == 1);
}

TEST_CASE("group commands") {
  Run info = run({"group", "info", "--orders", "2,3,4"});
  CHECK(info.report["payload"]["invariant_factors"] == Json::array({2, 12}));
  Run q = run({"group", "quotient", "--orders", "2,4", "--generators", "1,2"});
  CHECK(q.report["payload"]["quotient_invariants"] == Json::array({4}));
}

TEST_CASE("catalog") {
  auto entries = build_catalog();
  CHECK(entries.size() >= 20);
  for (const auto& e : entries) CHECK_MESSAGE(e.ok() != e.expected_fail, e.name);
  auto a = scratch("catalog_a"), b = scratch("catalog_b");
  auto names = export_catalog(a);
  export_catalog(b);
  for (const auto& n : names) CHECK(slurp(a / n) == slurp(b / n));
  // a regular file in the way of the target directory
  auto blocker = scratch("catalog_blocker");
  std::ofstream(blocker) << "x";
  CHECK_THROWS(export_catalog(blocker / "sub"));
  Run io = run({"catalog", "export", "--dir", (blocker / "sub").string()});
  CHECK(io.code == 3);
}

TEST_CASE("cross-check refuses enumeration criteria at budget 0") {
  CrossCheckOptions opt;
  opt.budget = 0;
  for (int id : {3, 5, 7}) CHECK(run_criterion(id, opt).status == Status::refused);
  CHECK(run_criterion(8, opt).status == Status::pass);
}
