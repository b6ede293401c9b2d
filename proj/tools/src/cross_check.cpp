#include "ncpb_tools/cross_check.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "ncpb/bundles.hpp"
#include "ncpb/cohomology.hpp"
#include "ncpb/crossed_products.hpp"
#include "ncpb/linear_algebra.hpp"
#include "ncpb_tools/catalog.hpp"

namespace ncpb::tools {

namespace {

// Seeds for the pseudo-random criteria.
constexpr std::uint32_t kSkolemNoetherSeed = 20240611;
constexpr std::uint32_t kObstructionSeed = 977;

struct Refused : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Ctx {
  const CrossCheckOptions& options;
  CriterionResult& result;

  void expect(bool ok, const std::string& what) {
    if (ok) {
      result.transcript.push_back(what);
    } else {
      result.transcript.push_back("FAILED: " + what);
      if (result.status == Status::pass) {
        result.status = Status::fail;
        result.detail = what;
      }
    }
  }
  void expect(const Verdict& v, const std::string& what) {
    expect(v.ok, v.ok ? what : what + " (" + v.detail + ")");
  }
  void refuse_if(SearchStatus s, const std::string& what) {
    if (s == SearchStatus::refused) throw Refused(what + " refused by the enumeration budget");
  }
  std::uint64_t budget() const { return options.budget; }
};

std::string label(const FinAbGroup& g) { return g.to_string(); }

CycloMatrix mpow(const CycloMatrix& m, long long k) {
  CycloMatrix acc = CycloMatrix::identity(m.rows());
  for (long long i = 0; i < k; ++i) acc = acc * m;
  return acc;
}

// Clock and shift built here, independently of the library's example.
std::pair<CycloMatrix, CycloMatrix> clock_and_shift(long long n) {
  const auto un = static_cast<std::size_t>(n);
  CycloMatrix r(un, un), s(un, un);
  for (std::size_t j = 0; j < un; ++j) {
    r(j, j) = Cyclo::zeta(static_cast<unsigned long>(n), static_cast<long long>(j));
    s((j + 1) % un, j) = Cyclo(1);
  }
  return {r, s};
}

// omega as residues mod n, for a factor system over B = C with mu_n values.
std::optional<Cochain> scalar_residues(const FactorSystem& fs, long long n) {
  Cochain c{2, {}};
  for (const auto& u : fs.omega) {
    auto r = scalar_root(fs.action.algebra, u.value);
    if (!r || n % r->den() != 0) return std::nullopt;
    c.values.push_back(r->num() * (n / r->den()));
  }
  return c;
}

bool is_cocycle_trivial_action(const FinAbGroup& g, const Cochain& w, long long m) {
  const long long n = g.order();
  auto at = [&](long long a, long long b) { return w.values[static_cast<std::size_t>(a * n + b)]; };
  for (long long x = 0; x < n; ++x)
    for (long long y = 0; y < n; ++y)
      for (long long z = 0; z < n; ++z) {
        long long d = at(y, z) + at(x, g.add_index(y, z)) - at(g.add_index(x, y), z) - at(x, y);
        if (((d % m) + m) % m != 0) return false;
      }
  return true;
}

void criterion_1(Ctx& c) {
  const long long top = c.options.full ? 5 : 4;
  for (long long n = 2; n <= top; ++n) {
    const std::string tag = "n=" + std::to_string(n) + ": ";
    ClockShift cs = clock_shift_system(n);
    for (const auto& [name, ok] : cs.checks) c.expect(ok, tag + name);
    c.expect(cs.decomposition.dimensions().size() == static_cast<std::size_t>(n * n),
             tag + std::to_string(n * n) + " isotypic components");
    c.expect(cs.report.ok, tag + "certificate emitted");
    if (!cs.report.ok) continue;
    const auto& cert = *cs.report.certificate;
    auto [r, s] = clock_and_shift(n);
    c.expect(cert.witnesses.size() == 2 && cert.witnesses[0].value == matrix_element(r.conjugate_transpose()) &&
                 cert.witnesses[1].value == matrix_element(s),
             tag + "witnesses are R* and S");
    c.expect(verify_certificate(cs.system, cert), tag + "certificate re-verifies");
    if (n == 2) {
      CycloMatrix r2(2, 2), s2(2, 2);
      r2(0, 0) = 1;
      r2(1, 1) = -1;
      s2(0, 1) = 1;
      s2(1, 0) = 1;
      c.expect(cs.r == r2 && cs.s == s2 && cs.r * cs.s == Cyclo(-1) * (cs.s * cs.r), tag + "R = diag(1,-1), RS = -SR");
    }
  }
}

void criterion_2(Ctx& c) {
  for (long long n = 2; n <= 4; ++n) {
    const std::string tag = "n=" + std::to_string(n) + ": ";
    ClockShift cs = clock_shift_system(n);
    GradedModel model = graded_from_isotypic(cs.system, cs.decomposition);
    const StructureAlgebra& a = cs.system.algebra;
    const FinAbGroup& g = cs.system.group;
    const CycloVector rs = matrix_element(cs.r.conjugate_transpose()), ss = matrix_element(cs.s);
    const Cochain standard = clock_shift_cocycle(n);
    const CoeffModule mu = CoeffModule::mu(n, g);
    const CochainComplex cx(mu);
    const auto circle = h2_circle(g, n);
    c.expect(circle.factors == std::vector<long long>{n}, tag + "mu_n-classes in H^2(G, C^x) form C_n");
    const auto snf = h2_snf(g, n);
    c.expect(snf.factors == std::vector<long long>{n, n, n}, tag + "H^2(G, mu_n) = (Z/n)^3 by Smith normal form");
    const long long e1 = g.index_of(g.element({1, 0})), e2 = g.index_of(g.element({0, 1}));
    auto pairing = [&](const Cochain& w) {
      const long long sz = g.order();
      long long p = w.values[static_cast<std::size_t>(e2 * sz + e1)] - w.values[static_cast<std::size_t>(e1 * sz + e2)];
      return ((p % n) + n) % n;
    };
    c.expect(pairing(standard) == 1, tag + "standard bilinear cocycle pairs e_2 with e_1 to zeta");
    for (int order = 0; order < 2; ++order) {
      const std::string which = order == 0 ? "section (R*)^k S^l" : "section S^l (R*)^k";
      GradedSection sigma;
      for (long long idx = 0; idx < g.order(); ++idx) {
        const auto res = g.element_at(idx).residues;
        CycloVector x = order == 0 ? a.multiply(a.power(rs, res[0]), a.power(ss, res[1]))
                                   : a.multiply(a.power(ss, res[1]), a.power(rs, res[0]));
        sigma.push_back(Unit{model.to_graded.apply(x), model.to_graded.apply(*a.inverse(x))});
      }
      FactorSystem fs = extract_characteristic_class(model.graded, sigma);
      auto w = scalar_residues(fs, n);
      c.expect(w.has_value(), tag + which + ": omega takes values in mu_n");
      if (!w) continue;
      c.expect(pairing(*w) == 1, tag + which + ": commutator pairing is zeta, so the class has order n");
      Cochain diff = cx.add(*w, cx.neg(standard));
      auto h = class_is_trivial(mu, diff, c.budget());
      c.expect(h.has_value() && cx.coboundary(*h) == diff,
               tag + which + ": explicit coboundary to the standard bilinear cocycle");
    }
  }
}

void criterion_3(Ctx& c) {
  std::vector<FinAbGroup> groups{FinAbGroup({2}), FinAbGroup({3}), FinAbGroup({4}), FinAbGroup({2, 2}),
                                 FinAbGroup({2, 4})};
  if (c.options.full) groups.push_back(FinAbGroup({3, 3}));
  for (const auto& g : groups)
    for (long long m = 2; m <= 6; ++m) {
      const std::string tag = "H^2(" + label(g) + ", mu_" + std::to_string(m) + ")";
      const CoeffModule mu = CoeffModule::mu(m, g);
      const auto bf = h2_bruteforce(mu, c.budget());
      const auto snf = h2_snf(g, m);
      const auto st = h2_twisted_structural(mu);
      std::ostringstream os;
      for (auto f : bf.factors) os << ' ' << f;
      c.expect(bf.factors == snf.factors && snf.factors == st.factors, tag + ": three methods agree on [" + os.str() + " ]");
      // |H^2| = prod gcd(n_i, m) * prod_{i<j} gcd(n_i, n_j, m)
      long long expected = 1;
      const auto& o = g.orders();
      for (std::size_t i = 0; i < o.size(); ++i) {
        expected *= std::gcd(o[i], m);
        for (std::size_t j = i + 1; j < o.size(); ++j) expected *= std::gcd(std::gcd(o[i], o[j]), m);
      }
      c.expect(bf.order() == expected, tag + ": order " + std::to_string(expected));
      if (g.rank() == 1) {
        const long long d = std::gcd(o[0], m);
        c.expect(bf.factors == (d > 1 ? std::vector<long long>{d} : std::vector<long long>{}),
                 tag + " = Z/gcd(n, m)");
      }
    }
}

UnitCochain related_cochain(const FactorSystem& fs) {
  const StructureAlgebra& b = fs.action.algebra;
  const FinAbGroup& g = fs.action.group;
  UnitCochain h{one_unit(b)};
  const std::size_t d = b.dim();
  const auto m = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(d))));
  for (long long x = 1; x < g.order(); ++x) {
    if (d == 1) {
      h.push_back(make_unit(b, b.scalar(Cyclo(x + 1) * Cyclo::zeta(static_cast<unsigned long>(2 * g.order()), x))));
    } else {
      CycloMatrix u = CycloMatrix::identity(m);
      u(0, 0) = Cyclo(x + 1);
      u(0, m - 1) = Cyclo(x);
      h.push_back(make_unit(b, matrix_element(u)));
    }
  }
  return h;
}

void criterion_4(Ctx& c) {
  for (const auto& entry : catalog_factor_systems()) {
    const FactorSystem& fs = *entry.factor_system;
    GradedAlgebra cp = build_crossed_product(fs);
    c.expect(extract_characteristic_class(cp, table_section(cp)) == fs, entry.name + ": extract o build is the identity");
    UnitCochain h = related_cochain(fs);
    FactorSystem primed = act_unit_cochain(h, fs);
    c.expect(validate_factor_system(primed), entry.name + ": h.(S, omega) validates");
    GradedEquivalence eq = build_equivalence(primed, fs, h);
    c.expect(eq.verdict, entry.name + ": b v_g -> b h(g) v_g is a graded isomorphism");
  }
}

void criterion_5(Ctx& c) {
  const long long m = 6;
  for (long long n : {2LL, 3LL}) {
    const FinAbGroup g({n});
    const std::string tag = "C" + std::to_string(n) + ": ";
    const auto free_slots = static_cast<std::size_t>((n - 1) * (n - 1));
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < free_slots; ++i) total *= static_cast<std::uint64_t>(m);
    if (total > c.budget()) throw Refused(tag + std::to_string(total) + " cochains exceed the budget");
    const OuterAction s = trivial_outer_action(g, scalar_algebra());
    std::uint64_t cocycles = 0, mismatches = 0;
    std::vector<long long> digits(free_slots, 0);
    for (std::uint64_t k = 0; k < total; ++k) {
      Cochain w{2, std::vector<long long>(static_cast<std::size_t>(n * n), 0)};
      std::size_t slot = 0;
      for (long long x = 1; x < n; ++x)
        for (long long y = 1; y < n; ++y) w.values[static_cast<std::size_t>(x * n + y)] = digits[slot++];
      const bool cocycle = is_cocycle_trivial_action(g, w, m);
      const bool assoc = verify_algebra(crossed_product_algebra(scalar_factor_system(s, w, m))).ok;
      if (cocycle) ++cocycles;
      if (cocycle != assoc) ++mismatches;
      for (std::size_t i = 0; i < free_slots && ++digits[i] == m; ++i) digits[i] = 0;
    }
    c.expect(mismatches == 0, tag + "associativity holds exactly for the cocycles among " + std::to_string(total) +
                                  " normalized cochains");
    const auto bf = h2_bruteforce(CoeffModule::mu(m, g), c.budget());
    c.expect(bf.cocycles == cocycles, tag + std::to_string(cocycles) + " cocycles, matching the enumeration");
  }
}

void criterion_6(Ctx& c) {
  const FinAbGroup g({2});
  const StructureAlgebra m2 = matrix_algebra(2);
  const OuterAction id = trivial_outer_action(g, m2);
  const FactorSystem base = trivial_factor_system(id);
  std::mt19937 rng(kSkolemNoetherSeed);
  std::uniform_int_distribution<int> entry(-3, 3);
  CycloMatrix d(2, 2);
  d(0, 0) = 1;
  d(1, 1) = -1;
  for (int trial = 1; trial <= 10; ++trial) {
    const std::string tag = "trial " + std::to_string(trial) + ": ";
    CycloMatrix p(2, 2);
    std::optional<CycloMatrix> pinv;
    while (!pinv) {
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) p(i, j) = Cyclo(static_cast<long long>(entry(rng)));
      pinv = matrix_det_inverse(p).inverse;
    }
    const CycloVector u = matrix_element(p * d * *pinv);
    const OuterAction s = homomorphic_action(g, m2, std::vector<CycloMatrix>{conjugation_by_unit(m2, u).matrix});
    KernelEquivalence ke = kernel_equivalent(id, s, 0, c.budget());
    c.refuse_if(ke.status, tag + "kernel search");
    c.expect(ke.status == SearchStatus::found, tag + "S is equivalent to the trivial kernel");
    if (ke.status != SearchStatus::found) continue;
    c.expect(conjugation_by_unit(m2, ke.corrected[1].value) == s.at(1), tag + "S(g) = conjugation by h(g)");
    GradedEquivalence eq = build_equivalence(trivial_factor_system(s), base, ke.corrected);
    c.expect(eq.verdict, tag + "A_S is isomorphic to M_2[C_2] as a graded algebra");
  }
}

void criterion_7(Ctx& c) {
  const FinAbGroup g({2});
  const FactorSystem fs =
      scalar_factor_system(trivial_outer_action(g, scalar_algebra()), Cochain{2, {0, 0, 0, 1}}, 2);
  c.expect(validate_factor_system(fs), "omega(g, g) = -1 is a factor system");
  const GradedAlgebra cp = build_crossed_product(fs);
  const DynamicalSystem ds = dual_action(cp);
  const IsotypicDecomposition dec = fourier_decompose(ds);
  const StructureAlgebra& a = cp.algebra;
  const CycloVector v = cp.units[1]->value;
  const CycloVector minus_one = a.scalar(Cyclo(-1));
  c.expect(a.multiply(v, v) == minus_one && a.multiply(Cyclo(-1) * v, Cyclo(-1) * v) == minus_one,
           "(+v_g)^2 = (-v_g)^2 = -1");
  CertifyOptions mu2;
  mu2.torsion_order = 2;
  mu2.candidates = {v};
  mu2.budget = c.budget();
  CertifyReport r2 = certify_trivial(ds, dec, mu2);
  c.expect(!r2.ok && r2.failures.size() == 1, "certification over mu_2 fails");
  c.expect(!restrict_and_test_split(fs, 0, 2, {}, c.budget()).split, "restriction to C_2 does not split over mu_2");

  const Cochain w4{2, {0, 0, 0, 2}};
  const CoeffModule mu4 = CoeffModule::mu(4, g);
  auto h = class_is_trivial(mu4, w4, c.budget());
  c.expect(h.has_value() && CochainComplex(mu4).coboundary(*h) == w4, "over mu_4 the class is a coboundary");
  const CycloVector b = a.scalar(Cyclo::zeta(4));
  CentralNormalization cn = central_normalize(ds, dec, 0, v, b);
  c.expect(cn.witness.value == Cyclo::zeta(4, -1) * v, "central_normalize(v_g, i) = -i v_g");
  CertifyOptions mu4opt;
  mu4opt.witnesses = {cn.witness.value};
  CertifyReport r4 = certify_trivial(ds, dec, mu4opt);
  c.expect(r4.ok, "certification succeeds with the normalized witness");
  if (r4.ok) c.expect(verify_certificate(ds, *r4.certificate), "certificate re-verifies");
  c.expect(restrict_and_test_split(fs, 0, 4, {}, c.budget()).split, "restriction to C_2 splits over mu_4");
}

void criterion_8(Ctx& c) {
  for (long long n = 2; n <= 3; ++n) {
    const std::string tag = "n=" + std::to_string(n) + ": ";
    const FinAbGroup g({n, n});
    TwistedConvolution tc = build_twisted_convolution(scalar_algebra(), g, clock_shift_cocycle(n), n);
    const StructureAlgebra m = matrix_algebra(static_cast<std::size_t>(n));
    auto [r, s] = clock_and_shift(n);
    const CycloMatrix rstar = r.conjugate_transpose();
    std::vector<CycloVector> cols;
    for (long long idx = 0; idx < g.order(); ++idx) {
      const auto res = g.element_at(idx).residues;
      cols.push_back(matrix_element(mpow(rstar, res[0]) * mpow(s, res[1])));
    }
    const CycloMatrix w = CycloMatrix::from_columns(cols, m.dim());
    c.expect(verify_algebra(tc.graded.algebra), tag + "twisted convolution algebra verifies");
    c.expect(verify_morphism(tc.graded.algebra, m, w), tag + "delta_(k,l) -> (R*)^k S^l is multiplicative and unital");
    c.expect(rank(w) == m.dim(), tag + "the map is bijective");
    c.expect(tc.graded.algebra.has_involution() && static_cast<bool>(verify_star_preserving(tc.graded.algebra, m, w)),
             tag + "the map is a *-isomorphism");
  }
}

DynamicalSystem translation_system(const FinAbGroup& lam, int sheets) {
  const long long n = lam.order();
  std::vector<std::string> points;
  for (int s = 0; s < sheets; ++s)
    for (long long x = 0; x < n; ++x) {
      std::string p = "s" + std::to_string(s) + ":";
      for (auto r : lam.element_at(x).residues) p += std::to_string(r);
      points.push_back(p);
    }
  const auto dim = static_cast<std::size_t>(sheets * n);
  std::vector<CycloMatrix> gens;
  for (const auto& e : canonical_generators(lam).first) {
    CycloMatrix t(dim, dim);
    for (int s = 0; s < sheets; ++s)
      for (long long x = 0; x < n; ++x) {
        const long long y = lam.index_of(lam.sub(lam.element_at(x), e));
        t(static_cast<std::size_t>(s * n + y), static_cast<std::size_t>(s * n + x)) = Cyclo(1);
      }
    gens.push_back(t);
  }
  return make_dynamical_system(function_algebra(points), lam, gens);
}

void criterion_9(Ctx& c) {
  for (const auto& lam : {FinAbGroup({2}), FinAbGroup({2, 2}), FinAbGroup({4})}) {
    const std::string tag = label(lam) + " on two sheets: ";
    DynamicalSystem ds = translation_system(lam, 2);
    IsotypicDecomposition dec = fourier_decompose(ds);
    CertifyReport rep = certify_trivial(ds, dec);
    c.expect(rep.ok, tag + "certified trivial" + (rep.ok ? "" : " (" + rep.failures.front() + ")"));
    if (!rep.ok) continue;
    SpectrumAction sa = spectrum_action(ds);
    c.expect(sa.free, tag + "action on the spectrum is free");
    c.expect(sa.orbit_count == 2, tag + "two orbits");
    CoveringTrivialization cov = trivialize_covering(ds, sa, *rep.certificate);
    c.expect(cov.verdict, tag + "equivariant bijection X -> X/Lambda x Lambda");
    std::vector<std::pair<std::size_t, GroupElement>> images;
    for (std::size_t x = 0; x < cov.orbit_of.size(); ++x) {
      std::pair<std::size_t, GroupElement> img{cov.orbit_of[x], cov.fiber[x]};
      c.expect(std::find(images.begin(), images.end(), img) == images.end(),
               tag + "point " + std::to_string(x) + " has a distinct image");
      images.push_back(img);
    }
    TrivialityCertificate bad = *rep.certificate;
    bad.witnesses[0].value = Cyclo(2) * bad.witnesses[0].value;
    bad.witnesses[0].inverse = Cyclo(Rational(1, 2)) * bad.witnesses[0].inverse;
    c.expect(!trivialize_covering(ds, sa, bad).verdict.ok, tag + "witness rescaled by 2 is rejected");
  }
  {
    // C_2 swapping two points and fixing a third.
    CycloMatrix swap(3, 3);
    swap(1, 0) = 1;
    swap(0, 1) = 1;
    swap(2, 2) = 1;
    DynamicalSystem ds = make_dynamical_system(function_algebra({"p", "q", "r"}), FinAbGroup({2}), {swap});
    IsotypicDecomposition dec = fourier_decompose(ds);
    c.expect(!certify_trivial(ds, dec).ok, "swap with a fixed point: certification fails");
    SpectrumAction sa = spectrum_action(ds);
    c.expect(!sa.free && sa.fixed_point.has_value(), "swap with a fixed point: fixed point reported");
  }
  {
    DynamicalSystem ds = translation_system(FinAbGroup({2}), 1);
    ds = make_dynamical_system(ds.algebra, ds.group, {CycloMatrix::identity(2)});
    IsotypicDecomposition dec = fourier_decompose(ds);
    c.expect(dec.component(1).empty() && !certify_trivial(ds, dec).ok, "trivial action: A_1 = 0 and no witness");
    SpectrumAction sa = spectrum_action(ds);
    c.expect(!sa.free && sa.fixed_point.has_value(), "trivial action: fixed point reported");
  }
}

void criterion_10(Ctx& c) {
  for (const auto& entry : catalog_factor_systems()) {
    const FactorSystem& fs = *entry.factor_system;
    Obstruction with = nu_obstruction(fs.action, fs.omega, 0, c.budget());
    c.refuse_if(with.status, entry.name);
    c.expect(with.status == SearchStatus::found && with.corrected && validate_factor_system(*with.corrected).ok,
             entry.name + ": nu trivial with the given omega, corrected omega validates");
    Obstruction without = nu_obstruction(fs.action, std::nullopt, 0, c.budget());
    c.refuse_if(without.status, entry.name);
    c.expect(without.status == SearchStatus::found && without.corrected &&
                 validate_factor_system(*without.corrected).ok,
             entry.name + ": nu trivial with a constructed omega");
  }
  const StructureAlgebra m2 = matrix_algebra(2);
  std::mt19937 rng(kObstructionSeed);
  std::uniform_int_distribution<int> entry(-2, 2);
  const long long nn = 4;
  for (const auto& g : {FinAbGroup({2}), FinAbGroup({3}), FinAbGroup({2, 2})}) {
    const std::string tag = "M_2 over " + label(g) + ": ";
    const long long n = g.order();
    std::vector<Unit> u{one_unit(m2)};
    std::vector<CycloMatrix> table{AlgebraMap::identity(m2.dim()).matrix};
    while (static_cast<long long>(u.size()) < n) {
      CycloMatrix p(2, 2);
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) p(i, j) = Cyclo(static_cast<long long>(entry(rng)));
      if (!matrix_det_inverse(p).inverse) continue;
      u.push_back(make_unit(m2, matrix_element(p)));
      table.push_back(conjugation_by_unit(m2, u.back().value).matrix);
    }
    const OuterAction s = outer_action_from_table(g, m2, table);
    c.expect(verify_outer_action(s), tag + "table of inner automorphisms");
    Cochain k{2, std::vector<long long>(static_cast<std::size_t>(n * n), 0)};
    for (long long x = 1; x < n; ++x)
      for (long long y = 1; y < n; ++y) k.values[static_cast<std::size_t>(x * n + y)] = static_cast<long long>(rng() % nn);
    FactorSystem fs{s, {}};
    for (long long x = 0; x < n; ++x)
      for (long long y = 0; y < n; ++y) {
        CycloVector w = m2.multiply(m2.multiply(u[x].value, u[y].value), u[g.add_index(x, y)].inverse);
        w = Cyclo::zeta(static_cast<unsigned long>(nn), k.values[static_cast<std::size_t>(x * n + y)]) * w;
        fs.omega.push_back(make_unit(m2, w));
      }
    c.expect(validate_compatible_pair(fs), tag + "delta_S = C o omega");
    Obstruction ob = nu_obstruction(s, fs.omega, nn, c.budget());
    c.refuse_if(ob.status, tag + "degree-3 coboundary search");
    const CochainComplex cx(CoeffModule::mu(nn, g));
    c.expect(ob.values.has_value() && *ob.values == cx.coboundary(k), tag + "d_S omega = d k for the random twist k");
    c.expect(ob.status == SearchStatus::found && ob.corrected && validate_factor_system(*ob.corrected).ok,
             tag + "coboundary found, corrected omega validates");
    Obstruction inner = nu_obstruction(s, std::nullopt, 0, c.budget());
    c.refuse_if(inner.status, tag + "inner witness search");
    c.expect(inner.status == SearchStatus::found && inner.corrected && validate_factor_system(*inner.corrected).ok,
             tag + "nu trivial from inner witnesses");
  }
}

struct Definition {
  const char* title;
  double limit;
  void (*run)(Ctx&);
};

const Definition kDefinitions[kCriterionCount] = {
    {"clock-shift reproduction", 10, criterion_1},
    {"characteristic class of the clock-shift bundle", 30, criterion_2},
    {"cohomology triple agreement", 300, criterion_3},
    {"classification round trip", 60, criterion_4},
    {"associativity iff cocycle", 60, criterion_5},
    {"Skolem-Noether singleton", 60, criterion_6},
    {"non-split detector", 1, criterion_7},
    {"twisted group algebra is a matrix algebra", 10, criterion_8},
    {"finite covering trivialization", 10, criterion_9},
    {"obstruction consistency", 120, criterion_10},
};

}  // namespace

const char* status_name(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::refused:
      return "refused";
  }
  return "fail";
}

CriterionResult run_criterion(int id, const CrossCheckOptions& options) {
  if (id < 1 || id > kCriterionCount) throw std::out_of_range("criterion " + std::to_string(id));
  const Definition& def = kDefinitions[id - 1];
  CriterionResult result;
  result.id = id;
  result.title = def.title;
  result.status = Status::pass;
  result.limit_seconds = def.limit;
  Ctx ctx{options, result};
  const auto t0 = std::chrono::steady_clock::now();
  try {
    def.run(ctx);
  } catch (const BudgetExceeded& e) {
    result.status = Status::refused;
    result.detail = e.what();
  } catch (const Refused& e) {
    result.status = Status::refused;
    result.detail = e.what();
  } catch (const std::exception& e) {
    result.status = Status::fail;
    result.detail = std::string("error: ") + e.what();
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return result;
}

std::vector<CriterionResult> run_cross_check(const CrossCheckOptions& options) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, options));
  return out;
}

Json cross_check_json(const std::vector<CriterionResult>& results) {
  Json out = Json::array();
  for (const auto& r : results) {
    Json j{{"id", r.id}, {"title", r.title}, {"status", status_name(r.status)}, {"checks", r.transcript.size()}};
    if (!r.detail.empty()) j["detail"] = r.detail;
    out.push_back(j);
  }
  return out;
}

}  // namespace ncpb::tools
