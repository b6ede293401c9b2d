#include "ncpb/bundles.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "ncpb/linear_algebra.hpp"

namespace ncpb {

namespace {

std::optional<Cyclo> scalar_value(const StructureAlgebra& a, const CycloVector& x) {
  const CycloVector& one = a.unit();
  for (std::size_t i = 0; i < one.size(); ++i) {
    if (one[i].is_zero()) continue;
    Cyclo c = x[i] / one[i];
    if (!(c * one == x)) return std::nullopt;
    return c;
  }
  return std::nullopt;
}

std::string residues_label(const std::vector<long long>& r) {
  std::string s = "(";
  for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
  return s + ")";
}

std::string format_element(const StructureAlgebra& a, const CycloVector& x) {
  std::string out;
  for (const auto& [i, c] : to_sparse(x)) {
    if (!out.empty()) out += " + ";
    out += c.is_one() ? a.labels()[i] : "(" + c.to_string() + ")*" + a.labels()[i];
  }
  return out.empty() ? "0" : out;
}

Cyclo character_value(const FinAbGroup& g, const Character& c, const GroupElement& l) {
  return Cyclo::from_root(dual_pairing(g, c, l), static_cast<unsigned long>(g.exponent()));
}

// alpha(lambda)(x) = phi(lambda) x for every lambda.
bool is_eigenvector(const DynamicalSystem& ds, const Character& phi, const CycloVector& x) {
  for (long long l = 0; l < ds.group.order(); ++l)
    if (!(ds.at(l).apply(x) == character_value(ds.group, phi, ds.group.element_at(l)) * x)) return false;
  return true;
}

std::string power_description(const StructureAlgebra& a, const CycloVector& p, long long n) {
  if (auto r = scalar_root(a, p)) return "a^" + std::to_string(n) + " = zeta(" + r->to_string() + ")";
  return "a^" + std::to_string(n) + " = " + format_element(a, p);
}

}  // namespace

std::vector<std::size_t> IsotypicDecomposition::dimensions() const {
  std::vector<std::size_t> out;
  for (const auto& b : bases) out.push_back(b.size());
  return out;
}

IsotypicDecomposition fourier_decompose(const DynamicalSystem& ds, unsigned long conductor) {
  const auto& g = ds.group;
  const auto e = static_cast<unsigned long>(g.exponent());
  if (conductor == 0) {
    conductor = lcm_conductor(e, ds.algebra.conductor());
  } else if (conductor % e != 0) {
    throw DomainError("conductor " + std::to_string(conductor) + " is not a multiple of the group exponent " +
                      std::to_string(e));
  }
  const std::size_t d = ds.algebra.dim();
  const Cyclo scale(Rational(1, static_cast<unsigned long>(g.order())));
  IsotypicDecomposition dec;
  dec.conductor = conductor;
  const auto elements = g.elements();
  for (long long phi = 0; phi < g.order(); ++phi) {
    Character c{elements[static_cast<std::size_t>(phi)].residues};
    CycloMatrix p(d, d);
    for (long long l = 0; l < g.order(); ++l)
      p += character_value(g, c, elements[static_cast<std::size_t>(l)]).conjugate() * ds.at(l).matrix;
    p = scale * p;
    dec.bases.push_back(column_space_basis(p));
    dec.projections.push_back(std::move(p));
  }
  return dec;
}

Verdict verify_decomposition(const DynamicalSystem& ds, const IsotypicDecomposition& dec) {
  const auto& g = ds.group;
  const auto& a = ds.algebra;
  const auto n = static_cast<std::size_t>(g.order());
  if (dec.projections.size() != n || dec.bases.size() != n) return Verdict::fail("one component per character is required");
  std::size_t total = 0;
  for (const auto& b : dec.bases) total += b.size();
  if (total != a.dim()) return Verdict::fail("component dimensions do not add up to dim A");
  CycloMatrix sum(a.dim(), a.dim());
  for (const auto& p : dec.projections) sum += p;
  if (!(sum == CycloMatrix::identity(a.dim()))) return Verdict::fail("projections do not sum to the identity");
  for (std::size_t phi = 0; phi < n; ++phi)
    for (std::size_t psi = 0; psi < n; ++psi)
      for (const auto& v : dec.bases[psi]) {
        CycloVector img = dec.projections[phi].apply(v);
        if (phi == psi ? !(img == v) : !is_zero(img))
          return Verdict::fail(phi == psi ? "projection does not fix its component" : "projections are not orthogonal",
                               {phi, psi});
      }
  for (std::size_t phi = 0; phi < n; ++phi)
    for (std::size_t psi = 0; psi < n; ++psi) {
      const auto target = static_cast<std::size_t>(g.add_index(static_cast<long long>(phi), static_cast<long long>(psi)));
      for (const auto& x : dec.bases[phi])
        for (const auto& y : dec.bases[psi]) {
          CycloVector xy = a.multiply(x, y);
          if (!(dec.projections[target].apply(xy) == xy))
            return Verdict::fail("A_phi A_psi is not contained in A_{phi+psi}", {phi, psi});
        }
    }
  return Verdict::pass();
}

CertifyReport certify_trivial(const DynamicalSystem& ds, const IsotypicDecomposition& dec,
                              const CertifyOptions& options) {
  const auto& g = ds.group;
  const auto& a = ds.algebra;
  const auto [gens, chars] = canonical_generators(g);
  const long long nn = options.torsion_order > 0 ? options.torsion_order : g.exponent();
  CertifyReport report;
  TrivialityCertificate cert;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const long long ni = g.orders()[i];
    const long long gi = g.index_of(gens[i]);
    const auto& proj = dec.projections.at(static_cast<std::size_t>(gi));
    const std::string name = "a_" + std::to_string(i + 1);
    const std::string comp = "A" + residues_label(chars[i].residues);
    std::optional<Unit> found;
    std::string failure;

    auto accept = [&](const CycloVector& x) -> bool {
      if (!(proj.apply(x) == x) || !is_eigenvector(ds, chars[i], x)) {
        failure = name + " = " + format_element(a, x) + " is not in " + comp;
        return false;
      }
      auto inv = a.inverse(x);
      if (!inv) {
        failure = name + " = " + format_element(a, x) + " is not invertible";
        return false;
      }
      CycloVector p = a.power(x, ni);
      if (!(p == a.unit())) {
        failure = name + " = " + format_element(a, x) + ": " + power_description(a, p, ni) + " != 1";
        return false;
      }
      found = Unit{x, *inv};
      return true;
    };

    const bool supplied = i < options.witnesses.size() && options.witnesses[i].has_value();
    if (supplied) {
      accept(*options.witnesses[i]);
    } else {
      std::vector<CycloVector> pool;
      auto add = [&](const CycloVector& c) {
        if (std::find(pool.begin(), pool.end(), c) == pool.end()) pool.push_back(c);
      };
      for (const auto& c : options.candidates)
        if (proj.apply(c) == c) add(c);
      for (const auto& c : dec.bases.at(static_cast<std::size_t>(gi))) add(c);
      try {
        auto search = find_unit_in_subspace(a, dec.bases.at(static_cast<std::size_t>(gi)), pool, options.budget);
        if (search.unit) add(search.unit->first);
      } catch (const BudgetExceeded&) {
      }
      std::vector<std::string> tried;
      for (CycloVector c : pool) {
        if (!a.is_unit(c)) continue;
        CycloVector p = a.power(c, ni);
        auto r = scalar_root(a, p);
        if (!r) {
          // c^n = q zeta 1 with q a rational n-th power: rescale c by q^{-1/n}
          if (auto s = scalar_value(a, p))
            if (auto q = positive_rational_part(*s))
              if (auto t = rational_root(*q, ni)) {
                c = Cyclo(Rational(1) / *t) * c;
                p = a.power(c, ni);
                r = scalar_root(a, p);
              }
        }
        tried.push_back(format_element(a, c) + ": " + power_description(a, p, ni));
        if (!r) continue;
        for (long long j = 0; j < nn && !found; ++j) {
          // (zeta_N^j c)^n = zeta_N^{j n} r
          if (combine(RootOfUnity(j * ni, nn), *r).is_identity()) accept(Cyclo::zeta(static_cast<unsigned long>(nn), j) * c);
        }
        if (found) break;
      }
      if (!found) {
        failure = "no unit of order dividing " + std::to_string(ni) + " in " + comp + " among mu_" +
                  std::to_string(nn) + " multiples of the candidates";
        for (const auto& t : tried) failure += "; " + t;
      }
    }
    if (found) {
      report.transcript.push_back(name + " = " + format_element(a, found->value) + " lies in " + comp);
      report.transcript.push_back(name + " is invertible");
      report.transcript.push_back(name + "^" + std::to_string(ni) + " = 1");
      cert.generators.push_back(gens[i]);
      cert.characters.push_back(chars[i]);
      cert.orders.push_back(ni);
      cert.witnesses.push_back(*found);
    } else {
      report.failures.push_back("generator " + residues_label(gens[i].residues) + ": " + failure);
    }
  }
  report.ok = report.failures.empty();
  if (report.ok) {
    cert.transcript = report.transcript;
    report.certificate = std::move(cert);
  }
  return report;
}

Verdict verify_certificate(const DynamicalSystem& ds, const TrivialityCertificate& cert) {
  const auto& a = ds.algebra;
  const std::size_t k = cert.witnesses.size();
  if (cert.generators.size() != k || cert.characters.size() != k || cert.orders.size() != k)
    return Verdict::fail("certificate fields have different lengths");
  const auto [gens, chars] = canonical_generators(ds.group);
  if (cert.generators != gens || cert.characters != chars)
    return Verdict::fail("certificate is not relative to the standard generators");
  for (std::size_t i = 0; i < k; ++i) {
    const Unit& u = cert.witnesses[i];
    if (cert.orders[i] != ds.group.orders()[i]) return Verdict::fail("wrong generator order", {i});
    if (!is_eigenvector(ds, cert.characters[i], u.value)) return Verdict::fail("witness is not in its isotypic component", {i});
    if (!(a.multiply(u.value, u.inverse) == a.unit()) || !(a.multiply(u.inverse, u.value) == a.unit()))
      return Verdict::fail("witness has a wrong inverse", {i});
    if (!(a.power(u.value, cert.orders[i]) == a.unit())) return Verdict::fail("witness power is not 1", {i});
  }
  return Verdict::pass();
}

SplitWitness split_witness(const DynamicalSystem& ds, const TrivialityCertificate& cert) {
  if (auto v = verify_certificate(ds, cert); !v) throw DomainError("invalid certificate: " + v.detail);
  const auto& a = ds.algebra;
  SplitWitness out{cert.generators, {}};
  for (std::size_t i = 0; i < cert.witnesses.size(); ++i) {
    std::vector<Unit> powers{Unit{a.unit(), a.unit()}};
    for (long long l = 1; l < cert.orders[i]; ++l) {
      const Unit& prev = powers.back();
      powers.push_back(Unit{a.multiply(prev.value, cert.witnesses[i].value), a.multiply(cert.witnesses[i].inverse, prev.inverse)});
    }
    out.sections.push_back(std::move(powers));
  }
  if (auto v = verify_split_witness(ds, out); !v) throw Error("split witness failed verification: " + v.detail);
  return out;
}

Verdict verify_split_witness(const DynamicalSystem& ds, const SplitWitness& split) {
  const auto& g = ds.group;
  const auto& a = ds.algebra;
  const auto [gens, chars] = canonical_generators(g);
  if (split.generators != gens || split.sections.size() != gens.size())
    return Verdict::fail("split witness is not relative to the standard generators");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto& sec = split.sections[i];
    const auto ni = static_cast<std::size_t>(g.orders()[i]);
    if (sec.size() != ni) return Verdict::fail("section has the wrong length", {i});
    if (!(sec[0].value == a.unit())) return Verdict::fail("section is not normalized", {i});
    for (std::size_t l = 0; l < ni; ++l) {
      Character c{g.scale(static_cast<long long>(l), GroupElement{chars[i].residues}).residues};
      if (!is_eigenvector(ds, c, sec[l].value)) return Verdict::fail("section value has the wrong degree", {i, l});
      if (!(a.multiply(sec[l].value, sec[l].inverse) == a.unit())) return Verdict::fail("section value has a wrong inverse", {i, l});
      for (std::size_t m = 0; m < ni; ++m)
        if (!(a.multiply(sec[l].value, sec[m].value) == sec[(l + m) % ni].value))
          return Verdict::fail("sigma(l) sigma(m) != sigma(l + m)", {i, l, m});
    }
  }
  return Verdict::pass();
}

TrivialityCertificate certificate_from_split(const DynamicalSystem& ds, const SplitWitness& split) {
  if (auto v = verify_split_witness(ds, split); !v) throw DomainError("invalid split witness: " + v.detail);
  const auto [gens, chars] = canonical_generators(ds.group);
  TrivialityCertificate cert{gens, chars, ds.group.orders(), {}, {}};
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto& sec = split.sections[i];
    cert.witnesses.push_back(sec.size() > 1 ? sec[1] : sec[0]);
    cert.transcript.push_back("a_" + std::to_string(i + 1) + " = sigma_" + std::to_string(i + 1) + "(1)");
  }
  if (auto v = verify_certificate(ds, cert); !v) throw Error("recovered certificate failed verification: " + v.detail);
  return cert;
}

CentralNormalization central_normalize(const DynamicalSystem& ds, const IsotypicDecomposition& dec, std::size_t i,
                                       const CycloVector& a, const CycloVector& b) {
  const auto& alg = ds.algebra;
  const auto& g = ds.group;
  if (i >= g.rank()) throw DomainError("generator index out of range");
  for (const auto& v : dec.component(0))
    if (!alg.is_central(v)) throw DomainError("the fixed-point algebra is not central in A");
  const auto [gens, chars] = canonical_generators(g);
  if (!is_eigenvector(ds, chars[i], a)) throw DomainError("a is not in the isotypic component of the generator");
  if (!is_eigenvector(ds, Character{g.identity().residues}, b)) throw DomainError("b is not in the fixed-point algebra");
  const long long n = g.orders()[i];
  auto ainv = alg.inverse(a);
  auto binv = alg.inverse(b);
  if (!ainv || !binv) throw DomainError("a and b must be units");
  if (!(alg.power(a, n) == alg.power(b, n))) throw DomainError("a^n != b^n");
  CentralNormalization out{Unit{alg.multiply(a, *binv), alg.multiply(b, *ainv)}, {}, {}};
  for (long long k = 0; k < n; ++k) {
    out.a_powers.push_back(alg.power(a, k));
    out.b_powers.push_back(alg.power(b, k));
  }
  if (!(alg.power(out.witness.value, n) == alg.unit())) throw Error("(a b^{-1})^n != 1 despite a central b");
  return out;
}

SpectrumAction spectrum_action(const DynamicalSystem& ds, unsigned long conductor) {
  const auto& a = ds.algebra;
  if (!a.is_commutative()) throw DomainError("spectrum action needs a commutative algebra");
  conductor = lcm_conductor(conductor == 0 ? 1 : conductor, static_cast<unsigned long>(ds.group.exponent()));
  SpectrumAction out{spectrum(a, conductor), {}, true, std::nullopt, {}, 0};
  const auto& pts = out.spectrum.points;
  const std::size_t d = a.dim();
  for (long long l = 0; l < ds.group.order(); ++l) {
    const auto& m = ds.at(l).matrix;
    std::vector<std::size_t> row;
    for (std::size_t x = 0; x < pts.size(); ++x) {
      CycloVector moved(d);
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k)
          if (!m(k, j).is_zero() && !pts[x][k].is_zero()) moved[j] += pts[x][k] * m(k, j);
      std::size_t y = 0;
      while (y < pts.size() && !(pts[y] == moved)) ++y;
      if (y == pts.size()) throw Error("chi o alpha(lambda) is not a character");
      row.push_back(y);
      if (l != 0 && y == x && !out.fixed_point) {
        out.free = false;
        out.fixed_point = std::make_pair(x, l);
      }
    }
    out.table.push_back(std::move(row));
  }
  const std::size_t none = static_cast<std::size_t>(-1);
  out.orbit_of.assign(pts.size(), none);
  for (std::size_t x = 0; x < pts.size(); ++x) {
    if (out.orbit_of[x] != none) continue;
    for (const auto& row : out.table) out.orbit_of[row[x]] = out.orbit_count;
    ++out.orbit_count;
  }
  return out;
}

CoveringTrivialization trivialize_covering(const DynamicalSystem& ds, const SpectrumAction& action,
                                           const TrivialityCertificate& cert) {
  const auto& g = ds.group;
  CoveringTrivialization out{action.orbit_of, {}, Verdict::pass()};
  if (auto v = verify_certificate(ds, cert); !v) {
    out.verdict = Verdict::fail("invalid certificate: " + v.detail);
    return out;
  }
  const auto& pts = action.spectrum.points;
  for (std::size_t x = 0; x < pts.size(); ++x) {
    std::vector<long long> r;
    for (std::size_t i = 0; i < cert.witnesses.size(); ++i) {
      const long long ni = cert.orders[i];
      auto root = action.spectrum.evaluate(x, cert.witnesses[i].value).as_root_of_unity();
      if (!root || ni % root->den() != 0) {
        out.verdict = Verdict::fail("f_" + std::to_string(i + 1) + " at point " + std::to_string(x) +
                                        " is not an " + std::to_string(ni) + "-th root of unity",
                                    {x, i});
        out.fiber.clear();
        return out;
      }
      r.push_back(root->num() * (ni / root->den()));
    }
    out.fiber.push_back(g.element(r));
  }
  std::set<std::pair<std::size_t, long long>> seen;
  for (std::size_t x = 0; x < pts.size(); ++x) seen.emplace(out.orbit_of[x], g.index_of(out.fiber[x]));
  if (seen.size() != pts.size() || pts.size() != action.orbit_count * static_cast<std::size_t>(g.order())) {
    out.verdict = Verdict::fail("x -> (orbit, f(x)) is not a bijection onto orbits x Lambda");
    return out;
  }
  for (long long l = 0; l < g.order(); ++l)
    for (std::size_t x = 0; x < pts.size(); ++x) {
      const std::size_t y = action.table[static_cast<std::size_t>(l)][x];
      if (!(out.fiber[y] == g.add(out.fiber[x], g.element_at(l))) || out.orbit_of[y] != out.orbit_of[x]) {
        out.verdict = Verdict::fail("equivariance fails at point " + std::to_string(x), {x, static_cast<std::size_t>(l)});
        return out;
      }
    }
  return out;
}

GradedModel graded_from_isotypic(const DynamicalSystem& ds, const IsotypicDecomposition& dec, std::uint64_t budget) {
  const auto& a = ds.algebra;
  const auto& g = ds.group;
  std::vector<CycloVector> cols;
  std::vector<long long> grading;
  std::vector<std::string> labels;
  for (long long phi = 0; phi < g.order(); ++phi) {
    const auto& basis = dec.component(phi);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      cols.push_back(basis[j]);
      grading.push_back(phi);
      labels.push_back("A" + residues_label(g.element_at(phi).residues) + "#" + std::to_string(j + 1));
    }
  }
  if (cols.size() != a.dim()) throw DomainError("isotypic components do not span A");
  CycloMatrix w = CycloMatrix::from_columns(cols, a.dim());
  auto di = matrix_det_inverse(w);
  if (!di.inverse) throw DomainError("isotypic bases are linearly dependent");
  GradedModel out{GradedAlgebra{change_basis(a, w, std::move(labels)), g, std::move(grading), {}}, *di.inverse, w};
  for (long long phi = 0; phi < g.order(); ++phi) {
    std::optional<Unit> u;
    const auto& basis = dec.component(phi);
    if (!basis.empty()) {
      try {
        auto search = find_unit_in_subspace(a, basis, basis, budget);
        if (search.unit)
          u = Unit{out.to_graded.apply(search.unit->first), out.to_graded.apply(search.unit->second)};
      } catch (const BudgetExceeded&) {
      }
    }
    out.graded.units.push_back(std::move(u));
  }
  if (auto v = verify_grading(out.graded); !v) throw Error("isotypic grading failed verification: " + v.detail);
  return out;
}

bool ClockShift::ok() const {
  for (const auto& [name, pass] : checks)
    if (!pass) return false;
  return report.ok;
}

ClockShift clock_shift_system(long long n) {
  if (n < 1) throw DomainError("clock-shift order must be positive");
  const auto un = static_cast<std::size_t>(n);
  const auto cond = static_cast<unsigned long>(n);
  ClockShift cs;
  cs.n = n;
  cs.r = CycloMatrix(un, un);
  cs.s = CycloMatrix(un, un);
  for (std::size_t j = 0; j < un; ++j) {
    cs.r(j, j) = Cyclo::zeta(cond, static_cast<long long>(j));
    cs.s((j + 1) % un, j) = Cyclo(1);
  }
  const auto id = CycloMatrix::identity(un);
  auto mpow = [&](const CycloMatrix& m, long long k) {
    CycloMatrix acc = id;
    for (long long i = 0; i < k; ++i) acc = acc * m;
    return acc;
  };
  const CycloMatrix rstar = cs.r.conjugate_transpose(), sstar = cs.s.conjugate_transpose();
  cs.checks.emplace_back("R R* = 1", cs.r * rstar == id);
  cs.checks.emplace_back("S S* = 1", cs.s * sstar == id);
  cs.checks.emplace_back("R^n = 1", mpow(cs.r, n) == id);
  cs.checks.emplace_back("S^n = 1", mpow(cs.s, n) == id);
  cs.checks.emplace_back("R S = zeta S R", cs.r * cs.s == Cyclo::zeta(cond) * (cs.s * cs.r));

  StructureAlgebra m = matrix_algebra(un);
  auto conj = [&](const CycloMatrix& u, const CycloMatrix& uinv) {
    return m.left_matrix(matrix_element(u)) * m.right_matrix(matrix_element(uinv));
  };
  cs.system = make_dynamical_system(m, FinAbGroup({n, n}), {conj(cs.s, sstar), conj(cs.r, rstar)});
  cs.checks.emplace_back("action is a homomorphism into Aut(M_n)", static_cast<bool>(verify_dynamical_system(cs.system)));
  cs.decomposition = fourier_decompose(cs.system, cond);
  cs.checks.emplace_back("isotypic decomposition verified", static_cast<bool>(verify_decomposition(cs.system, cs.decomposition)));
  const auto& fixed = cs.decomposition.component(0);
  cs.checks.emplace_back("fixed-point algebra is C 1",
                         fixed.size() == 1 && in_span(fixed, m.unit()));
  bool all_one = true;
  for (std::size_t dim : cs.decomposition.dimensions()) all_one = all_one && dim == 1;
  cs.checks.emplace_back("every isotypic component is one-dimensional", all_one);
  CertifyOptions opt;
  opt.witnesses = {matrix_element(rstar), matrix_element(cs.s)};
  cs.report = certify_trivial(cs.system, cs.decomposition, opt);
  return cs;
}

SplitTest restrict_and_test_split(const FactorSystem& fs, std::size_t i, long long torsion_order,
                                  const std::vector<CycloVector>& extra_candidates, std::uint64_t budget) {
  FactorSystem r = restrict_to_generator(fs, i);
  SplitTest out;
  out.restricted = build_crossed_product(r);
  DynamicalSystem ds = dual_action(out.restricted);
  IsotypicDecomposition dec = fourier_decompose(ds);
  const auto& b = r.action.algebra;
  const std::size_t d = b.dim();
  const long long ni = r.action.group.order();
  std::vector<CycloVector> units{b.unit()};
  for (std::size_t j = 0; j < d; ++j)
    if (b.is_unit(b.basis(j))) units.push_back(b.basis(j));
  for (const auto& c : extra_candidates) units.push_back(c);
  CertifyOptions opt;
  opt.torsion_order = torsion_order;
  opt.budget = budget;
  const std::size_t block = ni > 1 ? d : 0;
  for (const auto& u : units) {
    CycloVector x = out.restricted.algebra.zero();
    for (std::size_t k = 0; k < d; ++k) x[block + k] = u[k];
    opt.candidates.push_back(std::move(x));
  }
  out.report = certify_trivial(ds, dec, opt);
  out.split = out.report.ok;
  if (out.split) out.witness = out.report.certificate->witnesses.front();
  return out;
}

}  // namespace ncpb
