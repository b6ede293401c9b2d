#include "ncpb/crossed_products.hpp"

#include "ncpb/linear_algebra.hpp"

namespace ncpb {

namespace {

std::string element_label(const FinAbGroup& g, long long idx) {
  std::string s = "(";
  const auto r = g.element_at(idx).residues;
  for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
  return s + ")";
}

void place(CycloVector& target, std::size_t offset, const CycloVector& block) {
  for (std::size_t i = 0; i < block.size(); ++i) target[offset + i] = block[i];
}

bool unitary_values(const FactorSystem& fs) {
  const auto& b = fs.action.algebra;
  for (const auto& u : fs.omega)
    if (!(b.star(u.value) == u.inverse)) return false;
  return true;
}

std::optional<CycloMatrix> crossed_involution(const FactorSystem& fs) {
  const auto& b = fs.action.algebra;
  const auto& g = fs.action.group;
  if (!b.has_involution() || !unitary_values(fs)) return std::nullopt;
  for (const auto& m : fs.action.maps)
    if (!verify_star_preserving(b, b, m.matrix)) return std::nullopt;
  const std::size_t d = b.dim();
  const long long n = g.order();
  CycloMatrix j(d * static_cast<std::size_t>(n), d * static_cast<std::size_t>(n));
  for (long long x = 0; x < n; ++x) {
    const long long mx = g.neg_index(x);
    const Unit& w = fs.at(mx, x);
    for (std::size_t i = 0; i < d; ++i) {
      CycloVector img = b.multiply(w.inverse, fs.action.at(mx).apply(b.star(b.basis(i))));
      for (std::size_t k = 0; k < d; ++k) j(static_cast<std::size_t>(mx) * d + k, static_cast<std::size_t>(x) * d + i) = img[k];
    }
  }
  return j;
}

}  // namespace

std::vector<std::size_t> GradedAlgebra::component(long long g) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < grading.size(); ++j)
    if (grading[j] == g) out.push_back(j);
  return out;
}

StructureAlgebra GradedAlgebra::degree_zero() const { return basis_subalgebra(algebra, component(0)); }

CycloVector GradedAlgebra::to_degree_zero(const CycloVector& x) const {
  if (!is_homogeneous(x, 0)) throw DomainError("element is not of degree zero");
  CycloVector out;
  for (std::size_t j : component(0)) out.push_back(x[j]);
  return out;
}

CycloVector GradedAlgebra::from_degree_zero(const CycloVector& b) const {
  CycloVector out = algebra.zero();
  const auto comp = component(0);
  if (b.size() != comp.size()) throw DomainError("degree zero coordinates have the wrong length");
  for (std::size_t k = 0; k < comp.size(); ++k) out[comp[k]] = b[k];
  return out;
}

bool GradedAlgebra::is_homogeneous(const CycloVector& x, long long g) const {
  for (std::size_t j = 0; j < x.size(); ++j)
    if (grading[j] != g && !x[j].is_zero()) return false;
  return true;
}

Verdict verify_grading(const GradedAlgebra& a) {
  const std::size_t d = a.algebra.dim();
  if (a.grading.size() != d) return Verdict::fail("grading has the wrong length");
  for (std::size_t j = 0; j < d; ++j)
    if (a.grading[j] < 0 || a.grading[j] >= a.group.order()) return Verdict::fail("degree out of range", {j});
  if (!a.is_homogeneous(a.algebra.unit(), 0)) return Verdict::fail("unit is not of degree zero");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const long long target = a.group.add_index(a.grading[i], a.grading[j]);
      for (const auto& [k, c] : a.algebra.product(i, j))
        if (a.grading[k] != target && !c.is_zero())
          return Verdict::fail("product " + a.algebra.labels()[i] + " " + a.algebra.labels()[j] +
                                   " leaves the expected component",
                               {i, j});
    }
  if (a.units.size() != static_cast<std::size_t>(a.group.order())) return Verdict::fail("unit table has the wrong length");
  for (std::size_t g = 0; g < a.units.size(); ++g) {
    if (!a.units[g]) continue;
    const auto& u = *a.units[g];
    const auto lg = static_cast<long long>(g);
    if (!a.is_homogeneous(u.value, lg) || !a.is_homogeneous(u.inverse, a.group.neg_index(lg)))
      return Verdict::fail("homogeneous unit has the wrong degree", {g});
    if (!(a.algebra.multiply(u.value, u.inverse) == a.algebra.unit()) ||
        !(a.algebra.multiply(u.inverse, u.value) == a.algebra.unit()))
      return Verdict::fail("homogeneous unit has a wrong inverse", {g});
  }
  return Verdict::pass();
}

GradedSection table_section(const GradedAlgebra& a) {
  GradedSection s;
  for (std::size_t g = 0; g < a.units.size(); ++g) {
    if (!a.units[g]) throw DomainError("no certified unit in the component of degree " + element_label(a.group, static_cast<long long>(g)));
    s.push_back(*a.units[g]);
  }
  return s;
}

StructureAlgebra crossed_product_algebra(const FactorSystem& fs) {
  const auto& b = fs.action.algebra;
  const auto& g = fs.action.group;
  const std::size_t d = b.dim();
  const auto n = static_cast<std::size_t>(g.order());
  const std::size_t dim = d * n;
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t i = 0; i < d; ++i)
      labels.push_back(b.labels()[i] + "*v" + element_label(g, static_cast<long long>(x)));
  std::vector<SparseVector> products(dim * dim);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto lx = static_cast<long long>(x), ly = static_cast<long long>(y);
      const std::size_t xy = static_cast<std::size_t>(g.add_index(lx, ly));
      const Unit& w = fs.at(lx, ly);
      for (std::size_t j = 0; j < d; ++j) {
        CycloVector sw = b.multiply(fs.action.at(lx).matrix.column(j), w.value);
        for (std::size_t i = 0; i < d; ++i) {
          CycloVector prod = b.multiply(b.basis(i), sw);
          SparseVector sp;
          for (const auto& [k, c] : to_sparse(prod)) sp.emplace_back(xy * d + k, c);
          products[(x * d + i) * dim + (y * d + j)] = std::move(sp);
        }
      }
    }
  CycloVector unit = zero_vector(dim);
  place(unit, 0, b.unit());
  return StructureAlgebra(std::move(labels), std::move(products), std::move(unit), std::nullopt);
}

GradedAlgebra build_crossed_product(const FactorSystem& fs) {
  if (auto v = validate_factor_system(fs); !v) throw DomainError("not a factor system: " + v.detail);
  const auto& b = fs.action.algebra;
  const auto& g = fs.action.group;
  const std::size_t d = b.dim();
  const long long n = g.order();
  StructureAlgebra a = crossed_product_algebra(fs);
  if (auto v = verify_algebra(a); !v) throw Error("crossed product failed verification: " + v.detail);
  if (auto j = crossed_involution(fs)) {
    StructureAlgebra starred = a.with_involution(std::move(j));
    if (verify_algebra(starred)) a = std::move(starred);
  }
  GradedAlgebra out{std::move(a), g, {}, {}};
  for (long long x = 0; x < n; ++x)
    for (std::size_t i = 0; i < d; ++i) out.grading.push_back(x);
  for (long long x = 0; x < n; ++x) {
    const long long mx = g.neg_index(x);
    CycloVector v = out.algebra.zero();
    place(v, static_cast<std::size_t>(x) * d, b.unit());
    CycloVector vinv = out.algebra.zero();
    place(vinv, static_cast<std::size_t>(mx) * d, fs.action.at(x).inverse.apply(fs.at(x, mx).inverse));
    if (!(out.algebra.multiply(v, vinv) == out.algebra.unit()) || !(out.algebra.multiply(vinv, v) == out.algebra.unit()))
      throw Error("inverse of v_g failed certification");
    out.units.push_back(Unit{std::move(v), std::move(vinv)});
  }
  return out;
}

FactorSystem extract_characteristic_class(const GradedAlgebra& a, const GradedSection& sigma) {
  const auto& g = a.group;
  const long long n = g.order();
  if (sigma.size() != static_cast<std::size_t>(n)) throw DomainError("section needs one unit per group element");
  if (!(sigma[0].value == a.algebra.unit())) throw DomainError("section is not normalized");
  for (long long x = 0; x < n; ++x) {
    const Unit& s = sigma[static_cast<std::size_t>(x)];
    if (!a.is_homogeneous(s.value, x)) throw DomainError("section value has the wrong degree at " + element_label(g, x));
    if (!(a.algebra.multiply(s.value, s.inverse) == a.algebra.unit()) ||
        !(a.algebra.multiply(s.inverse, s.value) == a.algebra.unit()))
      throw DomainError("section value has a wrong inverse at " + element_label(g, x));
  }
  StructureAlgebra b = a.degree_zero();
  const std::size_t d = b.dim();
  const auto& A = a.algebra;
  auto prod3 = [&](const CycloVector& x, const CycloVector& y, const CycloVector& z) {
    return A.multiply(A.multiply(x, y), z);
  };
  FactorSystem fs{OuterAction{g, b, {}}, {}};
  for (long long x = 0; x < n; ++x) {
    const Unit& s = sigma[static_cast<std::size_t>(x)];
    CycloMatrix m(d, d), minv(d, d);
    for (std::size_t j = 0; j < d; ++j) {
      CycloVector bj = a.from_degree_zero(b.basis(j));
      m.set_column(j, a.to_degree_zero(prod3(s.value, bj, s.inverse)));
      minv.set_column(j, a.to_degree_zero(prod3(s.inverse, bj, s.value)));
    }
    fs.action.maps.push_back(AlgebraMap{std::move(m), std::move(minv)});
  }
  for (long long x = 0; x < n; ++x)
    for (long long y = 0; y < n; ++y) {
      const Unit& sx = sigma[static_cast<std::size_t>(x)];
      const Unit& sy = sigma[static_cast<std::size_t>(y)];
      const Unit& sxy = sigma[static_cast<std::size_t>(g.add_index(x, y))];
      fs.omega.push_back(Unit{a.to_degree_zero(prod3(sx.value, sy.value, sxy.inverse)),
                              a.to_degree_zero(prod3(sxy.value, sy.inverse, sx.inverse))});
    }
  if (auto v = validate_factor_system(fs); !v) throw Error("extracted factor system failed validation: " + v.detail);
  return fs;
}

Verdict verify_graded_equivalence(const GradedAlgebra& from, const GradedAlgebra& to, const CycloMatrix& m) {
  if (!(from.group == to.group)) return Verdict::fail("grading groups differ");
  if (m.rows() != to.algebra.dim() || m.cols() != from.algebra.dim()) return Verdict::fail("map has the wrong shape");
  if (auto v = verify_morphism(from.algebra, to.algebra, m); !v) return Verdict::fail("not multiplicative: " + v.detail);
  if (!matrix_det_inverse(m).inverse) return Verdict::fail("map is not bijective");
  for (std::size_t j = 0; j < from.algebra.dim(); ++j)
    if (!to.is_homogeneous(m.column(j), from.grading[j]))
      return Verdict::fail("basis vector " + from.algebra.labels()[j] + " leaves its degree", {j});
  const auto c0 = from.component(0), t0 = to.component(0);
  if (c0.size() != t0.size()) return Verdict::fail("degree zero parts have different dimensions");
  for (std::size_t k = 0; k < c0.size(); ++k)
    if (!(m.column(c0[k]) == unit_vector(to.algebra.dim(), t0[k])))
      return Verdict::fail("map does not fix B at " + from.algebra.labels()[c0[k]], {c0[k]});
  return Verdict::pass();
}

GradedEquivalence build_equivalence(const FactorSystem& primed, const FactorSystem& base, const UnitCochain& h) {
  if (!(act_unit_cochain(h, base) == primed)) throw DomainError("h.(S, omega) differs from (S', omega')");
  GradedAlgebra from = build_crossed_product(primed);
  GradedAlgebra to = build_crossed_product(base);
  const auto& b = base.action.algebra;
  const std::size_t d = b.dim();
  const auto n = static_cast<std::size_t>(base.action.group.order());
  CycloMatrix m(d * n, d * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t i = 0; i < d; ++i) {
      CycloVector img = b.multiply(b.basis(i), h[x].value);
      for (std::size_t k = 0; k < d; ++k) m(x * d + k, x * d + i) = img[k];
    }
  Verdict v = verify_graded_equivalence(from, to, m);
  return GradedEquivalence{std::move(m), std::move(v)};
}

StandardForm normalize_to_standard(const GradedAlgebra& a, const GradedSection& sigma) {
  FactorSystem fs = extract_characteristic_class(a, sigma);
  GradedAlgebra c = build_crossed_product(fs);
  const std::size_t d = fs.action.algebra.dim();
  CycloMatrix m(c.algebra.dim(), a.algebra.dim());
  for (std::size_t j = 0; j < a.algebra.dim(); ++j) {
    const long long x = a.grading[j];
    CycloVector b = a.to_degree_zero(a.algebra.multiply(a.algebra.basis(j), sigma[static_cast<std::size_t>(x)].inverse));
    for (std::size_t k = 0; k < d; ++k) m(static_cast<std::size_t>(x) * d + k, j) = b[k];
  }
  Verdict v = verify_graded_equivalence(a, c, m);
  return StandardForm{std::move(fs), std::move(c), GradedEquivalence{std::move(m), std::move(v)}};
}

DynamicalSystem dual_action(const GradedAlgebra& a) {
  const auto& g = a.group;
  const auto conductor = static_cast<unsigned long>(g.exponent());
  std::vector<CycloMatrix> gens;
  const auto [elems, chars] = canonical_generators(g);
  for (const auto& e : elems) {
    CycloMatrix m(a.algebra.dim(), a.algebra.dim());
    for (std::size_t j = 0; j < a.algebra.dim(); ++j) {
      Character c{g.element_at(a.grading[j]).residues};
      m(j, j) = Cyclo::from_root(dual_pairing(g, c, e), conductor);
    }
    gens.push_back(std::move(m));
  }
  return make_dynamical_system(a.algebra, g, std::move(gens));
}

TwistedConvolution build_twisted_convolution(const DynamicalSystem& alpha) {
  GradedAlgebra graded = build_crossed_product(trivial_factor_system(alpha.as_outer_action()));
  DynamicalSystem dual = dual_action(graded);
  return TwistedConvolution{std::move(graded), std::move(dual)};
}

TwistedConvolution build_twisted_convolution(const StructureAlgebra& a, const FinAbGroup& group, const Cochain& omega,
                                             long long n) {
  CochainComplex cx(CoeffModule::mu(n, group));
  if (auto v = cx.is_cocycle(omega); !v) throw DomainError("omega is not a cocycle: " + v.detail);
  GradedAlgebra graded = build_crossed_product(scalar_factor_system(trivial_outer_action(group, a), omega, n));
  DynamicalSystem dual = dual_action(graded);
  return TwistedConvolution{std::move(graded), std::move(dual)};
}

}  // namespace ncpb
