#include "ncpb/factor_systems.hpp"

#include <numeric>

#include "ncpb/linear_algebra.hpp"

namespace ncpb {

namespace {

std::string element_label(const FinAbGroup& g, long long idx) {
  std::string s = "(";
  const auto r = g.element_at(idx).residues;
  for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
  return s + ")";
}

std::string pair_label(const FinAbGroup& g, long long a, long long b) {
  return element_label(g, a) + " " + element_label(g, b);
}

// x -> u x u^{-1} as a matrix, from a certified unit.
CycloMatrix conj_matrix(const StructureAlgebra& b, const Unit& u) {
  return b.left_matrix(u.value) * b.right_matrix(u.inverse);
}

CycloVector mul(const StructureAlgebra& b, std::initializer_list<const CycloVector*> xs) {
  CycloVector acc = b.unit();
  for (const auto* x : xs) acc = b.multiply(acc, *x);
  return acc;
}

CycloVector first_coordinate_one(const CycloVector& v) {
  for (const auto& c : v)
    if (!c.is_zero()) return c.inverse() * v;
  return v;
}

bool is_identity_map(const AlgebraMap& m) { return m.matrix == CycloMatrix::identity(m.matrix.rows()); }

// Residues mod n of scalar root values; nullopt if a value is not a scalar root of unity.
struct TorsionTable {
  std::vector<RootOfUnity> roots;
  long long order = 1;
  std::string failure;
};

TorsionTable read_torsion(const StructureAlgebra& b, const std::vector<CycloVector>& values) {
  TorsionTable t;
  for (std::size_t i = 0; i < values.size(); ++i) {
    auto r = scalar_root(b, values[i]);
    if (!r) {
      t.failure = b.is_central(values[i]) ? "value is central but not a root of unity times 1"
                                          : "value is not central";
      t.roots.clear();
      return t;
    }
    t.order = std::lcm(t.order, r->den());
    t.roots.push_back(*r);
  }
  return t;
}

Cochain residues(const TorsionTable& t, int degree, long long n) {
  Cochain c{degree, {}};
  for (const auto& r : t.roots) c.values.push_back(r.num() * (n / r.den()));
  return c;
}

}  // namespace

Unit make_unit(const StructureAlgebra& b, const CycloVector& x) {
  auto inv = b.inverse(x);
  if (!inv) throw NotInvertible("element is not a unit");
  return Unit{x, *inv};
}

Unit one_unit(const StructureAlgebra& b) { return Unit{b.unit(), b.unit()}; }

Unit scalar_unit(const StructureAlgebra& b, long long k, long long n) {
  const auto nn = static_cast<unsigned long>(n);
  return Unit{Cyclo::zeta(nn, k) * b.unit(), Cyclo::zeta(nn, -k) * b.unit()};
}

std::optional<RootOfUnity> scalar_root(const StructureAlgebra& b, const CycloVector& x) {
  const CycloVector& one = b.unit();
  for (std::size_t i = 0; i < one.size(); ++i) {
    if (one[i].is_zero()) continue;
    Cyclo c = x[i] / one[i];
    if (!(c * one == x)) return std::nullopt;
    return c.as_root_of_unity();
  }
  return std::nullopt;
}

bool OuterAction::is_homomorphism() const {
  const long long n = group.order();
  for (long long a = 0; a < n; ++a)
    for (long long b = 0; b < n; ++b)
      if (!(at(group.add_index(a, b)).matrix == at(a).matrix * at(b).matrix)) return false;
  return true;
}

OuterAction trivial_outer_action(const FinAbGroup& g, const StructureAlgebra& b) {
  return OuterAction{g, b, std::vector<AlgebraMap>(static_cast<std::size_t>(g.order()), AlgebraMap::identity(b.dim()))};
}

OuterAction homomorphic_action(const FinAbGroup& g, const StructureAlgebra& b,
                               const std::vector<CycloMatrix>& generator_images) {
  if (generator_images.size() != g.rank()) throw DomainError("one automorphism per group generator is required");
  std::vector<std::vector<AlgebraMap>> powers(g.rank());
  for (std::size_t i = 0; i < g.rank(); ++i) {
    auto m = certify_automorphism(b, generator_images[i]);
    if (!m) throw DomainError("generator image " + std::to_string(i) + " is not an automorphism");
    powers[i].push_back(AlgebraMap::identity(b.dim()));
    for (long long k = 1; k <= g.orders()[i]; ++k) powers[i].push_back(m->compose(powers[i].back()));
    if (!is_identity_map(powers[i].back()))
      throw DomainError("generator image " + std::to_string(i) + " has order not dividing " +
                        std::to_string(g.orders()[i]));
  }
  OuterAction s{g, b, {}};
  for (long long idx = 0; idx < g.order(); ++idx) {
    const auto r = g.element_at(idx).residues;
    AlgebraMap m = AlgebraMap::identity(b.dim());
    for (std::size_t i = 0; i < r.size(); ++i) m = m.compose(powers[i][static_cast<std::size_t>(r[i])]);
    s.maps.push_back(std::move(m));
  }
  return s;
}

OuterAction outer_action_from_table(const FinAbGroup& g, const StructureAlgebra& b,
                                    const std::vector<CycloMatrix>& table) {
  if (table.size() != static_cast<std::size_t>(g.order())) throw DomainError("action table needs one entry per group element");
  OuterAction s{g, b, {}};
  for (std::size_t i = 0; i < table.size(); ++i) {
    auto m = certify_automorphism(b, table[i]);
    if (!m) throw DomainError("action entry " + std::to_string(i) + " is not an automorphism");
    s.maps.push_back(std::move(*m));
  }
  if (!is_identity_map(s.maps[0])) throw DomainError("action at the identity must be the identity");
  return s;
}

Verdict verify_outer_action(const OuterAction& s) {
  const std::size_t n = static_cast<std::size_t>(s.group.order());
  const std::size_t d = s.algebra.dim();
  if (s.maps.size() != n) return Verdict::fail("action table has the wrong length");
  const auto id = CycloMatrix::identity(d);
  if (!(s.maps[0].matrix == id)) return Verdict::fail("S(0) is not the identity", {0});
  for (std::size_t g = 0; g < n; ++g) {
    const auto& m = s.maps[g];
    if (m.matrix.rows() != d || m.matrix.cols() != d) return Verdict::fail("automorphism has the wrong shape", {g});
    if (!(m.matrix * m.inverse == id) || !(m.inverse * m.matrix == id))
      return Verdict::fail("stored inverse of S(g) is wrong", {g});
    if (auto v = verify_morphism(s.algebra, s.algebra, m.matrix); !v)
      return Verdict::fail("S(g) is not multiplicative: " + v.detail, {g});
  }
  return Verdict::pass();
}

FactorSystem trivial_factor_system(const OuterAction& s) {
  const auto n = static_cast<std::size_t>(s.group.order());
  return FactorSystem{s, std::vector<Unit>(n * n, one_unit(s.algebra))};
}

FactorSystem scalar_factor_system(const OuterAction& s, const Cochain& w, long long n) {
  CochainComplex cx(CoeffModule::mu(n, s.group));
  if (w.degree != 2) throw DomainError("omega must be a 2-cochain");
  cx.check(w);
  if (!cx.is_normalized(w)) throw DomainError("omega must be normalized");
  FactorSystem fs{s, {}};
  for (long long v : w.values) fs.omega.push_back(scalar_unit(s.algebra, v, n));
  return fs;
}

Verdict validate_compatible_pair(const FactorSystem& fs) {
  const auto& s = fs.action;
  const auto& b = s.algebra;
  const long long n = s.group.order();
  if (auto v = verify_outer_action(s); !v) return v;
  if (fs.omega.size() != static_cast<std::size_t>(n * n)) return Verdict::fail("omega table has the wrong length");
  for (long long a = 0; a < n; ++a)
    for (long long c = 0; c < n; ++c) {
      const Unit& u = fs.at(a, c);
      if (u.value.size() != b.dim() || u.inverse.size() != b.dim())
        return Verdict::fail("omega value has the wrong dimension", {std::size_t(a), std::size_t(c)});
      if ((a == 0 || c == 0) && !(u.value == b.unit()))
        return Verdict::fail("omega is not normalized at " + pair_label(s.group, a, c), {std::size_t(a), std::size_t(c)});
      if (!(b.multiply(u.value, u.inverse) == b.unit()) || !(b.multiply(u.inverse, u.value) == b.unit()))
        return Verdict::fail("stored inverse of omega is wrong at " + pair_label(s.group, a, c),
                             {std::size_t(a), std::size_t(c)});
    }
  for (long long a = 1; a < n; ++a)
    for (long long c = 1; c < n; ++c) {
      CycloMatrix delta = s.at(a).matrix * s.at(c).matrix * s.at(s.group.add_index(a, c)).inverse;
      if (!(delta == conj_matrix(b, fs.at(a, c))))
        return Verdict::fail("delta_S differs from conjugation by omega at " + pair_label(s.group, a, c),
                             {std::size_t(a), std::size_t(c)});
    }
  return Verdict::pass();
}

std::vector<CycloVector> d_omega(const FactorSystem& fs) {
  const auto& s = fs.action;
  const auto& b = s.algebra;
  const auto& g = s.group;
  const long long n = g.order();
  std::vector<CycloVector> out;
  out.reserve(static_cast<std::size_t>(n * n * n));
  for (long long x = 0; x < n; ++x)
    for (long long y = 0; y < n; ++y)
      for (long long z = 0; z < n; ++z) {
        CycloVector t1 = s.at(x).apply(fs.at(y, z).value);
        out.push_back(mul(b, {&t1, &fs.at(x, g.add_index(y, z)).value, &fs.at(g.add_index(x, y), z).inverse,
                              &fs.at(x, y).inverse}));
      }
  return out;
}

Verdict validate_factor_system(const FactorSystem& fs) {
  if (auto v = validate_compatible_pair(fs); !v) return v;
  const auto d = d_omega(fs);
  const long long n = fs.action.group.order();
  for (std::size_t i = 0; i < d.size(); ++i)
    if (!(d[i] == fs.action.algebra.unit())) {
      const auto x = static_cast<long long>(i) / (n * n), y = (static_cast<long long>(i) / n) % n,
                 z = static_cast<long long>(i) % n;
      return Verdict::fail("d_S omega is not 1 at " + pair_label(fs.action.group, x, y) + " " +
                               element_label(fs.action.group, z),
                           {std::size_t(x), std::size_t(y), std::size_t(z)});
    }
  return Verdict::pass();
}

UnitCochain trivial_unit_cochain(const OuterAction& s) {
  return UnitCochain(static_cast<std::size_t>(s.group.order()), one_unit(s.algebra));
}

UnitCochain multiply_cochains(const StructureAlgebra& b, const UnitCochain& left, const UnitCochain& right) {
  if (left.size() != right.size()) throw DomainError("unit cochains over different groups");
  UnitCochain out;
  for (std::size_t i = 0; i < left.size(); ++i)
    out.push_back(Unit{b.multiply(left[i].value, right[i].value), b.multiply(right[i].inverse, left[i].inverse)});
  return out;
}

UnitCochain invert_cochain(const UnitCochain& h) {
  UnitCochain out;
  for (const auto& u : h) out.push_back(Unit{u.inverse, u.value});
  return out;
}

std::vector<CycloVector> d_unit_cochain(const OuterAction& s, const UnitCochain& h) {
  const long long n = s.group.order();
  if (h.size() != static_cast<std::size_t>(n)) throw DomainError("unit cochain has the wrong length");
  std::vector<CycloVector> out;
  for (long long k = 0; k < n; ++k)
    for (long long l = 0; l < n; ++l) {
      CycloVector t = s.at(k).apply(h[static_cast<std::size_t>(l)].value);
      out.push_back(mul(s.algebra, {&h[static_cast<std::size_t>(k)].value, &t,
                                    &h[static_cast<std::size_t>(s.group.add_index(k, l))].inverse}));
    }
  return out;
}

FactorSystem act_unit_cochain(const UnitCochain& h, const FactorSystem& fs) {
  const auto& s = fs.action;
  const auto& b = s.algebra;
  const auto& g = s.group;
  const long long n = g.order();
  if (h.size() != static_cast<std::size_t>(n)) throw DomainError("unit cochain has the wrong length");
  FactorSystem out{OuterAction{g, b, {}}, {}};
  for (long long x = 0; x < n; ++x) {
    const Unit& u = h[static_cast<std::size_t>(x)];
    const Unit uinv{u.inverse, u.value};
    out.action.maps.push_back(AlgebraMap{conj_matrix(b, u) * s.at(x).matrix, s.at(x).inverse * conj_matrix(b, uinv)});
  }
  for (long long x = 0; x < n; ++x)
    for (long long y = 0; y < n; ++y) {
      const Unit& hx = h[static_cast<std::size_t>(x)];
      const Unit& hxy = h[static_cast<std::size_t>(g.add_index(x, y))];
      CycloVector shy = s.at(x).apply(h[static_cast<std::size_t>(y)].value);
      CycloVector shy_inv = s.at(x).apply(h[static_cast<std::size_t>(y)].inverse);
      out.omega.push_back(Unit{mul(b, {&hx.value, &shy, &fs.at(x, y).value, &hxy.inverse}),
                               mul(b, {&hxy.value, &fs.at(x, y).inverse, &shy_inv, &hx.inverse})});
    }
  return out;
}

bool stabilizer_check(const UnitCochain& h, const FactorSystem& fs) { return act_unit_cochain(h, fs) == fs; }

KernelEquivalence kernel_equivalent(const OuterAction& s, const OuterAction& s_prime, long long torsion_order,
                                    std::uint64_t budget) {
  if (!s.group.is_cyclic_presentation()) throw DomainError("kernel equivalence is defined for cyclic groups only");
  if (!(s.group == s_prime.group) || s.algebra.dim() != s_prime.algebra.dim())
    throw DomainError("actions on different groups or algebras");
  const auto& b = s.algebra;
  const long long n = s.group.order();
  KernelEquivalence out;
  UnitCochain h;
  h.push_back(one_unit(b));

  auto inner_or_one = [&](const AlgebraMap& phi) -> std::optional<CycloVector> {
    if (is_identity_map(phi)) return b.unit();
    try {
      return first_coordinate_one(inner_witness(b, phi, budget));
    } catch (const DomainError&) {
      return std::nullopt;
    }
  };

  if (n > 1 && s.is_homomorphism() && s_prime.is_homomorphism()) {
    auto u = inner_or_one(s_prime.at(1).compose(s.at(1).inverted()));
    if (!u) {
      out.detail = "S'(1) S(1)^{-1} is not inner";
      return out;
    }
    // h(k) = u S(1)(u) ... S(k-1)(u); h(n) = z must be central.
    auto build = [&](const CycloVector& uu) {
      UnitCochain hh{one_unit(b)};
      CycloVector acc = b.unit();
      for (long long k = 1; k <= n; ++k) {
        acc = b.multiply(acc, s.at(k - 1).apply(uu));
        if (k < n) hh.push_back(make_unit(b, acc));
      }
      return std::make_pair(hh, acc);
    };
    auto [hh, z] = build(*u);
    const CycloVector& one = b.unit();
    std::size_t lead = 0;
    while (one[lead].is_zero()) ++lead;
    Cyclo zs = z[lead] / one[lead];
    if (zs * one == z && !zs.as_root_of_unity()) {
      auto q = positive_rational_part(zs);
      auto r = q ? rational_root(*q, n) : std::nullopt;
      if (r) {
        std::tie(hh, z) = build(Cyclo(Rational(1 / *r)) * *u);
      } else {
        // lambda u of finite order has tr L_{lambda u} a sum of dim B roots of unity,
        // so lambda = s / tr L_u for one of finitely many sums s
        Cyclo tr;
        const CycloMatrix lu = b.left_matrix(*u);
        for (std::size_t i = 0; i < b.dim(); ++i) tr += lu(i, i);
        bool fixed = false;
        std::uint64_t spent = 0;
        std::vector<long long> ex(b.dim(), 0);
        while (!tr.is_zero() && !fixed) {
          if (++spent > budget) throw BudgetExceeded("kernel equivalence rescaling search", budget);
          Cyclo sum;
          for (long long e : ex) sum += Cyclo::zeta(static_cast<unsigned long>(n), e);
          if (!sum.is_zero()) {
            auto [h2, z2] = build((sum / tr) * *u);
            if (Cyclo(z2[lead] / one[lead]).as_root_of_unity() && (z2[lead] / one[lead]) * one == z2) {
              hh = std::move(h2);
              z = std::move(z2);
              fixed = true;
            }
          }
          // next nondecreasing exponent tuple
          std::size_t k = ex.size();
          while (k > 0 && ex[k - 1] == n - 1) --k;
          if (k == 0) break;
          ++ex[k - 1];
          for (std::size_t j = k; j < ex.size(); ++j) ex[j] = ex[k - 1];
        }
        if (!fixed) {
          out.status = SearchStatus::refused;
          out.detail = "no rescaling of the witness makes the norm scalar " + zs.to_string() + " a root of unity";
          return out;
        }
      }
    }
    h = std::move(hh);
  } else {
    for (long long g = 1; g < n; ++g) {
      auto u = inner_or_one(s_prime.at(g).compose(s.at(g).inverted()));
      if (!u) {
        out.detail = "S'(g) S(g)^{-1} is not inner at g = " + std::to_string(g);
        return out;
      }
      h.push_back(make_unit(b, *u));
    }
  }

  for (long long g = 0; g < n; ++g)
    if (!(s_prime.at(g).matrix == conj_matrix(b, h[static_cast<std::size_t>(g)]) * s.at(g).matrix))
      throw Error("kernel equivalence witness failed re-verification");
  out.witness = h;

  auto table = read_torsion(b, d_unit_cochain(s, h));
  if (table.roots.empty()) {
    out.status = SearchStatus::refused;
    out.detail = "d_S h: " + table.failure;
    return out;
  }
  const long long nn = torsion_order > 0 ? torsion_order : table.order * n;
  if (nn % table.order != 0) {
    out.status = SearchStatus::refused;
    out.detail = "d_S h takes values outside mu_" + std::to_string(nn);
    return out;
  }
  out.torsion_order = nn;
  out.d_witness = residues(table, 2, nn);
  auto module = CoeffModule::mu(nn, s.group);
  auto t = class_is_trivial(module, out.d_witness, budget);
  if (!t) {
    out.status = SearchStatus::absent;
    out.detail = "[d_S h] is nonzero in H^2 with mu_" + std::to_string(nn) + " coefficients";
    return out;
  }
  out.trivializer = t;
  for (long long g = 0; g < n; ++g) {
    const Unit z = scalar_unit(b, -t->values[static_cast<std::size_t>(g)], nn);
    const Unit& hg = h[static_cast<std::size_t>(g)];
    out.corrected.push_back(Unit{b.multiply(hg.value, z.value), b.multiply(z.inverse, hg.inverse)});
  }
  for (const auto& v : d_unit_cochain(s, out.corrected))
    if (!(v == b.unit())) throw Error("corrected kernel equivalence witness has d_S h != 1");
  out.status = SearchStatus::found;
  return out;
}

Obstruction nu_obstruction(const OuterAction& s, const std::optional<std::vector<Unit>>& omega,
                           long long torsion_order, std::uint64_t budget) {
  const auto& b = s.algebra;
  const auto& g = s.group;
  const long long n = g.order();
  Obstruction out;
  if (auto v = verify_outer_action(s); !v) {
    out.detail = "not an outer action: " + v.detail;
    return out;
  }
  FactorSystem fs{s, {}};
  if (omega) {
    fs.omega = *omega;
  } else if (s.is_homomorphism()) {
    fs = trivial_factor_system(s);
  } else {
    std::vector<Unit> u{one_unit(b)};
    for (long long x = 1; x < n && u.size() == static_cast<std::size_t>(x); ++x) {
      if (is_identity_map(s.at(x))) {
        u.push_back(one_unit(b));
        continue;
      }
      try {
        u.push_back(make_unit(b, first_coordinate_one(inner_witness(b, s.at(x), budget))));
      } catch (const DomainError&) {
      }
    }
    if (u.size() == static_cast<std::size_t>(n)) {
      for (long long x = 0; x < n; ++x)
        for (long long y = 0; y < n; ++y) {
          const Unit& uxy = u[static_cast<std::size_t>(g.add_index(x, y))];
          const Unit& ux = u[static_cast<std::size_t>(x)];
          const Unit& uy = u[static_cast<std::size_t>(y)];
          fs.omega.push_back(Unit{mul(b, {&ux.value, &uy.value, &uxy.inverse}),
                                  mul(b, {&uxy.value, &uy.inverse, &ux.inverse})});
        }
    } else {
      for (long long x = 0; x < n; ++x)
        for (long long y = 0; y < n; ++y) {
          AlgebraMap delta = s.at(x).compose(s.at(y)).compose(s.at(g.add_index(x, y)).inverted());
          if (x == 0 || y == 0 || is_identity_map(delta)) {
            fs.omega.push_back(one_unit(b));
            continue;
          }
          try {
            fs.omega.push_back(make_unit(b, first_coordinate_one(inner_witness(b, delta, budget))));
          } catch (const DomainError&) {
            out.detail = "delta_S is not inner at " + pair_label(g, x, y);
            return out;
          }
        }
    }
  }
  if (auto v = validate_compatible_pair(fs); !v) {
    out.detail = "omega is not compatible with S: " + v.detail;
    return out;
  }
  out.pair = fs;
  auto table = read_torsion(b, d_omega(fs));
  if (table.roots.empty()) {
    out.detail = "d_S omega: " + table.failure;
    return out;
  }
  const long long nn = torsion_order > 0 ? torsion_order : table.order * g.exponent();
  if (nn % table.order != 0) {
    out.detail = "d_S omega takes values outside mu_" + std::to_string(nn);
    return out;
  }
  out.torsion_order = nn;
  out.values = residues(table, 3, nn);
  auto k = class_is_trivial(CoeffModule::mu(nn, g), *out.values, budget);
  if (!k) {
    out.status = SearchStatus::absent;
    out.detail = "no mu_" + std::to_string(nn) + "-valued 2-cochain trivializes d_S omega";
    return out;
  }
  out.witness = k;
  FactorSystem corrected = fs;
  for (std::size_t i = 0; i < corrected.omega.size(); ++i) {
    const Unit z = scalar_unit(b, -k->values[i], nn);
    Unit& w = corrected.omega[i];
    w = Unit{b.multiply(w.value, z.value), b.multiply(z.inverse, w.inverse)};
  }
  if (auto v = validate_factor_system(corrected); !v)
    throw Error("corrected factor system failed validation: " + v.detail);
  out.corrected = std::move(corrected);
  out.status = SearchStatus::found;
  return out;
}

FactorSystem restrict_to_generator(const FactorSystem& fs, std::size_t i) {
  const auto& g = fs.action.group;
  if (i >= g.rank()) throw DomainError("generator index out of range");
  const long long ni = g.orders()[i];
  FinAbGroup h({ni});
  std::vector<long long> idx;
  for (long long k = 0; k < ni; ++k) {
    std::vector<long long> r(g.rank(), 0);
    r[i] = k;
    idx.push_back(g.index_of(g.element(r)));
  }
  FactorSystem out{OuterAction{h, fs.action.algebra, {}}, {}};
  for (long long k = 0; k < ni; ++k) out.action.maps.push_back(fs.action.at(idx[static_cast<std::size_t>(k)]));
  for (long long k = 0; k < ni; ++k)
    for (long long l = 0; l < ni; ++l)
      out.omega.push_back(fs.at(idx[static_cast<std::size_t>(k)], idx[static_cast<std::size_t>(l)]));
  return out;
}

}  // namespace ncpb
