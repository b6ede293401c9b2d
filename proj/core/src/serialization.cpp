#include "ncpb/serialization.hpp"

namespace ncpb {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw ParseError(path.empty() ? "/" : path, what); }

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path + "/" + key, "missing field");
  return *it;
}

const Json& array_at(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

long long as_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<long long>();
}

std::string as_string(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

std::string at(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

std::vector<long long> int_list(const Json& j, const std::string& path) {
  std::vector<long long> out;
  for (std::size_t i = 0; i < array_at(j, path).size(); ++i) out.push_back(as_int(j[i], at(path, i)));
  return out;
}

GroupElement element_from_json(const FinAbGroup& g, const Json& j, const std::string& path) {
  auto r = int_list(j, path);
  if (r.size() != g.rank()) fail(path, "element has the wrong number of coordinates");
  return g.element(r);
}

Json element_json(const FinAbGroup& g, long long idx) { return g.element_at(idx).residues; }

template <class F>
auto guarded(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const NotInvertible& e) {
    throw DomainError(path + ": " + e.what());
  } catch (const DomainError& e) {
    throw DomainError(path + ": " + e.what());
  }
}

}  // namespace

Json to_json(const Cyclo& x) {
  Json c = Json::array();
  for (const auto& q : x.dense_coeffs()) c.push_back(to_string(q));
  return Json{{"N", x.conductor()}, {"c", c}};
}

Json to_json(const CycloVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const CycloMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

Json to_json(const FinAbGroup& g) { return Json{{"orders", g.orders()}}; }

Json to_json(const StructureAlgebra& a) {
  Json products = Json::array();
  const std::size_t d = a.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const auto& p = a.product(i, j);
      if (p.empty()) continue;
      Json terms = Json::array();
      for (const auto& [k, c] : p) terms.push_back(Json::array({k, to_json(c)}));
      products.push_back(Json::array({i, j, terms}));
    }
  Json out{{"labels", a.labels()}, {"unit", to_json(a.unit())}, {"products", products}};
  out["involution"] = a.has_involution() ? to_json(*a.involution()) : Json(nullptr);
  return out;
}

Json to_json(const Cochain& c) { return Json{{"degree", c.degree}, {"values", c.values}}; }

Json to_json(const CoeffModule& m) {
  Json out{{"carrier", m.carrier.orders()}, {"acting", m.acting.orders()}, {"roots_of_unity", m.roots_of_unity}};
  out["action"] = m.action.empty() ? Json(nullptr) : Json(m.action);
  return out;
}

Json to_json(const CohomologyResult& r) {
  Json reps = Json::array();
  for (const auto& c : r.representatives) reps.push_back(to_json(c));
  return Json{{"factors", r.factors},
              {"method", r.method},
              {"order", r.order()},
              {"representatives", reps},
              {"representative_orders", r.representative_orders},
              {"cocycles", r.cocycles},
              {"coboundaries", r.coboundaries}};
}

Json to_json(const OuterAction& s) {
  Json maps = Json::array();
  for (const auto& m : s.maps) maps.push_back(to_json(m.matrix));
  return Json{{"group", to_json(s.group)}, {"algebra", to_json(s.algebra)}, {"S", maps}};
}

Json to_json(const FactorSystem& fs) {
  Json out = to_json(fs.action);
  Json omega = Json::array();
  const long long n = fs.action.group.order();
  for (long long a = 0; a < n; ++a)
    for (long long b = 0; b < n; ++b)
      omega.push_back(Json::array({Json::array({element_json(fs.action.group, a), element_json(fs.action.group, b)}),
                                   to_json(fs.at(a, b).value)}));
  out["omega"] = omega;
  return out;
}

Json to_json(const GradedAlgebra& a) {
  Json out = to_json(a.algebra);
  out["group"] = to_json(a.group);
  Json grading = Json::array();
  for (long long g : a.grading) grading.push_back(element_json(a.group, g));
  out["grading"] = grading;
  Json units = Json::array();
  for (std::size_t g = 0; g < a.units.size(); ++g)
    if (a.units[g])
      units.push_back(Json{{"degree", element_json(a.group, static_cast<long long>(g))}, {"value", to_json(a.units[g]->value)}});
  out["units"] = units;
  return out;
}

Json to_json(const DynamicalSystem& ds) {
  Json gens = Json::array();
  for (const auto& m : ds.generators) gens.push_back(to_json(m));
  return Json{{"algebra", to_json(ds.algebra)}, {"group", to_json(ds.group)}, {"action", gens}};
}

Json to_json(const IsotypicDecomposition& dec) {
  Json comps = Json::array();
  for (const auto& b : dec.bases) {
    Json basis = Json::array();
    for (const auto& v : b) basis.push_back(to_json(v));
    comps.push_back(basis);
  }
  return Json{{"conductor", dec.conductor}, {"dimensions", dec.dimensions()}, {"bases", comps}};
}

Json to_json(const TrivialityCertificate& cert) {
  Json gens = Json::array(), wit = Json::array();
  for (const auto& g : cert.generators) gens.push_back(g.residues);
  for (const auto& w : cert.witnesses) wit.push_back(to_json(w.value));
  return Json{{"generators", gens}, {"orders", cert.orders}, {"witnesses", wit}, {"transcript", cert.transcript}};
}

Json to_json(const Verdict& v) {
  Json out{{"status", v.ok ? "ok" : "fail"}};
  if (!v.ok) {
    out["detail"] = v.detail;
    out["witness"] = v.witness;
  }
  return out;
}

Cyclo cyclo_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Cyclo(j.get<long long>());
  if (j.is_string()) {
    try {
      return Cyclo(parse_rational(j.get<std::string>()));
    } catch (const Error& e) {
      fail(path, e.what());
    }
  }
  const long long n = as_int(field(j, "N", path), path + "/N");
  if (n < 1) fail(path + "/N", "conductor must be positive");
  const Json& c = array_at(field(j, "c", path), path + "/c");
  std::vector<Rational> coeffs;
  for (std::size_t i = 0; i < c.size(); ++i) {
    try {
      coeffs.push_back(c[i].is_number_integer() ? Rational(static_cast<long>(c[i].get<long long>()))
                                                : parse_rational(as_string(c[i], at(path + "/c", i))));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      fail(at(path + "/c", i), e.what());
    }
  }
  try {
    return Cyclo::from_coeffs(static_cast<unsigned long>(n), std::move(coeffs));
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

CycloVector vector_from_json(const Json& j, const std::string& path) {
  CycloVector out;
  for (std::size_t i = 0; i < array_at(j, path).size(); ++i) out.push_back(cyclo_from_json(j[i], at(path, i)));
  return out;
}

CycloMatrix matrix_from_json(const Json& j, const std::string& path) {
  std::vector<CycloVector> rows;
  for (std::size_t i = 0; i < array_at(j, path).size(); ++i) rows.push_back(vector_from_json(j[i], at(path, i)));
  if (rows.empty()) fail(path, "empty matrix");
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (rows[i].size() != rows[0].size()) fail(at(path, i), "ragged matrix row");
  return CycloMatrix::from_rows(rows);
}

FinAbGroup group_from_json(const Json& j, const std::string& path) {
  auto orders = int_list(field(j, "orders", path), path + "/orders");
  for (std::size_t i = 0; i < orders.size(); ++i)
    if (orders[i] < 1) fail(at(path + "/orders", i), "cyclic orders must be positive");
  return FinAbGroup(std::move(orders));
}

StructureAlgebra algebra_from_json(const Json& j, const std::string& path) {
  std::vector<std::string> labels;
  const Json& lj = array_at(field(j, "labels", path), path + "/labels");
  for (std::size_t i = 0; i < lj.size(); ++i) labels.push_back(as_string(lj[i], at(path + "/labels", i)));
  const std::size_t d = labels.size();
  if (d == 0) fail(path + "/labels", "algebra must have a basis");
  CycloVector unit = vector_from_json(field(j, "unit", path), path + "/unit");
  if (unit.size() != d) fail(path + "/unit", "unit has the wrong length");
  std::vector<SparseVector> products(d * d);
  const std::string pp = path + "/products";
  const Json& pj = array_at(field(j, "products", path), pp);
  for (std::size_t e = 0; e < pj.size(); ++e) {
    const std::string ep = at(pp, e);
    const Json& entry = array_at(pj[e], ep);
    if (entry.size() != 3) fail(ep, "expected [i, j, terms]");
    const long long i = as_int(entry[0], ep + "/0"), k = as_int(entry[1], ep + "/1");
    if (i < 0 || k < 0 || static_cast<std::size_t>(i) >= d || static_cast<std::size_t>(k) >= d) fail(ep, "basis index out of range");
    SparseVector sv;
    const Json& terms = array_at(entry[2], ep + "/2");
    for (std::size_t t = 0; t < terms.size(); ++t) {
      const std::string tp = at(ep + "/2", t);
      const Json& term = array_at(terms[t], tp);
      if (term.size() != 2) fail(tp, "expected [k, value]");
      const long long idx = as_int(term[0], tp + "/0");
      if (idx < 0 || static_cast<std::size_t>(idx) >= d) fail(tp + "/0", "basis index out of range");
      sv.emplace_back(static_cast<std::size_t>(idx), cyclo_from_json(term[1], tp + "/1"));
    }
    products[static_cast<std::size_t>(i) * d + static_cast<std::size_t>(k)] = to_sparse(to_dense(sv, d));
  }
  std::optional<CycloMatrix> inv;
  if (auto it = j.find("involution"); it != j.end() && !it->is_null()) {
    inv = matrix_from_json(*it, path + "/involution");
    if (inv->rows() != d || inv->cols() != d) fail(path + "/involution", "involution has the wrong shape");
  }
  return guarded(path, [&] {
    StructureAlgebra a(std::move(labels), std::move(products), std::move(unit), std::move(inv));
    if (auto v = verify_algebra(a); !v) throw DomainError("algebra failed verification: " + v.detail);
    return a;
  });
}

Cochain cochain_from_json(const Json& j, const std::string& path) {
  Cochain c;
  c.degree = static_cast<int>(as_int(field(j, "degree", path), path + "/degree"));
  c.values = int_list(field(j, "values", path), path + "/values");
  return c;
}

CoeffModule module_from_json(const Json& j, const std::string& path) {
  CoeffModule m;
  m.carrier = FinAbGroup(int_list(field(j, "carrier", path), path + "/carrier"));
  m.acting = FinAbGroup(int_list(field(j, "acting", path), path + "/acting"));
  if (auto it = j.find("roots_of_unity"); it != j.end()) m.roots_of_unity = it->is_boolean() && it->get<bool>();
  if (auto it = j.find("action"); it != j.end() && !it->is_null()) {
    const std::string ap = path + "/action";
    for (std::size_t g = 0; g < array_at(*it, ap).size(); ++g) m.action.push_back(int_list((*it)[g], at(ap, g)));
  }
  if (auto v = m.verify(); !v) throw DomainError(path + ": module failed verification: " + v.detail);
  return m;
}

FactorSystem factor_system_from_json(const Json& j, const std::string& path) {
  FinAbGroup g = group_from_json(field(j, "group", path), path + "/group");
  StructureAlgebra b = algebra_from_json(field(j, "algebra", path), path + "/algebra");
  std::vector<CycloMatrix> table;
  const Json& sj = array_at(field(j, "S", path), path + "/S");
  for (std::size_t i = 0; i < sj.size(); ++i) table.push_back(matrix_from_json(sj[i], at(path + "/S", i)));
  OuterAction s = guarded(path + "/S", [&] { return outer_action_from_table(g, b, table); });
  const long long n = g.order();
  std::vector<std::optional<Unit>> omega(static_cast<std::size_t>(n * n));
  const std::string op = path + "/omega";
  const Json& oj = array_at(field(j, "omega", path), op);
  for (std::size_t e = 0; e < oj.size(); ++e) {
    const std::string ep = at(op, e);
    const Json& entry = array_at(oj[e], ep);
    if (entry.size() != 2 || !entry[0].is_array() || entry[0].size() != 2) fail(ep, "expected [[g, g'], value]");
    const long long x = g.index_of(element_from_json(g, entry[0][0], ep + "/0/0"));
    const long long y = g.index_of(element_from_json(g, entry[0][1], ep + "/0/1"));
    CycloVector v = vector_from_json(entry[1], ep + "/1");
    if (v.size() != b.dim()) fail(ep + "/1", "value has the wrong length");
    omega[static_cast<std::size_t>(x * n + y)] = guarded(ep, [&] { return make_unit(b, v); });
  }
  FactorSystem fs{std::move(s), {}};
  for (std::size_t i = 0; i < omega.size(); ++i) {
    if (!omega[i]) {
      const auto x = static_cast<long long>(i) / n, y = static_cast<long long>(i) % n;
      if (x != 0 && y != 0) fail(op, "omega is missing a pair");
      omega[i] = one_unit(b);
    }
    fs.omega.push_back(*omega[i]);
  }
  return fs;
}

GradedAlgebra graded_from_json(const Json& j, const std::string& path) {
  StructureAlgebra a = algebra_from_json(j, path);
  FinAbGroup g = group_from_json(field(j, "group", path), path + "/group");
  GradedAlgebra out{std::move(a), g, {}, std::vector<std::optional<Unit>>(static_cast<std::size_t>(g.order()))};
  const Json& gj = array_at(field(j, "grading", path), path + "/grading");
  if (gj.size() != out.algebra.dim()) fail(path + "/grading", "one degree per basis vector is required");
  for (std::size_t i = 0; i < gj.size(); ++i)
    out.grading.push_back(g.index_of(element_from_json(g, gj[i], at(path + "/grading", i))));
  if (auto it = j.find("units"); it != j.end()) {
    const std::string up = path + "/units";
    for (std::size_t i = 0; i < array_at(*it, up).size(); ++i) {
      const std::string ep = at(up, i);
      const long long deg = g.index_of(element_from_json(g, field((*it)[i], "degree", ep), ep + "/degree"));
      CycloVector v = vector_from_json(field((*it)[i], "value", ep), ep + "/value");
      if (v.size() != out.algebra.dim()) fail(ep + "/value", "value has the wrong length");
      out.units[static_cast<std::size_t>(deg)] = guarded(ep, [&] { return make_unit(out.algebra, v); });
    }
  }
  if (auto v = verify_grading(out); !v) throw DomainError(path + ": grading failed verification: " + v.detail);
  return out;
}

DynamicalSystem system_from_json(const Json& j, const std::string& path) {
  StructureAlgebra a = algebra_from_json(field(j, "algebra", path), path + "/algebra");
  FinAbGroup g = group_from_json(field(j, "group", path), path + "/group");
  std::vector<CycloMatrix> gens;
  const Json& aj = array_at(field(j, "action", path), path + "/action");
  if (aj.size() != g.rank()) fail(path + "/action", "one automorphism per group generator is required");
  for (std::size_t i = 0; i < aj.size(); ++i) gens.push_back(matrix_from_json(aj[i], at(path + "/action", i)));
  return guarded(path + "/action", [&] { return make_dynamical_system(std::move(a), std::move(g), std::move(gens)); });
}

TrivialityCertificate certificate_from_json(const Json& j, const DynamicalSystem& ds, const std::string& path) {
  const auto [gens, chars] = canonical_generators(ds.group);
  TrivialityCertificate cert{gens, chars, ds.group.orders(), {}, {}};
  const Json& wj = array_at(field(j, "witnesses", path), path + "/witnesses");
  if (wj.size() != gens.size()) fail(path + "/witnesses", "one witness per generator is required");
  for (std::size_t i = 0; i < wj.size(); ++i) {
    CycloVector v = vector_from_json(wj[i], at(path + "/witnesses", i));
    if (v.size() != ds.algebra.dim()) fail(at(path + "/witnesses", i), "witness has the wrong length");
    cert.witnesses.push_back(guarded(at(path + "/witnesses", i), [&] { return make_unit(ds.algebra, v); }));
  }
  if (auto it = j.find("transcript"); it != j.end() && it->is_array())
    for (const auto& t : *it)
      if (t.is_string()) cert.transcript.push_back(t.get<std::string>());
  if (auto v = verify_certificate(ds, cert); !v) throw DomainError(path + ": certificate failed verification: " + v.detail);
  return cert;
}

Json envelope(const std::string& kind, Json data) {
  return Json{{"version", kFormatVersion}, {"kind", kind}, {"data", std::move(data)}};
}

const Json& open_envelope(const Json& j, const std::string& kind) {
  if (as_string(field(j, "version", ""), "/version") != kFormatVersion) fail("/version", "unsupported format version");
  const std::string k = as_string(field(j, "kind", ""), "/kind");
  if (!kind.empty() && k != kind) fail("/kind", "expected kind '" + kind + "', found '" + k + "'");
  return field(j, "data", "");
}

}  // namespace ncpb
