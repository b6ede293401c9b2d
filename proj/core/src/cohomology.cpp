#include "ncpb/cohomology.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_set>

#include "ncpb/integer_matrix.hpp"

namespace ncpb {

namespace {

std::string element_label(const FinAbGroup& g, long long idx) {
  std::string s = "(";
  auto e = g.element_at(idx);
  for (std::size_t i = 0; i < e.residues.size(); ++i) s += (i ? "," : "") + std::to_string(e.residues[i]);
  return s + ")";
}

}  // namespace

// ---------------------------------------------------------------------------
// Coefficient modules

CoeffModule CoeffModule::mu(long long n, FinAbGroup acting) {
  if (n < 1) throw DomainError("mu_n needs n >= 1");
  CoeffModule m{FinAbGroup({n}), std::move(acting), {}, true};
  return m;
}

CoeffModule CoeffModule::trivial(FinAbGroup carrier, FinAbGroup acting) {
  return CoeffModule{std::move(carrier), std::move(acting), {}, false};
}

CoeffModule CoeffModule::from_generator_matrices(FinAbGroup carrier, FinAbGroup acting,
                                                 const std::vector<std::vector<std::vector<long long>>>& images) {
  if (images.size() != acting.rank()) throw DomainError("need one matrix per generator of the acting group");
  const std::size_t k = carrier.rank();
  const long long size = carrier.order();
  std::vector<std::vector<long long>> gen_tables;
  for (const auto& a : images) {
    if (a.size() != k) throw DomainError("action matrix has the wrong number of rows");
    for (const auto& row : a)
      if (row.size() != k) throw DomainError("action matrix has the wrong number of columns");
    // Column j must have order dividing n_j for the map to be well defined.
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<long long> col(k);
      for (std::size_t r = 0; r < k; ++r) col[r] = a[r][j];
      if (carrier.index_of(carrier.scale(carrier.orders()[j], carrier.element(col))) != 0)
        throw DomainError("action matrix does not define a homomorphism of the carrier");
    }
    std::vector<long long> table(static_cast<std::size_t>(size));
    for (long long x = 0; x < size; ++x) {
      GroupElement e = carrier.element_at(x);
      std::vector<long long> y(k, 0);
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t j = 0; j < k; ++j) y[r] += a[r][j] * e.residues[j];
      table[static_cast<std::size_t>(x)] = carrier.index_of(carrier.element(y));
    }
    gen_tables.push_back(std::move(table));
  }
  CoeffModule m{std::move(carrier), std::move(acting), {}, false};
  m.action.assign(static_cast<std::size_t>(m.acting.order()), {});
  std::vector<long long> id(static_cast<std::size_t>(size));
  std::iota(id.begin(), id.end(), 0);
  m.action[0] = id;
  for (long long g = 1; g < m.acting.order(); ++g) {
    GroupElement e = m.acting.element_at(g);
    std::size_t i = 0;
    while (e.residues[i] == 0) ++i;
    e.residues[i] -= 1;
    const auto& prev = m.action[static_cast<std::size_t>(m.acting.index_of(e))];
    std::vector<long long> t(static_cast<std::size_t>(size));
    for (long long x = 0; x < size; ++x) t[static_cast<std::size_t>(x)] = gen_tables[i][static_cast<std::size_t>(prev[static_cast<std::size_t>(x)])];
    m.action[static_cast<std::size_t>(g)] = std::move(t);
  }
  if (Verdict v = m.verify(); !v) throw DomainError("not an action by automorphisms: " + v.detail);
  bool trivial = true;
  for (const auto& t : m.action) trivial = trivial && t == id;
  if (trivial) m.action.clear();
  return m;
}

std::string CoeffModule::name() const {
  std::string s = roots_of_unity ? "mu:" + std::to_string(carrier.order()) : carrier.to_string();
  return trivial_action() ? s : s + " (twisted)";
}

Verdict CoeffModule::verify() const {
  if (action.empty()) return Verdict::pass();
  const long long n = acting.order(), s = carrier.order();
  if (static_cast<long long>(action.size()) != n) return Verdict::fail("action table has the wrong size");
  for (long long g = 0; g < n; ++g) {
    const auto& t = action[static_cast<std::size_t>(g)];
    if (static_cast<long long>(t.size()) != s) return Verdict::fail("action row has the wrong size");
    std::vector<char> hit(static_cast<std::size_t>(s), 0);
    for (long long x = 0; x < s; ++x) {
      if (t[static_cast<std::size_t>(x)] < 0 || t[static_cast<std::size_t>(x)] >= s) return Verdict::fail("action value out of range");
      hit[static_cast<std::size_t>(t[static_cast<std::size_t>(x)])] = 1;
      if (g == 0 && t[static_cast<std::size_t>(x)] != x) return Verdict::fail("identity does not act trivially");
    }
    if (std::count(hit.begin(), hit.end(), 1) != s) return Verdict::fail("element " + std::to_string(g) + " is not bijective", {static_cast<std::size_t>(g)});
    for (long long x = 0; x < s; ++x)
      for (long long y = 0; y < s; ++y)
        if (t[static_cast<std::size_t>(carrier.add_index(x, y))] != carrier.add_index(t[static_cast<std::size_t>(x)], t[static_cast<std::size_t>(y)]))
          return Verdict::fail("element " + std::to_string(g) + " is not additive", {static_cast<std::size_t>(g)});
  }
  for (long long g = 0; g < n; ++g)
    for (long long h = 0; h < n; ++h) {
      const auto& gh = action[static_cast<std::size_t>(acting.add_index(g, h))];
      for (long long x = 0; x < s; ++x)
        if (gh[static_cast<std::size_t>(x)] != action[static_cast<std::size_t>(g)][static_cast<std::size_t>(action[static_cast<std::size_t>(h)][static_cast<std::size_t>(x)])])
          return Verdict::fail("action is not a homomorphism", {static_cast<std::size_t>(g), static_cast<std::size_t>(h)});
    }
  return Verdict::pass();
}

// ---------------------------------------------------------------------------
// Cochains

CochainComplex::CochainComplex(CoeffModule module) : m_(std::move(module)) {
  if (Verdict v = m_.verify(); !v) throw DomainError("coefficient module: " + v.detail);
}

std::size_t CochainComplex::table_size(int degree) const {
  std::size_t n = 1;
  for (int i = 0; i < degree; ++i) n *= static_cast<std::size_t>(group().order());
  return n;
}

std::size_t CochainComplex::index(const std::vector<long long>& args) const {
  std::size_t idx = 0;
  for (long long a : args) {
    if (a < 0 || a >= group().order()) throw DomainError("cochain argument out of range");
    idx = idx * static_cast<std::size_t>(group().order()) + static_cast<std::size_t>(a);
  }
  return idx;
}

std::vector<long long> CochainComplex::arguments(int degree, std::size_t index) const {
  std::vector<long long> args(static_cast<std::size_t>(degree));
  const auto n = static_cast<std::size_t>(group().order());
  for (int i = degree; i-- > 0;) {
    args[static_cast<std::size_t>(i)] = static_cast<long long>(index % n);
    index /= n;
  }
  return args;
}

Cochain CochainComplex::zero(int degree) const {
  if (degree < 0) throw DomainError("negative cochain degree");
  return Cochain{degree, std::vector<long long>(table_size(degree), 0)};
}

void CochainComplex::check(const Cochain& c) const {
  if (c.degree < 0 || c.values.size() != table_size(c.degree)) throw DomainError("cochain table has the wrong size");
  for (long long v : c.values)
    if (v < 0 || v >= m_.size()) throw DomainError("cochain value outside the coefficient module");
  if (!is_normalized(c)) throw DomainError("cochain is not normalized");
}

bool CochainComplex::is_normalized(const Cochain& c) const {
  for (std::size_t i = 0; i < c.values.size(); ++i) {
    if (c.values[i] == 0) continue;
    auto args = arguments(c.degree, i);
    if (std::find(args.begin(), args.end(), 0) != args.end()) return false;
  }
  return true;
}

Cochain CochainComplex::add(const Cochain& a, const Cochain& b) const {
  if (a.degree != b.degree) throw DomainError("cochain degrees differ");
  Cochain out = a;
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] = m_.carrier.add_index(a.values[i], b.values[i]);
  return out;
}

Cochain CochainComplex::neg(const Cochain& a) const {
  Cochain out = a;
  for (auto& v : out.values) v = m_.carrier.neg_index(v);
  return out;
}

Cochain CochainComplex::scale(long long k, const Cochain& a) const {
  Cochain out = a;
  for (auto& v : out.values) v = m_.carrier.index_of(m_.carrier.scale(k, m_.carrier.element_at(v)));
  return out;
}

Cochain CochainComplex::coboundary(const Cochain& h) const {
  check(h);
  const FinAbGroup& g = group();
  const FinAbGroup& c = m_.carrier;
  auto val = [&](const std::vector<long long>& args) { return h.values[index(args)]; };
  if (h.degree == 1) {
    Cochain out = zero(2);
    for (long long a = 0; a < g.order(); ++a)
      for (long long b = 0; b < g.order(); ++b) {
        long long v = c.add_index(val({a}), m_.act(a, val({b})));
        v = c.add_index(v, c.neg_index(val({g.add_index(a, b)})));
        out.values[index({a, b})] = v;
      }
    return out;
  }
  if (h.degree == 2) {
    Cochain out = zero(3);
    for (long long a = 0; a < g.order(); ++a)
      for (long long b = 0; b < g.order(); ++b)
        for (long long d = 0; d < g.order(); ++d) {
          long long v = m_.act(a, val({b, d}));
          v = c.add_index(v, val({a, g.add_index(b, d)}));
          v = c.add_index(v, c.neg_index(val({g.add_index(a, b), d})));
          v = c.add_index(v, c.neg_index(val({a, b})));
          out.values[index({a, b, d})] = v;
        }
    return out;
  }
  throw DomainError("coboundary is implemented in degrees 1 and 2");
}

Verdict CochainComplex::is_cocycle(const Cochain& w) const {
  Cochain d = coboundary(w);
  for (std::size_t i = 0; i < d.values.size(); ++i)
    if (d.values[i] != 0) {
      auto args = arguments(d.degree, i);
      std::vector<std::size_t> wit(args.begin(), args.end());
      std::string s;
      for (std::size_t k = 0; k < args.size(); ++k) s += (k ? " " : "") + element_label(group(), args[k]);
      return Verdict::fail("coboundary is nonzero at (" + s + ")", wit);
    }
  return Verdict::pass();
}

// ---------------------------------------------------------------------------
// Exhaustive search for solutions of sum_t +-g_t.x_{v_t} = target over a module

namespace {

struct Term {
  std::size_t var;
  bool negate;
  long long actor;
  const int* row = nullptr;  // x -> +-actor.x as a table, set by the search
};

struct Constraint {
  std::vector<Term> terms;
  long long target = 0;
};

/// Depth-first search over assignments of carrier values to variables. The
/// visiting order is fixed up front: whenever some constraint has a single
/// unplaced variable occurring exactly once, that variable comes next and is
/// solved for; otherwise the next variable is branched over, preferring one
/// that completes or nearly completes the most constraints. Each constraint is
/// checked as soon as its last variable is set.
class LinearSearch {
 public:
  LinearSearch(const CoeffModule& m, std::size_t nvars, std::vector<Constraint> constraints)
      : s_(m.size()), x_(nvars, 0), checks_(nvars), force_(nvars, npos) {
    const FinAbGroup& c = m.carrier;
    const FinAbGroup& g = m.acting;
    add_.resize(static_cast<std::size_t>(s_ * s_));
    neg_.resize(static_cast<std::size_t>(s_));
    for (long long a = 0; a < s_; ++a) {
      neg_[static_cast<std::size_t>(a)] = static_cast<int>(c.neg_index(a));
      for (long long b = 0; b < s_; ++b) add_[static_cast<std::size_t>(a * s_ + b)] = static_cast<int>(c.add_index(a, b));
    }
    act_.resize(static_cast<std::size_t>(g.order() * s_));
    act_neg_.resize(static_cast<std::size_t>(g.order() * s_));
    inv_actor_.resize(static_cast<std::size_t>(g.order()));
    for (long long a = 0; a < g.order(); ++a) {
      inv_actor_[static_cast<std::size_t>(a)] = g.neg_index(a);
      for (long long x = 0; x < s_; ++x) {
        const int y = static_cast<int>(m.act(a, x));
        act_[static_cast<std::size_t>(a * s_ + x)] = y;
        act_neg_[static_cast<std::size_t>(a * s_ + x)] = neg_[static_cast<std::size_t>(y)];
      }
    }
    for (auto& con : constraints) {
      if (con.terms.empty()) {
        if (con.target != 0) infeasible_ = true;
        continue;
      }
      for (auto& t : con.terms) t.row = &(t.negate ? act_neg_ : act_)[static_cast<std::size_t>(t.actor * s_)];
      cons_.push_back(std::move(con));
    }
    plan();
  }

  /// visit returns false to stop the search.
  void run(const std::function<bool(const std::vector<int>&)>& visit, std::uint64_t budget) {
    if (infeasible_) return;
    visit_ = &visit;
    budget_ = budget;
    stop_ = false;
    dfs(0);
  }

  std::uint64_t steps() const noexcept { return steps_; }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  void plan() {
    const std::size_t nv = x_.size();
    std::vector<std::vector<std::size_t>> vars_of(cons_.size());
    std::vector<std::vector<std::size_t>> cons_of(nv);
    for (std::size_t ci = 0; ci < cons_.size(); ++ci) {
      for (const auto& t : cons_[ci].terms) vars_of[ci].push_back(t.var);
      std::sort(vars_of[ci].begin(), vars_of[ci].end());
      vars_of[ci].erase(std::unique(vars_of[ci].begin(), vars_of[ci].end()), vars_of[ci].end());
      for (std::size_t v : vars_of[ci]) cons_of[v].push_back(ci);
    }
    std::vector<std::size_t> open(cons_.size());  // distinct unplaced variables per constraint
    for (std::size_t ci = 0; ci < cons_.size(); ++ci) open[ci] = vars_of[ci].size();
    std::vector<char> placed(nv, 0);
    std::vector<std::size_t> forced_by(nv, npos);
    auto occurs_once = [&](std::size_t ci, std::size_t v) {
      return std::count_if(cons_[ci].terms.begin(), cons_[ci].terms.end(), [&](const Term& t) { return t.var == v; }) == 1;
    };
    auto sole_open = [&](std::size_t ci) {
      for (std::size_t v : vars_of[ci])
        if (!placed[v]) return v;
      return npos;
    };

    while (order_.size() < nv) {
      std::size_t next = npos, reason = npos;
      for (std::size_t ci = 0; ci < cons_.size() && next == npos; ++ci) {
        if (open[ci] != 1) continue;
        std::size_t v = sole_open(ci);
        if (occurs_once(ci, v)) {
          next = v;
          reason = ci;
        }
      }
      if (next == npos) {
        long best = -1;
        for (std::size_t v = 0; v < nv; ++v) {
          if (placed[v]) continue;
          long score = 0;
          for (std::size_t ci : cons_of[v]) {
            if (open[ci] == 1) score += 1000;
            else if (open[ci] == 2) score += 1;
          }
          if (score > best) {
            best = score;
            next = v;
          }
        }
      }
      placed[next] = 1;
      position_.push_back(next);
      order_.push_back(next);
      force_[next] = reason;
      for (std::size_t ci : cons_of[next]) {
        if (--open[ci] == 0 && ci != reason) checks_[next].push_back(ci);
      }
    }
  }

  int term_value(const Term& t) const { return t.row[x_[t.var]]; }

  bool holds(std::size_t ci) const {
    const Constraint& c = cons_[ci];
    int acc = 0;
    const int* add = add_.data();
    const int s = static_cast<int>(s_);
    for (const auto& t : c.terms) acc = add[acc * s + term_value(t)];
    return acc == c.target;
  }

  void charge() {
    if (++steps_ > budget_) throw BudgetExceeded("exhaustive cochain search", budget_);
  }

  bool checks_pass(std::size_t v) const {
    for (std::size_t ci : checks_[v])
      if (!holds(ci)) return false;
    return true;
  }

  void dfs(std::size_t pos) {
    if (pos == order_.size()) {
      charge();
      if (!(*visit_)(x_)) stop_ = true;
      return;
    }
    const std::size_t v = order_[pos];
    if (force_[v] != npos) {
      const Constraint& c = cons_[force_[v]];
      int rest = 0;
      const Term* own = nullptr;
      for (const auto& t : c.terms) {
        if (t.var == v) {
          own = &t;
          continue;
        }
        rest = add_[static_cast<std::size_t>(rest * s_ + term_value(t))];
      }
      int need = add_[static_cast<std::size_t>(c.target * s_ + neg_[static_cast<std::size_t>(rest)])];
      if (own->negate) need = neg_[static_cast<std::size_t>(need)];
      x_[v] = act_[static_cast<std::size_t>(inv_actor_[static_cast<std::size_t>(own->actor)] * s_ + need)];
      if (checks_pass(v)) dfs(pos + 1);
      return;
    }
    for (int val = 0; val < s_ && !stop_; ++val) {
      charge();
      x_[v] = val;
      if (checks_pass(v)) dfs(pos + 1);
    }
    x_[v] = 0;
  }

  long long s_;
  std::vector<int> add_, neg_, act_, act_neg_;
  std::vector<long long> inv_actor_;
  std::vector<Constraint> cons_;
  std::vector<int> x_;
  std::vector<std::vector<std::size_t>> checks_;
  std::vector<std::size_t> force_;
  std::vector<std::size_t> order_, position_;
  bool infeasible_ = false;
  const std::function<bool(const std::vector<int>&)>* visit_ = nullptr;
  std::uint64_t budget_ = 0;
  std::uint64_t steps_ = 0;
  bool stop_ = false;
};

/// Variables of normalized q-cochains: argument tuples with no identity entry.
struct NormalizedCoords {
  long long n;  // group order
  int q;

  std::size_t count() const {
    std::size_t c = 1;
    for (int i = 0; i < q; ++i) c *= static_cast<std::size_t>(n - 1);
    return c;
  }
  // npos if an argument is the identity
  std::size_t var(std::initializer_list<long long> args) const {
    std::size_t v = 0;
    for (long long a : args) {
      if (a == 0) return static_cast<std::size_t>(-1);
      v = v * static_cast<std::size_t>(n - 1) + static_cast<std::size_t>(a - 1);
    }
    return v;
  }
  std::vector<long long> args(std::size_t v) const {
    std::vector<long long> out(static_cast<std::size_t>(q));
    for (int i = q; i-- > 0;) {
      out[static_cast<std::size_t>(i)] = static_cast<long long>(v % static_cast<std::size_t>(n - 1)) + 1;
      v /= static_cast<std::size_t>(n - 1);
    }
    return out;
  }
};

void push_term(std::vector<Term>& terms, std::size_t var, bool negate, long long actor) {
  if (var != static_cast<std::size_t>(-1)) terms.push_back(Term{var, negate, actor});
}

/// Terms of (d h)(args) for a normalized h of degree args.size() - 1.
std::vector<Term> coboundary_terms(const FinAbGroup& g, const NormalizedCoords& h, const std::vector<long long>& a) {
  std::vector<Term> t;
  if (h.q == 1) {
    push_term(t, h.var({a[0]}), false, 0);
    push_term(t, h.var({a[1]}), false, a[0]);
    push_term(t, h.var({g.add_index(a[0], a[1])}), true, 0);
  } else {
    push_term(t, h.var({a[1], a[2]}), false, a[0]);
    push_term(t, h.var({a[0], g.add_index(a[1], a[2])}), false, 0);
    push_term(t, h.var({g.add_index(a[0], a[1]), a[2]}), true, 0);
    push_term(t, h.var({a[0], a[1]}), true, 0);
  }
  return t;
}

/// All argument tuples of length p with no identity entry, in index order.
std::vector<std::vector<long long>> nonidentity_tuples(long long n, int p) {
  NormalizedCoords c{n, p};
  std::vector<std::vector<long long>> out;
  for (std::size_t v = 0; v < c.count(); ++v) out.push_back(c.args(v));
  return out;
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

long long carrier_exponent(const FinAbGroup& c) { return c.exponent(); }

std::vector<long long> prime_powers_dividing(long long e) {
  std::vector<long long> out;
  long long rest = e;
  for (long long p = 2; p <= rest; ++p) {
    if (rest % p) continue;
    long long q = 1;
    while (rest % p == 0) {
      rest /= p;
      q *= p;
      out.push_back(q);
    }
  }
  return out;
}

}  // namespace

long long CohomologyResult::order() const {
  long long o = 1;
  for (long long f : factors) o *= f;
  return o;
}

CohomologyResult h2_bruteforce(const CoeffModule& module, std::uint64_t budget) {
  CochainComplex cx(module);
  const FinAbGroup& g = module.acting;
  const FinAbGroup& c = module.carrier;
  const long long n = g.order(), s = module.size();
  if (s > 256) throw DomainError("brute force supports coefficient modules of order <= 256");

  CohomologyResult res;
  res.method = "bruteforce";
  if (n == 1 || s == 1) {
    res.cocycles = res.coboundaries = 1;
    return res;
  }

  const NormalizedCoords one{n, 1}, two{n, 2};
  const std::size_t nvars = two.count();

  // B^2 = d C^1, enumerated exhaustively.
  const std::uint64_t c1 = saturating_pow(static_cast<std::uint64_t>(s), one.count(), budget);
  if (c1 > budget) throw BudgetExceeded("enumeration of C^1", budget);
  std::unordered_set<std::string> b2;
  {
    std::vector<int> add(static_cast<std::size_t>(s * s)), negt(static_cast<std::size_t>(s)),
        act(static_cast<std::size_t>(n * s)), sum(static_cast<std::size_t>(n * n));
    for (long long a = 0; a < s; ++a) {
      negt[static_cast<std::size_t>(a)] = static_cast<int>(c.neg_index(a));
      for (long long b = 0; b < s; ++b) add[static_cast<std::size_t>(a * s + b)] = static_cast<int>(c.add_index(a, b));
    }
    for (long long a = 0; a < n; ++a) {
      for (long long x = 0; x < s; ++x) act[static_cast<std::size_t>(a * s + x)] = static_cast<int>(module.act(a, x));
      for (long long b = 0; b < n; ++b) sum[static_cast<std::size_t>(a * n + b)] = static_cast<int>(g.add_index(a, b));
    }
    std::vector<int> h(static_cast<std::size_t>(n), 0);  // h[0] = 0
    std::string key(nvars, '\0');
    b2.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(c1, 1u << 22)));
    for (std::uint64_t step = 0; step < c1; ++step) {
      std::size_t v = 0;
      for (long long a = 1; a < n; ++a)
        for (long long b = 1; b < n; ++b, ++v) {
          int x = add[static_cast<std::size_t>(h[static_cast<std::size_t>(a)] * s + act[static_cast<std::size_t>(a * s + h[static_cast<std::size_t>(b)])])];
          x = add[static_cast<std::size_t>(x * s + negt[static_cast<std::size_t>(h[static_cast<std::size_t>(sum[static_cast<std::size_t>(a * n + b)])])])];
          key[v] = static_cast<char>(x);
        }
      b2.insert(key);
      for (long long a = n - 1; a >= 1; --a) {
        if (++h[static_cast<std::size_t>(a)] < s) break;
        h[static_cast<std::size_t>(a)] = 0;
      }
    }
  }
  res.coboundaries = b2.size();

  std::vector<Constraint> cons;
  for (const auto& t : nonidentity_tuples(n, 3)) cons.push_back(Constraint{coboundary_terms(g, two, t), 0});

  // H^2 is killed by gcd(|G|, exp M); count classes killed by each prime power.
  const long long e = std::gcd(n, carrier_exponent(c));
  const std::vector<long long> powers = prime_powers_dividing(e);
  std::vector<std::vector<char>> mul;
  for (long long d : powers) {
    std::vector<char> t(static_cast<std::size_t>(s));
    for (long long x = 0; x < s; ++x) t[static_cast<std::size_t>(x)] = static_cast<char>(c.index_of(c.scale(d, c.element_at(x))));
    mul.push_back(std::move(t));
  }
  std::vector<std::uint64_t> killed(powers.size(), 0);

  std::string key(nvars, '\0'), scaled(nvars, '\0');
  LinearSearch search(module, nvars, cons);
  search.run(
      [&](const std::vector<int>& x) {
        ++res.cocycles;
        for (std::size_t i = 0; i < powers.size(); ++i) {
          for (std::size_t v = 0; v < nvars; ++v) scaled[v] = mul[i][static_cast<std::size_t>(x[v])];
          if (b2.count(scaled)) ++killed[i];
        }
        return true;
      },
      budget > c1 ? budget - c1 : 0);

  if (res.cocycles % res.coboundaries) throw Error("|B^2| does not divide |Z^2|");
  const auto order = static_cast<long long>(res.cocycles / res.coboundaries);
  res.factors = invariants_from_torsion_counts(order, [&](long long d) -> long long {
    long long dd = std::gcd(d, e);
    if (dd == 1) return 1;
    auto it = std::find(powers.begin(), powers.end(), dd);
    return static_cast<long long>(killed[static_cast<std::size_t>(it - powers.begin())] / res.coboundaries);
  });

  // Representatives of a generating set, when the group is small enough to list.
  if (order > 1 && order <= 64 && res.cocycles <= (std::uint64_t{1} << 20)) {
    std::vector<int> add(static_cast<std::size_t>(s * s)), negt(static_cast<std::size_t>(s));
    for (long long a = 0; a < s; ++a) {
      negt[static_cast<std::size_t>(a)] = static_cast<int>(c.neg_index(a));
      for (long long b = 0; b < s; ++b) add[static_cast<std::size_t>(a * s + b)] = static_cast<int>(c.add_index(a, b));
    }
    auto combine_keys = [&](const std::string& a, const std::string& b, bool subtract) {
      std::string d(nvars, '\0');
      for (std::size_t v = 0; v < nvars; ++v) {
        int y = static_cast<unsigned char>(b[v]);
        if (subtract) y = negt[static_cast<std::size_t>(y)];
        d[v] = static_cast<char>(add[static_cast<std::size_t>(static_cast<unsigned char>(a[v]) * s + y)]);
      }
      return d;
    };
    auto difference_key = [&](const std::string& a, const std::string& b) { return combine_keys(a, b, true); };
    std::vector<std::string> reps;
    LinearSearch again(module, nvars, cons);
    again.run(
        [&](const std::vector<int>& x) {
          for (std::size_t v = 0; v < nvars; ++v) key[v] = static_cast<char>(x[v]);
          for (const auto& r : reps)
            if (b2.count(difference_key(key, r))) return true;
          reps.push_back(key);
          return static_cast<long long>(reps.size()) < order;
        },
        budget);

    auto class_of = [&](const std::string& k) -> std::size_t {
      for (std::size_t i = 0; i < reps.size(); ++i)
        if (b2.count(difference_key(k, reps[i]))) return i;
      throw Error("cocycle outside the enumerated classes");
    };
    auto sum_key = [&](const std::string& a, const std::string& b) { return combine_keys(a, b, false); };
    std::vector<long long> ord(reps.size(), 1);
    for (std::size_t i = 0; i < reps.size(); ++i) {
      std::string acc = reps[i];
      while (class_of(acc) != 0) {
        acc = sum_key(acc, reps[i]);
        ++ord[i];
      }
    }
    std::vector<std::size_t> by_order(reps.size());
    std::iota(by_order.begin(), by_order.end(), 0);
    std::stable_sort(by_order.begin(), by_order.end(), [&](std::size_t a, std::size_t b) { return ord[a] > ord[b]; });
    std::vector<char> generated(reps.size(), 0);
    generated[0] = 1;
    std::vector<std::size_t> gens;
    for (std::size_t i : by_order) {
      if (generated[i]) continue;
      gens.push_back(i);
      // close the generated set under adding reps[i]
      bool grew = true;
      while (grew) {
        grew = false;
        for (std::size_t j = 0; j < reps.size(); ++j) {
          if (!generated[j]) continue;
          std::size_t k = class_of(sum_key(reps[j], reps[i]));
          if (!generated[k]) generated[k] = grew = 1;
        }
      }
    }
    for (std::size_t i : gens) {
      Cochain w = cx.zero(2);
      for (std::size_t v = 0; v < nvars; ++v) {
        auto a = two.args(v);
        w.values[cx.index(a)] = static_cast<unsigned char>(reps[i][v]);
      }
      res.representatives.push_back(std::move(w));
      res.representative_orders.push_back(ord[i]);
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// Integer linearization (trivial action)

namespace {

// Normalized integer coboundaries C^1 -> C^2 and C^2 -> C^3 with trivial action.
IntMatrix integer_d1(const FinAbGroup& g) {
  const long long n = g.order();
  NormalizedCoords one{n, 1}, two{n, 2};
  IntMatrix d(two.count(), one.count());
  for (const auto& t : nonidentity_tuples(n, 2)) {
    const std::size_t row = two.var({t[0], t[1]});
    for (const auto& term : coboundary_terms(g, one, t)) d(row, term.var) += term.negate ? -1 : 1;
  }
  return d;
}

IntMatrix integer_d2(const FinAbGroup& g) {
  const long long n = g.order();
  NormalizedCoords two{n, 2}, three{n, 3};
  IntMatrix d(three.count(), two.count());
  for (const auto& t : nonidentity_tuples(n, 3)) {
    const std::size_t row = three.var({t[0], t[1], t[2]});
    for (const auto& term : coboundary_terms(g, two, t)) d(row, term.var) += term.negate ? -1 : 1;
  }
  return d;
}

long long to_ll(const Integer& z) {
  if (!z.fits_slong_p()) throw Error("integer too large");
  return z.get_si();
}

}  // namespace

CohomologyResult h2_snf(const FinAbGroup& group, long long m) {
  if (m < 1) throw DomainError("mu_m needs m >= 1");
  CohomologyResult res;
  res.method = "snf";
  if (group.order() == 1 || m == 1) return res;

  const IntMatrix d1 = integer_d1(group);
  const IntMatrix d2 = integer_d2(group);
  const SmithForm s = smith_normal_form(d2);
  const std::size_t n2 = d2.cols(), r = s.rank;

  // In y = Q^{-1} x coordinates, D2 x = 0 mod m reads sigma_i y_i = 0 mod m.
  std::vector<long long> cyclic;
  for (std::size_t i = 0; i < r; ++i) {
    long long gcd = std::gcd(to_ll(s.diagonal[i]), m);
    if (gcd > 1) cyclic.push_back(gcd);
  }
  // Coboundaries live in the free coordinates (D2 D1 = 0 forces the pivot rows
  // of Q^{-1} D1 to vanish); the free part of Z^2/B^2 is (Z/m)^{n2-r} / im.
  const IntMatrix y = s.right_inverse * d1;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < y.cols(); ++j)
      if (y(i, j) != 0) throw Error("coboundary image meets the pivot coordinates");
  const std::size_t free = n2 - r;
  if (free > 0) {
    IntMatrix rel(y.cols() + free, free);
    for (std::size_t j = 0; j < y.cols(); ++j)
      for (std::size_t i = 0; i < free; ++i) rel(j, i) = y(r + i, j);
    for (std::size_t i = 0; i < free; ++i) rel(y.cols() + i, i) = static_cast<long>(m);
    for (long long f : cokernel_invariants(rel)) {
      if (f == 0) throw Error("free summand in a finite quotient");
      cyclic.push_back(f);
    }
  }
  res.factors = normalize_invariant_factors(cyclic);
  return res;
}

CohomologyResult h2_circle(const FinAbGroup& group, long long m) {
  if (m < 0) throw DomainError("torsion index must be >= 0");
  CohomologyResult res;
  res.method = "circle";
  if (group.order() == 1) return res;
  const SmithForm s = smith_normal_form(integer_d2(group));
  std::vector<long long> cyclic;
  for (std::size_t i = 0; i < s.rank; ++i) {
    long long sigma = to_ll(s.diagonal[i]);
    long long f = m == 0 ? sigma : std::gcd(sigma, m);
    if (f > 1) cyclic.push_back(f);
  }
  res.factors = normalize_invariant_factors(cyclic);
  return res;
}

CohomologyResult h2_twisted_structural(const CoeffModule& module) {
  if (Verdict v = module.verify(); !v) throw DomainError("coefficient module: " + v.detail);
  const FinAbGroup& g = module.acting;
  const FinAbGroup& lam = module.carrier;
  CohomologyResult res;
  res.method = "structural";
  if (g.order() == 1) return res;

  if (g.rank() == 1) {
    // H^2(C_n, Lambda)_S = Lambda^{C_n} / N Lambda with N = sum_k S(k).
    const long long n = g.order();
    std::vector<GroupElement> fixed, norms;
    for (long long x = 0; x < lam.order(); ++x) {
      if (module.act(1, x) == x) fixed.push_back(lam.element_at(x));
      long long acc = 0;
      for (long long k = 0; k < n; ++k) acc = lam.add_index(acc, module.act(k, x));
      norms.push_back(lam.element_at(acc));
    }
    res.factors = subquotient_invariants(subgroup_from_elements(lam, fixed), subgroup_from_elements(lam, norms));
    return res;
  }
  if (!module.trivial_action()) throw DomainError("structural H^2 needs a cyclic group or a trivial action");
  std::vector<long long> cyclic;
  const auto& ns = g.orders();
  for (long long l : lam.orders())
    for (std::size_t i = 0; i < ns.size(); ++i) {
      cyclic.push_back(std::gcd(ns[i], l));
      for (std::size_t j = i + 1; j < ns.size(); ++j) cyclic.push_back(std::gcd(std::gcd(ns[i], ns[j]), l));
    }
  res.factors = normalize_invariant_factors(cyclic);
  return res;
}

std::optional<Cochain> class_is_trivial(const CoeffModule& module, const Cochain& w, std::uint64_t budget) {
  CochainComplex cx(module);
  if (w.degree != 2 && w.degree != 3) throw DomainError("class_is_trivial handles degrees 2 and 3");
  if (w.values.size() != cx.table_size(w.degree)) throw DomainError("cochain table has the wrong size");
  for (long long v : w.values)
    if (v < 0 || v >= module.size()) throw DomainError("cochain value outside the coefficient module");
  if (!cx.is_normalized(w)) return std::nullopt;  // coboundaries of normalized cochains are normalized

  const FinAbGroup& g = module.acting;
  const long long n = g.order();
  const NormalizedCoords h{n, w.degree - 1};
  std::vector<Constraint> cons;
  for (const auto& t : nonidentity_tuples(n, w.degree))
    cons.push_back(Constraint{coboundary_terms(g, h, t), w.values[cx.index(t)]});

  std::optional<Cochain> found;
  LinearSearch search(module, h.count(), std::move(cons));
  search.run(
      [&](const std::vector<int>& x) {
        Cochain c = cx.zero(h.q);
        for (std::size_t v = 0; v < x.size(); ++v) c.values[cx.index(h.args(v))] = x[v];
        found = std::move(c);
        return false;
      },
      budget);
  if (found && cx.coboundary(*found) != w) throw Error("trivializing cochain failed re-verification");
  return found;
}

std::optional<Cochain> circle_class_is_trivial(const FinAbGroup& group, long long m, const Cochain& w,
                                               std::uint64_t budget) {
  if (w.degree != 2) throw DomainError("circle classes are 2-cocycles");
  const long long e = group.exponent();
  Cochain lifted = w;
  for (auto& v : lifted.values) {
    if (v < 0 || v >= m) throw DomainError("cochain value outside mu_m");
    v *= e;
  }
  return class_is_trivial(CoeffModule::mu(m * e, group), lifted, budget);
}

Cochain bilinear_cocycle(const FinAbGroup& group, long long m, const std::vector<std::vector<long long>>& k) {
  const std::size_t r = group.rank();
  if (k.size() != r) throw DomainError("coefficient table must be rank x rank");
  for (std::size_t i = 0; i < r; ++i) {
    if (k[i].size() != r) throw DomainError("coefficient table must be rank x rank");
    for (std::size_t j = 0; j < r; ++j)
      if (k[i][j] % m != 0 && m % std::gcd(group.orders()[i], group.orders()[j]) != 0)
        throw DomainError("bilinear form is not well defined into mu_m");
  }
  CochainComplex cx(CoeffModule::mu(m, group));
  Cochain w = cx.zero(2);
  for (long long a = 0; a < group.order(); ++a)
    for (long long b = 0; b < group.order(); ++b) {
      auto ga = group.element_at(a), gb = group.element_at(b);
      long long v = 0;
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
          long long d = std::gcd(group.orders()[i], group.orders()[j]);
          v = (v + (k[i][j] % m) * ga.residues[i] % m * gb.residues[j] % m * ((m / d) % m)) % m;
        }
      w.values[cx.index({a, b})] = ((v % m) + m) % m;
    }
  return w;
}

}  // namespace ncpb
