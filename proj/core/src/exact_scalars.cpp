#include "ncpb/exact_scalars.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace ncpb {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw DomainError("empty rational literal");
  Rational q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0) {
    throw DomainError("malformed rational literal '" + s + "'");
  }
  q.canonicalize();
  return q;
}

// ---------------------------------------------------------------------------
// RootOfUnity

RootOfUnity::RootOfUnity(long long num, long long den) {
  if (den <= 0) throw DomainError("root of unity needs a positive denominator");
  num %= den;
  if (num < 0) num += den;
  long long g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

RootOfUnity RootOfUnity::pow(long long k) const {
  const long long kk = ((k % den_) + den_) % den_;
  return RootOfUnity(num_ * kk % den_, den_);
}

std::string RootOfUnity::to_string() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

RootOfUnity RootOfUnity::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) throw DomainError("root of unity must look like k/N");
  try {
    long long k = std::stoll(std::string(text.substr(0, slash)));
    long long n = std::stoll(std::string(text.substr(slash + 1)));
    return RootOfUnity(k, n);
  } catch (const std::logic_error&) {
    throw DomainError("malformed root of unity '" + std::string(text) + "'");
  }
}

RootOfUnity combine(const RootOfUnity& a, const RootOfUnity& b) {
  long long den = std::lcm(a.den(), b.den());
  long long num = a.num() * (den / a.den()) + b.num() * (den / b.den());
  return RootOfUnity(num, den);
}

// ---------------------------------------------------------------------------
// Cyclotomic polynomials

namespace {

std::vector<Integer> integer_poly_exact_div(std::vector<Integer> num, const std::vector<Integer>& den) {
  // den is monic.
  std::size_t dn = den.size() - 1;
  std::vector<Integer> q(num.size() - dn);
  for (std::size_t k = num.size(); k-- > dn;) {
    Integer c = num[k];
    q[k - dn] = c;
    if (c == 0) continue;
    for (std::size_t t = 0; t <= dn; ++t) num[k - dn + t] -= c * den[t];
  }
  return q;
}

std::vector<Integer> integer_poly_mul(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  std::vector<Integer> r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

}  // namespace

const std::vector<Integer>& cyclotomic_polynomial(unsigned long n) {
  if (n == 0) throw DomainError("cyclotomic polynomial needs N >= 1");
  static std::mutex mu;
  static std::map<unsigned long, std::unique_ptr<std::vector<Integer>>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return *it->second;
  }
  // x^n - 1 divided by Phi_d over proper divisors d.
  std::vector<Integer> num(n + 1);
  num[0] = -1;
  num[n] = 1;
  std::vector<Integer> den{1};
  for (unsigned long d = 1; d < n; ++d) {
    if (n % d == 0) den = integer_poly_mul(den, cyclotomic_polynomial(d));
  }
  auto phi = std::make_unique<std::vector<Integer>>(integer_poly_exact_div(std::move(num), den));
  std::lock_guard lock(mu);
  auto [it, inserted] = cache.emplace(n, std::move(phi));
  return *it->second;
}

unsigned long euler_phi(unsigned long n) {
  unsigned long result = n;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

unsigned long lcm_conductor(unsigned long a, unsigned long b) { return std::lcm(a, b); }

// ---------------------------------------------------------------------------
// CycloField: per-conductor reduction data, created once and never freed.

class CycloField {
 public:
  static const CycloField* get(unsigned long n);

  unsigned long n;
  std::size_t d;
  // x^k mod Phi_N for 0 <= k < max(N, 2d - 1), dense length d.
  std::vector<std::vector<Rational>> pow_mod;
  // zeta^k as trimmed elements, 0 <= k < N.
  std::vector<Cyclo> zeta_pows;

 private:
  explicit CycloField(unsigned long conductor);
  void finish();
};

CycloField::CycloField(unsigned long conductor) : n(conductor) {
  const auto& phi = cyclotomic_polynomial(n);
  d = phi.size() - 1;
  std::size_t count = std::max<std::size_t>(n, 2 * d - 1);
  pow_mod.assign(count, std::vector<Rational>(d));
  std::vector<Rational> cur(d);
  cur[0] = 1;
  for (std::size_t k = 0; k < count; ++k) {
    pow_mod[k] = cur;
    // cur <- x * cur mod Phi_N (Phi_N is monic of degree d)
    Rational top = cur[d - 1];
    for (std::size_t t = d - 1; t > 0; --t) cur[t] = cur[t - 1];
    cur[0] = 0;
    if (top != 0) {
      for (std::size_t t = 0; t < d; ++t) cur[t] -= top * Rational(phi[t]);
    }
  }
}

void CycloField::finish() {
  zeta_pows.reserve(n);
  for (unsigned long k = 0; k < n; ++k) {
    Cyclo z(this, pow_mod[k]);
    z.trim();
    zeta_pows.push_back(std::move(z));
  }
}

const CycloField* CycloField::get(unsigned long n) {
  if (n == 0) throw DomainError("conductor must be positive");
  static std::mutex mu;
  static std::map<unsigned long, std::unique_ptr<CycloField>> fields;
  std::lock_guard lock(mu);
  if (auto it = fields.find(n); it != fields.end()) return it->second.get();
  auto f = std::unique_ptr<CycloField>(new CycloField(n));
  CycloField* raw = f.get();
  fields.emplace(n, std::move(f));
  raw->finish();
  return raw;
}

// ---------------------------------------------------------------------------
// Polynomial helpers over Q (lowest degree first, trimmed).

namespace {

using Poly = std::vector<Rational>;

void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Returns (quotient, remainder).
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
  poly_trim(a);
  if (a.size() < b.size()) return {Poly{}, a};
  Poly q(a.size() - b.size() + 1);
  const Rational& lead = b.back();
  for (std::size_t k = a.size(); k-- >= b.size();) {
    if (a[k] == 0) {
      if (k == 0) break;
      continue;
    }
    Rational c = a[k] / lead;
    std::size_t shift = k - (b.size() - 1);
    q[shift] = c;
    for (std::size_t t = 0; t < b.size(); ++t) a[shift + t] -= c * b[t];
    if (k == 0) break;
  }
  poly_trim(a);
  poly_trim(q);
  return {q, a};
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  poly_trim(r);
  return r;
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  poly_trim(a);
  return a;
}

}  // namespace

// ---------------------------------------------------------------------------
// Cyclo

Cyclo::Cyclo() : field_(CycloField::get(1)) {}

Cyclo::Cyclo(long long value) : field_(CycloField::get(1)) {
  if (value != 0) c_.emplace_back(static_cast<long>(value));
}

Cyclo::Cyclo(Rational value, unsigned long conductor) : field_(CycloField::get(conductor)) {
  value.canonicalize();
  if (value != 0) c_.push_back(std::move(value));
}

Cyclo::Cyclo(const CycloField* field, std::vector<Rational> c) : field_(field), c_(std::move(c)) {}

void Cyclo::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Cyclo Cyclo::zeta(unsigned long conductor, long long k) {
  const CycloField* f = CycloField::get(conductor);
  long long n = static_cast<long long>(conductor);
  long long r = ((k % n) + n) % n;
  return f->zeta_pows[static_cast<std::size_t>(r)];
}

Cyclo Cyclo::from_root(const RootOfUnity& r, unsigned long conductor) {
  if (conductor % static_cast<unsigned long>(r.den()) != 0) {
    throw DomainError("root of unity " + r.to_string() + " does not embed into conductor " +
                      std::to_string(conductor));
  }
  long long k = r.num() * static_cast<long long>(conductor / static_cast<unsigned long>(r.den()));
  return zeta(conductor, k);
}

Cyclo Cyclo::from_coeffs(unsigned long conductor, std::vector<Rational> coeffs) {
  const CycloField* f = CycloField::get(conductor);
  if (coeffs.size() > f->d) {
    throw DomainError("too many coefficients for conductor " + std::to_string(conductor));
  }
  for (auto& q : coeffs) q.canonicalize();
  Cyclo x(f, std::move(coeffs));
  x.trim();
  return x;
}

unsigned long Cyclo::conductor() const noexcept { return field_->n; }
std::size_t Cyclo::degree() const noexcept { return field_->d; }

Rational Cyclo::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

std::vector<Rational> Cyclo::dense_coeffs() const {
  std::vector<Rational> out(field_->d);
  std::copy(c_.begin(), c_.end(), out.begin());
  return out;
}

bool Cyclo::is_one() const { return c_.size() == 1 && c_[0] == 1; }

Rational Cyclo::rational_value() const {
  if (!is_rational()) throw DomainError("cyclotomic number is not rational");
  return c_.empty() ? Rational(0) : c_[0];
}

Cyclo Cyclo::lifted(unsigned long conductor) const {
  if (conductor == field_->n) return *this;
  if (conductor % field_->n != 0) {
    throw DomainError("cannot embed conductor " + std::to_string(field_->n) + " into " +
                      std::to_string(conductor));
  }
  const CycloField* target = CycloField::get(conductor);
  unsigned long step = conductor / field_->n;
  std::vector<Rational> out(target->d);
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    const auto& p = target->pow_mod[(j * step) % conductor];
    for (std::size_t t = 0; t < target->d; ++t) {
      if (p[t] != 0) out[t] += c_[j] * p[t];
    }
  }
  Cyclo r(target, std::move(out));
  r.trim();
  return r;
}

void Cyclo::align(Cyclo& other) {
  if (field_ == other.field_) return;
  unsigned long n = std::lcm(field_->n, other.field_->n);
  if (field_->n != n) *this = lifted(n);
  if (other.field_->n != n) other = other.lifted(n);
}

Cyclo Cyclo::conjugate() const {
  if (c_.size() <= 1) return *this;
  const unsigned long n = field_->n;
  std::vector<Rational> out(field_->d);
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    const auto& p = field_->pow_mod[(n - j % n) % n];
    for (std::size_t t = 0; t < field_->d; ++t) {
      if (p[t] != 0) out[t] += c_[j] * p[t];
    }
  }
  Cyclo r(field_, std::move(out));
  r.trim();
  return r;
}

Cyclo Cyclo::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in Q(zeta_" + std::to_string(field_->n) + ")");
  if (c_.size() == 1) return Cyclo(field_, {1 / c_[0]});
  const auto& phi_int = cyclotomic_polynomial(field_->n);
  Poly m(phi_int.begin(), phi_int.end());
  Poly a = c_;
  // Extended Euclid tracking the coefficient of a: s * a == r (mod m).
  Poly r0 = m, r1 = a;
  Poly s0{}, s1{Rational(1)};
  while (!r1.empty()) {
    auto [q, r2] = poly_divmod(r0, r1);
    Poly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is the gcd; Phi_N is irreducible so it is a nonzero constant.
  if (r0.size() != 1) throw DivisionByZero("element is not invertible modulo Phi_N");
  Rational g = r0[0];
  Poly s = poly_divmod(s0, m).second;
  for (auto& q : s) q /= g;
  Cyclo result(field_, std::move(s));
  result.c_.resize(std::min(result.c_.size(), field_->d));
  result.trim();
  return result;
}

Cyclo Cyclo::pow(long long k) const {
  if (k < 0) return inverse().pow(-k);
  Cyclo result(field_, {Rational(1)});
  Cyclo base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

std::optional<RootOfUnity> Cyclo::as_root_of_unity() const {
  if (is_zero()) return std::nullopt;
  const long long n = static_cast<long long>(field_->n);
  Cyclo neg = -*this;
  for (long long k = 0; k < n; ++k) {
    const Cyclo& z = field_->zeta_pows[static_cast<std::size_t>(k)];
    if (z.c_ == c_) return RootOfUnity(k, n);
    if (z.c_ == neg.c_) return combine(RootOfUnity(k, n), RootOfUnity(1, 2));
  }
  return std::nullopt;
}

Cyclo Cyclo::operator-() const {
  Cyclo r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
  if (o.is_zero()) return *this;
  if (field_ != o.field_) {
    Cyclo b = o;
    align(b);
    return *this += b;
  }
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) {
  if (o.is_zero()) return *this;
  if (field_ != o.field_) {
    Cyclo b = o;
    align(b);
    return *this -= b;
  }
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Cyclo& Cyclo::operator*=(const Cyclo& o) {
  *this = *this * o;
  return *this;
}

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
  if (a.field_ != b.field_) {
    unsigned long n = std::lcm(a.field_->n, b.field_->n);
    return a.lifted(n) * b.lifted(n);
  }
  const CycloField* f = a.field_;
  if (a.c_.empty() || b.c_.empty()) return Cyclo(f, {});
  if (a.c_.size() == 1) {
    std::vector<Rational> out(b.c_.size());
    for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] = a.c_[0] * b.c_[i];
    return Cyclo(f, std::move(out));
  }
  if (b.c_.size() == 1) {
    std::vector<Rational> out(a.c_.size());
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] = b.c_[0] * a.c_[i];
    return Cyclo(f, std::move(out));
  }
  std::vector<Rational> prod(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] != 0) prod[i + j] += a.c_[i] * b.c_[j];
    }
  }
  const std::size_t d = f->d;
  std::vector<Rational> out(std::min(prod.size(), d));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = std::move(prod[k]);
  if (prod.size() > d) out.resize(d);
  for (std::size_t k = d; k < prod.size(); ++k) {
    if (prod[k] == 0) continue;
    const auto& p = f->pow_mod[k];
    for (std::size_t t = 0; t < d; ++t) {
      if (p[t] != 0) out[t] += prod[k] * p[t];
    }
  }
  Cyclo r(f, std::move(out));
  r.trim();
  return r;
}

bool operator==(const Cyclo& a, const Cyclo& b) {
  if (a.field_ == b.field_) return a.c_ == b.c_;
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  Cyclo x = a, y = b;
  x.align(y);
  return x.c_ == y.c_;
}

std::string Cyclo::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Rational q = c_[i];
    if (!first) os << (q < 0 ? " - " : " + ");
    else if (q < 0) os << "-";
    first = false;
    Rational aq = abs(q);
    if (i == 0) {
      os << aq.get_str();
    } else {
      if (aq != 1) os << aq.get_str() << "*";
      os << "z" << field_->n;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// CycloMatrix

CycloMatrix::CycloMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

CycloMatrix CycloMatrix::identity(std::size_t n) {
  CycloMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Cyclo(1);
  return m;
}

CycloMatrix CycloMatrix::from_columns(const std::vector<CycloVector>& cols, std::size_t rows) {
  CycloMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw DomainError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

CycloMatrix CycloMatrix::from_rows(const std::vector<CycloVector>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  CycloMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DomainError("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

CycloVector CycloMatrix::column(std::size_t c) const {
  CycloVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

CycloVector CycloMatrix::row(std::size_t r) const {
  return CycloVector(a_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                     a_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void CycloMatrix::set_column(std::size_t c, const CycloVector& v) {
  if (v.size() != rows_) throw DomainError("column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

unsigned long CycloMatrix::conductor() const {
  unsigned long n = 1;
  for (const auto& x : a_) {
    if (!x.is_zero()) n = std::lcm(n, x.conductor());
  }
  return n;
}

CycloMatrix CycloMatrix::transpose() const {
  CycloMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

CycloMatrix CycloMatrix::conjugate() const {
  CycloMatrix t(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) t.a_[i] = a_[i].conjugate();
  return t;
}

CycloMatrix CycloMatrix::conjugate_transpose() const { return transpose().conjugate(); }

CycloVector CycloMatrix::apply(const CycloVector& v) const {
  if (v.size() != cols_) throw DomainError("matrix-vector shape mismatch");
  CycloVector out(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Cyclo& m = (*this)(r, c);
      if (!m.is_zero()) out[r] += m * v[c];
    }
  }
  return out;
}

bool CycloMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Cyclo& x) { return x.is_zero(); });
}

CycloMatrix& CycloMatrix::operator+=(const CycloMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix shape mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

CycloMatrix& CycloMatrix::operator-=(const CycloMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix shape mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

CycloMatrix operator*(const CycloMatrix& a, const CycloMatrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix product shape mismatch");
  CycloMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Cyclo& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Cyclo& y = b(k, j);
        if (!y.is_zero()) out(i, j) += x * y;
      }
    }
  }
  return out;
}

CycloMatrix operator*(const Cyclo& s, const CycloMatrix& m) {
  CycloMatrix out = m;
  for (auto& x : out.a_) {
    if (!x.is_zero()) x = s * x;
  }
  return out;
}

bool operator==(const CycloMatrix& a, const CycloMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

// ---------------------------------------------------------------------------
// Vector helpers

CycloVector zero_vector(std::size_t n) { return CycloVector(n); }

CycloVector unit_vector(std::size_t n, std::size_t i) {
  CycloVector v(n);
  v.at(i) = Cyclo(1);
  return v;
}

bool is_zero(const CycloVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Cyclo& x) { return x.is_zero(); });
}

CycloVector operator+(const CycloVector& a, const CycloVector& b) {
  if (a.size() != b.size()) throw DomainError("vector length mismatch");
  CycloVector r = a;
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += b[i];
  return r;
}

CycloVector operator-(const CycloVector& a, const CycloVector& b) {
  if (a.size() != b.size()) throw DomainError("vector length mismatch");
  CycloVector r = a;
  for (std::size_t i = 0; i < a.size(); ++i) r[i] -= b[i];
  return r;
}

CycloVector operator*(const Cyclo& s, const CycloVector& v) {
  CycloVector r(v.size());
  if (s.is_zero()) return r;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) r[i] = s * v[i];
  }
  return r;
}

CycloVector conjugate(const CycloVector& v) {
  CycloVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i].conjugate();
  return r;
}

void axpy(CycloVector& y, const Cyclo& a, const CycloVector& x) {
  if (y.size() != x.size()) throw DomainError("vector length mismatch");
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero()) y[i] += a * x[i];
  }
}

std::optional<Rational> rational_root(const Rational& q, long long n) {
  if (q <= 0) return std::nullopt;
  mpz_class num, den;
  if (mpz_root(num.get_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(n)) == 0) return std::nullopt;
  if (mpz_root(den.get_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(n)) == 0) return std::nullopt;
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// z = q zeta_M^j with q > 0 rational, searched over the roots of unity of z's field.
std::optional<Rational> positive_rational_part(const Cyclo& z) {
  const unsigned long m = 2 * z.conductor();
  for (unsigned long j = 0; j < m; ++j) {
    Cyclo w = z * Cyclo::zeta(m, -static_cast<long long>(j));
    if (w.is_rational() && w.rational_value() > 0) return w.rational_value();
  }
  return std::nullopt;
}

}  // namespace ncpb
