#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "ncpb/errors.hpp"

namespace ncpb {

using Integer = mpz_class;
using Rational = mpq_class;

std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

/// Element of the torsion circle group Q/Z, stored as a reduced fraction k/N
/// with 0 <= k < N and representing exp(2*pi*i*k/N).
class RootOfUnity {
 public:
  RootOfUnity() = default;
  RootOfUnity(long long num, long long den);

  long long num() const noexcept { return num_; }
  long long den() const noexcept { return den_; }
  bool is_identity() const noexcept { return num_ == 0; }

  RootOfUnity inverse() const { return RootOfUnity(-num_, den_); }
  RootOfUnity pow(long long k) const;

  /// "k/N"
  std::string to_string() const;
  static RootOfUnity parse(std::string_view text);

  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
  friend auto operator<=>(const RootOfUnity&, const RootOfUnity&) = default;

 private:
  long long num_ = 0;
  long long den_ = 1;
};

/// Group law of the torsion circle: the product exp(2 pi i a) exp(2 pi i b).
RootOfUnity combine(const RootOfUnity& a, const RootOfUnity& b);

/// Phi_N as integer coefficients, lowest degree first. Monic.
const std::vector<Integer>& cyclotomic_polynomial(unsigned long n);

unsigned long euler_phi(unsigned long n);
unsigned long lcm_conductor(unsigned long a, unsigned long b);

class CycloField;

/// Exact element of Q(zeta_N), kept in the power basis 1, zeta, ..., zeta^{d-1}
/// of Q[x]/(Phi_N). Trailing zero coefficients are trimmed, so the zero element
/// has no stored coefficients.
///
/// Binary operations on different conductors re-embed both operands into
/// Q(zeta_lcm).
class Cyclo {
 public:
  Cyclo();
  Cyclo(long long value);  // NOLINT: integers embed implicitly
  explicit Cyclo(Rational value, unsigned long conductor = 1);

  /// zeta_N^k.
  static Cyclo zeta(unsigned long conductor, long long k = 1);
  /// Embeds exp(2 pi i r) into Q(zeta_conductor); r.den() must divide conductor.
  static Cyclo from_root(const RootOfUnity& r, unsigned long conductor);
  static Cyclo from_coeffs(unsigned long conductor, std::vector<Rational> coeffs);

  unsigned long conductor() const noexcept;
  std::size_t degree() const noexcept;
  /// Coordinate i in the power basis (zero beyond the stored length).
  Rational coeff(std::size_t i) const;
  std::vector<Rational> dense_coeffs() const;

  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const;
  bool is_rational() const noexcept { return c_.size() <= 1; }
  Rational rational_value() const;  // requires is_rational()

  Cyclo lifted(unsigned long conductor) const;
  Cyclo conjugate() const;
  /// Extended Euclid against Phi_N. Throws DivisionByZero on zero.
  Cyclo inverse() const;
  Cyclo pow(long long k) const;

  /// Root of unity value if this element is one (checks +-zeta_N^k).
  std::optional<RootOfUnity> as_root_of_unity() const;

  Cyclo operator-() const;
  Cyclo& operator+=(const Cyclo& o);
  Cyclo& operator-=(const Cyclo& o);
  Cyclo& operator*=(const Cyclo& o);
  Cyclo& operator/=(const Cyclo& o) { return *this *= o.inverse(); }

  friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
  friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inverse(); }
  friend bool operator==(const Cyclo& a, const Cyclo& b);

  std::string to_string() const;

 private:
  Cyclo(const CycloField* field, std::vector<Rational> c);
  void trim();
  void align(Cyclo& other);

  const CycloField* field_;
  std::vector<Rational> c_;

  friend class CycloField;
};

using CycloVector = std::vector<Cyclo>;

/// Dense matrix over the cyclotomic field, row-major.
class CycloMatrix {
 public:
  CycloMatrix() = default;
  CycloMatrix(std::size_t rows, std::size_t cols);

  static CycloMatrix identity(std::size_t n);
  static CycloMatrix from_columns(const std::vector<CycloVector>& cols, std::size_t rows);
  static CycloMatrix from_rows(const std::vector<CycloVector>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Cyclo& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Cyclo& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  CycloVector column(std::size_t c) const;
  CycloVector row(std::size_t r) const;
  void set_column(std::size_t c, const CycloVector& v);

  /// Least common conductor of all entries.
  unsigned long conductor() const;

  CycloMatrix transpose() const;
  CycloMatrix conjugate_transpose() const;
  CycloMatrix conjugate() const;
  CycloVector apply(const CycloVector& v) const;
  bool is_zero() const;

  CycloMatrix& operator+=(const CycloMatrix& o);
  CycloMatrix& operator-=(const CycloMatrix& o);
  friend CycloMatrix operator+(CycloMatrix a, const CycloMatrix& b) { return a += b; }
  friend CycloMatrix operator-(CycloMatrix a, const CycloMatrix& b) { return a -= b; }
  friend CycloMatrix operator*(const CycloMatrix& a, const CycloMatrix& b);
  friend CycloMatrix operator*(const Cyclo& s, const CycloMatrix& m);
  friend bool operator==(const CycloMatrix& a, const CycloMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Cyclo> a_;
};

// Vector helpers.
CycloVector zero_vector(std::size_t n);
CycloVector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const CycloVector& v);
CycloVector operator+(const CycloVector& a, const CycloVector& b);
CycloVector operator-(const CycloVector& a, const CycloVector& b);
CycloVector operator*(const Cyclo& s, const CycloVector& v);
CycloVector conjugate(const CycloVector& v);
void axpy(CycloVector& y, const Cyclo& a, const CycloVector& x);

/// The positive rational r with r^n = q, if there is one.
std::optional<Rational> rational_root(const Rational& q, long long n);
/// q > 0 rational with z = q * (root of unity), if z has that form.
std::optional<Rational> positive_rational_part(const Cyclo& z);

}  // namespace ncpb
