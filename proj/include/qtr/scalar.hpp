#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace qtr {

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
const std::vector<mpz_class>& cyclotomic_polynomial(int n);

/// Euler phi, i.e. the degree of Q(zeta_n) over Q.
int euler_phi(int n);

/// An exact element of Q(zeta_n), stored as a polynomial in zeta of degree
/// below phi(n), reduced modulo the n-th cyclotomic polynomial.
///
/// Rational elements (zeta-degree 0) are considered to live in every
/// cyclotomic field, so they mix freely with elements of any order. Two
/// irrational elements must share their order or arithmetic throws
/// FieldMismatch.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value);  // NOLINT(google-explicit-constructor)
  Scalar(mpq_class value, int order = 1);

  /// Builds a + b*zeta + c*zeta^2 + ... and reduces it.
  static Scalar from_coefficients(std::vector<mpq_class> coefficients, int order);

  /// The generator zeta_n = exp(2 pi i / n); equals 1 when n = 1.
  static Scalar zeta(int order);

  int order() const { return order_; }
  const std::vector<mpq_class>& coefficients() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  bool is_rational() const { return coeffs_.size() <= 1; }
  /// Throws InvalidInput when the element is not rational.
  mpq_class rational() const;

  /// Same element, tagged with a (compatible) order.
  Scalar with_order(int order) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);

  Scalar inverse() const;
  Scalar pow(unsigned long exponent) const;

  /// Canonical text: "3", "-1/2", or "(c0 + c1*z + ...)".
  std::string format() const;

  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  void reduce();

  std::vector<mpq_class> coeffs_;
  int order_ = 1;
};

inline Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
inline Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
inline Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
inline Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

/// Every root of unity contained in Q(zeta_n), in a fixed order starting at 1.
std::vector<Scalar> roots_of_unity(int order);

/// A primitive k-th root of unity inside Q(zeta_n), if the field has one.
std::optional<Scalar> primitive_root_of_unity(int k, int order);

/// Exact rational m-th root, if one exists (negative values only for odd m).
std::optional<mpq_class> rational_root(const mpq_class& value, unsigned m);

/// Finds r with r^m = s, restricted to r = (rational) * (root of unity in the
/// field). Returns nullopt for anything else, even if a root exists in a
/// larger field.
std::optional<Scalar> scalar_root(const Scalar& s, unsigned m);

}  // namespace qtr
