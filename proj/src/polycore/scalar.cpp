#include "qtr/scalar.hpp"

#include "qtr/error.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace qtr {

namespace {

using QPoly = std::vector<mpq_class>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int merged_order(const Scalar& a, const Scalar& b) {
  if (a.is_rational() && b.is_rational()) return std::max(a.order(), b.order());
  if (a.is_rational()) return b.order();
  if (b.is_rational()) return a.order();
  if (a.order() != b.order()) {
    throw Error(ErrorKind::FieldMismatch, "cannot combine elements of Q(zeta_" +
                                              std::to_string(a.order()) + ") and Q(zeta_" +
                                              std::to_string(b.order()) + ")");
  }
  return a.order();
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// Quotient and remainder in Q[x]; b must be nonzero and trimmed.
std::pair<QPoly, QPoly> poly_divmod(QPoly a, const QPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  QPoly q(a.size() - b.size() + 1, 0);
  const mpq_class lead_inv = 1 / b.back();
  for (std::size_t i = a.size(); i-- > b.size() - 1;) {
    if (a[i] == 0) continue;
    const mpq_class c = a[i] * lead_inv;
    const std::size_t shift = i - (b.size() - 1);
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
  }
  trim(a);
  trim(q);
  return {q, a};
}

QPoly poly_sub(const QPoly& a, const QPoly& b) {
  QPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

std::string format_rational(const mpq_class& q) { return q.get_str(); }

}  // namespace

Scalar::Scalar(long value) : coeffs_{mpq_class(value)} { trim(coeffs_); }

Scalar::Scalar(mpq_class value, int order) : order_(order) {
  if (order < 1) throw Error(ErrorKind::InvalidInput, "cyclotomic order must be positive");
  value.canonicalize();
  if (value != 0) coeffs_.push_back(std::move(value));
}

Scalar Scalar::from_coefficients(std::vector<mpq_class> coefficients, int order) {
  if (order < 1) throw Error(ErrorKind::InvalidInput, "cyclotomic order must be positive");
  Scalar s;
  s.order_ = order;
  s.coeffs_ = std::move(coefficients);
  for (auto& c : s.coeffs_) c.canonicalize();
  s.reduce();
  return s;
}

Scalar Scalar::zeta(int order) {
  return from_coefficients({mpq_class(0), mpq_class(1)}, order);
}

void Scalar::reduce() {
  const auto& phi = cyclotomic_polynomial(order_);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = coeffs_.size(); i-- > deg;) {
    if (coeffs_[i] == 0) continue;
    const mpq_class c = coeffs_[i];
    for (std::size_t j = 0; j <= deg; ++j) coeffs_[i - deg + j] -= c * phi[j];
  }
  trim(coeffs_);
}

bool Scalar::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

mpq_class Scalar::rational() const {
  if (!is_rational()) throw Error(ErrorKind::InvalidInput, "scalar " + format() + " is not rational");
  return coeffs_.empty() ? mpq_class(0) : coeffs_[0];
}

Scalar Scalar::with_order(int order) const {
  if (is_rational()) {
    Scalar s = *this;
    s.order_ = order;
    return s;
  }
  if (order != order_) {
    throw Error(ErrorKind::FieldMismatch, "cannot move " + format() + " to Q(zeta_" +
                                              std::to_string(order) + ")");
  }
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  for (auto& c : s.coeffs_) c = -c;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  order_ = merged_order(*this, other);
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim(coeffs_);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) { return *this += -other; }

Scalar& Scalar::operator*=(const Scalar& other) {
  order_ = merged_order(*this, other);
  coeffs_ = poly_mul(coeffs_, other.coeffs_);
  reduce();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) { return *this *= other.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero scalar");
  if (is_rational()) return Scalar(1 / coeffs_[0], order_);

  // Extended Euclid against Phi_n: s*a + t*Phi = 1.
  const auto& phi_int = cyclotomic_polynomial(order_);
  QPoly phi(phi_int.begin(), phi_int.end());
  QPoly r0 = phi, r1 = coeffs_;
  QPoly t0, t1 = {mpq_class(1)};
  while (!r1.empty()) {
    auto [q, r] = poly_divmod(r0, r1);
    QPoly t2 = poly_sub(t0, poly_mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  // r0 is a nonzero constant because Phi_n is irreducible.
  const mpq_class scale = 1 / r0[0];
  for (auto& c : t0) c *= scale;
  return from_coefficients(std::move(t0), order_);
}

Scalar Scalar::pow(unsigned long exponent) const {
  Scalar result(mpq_class(1), order_);
  Scalar base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

std::string Scalar::format() const {
  if (coeffs_.empty()) return "0";
  if (coeffs_.size() == 1) return format_rational(coeffs_[0]);
  std::ostringstream out;
  out << '(';
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const mpq_class& c = coeffs_[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    const mpq_class magnitude = negative ? mpq_class(-c) : c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << format_rational(magnitude);
      continue;
    }
    if (magnitude != 1) out << format_rational(magnitude) << '*';
    out << 'z';
    if (k > 1) out << '^' << k;
  }
  out << ')';
  return out.str();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.coeffs_ != b.coeffs_) return false;
  return a.is_rational() || a.order_ == b.order_;
}

}  // namespace qtr
