#pragma once

#include "qtr/scalar.hpp"

#include <array>
#include <compare>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qtr {

/// Exponents of x0, x1, x2.
using Monomial = std::array<int, 3>;

inline int monomial_degree(const Monomial& m) { return m[0] + m[1] + m[2]; }

/// Every monomial of the given degree in descending graded-lex order.
std::vector<Monomial> monomials_of_degree(int degree);

/// A homogeneous polynomial in x0, x1, x2 over Q(zeta_n).
///
/// Terms are kept in descending graded-lex order with nonzero coefficients
/// only. The zero form has no terms and no degree; it is compatible with any
/// degree in additive operations.
class Form {
 public:
  // Descending lex on equal-degree exponents is descending graded-lex.
  using TermMap = std::map<Monomial, Scalar, std::greater<>>;

  Form() = default;
  explicit Form(int order) : order_(order) {}
  Form(const Scalar& c, int order);
  Form(const Scalar& c, const Monomial& m, int order);

  /// Throws NonHomogeneous on mixed degrees; zero coefficients are dropped.
  static Form from_terms(const std::vector<std::pair<Monomial, Scalar>>& terms, int order);

  static Form constant(const Scalar& c, int order) { return Form(c, order); }
  static Form one(int order) { return Form(Scalar(1), order); }
  static Form variable(int index, int order);

  int order() const { return order_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || degree() == 0; }
  /// Total degree; nullopt for the zero form.
  std::optional<int> degree_opt() const;
  /// Total degree; throws InvalidInput for the zero form.
  int degree() const;
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  /// Coefficient of a monomial (zero when absent).
  Scalar coefficient(const Monomial& m) const;
  /// Graded-lex leading term; throws for the zero form.
  const std::pair<const Monomial, Scalar>& leading_term() const;
  const Scalar& leading_coefficient() const { return leading_term().second; }

  /// Divides by the leading coefficient; the zero form is returned as is.
  Form monic() const;

  Form operator-() const;
  Form& operator+=(const Form& other);
  Form& operator-=(const Form& other);
  Form& operator*=(const Form& other);
  Form& operator*=(const Scalar& c);

  Form pow(unsigned exponent) const;

  /// Partial derivative with respect to x_index.
  Form derivative(int index) const;

  /// Evaluates x0 = 1; the result keeps exponents of x1, x2 (x0 set to 0).
  /// Not homogeneous in general, so it is returned as a raw term list.
  std::vector<std::pair<Monomial, Scalar>> dehomogenize() const;

  /// Same form with every coefficient tagged with `order`.
  Form with_order(int order) const;

  /// Canonical text in the polynomial grammar.
  std::string format() const;

  friend bool operator==(const Form& a, const Form& b);

  /// A total order on forms; used only for deterministic containers.
  friend std::strong_ordering compare(const Form& a, const Form& b);

 private:
  TermMap terms_;
  int order_ = 1;
};

inline Form operator+(Form a, const Form& b) { return a += b; }
inline Form operator-(Form a, const Form& b) { return a -= b; }
inline Form operator*(Form a, const Form& b) { return a *= b; }
inline Form operator*(Form a, const Scalar& c) { return a *= c; }
inline Form operator*(const Scalar& c, Form a) { return a *= c; }

/// Exact division; throws NotDivisible when b does not divide a and
/// DivisionByZero when b is zero.
Form exact_div(const Form& a, const Form& b);

/// Divisibility test returning the quotient when it exists.
std::optional<Form> try_exact_div(const Form& a, const Form& b);

/// Greatest common divisor, normalized monic. Throws BothZero.
Form form_gcd(const Form& a, const Form& b);

struct SquarefreeDecomposition {
  Scalar unit;
  /// Pairwise coprime, squarefree, monic factors sorted by multiplicity.
  std::vector<std::pair<Form, int>> factors;
};

/// Throws ConstantInput for zero or constant input.
SquarefreeDecomposition squarefree_decompose(const Form& a);

/// r with r^m = a, when it exists over the form's field under the scalar-root
/// restriction of `scalar_root`.
std::optional<Form> mth_root(const Form& a, unsigned m);

}  // namespace qtr
