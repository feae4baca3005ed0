#include "qtr/form.hpp"

#include "qtr/error.hpp"

namespace qtr {

namespace {

int merged_order(int a, int b) {
  if (a == b || b == 1) return a;
  if (a == 1) return b;
  throw Error(ErrorKind::FieldMismatch, "forms over Q(zeta_" + std::to_string(a) +
                                            ") and Q(zeta_" + std::to_string(b) + ")");
}

void add_term(Form::TermMap& terms, const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

std::strong_ordering compare_scalars(const Scalar& a, const Scalar& b) {
  const auto& ca = a.coefficients();
  const auto& cb = b.coefficients();
  if (ca.size() != cb.size()) return ca.size() <=> cb.size();
  for (std::size_t i = 0; i < ca.size(); ++i) {
    const int c = cmp(ca[i], cb[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int degree) {
  std::vector<Monomial> out;
  for (int e0 = degree; e0 >= 0; --e0) {
    for (int e1 = degree - e0; e1 >= 0; --e1) out.push_back({e0, e1, degree - e0 - e1});
  }
  return out;
}

Form::Form(const Scalar& c, int order) : order_(order) {
  if (!c.is_zero()) terms_.emplace(Monomial{0, 0, 0}, c.with_order(order));
}

Form::Form(const Scalar& c, const Monomial& m, int order) : order_(order) {
  if (m[0] < 0 || m[1] < 0 || m[2] < 0) throw Error(ErrorKind::InvalidInput, "negative exponent");
  if (!c.is_zero()) terms_.emplace(m, c.with_order(order));
}

Form Form::from_terms(const std::vector<std::pair<Monomial, Scalar>>& terms, int order) {
  Form f(order);
  for (const auto& [m, c] : terms) add_term(f.terms_, m, c.with_order(order));
  if (!f.terms_.empty()) {
    const int deg = monomial_degree(f.terms_.begin()->first);
    for (const auto& [m, c] : f.terms_) {
      if (monomial_degree(m) != deg) {
        throw Error(ErrorKind::NonHomogeneous, "terms of degree " + std::to_string(deg) + " and " +
                                                   std::to_string(monomial_degree(m)));
      }
    }
  }
  return f;
}

Form Form::variable(int index, int order) {
  if (index < 0 || index > 2) throw Error(ErrorKind::InvalidInput, "variable index out of range");
  Monomial m{0, 0, 0};
  m[index] = 1;
  return Form(Scalar(1), m, order);
}

std::optional<int> Form::degree_opt() const {
  if (terms_.empty()) return std::nullopt;
  return monomial_degree(terms_.begin()->first);
}

int Form::degree() const {
  if (terms_.empty()) throw Error(ErrorKind::InvalidInput, "the zero form has no degree");
  return monomial_degree(terms_.begin()->first);
}

Scalar Form::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

const std::pair<const Monomial, Scalar>& Form::leading_term() const {
  if (terms_.empty()) throw Error(ErrorKind::InvalidInput, "the zero form has no leading term");
  return *terms_.begin();
}

Form Form::monic() const {
  if (terms_.empty()) return *this;
  const Scalar lead = leading_coefficient();
  if (lead.is_one()) return *this;
  return *this * lead.inverse();
}

Form Form::operator-() const {
  Form f = *this;
  for (auto& [m, c] : f.terms_) c = -c;
  return f;
}

Form& Form::operator+=(const Form& other) {
  order_ = merged_order(order_, other.order_);
  if (!terms_.empty() && !other.terms_.empty() && degree() != other.degree()) {
    throw Error(ErrorKind::DegreeMismatch, "adding forms of degree " + std::to_string(degree()) +
                                               " and " + std::to_string(other.degree()));
  }
  for (const auto& [m, c] : other.terms_) add_term(terms_, m, c);
  return *this;
}

Form& Form::operator-=(const Form& other) { return *this += -other; }

Form& Form::operator*=(const Form& other) {
  order_ = merged_order(order_, other.order_);
  TermMap product;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) {
      add_term(product, {ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]}, ca * cb);
    }
  }
  terms_ = std::move(product);
  return *this;
}

Form& Form::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  if (!c.is_rational()) order_ = merged_order(order_, c.order());
  for (auto& [m, coef] : terms_) coef *= c;
  return *this;
}

Form Form::pow(unsigned exponent) const {
  Form result = Form::one(order_);
  Form base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

Form Form::derivative(int index) const {
  if (index < 0 || index > 2) throw Error(ErrorKind::InvalidInput, "variable index out of range");
  Form d(order_);
  for (const auto& [m, c] : terms_) {
    if (m[index] == 0) continue;
    Monomial lowered = m;
    --lowered[index];
    add_term(d.terms_, lowered, c * Scalar(static_cast<long>(m[index])));
  }
  return d;
}

std::vector<std::pair<Monomial, Scalar>> Form::dehomogenize() const {
  std::vector<std::pair<Monomial, Scalar>> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) out.push_back({{0, m[1], m[2]}, c});
  return out;
}

Form Form::with_order(int order) const {
  Form f(order);
  for (const auto& [m, c] : terms_) f.terms_.emplace(m, c.with_order(order));
  return f;
}

bool operator==(const Form& a, const Form& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first || !(ia->second == ib->second)) return false;
  }
  return true;
}

std::strong_ordering compare(const Form& a, const Form& b) {
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ib->first <=> ia->first;
    if (auto c = compare_scalars(ia->second, ib->second); c != 0) return c;
  }
  return a.terms_.size() <=> b.terms_.size();
}

std::optional<Form> try_exact_div(const Form& a, const Form& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by the zero form");
  const int order = merged_order(a.order(), b.order());
  Form quotient(order);
  if (a.is_zero()) return quotient;
  if (a.degree() < b.degree()) return std::nullopt;

  const auto& [lead_m, lead_c] = b.leading_term();
  const Scalar lead_inv = lead_c.inverse();
  Form remainder = a;
  while (!remainder.is_zero()) {
    const auto& [rm, rc] = remainder.leading_term();
    Monomial shift{rm[0] - lead_m[0], rm[1] - lead_m[1], rm[2] - lead_m[2]};
    if (shift[0] < 0 || shift[1] < 0 || shift[2] < 0) return std::nullopt;
    const Form step(rc * lead_inv, shift, order);
    quotient += step;
    remainder -= step * b;
  }
  return quotient;
}

Form exact_div(const Form& a, const Form& b) {
  auto q = try_exact_div(a, b);
  if (!q) throw Error(ErrorKind::NotDivisible, b.format() + " does not divide " + a.format());
  return *q;
}

}  // namespace qtr
