// GCD of homogeneous forms: strip x0 powers, dehomogenize at x0 = 1, run a
// primitive polynomial remainder sequence in K[x2][x1] with K = Q(zeta_n),
// then homogenize back.

#include "qtr/error.hpp"
#include "qtr/form.hpp"

#include <algorithm>

namespace qtr {

namespace {

// Univariate polynomial in x2 over K, lowest degree first, no trailing zeros.
using UPoly = std::vector<Scalar>;
// Polynomial in x1 with UPoly coefficients, lowest degree first.
using BPoly = std::vector<UPoly>;

template <typename P>
void trim(P& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

void trim_scalars(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int deg(const BPoly& p) { return static_cast<int>(p.size()) - 1; }

UPoly u_sub(const UPoly& a, const UPoly& b) {
  UPoly out = a;
  if (out.size() < b.size()) out.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim_scalars(out);
  return out;
}

UPoly u_mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim_scalars(out);
  return out;
}

// Division with remainder over the field K.
std::pair<UPoly, UPoly> u_divmod(UPoly a, const UPoly& b) {
  if (a.size() < b.size()) return {{}, a};
  UPoly q(a.size() - b.size() + 1);
  const Scalar lead_inv = b.back().inverse();
  for (std::size_t i = a.size(); i-- > b.size() - 1;) {
    if (a[i].is_zero()) continue;
    const Scalar c = a[i] * lead_inv;
    const std::size_t shift = i - (b.size() - 1);
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
  }
  trim_scalars(a);
  trim_scalars(q);
  return {q, a};
}

UPoly u_monic(UPoly p) {
  if (p.empty()) return p;
  const Scalar inv = p.back().inverse();
  for (auto& c : p) c *= inv;
  return p;
}

UPoly u_gcd(UPoly a, UPoly b) {
  while (!b.empty()) {
    UPoly r = u_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return u_monic(std::move(a));
}

UPoly u_exact_div(const UPoly& a, const UPoly& b) { return u_divmod(a, b).first; }

UPoly content(const BPoly& p) {
  UPoly g;
  for (const auto& c : p) {
    g = u_gcd(g, c);
    if (g.size() == 1) break;
  }
  return g;
}

BPoly primitive_part(const BPoly& p) {
  const UPoly c = content(p);
  BPoly out;
  out.reserve(p.size());
  for (const auto& coef : p) out.push_back(u_exact_div(coef, c));
  return out;
}

// lc(b)^(deg a - deg b + 1) * a mod b, computed without leaving K[x2][x1].
BPoly pseudo_remainder(BPoly a, const BPoly& b) {
  const UPoly& lead = b.back();
  int remaining = deg(a) - deg(b) + 1;
  while (!a.empty() && deg(a) >= deg(b)) {
    const UPoly top = a.back();
    const std::size_t shift = a.size() - b.size();
    for (auto& c : a) c = u_mul(c, lead);
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = u_sub(a[shift + j], u_mul(top, b[j]));
    trim(a);
    --remaining;
  }
  UPoly scale = {Scalar(1)};
  for (int i = 0; i < remaining; ++i) scale = u_mul(scale, lead);
  for (auto& c : a) c = u_mul(c, scale);
  return a;
}

BPoly bivariate_gcd(const BPoly& a, const BPoly& b) {
  const UPoly c = u_gcd(content(a), content(b));
  BPoly x = primitive_part(a);
  BPoly y = primitive_part(b);
  if (deg(x) < deg(y)) std::swap(x, y);
  while (!y.empty()) {
    if (deg(y) == 0) {
      x = {UPoly{Scalar(1)}};
      break;
    }
    BPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.empty() ? BPoly{} : primitive_part(r);
  }
  x = primitive_part(x);
  for (auto& coef : x) coef = u_mul(coef, c);
  return x;
}

int x0_valuation(const Form& f) {
  int v = f.leading_term().first[0];
  for (const auto& [m, c] : f.terms()) v = std::min(v, m[0]);
  return v;
}

BPoly to_bivariate(const Form& f) {
  BPoly out;
  for (const auto& [m, c] : f.terms()) {
    const auto e1 = static_cast<std::size_t>(m[1]);
    const auto e2 = static_cast<std::size_t>(m[2]);
    if (out.size() <= e1) out.resize(e1 + 1);
    if (out[e1].size() <= e2) out[e1].resize(e2 + 1);
    out[e1][e2] += c;
  }
  for (auto& coef : out) trim_scalars(coef);
  trim(out);
  return out;
}

Form from_bivariate(const BPoly& p, int x0_power, int order) {
  int total = 0;
  for (std::size_t e1 = 0; e1 < p.size(); ++e1) {
    for (std::size_t e2 = 0; e2 < p[e1].size(); ++e2) {
      if (!p[e1][e2].is_zero()) total = std::max(total, static_cast<int>(e1 + e2));
    }
  }
  std::vector<std::pair<Monomial, Scalar>> terms;
  for (std::size_t e1 = 0; e1 < p.size(); ++e1) {
    for (std::size_t e2 = 0; e2 < p[e1].size(); ++e2) {
      if (p[e1][e2].is_zero()) continue;
      const int i1 = static_cast<int>(e1);
      const int i2 = static_cast<int>(e2);
      terms.push_back({{total - i1 - i2 + x0_power, i1, i2}, p[e1][e2]});
    }
  }
  return Form::from_terms(terms, order);
}

}  // namespace

Form form_gcd(const Form& a, const Form& b) {
  if (a.is_zero() && b.is_zero()) throw Error(ErrorKind::BothZero, "gcd of two zero forms");
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  const int order = a.order() == 1 ? b.order() : a.order();
  const int va = x0_valuation(a);
  const int vb = x0_valuation(b);
  const BPoly g = bivariate_gcd(to_bivariate(a), to_bivariate(b));
  return from_bivariate(g, std::min(va, vb), order).monic();
}

SquarefreeDecomposition squarefree_decompose(const Form& a) {
  if (a.is_constant()) throw Error(ErrorKind::ConstantInput, "squarefree decomposition of a constant");
  SquarefreeDecomposition out{a.leading_coefficient(), {}};
  const Form f = a.monic();

  // gcd with the whole gradient strips one power of every factor.
  Form c = f;
  for (int i = 0; i < 3; ++i) c = form_gcd(c, f.derivative(i));
  Form w = exact_div(f, c);
  for (int multiplicity = 1; !w.is_constant(); ++multiplicity) {
    const Form y = form_gcd(w, c);
    const Form z = exact_div(w, y);
    if (!z.is_constant()) out.factors.push_back({z.monic(), multiplicity});
    w = y;
    c = exact_div(c, y);
  }
  return out;
}

}  // namespace qtr
