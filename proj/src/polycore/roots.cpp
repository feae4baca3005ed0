#include "qtr/error.hpp"
#include "qtr/form.hpp"
#include "qtr/scalar.hpp"

namespace qtr {

namespace {

// Q(zeta_n) contains exactly the roots of unity of order dividing this.
int unity_group_order(int order) { return order % 2 == 1 ? 2 * order : order; }

Scalar unity_generator(int order) {
  return order % 2 == 1 ? -Scalar::zeta(order).with_order(order) : Scalar::zeta(order);
}

std::optional<mpz_class> integer_root(const mpz_class& value, unsigned m) {
  mpz_class root;
  if (mpz_root(root.get_mpz_t(), value.get_mpz_t(), m) == 0) return std::nullopt;
  return root;
}

}  // namespace

std::vector<Scalar> roots_of_unity(int order) {
  const int count = unity_group_order(order);
  const Scalar generator = unity_generator(order);
  std::vector<Scalar> roots;
  roots.reserve(count);
  Scalar current = Scalar(mpq_class(1), order);
  for (int k = 0; k < count; ++k) {
    roots.push_back(current);
    current *= generator;
  }
  return roots;
}

std::optional<Scalar> primitive_root_of_unity(int k, int order) {
  if (k < 1) throw Error(ErrorKind::InvalidInput, "root of unity order must be positive");
  const int group = unity_group_order(order);
  if (group % k != 0) return std::nullopt;
  return unity_generator(order).pow(group / k).with_order(order);
}

std::optional<mpq_class> rational_root(const mpq_class& value, unsigned m) {
  if (m == 0) throw Error(ErrorKind::InvalidInput, "root index must be positive");
  if (value == 0) return mpq_class(0);
  const bool negative = value < 0;
  if (negative && m % 2 == 0) return std::nullopt;
  const mpq_class magnitude = abs(value);
  auto num = integer_root(magnitude.get_num(), m);
  if (!num) return std::nullopt;
  auto den = integer_root(magnitude.get_den(), m);
  if (!den) return std::nullopt;
  mpq_class root(*num, *den);
  root.canonicalize();
  return negative ? mpq_class(-root) : root;
}

std::optional<Scalar> scalar_root(const Scalar& s, unsigned m) {
  if (m == 0) throw Error(ErrorKind::InvalidInput, "root index must be positive");
  if (m == 1 || s.is_zero()) return s;
  for (const Scalar& unit : roots_of_unity(s.order())) {
    const Scalar rest = s / unit.pow(m);
    if (!rest.is_rational()) continue;
    if (auto q = rational_root(rest.rational(), m)) return Scalar(*q, s.order()) * unit;
  }
  return std::nullopt;
}

std::optional<Form> mth_root(const Form& a, unsigned m) {
  if (a.is_zero()) throw Error(ErrorKind::InvalidInput, "mth_root of the zero form");
  if (m == 0) throw Error(ErrorKind::InvalidInput, "root index must be positive");
  if (m == 1) return a;
  if (a.is_constant()) {
    auto root = scalar_root(a.leading_coefficient(), m);
    if (!root) return std::nullopt;
    return Form::constant(*root, a.order());
  }
  const SquarefreeDecomposition sq = squarefree_decompose(a);
  auto unit = scalar_root(sq.unit, m);
  if (!unit) return std::nullopt;
  Form root = Form::constant(*unit, a.order());
  for (const auto& [factor, multiplicity] : sq.factors) {
    if (multiplicity % static_cast<int>(m) != 0) return std::nullopt;
    root *= factor.pow(static_cast<unsigned>(multiplicity) / m);
  }
  return root;
}

}  // namespace qtr
