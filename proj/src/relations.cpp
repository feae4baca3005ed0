#include "qtr/relations.hpp"

#include "qtr/error.hpp"
#include "qtr/form_ratio.hpp"

#include <tuple>

namespace qtr {

namespace {

void require_nonzero(const Relation& relation) {
  for (int i = 0; i < 3; ++i) {
    if (relation.h[static_cast<std::size_t>(i)].is_zero()) {
      throw Error(ErrorKind::ZeroComponent, "h" + std::to_string(i) + " is zero");
    }
  }
}

// (g, x, y) with a*x + b*y = g.
std::array<std::int64_t, 3> extended_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    const std::int64_t q = a / b;
    std::tie(a, b) = std::make_pair(b, a - q * b);
    std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
    std::tie(y0, y1) = std::make_pair(y1, y0 - q * y1);
  }
  return {a, x0, y0};
}

}  // namespace

std::array<int, 3> ProblemInstance::degrees() const {
  std::array<int, 3> out{};
  for (std::size_t i = 0; i < 3; ++i) {
    if (F[i].is_zero()) throw Error(ErrorKind::ZeroComponent, "F" + std::to_string(i) + " is zero");
    out[i] = F[i].degree();
  }
  return out;
}

ProblemInstance ProblemInstance::with_type(const TypeTriple& t) const {
  ProblemInstance out = *this;
  out.type = t;
  return out;
}

std::vector<std::string> validate_problem(const ProblemInstance& problem) {
  std::vector<std::string> violations;
  if (problem.order < 1) violations.push_back("cyclotomic order must be positive");
  bool any_zero = false;
  for (std::size_t i = 0; i < 3; ++i) {
    const Form& f = problem.F[i];
    if (f.is_zero()) {
      violations.push_back("F" + std::to_string(i) + " is zero");
      any_zero = true;
    }
    if (f.order() != problem.order && f.order() != 1) {
      violations.push_back("F" + std::to_string(i) + " is over Q(zeta_" + std::to_string(f.order()) +
                           "), expected Q(zeta_" + std::to_string(problem.order) + ")");
    }
  }
  if (!any_zero && violations.empty()) {
    const Form g = form_gcd(form_gcd(problem.F[0], problem.F[1]), problem.F[2]);
    if (!g.is_constant()) violations.push_back("F0, F1, F2 share the common factor " + g.format());
  }
  return violations;
}

Form relation_sum(const ProblemInstance& problem, const Relation& relation) {
  require_nonzero(relation);
  Form sum(problem.order);
  for (std::size_t i = 0; i < 3; ++i) {
    sum += problem.F[i] * relation.h[i].pow(static_cast<unsigned>(problem.type.p[i]));
  }
  return sum;
}

bool verify_relation(const ProblemInstance& problem, const Relation& relation) {
  require_nonzero(relation);
  std::optional<std::int64_t> balance;
  for (std::size_t i = 0; i < 3; ++i) {
    if (problem.F[i].is_zero()) continue;
    const std::int64_t deg = problem.F[i].degree() + problem.type.p[i] * relation.h[i].degree();
    if (balance && *balance != deg) return false;
    balance = deg;
  }
  return relation_sum(problem, relation).is_zero();
}

Relation scale_relation(const Relation& relation, const Form& u, const Form& v, const TypeTriple& type) {
  if (u.is_zero() || v.is_zero()) throw Error(ErrorKind::ZeroComponent, "scaling forms must be nonzero");
  require_nonzero(relation);
  const auto dec = decompose_type(type);
  Relation out;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto w = static_cast<unsigned>(dec.w[i]);
    out.h[i] = exact_div(v.pow(w) * relation.h[i], u.pow(w));
  }
  return out;
}

std::array<std::int64_t, 3> bezout_coefficients(const std::array<std::int64_t, 3>& w) {
  const auto [g01, x, y] = extended_gcd(w[0], w[1]);
  const auto [g, big_x, big_y] = extended_gcd(g01, w[2]);
  (void)g;
  return {big_x * x, big_x * y, big_y};
}

std::optional<EquivalenceWitness> equivalent(const TypeTriple& type, const Relation& first,
                                             const Relation& second) {
  require_nonzero(first);
  require_nonzero(second);
  const auto dec = decompose_type(type);
  const auto a = bezout_coefficients(dec.w);

  std::array<std::optional<FormRatio>, 3> quotients;
  for (std::size_t i = 0; i < 3; ++i) quotients[i].emplace(second.h[i], first.h[i]);

  FormRatio rho(Form::one(first.h[0].order()));
  for (std::size_t i = 0; i < 3; ++i) rho = rho * quotients[i]->pow(a[i]);
  for (std::size_t i = 0; i < 3; ++i) {
    if (!(rho.pow(dec.w[i]) == *quotients[i])) return std::nullopt;
  }
  return EquivalenceWitness{rho.denominator(), rho.numerator()};
}

bool check_witness(const TypeTriple& type, const Relation& first, const Relation& second,
                   const EquivalenceWitness& witness) {
  if (witness.u.is_zero() || witness.v.is_zero()) return false;
  const auto dec = decompose_type(type);
  for (std::size_t i = 0; i < 3; ++i) {
    const auto w = static_cast<unsigned>(dec.w[i]);
    if (!(witness.u.pow(w) * second.h[i] == witness.v.pow(w) * first.h[i])) return false;
  }
  return true;
}

Relation permute(const Relation& relation, const std::array<int, 3>& perm) {
  Relation out;
  for (std::size_t k = 0; k < 3; ++k) out.h[k] = relation.h[static_cast<std::size_t>(perm[k])];
  return out;
}

ProblemInstance permute(const ProblemInstance& problem, const std::array<int, 3>& perm) {
  ProblemInstance out = problem;
  for (std::size_t k = 0; k < 3; ++k) {
    out.F[k] = problem.F[static_cast<std::size_t>(perm[k])];
    out.type.p[k] = problem.type.p[static_cast<std::size_t>(perm[k])];
  }
  return out;
}

Relation unpermute(const Relation& relation, const std::array<int, 3>& perm) {
  Relation out;
  for (std::size_t k = 0; k < 3; ++k) out.h[static_cast<std::size_t>(perm[k])] = relation.h[k];
  return out;
}

}  // namespace qtr
