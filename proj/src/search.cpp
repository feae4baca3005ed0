#include "qtr/search.hpp"

#include "qtr/error.hpp"

#include <limits>
#include <unordered_map>

namespace qtr {

namespace {

struct Candidate {
  Form h;
  Form term;  // F_i * h^{p_i}
};

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

// All nonzero forms with coefficients in the grid, in lexicographic order of
// grid indices (first monomial most significant).
std::vector<Candidate> enumerate_component(const Form& F, std::int64_t exponent, int degree,
                                           const std::vector<Scalar>& grid, int order) {
  const auto basis = monomials_of_degree(degree);
  std::vector<std::size_t> digits(basis.size(), 0);
  std::vector<Candidate> out;
  for (;;) {
    std::vector<std::pair<Monomial, Scalar>> terms;
    for (std::size_t j = 0; j < basis.size(); ++j) terms.push_back({basis[j], grid[digits[j]]});
    Form h = Form::from_terms(terms, order);
    if (!h.is_zero()) {
      Form term = F * h.pow(static_cast<unsigned>(exponent));
      out.push_back({std::move(h), std::move(term)});
    }
    std::size_t pos = digits.size();
    while (pos > 0) {
      --pos;
      if (++digits[pos] < grid.size()) break;
      digits[pos] = 0;
      if (pos == 0) return out;
    }
  }
}

}  // namespace

std::vector<Scalar> default_coefficient_grid() {
  return {Scalar(-2), Scalar(-1), Scalar(0), Scalar(1), Scalar(2)};
}

SearchResult brute_force(const ProblemInstance& problem, const SearchSpec& spec) {
  if (spec.coefficients.empty()) throw Error(ErrorKind::InvalidInput, "coefficient set is empty");
  for (int d : spec.degrees) {
    if (d < 0) throw Error(ErrorKind::InvalidInput, "degrees must be nonnegative");
  }

  SearchResult result;
  bool has_nonzero = false;
  for (const auto& c : spec.coefficients) has_nonzero = has_nonzero || !c.is_zero();
  if (!has_nonzero) {
    result.note = "coefficient set has no nonzero element";
    return result;
  }
  const auto fdeg = problem.degrees();
  std::array<std::int64_t, 3> balance{};
  for (std::size_t i = 0; i < 3; ++i) balance[i] = fdeg[i] + problem.type.p[i] * spec.degrees[i];
  if (balance[0] != balance[1] || balance[1] != balance[2]) {
    result.note = "degrees are unbalanced: deg F_i + p_i d_i = " + std::to_string(balance[0]) + ", " +
                  std::to_string(balance[1]) + ", " + std::to_string(balance[2]);
    return result;
  }

  std::uint64_t total = 1;
  for (int d : spec.degrees) {
    const auto size = monomials_of_degree(d).size();
    for (std::size_t j = 0; j < size; ++j) total = saturating_mul(total, spec.coefficients.size());
  }
  result.candidates = total;
  if (total > spec.cap) {
    throw Error(ErrorKind::BudgetExceeded,
                std::to_string(total) + " candidates exceed the cap of " + std::to_string(spec.cap));
  }

  std::array<std::vector<Candidate>, 3> lists;
  for (std::size_t i = 0; i < 3; ++i) {
    lists[i] = enumerate_component(problem.F[i], problem.type.p[i], spec.degrees[i], spec.coefficients,
                                   problem.order);
  }

  // F2 h2^p2 must equal -(F0 h0^p0 + F1 h1^p1); index the third list by the
  // canonical text of its term.
  std::unordered_map<std::string, std::vector<std::size_t>> third;
  for (std::size_t k = 0; k < lists[2].size(); ++k) third[lists[2][k].term.format()].push_back(k);

  for (const auto& a : lists[0]) {
    for (const auto& b : lists[1]) {
      const Form target = -(a.term + b.term);
      auto it = third.find(target.format());
      if (it == third.end()) continue;
      for (std::size_t k : it->second) {
        Relation candidate{{a.h, b.h, lists[2][k].h}};
        if (spec.dedupe) {
          bool seen = false;
          for (const auto& kept : result.relations) {
            if (equivalent(problem.type, kept, candidate)) {
              seen = true;
              break;
            }
          }
          if (seen) continue;
        }
        result.relations.push_back(std::move(candidate));
      }
    }
  }
  return result;
}

std::optional<Relation> complete_relation(const ProblemInstance& problem, const Form& first, const Form& second) {
  const SortedType sorted = sorted_view(problem.type);
  const std::int64_t p = sorted.type.p[1];
  if (sorted.type.p[0] != 1 || sorted.type.p[2] != p) {
    throw Error(ErrorKind::NotApplicable, "completion needs a type of shape (1, p, p), got " + problem.type.format());
  }
  if (first.is_zero() || second.is_zero()) throw Error(ErrorKind::ZeroComponent, "given forms must be nonzero");
  const auto unit = static_cast<std::size_t>(sorted.perm[0]);
  const auto c1 = static_cast<std::size_t>(sorted.perm[1]);
  const auto c2 = static_cast<std::size_t>(sorted.perm[2]);
  const Form a = problem.F[c1] * first.pow(static_cast<unsigned>(p));
  const Form b = problem.F[c2] * second.pow(static_cast<unsigned>(p));
  // Unequal degrees leave a nonzero non-homogeneous remainder.
  if (a.degree() != b.degree()) return std::nullopt;
  const Form numerator = a + b;
  if (numerator.is_zero()) throw Error(ErrorKind::ZeroComponent, "the solved component vanishes");
  auto quotient = try_exact_div(-numerator, problem.F[unit]);
  if (!quotient) return std::nullopt;
  Relation out;
  out.h[unit] = std::move(*quotient);
  out.h[c1] = first;
  out.h[c2] = second;
  return out;
}

}  // namespace qtr
