#include "qtr/families.hpp"

#include "qtr/correspond.hpp"
#include "qtr/error.hpp"
#include "qtr/search.hpp"

#include <algorithm>
#include <cstdlib>
#include <tuple>

namespace qtr {

namespace {

constexpr int kMaxParameterLevels = 3;

void require_valid(const ProblemInstance& problem) {
  const auto violations = validate_problem(problem);
  if (violations.empty()) return;
  std::string joined;
  for (const auto& v : violations) joined += (joined.empty() ? "" : "; ") + v;
  throw Error(ErrorKind::InvalidProblem, joined);
}

std::optional<Relation> search_conic_witness(const ProblemInstance& reduced, int search_budget, std::string& detail) {
  const auto degs = reduced.degrees();
  const int top = *std::max_element(degs.begin(), degs.end());
  // h-degrees d_i = (T - deg F_i) / 2 for the smallest admissible T upward.
  for (int base = 0; base < search_budget; ++base) {
    SearchSpec spec;
    spec.coefficients = {Scalar(-1), Scalar(0), Scalar(1)};
    bool admissible = true;
    for (std::size_t i = 0; i < 3; ++i) {
      const int gap = top - degs[i];
      if (gap % 2 != 0) admissible = false;
      spec.degrees[i] = base + gap / 2;
    }
    if (!admissible) {
      detail = "degrees of F have mixed parity; no relation of type (2,2,2) can balance";
      return std::nullopt;
    }
    if (*std::max_element(spec.degrees.begin(), spec.degrees.end()) >= search_budget) break;
    try {
      auto found = brute_force(reduced, spec);
      if (!found.relations.empty()) return found.relations.front();
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::BudgetExceeded) throw;
      detail = "search stopped at the candidate cap";
      return std::nullopt;
    }
  }
  detail = "no witness with h-degrees below " + std::to_string(search_budget);
  return std::nullopt;
}

std::vector<Form> parameter_ladder(int degree, int order) {
  std::vector<Form> out;
  if (degree < 0) return out;
  const auto basis = monomials_of_degree(degree);
  std::vector<Form> monomials;
  for (const auto& m : basis) monomials.emplace_back(Scalar(1), m, order);
  out = monomials;
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    for (std::size_t j = i + 1; j < monomials.size(); ++j) out.push_back(monomials[i] + monomials[j]);
  }
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    for (std::size_t j = i + 1; j < monomials.size(); ++j) out.push_back(monomials[i] - monomials[j]);
  }
  for (const auto& m : monomials) out.push_back(m * Scalar(2));
  return out;
}

// Constant direction triples with entries in [-2, 2], first nonzero entry
// positive, ordered by height and then by support size.
std::vector<std::array<int, 3>> direction_ladder() {
  std::vector<std::array<int, 3>> out;
  for (int a = -2; a <= 2; ++a) {
    for (int b = -2; b <= 2; ++b) {
      for (int c = -2; c <= 2; ++c) {
        const std::array<int, 3> v{a, b, c};
        const auto first = std::find_if(v.begin(), v.end(), [](int x) { return x != 0; });
        if (first == v.end() || *first < 0) continue;
        out.push_back(v);
      }
    }
  }
  auto key = [](const std::array<int, 3>& v) {
    int height = 0, support = 0;
    for (int x : v) {
      height = std::max(height, std::abs(x));
      support += x != 0 ? 1 : 0;
    }
    // Within a level, (1,0,0) before (0,1,0): larger leading entries first.
    return std::make_tuple(height, support, -std::abs(v[0]), -std::abs(v[1]), -std::abs(v[2]), -v[0], -v[1], -v[2]);
  };
  std::stable_sort(out.begin(), out.end(), [&](const auto& l, const auto& r) { return key(l) < key(r); });
  return out;
}

void collect_equivalences(FamilySample& sample) {
  for (std::size_t i = 0; i < sample.members.size(); ++i) {
    for (std::size_t j = i + 1; j < sample.members.size(); ++j) {
      if (equivalent(sample.type, sample.members[i].relation, sample.members[j].relation)) {
        sample.equivalent_pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
}

}  // namespace

std::string to_string(FamilyStatus status) {
  switch (status) {
    case FamilyStatus::Yes: return "Yes";
    case FamilyStatus::No: return "No";
    case FamilyStatus::Unknown: return "Unknown";
  }
  return "?";
}

std::string to_string(FamilyCase family_case) {
  switch (family_case) {
    case FamilyCase::None: return "none";
    case FamilyCase::Conic222: return "Conic222";
    case FamilyCase::LinearP0Equals1: return "LinearP0Equals1";
  }
  return "?";
}

FamilyVerdict family_exists(const ProblemInstance& problem, const std::optional<Relation>& witness,
                            int search_budget) {
  require_valid(problem);
  FamilyVerdict verdict;
  verdict.reduced_type = reduce_type(problem.type);
  const SortedType sorted = sorted_view(verdict.reduced_type);
  verdict.permutation = sorted.perm;
  const auto& q = sorted.type.p;

  if (q[0] == 1) {
    const auto degs = problem.degrees();
    const std::int64_t p = q[1];
    const std::int64_t diff = degs[static_cast<std::size_t>(sorted.perm[1])] - degs[static_cast<std::size_t>(sorted.perm[2])];
    verdict.family_case = FamilyCase::LinearP0Equals1;
    if (diff % p == 0) {
      verdict.status = FamilyStatus::Yes;
      verdict.detail = std::to_string(p) + " divides deg F" + std::to_string(sorted.perm[1]) + " - deg F" +
                       std::to_string(sorted.perm[2]) + " = " + std::to_string(diff);
    } else {
      verdict.status = FamilyStatus::No;
      verdict.family_case = FamilyCase::None;
      verdict.detail = std::to_string(p) + " does not divide deg F" + std::to_string(sorted.perm[1]) + " - deg F" +
                       std::to_string(sorted.perm[2]) + " = " + std::to_string(diff);
    }
    return verdict;
  }

  if (q[0] == 2 && q[1] == 2 && q[2] == 2) {
    const ProblemInstance reduced = problem.with_type(verdict.reduced_type);
    if (witness) {
      if (!verify_relation(problem, *witness)) {
        throw Error(ErrorKind::InvalidInput, "witness does not verify at type " + problem.type.format());
      }
      verdict.witness = transport_to_reduced(problem, *witness).relation;
      verdict.detail = "witness supplied";
    } else if (search_budget > 0) {
      verdict.witness = search_conic_witness(reduced, search_budget, verdict.detail);
      if (verdict.witness) verdict.detail = "witness found by search";
    } else {
      verdict.detail = "no witness supplied and search disabled";
    }
    if (verdict.witness) {
      verdict.status = FamilyStatus::Yes;
      verdict.family_case = FamilyCase::Conic222;
    } else {
      verdict.status = FamilyStatus::Unknown;
    }
    return verdict;
  }

  verdict.status = FamilyStatus::No;
  verdict.detail = "reduced type " + verdict.reduced_type.format() + " is neither (2,2,2) nor (1,p,p)";
  return verdict;
}

FamilyMember case2_member(const ProblemInstance& problem, const Form& g1, const Form& g2) {
  const SortedType sorted = sorted_view(problem.type);
  const std::int64_t p = sorted.type.p[1];
  if (sorted.type.p[0] != 1 || sorted.type.p[2] != p) {
    throw Error(ErrorKind::NotApplicable, "linear family needs a type of shape (1, p, p), got " + problem.type.format());
  }
  if (g1.is_zero() || g2.is_zero()) throw Error(ErrorKind::ZeroComponent, "g1 and g2 must be nonzero");
  const auto c0 = static_cast<std::size_t>(sorted.perm[0]);
  const auto c1 = static_cast<std::size_t>(sorted.perm[1]);
  const auto c2 = static_cast<std::size_t>(sorted.perm[2]);
  const Form& F0 = problem.F[c0];
  const Form& F1 = problem.F[c1];
  const Form& F2 = problem.F[c2];
  const std::int64_t gap = F2.degree() - F1.degree();
  if (gap % p != 0 || g1.degree() != g2.degree() + gap / p) {
    throw Error(ErrorKind::DegreeMismatch, "need deg g1 = deg g2 + (deg F" + std::to_string(c2) + " - deg F" +
                                               std::to_string(c1) + ")/" + std::to_string(p));
  }
  const auto e = static_cast<unsigned>(p);
  const Form h0 = -(F0.pow(e - 1) * (F1 * g1.pow(e) + F2 * g2.pow(e)));
  if (h0.is_zero()) throw Error(ErrorKind::ZeroComponent, "F1 g1^p + F2 g2^p vanishes for this choice");
  FamilyMember member;
  member.relation.h[c0] = h0;
  member.relation.h[c1] = F0 * g1;
  member.relation.h[c2] = F0 * g2;
  member.parameters = {g1, g2};
  return member;
}

FamilyMember conic_member(const ProblemInstance& problem, const Relation& witness,
                          const std::array<Form, 3>& direction) {
  if (!(problem.type == TypeTriple(2, 2, 2))) {
    throw Error(ErrorKind::NotApplicable, "conic family needs type (2, 2, 2), got " + problem.type.format());
  }
  if (!verify_relation(problem, witness)) throw Error(ErrorKind::InvalidInput, "witness does not verify");
  std::optional<int> balance;
  for (std::size_t i = 0; i < 3; ++i) {
    if (direction[i].is_zero()) continue;
    const int deg = problem.F[i].degree() + 2 * direction[i].degree();
    if (balance && *balance != deg) {
      throw Error(ErrorKind::DegreeMismatch, "direction entries must balance like a relation");
    }
    balance = deg;
  }
  if (!balance) throw Error(ErrorKind::DegenerateDirection, "direction is zero");

  const auto& a = witness.h;
  const auto& b = direction;
  const auto& F = problem.F;
  Form quad(problem.order);
  Form bilinear(problem.order);
  for (std::size_t i = 0; i < 3; ++i) {
    quad += F[i] * b[i] * b[i];
    bilinear += F[i] * a[i] * b[i];
  }
  FamilyMember member;
  std::size_t zeros = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    member.relation.h[i] = a[i] * quad - Scalar(2) * b[i] * bilinear;
    if (member.relation.h[i].is_zero()) ++zeros;
  }
  if (zeros == 3) throw Error(ErrorKind::DegenerateDirection, "the line meets the conic only at the witness");
  if (zeros > 0) throw Error(ErrorKind::ZeroComponent, "the second intersection has a zero coordinate");
  member.parameters = {b[0], b[1], b[2]};
  return member;
}

FamilySample family_sample(const ProblemInstance& problem, const std::optional<Relation>& witness, int count,
                           int search_budget) {
  if (count < 1) throw Error(ErrorKind::InvalidInput, "count must be positive");
  FamilySample sample;
  sample.verdict = family_exists(problem, witness, search_budget);
  if (sample.verdict.status != FamilyStatus::Yes) {
    throw Error(ErrorKind::NoFamily, "no rational family: " + sample.verdict.detail);
  }
  sample.type = sample.verdict.reduced_type;
  const ProblemInstance reduced = problem.with_type(sample.type);
  const auto wanted = static_cast<std::size_t>(count);

  if (sample.verdict.family_case == FamilyCase::Conic222) {
    const auto degs = reduced.degrees();
    const int top = *std::max_element(degs.begin(), degs.end());
    const Form x0 = Form::variable(0, problem.order);
    for (const auto& v : direction_ladder()) {
      if (sample.members.size() == wanted) break;
      std::array<Form, 3> direction;
      for (std::size_t i = 0; i < 3; ++i) {
        direction[i] = Form(Scalar(static_cast<long>(v[i])), problem.order) * x0.pow(static_cast<unsigned>((top - degs[i]) / 2));
      }
      try {
        sample.members.push_back(conic_member(reduced, *sample.verdict.witness, direction));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::DegenerateDirection && e.kind() != ErrorKind::ZeroComponent) throw;
      }
    }
  } else {
    const SortedType sorted = sorted_view(sample.type);
    const std::int64_t p = sorted.type.p[1];
    const int deg1 = reduced.F[static_cast<std::size_t>(sorted.perm[1])].degree();
    const int deg2 = reduced.F[static_cast<std::size_t>(sorted.perm[2])].degree();
    const int shift = static_cast<int>((deg2 - deg1) / p);
    const int start = std::max(0, -shift);
    for (int n = start; n < start + kMaxParameterLevels && sample.members.size() < wanted; ++n) {
      for (const auto& g2 : monomials_of_degree(n)) {
        for (const auto& g1 : parameter_ladder(n + shift, problem.order)) {
          if (sample.members.size() == wanted) break;
          const Form g2_form(Scalar(1), g2, problem.order);
          // A common factor repeats the ratio g1/g2 of a smaller choice.
          if (!form_gcd(g1, g2_form).is_constant()) continue;
          try {
            sample.members.push_back(case2_member(reduced, g1, g2_form));
          } catch (const Error& e) {
            if (e.kind() != ErrorKind::ZeroComponent) throw;
          }
        }
        if (sample.members.size() == wanted) break;
      }
    }
  }
  if (sample.members.size() < wanted) {
    throw Error(ErrorKind::InsufficientParameters, "only " + std::to_string(sample.members.size()) +
                                                       " members available from the parameter enumeration");
  }
  collect_equivalences(sample);
  return sample;
}

}  // namespace qtr
