#include "qtr/correspond.hpp"

#include "qtr/error.hpp"

namespace qtr {

namespace {

void require_verifies(const ProblemInstance& problem, const Relation& relation, const char* what) {
  if (!verify_relation(problem, relation)) {
    throw Error(ErrorKind::InvalidInput, std::string(what) + " does not verify at type " + problem.type.format());
  }
}

void require_coordinate(int coordinate) {
  if (coordinate < 0 || coordinate > 2) throw Error(ErrorKind::InvalidInput, "coordinate must be 0, 1 or 2");
}

void require_reduced(const TypeTriple& type) {
  if (!is_reduced(type)) {
    throw Error(ErrorKind::NotReduced, "type " + type.format() + " is not reduced (reduces to " +
                                           reduce_type(type).format() + ")");
  }
}

}  // namespace

TypedRelation push_down(const Relation& relation, int coordinate, std::int64_t m, const TypeTriple& type) {
  require_coordinate(coordinate);
  const auto c = static_cast<std::size_t>(coordinate);
  if (m < 1 || type.p[c] % m != 0) {
    throw Error(ErrorKind::NotDivisibleType, std::to_string(m) + " does not divide p" + std::to_string(c));
  }
  TypedRelation out{relation, type};
  out.relation.h[c] = relation.h[c].pow(static_cast<unsigned>(m));
  out.type.p[c] = type.p[c] / m;
  return out;
}

std::int64_t lift_parameter(int coordinate, std::int64_t m, const TypeTriple& target) {
  require_coordinate(coordinate);
  const auto dec = decompose_type(target);
  const auto c = static_cast<std::size_t>(coordinate);
  if (m < 1 || dec.t[c] % m != 0) {
    throw Error(ErrorKind::ConditionViolated,
                std::to_string(m) + " does not divide t" + std::to_string(c) + " = " + std::to_string(dec.t[c]));
  }
  for (std::int64_t k = 0; k < m; ++k) {
    if ((1 + k * dec.w[c]) % m == 0) return k;
  }
  // Unreachable: m | t_c forces gcd(m, w_c) = 1.
  throw Error(ErrorKind::ConditionViolated, "no lifting parameter exists");
}

Relation lift_up_with_k(const Relation& relation, int coordinate, std::int64_t m, const TypeTriple& target,
                        std::int64_t k) {
  require_coordinate(coordinate);
  const auto dec = decompose_type(target);
  const auto c = static_cast<std::size_t>(coordinate);
  if (m < 1 || dec.t[c] % m != 0) {
    throw Error(ErrorKind::ConditionViolated,
                std::to_string(m) + " does not divide t" + std::to_string(c) + " = " + std::to_string(dec.t[c]));
  }
  if (k < 0 || (1 + k * dec.w[c]) % m != 0) {
    throw Error(ErrorKind::ConditionViolated, "k = " + std::to_string(k) + " does not satisfy k*w" +
                                                  std::to_string(c) + " = -1 mod " + std::to_string(m));
  }
  for (const auto& h : relation.h) {
    if (h.is_zero()) throw Error(ErrorKind::ZeroComponent, "relation has a zero component");
  }
  const Form& pivot = relation.h[c];
  Relation out;
  for (std::size_t i = 0; i < 3; ++i) {
    if (i == c) {
      out.h[i] = pivot.pow(static_cast<unsigned>((1 + k * dec.w[i]) / m));
    } else {
      out.h[i] = pivot.pow(static_cast<unsigned>(k * dec.w[i] / m)) * relation.h[i];
    }
  }
  return out;
}

Relation lift_up(const Relation& relation, int coordinate, std::int64_t m, const TypeTriple& target) {
  return lift_up_with_k(relation, coordinate, m, target, lift_parameter(coordinate, m, target));
}

std::vector<ReductionStep> reduction_path(const TypeTriple& type) {
  std::vector<ReductionStep> steps;
  TypeTriple current = type;
  while (!is_reduced(current)) {
    for (int c = 0; c < 3; ++c) {
      const auto dec = decompose_type(current);
      const std::int64_t t = dec.t[static_cast<std::size_t>(c)];
      if (t == 1) continue;
      TypeTriple next = current;
      next.p[static_cast<std::size_t>(c)] /= t;
      steps.push_back({c, t, current, next});
      current = next;
    }
  }
  return steps;
}

TypedRelation transport_to_reduced(const ProblemInstance& problem, const Relation& relation) {
  require_verifies(problem, relation, "relation");
  TypedRelation current{relation, problem.type};
  for (const auto& step : reduction_path(problem.type)) {
    current = push_down(current.relation, step.coordinate, step.m, current.type);
  }
  return current;
}

Relation transport_from_reduced(const ProblemInstance& problem, const Relation& relation) {
  const auto steps = reduction_path(problem.type);
  const TypeTriple reduced = steps.empty() ? problem.type : steps.back().to;
  require_verifies(problem.with_type(reduced), relation, "relation");
  Relation current = relation;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    current = lift_up(current, it->coordinate, it->m, it->from);
  }
  return current;
}

CurveSpec curve_spec(const ProblemInstance& problem) {
  require_reduced(problem.type);
  if (!degree_compatible(problem.type, problem.degrees())) {
    throw Error(ErrorKind::DegreeIncompatible,
                "deg F_i - deg F_j is not divisible by r*s_ij for type " + problem.type.format());
  }
  const auto dec = decompose_type(problem.type);
  return CurveSpec{problem, problem.type.p[0] / dec.s01, problem.type.p[1] / dec.s01};
}

bool on_curve(const CurveSpec& curve, const CurvePoint& point) {
  const auto& F = curve.problem.F;
  const auto e1 = static_cast<unsigned>(curve.e1);
  const auto e2 = static_cast<unsigned>(curve.e2);
  const Form d1 = point.z1.denominator().pow(e1);
  const Form d2 = point.z2.denominator().pow(e2);
  const Form n1 = point.z1.numerator().pow(e1);
  const Form n2 = point.z2.numerator().pow(e2);
  try {
    const Form sum = F[0] * n1 * d2 + F[1] * n2 * d1 + F[2] * d1 * d2;
    return sum.is_zero();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::DegreeMismatch) return false;
    throw;
  }
}

CurvePoint curve_point(const ProblemInstance& problem, const Relation& relation) {
  require_reduced(problem.type);
  require_verifies(problem, relation, "relation");
  const auto dec = decompose_type(problem.type);
  const auto& h = relation.h;
  return CurvePoint{
      FormRatio(h[0].pow(static_cast<unsigned>(dec.s01)), h[2].pow(static_cast<unsigned>(dec.s12))),
      FormRatio(h[1].pow(static_cast<unsigned>(dec.s01)), h[2].pow(static_cast<unsigned>(dec.s02))),
  };
}

std::vector<Relation> curve_fiber(const ProblemInstance& problem, const CurvePoint& point,
                                  const Relation& witness) {
  require_reduced(problem.type);
  const auto dec = decompose_type(problem.type);
  const auto zeta = primitive_root_of_unity(static_cast<int>(dec.s01), problem.order);
  if (!zeta) {
    throw Error(ErrorKind::FieldTooSmall, "Q(zeta_" + std::to_string(problem.order) +
                                              ") has no primitive " + std::to_string(dec.s01) +
                                              "-th root of unity");
  }
  if (!(curve_point(problem, witness) == point)) {
    throw Error(ErrorKind::InvalidInput, "witness relation does not map to the given point");
  }
  std::vector<Relation> fiber;
  Scalar power(mpq_class(1), problem.order);
  for (std::int64_t k = 0; k < dec.s01; ++k) {
    Relation member = witness;
    member.h[1] *= power;
    fiber.push_back(std::move(member));
    power *= *zeta;
  }
  return fiber;
}

Relation point_to_relation(const ProblemInstance& problem, const CurvePoint& point) {
  const CurveSpec curve = curve_spec(problem);
  const auto dec = decompose_type(problem.type);
  if (dec.s01 != 1) {
    throw Error(ErrorKind::NotApplicable,
                "curve points determine relations only when s01 = 1 (here s01 = " + std::to_string(dec.s01) + ")");
  }
  if (!on_curve(curve, point)) throw Error(ErrorKind::NotOnCurve, "point does not satisfy the curve equation");
  const Form& g0 = point.z1.numerator();
  const Form& g1 = point.z1.denominator();
  const Form& g2 = point.z2.numerator();
  const Form& g3 = point.z2.denominator();
  const auto s12 = static_cast<unsigned>(dec.s12);
  const auto s02 = static_cast<unsigned>(dec.s02);
  const Form f1 = g1.pow(s12 - 1) * g3.pow(s12);
  const Form f2 = g1.pow(s02) * g3.pow(s02 - 1);
  Relation out{{f1 * g0, f2 * g2, g1 * g3}};
  for (const auto& h : out.h) {
    if (h.is_zero()) throw Error(ErrorKind::ZeroComponent, "point has a zero coordinate");
  }
  return out;
}

}  // namespace qtr
