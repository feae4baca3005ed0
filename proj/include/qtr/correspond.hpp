#pragma once

#include "qtr/form_ratio.hpp"
#include "qtr/relations.hpp"

#include <cstdint>
#include <vector>

namespace qtr {

struct TypedRelation {
  Relation relation;
  TypeTriple type;
};

/// Raises h_c to the m-th power and divides p_c by m. Throws NotDivisibleType.
TypedRelation push_down(const Relation& relation, int coordinate, std::int64_t m, const TypeTriple& type);

/// Smallest k >= 0 with k * w_c = -1 (mod m) for the target decomposition.
/// Throws ConditionViolated unless m divides t_c of the target.
std::int64_t lift_parameter(int coordinate, std::int64_t m, const TypeTriple& target);

/// Inverse of push_down on equivalence classes: maps a relation of type
/// target-with-p_c/m to one of type `target` via
///   h_i -> h_c^{k w_i / m} h_i (i != c),   h_c -> h_c^{(1 + k w_c) / m}.
Relation lift_up(const Relation& relation, int coordinate, std::int64_t m, const TypeTriple& target);

/// lift_up with an explicit k; any k >= 0 with m | 1 + k w_c is accepted.
Relation lift_up_with_k(const Relation& relation, int coordinate, std::int64_t m,
                        const TypeTriple& target, std::int64_t k);

/// One push_down step of the reduction of a type.
struct ReductionStep {
  int coordinate;
  std::int64_t m;
  TypeTriple from;
  TypeTriple to;
};

/// Push-down steps (coordinates 0, 1, 2 in turn, m = t_c) ending at the
/// reduced type.
std::vector<ReductionStep> reduction_path(const TypeTriple& type);

TypedRelation transport_to_reduced(const ProblemInstance& problem, const Relation& relation);

/// `problem.type` is the target; `relation` must verify at its reduced type.
Relation transport_from_reduced(const ProblemInstance& problem, const Relation& relation);

/// The curve F0/F2 z1^{e1} + F1/F2 z2^{e2} + 1 = 0 over the function field,
/// with e1 = p0/s01 and e2 = p1/s01.
struct CurveSpec {
  ProblemInstance problem;
  std::int64_t e1 = 1;
  std::int64_t e2 = 1;
};

struct CurvePoint {
  FormRatio z1;
  FormRatio z2;

  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

/// Throws NotReduced or DegreeIncompatible.
CurveSpec curve_spec(const ProblemInstance& problem);

/// F0 n1^{e1} d2^{e2} + F1 n2^{e2} d1^{e1} + F2 d1^{e1} d2^{e2} == 0.
bool on_curve(const CurveSpec& curve, const CurvePoint& point);

/// (h0^{s01} / h2^{s12}, h1^{s01} / h2^{s02}).
CurvePoint curve_point(const ProblemInstance& problem, const Relation& relation);

/// The s01 inequivalent relations (h0, zeta^k h1, h2) over one point.
/// Throws FieldTooSmall when the field lacks a primitive s01-th root of unity.
std::vector<Relation> curve_fiber(const ProblemInstance& problem, const CurvePoint& point,
                                  const Relation& witness);

/// Inverse of curve_point when s01 = 1 (NotApplicable otherwise).
Relation point_to_relation(const ProblemInstance& problem, const CurvePoint& point);

}  // namespace qtr
