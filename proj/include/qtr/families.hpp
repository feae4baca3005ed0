#pragma once

#include "qtr/relations.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qtr {

enum class FamilyStatus { Yes, No, Unknown };
enum class FamilyCase { None, Conic222, LinearP0Equals1 };

std::string to_string(FamilyStatus status);
std::string to_string(FamilyCase family_case);

struct FamilyVerdict {
  FamilyStatus status = FamilyStatus::No;
  FamilyCase family_case = FamilyCase::None;
  /// Ascending sort of the reduced type; perm[k] is the original coordinate at k.
  std::array<int, 3> permutation{0, 1, 2};
  TypeTriple reduced_type;
  std::string detail;
  /// For Conic222: a verified relation at the reduced type.
  std::optional<Relation> witness;
};

struct FamilyMember {
  Relation relation;
  /// (b0, b1, b2) for conic members, (g1, g2) for linear members.
  std::vector<Form> parameters;
};

struct FamilySample {
  FamilyVerdict verdict;
  TypeTriple type;  // the reduced type the members verify at
  std::vector<FamilyMember> members;
  /// Index pairs (i < j) whose members were certified equivalent.
  std::vector<std::pair<int, int>> equivalent_pairs;
};

/// Decides whether rational families of relations exist for the reduced type:
/// (1, p, p) after sorting needs p | deg F_b - deg F_c for the two exponent-p
/// coordinates; (2, 2, 2) needs a witness, supplied or found by searching
/// h-degrees below `search_budget` (0 disables the search); every other
/// reduced type has none. Throws InvalidProblem.
FamilyVerdict family_exists(const ProblemInstance& problem, const std::optional<Relation>& witness,
                            int search_budget);

/// (-F0^{p-1} (F1 g1^p + F2 g2^p), F0 g1, F0 g2) in sorted coordinates, for a
/// problem whose type sorts to (1, p, p). Requires
/// deg g1 = deg g2 + (deg F2 - deg F1) / p.
FamilyMember case2_member(const ProblemInstance& problem, const Form& g1, const Form& g2);

/// Second intersection of the conic F0 X0^2 + F1 X1^2 + F2 X2^2 = 0 with the
/// line through the witness a in direction b:
///   h_i = a_i Q(b) - 2 b_i B(a, b).
FamilyMember conic_member(const ProblemInstance& problem, const Relation& witness,
                          const std::array<Form, 3>& direction);

/// `count` members from a fixed enumeration of parameters, plus the pairs
/// that turned out equivalent. Throws NoFamily or InsufficientParameters.
FamilySample family_sample(const ProblemInstance& problem, const std::optional<Relation>& witness, int count,
                           int search_budget = 0);

}  // namespace qtr
