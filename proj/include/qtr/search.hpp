#pragma once

#include "qtr/relations.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qtr {

inline constexpr std::uint64_t kDefaultSearchCap = 10'000'000;

/// {-2, -1, 0, 1, 2}
std::vector<Scalar> default_coefficient_grid();

struct SearchSpec {
  /// Exact degrees of h0, h1, h2.
  std::array<int, 3> degrees{0, 0, 0};
  std::vector<Scalar> coefficients = default_coefficient_grid();
  /// Keep only the first member of each equivalence class.
  bool dedupe = false;
  /// Maximum number of candidate triples (including ones with a zero entry).
  std::uint64_t cap = kDefaultSearchCap;
};

struct SearchResult {
  std::vector<Relation> relations;
  std::uint64_t candidates = 0;
  std::string note;
};

/// Every verifying triple whose coefficients (on the monomial bases of the
/// requested degrees) lie in the grid, ordered lexicographically by grid
/// index. Unbalanced degrees give an empty result with a note. Throws
/// BudgetExceeded when the candidate count exceeds the cap.
SearchResult brute_force(const ProblemInstance& problem, const SearchSpec& spec);

/// For a type that sorts to (1, p, p): given the two forms at the coordinates
/// with exponent p (in coordinate order), solves for the remaining one.
/// nullopt when F at the unit coordinate does not divide. Throws
/// ZeroComponent when the solved component would be zero.
std::optional<Relation> complete_relation(const ProblemInstance& problem, const Form& first, const Form& second);

}  // namespace qtr
