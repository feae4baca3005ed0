#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace qtr {

/// Exponent type (p0, p1, p2) of a quasi-toric relation; entries are >= 1.
struct TypeTriple {
  std::array<std::int64_t, 3> p{1, 1, 1};

  TypeTriple() = default;
  TypeTriple(std::int64_t p0, std::int64_t p1, std::int64_t p2);

  std::int64_t operator[](int i) const { return p[static_cast<std::size_t>(i)]; }
  std::string format() const;  // "p0 p1 p2"

  friend bool operator==(const TypeTriple&, const TypeTriple&) = default;
};

/// Gcd/lcm data of a type. For {i,j,k} = {0,1,2}:
///   p_i = r * s_ij * s_ik * t_i,   d = r * s01 * s02 * s12 * t0 * t1 * t2,
///   w_i = d / p_i = s_jk * t_j * t_k.
struct TypeDecomposition {
  TypeTriple p;
  std::int64_t r = 1;
  std::int64_t d = 1;
  std::int64_t s01 = 1, s02 = 1, s12 = 1;
  std::array<std::int64_t, 3> t{1, 1, 1};
  std::array<std::int64_t, 3> w{1, 1, 1};

  /// s_ij for any unordered pair i != j.
  std::int64_t s(int i, int j) const;
};

TypeDecomposition decompose_type(const TypeTriple& p);

/// q_i = g * gcd(p_i / g, p_j * p_k / g^2) with g = gcd(p0, p1, p2).
TypeTriple reduce_type(const TypeTriple& p);

/// True iff t0 = t1 = t2 = 1.
bool is_reduced(const TypeTriple& p);

/// True iff r * s_ij divides deg_i - deg_j for every pair.
bool degree_compatible(const TypeTriple& p, const std::array<int, 3>& degrees);

/// Ascending sort of the entries; perm[k] is the original index placed at k.
/// The sort is stable, so equal entries keep their coordinate order.
struct SortedType {
  TypeTriple type;
  std::array<int, 3> perm{0, 1, 2};
};
SortedType sorted_view(const TypeTriple& p);

}  // namespace qtr
