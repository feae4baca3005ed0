#include "qtr/typearith.hpp"

#include "qtr/error.hpp"

#include <algorithm>
#include <numeric>

namespace qtr {

TypeTriple::TypeTriple(std::int64_t p0, std::int64_t p1, std::int64_t p2) : p{p0, p1, p2} {
  if (p0 < 1 || p1 < 1 || p2 < 1) {
    throw Error(ErrorKind::InvalidInput, "type entries must be positive integers");
  }
}

std::string TypeTriple::format() const {
  return std::to_string(p[0]) + " " + std::to_string(p[1]) + " " + std::to_string(p[2]);
}

std::int64_t TypeDecomposition::s(int i, int j) const {
  if (i > j) std::swap(i, j);
  if (i == 0 && j == 1) return s01;
  if (i == 0 && j == 2) return s02;
  if (i == 1 && j == 2) return s12;
  throw Error(ErrorKind::InvalidInput, "s_ij needs two distinct coordinates");
}

TypeDecomposition decompose_type(const TypeTriple& p) {
  TypeDecomposition out;
  out.p = p;
  out.r = std::gcd(std::gcd(p[0], p[1]), p[2]);
  out.d = std::lcm(std::lcm(p[0], p[1]), p[2]);
  out.s01 = std::gcd(p[0] / out.r, p[1] / out.r);
  out.s02 = std::gcd(p[0] / out.r, p[2] / out.r);
  out.s12 = std::gcd(p[1] / out.r, p[2] / out.r);
  out.t[0] = p[0] / (out.r * out.s01 * out.s02);
  out.t[1] = p[1] / (out.r * out.s01 * out.s12);
  out.t[2] = p[2] / (out.r * out.s02 * out.s12);
  for (int i = 0; i < 3; ++i) out.w[static_cast<std::size_t>(i)] = out.d / p[i];
  return out;
}

TypeTriple reduce_type(const TypeTriple& p) {
  const std::int64_t g = std::gcd(std::gcd(p[0], p[1]), p[2]);
  TypeTriple q;
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3;
    const int k = (i + 2) % 3;
    q.p[static_cast<std::size_t>(i)] = g * std::gcd(p[i] / g, (p[j] / g) * (p[k] / g));
  }
  return q;
}

bool is_reduced(const TypeTriple& p) {
  const auto dec = decompose_type(p);
  return dec.t[0] == 1 && dec.t[1] == 1 && dec.t[2] == 1;
}

bool degree_compatible(const TypeTriple& p, const std::array<int, 3>& degrees) {
  const auto dec = decompose_type(p);
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const std::int64_t diff = degrees[static_cast<std::size_t>(i)] - degrees[static_cast<std::size_t>(j)];
      if (diff % (dec.r * dec.s(i, j)) != 0) return false;
    }
  }
  return true;
}

SortedType sorted_view(const TypeTriple& p) {
  SortedType out;
  std::stable_sort(out.perm.begin(), out.perm.end(), [&](int a, int b) { return p[a] < p[b]; });
  for (int k = 0; k < 3; ++k) out.type.p[static_cast<std::size_t>(k)] = p[out.perm[static_cast<std::size_t>(k)]];
  return out;
}

}  // namespace qtr
