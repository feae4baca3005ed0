#include "qtr/scalar.hpp"

#include "qtr/error.hpp"

#include <map>
#include <mutex>

namespace qtr {

namespace {

using IntPoly = std::vector<mpz_class>;

// Exact quotient of `num` by the monic polynomial `den`.
IntPoly divide_monic(IntPoly num, const IntPoly& den) {
  const std::size_t dd = den.size() - 1;
  IntPoly quotient(num.size() - dd, 0);
  for (std::size_t i = num.size(); i-- > dd;) {
    const mpz_class c = num[i];
    quotient[i - dd] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  return quotient;
}

}  // namespace

int euler_phi(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidInput, "cyclotomic order must be positive");
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

const std::vector<mpz_class>& cyclotomic_polynomial(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidInput, "cyclotomic order must be positive");
  static std::mutex mutex;
  static std::map<int, IntPoly> cache;
  std::lock_guard<std::mutex> lock(mutex);
  if (auto it = cache.find(n); it != cache.end()) return it->second;

  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed iteratively so the
  // lock is never re-entered.
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0 || cache.count(d)) continue;
    IntPoly poly(d + 1, 0);
    poly[0] = -1;
    poly[d] = 1;
    for (int e = 1; e < d; ++e) {
      if (d % e == 0) poly = divide_monic(std::move(poly), cache.at(e));
    }
    cache.emplace(d, std::move(poly));
  }
  return cache.at(n);
}

}  // namespace qtr
