#include "qtr/form.hpp"

#include <sstream>

namespace qtr {

namespace {

void write_monomial(std::ostringstream& out, const Monomial& m) {
  bool first = true;
  for (int i = 0; i < 3; ++i) {
    if (m[i] == 0) continue;
    if (!first) out << '*';
    first = false;
    out << 'x' << i;
    if (m[i] > 1) out << '^' << m[i];
  }
}

}  // namespace

// Canonical layout: rational coefficients carry their sign into the joiner
// (" - "), cyclotomic coefficients are parenthesized and always joined by
// " + "; unit coefficients are omitted in front of a monomial.
std::string Form::format() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool constant_monomial = monomial_degree(m) == 0;
    if (!c.is_rational()) {
      if (!first) out << " + ";
      out << c.format();
      if (!constant_monomial) {
        out << '*';
        write_monomial(out, m);
      }
      first = false;
      continue;
    }
    const mpq_class q = c.rational();
    const bool negative = q < 0;
    const mpq_class magnitude = negative ? mpq_class(-q) : q;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (constant_monomial) {
      out << magnitude.get_str();
    } else {
      if (magnitude != 1) out << magnitude.get_str() << '*';
      write_monomial(out, m);
    }
  }
  return out.str();
}

}  // namespace qtr
