#include "qtr/parse.hpp"

#include "qtr/error.hpp"

#include <cctype>

namespace qtr {

namespace {

constexpr unsigned kMaxExponent = 4096;

// Parser values may be inhomogeneous until the whole input is consumed.
using RawPoly = Form::TermMap;

void add_into(RawPoly& acc, const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) acc.erase(it);
}

RawPoly raw_mul(const RawPoly& a, const RawPoly& b) {
  RawPoly out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) add_into(out, {ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]}, ca * cb);
  }
  return out;
}

RawPoly raw_constant(const Scalar& c) {
  RawPoly p;
  add_into(p, {0, 0, 0}, c);
  return p;
}

class Parser {
 public:
  Parser(std::string_view text, int order, std::vector<std::string>* warnings)
      : text_(text), order_(order), warnings_(warnings) {}

  RawPoly parse() {
    RawPoly value = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::SyntaxError, what + " at offset " + std::to_string(pos_) + " in \"" +
                                            std::string(text_) + "\"");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool at_digit() {
    skip_space();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  mpz_class integer() {
    if (!at_digit()) fail("expected an integer");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  RawPoly expression() {
    RawPoly acc = term();
    for (;;) {
      if (accept('+')) {
        for (const auto& [m, c] : term()) add_into(acc, m, c);
      } else if (accept('-')) {
        for (const auto& [m, c] : term()) add_into(acc, m, -c);
      } else {
        return acc;
      }
    }
  }

  RawPoly term() {
    RawPoly acc = unary();
    while (accept('*')) acc = raw_mul(acc, unary());
    return acc;
  }

  RawPoly unary() {
    if (accept('-')) {
      RawPoly inner = unary();
      for (auto& [m, c] : inner) c = -c;
      return inner;
    }
    if (accept('+')) return unary();
    return power();
  }

  RawPoly power() {
    RawPoly base = primary();
    if (!accept('^')) return base;
    const mpz_class exponent = integer();
    if (exponent > kMaxExponent) fail("exponent too large");
    RawPoly result = raw_constant(Scalar(1));
    for (unsigned long i = 0; i < exponent.get_ui(); ++i) result = raw_mul(result, base);
    return result;
  }

  RawPoly primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (accept('(')) {
      RawPoly inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (at_digit()) {
      const mpz_class num = integer();
      mpz_class den = 1;
      if (accept('/')) {
        den = integer();
        if (den == 0) fail("zero denominator");
      }
      mpq_class q(num, den);
      q.canonicalize();
      return raw_constant(Scalar(q, order_));
    }
    const char c = text_[pos_];
    if (c == 'x') {
      ++pos_;
      if (pos_ >= text_.size() || text_[pos_] < '0' || text_[pos_] > '2') fail("expected x0, x1 or x2");
      Monomial m{0, 0, 0};
      m[text_[pos_] - '0'] = 1;
      ++pos_;
      ensure_identifier_end();
      RawPoly p;
      p.emplace(m, Scalar(1));
      return p;
    }
    if (c == 'z') {
      ++pos_;
      ensure_identifier_end();
      if (order_ == 1 && warnings_ != nullptr) {
        warnings_->push_back("z used over Q(zeta_1); it evaluates to 1");
      }
      return raw_constant(Scalar::zeta(order_));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  void ensure_identifier_end() {
    if (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      fail("unknown identifier");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int order_;
  std::vector<std::string>* warnings_;
};

}  // namespace

Form parse_form(std::string_view text, int order, std::vector<std::string>* warnings) {
  if (order < 1) throw Error(ErrorKind::InvalidInput, "cyclotomic order must be positive");
  const RawPoly raw = Parser(text, order, warnings).parse();
  return Form::from_terms(std::vector<std::pair<Monomial, Scalar>>(raw.begin(), raw.end()), order);
}

Scalar parse_scalar(std::string_view text, int order, std::vector<std::string>* warnings) {
  const Form f = parse_form(text, order, warnings);
  if (!f.is_constant()) throw Error(ErrorKind::InvalidInput, "expected a constant, got " + f.format());
  return f.is_zero() ? Scalar(mpq_class(0), order) : f.leading_coefficient();
}

}  // namespace qtr
