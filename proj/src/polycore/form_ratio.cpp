#include "qtr/form_ratio.hpp"

#include "qtr/error.hpp"

namespace qtr {

FormRatio::FormRatio(Form numerator, Form denominator) {
  if (denominator.is_zero()) throw Error(ErrorKind::DivisionByZero, "ratio with zero denominator");
  if (numerator.is_zero()) {
    const int order = numerator.order() == 1 ? denominator.order() : numerator.order();
    num_ = Form(order);
    den_ = Form::one(order);
    return;
  }
  const Form g = form_gcd(numerator, denominator);
  if (!g.is_constant()) {
    numerator = exact_div(numerator, g);
    denominator = exact_div(denominator, g);
  }
  const Scalar scale = denominator.leading_coefficient().inverse();
  num_ = numerator * scale;
  den_ = denominator * scale;
}

FormRatio::FormRatio(const Form& numerator) : FormRatio(numerator, Form::one(numerator.order())) {}

FormRatio FormRatio::inverse() const {
  if (num_.is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of a zero ratio");
  return FormRatio(den_, num_);
}

FormRatio FormRatio::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  const auto e = static_cast<unsigned>(exponent);
  // Powers of coprime forms stay coprime, so no gcd is needed.
  FormRatio out = *this;
  out.num_ = num_.pow(e);
  out.den_ = den_.pow(e);
  return out;
}

std::string FormRatio::format() const { return num_.format() + "|" + den_.format(); }

FormRatio operator*(const FormRatio& a, const FormRatio& b) {
  return FormRatio(a.num_ * b.num_, a.den_ * b.den_);
}

FormRatio operator/(const FormRatio& a, const FormRatio& b) { return a * b.inverse(); }

}  // namespace qtr
