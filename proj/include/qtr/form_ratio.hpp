#pragma once

#include "qtr/form.hpp"

#include <string>

namespace qtr {

/// A quotient of forms in lowest terms with a monic denominator.
class FormRatio {
 public:
  explicit FormRatio(Form numerator, Form denominator);
  explicit FormRatio(const Form& numerator);

  const Form& numerator() const { return num_; }
  const Form& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  FormRatio inverse() const;
  FormRatio pow(long exponent) const;

  /// "num|den" in canonical polynomial text.
  std::string format() const;

  friend FormRatio operator*(const FormRatio& a, const FormRatio& b);
  friend FormRatio operator/(const FormRatio& a, const FormRatio& b);
  friend bool operator==(const FormRatio& a, const FormRatio& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  Form num_;
  Form den_;
};

}  // namespace qtr
