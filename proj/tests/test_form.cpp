#include "support.hpp"

#include "qtr/error.hpp"
#include "qtr/form.hpp"
#include "qtr/form_ratio.hpp"
#include "qtr/parse.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <random>

using qtr::ErrorKind;
using qtr::Form;
using qtr::Scalar;
using qtr::test::poly;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const qtr::Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InvalidInput;
}

}  // namespace

TEST(Parse, Examples) {
  const Form f = poly("x0^2 - (1/2)*x1*x2");
  EXPECT_EQ(f.degree(), 2);
  EXPECT_EQ(f.term_count(), 2U);
  EXPECT_EQ(f.coefficient({0, 1, 1}), Scalar(mpq_class(-1, 2)));

  const Form g = poly("z*x0^3", 4);
  EXPECT_EQ(g.coefficient({3, 0, 0}), Scalar::zeta(4));
  EXPECT_EQ(g.format(), "(z)*x0^3");

  EXPECT_EQ(kind_of([] { poly("x0 + x1^2"); }), ErrorKind::NonHomogeneous);
}

TEST(Parse, Errors) {
  EXPECT_EQ(kind_of([] { poly("2x0"); }), ErrorKind::SyntaxError);
  EXPECT_EQ(kind_of([] { poly("x3"); }), ErrorKind::SyntaxError);
  EXPECT_EQ(kind_of([] { poly("(x0 + x1"); }), ErrorKind::SyntaxError);
  EXPECT_EQ(kind_of([] { poly("x0 +"); }), ErrorKind::SyntaxError);
  EXPECT_EQ(kind_of([] { poly("1/0"); }), ErrorKind::SyntaxError);
  EXPECT_EQ(kind_of([] { poly(""); }), ErrorKind::SyntaxError);
}

TEST(Parse, ZOverRationalsWarns) {
  std::vector<std::string> warnings;
  const Form f = qtr::parse_form("z*x0", 1, &warnings);
  EXPECT_EQ(f, poly("x0"));
  ASSERT_EQ(warnings.size(), 1U);
}

TEST(Parse, ArithmeticInsideExpressions) {
  EXPECT_EQ(poly("(x0 + x1)^2"), poly("x0^2 + 2*x0*x1 + x1^2"));
  EXPECT_EQ(poly("-(x0 - x1)*(x0 + x1)"), poly("x1^2 - x0^2"));
  EXPECT_EQ(poly("x0*x0 - x0^2"), Form());
  EXPECT_EQ(poly("(1 + z)^2", 3), poly("z", 3));
}

TEST(Format, Canonical) {
  EXPECT_EQ(poly("x1^2 + x0^2 - 3*x0*x1").format(), "x0^2 - 3*x0*x1 + x1^2");
  EXPECT_EQ(poly("-x0 - x1").format(), "-x0 - x1");
  EXPECT_EQ(poly("0").format(), "0");
  EXPECT_EQ(poly("-1/2").format(), "-1/2");
  EXPECT_EQ(poly("(1/2)*x0*x2^3").format(), "1/2*x0*x2^3");
  EXPECT_EQ(poly("z*x0 - x1", 4).format(), "(z)*x0 - x1");
}

TEST(Format, RoundTrip) {
  std::mt19937 rng(11);
  for (int order : {1, 3, 4}) {
    for (int trial = 0; trial < 30; ++trial) {
      Form f = qtr::test::random_form(rng, trial % 5, 4, order);
      if (order > 1) f *= Scalar::zeta(order) + Scalar(trial);
      EXPECT_EQ(qtr::parse_form(f.format(), order), f) << f.format();
    }
  }
}

TEST(Form, RingOperations) {
  EXPECT_EQ(poly("x0 + x1") * poly("x0 - x1"), poly("x0^2 - x1^2"));
  EXPECT_EQ(kind_of([] { (void)(poly("x0") + poly("x0^2")); }), ErrorKind::DegreeMismatch);
  EXPECT_EQ(poly("x0") + Form(), poly("x0"));
  EXPECT_EQ(poly("x0 + x1").pow(3), poly("x0^3 + 3*x0^2*x1 + 3*x0*x1^2 + x1^3"));
  EXPECT_EQ(poly("x0^3*x1").derivative(0), poly("3*x0^2*x1"));
  EXPECT_TRUE(poly("x1^2").derivative(0).is_zero());
}

TEST(Form, RingAxiomsSampled) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const Form a = qtr::test::random_form(rng, 2);
    const Form b = qtr::test::random_form(rng, 2);
    const Form c = qtr::test::random_form(rng, 1);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
  }
}

TEST(Form, ExactDivision) {
  EXPECT_EQ(qtr::exact_div(poly("x0^2 - x1^2"), poly("x0 + x1")), poly("x0 - x1"));
  EXPECT_EQ(kind_of([] { qtr::exact_div(poly("x0^2 + x1^2"), poly("x0 + x1")); }), ErrorKind::NotDivisible);
  EXPECT_EQ(kind_of([] { qtr::exact_div(poly("x0"), Form()); }), ErrorKind::DivisionByZero);
  EXPECT_FALSE(qtr::try_exact_div(poly("x0"), poly("x1")).has_value());
}

TEST(Gcd, Examples) {
  EXPECT_EQ(qtr::form_gcd(poly("x0^2 - x1^2"), poly("x0^2 + 2*x0*x1 + x1^2")), poly("x0 + x1"));
  EXPECT_EQ(qtr::form_gcd(poly("x0"), poly("x1")), poly("1"));
  EXPECT_EQ(qtr::form_gcd(poly("3*x0*x2 - 6*x1^2"), Form()), poly("x0*x2 - 2*x1^2"));
  EXPECT_EQ(kind_of([] { qtr::form_gcd(Form(), Form()); }), ErrorKind::BothZero);
  EXPECT_EQ(qtr::form_gcd(poly("x0^3*x1"), poly("x0^2*x2")), poly("x0^2"));
  EXPECT_EQ(qtr::form_gcd(poly("x1*x2 + x2^2"), poly("x0*x2 + x1*x2")), poly("x2"));
}

TEST(Gcd, OverCyclotomicField) {
  const Form a = poly("x0 - z*x1", 4) * poly("x0 + x2", 4);
  const Form b = poly("x0 - z*x1", 4) * poly("x1 - x2", 4);
  EXPECT_EQ(qtr::form_gcd(a, b), poly("x0 - z*x1", 4));
}

// gcd(a c, b c) = gcd(a, b) * c, up to the monic normalization.
TEST(Gcd, MultiplicativityRandomized) {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> deg(0, 2);
  for (int trial = 0; trial < 200; ++trial) {
    const Form a = qtr::test::random_form(rng, deg(rng));
    const Form b = qtr::test::random_form(rng, deg(rng));
    const Form c = qtr::test::random_form(rng, 1 + deg(rng));
    const Form lhs = qtr::form_gcd(a * c, b * c);
    const Form rhs = (qtr::form_gcd(a, b) * c).monic();
    ASSERT_EQ(lhs, rhs) << a.format() << " | " << b.format() << " | " << c.format();
  }
}

TEST(Squarefree, Examples) {
  const auto mono = qtr::squarefree_decompose(poly("x0^2*x1"));
  ASSERT_EQ(mono.factors.size(), 2U);
  EXPECT_EQ(mono.factors[0], std::make_pair(poly("x1"), 1));
  EXPECT_EQ(mono.factors[1], std::make_pair(poly("x0"), 2));

  const auto mixed = qtr::squarefree_decompose(poly("(x0 + x1)^3*(x0 - x1)"));
  ASSERT_EQ(mixed.factors.size(), 2U);
  EXPECT_EQ(mixed.factors[0], std::make_pair(poly("x0 - x1"), 1));
  EXPECT_EQ(mixed.factors[1], std::make_pair(poly("x0 + x1"), 3));

  const auto plain = qtr::squarefree_decompose(poly("x0 + x1"));
  ASSERT_EQ(plain.factors.size(), 1U);
  EXPECT_EQ(plain.factors[0].second, 1);

  EXPECT_EQ(kind_of([] { qtr::squarefree_decompose(poly("5")); }), ErrorKind::ConstantInput);
}

TEST(Squarefree, ProductReassembles) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const Form a = qtr::test::random_form(rng, 1);
    const Form b = qtr::test::random_form(rng, 2);
    const Form f = a.pow(2) * b * Scalar(-3);
    const auto sq = qtr::squarefree_decompose(f);
    Form product = Form::constant(sq.unit, 1);
    for (const auto& [factor, mult] : sq.factors) product *= factor.pow(static_cast<unsigned>(mult));
    EXPECT_EQ(product, f);
  }
}

TEST(MthRoot, Examples) {
  EXPECT_EQ(*qtr::mth_root(poly("(x0 + x1)^2"), 2), poly("x0 + x1"));
  const auto r = qtr::mth_root(poly("x0^4 + 2*x0^2*x1^2 + x1^4"), 2);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(*r, poly("x0^2 + x1^2"));
  EXPECT_FALSE(qtr::mth_root(poly("x0^2*x1"), 2).has_value());
  EXPECT_FALSE(qtr::mth_root(poly("-x0^2"), 2).has_value());
  const auto i = qtr::mth_root(poly("-x0^2", 4), 2);
  ASSERT_TRUE(i.has_value());
  EXPECT_EQ(i->pow(2), poly("-x0^2", 4));
}

TEST(MthRoot, RoundTripRandomized) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<unsigned> exponent(2, 4);
  for (int trial = 0; trial < 100; ++trial) {
    const unsigned m = exponent(rng);
    const Form f = qtr::test::random_form(rng, 1 + trial % 2);
    const Form power = f.pow(m);
    const auto root = qtr::mth_root(power, m);
    ASSERT_TRUE(root.has_value()) << f.format();
    EXPECT_EQ(root->pow(m), power);
  }
}

TEST(FormRatio, ReducesAndNormalizes) {
  const qtr::FormRatio r(poly("x0^2 - x1^2"), poly("2*x0 + 2*x1"));
  EXPECT_EQ(r.numerator(), poly("1/2*x0 - 1/2*x1"));
  EXPECT_EQ(r.denominator(), poly("1"));
  EXPECT_EQ(qtr::FormRatio(poly("x0"), poly("x1")).pow(-2).format(), "x1^2|x0^2");
  EXPECT_EQ(kind_of([] { qtr::FormRatio(poly("x0"), Form()); }), ErrorKind::DivisionByZero);
}
