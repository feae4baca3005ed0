#include "oracle_poly.hpp"
#include "support.hpp"

#include "qtr/error.hpp"
#include "qtr/families.hpp"

#include <gtest/gtest.h>

using qtr::FamilyCase;
using qtr::FamilyStatus;
using qtr::Relation;
using qtr::TypeTriple;
using qtr::test::poly;
using qtr::test::rel;
using qtr::test::SymPoly;

namespace {

qtr::ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const qtr::Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return qtr::ErrorKind::InvalidInput;
}

void expect_pairwise_inequivalent(const TypeTriple& type, const std::vector<qtr::FamilyMember>& members) {
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      EXPECT_FALSE(qtr::equivalent(type, members[i].relation, members[j].relation).has_value()) << i << " " << j;
    }
  }
}

}  // namespace

TEST(FamilyExists, Classification) {
  const auto none = qtr::family_exists(qtr::test::load_problem("sextic236"), std::nullopt, 0);
  EXPECT_EQ(none.status, FamilyStatus::No);

  const auto linear = qtr::family_exists(qtr::test::load_problem("quadric122"), std::nullopt, 0);
  EXPECT_EQ(linear.status, FamilyStatus::Yes);
  EXPECT_EQ(linear.family_case, FamilyCase::LinearP0Equals1);

  EXPECT_EQ(qtr::family_exists(qtr::test::load_problem("cubic133"), std::nullopt, 0).status, FamilyStatus::No);

  const auto conic = qtr::test::load_problem("line222");
  const auto yes = qtr::family_exists(conic, rel("1", "1", "1"), 0);
  EXPECT_EQ(yes.status, FamilyStatus::Yes);
  EXPECT_EQ(yes.family_case, FamilyCase::Conic222);
  EXPECT_EQ(qtr::family_exists(conic, std::nullopt, 0).status, FamilyStatus::Unknown);

  const auto found = qtr::family_exists(conic, std::nullopt, 1);
  EXPECT_EQ(found.status, FamilyStatus::Yes);
  ASSERT_TRUE(found.witness.has_value());
  EXPECT_TRUE(qtr::verify_relation(conic, *found.witness));
}

TEST(FamilyExists, TransportsThroughReduction) {
  // (2, 2, 8) reduces to (2, 2, 2); the witness is carried down.
  const auto verdict = qtr::family_exists(qtr::test::load_problem("conic228"), qtr::test::load_relation("conic228", 1), 0);
  EXPECT_EQ(verdict.status, FamilyStatus::Yes);
  EXPECT_EQ(verdict.reduced_type, TypeTriple(2, 2, 2));
  // (2, 2, 7) reduces to (2, 2, 1), sorted (1, 2, 2).
  const auto line = qtr::family_exists(qtr::test::load_problem("line221").with_type(TypeTriple(2, 2, 7)), std::nullopt, 0);
  EXPECT_EQ(line.status, FamilyStatus::Yes);
  EXPECT_EQ(line.permutation, (std::array<int, 3>{2, 0, 1}));
}

TEST(FamilyExists, AgreesWithCaseAnalysis) {
  const auto F = qtr::test::load_problem("line221");
  for (std::int64_t a = 1; a <= 12; ++a) {
    for (std::int64_t b = a; b <= 12; ++b) {
      for (std::int64_t c = b; c <= 12; ++c) {
        const TypeTriple t(a, b, c);
        if (!qtr::is_reduced(t)) continue;
        const auto verdict = qtr::family_exists(F.with_type(t), std::nullopt, 0);
        if (t == TypeTriple(2, 2, 2)) {
          EXPECT_EQ(verdict.status, FamilyStatus::Unknown);
        } else if (a == 1 && b == c) {
          // Linear forms: every degree difference is 0.
          EXPECT_EQ(verdict.status, FamilyStatus::Yes) << t.format();
        } else {
          EXPECT_EQ(verdict.status, FamilyStatus::No) << t.format();
        }
      }
    }
  }
}

TEST(FamilyExists, InvalidProblem) {
  EXPECT_EQ(kind_of([] {
              qtr::family_exists(qtr::test::problem("x1*x2", "x0*x2", "-x2*(x0 + x1)", TypeTriple(1, 2, 2)),
                                 std::nullopt, 0);
            }),
            qtr::ErrorKind::InvalidProblem);
}

TEST(Case2, Examples) {
  const auto P = qtr::test::load_problem("quadric122");
  const auto m = qtr::case2_member(P, poly("x1"), poly("1"));
  EXPECT_EQ(m.relation, rel("x0^2 - x1^2", "x1", "1"));
  EXPECT_TRUE(qtr::verify_relation(P, m.relation));
  EXPECT_EQ(kind_of([&] { qtr::case2_member(P, poly("x0"), poly("1")); }), qtr::ErrorKind::ZeroComponent);
  EXPECT_EQ(kind_of([&] { qtr::case2_member(P, poly("1"), poly("1")); }), qtr::ErrorKind::DegreeMismatch);

  const auto L = qtr::test::load_problem("line122");
  const auto ones = qtr::case2_member(L, poly("1"), poly("1"));
  EXPECT_TRUE(qtr::verify_relation(L, ones.relation));
  EXPECT_EQ(ones.relation, rel("x0^2", "x0", "x0"));
}

TEST(Case2, RandomizedParameters) {
  std::mt19937 rng(41);
  const auto P = qtr::test::load_problem("quadric122");
  for (int trial = 0; trial < 30; ++trial) {
    const int n = trial % 3;
    const qtr::Form g2 = qtr::test::random_form(rng, n);
    const qtr::Form g1 = qtr::test::random_form(rng, n + 1);
    try {
      EXPECT_TRUE(qtr::verify_relation(P, qtr::case2_member(P, g1, g2).relation));
    } catch (const qtr::Error& e) {
      EXPECT_EQ(e.kind(), qtr::ErrorKind::ZeroComponent);
    }
  }
}

TEST(Case2, UnsortedCoordinates) {
  // (2, 1, 2) sorts to (1, 2, 2) with the unit exponent at coordinate 1.
  const auto P = qtr::test::problem("x1", "x0", "-x0 - x1", TypeTriple(2, 1, 2));
  const auto m = qtr::case2_member(P, poly("x1"), poly("x2"));
  EXPECT_TRUE(qtr::verify_relation(P, m.relation));
}

TEST(Case2, FlippedSignFails) {
  // Indeterminates F0, F1, F2, g1, g2 with p in {2, 3, 4}.
  for (int p = 2; p <= 4; ++p) {
    const auto v = [](std::size_t i) { return SymPoly::variable(5, i); };
    const SymPoly F0 = v(0), F1 = v(1), F2 = v(2), g1 = v(3), g2 = v(4);
    const auto sum = [&](const SymPoly& h0, const SymPoly& h1, const SymPoly& h2) {
      return F0 * h0 + F1 * h1.pow(p) + F2 * h2.pow(p);
    };
    const SymPoly h1 = F0 * g1, h2 = F0 * g2;
    const SymPoly flipped = F0.pow(p - 1) * (F1 * g1.pow(p) - F2 * g2.pow(p));
    const SymPoly corrected = SymPoly::constant(5, -1) * F0.pow(p - 1) * (F1 * g1.pow(p) + F2 * g2.pow(p));
    EXPECT_EQ(sum(flipped, h1, h2), SymPoly::constant(5, 2) * F0.pow(p) * F1 * g1.pow(p));
    EXPECT_TRUE(sum(corrected, h1, h2).is_zero());
  }
}

TEST(Conic, Examples) {
  const auto P = qtr::test::load_problem("line222");
  const Relation a = rel("1", "1", "1");
  const auto m1 = qtr::conic_member(P, a, {poly("1"), poly("0"), poly("0")});
  EXPECT_EQ(m1.relation, rel("-x1", "x1", "x1"));
  EXPECT_TRUE(qtr::verify_relation(P, m1.relation));
  const auto m2 = qtr::conic_member(P, a, {poly("0"), poly("1"), poly("0")});
  EXPECT_EQ(m2.relation, rel("x2", "-x2", "x2"));
  EXPECT_EQ(kind_of([&] { qtr::conic_member(P, a, {poly("1"), poly("1"), poly("1")}); }),
            qtr::ErrorKind::DegenerateDirection);
}

TEST(Conic, NonConstantDirections) {
  const auto P = qtr::test::load_problem("line222");
  const auto m = qtr::conic_member(P, rel("1", "1", "1"), {poly("x0"), poly("x1 - x2"), poly("2*x0 + x2")});
  EXPECT_TRUE(qtr::verify_relation(P, m.relation));
}

TEST(Conic, FormalIdentity) {
  // Variables: a0 a1 a2 b0 b1 b2 F0 F1 F2.
  const auto v = [](std::size_t i) { return SymPoly::variable(9, i); };
  const std::array<SymPoly, 3> a{v(0), v(1), v(2)}, b{v(3), v(4), v(5)}, F{v(6), v(7), v(8)};
  SymPoly Qa(9), Qb(9), B(9);
  for (std::size_t i = 0; i < 3; ++i) {
    Qa = Qa + F[i] * a[i] * a[i];
    Qb = Qb + F[i] * b[i] * b[i];
    B = B + F[i] * a[i] * b[i];
  }
  SymPoly total(9);
  for (std::size_t i = 0; i < 3; ++i) {
    const SymPoly h = a[i] * Qb - SymPoly::constant(9, 2) * b[i] * B;
    total = total + F[i] * h * h;
  }
  // Vanishes whenever a lies on the conic.
  EXPECT_EQ(total, Qb * Qb * Qa);
}

TEST(Sample, Linear) {
  const auto P = qtr::test::load_problem("quadric122");
  const auto s = qtr::family_sample(P, std::nullopt, 5);
  ASSERT_EQ(s.members.size(), 5U);
  for (const auto& m : s.members) EXPECT_TRUE(qtr::verify_relation(P, m.relation));
  EXPECT_TRUE(s.equivalent_pairs.empty());
  expect_pairwise_inequivalent(s.type, s.members);
}

TEST(Sample, Conic) {
  const auto P = qtr::test::load_problem("line222");
  const auto s = qtr::family_sample(P, rel("1", "1", "1"), 3);
  ASSERT_EQ(s.members.size(), 3U);
  EXPECT_EQ(s.members[0].relation, rel("-x1", "x1", "x1"));
  EXPECT_EQ(s.members[1].relation, rel("x2", "-x2", "x2"));
  for (const auto& m : s.members) EXPECT_TRUE(qtr::verify_relation(P, m.relation));
  expect_pairwise_inequivalent(s.type, s.members);
}

TEST(Sample, Deterministic) {
  const auto P = qtr::test::load_problem("quadric122");
  const auto a = qtr::family_sample(P, std::nullopt, 4);
  const auto b = qtr::family_sample(P, std::nullopt, 4);
  ASSERT_EQ(a.members.size(), b.members.size());
  for (std::size_t i = 0; i < a.members.size(); ++i) EXPECT_EQ(a.members[i].relation, b.members[i].relation);
}

TEST(Sample, NoFamily) {
  EXPECT_EQ(kind_of([] { qtr::family_sample(qtr::test::load_problem("sextic236"), std::nullopt, 2); }),
            qtr::ErrorKind::NoFamily);
}
