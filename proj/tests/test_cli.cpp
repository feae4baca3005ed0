#include "support.hpp"

#include "qtr/cli.hpp"
#include "qtr/documents.hpp"
#include "qtr/error.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>

using qtr::cli::dispatch;
using qtr::test::fixture;

namespace {

std::string fx(const std::string& name) { return fixture(name); }

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST(Cli, ReduceType) {
  const auto r = dispatch({"reduce-type", "2", "2", "7"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.output, "2 2 1\n");
}

TEST(Cli, Decompose) {
  const auto r = dispatch({"decompose", "4", "6", "10"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.output, "r 2\nd 60\ns01 1\ns02 1\ns12 1\nt 2 3 5\nw 15 10 6\nreduced no\n");
  EXPECT_EQ(dispatch({"decompose", "4", "0", "10"}).exit_code, 2);
  EXPECT_EQ(dispatch({"decompose", "4", "6"}).exit_code, 2);
}

TEST(Cli, Verify) {
  EXPECT_EQ(dispatch({"verify", fx("line222.problem"), fx("ones.relation")}).exit_code, 0);
  EXPECT_EQ(dispatch({"verify", fx("sextic236.problem"), fx("ones.relation")}).exit_code, 1);
  EXPECT_EQ(dispatch({"verify", fx("missing.problem"), fx("ones.relation")}).exit_code, 2);
}

TEST(Cli, Equiv) {
  EXPECT_EQ(dispatch({"equiv", fx("line221.problem"), fx("ones.relation"), fx("fiber_pair.relation")}).exit_code, 1);
  const auto r =
      dispatch({"equiv", fx("monomial221.problem"), fx("monomial221.relation"), fx("monomial221_scaled.relation")});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.output, "{\n  \"u\": \"1\",\n  \"v\": \"x2\"\n}\n");
}

TEST(Cli, TransportRoundTrip) {
  const auto down = dispatch({"transport", "--to-reduced", fx("monomial225.problem"), fx("monomial225.relation")});
  ASSERT_EQ(down.exit_code, 0) << down.diagnostics;
  const std::string reduced = write_temp("reduced.relation", down.output);
  const auto up = dispatch({"transport", "--from-target", "2,2,5", fx("monomial221.problem"), reduced});
  ASSERT_EQ(up.exit_code, 0) << up.diagnostics;
  const std::string lifted = write_temp("lifted.relation", up.output);
  EXPECT_EQ(dispatch({"equiv", fx("monomial225.problem"), fx("monomial225.relation"), lifted}).exit_code, 0);
  EXPECT_EQ(dispatch({"transport", fx("monomial225.problem"), fx("monomial225.relation")}).exit_code, 2);
}

TEST(Cli, CurvePointRoundTrip) {
  const auto pt = dispatch({"curve-point", fx("sextic236.problem"), fx("sextic236_scaled.relation")});
  ASSERT_EQ(pt.exit_code, 0) << pt.diagnostics;
  const std::string point = write_temp("sextic.point", pt.output);
  const auto back = dispatch({"point-to-relation", fx("sextic236.problem"), point});
  ASSERT_EQ(back.exit_code, 0) << back.diagnostics;
  EXPECT_EQ(back.output, "{\n  \"type\": [\n    2,\n    3,\n    6\n  ],\n  \"h\": [\n    \"(z)*x0^3\",\n    \"-x1^2\",\n    \"1\"\n  ]\n}\n");
  EXPECT_EQ(dispatch({"point-to-relation", fx("line221.problem"), point}).exit_code, 3);
}

TEST(Cli, PointToRelationNotApplicable) {
  const auto pt = dispatch({"curve-point", fx("line221.problem"), fx("ones.relation")});
  ASSERT_EQ(pt.exit_code, 0);
  EXPECT_EQ(dispatch({"point-to-relation", fx("line221.problem"), write_temp("line.point", pt.output)}).exit_code, 3);
}

TEST(Cli, Fiber) {
  const auto r = dispatch({"fiber", fx("line221.problem"), fx("ones.relation")});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.output.find("\"-1\""), std::string::npos);
  EXPECT_EQ(dispatch({"fiber", fx("line441.problem"), fx("ones.relation")}).exit_code, 3);
}

TEST(Cli, Family) {
  EXPECT_EQ(dispatch({"family", "exists", fx("sextic236.problem")}).exit_code, 1);
  EXPECT_EQ(dispatch({"family", "exists", fx("quadric122.problem")}).exit_code, 0);
  EXPECT_EQ(dispatch({"family", "exists", fx("line222.problem")}).exit_code, 3);
  EXPECT_EQ(dispatch({"family", "exists", fx("line222.problem"), "--witness", fx("ones.relation")}).exit_code, 0);
  EXPECT_EQ(dispatch({"family", "sample", fx("sextic236.problem")}).exit_code, 1);
  const auto s = dispatch({"family", "sample", fx("line222.problem"), "--witness", fx("ones.relation"), "--count", "2"});
  EXPECT_EQ(s.exit_code, 0);
  EXPECT_NE(s.output.find("Conic222"), std::string::npos);
  EXPECT_EQ(dispatch({"family", "maybe", fx("line222.problem")}).exit_code, 2);
}

TEST(Cli, Search) {
  const auto r = dispatch({"search", fx("line221.problem"), "--deg", "0,0,0", "--coeffs", "-1,0,1"});
  EXPECT_EQ(r.exit_code, 0);
  const auto again = dispatch({"search", fx("line221.problem"), "--deg", "0,0,0", "--coeffs", "-1,0,1"});
  EXPECT_EQ(r.output, again.output);
  EXPECT_EQ(dispatch({"search", fx("line221.problem"), "--deg", "0,1,0"}).exit_code, 1);
  EXPECT_EQ(dispatch({"search", fx("line221.problem"), "--deg", "0,0"}).exit_code, 2);
}

TEST(Cli, SearchBudgetFromEnvironment) {
  ::setenv("QT_BUDGET", "10", 1);
  const auto r = dispatch({"search", fx("line221.problem"), "--deg", "1,1,2"});
  ::unsetenv("QT_BUDGET");
  EXPECT_EQ(r.exit_code, 4);
}

TEST(Cli, Complete) {
  const auto r = dispatch({"complete", fx("line122.problem"), "1", "1"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(dispatch({"complete", fx("line122.problem"), "1", "x0"}).exit_code, 1);
  EXPECT_EQ(dispatch({"complete", fx("sextic236.problem"), "1", "1"}).exit_code, 3);
  EXPECT_EQ(dispatch({"complete", fx("line122.problem"), "1", "x0 +"}).exit_code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(dispatch({}).exit_code, 2);
  EXPECT_EQ(dispatch({"frobnicate"}).exit_code, 2);
  EXPECT_EQ(dispatch({"--help"}).exit_code, 0);
}

TEST(Cli, WarningsGoToDiagnostics) {
  const std::string problem = write_temp("z.problem", R"({"type": [2, 2, 1], "F": ["z*x0", "x1", "-x0 - x1"]})");
  const auto r = dispatch({"verify", problem, fx("ones.relation")});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.diagnostics.find("warning"), std::string::npos);
}

TEST(Documents, ProblemRoundTrip) {
  for (const char* name : {"line221", "line222", "sextic236", "sextic2312", "conic228", "quadric122", "cubic133",
                           "monomial221", "monomial225", "line441", "line122"}) {
    const auto P = qtr::test::load_problem(name);
    const auto again = qtr::parse_problem_document(qtr::problem_document(P));
    EXPECT_EQ(again.F, P.F) << name;
    EXPECT_EQ(again.type, P.type) << name;
    EXPECT_EQ(again.order, P.order) << name;
  }
}

TEST(Documents, RelationRoundTrip) {
  for (const auto& [name, order] : std::vector<std::pair<std::string, int>>{{"ones", 1},
                                                                          {"fiber_pair", 1},
                                                                          {"sextic236", 4},
                                                                          {"sextic236_scaled", 4},
                                                                          {"sextic2312", 4},
                                                                          {"conic228", 1},
                                                                          {"monomial221", 1},
                                                                          {"monomial221_scaled", 1},
                                                                          {"monomial225", 1}}) {
    const auto R = qtr::test::load_relation(name, order);
    EXPECT_EQ(qtr::parse_relation_document(qtr::relation_document(R), order), R) << name;
    for (const auto& h : R.h) EXPECT_EQ(qtr::parse_form(h.format(), order), h) << name;
  }
}

TEST(Documents, Malformed) {
  EXPECT_THROW(qtr::parse_problem_document("{"), qtr::Error);
  EXPECT_THROW(qtr::parse_problem_document(R"({"type": [2, 2], "F": ["1", "1", "1"]})"), qtr::Error);
  EXPECT_THROW(qtr::parse_problem_document(R"({"type": [2, 2, 1], "F": ["1", "1"]})"), qtr::Error);
  EXPECT_THROW(qtr::parse_relation_document(R"({"h": ["1", "1", 3]})", 1), qtr::Error);
}
