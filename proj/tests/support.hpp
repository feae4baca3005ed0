#pragma once

#include "qtr/documents.hpp"
#include "qtr/parse.hpp"
#include "qtr/error.hpp"
#include "qtr/relations.hpp"

#include <ostream>
#include <random>
#include <string>

namespace qtr {

inline void PrintTo(const Form& f, std::ostream* os) { *os << f.format(); }

inline void PrintTo(const Relation& r, std::ostream* os) {
  *os << "(" << r.h[0].format() << ", " << r.h[1].format() << ", " << r.h[2].format() << ")";
}

}  // namespace qtr

namespace qtr::test {

inline Form poly(const std::string& text, int order = 1) { return parse_form(text, order); }

inline Relation rel(const std::string& a, const std::string& b, const std::string& c, int order = 1) {
  return Relation{{poly(a, order), poly(b, order), poly(c, order)}};
}

inline ProblemInstance problem(const std::string& f0, const std::string& f1, const std::string& f2,
                               TypeTriple type, int order = 1) {
  return ProblemInstance{{poly(f0, order), poly(f1, order), poly(f2, order)}, type, order};
}

inline std::string fixture(const std::string& name) { return std::string(QTR_FIXTURE_DIR) + "/" + name; }

inline ProblemInstance load_problem(const std::string& name) {
  return parse_problem_document(read_file(fixture(name + ".problem")));
}

inline Relation load_relation(const std::string& name, int order) {
  return parse_relation_document(read_file(fixture(name + ".relation")), order);
}

// Random form of the given degree with integer coefficients in [-bound, bound].
inline Form random_form(std::mt19937& rng, int degree, int bound = 3, int order = 1) {
  std::uniform_int_distribution<long> coef(-bound, bound);
  std::bernoulli_distribution keep(0.6);
  std::vector<std::pair<Monomial, Scalar>> terms;
  for (const auto& m : monomials_of_degree(degree)) {
    if (keep(rng)) terms.push_back({m, Scalar(coef(rng))});
  }
  Form f = Form::from_terms(terms, order);
  if (f.is_zero()) f = Form(Scalar(1), monomials_of_degree(degree).front(), order);
  return f;
}

}  // namespace qtr::test
