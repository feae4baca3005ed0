#pragma once

#include "qtr/form.hpp"
#include "qtr/typearith.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace qtr {

/// The forms F0, F1, F2 together with the type and coefficient field.
struct ProblemInstance {
  std::array<Form, 3> F;
  TypeTriple type;
  int order = 1;

  /// Degrees of F0, F1, F2; throws ZeroComponent if one of them is zero.
  std::array<int, 3> degrees() const;
  /// Same forms, different type.
  ProblemInstance with_type(const TypeTriple& t) const;
};

/// A triple (h0, h1, h2) intended to satisfy F0 h0^p0 + F1 h1^p1 + F2 h2^p2 = 0.
struct Relation {
  std::array<Form, 3> h;

  friend bool operator==(const Relation&, const Relation&) = default;
};

/// Certifies u^{w_i} * second_i = v^{w_i} * first_i for i = 0, 1, 2.
struct EquivalenceWitness {
  Form u;
  Form v;
};

/// Empty when the instance is well formed.
std::vector<std::string> validate_problem(const ProblemInstance& problem);

/// Degree balance and exact vanishing of the defining sum. Throws
/// ZeroComponent when some h_i is zero.
bool verify_relation(const ProblemInstance& problem, const Relation& relation);

/// The defining sum F0 h0^p0 + F1 h1^p1 + F2 h2^p2 (DegreeMismatch if unbalanced).
Form relation_sum(const ProblemInstance& problem, const Relation& relation);

/// Returns (v/u)^{w_i} * h_i componentwise, so that `equivalent(type, R, result)`
/// certifies with exactly (u, v). Throws NotDivisible if a component stops
/// being a polynomial.
Relation scale_relation(const Relation& relation, const Form& u, const Form& v, const TypeTriple& type);

/// Decides equivalence through the ratio rho = prod (second_i/first_i)^{a_i}
/// with sum a_i w_i = 1; returns (u, v) = (den rho, num rho) when
/// rho^{w_i} = second_i/first_i for every i.
std::optional<EquivalenceWitness> equivalent(const TypeTriple& type, const Relation& first,
                                             const Relation& second);

/// Re-checks u^{w_i} * second_i == v^{w_i} * first_i.
bool check_witness(const TypeTriple& type, const Relation& first, const Relation& second,
                   const EquivalenceWitness& witness);

/// Integers a with a0*w0 + a1*w1 + a2*w2 = gcd(w0, w1, w2).
std::array<std::int64_t, 3> bezout_coefficients(const std::array<std::int64_t, 3>& w);

/// Entry k of the result is entry perm[k] of the input.
Relation permute(const Relation& relation, const std::array<int, 3>& perm);
ProblemInstance permute(const ProblemInstance& problem, const std::array<int, 3>& perm);
/// Inverse of `permute` with the same perm.
Relation unpermute(const Relation& relation, const std::array<int, 3>& perm);

}  // namespace qtr
