#pragma once

#include "qtr/correspond.hpp"
#include "qtr/families.hpp"
#include "qtr/relations.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qtr {

// Plain-text JSON documents exchanged by the command-line tool.
//
//   problem:  {"cyclotomic_order": 4, "type": [2, 3, 6], "F": ["1", "1", "x0^6 + x1^6"]}
//   relation: {"h": ["(z)*x0^3", "-x1^2", "1"]}          ("type" optional)
//   point:    {"z1": "num|den", "z2": "num|den"}
//
// Parse failures throw Error(SyntaxError / InvalidInput).

ProblemInstance parse_problem_document(const std::string& text, std::vector<std::string>* warnings = nullptr);
Relation parse_relation_document(const std::string& text, int order, std::vector<std::string>* warnings = nullptr);
CurvePoint parse_point_document(const std::string& text, int order, std::vector<std::string>* warnings = nullptr);

std::string problem_document(const ProblemInstance& problem);
std::string relation_document(const Relation& relation, const std::optional<TypeTriple>& type = std::nullopt);
/// Includes an "affine" block with both coordinates at x0 = 1 for reading.
std::string point_document(const CurvePoint& point);
std::string witness_document(const EquivalenceWitness& witness);
std::string verdict_document(const FamilyVerdict& verdict);
std::string sample_document(const FamilySample& sample);
std::string relation_list_document(const std::string& key, const std::vector<Relation>& relations,
                                   const std::string& note = {});

/// Text of f(1, x1, x2); no longer homogeneous.
std::string format_affine(const Form& f);

std::string read_file(const std::string& path);

}  // namespace qtr
