#include "qtr/documents.hpp"

#include "qtr/error.hpp"
#include "qtr/parse.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace qtr {

namespace {

using Json = nlohmann::ordered_json;

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::SyntaxError, std::string("malformed document: ") + e.what());
  }
}

const Json& field(const Json& doc, const char* name) {
  if (!doc.is_object() || !doc.contains(name)) {
    throw Error(ErrorKind::InvalidInput, std::string("document lacks field \"") + name + "\"");
  }
  return doc.at(name);
}

std::array<Form, 3> form_triple(const Json& value, const char* name, int order, std::vector<std::string>* warnings) {
  if (!value.is_array() || value.size() != 3) {
    throw Error(ErrorKind::InvalidInput, std::string("field \"") + name + "\" must hold three polynomial strings");
  }
  std::array<Form, 3> out;
  for (std::size_t i = 0; i < 3; ++i) {
    if (!value[i].is_string()) throw Error(ErrorKind::InvalidInput, std::string(name) + " entries must be strings");
    out[i] = parse_form(value[i].get<std::string>(), order, warnings);
  }
  return out;
}

FormRatio parse_ratio(const Json& value, const char* name, int order, std::vector<std::string>* warnings) {
  if (!value.is_string()) throw Error(ErrorKind::InvalidInput, std::string(name) + " must be a \"num|den\" string");
  const auto text = value.get<std::string>();
  const auto bar = text.find('|');
  if (bar == std::string::npos) return FormRatio(parse_form(text, order, warnings));
  return FormRatio(parse_form(text.substr(0, bar), order, warnings), parse_form(text.substr(bar + 1), order, warnings));
}

Json relation_json(const Relation& relation) {
  Json h = Json::array();
  for (const auto& f : relation.h) h.push_back(f.format());
  return Json{{"h", h}};
}

Json type_json(const TypeTriple& t) { return Json::array({t.p[0], t.p[1], t.p[2]}); }

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

ProblemInstance parse_problem_document(const std::string& text, std::vector<std::string>* warnings) {
  const Json doc = parse_json(text);
  ProblemInstance problem;
  problem.order = 1;
  if (doc.is_object() && doc.contains("cyclotomic_order")) {
    const Json& n = doc.at("cyclotomic_order");
    if (!n.is_number_integer() || n.get<long long>() < 1) {
      throw Error(ErrorKind::InvalidInput, "cyclotomic_order must be a positive integer");
    }
    problem.order = n.get<int>();
  }
  const Json& type = field(doc, "type");
  if (!type.is_array() || type.size() != 3) throw Error(ErrorKind::InvalidInput, "type must hold three integers");
  std::array<std::int64_t, 3> p{};
  for (std::size_t i = 0; i < 3; ++i) {
    if (!type[i].is_number_integer()) throw Error(ErrorKind::InvalidInput, "type entries must be integers");
    p[i] = type[i].get<std::int64_t>();
  }
  problem.type = TypeTriple(p[0], p[1], p[2]);
  problem.F = form_triple(field(doc, "F"), "F", problem.order, warnings);
  return problem;
}

Relation parse_relation_document(const std::string& text, int order, std::vector<std::string>* warnings) {
  const Json doc = parse_json(text);
  return Relation{form_triple(field(doc, "h"), "h", order, warnings)};
}

CurvePoint parse_point_document(const std::string& text, int order, std::vector<std::string>* warnings) {
  const Json doc = parse_json(text);
  return CurvePoint{parse_ratio(field(doc, "z1"), "z1", order, warnings),
                    parse_ratio(field(doc, "z2"), "z2", order, warnings)};
}

std::string problem_document(const ProblemInstance& problem) {
  Json F = Json::array();
  for (const auto& f : problem.F) F.push_back(f.format());
  return dump(Json{{"cyclotomic_order", problem.order}, {"type", type_json(problem.type)}, {"F", F}});
}

std::string relation_document(const Relation& relation, const std::optional<TypeTriple>& type) {
  Json doc;
  if (type) doc["type"] = type_json(*type);
  doc["h"] = relation_json(relation)["h"];
  return dump(doc);
}

std::string point_document(const CurvePoint& point) {
  auto affine = [](const FormRatio& r) {
    return format_affine(r.numerator()) + "|" + format_affine(r.denominator());
  };
  return dump(Json{{"z1", point.z1.format()},
                   {"z2", point.z2.format()},
                   {"affine", {{"z1", affine(point.z1)}, {"z2", affine(point.z2)}}}});
}

std::string witness_document(const EquivalenceWitness& witness) {
  return dump(Json{{"u", witness.u.format()}, {"v", witness.v.format()}});
}

std::string verdict_document(const FamilyVerdict& verdict) {
  Json doc{{"status", to_string(verdict.status)},
           {"case", to_string(verdict.family_case)},
           {"reduced_type", type_json(verdict.reduced_type)},
           {"permutation", Json::array({verdict.permutation[0], verdict.permutation[1], verdict.permutation[2]})},
           {"detail", verdict.detail}};
  if (verdict.witness) doc["witness"] = relation_json(*verdict.witness);
  return dump(doc);
}

std::string sample_document(const FamilySample& sample) {
  Json members = Json::array();
  for (const auto& m : sample.members) {
    Json params = Json::array();
    for (const auto& f : m.parameters) params.push_back(f.format());
    Json entry = relation_json(m.relation);
    entry["parameters"] = params;
    members.push_back(entry);
  }
  Json pairs = Json::array();
  for (const auto& [i, j] : sample.equivalent_pairs) pairs.push_back(Json::array({i, j}));
  return dump(Json{{"type", type_json(sample.type)},
                   {"case", to_string(sample.verdict.family_case)},
                   {"members", members},
                   {"equivalent_pairs", pairs}});
}

std::string relation_list_document(const std::string& key, const std::vector<Relation>& relations,
                                   const std::string& note) {
  Json list = Json::array();
  for (const auto& r : relations) list.push_back(relation_json(r));
  Json doc{{key, list}};
  if (!note.empty()) doc["note"] = note;
  return dump(doc);
}

std::string format_affine(const Form& f) {
  if (f.is_zero()) return "0";
  // Collect terms by (e1, e2), graded-lex descending in x1, x2.
  std::map<std::pair<int, int>, Scalar, std::greater<>> terms;
  for (const auto& [m, c] : f.dehomogenize()) {
    const std::pair<int, int> key{m[1] + m[2], m[1]};
    auto [it, inserted] = terms.try_emplace(key, c);
    if (!inserted) it->second += c;
  }
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, c] : terms) {
    if (c.is_zero()) continue;
    const Monomial m{0, key.second, key.first - key.second};
    const Form term(c, m, f.order());
    std::string text = term.format();
    if (!first) {
      if (text.front() == '-') {
        out << " - " << text.substr(1);
      } else {
        out << " + " << text;
      }
    } else {
      out << text;
    }
    first = false;
  }
  return first ? "0" : out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace qtr
