#include "qtr/cli.hpp"

#include "qtr/correspond.hpp"
#include "qtr/documents.hpp"
#include "qtr/error.hpp"
#include "qtr/families.hpp"
#include "qtr/parse.hpp"
#include "qtr/search.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace qtr::cli {

namespace {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::FieldTooSmall:
    case ErrorKind::NotApplicable:
    case ErrorKind::InsufficientParameters:
      return kLimitation;
    case ErrorKind::BudgetExceeded:
      return kBudgetExceeded;
    case ErrorKind::NoFamily:
      return kNegative;
    default:
      return kInputError;
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  std::istringstream in(text);
  while (std::getline(in, current, sep)) parts.push_back(current);
  return parts;
}

std::array<std::int64_t, 3> parse_triple(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 3) throw Error(ErrorKind::InvalidInput, "expected three comma-separated integers: " + text);
  std::array<std::int64_t, 3> p{};
  for (std::size_t i = 0; i < 3; ++i) {
    try {
      std::size_t used = 0;
      p[i] = std::stoll(parts[i], &used);
      if (used != parts[i].size()) throw std::invalid_argument(parts[i]);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidInput, "not an integer: " + parts[i]);
    }
  }
  return p;
}

TypeTriple parse_type_list(const std::string& text) {
  const auto p = parse_triple(text);
  return TypeTriple(p[0], p[1], p[2]);
}

std::uint64_t search_cap() {
  const char* env = std::getenv("QT_BUDGET");
  if (env == nullptr || *env == '\0') return kDefaultSearchCap;
  try {
    std::size_t used = 0;
    const unsigned long long value = std::stoull(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return value;
  } catch (const std::exception&) {
    throw Error(ErrorKind::InvalidInput, std::string("QT_BUDGET is not a nonnegative integer: ") + env);
  }
}

// Collects parser warnings and loads documents.
struct Session {
  std::vector<std::string> warnings;

  ProblemInstance problem(const std::string& path) {
    ProblemInstance p = parse_problem_document(read_file(path), &warnings);
    const auto violations = validate_problem(p);
    if (!violations.empty()) {
      std::string joined;
      for (const auto& v : violations) joined += (joined.empty() ? "" : "; ") + v;
      throw Error(ErrorKind::InvalidProblem, joined);
    }
    return p;
  }
  Relation relation(const std::string& path, int order) {
    return parse_relation_document(read_file(path), order, &warnings);
  }
  CurvePoint point(const std::string& path, int order) { return parse_point_document(read_file(path), order, &warnings); }
};

struct Options {
  std::vector<std::int64_t> type_entries;
  std::string problem, relation, relation2, point;
  bool to_reduced = false;
  std::string from_target;
  std::string family_mode;
  std::string witness;
  int count = 3;
  int budget = 0;
  std::string degrees;
  std::string coeffs = "-2,-1,0,1,2";
  bool dedupe = false;
  std::string h1, h2;
};

CommandResult run(CLI::App& app, const Options& o, Session& s) {
  CommandResult result;
  std::ostringstream out, err;
  auto used = [&](const char* name) { return app.got_subcommand(name); };

  if (used("decompose")) {
    const TypeTriple t(o.type_entries[0], o.type_entries[1], o.type_entries[2]);
    const auto dec = decompose_type(t);
    out << "r " << dec.r << "\nd " << dec.d << "\ns01 " << dec.s01 << "\ns02 " << dec.s02 << "\ns12 " << dec.s12
        << "\nt " << dec.t[0] << ' ' << dec.t[1] << ' ' << dec.t[2] << "\nw " << dec.w[0] << ' ' << dec.w[1] << ' '
        << dec.w[2] << "\nreduced " << (is_reduced(t) ? "yes" : "no") << '\n';
  } else if (used("reduce-type")) {
    const TypeTriple t(o.type_entries[0], o.type_entries[1], o.type_entries[2]);
    out << reduce_type(t).format() << '\n';
  } else if (used("verify")) {
    const auto P = s.problem(o.problem);
    const auto R = s.relation(o.relation, P.order);
    if (verify_relation(P, R)) {
      err << "relation verifies at type " << P.type.format() << '\n';
    } else {
      err << "relation does not verify at type " << P.type.format() << '\n';
      result.exit_code = kNegative;
    }
  } else if (used("equiv")) {
    const auto P = s.problem(o.problem);
    const auto first = s.relation(o.relation, P.order);
    const auto second = s.relation(o.relation2, P.order);
    if (auto w = equivalent(P.type, first, second)) {
      out << witness_document(*w);
    } else {
      err << "relations are not equivalent\n";
      result.exit_code = kNegative;
    }
  } else if (used("transport")) {
    if (o.to_reduced == !o.from_target.empty()) {
      throw Error(ErrorKind::InvalidInput, "give exactly one of --to-reduced or --from-target TYPE");
    }
    const auto P = s.problem(o.problem);
    const auto R = s.relation(o.relation, P.order);
    if (o.to_reduced) {
      const auto moved = transport_to_reduced(P, R);
      out << relation_document(moved.relation, moved.type);
    } else {
      const TypeTriple target = parse_type_list(o.from_target);
      out << relation_document(transport_from_reduced(P.with_type(target), R), target);
    }
  } else if (used("curve-point")) {
    const auto P = s.problem(o.problem);
    curve_spec(P);
    out << point_document(curve_point(P, s.relation(o.relation, P.order)));
  } else if (used("fiber")) {
    const auto P = s.problem(o.problem);
    const auto R = s.relation(o.relation, P.order);
    out << relation_list_document("fiber", curve_fiber(P, curve_point(P, R), R));
  } else if (used("point-to-relation")) {
    const auto P = s.problem(o.problem);
    out << relation_document(point_to_relation(P, s.point(o.point, P.order)), P.type);
  } else if (used("family")) {
    const auto P = s.problem(o.problem);
    std::optional<Relation> witness;
    if (!o.witness.empty()) witness = s.relation(o.witness, P.order);
    if (o.family_mode == "exists") {
      const auto verdict = family_exists(P, witness, o.budget);
      out << verdict_document(verdict);
      if (verdict.status == FamilyStatus::No) result.exit_code = kNegative;
      if (verdict.status == FamilyStatus::Unknown) result.exit_code = kLimitation;
    } else {
      out << sample_document(family_sample(P, witness, o.count, o.budget));
    }
  } else if (used("search")) {
    const auto P = s.problem(o.problem);
    SearchSpec spec;
    const auto degs = parse_triple(o.degrees);
    for (std::size_t i = 0; i < 3; ++i) {
      if (degs[i] < 0 || degs[i] > 64) throw Error(ErrorKind::InvalidInput, "degree out of range: " + o.degrees);
      spec.degrees[i] = static_cast<int>(degs[i]);
    }
    spec.coefficients.clear();
    for (const auto& c : split(o.coeffs, ',')) spec.coefficients.push_back(parse_scalar(c, P.order, &s.warnings));
    spec.dedupe = o.dedupe;
    spec.cap = search_cap();
    const auto found = brute_force(P, spec);
    out << relation_list_document("relations", found.relations, found.note);
    if (found.relations.empty()) result.exit_code = kNegative;
  } else if (used("complete")) {
    const auto P = s.problem(o.problem);
    const Form first = parse_form(o.h1, P.order, &s.warnings);
    const Form second = parse_form(o.h2, P.order, &s.warnings);
    if (auto R = complete_relation(P, first, second)) {
      out << relation_document(*R, P.type);
    } else {
      err << "no completion: the division is not exact\n";
      result.exit_code = kNegative;
    }
  }
  for (const auto& w : s.warnings) result.diagnostics += "warning: " + w + "\n";
  result.output = out.str();
  result.diagnostics += err.str();
  return result;
}

void add_problem(CLI::App* sub, Options& o) {
  sub->add_option("problem", o.problem, "problem document (JSON)")->required();
}

}  // namespace

CommandResult dispatch(const std::vector<std::string>& args) {
  CLI::App app("Quasi-toric relations F0*h0^p0 + F1*h1^p1 + F2*h2^p2 = 0", "qtr");
  app.require_subcommand(1);
  Options o;

  auto* decompose = app.add_subcommand("decompose", "print r, d, s_ij, t_i, w_i of a type");
  decompose->add_option("type", o.type_entries, "P0 P1 P2")->required()->expected(3);
  auto* reduce = app.add_subcommand("reduce-type", "print the reduced type");
  reduce->add_option("type", o.type_entries, "P0 P1 P2")->required()->expected(3);

  auto* verify = app.add_subcommand("verify", "check a relation; exit 0 if it verifies, 1 if not");
  add_problem(verify, o);
  verify->add_option("relation", o.relation, "relation document")->required();

  auto* equiv = app.add_subcommand("equiv", "decide equivalence; prints the witness (u, v)");
  add_problem(equiv, o);
  equiv->add_option("first", o.relation, "relation document")->required();
  equiv->add_option("second", o.relation2, "relation document")->required();

  auto* transport = app.add_subcommand("transport", "move a relation to or from the reduced type");
  transport->add_flag("--to-reduced", o.to_reduced, "problem type to reduced type");
  transport->add_option("--from-target", o.from_target, "P0,P1,P2: reduced type to this type");
  add_problem(transport, o);
  transport->add_option("relation", o.relation, "relation document")->required();

  auto* point = app.add_subcommand("curve-point", "image of a relation on the associated curve");
  add_problem(point, o);
  point->add_option("relation", o.relation, "relation document")->required();

  auto* fiber = app.add_subcommand("fiber", "all inequivalent relations over the point of a relation");
  add_problem(fiber, o);
  fiber->add_option("relation", o.relation, "relation document")->required();

  auto* to_relation = app.add_subcommand("point-to-relation", "relation over a curve point (s01 = 1)");
  add_problem(to_relation, o);
  to_relation->add_option("point", o.point, "point document")->required();

  auto* family = app.add_subcommand("family", "decide or sample infinite families");
  family->add_option("mode", o.family_mode, "exists | sample")
      ->required()
      ->check(CLI::IsMember({"exists", "sample"}));
  add_problem(family, o);
  family->add_option("--witness", o.witness, "relation document used as base point");
  family->add_option("--count", o.count, "number of members to sample")->check(CLI::Range(1, 1000));
  family->add_option("--budget", o.budget, "search h-degrees below this for a witness")->check(CLI::Range(0, 16));

  auto* search = app.add_subcommand("search", "brute-force relations with small coefficients");
  add_problem(search, o);
  search->add_option("--deg", o.degrees, "d0,d1,d2 (exact degrees of h)")->required();
  search->add_option("--coeffs", o.coeffs, "comma-separated coefficient grid");
  search->add_flag("--dedupe", o.dedupe, "one representative per equivalence class");

  auto* complete = app.add_subcommand("complete", "solve for the unit-exponent component of a (1,p,p) type");
  add_problem(complete, o);
  complete->add_option("h1", o.h1, "form at the first exponent-p coordinate")->required();
  complete->add_option("h2", o.h2, "form at the second exponent-p coordinate")->required();

  CommandResult result;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    result.output = app.help();
    return result;
  } catch (const CLI::CallForAllHelp&) {
    result.output = app.help("", CLI::AppFormatMode::All);
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = kInputError;
    result.diagnostics = std::string("error: ") + e.what() + "\n";
    return result;
  }

  Session session;
  try {
    return run(app, o, session);
  } catch (const Error& e) {
    result.exit_code = exit_code_for(e.kind());
    result.diagnostics = std::string("error: ") + e.what() + "\n";
  } catch (const std::exception& e) {
    result.exit_code = kInputError;
    result.diagnostics = std::string("error: ") + e.what() + "\n";
  }
  for (const auto& w : session.warnings) result.diagnostics = "warning: " + w + "\n" + result.diagnostics;
  return result;
}

}  // namespace qtr::cli
