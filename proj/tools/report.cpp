#include "report.hpp"

#include <filesystem>
#include <sstream>

#include "stripcount/errors.hpp"
#include "stripcount/oracle.hpp"
#include "stripcount/piece_file.hpp"

namespace stripcount::cli {

using nlohmann::json;

namespace {

json polynomial_to_json(const DensePolynomial& p) {
  return json(std::vector<Int>(p.coefficients().begin(), p.coefficients().end()));
}

DensePolynomial polynomial_from_json(const json& j) { return DensePolynomial(j.get<std::vector<Int>>()); }

std::string occupancy_string(const std::vector<Int>& occ) {
  std::ostringstream out;
  for (std::size_t i = 0; i < occ.size(); ++i) out << (i ? "," : "") << occ[i];
  return out.str();
}

ChromaticEngine make_engine(const Request& req) {
  ChromaticOptions options;
  options.parallel = req.parallel;
  return ChromaticEngine(options);
}

// Labelled formula, with the zero expression for boards that admit nothing.
CountFormula formula_for(const Request& req) {
  try {
    ChromaticEngine engine = make_engine(req);
    return count_formula(req.piece.moves, req.board, engine);
  } catch (const IdenticallyZeroCount&) {
    return CountFormula{PlusExpression{}, req.board.labellings(), PlusExpression{}};
  }
}

OutputReport base_report(const Request& req) {
  OutputReport r;
  r.piece = req.piece.name;
  r.rows = req.board.rows;
  r.occupancy = req.board.occupancy;
  return r;
}

bool second_term_applies(const Request& req) {
  if (req.board.at_most_one_per_row()) return true;
  return !req.piece.moves.horizontal_unbounded() && req.piece.moves.contains_origin();
}

RationalSeries unlabelled_gf(const CountFormula& f, Int q) {
  RationalSeries gf = expression_gf(f.symmetrized, static_cast<int>(q));
  try {
    gf.numerator = gf.numerator.divide_exact(f.divisor);
  } catch (const std::domain_error&) {
    throw Error("generating function numerator is not divisible by " + std::to_string(f.divisor));
  }
  return gf;
}

}  // namespace

json expression_to_json(const PlusExpression& expr) {
  json terms = json::array();
  for (const auto& t : expr.terms()) terms.push_back(json{{"coeff", t.coeff}, {"shifts", t.shifts}});
  return json{{"terms", terms}};
}

PlusExpression expression_from_json(const json& j) {
  std::vector<PlusTerm> terms;
  for (const auto& t : j.at("terms")) {
    terms.push_back(PlusTerm{t.at("coeff").get<Int>(), t.at("shifts").get<std::vector<Int>>()});
  }
  return PlusExpression(std::move(terms));
}

json to_json(const OutputReport& r) {
  json j;
  j["piece"] = r.piece;
  j["board"] = json{{"rows", r.rows}, {"occupancy", r.occupancy}};
  if (r.formula) j["formula"] = expression_to_json(*r.formula);
  if (r.symmetrized) j["symmetrized_formula"] = expression_to_json(*r.symmetrized);
  if (r.divisor) j["divisor"] = *r.divisor;
  if (r.eventual) j["eventual_polynomial"] = polynomial_to_json(*r.eventual);
  if (r.threshold) j["threshold"] = *r.threshold;
  if (r.gf) {
    j["generating_function"] =
        json{{"numerator", polynomial_to_json(r.gf->numerator)}, {"denominator_exponent", r.gf->denominator_exponent}};
  }
  if (r.bounds) {
    json b{{"sufficient", r.bounds->sufficient},
           {"max_path_gain", r.bounds->max_path_gain},
           {"threshold", r.bounds->threshold}};
    if (r.bounds->slope) b["slope"] = *r.bounds->slope;
    j["bounds"] = b;
  }
  if (r.second_coefficient) j["second_coefficient"] = *r.second_coefficient;
  if (r.probability) {
    j["probability_constant"] = json{{"one_per_row", r.probability->one_per_row}, {"K", r.probability->constant}};
  }
  if (r.cols) j["cols"] = *r.cols;
  if (r.count) j["count"] = *r.count;
  if (r.verification) {
    json rows = json::array();
    for (const auto& m : r.verification->mismatches) {
      rows.push_back(json{{"n", m.n}, {"symbolic", m.symbolic}, {"oracle", m.oracle}, {"series", m.series}});
    }
    j["verification"] = json{{"max_cols", r.verification->max_cols}, {"mismatches", rows}};
  }
  return j;
}

OutputReport report_from_json(const json& j) {
  OutputReport r;
  r.piece = j.at("piece").get<std::string>();
  r.rows = j.at("board").at("rows").get<Int>();
  r.occupancy = j.at("board").at("occupancy").get<std::vector<Int>>();
  if (j.contains("formula")) r.formula = expression_from_json(j["formula"]);
  if (j.contains("symmetrized_formula")) r.symmetrized = expression_from_json(j["symmetrized_formula"]);
  if (j.contains("divisor")) r.divisor = j["divisor"].get<Int>();
  if (j.contains("eventual_polynomial")) r.eventual = polynomial_from_json(j["eventual_polynomial"]);
  if (j.contains("threshold")) r.threshold = j["threshold"].get<Int>();
  if (j.contains("generating_function")) {
    const auto& g = j["generating_function"];
    r.gf = RationalSeries{polynomial_from_json(g.at("numerator")), g.at("denominator_exponent").get<int>()};
  }
  if (j.contains("bounds")) {
    const auto& b = j["bounds"];
    Bounds bounds{b.at("sufficient").get<Int>(), b.at("max_path_gain").get<Int>(), b.at("threshold").get<Int>(),
                  std::nullopt};
    if (b.contains("slope")) bounds.slope = b["slope"].get<Int>();
    r.bounds = bounds;
  }
  if (j.contains("second_coefficient")) r.second_coefficient = j["second_coefficient"].get<Int>();
  if (j.contains("probability_constant")) {
    const auto& p = j["probability_constant"];
    r.probability = AsymptoticProbability{p.at("one_per_row").get<bool>(), p.at("K").get<Int>()};
  }
  if (j.contains("cols")) r.cols = j["cols"].get<Int>();
  if (j.contains("count")) r.count = j["count"].get<Int>();
  if (j.contains("verification")) {
    Verification v;
    v.max_cols = j["verification"].at("max_cols").get<Int>();
    for (const auto& m : j["verification"].at("mismatches")) {
      v.mismatches.push_back(VerifyRow{m.at("n").get<Int>(), m.at("symbolic").get<Int>(), m.at("oracle").get<Int>(),
                                       m.at("series").get<Int>()});
    }
    r.verification = v;
  }
  return r;
}

std::string to_text(const OutputReport& r) {
  std::ostringstream out;
  out << "piece: " << r.piece << "\n";
  out << "board: " << r.rows << " rows, occupancy " << occupancy_string(r.occupancy) << "\n";
  if (r.formula) out << "labelled count: " << r.formula->to_string() << "\n";
  if (r.symmetrized) out << "symmetrized count: " << r.symmetrized->to_string() << "\n";
  if (r.divisor) out << "divisor: " << *r.divisor << "\n";
  if (r.eventual) {
    out << "eventual polynomial" << (r.divisor.value_or(1) == 1 ? "" : " (numerator)") << ": " << r.eventual->to_string()
        << "\n";
  }
  if (r.threshold && !r.bounds) out << "threshold: " << *r.threshold << "\n";
  if (r.gf) out << "generating function: " << r.gf->to_string() << "\n";
  if (r.bounds) {
    out << "sufficient width bound: " << r.bounds->sufficient << "\n";
    out << "max path gain: " << r.bounds->max_path_gain << "\n";
    out << "threshold: " << r.bounds->threshold << "\n";
    if (r.bounds->slope) out << "slope threshold: " << *r.bounds->slope << "\n";
  }
  if (r.second_coefficient) out << "second coefficient c1: " << *r.second_coefficient << "\n";
  if (r.probability) {
    out << "nonattack probability ~ 1 - " << r.probability->constant << "/n ("
        << (r.probability->one_per_row ? "one piece per row" : "distinct positions per row") << ")\n";
  }
  if (r.count) out << "count at " << r.cols.value_or(0) << " columns: " << *r.count << "\n";
  if (r.verification) {
    if (r.verification->mismatches.empty()) {
      out << "verified n = 0.." << r.verification->max_cols << ": symbolic, oracle and series agree\n";
    } else {
      out << "MISMATCH\n" << "n\tsymbolic\toracle\tseries\n";
      for (const auto& m : r.verification->mismatches) {
        out << m.n << "\t" << m.symbolic << "\t" << m.oracle << "\t" << m.series << "\n";
      }
    }
  }
  return out.str();
}

Piece resolve_piece(const std::string& name_or_path) {
  for (const auto& name : builtin_names()) {
    if (name_or_path == name) return builtin(name);
  }
  if (std::filesystem::is_regular_file(name_or_path)) return load_piece_file(name_or_path);
  throw Error("unknown piece '" + name_or_path + "' (not a built-in name or a readable file)");
}

OutputReport formula_report(const Request& req) {
  const CountFormula f = formula_for(req);
  OutputReport r = base_report(req);
  r.formula = f.labelled;
  if (!(f.symmetrized == f.labelled)) r.symmetrized = f.symmetrized;
  r.divisor = f.divisor;
  r.eventual = eventual_polynomial(f.symmetrized);
  r.threshold = polynomial_threshold(f.symmetrized);
  if (!f.labelled.is_zero() && second_term_applies(req)) {
    r.second_coefficient = second_coefficient(req.piece.moves, req.board);
    r.probability = asymptotic_probability(req.piece.moves, req.board);
  }
  return r;
}

OutputReport count_report(const Request& req, Int cols) {
  if (cols < 0) throw std::invalid_argument("--cols must be nonnegative");
  const CountFormula f = formula_for(req);
  OutputReport r = base_report(req);
  r.cols = cols;
  r.count = f.count(cols);
  return r;
}

OutputReport gf_report(const Request& req) {
  const CountFormula f = formula_for(req);
  OutputReport r = base_report(req);
  r.gf = unlabelled_gf(f, req.board.pieces());
  return r;
}

OutputReport bound_report(const Request& req) {
  const GainGraph graph = build_gain_graph(req.piece.moves, req.board);
  OutputReport r = base_report(req);
  Bounds b;
  b.sufficient = sufficient_width_bound(req.piece.moves, req.board);
  b.max_path_gain = max_path_gain(graph);
  b.threshold = polynomial_threshold(formula_for(req).symmetrized);
  if (req.piece.slope && req.board.at_most_one_per_row()) b.slope = slope_threshold(*req.piece.slope, req.board.rows);
  r.bounds = b;
  r.threshold = b.threshold;
  return r;
}

OutputReport verify_report(const Request& req, Int max_cols) {
  if (max_cols < 0) throw std::invalid_argument("--max-cols must be nonnegative");
  OracleOptions oracle;
  oracle.enforce_cap = !req.force;
  check_oracle_cap(req.board, max_cols, oracle);
  const CountFormula f = formula_for(req);
  const auto coeffs = series(unlabelled_gf(f, req.board.pieces()), static_cast<std::size_t>(max_cols) + 1);

  Verification v;
  v.max_cols = max_cols;
  for (Int n = 0; n <= max_cols; ++n) {
    VerifyRow row{n, f.count(n), brute_count(req.piece.moves, req.board, n, oracle),
                  coeffs[static_cast<std::size_t>(n)]};
    if (row.symbolic != row.oracle || row.symbolic != row.series) v.mismatches.push_back(row);
  }
  OutputReport r = base_report(req);
  r.verification = std::move(v);
  return r;
}

int exit_status(const OutputReport& report) {
  return report.verification && !report.verification->mismatches.empty() ? 2 : 0;
}

}  // namespace stripcount::cli
