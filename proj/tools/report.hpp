#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "stripcount/chromatic.hpp"
#include "stripcount/generating_function.hpp"
#include "stripcount/move_set.hpp"
#include "stripcount/pieces.hpp"
#include "stripcount/plus_expression.hpp"

namespace stripcount::cli {

struct Bounds {
  Int sufficient = 0;
  Int max_path_gain = 0;
  Int threshold = 0;
  std::optional<Int> slope;
};

struct VerifyRow {
  Int n = 0;
  Int symbolic = 0;
  Int oracle = 0;
  Int series = 0;
  bool operator==(const VerifyRow&) const = default;
};

struct Verification {
  Int max_cols = 0;
  std::vector<VerifyRow> mismatches;
};

/// Everything a command can print. Unset fields are omitted from the JSON
/// form, never written as null.
struct OutputReport {
  std::string piece;
  Int rows = 0;
  std::vector<Int> occupancy;

  std::optional<PlusExpression> formula;
  /// Present only when stacked pieces make it differ from `formula`.
  std::optional<PlusExpression> symmetrized;
  std::optional<Int> divisor;
  std::optional<DensePolynomial> eventual;
  std::optional<Int> threshold;
  std::optional<RationalSeries> gf;
  std::optional<Bounds> bounds;
  std::optional<Int> second_coefficient;
  std::optional<AsymptoticProbability> probability;
  std::optional<Int> cols;
  std::optional<Int> count;
  std::optional<Verification> verification;
};

nlohmann::json expression_to_json(const PlusExpression& expr);
PlusExpression expression_from_json(const nlohmann::json& j);

nlohmann::json to_json(const OutputReport& report);
OutputReport report_from_json(const nlohmann::json& j);
std::string to_text(const OutputReport& report);

struct Request {
  Piece piece;
  BoardSpec board;
  bool parallel = false;
  bool force = false;
};

/// Resolves a built-in name or a piece-definition file path.
Piece resolve_piece(const std::string& name_or_path);

OutputReport formula_report(const Request& req);
OutputReport count_report(const Request& req, Int cols);
/// Unlabelled generating function; throws stripcount::Error if the labelled
/// numerator is not divisible by the labelling count.
OutputReport gf_report(const Request& req);
OutputReport bound_report(const Request& req);
/// Symbolic count, brute force and series coefficient at n = 0 .. max_cols.
OutputReport verify_report(const Request& req, Int max_cols);

/// Process exit status for a report: 2 when a verification found mismatches.
int exit_status(const OutputReport& report);

}  // namespace stripcount::cli
