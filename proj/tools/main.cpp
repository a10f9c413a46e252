// stripcount: nonattacking piece configurations on an m x n strip.
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "report.hpp"
#include "stripcount/errors.hpp"

namespace {

using stripcount::Int;
using namespace stripcount::cli;

constexpr Int kRowGuard = 8;

enum class Format { text, json };

struct Options {
  std::string piece;
  Int rows = 0;
  std::string occupancy;
  Int cols = 0;
  Int max_cols = 10;
  Format format = Format::text;
  bool parallel = false;
  bool force = false;
};

std::vector<Int> parse_occupancy(const std::string& text) {
  std::vector<Int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    Int value = 0;
    try {
      value = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw CLI::ValidationError("--occupancy", "bad entry '" + item + "'");
    out.push_back(value);
  }
  return out;
}

Request make_request(const Options& opt) {
  if (opt.rows > kRowGuard && !opt.force) {
    throw stripcount::Error("refusing more than " + std::to_string(kRowGuard) + " rows without --force");
  }
  std::vector<Int> occupancy = opt.occupancy.empty() ? std::vector<Int>(static_cast<std::size_t>(std::max<Int>(opt.rows, 0)), 1)
                                                     : parse_occupancy(opt.occupancy);
  return Request{resolve_piece(opt.piece), stripcount::BoardSpec(opt.rows, std::move(occupancy)), opt.parallel,
                 opt.force};
}

void emit(const OutputReport& report, Format format) {
  if (format == Format::json) {
    std::cout << to_json(report).dump(2) << "\n";
  } else {
    std::cout << to_text(report);
  }
}

void add_board_options(CLI::App* cmd, Options& opt) {
  cmd->add_option("--piece", opt.piece, "built-in piece name or piece file")->required();
  cmd->add_option("--rows", opt.rows, "number of rows m")->required()->check(CLI::PositiveNumber);
  cmd->add_option("--occupancy", opt.occupancy, "pieces per row, comma separated (default 1 in each row)");
  cmd->add_flag("--parallel", opt.parallel, "run the recursion on several threads");
  cmd->add_flag("--force", opt.force, "lift the row guard and the brute-force size cap");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Count nonattacking configurations of a chess piece on an m x n strip"};
  app.require_subcommand(1);

  Options opt;
  const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}};
  app.add_option("--format", opt.format, "output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->default_str("text");

  auto* formula = app.add_subcommand("formula", "piecewise formula, eventual polynomial and threshold");
  auto* count = app.add_subcommand("count", "exact count at a given width");
  auto* gf = app.add_subcommand("gf", "generating function of the counts");
  auto* verify = app.add_subcommand("verify", "compare formula, brute force and series");
  auto* bound = app.add_subcommand("bound", "width bounds for the eventual polynomial");
  auto* list = app.add_subcommand("pieces-list", "list the built-in pieces");

  for (auto* cmd : {formula, count, gf, verify, bound}) add_board_options(cmd, opt);
  count->add_option("--cols", opt.cols, "board width n")->required()->check(CLI::NonNegativeNumber);
  verify->add_option("--max-cols", opt.max_cols, "largest width to check")->check(CLI::NonNegativeNumber);

  // --format is accepted after the subcommand as well.
  for (auto* cmd : {formula, count, gf, verify, bound, list}) {
    cmd->add_option("--format", opt.format, "output format")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (list->parsed()) {
      if (opt.format == Format::json) {
        std::cout << nlohmann::json{{"pieces", stripcount::builtin_names()}}.dump(2) << "\n";
      } else {
        for (const auto& name : stripcount::builtin_names()) std::cout << name << "\n";
      }
      return 0;
    }

    const Request req = make_request(opt);
    OutputReport report;
    if (formula->parsed()) report = formula_report(req);
    if (count->parsed()) report = count_report(req, opt.cols);
    if (gf->parsed()) report = gf_report(req);
    if (bound->parsed()) report = bound_report(req);
    if (verify->parsed()) report = verify_report(req, opt.max_cols);
    emit(report, opt.format);
    return exit_status(report);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 1;
}
