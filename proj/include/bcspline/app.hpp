#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bcspline/suites.hpp"

namespace bcspline {

enum class OutputFormat { text, json, tsv };
enum class Level { formula, full };

OutputFormat parse_format(std::string_view text);
Level parse_level(std::string_view text);

/// Largest rank accepted by the full level.
inline constexpr int kMaxFullRank = 4;

struct RunConfig {
  std::string command;
  /// Empty means both types where that makes sense.
  std::optional<LieType> type;
  int n = 0;
  std::optional<std::string> tset;
  std::optional<std::string> ideal;
  OutputFormat format = OutputFormat::text;
  Level level = Level::formula;
  int jobs = 1;
  bool by_ideal = false;

  // dump
  std::string family;
  int i = 0;
  int k = 0;
  std::string set;
  std::optional<std::string> act;
  bool expand = false;
};

struct CommandResult {
  int exit_code = 0;
  std::string output;
};

/// Thrown for unusable input; the front end maps it to exit code 1.
struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// One row per realizable t-set.
CommandResult cmd_table(const RunConfig& cfg);
/// Closed form, computed character at the full level, Frobenius images and h-positivity.
CommandResult cmd_char(const RunConfig& cfg);
/// Property suites; exit code 2 when any fails.
CommandResult cmd_verify(const RunConfig& cfg);
/// A family spline, optionally acted on and expanded.
CommandResult cmd_dump(const RunConfig& cfg);

CommandResult run(const RunConfig& cfg);

/// JSON form of a class function: values per class with the class labels.
nlohmann::json class_function_json(const ClassFunction& f);
nlohmann::json expression_json(const CharacterExpression& e);

}  // namespace bcspline
