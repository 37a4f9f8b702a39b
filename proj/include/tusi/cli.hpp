#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "tusi/solve.hpp"

namespace tusi::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kNumeric = 3,
  kRegime = 4,
};

/// Everything a subcommand reports. Serializes to the object with keys
/// input, pipeline, classification, roots, warnings, details.
struct OutputEnvelope {
  Json input = Json::object();
  std::vector<PipelineStep> pipeline;
  std::optional<Classification> classification;
  std::vector<RootEntry> roots;
  std::vector<std::string> warnings;
  Json details = Json::object();
};

bool operator==(const OutputEnvelope& a, const OutputEnvelope& b);

Json to_json(const OutputEnvelope& env);
OutputEnvelope envelope_from_json(const Json& j);

/// Six-significant-digit text rendering of the same envelope.
std::string render_human(const OutputEnvelope& env);

/// Decimal literal or exact-ratio literal "n/d". Throws InputError.
double parse_number(std::string_view text);

/// Comma-separated list of numbers.
std::vector<double> parse_number_list(std::string_view text);

std::optional<Regime> parse_regime(std::string_view name);
std::optional<IntervalKind> parse_interval_kind(std::string_view name);

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tusi::cli
