#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tusi/classify.hpp"
#include "tusi/iterative.hpp"

namespace tusi {

/// One canonical form visited while solving. `map` expresses the previous
/// step's variable in terms of this one; `to_input` goes all the way back to
/// the caller's variable.
struct PipelineStep {
  std::string form;
  std::vector<std::pair<std::string, double>> params;
  AffineMap map;
  AffineMap to_input;

  friend bool operator==(const PipelineStep&, const PipelineStep&) = default;
};

struct RootEntry {
  double value = 0.0;
  double residual = 0.0;  // |f(value)| for the input polynomial
  int multiplicity = 1;
  double lo = 0.0;        // isolation interval in the input variable
  double hi = 0.0;
  std::string method;     // cardano, bisection, newton, chord, exact
  int iterations = 0;
  std::optional<std::string> error;  // set when refinement failed

  friend bool operator==(const RootEntry&, const RootEntry&) = default;
};

struct RootReport {
  std::vector<PipelineStep> pipeline;
  Classification classification;  // in the input variable
  std::vector<RootEntry> roots;   // ascending
  std::vector<std::string> warnings;
};

std::string_view to_string(Method m) noexcept;
std::optional<Method> parse_method(std::string_view name) noexcept;

// `automatic` uses Cardano for single-real-root regimes and safeguarded
// Newton inside the classification intervals otherwise. Explicit `cardano`
// on a three-root input and `chord` outside the positive normal form throw
// RegimeError.
RootReport solve(const GeneralCubic& c, const SolveOptions& opts = {});
RootReport solve(const ReducedForm& r, const SolveOptions& opts = {});
RootReport solve(const TusiForm& t, const SolveOptions& opts = {});
RootReport solve(const GeneralizedTusiForm& g, const SolveOptions& opts = {});
RootReport solve(const QuadraticTusiForm& qt, const SolveOptions& opts = {});

}  // namespace tusi
