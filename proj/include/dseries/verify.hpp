#pragma once

// Named identity suites run over presets or expression-defined series.

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dseries/presets.hpp"
#include "dseries/stirling.hpp"

namespace dseries {

enum class Suite : std::uint8_t { Orthogonality, Schloemilch, S1Agreement, Lemmas, Logarithm, LambdaLimit };

std::string_view suite_name(Suite s) noexcept;
// "all" expands to every suite. Throws InvalidArgument.
std::vector<Suite> parse_suites(std::string_view name);

struct Subject {
  std::string label;
  std::string preset;  // empty for expressions
  LambdaMode mode;
  // f at the requested order under the requested mode.
  std::function<DeltaSeries(std::size_t, const LambdaMode&)> build;
  // Cached tables; when present the orthogonality suite checks these.
  std::optional<Triangle> s2, s1;
};

Subject preset_subject(const std::string& id, const LambdaMode& mode);
// Throws SyntaxError, UnknownFunction.
Subject expr_subject(const std::string& src, const LambdaMode& mode);
// Degenerate presets get symbolic lambda unless a value is given.
LambdaMode default_mode(const std::string& preset, const LambdaMode& requested);

struct SuiteResult {
  Suite suite;
  std::string subject;
  bool applicable = true;
  CheckReport report;
  std::string error;  // set when the suite threw
  double seconds = 0;

  bool passed() const { return !applicable || (error.empty() && report.ok); }
};

SuiteResult run_suite(Suite suite, const Subject& subject, std::size_t n);
// One task per (suite, subject) pair; results come back in row-major order.
std::vector<SuiteResult> run_suites(const std::vector<Suite>& suites, const std::vector<Subject>& subjects,
                                    std::size_t n);

// Pass/fail grid followed by the first failure of each failing cell.
std::string render_matrix(const std::vector<SuiteResult>& results, const std::vector<Suite>& suites,
                          const std::vector<Subject>& subjects);

}  // namespace dseries
