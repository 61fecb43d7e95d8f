#pragma once

#include <optional>
#include <string>
#include <vector>

#include "courant/cli/model.hpp"
#include "courant/report.hpp"

namespace courant::cli {

inline constexpr const char* kVersion = "1.0.0";

struct RunOptions {
  std::optional<unsigned> degree_cap;
  std::optional<std::vector<Rational>> point;
};

struct RunResult {
  Report report;
  std::vector<std::string> lines;  // derived values printed after the checks
};

/// Throws std::invalid_argument on unknown commands or wrong arity.
RunResult run(const std::string& command, const std::vector<std::string>& args, const Model& model,
              const RunOptions& opts);

/// 0 pass, 1 fail, 2 inconclusive.
int exit_code(Status s);

/// Header, checks, derived lines, notes and the final STATUS line.
std::string format_report(const std::string& echo, const RunResult& r);

}  // namespace courant::cli
