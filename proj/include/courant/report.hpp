#pragma once

#include <string>
#include <vector>

namespace courant {

enum class Status { Pass, Fail, Inconclusive };

std::string to_string(Status s);

/// Combines verdicts: any failure fails, otherwise any inconclusive entry
/// makes the whole inconclusive.
Status combine(Status a, Status b);

struct Check {
  std::string name;      // e.g. "AXIOM(iii)" or "JACOBI"
  std::string inputs;    // rendering of the inputs used
  Status status = Status::Pass;
  std::string residual;  // witness expression when not passing
};

/// Structured verdict: one entry per check plus free-form notes.
class Report {
 public:
  void add(Check c) { checks_.push_back(std::move(c)); }
  void add(const std::string& name, const std::string& inputs, Status s, const std::string& residual = "");
  void note(std::string text) { notes_.push_back(std::move(text)); }
  void append(const Report& other);

  const std::vector<Check>& checks() const { return checks_; }
  const std::vector<std::string>& notes() const { return notes_; }
  Status status() const;
  bool passed() const { return status() == Status::Pass; }

  /// `NAME PASS @ (inputs)`, `NAME FAIL residual=<expr> @ (inputs)`, ...
  std::string render() const;

 private:
  std::vector<Check> checks_;
  std::vector<std::string> notes_;
};

std::string render(const Check& c);

}  // namespace courant
