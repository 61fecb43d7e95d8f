#include "courant/report.hpp"

namespace courant {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

Status combine(Status a, Status b) {
  if (a == Status::Fail || b == Status::Fail) return Status::Fail;
  if (a == Status::Inconclusive || b == Status::Inconclusive) return Status::Inconclusive;
  return Status::Pass;
}

void Report::add(const std::string& name, const std::string& inputs, Status s, const std::string& residual) {
  checks_.push_back({name, inputs, s, residual});
}

void Report::append(const Report& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
  notes_.insert(notes_.end(), other.notes_.begin(), other.notes_.end());
}

Status Report::status() const {
  Status s = Status::Pass;
  for (const auto& c : checks_) s = combine(s, c.status);
  return s;
}

std::string render(const Check& c) {
  std::string line = c.name + " " + to_string(c.status);
  if (c.status == Status::Fail) line += " residual=" + c.residual;
  if (c.status == Status::Inconclusive && !c.residual.empty()) line += " " + c.residual;
  if (!c.inputs.empty()) line += " @ (" + c.inputs + ")";
  return line;
}

std::string Report::render() const {
  std::string out;
  for (const auto& c : checks_) out += courant::render(c) + "\n";
  for (const auto& n : notes_) out += "NOTE " + n + "\n";
  return out;
}

}  // namespace courant
