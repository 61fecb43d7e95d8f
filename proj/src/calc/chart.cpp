#include "courant/calc/chart.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "courant/calc/poly.hpp"
#include "courant/errors.hpp"

namespace courant {

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace

Chart::Chart(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > Monomial::kMaxVars) {
    throw ValidationError("chart has " + std::to_string(names_.size()) + " coordinates; the limit is " +
                          std::to_string(Monomial::kMaxVars));
  }
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!is_identifier(n)) throw ValidationError("invalid coordinate name '" + n + "'");
    if (!seen.insert(n).second) throw ValidationError("duplicate coordinate name '" + n + "'");
  }
  for (const auto& n : names_) {
    if (seen.count("d" + n)) throw ValidationError("coordinate 'd" + n + "' collides with the differential of '" + n + "'");
  }
}

std::optional<std::size_t> Chart::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

ChartPtr make_chart(std::vector<std::string> names) { return std::make_shared<const Chart>(std::move(names)); }

void require_same_chart(const Chart& a, const Chart& b, const char* context) {
  if (&a == &b || a == b) return;
  throw ChartMismatch(std::string(context) + ": operands live on different charts");
}

}  // namespace courant
