#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace courant {

/// Coordinate chart: an ordered list of distinct coordinate names. A
/// zero-dimensional chart stands for a point.
class Chart {
 public:
  /// Names must be identifiers ([A-Za-z_][A-Za-z0-9_]*), distinct, and no
  /// name may equal "d" + another name (that spelling is the differential).
  explicit Chart(std::vector<std::string> names);

  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  bool operator==(const Chart& rhs) const { return names_ == rhs.names_; }

 private:
  std::vector<std::string> names_;
};

using ChartPtr = std::shared_ptr<const Chart>;

ChartPtr make_chart(std::vector<std::string> names);

/// Throws ChartMismatch unless the charts are equal.
void require_same_chart(const Chart& a, const Chart& b, const char* context);

}  // namespace courant
