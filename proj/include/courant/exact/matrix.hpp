#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "courant/exact/rational.hpp"

namespace courant {

/// Dense row-major matrix over Q.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);

  static RatMatrix identity(std::size_t n);
  /// All rows must have length `cols`.
  static RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::vector<Rational> row_vector(std::size_t r) const;

  void append_row(std::span<const Rational> values);

  RatMatrix transpose() const;
  RatMatrix operator*(const RatMatrix& rhs) const;
  std::vector<Rational> apply(std::span<const Rational> v) const;

  bool operator==(const RatMatrix& rhs) const = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct Echelon {
  RatMatrix form;                   // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;  // pivot column of each row
};

/// Exact Gauss-Jordan elimination. The row space is preserved.
Echelon rref(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

/// Rows form the canonical basis of {x : m x = 0}.
RatMatrix nullspace(const RatMatrix& m);

/// One solution of a x = b, or nullopt when inconsistent.
std::optional<std::vector<Rational>> solve(const RatMatrix& a, std::span<const Rational> b);

}  // namespace courant
