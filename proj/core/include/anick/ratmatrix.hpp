#pragma once

#include <anick/rational.hpp>

#include <cstddef>
#include <optional>
#include <vector>

namespace anick {

// Dense rational matrix, row-major.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static RatMatrix identity(size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Rational& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const Rational& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const;
  bool operator==(const RatMatrix&) const = default;

  RatMatrix operator+(const RatMatrix& o) const;
  RatMatrix operator-(const RatMatrix& o) const;
  RatMatrix operator*(const RatMatrix& o) const;
  RatMatrix transpose() const;

  std::vector<Rational> apply(const std::vector<Rational>& v) const;  // matrix * column

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

// Fraction-free integer elimination after clearing denominators row by row.
size_t rank_bareiss(const RatMatrix& m);

// Rational Gauss-Jordan; returns the reduced row echelon form.
RatMatrix rref(const RatMatrix& m, size_t* rank = nullptr,
               std::vector<size_t>* pivotCols = nullptr);

// Basis of the right null space (vectors of length cols()).
std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& m);

// Indices of a maximal independent subset of columns.
std::vector<size_t> independent_columns(const RatMatrix& m);

// Coordinates of b in the column space of A, if it lies there.
std::optional<std::vector<Rational>> solve_columns(const RatMatrix& A,
                                                   const std::vector<Rational>& b);

}  // namespace anick
