#pragma once

#include <cstddef>
#include <vector>

#include "pph/rational.hpp"

namespace pph {

// Dense rational matrix. Row-major, value semantics.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  static RatMatrix identity(std::size_t n);

  bool operator==(const RatMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> a_;
};

// In-place reduced row echelon form; returns the pivot column of each pivot
// row. Pivot rule: columns left to right, first nonzero row from the top.
std::vector<std::size_t> rref(RatMatrix& m);

std::size_t rank(RatMatrix m);

// Rows form the canonical (RREF) basis of {x : m x = 0}.
RatMatrix kernel_basis(const RatMatrix& m);

// [a | b] side by side; row counts must match.
RatMatrix hstack(const RatMatrix& a, const RatMatrix& b);

}  // namespace pph
