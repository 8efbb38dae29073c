#pragma once

#include <optional>
#include <vector>

#include "orthoform/rational.hpp"

namespace orthoform {

// Dense matrix over exact rationals.  Sizes stay at desk scale (dim <= a few
// dozen), so plain Gaussian elimination with exact pivots is all we need.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Rat(0)) {}

  static RatMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Rat& at(int i, int j) const {
    return a_[static_cast<size_t>(i) * cols_ + j];
  }

  bool operator==(const RatMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const RatMatrix& o) const { return !(*this == o); }

  RatMatrix transpose() const;
  RatMatrix operator*(const RatMatrix& o) const;
  std::vector<Rat> apply(const std::vector<Rat>& v) const;

  int rank() const;

  // One solution of A x = rhs, free variables set to zero; nullopt when the
  // system is inconsistent.
  std::optional<std::vector<Rat>> solve(const std::vector<Rat>& rhs) const;

  std::optional<RatMatrix> inverse() const;

  bool is_zero() const;

 private:
  int rows_, cols_;
  std::vector<Rat> a_;
};

}  // namespace orthoform
