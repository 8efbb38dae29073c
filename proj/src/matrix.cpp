#include "orthoform/matrix.hpp"

#include <cassert>

#include "orthoform/errors.hpp"

namespace orthoform {

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (cols_ != o.rows_) throw Error("matrix product shape mismatch");
  RatMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rat& aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
    }
  return r;
}

std::vector<Rat> RatMatrix::apply(const std::vector<Rat>& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw Error("matrix-vector shape mismatch");
  std::vector<Rat> out(rows_, Rat(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != 0) out[i] += at(i, j) * v[j];
  return out;
}

bool RatMatrix::is_zero() const {
  for (const Rat& x : a_)
    if (x != 0) return false;
  return true;
}

namespace {

// Row-reduces `m` in place; returns pivot columns.  Pivots are only drawn
// from the first `pivot_cols` columns (the rest are carried along, e.g. the
// identity block when inverting).  When rhs is non-null it is carried along
// as an extra column.
std::vector<int> eliminate(RatMatrix& m, std::vector<Rat>* rhs,
                           int pivot_cols) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < pivot_cols && row < m.rows(); ++col) {
    int p = -1;
    for (int i = row; i < m.rows(); ++i)
      if (m.at(i, col) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row) {
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
      if (rhs) std::swap((*rhs)[p], (*rhs)[row]);
    }
    Rat inv = 1 / m.at(row, col);
    for (int j = 0; j < m.cols(); ++j) m.at(row, j) *= inv;
    if (rhs) (*rhs)[row] *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      Rat f = m.at(i, col);
      for (int j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
      if (rhs) (*rhs)[i] -= f * (*rhs)[row];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int RatMatrix::rank() const {
  RatMatrix m = *this;
  return static_cast<int>(eliminate(m, nullptr, m.cols()).size());
}

std::optional<std::vector<Rat>> RatMatrix::solve(
    const std::vector<Rat>& rhs) const {
  if (static_cast<int>(rhs.size()) != rows_) throw Error("solve shape mismatch");
  RatMatrix m = *this;
  std::vector<Rat> b = rhs;
  std::vector<int> pivots = eliminate(m, &b, m.cols());
  for (int i = static_cast<int>(pivots.size()); i < rows_; ++i)
    if (b[i] != 0) return std::nullopt;
  std::vector<Rat> x(cols_, Rat(0));
  for (size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = b[k];
  return x;
}

std::optional<RatMatrix> RatMatrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  int n = rows_;
  // Eliminate on [A | I].
  RatMatrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, n + i) = 1;
  }
  std::vector<int> pivots = eliminate(aug, nullptr, n);
  if (static_cast<int>(pivots.size()) != n) return std::nullopt;
  RatMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

}  // namespace orthoform
