#include "decostab/linalg.hpp"

#include <cstddef>

namespace decostab {

std::optional<RatVector> solve_square(RatMatrix a, RatVector b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw DimensionError("solve_square: matrix/vector size mismatch");
  for (const auto& row : a) {
    if (row.size() != n) throw DimensionError("solve_square: matrix is not square");
  }

  // Forward elimination with first-nonzero pivoting (exact arithmetic needs
  // no magnitude-based pivot choice).
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;  // singular
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    const Rational inv = Rational(1) / a[col][col];
    for (std::size_t j = col; j < n; ++j) a[col][j] *= inv;
    b[col] *= inv;
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col].is_zero()) continue;
      const Rational f = a[row][col];
      for (std::size_t j = col; j < n; ++j) a[row][j] -= f * a[col][j];
      b[row] -= f * b[col];
    }
  }
  return b;
}

std::size_t matrix_rank(RatMatrix a) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size();
  const std::size_t cols = a[0].size();
  for (const auto& row : a) {
    if (row.size() != cols) throw DimensionError("matrix_rank: ragged matrix");
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    const Rational inv = Rational(1) / a[rank][col];
    for (std::size_t j = col; j < cols; ++j) a[rank][j] *= inv;
    for (std::size_t row = 0; row < rows; ++row) {
      if (row == rank || a[row][col].is_zero()) continue;
      const Rational f = a[row][col];
      for (std::size_t j = col; j < cols; ++j) a[row][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

long affine_dim(const std::vector<RatVector>& points) {
  if (points.empty()) return -1;
  RatMatrix diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) {
    diffs.push_back(points[i] - points[0]);
  }
  if (diffs.empty()) return 0;
  return static_cast<long>(matrix_rank(std::move(diffs)));
}

}  // namespace decostab
