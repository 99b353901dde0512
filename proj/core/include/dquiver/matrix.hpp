#pragma once

#include <vector>

namespace dq {

// Dense integer matrix. Everything downstream (Hom-space dimensions, kernels
// of reflection functors) reduces to exact rank/kernel computations on small
// matrices, so we keep a single rational-elimination engine and no floating
// point anywhere.
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<long long> a;  // row-major

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

  long long& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  long long at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  static Mat identity(int k);

  bool operator==(const Mat&) const = default;
};

// Matrix product; throws std::invalid_argument on shape mismatch.
Mat matMul(const Mat& x, const Mat& y);

// Rank over the rationals, computed by exact Gaussian elimination.
int rankOf(const Mat& m);

// Basis of the right kernel {v : m v = 0}, returned as the columns of an
// integer matrix. Each column is a primitive integer vector; columns are
// ordered by ascending free-column index, so the result is deterministic.
Mat kernelBasis(const Mat& m);

}  // namespace dq
