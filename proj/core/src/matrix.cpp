#include "dquiver/matrix.hpp"

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace dq {

namespace {

// Minimal exact rational type. All matrices in this project stay tiny
// (dimensions bounded by a few dozen, entries by small integers), so a
// 64-bit fraction with overflow guards is ample.
struct Rat {
  long long num = 0;
  long long den = 1;
};

long long checkedNarrow(__int128 v) {
  if (v > INT64_MAX / 2 || v < INT64_MIN / 2)
    throw std::overflow_error("exact rational arithmetic overflow");
  return static_cast<long long>(v);
}

Rat ratNormalize(__int128 num, __int128 den) {
  if (den == 0) throw std::overflow_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) return {0, 1};
  long long n = checkedNarrow(num), d = checkedNarrow(den);
  long long g = std::gcd(std::llabs(n), d);
  return {n / g, d / g};
}

Rat ratSub(const Rat& x, const Rat& y) {
  return ratNormalize(static_cast<__int128>(x.num) * y.den -
                          static_cast<__int128>(y.num) * x.den,
                      static_cast<__int128>(x.den) * y.den);
}

Rat ratMul(const Rat& x, const Rat& y) {
  return ratNormalize(static_cast<__int128>(x.num) * y.num,
                      static_cast<__int128>(x.den) * y.den);
}

Rat ratDiv(const Rat& x, const Rat& y) {
  if (y.num == 0) throw std::overflow_error("rational division by zero");
  return ratNormalize(static_cast<__int128>(x.num) * y.den,
                      static_cast<__int128>(x.den) * y.num);
}

// Reduced row echelon form over Q. Returns the pivot column of each pivot
// row, in order.
std::vector<int> rref(std::vector<std::vector<Rat>>& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  int rows = static_cast<int>(m.size());
  int cols = static_cast<int>(m[0].size());
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int sel = -1;
    for (int r = row; r < rows; ++r)
      if (m[r][col].num != 0) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    std::swap(m[sel], m[row]);
    Rat inv = m[row][col];
    for (int c = col; c < cols; ++c) m[row][c] = ratDiv(m[row][c], inv);
    for (int r = 0; r < rows; ++r) {
      if (r == row || m[r][col].num == 0) continue;
      Rat f = m[r][col];
      for (int c = col; c < cols; ++c)
        m[r][c] = ratSub(m[r][c], ratMul(f, m[row][c]));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<std::vector<Rat>> toRat(const Mat& m) {
  std::vector<std::vector<Rat>> r(m.rows, std::vector<Rat>(m.cols));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) r[i][j] = {m.at(i, j), 1};
  return r;
}

}  // namespace

Mat Mat::identity(int k) {
  Mat m(k, k);
  for (int i = 0; i < k; ++i) m.at(i, i) = 1;
  return m;
}

Mat matMul(const Mat& x, const Mat& y) {
  if (x.cols != y.rows) throw std::invalid_argument("matMul: shape mismatch");
  Mat z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      long long v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; ++j) {
        __int128 acc = static_cast<__int128>(z.at(i, j)) +
                       static_cast<__int128>(v) * y.at(k, j);
        z.at(i, j) = checkedNarrow(acc);
      }
    }
  return z;
}

int rankOf(const Mat& m) {
  if (m.rows == 0 || m.cols == 0) return 0;
  auto r = toRat(m);
  return static_cast<int>(rref(r).size());
}

Mat kernelBasis(const Mat& m) {
  // Kernel of the zero-row map is everything.
  if (m.rows == 0) return Mat::identity(m.cols);
  if (m.cols == 0) return Mat(0, 0);
  auto r = toRat(m);
  std::vector<int> pivots = rref(r);
  std::vector<bool> isPivot(m.cols, false);
  for (int c : pivots) isPivot[c] = true;

  std::vector<int> freeCols;
  for (int c = 0; c < m.cols; ++c)
    if (!isPivot[c]) freeCols.push_back(c);

  Mat basis(m.cols, static_cast<int>(freeCols.size()));
  for (int k = 0; k < static_cast<int>(freeCols.size()); ++k) {
    int fc = freeCols[k];
    // Solution with x[fc] = 1, other free variables 0; pivot variables are
    // read off the reduced rows: x[p] = -r[row][fc].
    std::vector<Rat> x(m.cols, Rat{0, 1});
    x[fc] = {1, 1};
    for (int row = 0; row < static_cast<int>(pivots.size()); ++row)
      x[pivots[row]] = ratSub(Rat{0, 1}, r[row][fc]);
    long long lcm = 1;
    for (const Rat& v : x)
      lcm = checkedNarrow(static_cast<__int128>(lcm) / std::gcd(lcm, v.den) * v.den);
    long long g = 0;
    std::vector<long long> col(m.cols);
    for (int c = 0; c < m.cols; ++c) {
      col[c] = checkedNarrow(static_cast<__int128>(x[c].num) * (lcm / x[c].den));
      g = std::gcd(g, std::llabs(col[c]));
    }
    for (int c = 0; c < m.cols; ++c) basis.at(c, k) = col[c] / (g ? g : 1);
  }
  return basis;
}

}  // namespace dq
