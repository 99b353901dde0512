#include "dquiver/rep.hpp"

#include <numeric>
#include <stdexcept>

namespace dq {

void validateRep(const Rep& r) {
  if (static_cast<int>(r.dims.size()) != r.q.n)
    throw std::invalid_argument("rep: dimension vector has wrong length");
  for (int d : r.dims)
    if (d < 0) throw std::invalid_argument("rep: negative dimension");
  if (r.mats.size() != r.q.arrows.size())
    throw std::invalid_argument("rep: one matrix per arrow required");
  for (size_t a = 0; a < r.mats.size(); ++a) {
    auto [s, t] = r.q.arrows[a];
    if (r.mats[a].rows != r.dims[t - 1] || r.mats[a].cols != r.dims[s - 1])
      throw std::invalid_argument("rep: matrix shape does not match arrow");
  }
}

int homDim(const Rep& u, const Rep& v) {
  if (u.q.arrows != v.q.arrows || u.q.n != v.q.n)
    throw std::invalid_argument("homDim: representations of different quivers");
  const int n = u.q.n;
  // Unknowns: entries of theta_k (shape dV_k x dU_k), vertex-major layout.
  std::vector<int> off(n + 1, 0);
  for (int k = 0; k < n; ++k) off[k + 1] = off[k] + v.dims[k] * u.dims[k];
  const int unknowns = off[n];

  int rows = 0;
  for (const auto& [s, t] : u.q.arrows) rows += v.dims[t - 1] * u.dims[s - 1];

  Mat m(rows, unknowns);
  int row = 0;
  for (size_t a = 0; a < u.q.arrows.size(); ++a) {
    auto [s, t] = u.q.arrows[a];
    const Mat& fu = u.mats[a];  // dU_t x dU_s
    const Mat& fv = v.mats[a];  // dV_t x dV_s
    const int dUs = u.dims[s - 1], dUt = u.dims[t - 1];
    const int dVs = v.dims[s - 1], dVt = v.dims[t - 1];
    // Equation (theta_t f^U_a)(p,c) - (f^V_a theta_s)(p,c) = 0.
    for (int p = 0; p < dVt; ++p)
      for (int c = 0; c < dUs; ++c) {
        for (int qq = 0; qq < dUt; ++qq)
          m.at(row, off[t - 1] + p * dUt + qq) += fu.at(qq, c);
        for (int r = 0; r < dVs; ++r)
          m.at(row, off[s - 1] + r * dUs + c) -= fv.at(p, r);
        ++row;
      }
  }
  return unknowns - rankOf(m);
}

int ext1Dim(const Rep& u, const Rep& v) {
  long long e = homDim(u, v) - eulerForm(u.q, u.dims, v.dims);
  if (e < 0) throw std::logic_error("ext1Dim: negative value");
  return static_cast<int>(e);
}

std::optional<Rep> tauRep(const Rep& u) {
  validateRep(u);
  Rep cur = u;
  for (int k = 1; k <= u.q.n; ++k) {
    if (!isSink(cur.q, k)) throw std::logic_error("tauRep: vertex is not a sink in turn");
    // Collect the arrows into k, in arrow order.
    std::vector<size_t> in;
    int ecols = 0;
    for (size_t a = 0; a < cur.q.arrows.size(); ++a)
      if (cur.q.arrows[a].second == k) {
        in.push_back(a);
        ecols += cur.dims[cur.q.arrows[a].first - 1];
      }
    // f : (+) V_s -> V_k, the block row of the arrow maps.
    Mat f(cur.dims[k - 1], ecols);
    int coff = 0;
    for (size_t a : in) {
      const Mat& fa = cur.mats[a];
      for (int r = 0; r < fa.rows; ++r)
        for (int c = 0; c < fa.cols; ++c) f.at(r, coff + c) = fa.at(r, c);
      coff += fa.cols;
    }
    Mat ker = kernelBasis(f);  // ecols x kdim
    const int kdim = ker.cols;

    Rep next;
    next.q = reflectQuiver(cur.q, k);
    next.dims = cur.dims;
    next.dims[k - 1] = kdim;
    next.mats = cur.mats;
    // Reversed arrows (k -> s) act by restricting the kernel inclusion to the
    // s block of the direct sum.
    coff = 0;
    for (size_t a : in) {
      int s = cur.q.arrows[a].first;
      Mat g(cur.dims[s - 1], kdim);
      for (int r = 0; r < g.rows; ++r)
        for (int c = 0; c < kdim; ++c) g.at(r, c) = ker.at(coff + r, c);
      next.mats[a] = g;
      coff += cur.dims[s - 1];
    }
    cur = std::move(next);
  }
  if (cur.q.arrows != u.q.arrows) throw std::logic_error("tauRep: orientation did not return");
  int total = std::accumulate(cur.dims.begin(), cur.dims.end(), 0);
  if (total == 0) return std::nullopt;
  return cur;
}

int ext1ViaTau(const Rep& u, const Rep& v) {
  if (homDim(u, u) != 1)
    throw std::invalid_argument("ext1ViaTau: first argument must be an indecomposable brick");
  auto t = tauRep(u);
  if (!t) return 0;  // projective: no extensions out of u
  return homDim(v, *t);
}

bool isExceptionalSequenceReps(const std::vector<Rep>& seq) {
  for (const Rep& x : seq)
    if (homDim(x, x) != 1 || ext1Dim(x, x) != 0) return false;
  for (size_t i = 0; i < seq.size(); ++i)
    for (size_t j = i + 1; j < seq.size(); ++j)
      if (homDim(seq[j], seq[i]) != 0 || ext1Dim(seq[j], seq[i]) != 0) return false;
  return true;
}

}  // namespace dq
