#include "dquiver/quiver.hpp"

#include <algorithm>
#include <stdexcept>

namespace dq {

Quiver buildQuiver(int n) {
  if (n < 3) throw std::invalid_argument("quiver rank must be at least 3");
  Quiver q;
  q.n = n;
  for (int k = 1; k <= n - 2; ++k) q.arrows.emplace_back(k + 1, k);
  q.arrows.emplace_back(n, n - 2);
  return q;
}

bool isSink(const Quiver& q, int k) {
  for (const auto& [s, t] : q.arrows)
    if (s == k) return false;
  return true;
}

Quiver reflectQuiver(const Quiver& q, int k) {
  if (!isSink(q, k)) throw std::invalid_argument("reflection vertex is not a sink");
  Quiver out = q;
  for (auto& [s, t] : out.arrows)
    if (t == k) std::swap(s, t);
  return out;
}

long long eulerForm(const Quiver& q, const DimVec& u, const DimVec& v) {
  if (static_cast<int>(u.size()) != q.n || static_cast<int>(v.size()) != q.n)
    throw std::invalid_argument("dimension vector has wrong length");
  long long acc = 0;
  for (int i = 0; i < q.n; ++i) acc += static_cast<long long>(u[i]) * v[i];
  for (const auto& [s, t] : q.arrows)
    acc -= static_cast<long long>(u[s - 1]) * v[t - 1];
  return acc;
}

DimVec reflectSinkDim(const Quiver& q, const DimVec& d, int k) {
  if (!isSink(q, k)) throw std::invalid_argument("reflection vertex is not a sink");
  if (static_cast<int>(d.size()) != q.n)
    throw std::invalid_argument("dimension vector has wrong length");
  DimVec out = d;
  int acc = -d[k - 1];
  for (const auto& [s, t] : q.arrows)
    if (t == k) acc += d[s - 1];
  out[k - 1] = acc;
  return out;
}

std::optional<DimVec> tauDim(const Quiver& q, DimVec d) {
  Quiver cur = q;
  for (int k = 1; k <= q.n; ++k) {
    d = reflectSinkDim(cur, d, k);
    if (d[k - 1] < 0) return std::nullopt;
    cur = reflectQuiver(cur, k);
  }
  return d;
}

std::vector<DimVec> listIndecomposables(const Quiver& q) {
  std::vector<DimVec> out;
  DimVec d(q.n, 0);
  // Odometer over {0,1,2}^n in lexicographic order.
  while (true) {
    bool nonzero = std::any_of(d.begin(), d.end(), [](int x) { return x != 0; });
    if (nonzero && eulerForm(q, d, d) == 1) out.push_back(d);
    int i = q.n - 1;
    while (i >= 0 && d[i] == 2) d[i--] = 0;
    if (i < 0) break;
    ++d[i];
  }
  return out;
}

std::string dimsToString(const DimVec& d) {
  std::string s;
  s.reserve(d.size());
  for (int x : d) {
    if (x < 0 || x > 9) throw std::invalid_argument("entry out of digit range");
    s.push_back(static_cast<char>('0' + x));
  }
  return s;
}

DimVec dimsFromString(const std::string& s, int n) {
  DimVec d;
  if (s.find(',') != std::string::npos) {
    size_t pos = 0;
    while (pos <= s.size()) {
      size_t next = s.find(',', pos);
      std::string tok = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
      if (tok.empty()) throw std::invalid_argument("empty entry in dimension vector");
      size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad entry in dimension vector: " + tok);
      }
      if (used != tok.size() || v < 0)
        throw std::invalid_argument("bad entry in dimension vector: " + tok);
      d.push_back(v);
      if (next == std::string::npos) break;
      pos = next + 1;
    }
  } else {
    for (char c : s) {
      if (c < '0' || c > '9') throw std::invalid_argument("bad digit in dimension vector");
      d.push_back(c - '0');
    }
  }
  if (static_cast<int>(d.size()) != n)
    throw std::invalid_argument("dimension vector has wrong length");
  return d;
}

}  // namespace dq
