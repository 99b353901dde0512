#include "dquiver/signed_perm.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <set>

namespace dq {

SignedPerm identityPerm(int n) {
  SignedPerm p;
  p.w.resize(n);
  std::iota(p.w.begin(), p.w.end(), 1);
  return p;
}

int applyPerm(const SignedPerm& p, int x) {
  int ax = std::abs(x);
  if (ax < 1 || ax > p.n()) throw std::invalid_argument("applyPerm: out of range");
  return x > 0 ? p.w[ax - 1] : -p.w[ax - 1];
}

SignedPerm compose(const SignedPerm& a, const SignedPerm& b) {
  if (a.n() != b.n()) throw std::invalid_argument("compose: size mismatch");
  SignedPerm c;
  c.w.resize(a.n());
  for (int i = 1; i <= a.n(); ++i) c.w[i - 1] = applyPerm(a, applyPerm(b, i));
  return c;
}

SignedPerm inverseOf(const SignedPerm& p) {
  SignedPerm q;
  q.w.resize(p.n());
  for (int i = 1; i <= p.n(); ++i) {
    int v = p.w[i - 1];
    q.w[std::abs(v) - 1] = v > 0 ? i : -i;
  }
  return q;
}

bool inGroupD(const SignedPerm& p) {
  int n = p.n();
  std::vector<bool> seen(n + 1, false);
  int negatives = 0;
  for (int v : p.w) {
    int av = std::abs(v);
    if (av < 1 || av > n || seen[av]) return false;
    seen[av] = true;
    if (v < 0) ++negatives;
  }
  return negatives % 2 == 0;
}

SignedPerm pairedTransposition(int i, int j, int n) {
  if (std::abs(i) < 1 || std::abs(i) > n || std::abs(j) < 1 || std::abs(j) > n ||
      std::abs(i) == std::abs(j))
    throw std::invalid_argument("pairedTransposition: bad endpoints");
  SignedPerm p = identityPerm(n);
  auto set = [&](int from, int to) { p.w[std::abs(from) - 1] = from > 0 ? to : -to; };
  set(i, j);
  set(j, i);
  return p;
}

SignedPerm generatorPerm(int letter, int n) {
  if (letter < 1 || letter > n) throw std::invalid_argument("generatorPerm: bad letter");
  if (letter <= n - 2) return pairedTransposition(letter, letter + 1, n);
  if (letter == n - 1) return pairedTransposition(n - 1, n, n);
  return pairedTransposition(n - 1, -n, n);
}

SignedPerm phi(const std::vector<int>& word, int n) {
  SignedPerm p = identityPerm(n);
  // Rightmost letter acts first.
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    p = compose(generatorPerm(*it, n), p);
  return p;
}

std::vector<int> wordOfClass(const CurveClass& c, int n) {
  if (!validClass(c, n)) throw std::invalid_argument("wordOfClass: invalid class");
  const int i = c.i;
  // Palindrome descending from "top" to i and back: top, top-1, ..., i, ..., top.
  auto palindrome = [](int top, int low) {
    std::vector<int> w;
    for (int k = top; k >= low; --k) w.push_back(k);
    for (int k = low + 1; k <= top; ++k) w.push_back(k);
    return w;
  };
  if (c.j > 0 && c.j <= n - 1) return palindrome(c.j - 1, i);
  if (c.j == n) return palindrome(n - 1, i);
  if (c.j == -n) {
    std::vector<int> w = palindrome(n - 2, i);  // empty when i = n-1
    w.insert(w.begin(), n);
    w.push_back(n);
    return i == n - 1 ? std::vector<int>{n} : w;
  }
  // c.j = -m with i < m <= n-1: conjugate the (i,n)-type palindrome by
  // s_n s_{n-2} s_{n-3} ... s_m.
  const int m = -c.j;
  std::vector<int> w;
  for (int k = m; k <= n - 2; ++k) w.push_back(k);
  w.push_back(n);
  auto mid = palindrome(n - 1, i);
  w.insert(w.end(), mid.begin(), mid.end());
  w.push_back(n);
  for (int k = n - 2; k >= m; --k) w.push_back(k);
  return w;
}

SignedPerm reflectionOfClass(const CurveClass& c, int n) {
  if (!validClass(c, n)) throw std::invalid_argument("reflectionOfClass: invalid class");
  return pairedTransposition(c.i, c.j, n);
}

std::vector<SignedPerm> allReflections(int n) {
  std::vector<SignedPerm> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      out.push_back(pairedTransposition(i, j, n));
      out.push_back(pairedTransposition(i, -j, n));
    }
  return out;
}

std::vector<SignedPerm> allGroupD(int n) {
  std::vector<int> base(n);
  std::iota(base.begin(), base.end(), 1);
  std::vector<SignedPerm> out;
  std::vector<int> perm = base;
  std::sort(perm.begin(), perm.end());
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (__builtin_popcount(mask) % 2 != 0) continue;
      SignedPerm p;
      p.w.resize(n);
      for (int k = 0; k < n; ++k)
        p.w[k] = (mask >> k) & 1 ? -perm[k] : perm[k];
      out.push_back(p);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end());
  return out;
}

SignedCycles cycleDecomp(const SignedPerm& p) {
  if (!inGroupD(p)) throw std::invalid_argument("cycleDecomp: not an even-signed permutation");
  const int n = p.n();
  SignedCycles out;
  std::vector<bool> visited(2 * n + 1, false);  // index ax + (sign<0 ? n : 0)
  auto idx = [n](int x) { return std::abs(x) + (x < 0 ? n : 0); };
  for (int i = 1; i <= n; ++i) {
    if (visited[idx(i)]) continue;
    std::vector<int> cyc;
    int x = i;
    do {
      cyc.push_back(x);
      visited[idx(x)] = true;
      x = applyPerm(p, x);
    } while (x != i);
    bool balanced = false;
    for (int v : cyc)
      if (v == -i) balanced = true;
    if (balanced) {
      out.balanced.push_back(cyc);
    } else {
      for (int v : cyc) visited[idx(-v)] = true;
      out.paired.push_back(cyc);
    }
  }
  return out;
}

int absoluteLength(const SignedPerm& p) {
  SignedCycles c = cycleDecomp(p);
  return p.n() - static_cast<int>(c.paired.size());
}

std::map<std::vector<int>, int> absoluteLengthBFS(int n) {
  if (n > 6) throw ResourceLimitError("absoluteLengthBFS: supported up to rank 6");
  auto refl = allReflections(n);
  std::map<std::vector<int>, int> dist;
  std::deque<SignedPerm> queue;
  SignedPerm e = identityPerm(n);
  dist[e.w] = 0;
  queue.push_back(e);
  while (!queue.empty()) {
    SignedPerm u = queue.front();
    queue.pop_front();
    int du = dist[u.w];
    for (const SignedPerm& t : refl) {
      SignedPerm v = compose(t, u);
      if (dist.emplace(v.w, du + 1).second) queue.push_back(v);
    }
  }
  return dist;
}

bool absLeq(const SignedPerm& u, const SignedPerm& w) {
  return absoluteLength(w) == absoluteLength(u) + absoluteLength(compose(inverseOf(u), w));
}

SignedPerm coxeterElement(int n) {
  std::vector<int> word(n);
  std::iota(word.begin(), word.end(), 1);
  return phi(word, n);
}

std::string permToString(const SignedPerm& p) {
  std::string s = "[";
  for (int k = 0; k < p.n(); ++k) {
    if (k) s += ",";
    s += std::to_string(p.w[k]);
  }
  return s + "]";
}

}  // namespace dq
