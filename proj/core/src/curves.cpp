#include "dquiver/curves.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace dq {

namespace {

bool isBoundaryLabel(int label, int n) {
  return label != 0 && std::abs(label) <= n - 1;
}

int mod(int x, int m) { return ((x % m) + m) % m; }

}  // namespace

int posOf(int label, int n) {
  if (!isBoundaryLabel(label, n))
    throw std::invalid_argument("posOf: not a boundary label");
  return label > 0 ? label - 1 : (n - 1) + (-label - 1);
}

int ccwLabel(int label, int n) {
  if (!isBoundaryLabel(label, n))
    throw std::invalid_argument("ccwLabel: not a boundary label");
  if (label == 1) return -(n - 1);
  if (label == -1) return n - 1;
  return label > 0 ? label - 1 : label + 1;
}

bool validClass(const CurveClass& c, int n) {
  if (n < 3 || c.i < 1 || c.i > n - 1) return false;
  int aj = std::abs(c.j);
  return aj == n || (c.i < aj && aj <= n - 1);
}

std::vector<CurveClass> allClasses(int n) {
  if (n < 3) throw std::invalid_argument("rank must be at least 3");
  std::vector<CurveClass> out;
  for (int i = 1; i <= n - 1; ++i) {
    out.push_back({i, -n});
    for (int j = -(n - 1); j <= -(i + 1); ++j) out.push_back({i, j});
    for (int j = i + 1; j <= n - 1; ++j) out.push_back({i, j});
    out.push_back({i, n});
  }
  return out;
}

CurveClass makeClass(int a, int b, int n) {
  if (n < 3) throw std::invalid_argument("rank must be at least 3");
  bool ca = std::abs(a) == n, cb = std::abs(b) == n;
  if (ca && cb) throw std::invalid_argument("makeClass: two puncture labels");
  if (ca) std::swap(a, b), std::swap(ca, cb);
  if (!isBoundaryLabel(a, n) || (!cb && !isBoundaryLabel(b, n)))
    throw std::invalid_argument("makeClass: label out of range");
  CurveClass c;
  if (cb) {
    c = {std::abs(a), a > 0 ? b : -b};
  } else {
    if (std::abs(a) == std::abs(b))
      throw std::invalid_argument("makeClass: equal or antipodal endpoints");
    if (std::abs(b) < std::abs(a)) std::swap(a, b);
    // a now has the smaller absolute value; flip to the mirror curve if needed.
    if (a < 0) a = -a, b = -b;
    c = {a, b};
  }
  if (!validClass(c, n)) throw std::invalid_argument("makeClass: invalid class");
  return c;
}

CurveClass bar(const CurveClass& c, int n) {
  if (!validClass(c, n)) throw std::invalid_argument("bar: invalid class");
  if (std::abs(c.j) == n) return {c.i, -c.j};
  return c;
}

CurveClass rho(const CurveClass& c, int n) {
  if (!validClass(c, n)) throw std::invalid_argument("rho: invalid class");
  if (std::abs(c.j) == n) return makeClass(ccwLabel(c.i, n), -c.j, n);
  return makeClass(ccwLabel(c.i, n), ccwLabel(c.j, n), n);
}

Rep repOf(const CurveClass& c, int n) {
  if (!validClass(c, n)) throw std::invalid_argument("repOf: invalid class");
  Quiver q = buildQuiver(n);
  DimVec d(n, 0);
  if (c.j == n) {
    for (int k = c.i; k <= n - 2; ++k) d[k - 1] = 1;
    d[n - 1] = 1;
  } else if (c.j == -n) {
    for (int k = c.i; k <= n - 2; ++k) d[k - 1] = 1;
    d[n - 2] = 1;
  } else if (c.j > 0) {
    for (int k = c.i; k <= c.j - 1; ++k) d[k - 1] = 1;
  } else {
    int m = -c.j;
    for (int k = m; k <= n - 2; ++k) d[k - 1] = 2;
    for (int k = c.i; k <= m - 1; ++k) d[k - 1] = 1;
    d[n - 2] = 1;
    d[n - 1] = 1;
  }
  Rep r;
  r.q = q;
  r.dims = d;
  for (const auto& [s, t] : q.arrows) {
    int ds = d[s - 1], dt = d[t - 1];
    Mat m(dt, ds);
    if (ds > 0 && dt > 0) {
      if (ds == dt) {
        m = Mat::identity(ds);
      } else if (ds == 2 && dt == 1) {
        m.at(0, 0) = 1;
        m.at(0, 1) = 1;
      } else if (s == n - 1) {
        m.at(0, 0) = 1;
      } else if (s == n) {
        m.at(1, 0) = 1;
      } else {
        throw std::logic_error("repOf: unexpected dimension jump");
      }
    }
    r.mats.push_back(m);
  }
  return r;
}

std::optional<CurveClass> classOfDims(const DimVec& d, int n) {
  for (const CurveClass& c : allClasses(n))
    if (repOf(c, n).dims == d) return c;
  return std::nullopt;
}

namespace {

struct Curve {
  bool radial = false;
  int p = 0;  // chord endpoint / radial foot, as a position
  int q = 0;  // second chord endpoint
};

Curve primaryOf(const CurveClass& c, int n) {
  if (std::abs(c.j) == n) return {true, posOf(c.i, n), 0};
  return {false, posOf(c.i, n), posOf(c.j, n)};
}

Curve mirrorOf(const CurveClass& c, int n) {
  if (std::abs(c.j) == n) return {true, posOf(-c.i, n), 0};
  return {false, posOf(-c.i, n), posOf(-c.j, n)};
}

// Strictly between a and b walking clockwise from a.
bool betweenCW(int a, int b, int x, int m) {
  int dx = mod(x - a, m), db = mod(b - a, m);
  return 0 < dx && dx < db;
}

bool insideMinorArc(int z, int a, int b, int m) {
  int d = mod(b - a, m);
  if (2 * d == m) throw std::logic_error("crossing: antipodal chord");
  if (2 * d < m) return betweenCW(a, b, z, m);
  return betweenCW(b, a, z, m);
}

bool curvesCross(const Curve& u, const Curve& v, int n) {
  const int m = 2 * n - 2;
  if (u.radial && v.radial) return false;
  if (u.radial) return v.p != u.p && v.q != u.p && insideMinorArc(u.p, v.p, v.q, m);
  if (v.radial) return u.p != v.p && u.q != v.p && insideMinorArc(v.p, u.p, u.q, m);
  if (u.p == v.p || u.p == v.q || u.q == v.p || u.q == v.q) return false;
  return betweenCW(u.p, u.q, v.p, m) != betweenCW(u.p, u.q, v.q, m);
}

}  // namespace

bool classesCross(const CurveClass& a, const CurveClass& b, int n) {
  if (!validClass(a, n) || !validClass(b, n))
    throw std::invalid_argument("classesCross: invalid class");
  Curve a1 = primaryOf(a, n);
  // The mirror pairings cross iff these do, so two checks suffice.
  return curvesCross(a1, primaryOf(b, n), n) || curvesCross(a1, mirrorOf(b, n), n);
}

bool isBadPair(const CurveClass& a, const CurveClass& b, int n) {
  if (a == b || b == bar(a, n)) return false;
  if (a.i == b.i && std::abs(a.j) == std::abs(b.j)) return true;
  return classesCross(a, b, n);
}

std::set<int> supportOf(const CurveClass& c, int n) {
  if (!validClass(c, n)) throw std::invalid_argument("supportOf: invalid class");
  std::set<int> s;
  if (std::abs(c.j) == n) {
    for (int k = c.i; k <= n - 1; ++k) s.insert(k);
    s.insert(c.j);
  } else if (c.j > 0) {
    for (int k = c.i; k <= c.j; ++k) s.insert(k);
  } else {
    for (int k = 1; k <= c.i; ++k) s.insert(k);
    for (int k = -c.j; k <= n - 1; ++k) s.insert(-k);
  }
  return s;
}

namespace {

// Clockwise arc distance from ell to the far endpoint of the curve of c that
// ends at boundary label ell; a radial far end counts as the half turn n-1.
int departureKey(const CurveClass& c, int ell, int n) {
  bool radial = std::abs(c.j) == n;
  int far = 0;
  bool toCenter = false;
  if (c.i == ell) {
    if (radial) toCenter = true;
    else far = c.j;
  } else if (!radial && c.j == ell) {
    far = c.i;
  } else if (-c.i == ell) {
    if (radial) toCenter = true;
    else far = -c.j;
  } else if (!radial && -c.j == ell) {
    far = -c.i;
  } else {
    throw std::invalid_argument("clockwiseFrom: class not incident to label");
  }
  if (toCenter) return n - 1;
  return mod(posOf(far, n) - posOf(ell, n), 2 * n - 2);
}

}  // namespace

bool clockwiseFrom(const CurveClass& a, const CurveClass& b, int ell, int n) {
  if (!validClass(a, n) || !validClass(b, n))
    throw std::invalid_argument("clockwiseFrom: invalid class");
  if (std::abs(ell) == n) {
    if (std::abs(a.j) != n || std::abs(b.j) != n)
      throw std::invalid_argument("clockwiseFrom: class not incident to puncture");
    return a.i > b.i;
  }
  return departureKey(a, ell, n) > departureKey(b, ell, n);
}

std::string classToString(const CurveClass& c) {
  return "(" + std::to_string(c.i) + "," + std::to_string(c.j) + ")";
}

CurveClass classFromString(const std::string& s, int n) {
  std::string t;
  for (char ch : s)
    if (ch != '(' && ch != ')' && ch != ' ') t.push_back(ch);
  size_t comma = t.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("classFromString: expected \"(i,j)\"");
  try {
    size_t u1 = 0, u2 = 0;
    std::string left = t.substr(0, comma), right = t.substr(comma + 1);
    int a = std::stoi(left, &u1);
    int b = std::stoi(right, &u2);
    if (u1 != left.size() || u2 != right.size())
      throw std::invalid_argument("trailing characters");
    return makeClass(a, b, n);
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("classFromString: expected \"(i,j)\"");
  }
}

}  // namespace dq
