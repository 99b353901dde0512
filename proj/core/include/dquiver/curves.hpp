#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dquiver/quiver.hpp"
#include "dquiver/rep.hpp"

namespace dq {

// Curve classes on a disk with 2n-2 marked boundary points and a marked
// puncture at the center. Boundary labels are 1..n-1 and -1..-(n-1), with -k
// antipodal to k; the puncture carries the two labels n and -n. A class is a
// symmetric pair {gamma, mirror image of gamma}, stored canonically as (i, j)
// where i is the smallest positive boundary endpoint over the pair and
//   j in {i+1..n-1}            boundary chord, positive second endpoint,
//   j in {-(i+1)..-(n-1)}      boundary chord into the opposite half,
//   j in {n, -n}               radial curve from i to the puncture.
// Chords between antipodal labels never occur.
struct CurveClass {
  int i = 0;
  int j = 0;
  friend auto operator<=>(const CurveClass&, const CurveClass&) = default;
};

// Boundary position of a label, 0..2n-3 in clockwise order:
// pos(k) = k-1 and pos(-k) = (n-1) + (k-1) for k = 1..n-1.
int posOf(int label, int n);

// Label one boundary step counterclockwise: 1 -> -(n-1), k -> k-1,
// -1 -> n-1, -k -> -(k-1).
int ccwLabel(int label, int n);

// All n^2 - n classes in lexicographic (i, j) order.
std::vector<CurveClass> allClasses(int n);

bool validClass(const CurveClass& c, int n);

// Canonical class with endpoint labels {a, b}; throws std::invalid_argument
// on antipodal or otherwise impossible endpoint pairs.
CurveClass makeClass(int a, int b, int n);

// Swaps the two puncture labels; boundary chords are fixed.
CurveClass bar(const CurveClass& c, int n);

// One-step counterclockwise rotation of the disk (both endpoints of a chord;
// for a radial class the foot rotates and the puncture label flips). Total on
// classes; on the representation side it realizes the Auslander-Reiten
// translate, extended to projectives by the Nakayama correspondent.
CurveClass rho(const CurveClass& c, int n);

// The indecomposable representation attached to a class. Dimension vectors:
//   (i, j), j <= n-1 : K on vertices i..j-1
//   (i, -m), m <= n-1: K^2 on m..n-2, K on i..m-1 and on n-1, n
//   (i, n)           : K on i..n-2 and on n
//   (i, -n)          : K on i..n-2 and on n-1
// Maps between equal dimensions are identities; around the fork,
// (n-1 -> n-2) is [1 0]^T, (n -> n-2) is [0 1]^T, and the 2-to-1 step is
// [1 1].
Rep repOf(const CurveClass& c, int n);

// Inverse of dims(repOf(.)): the class whose representation has dimension
// vector d, or nullopt if d is not a positive root.
std::optional<CurveClass> classOfDims(const DimVec& d, int n);

// Whether some curve of one class crosses some curve of the other. Chords
// cross when their endpoint positions strictly interleave on the circle;
// a radial curve crosses a chord when its foot lies strictly inside the
// chord's minor arc; two radial curves never cross.
bool classesCross(const CurveClass& a, const CurveClass& b, int n);

// A pair is bad when it is neither equal nor a bar pair and the classes
// either cross or use the same four endpoint labels {i, -i, j, -j}.
bool isBadPair(const CurveClass& a, const CurveClass& b, int n);

// Labels swept by the class: endpoints plus the marked points strictly inside
// the minor arc (for a radial class, the foot through n-1 plus the puncture
// label).
std::set<int> supportOf(const CurveClass& c, int n);

// At a shared boundary label ell: whether a's curve end leaves ell strictly
// clockwise-later than b's, measured by clockwise arc distance to the far
// endpoint (a radial far endpoint counts as distance n-1, the half turn).
// At ell = +-n (both classes radial) it compares the positive feet.
bool clockwiseFrom(const CurveClass& a, const CurveClass& b, int ell, int n);

std::string classToString(const CurveClass& c);

// Accepts "(2,-5)" or "2,-5".
CurveClass classFromString(const std::string& s, int n);

}  // namespace dq
