#pragma once

#include <vector>

#include "dquiver/curves.hpp"
#include "dquiver/rep.hpp"

namespace dq {

// Memoized pairwise data over all classes of one rank, used by the
// enumerators. pairGeo/pairHom are indexed [earlier][later].
struct ClassTable {
  int n = 0;
  std::vector<CurveClass> classes;  // lexicographic
  std::vector<std::vector<char>> bad;
  std::vector<std::vector<char>> pairGeo;  // order rules on curves
  std::vector<std::vector<char>> pairHom;  // Hom and Ext vanishing on reps

  int indexOf(const CurveClass& c) const;
};

ClassTable buildClassTable(int n);

// Ordering constraint for the pair (a earlier, b later) of a non-bad pair:
// no shared endpoint or a bar pair imposes nothing; a shared boundary label
// requires the later curve to depart clockwise-later; two radial curves with
// equal puncture labels require a larger later foot, with opposite puncture
// labels a smaller one.
bool pairOrderOK(const CurveClass& a, const CurveClass& b, int n);

// Radial classes with feet k1 < k2 < k3 whose puncture labels alternate in
// sign admit no compatible ordering.
bool hasForbiddenTriple(const std::vector<CurveClass>& classes, int n);

// One endpoint-pinned geodesic per curve, as an edge on the 2n-1 points of
// the disk (boundary positions 0..2n-3, puncture 2n-2). Radius edges remember
// the puncture label sign at their end.
struct GEdge {
  int a = 0, b = 0;   // vertex indices; the puncture is vertex 2n-2
  int cls = 0;        // position in the input set
  int sign = 0;       // 0 for chords, else the puncture label sign at this end
};

// Multigraph of all curves of a collection, two edges per class.
struct CurveGraph {
  int vcount = 0;
  std::vector<GEdge> edges;
  std::vector<std::vector<std::pair<int, int>>> adj;  // (to, edge id)
};

CurveGraph buildGraph(const std::vector<CurveClass>& classes, int n);

// Pin the curves at their endpoints and contract each to a geodesic; the
// resulting multigraph (2n-2 boundary vertices plus the puncture, two edges
// per class) must have cycle space of dimension 0, or dimension 2 realized by
// a mirror pair of wedges: a cycle through the puncture using exactly two
// radius edges with opposite puncture labels whose chord path stays strictly
// inside a boundary arc spanning less than a half turn (a two-sided wedge at
// one foot is the bar-pair digon). Any other cycle is an obstruction.
bool cycleConditionOK(const std::vector<CurveClass>& classes, int n);

// A set of classes (throws std::invalid_argument on duplicates or more than n
// entries) is an exceptional collection when no pair is bad, the cycle
// condition holds, and no forbidden triple occurs.
bool isExceptionalCollection(const std::vector<CurveClass>& classes, int n);

// Sequence test on curves: entries distinct, no bad pair, every ordered pair
// satisfies the order rule, and the underlying set passes the collection
// conditions. Throws std::invalid_argument when longer than n.
bool isExceptionalCurveSequence(const std::vector<CurveClass>& seq, int n);

// Ground truth on representations: maps each class through its
// indecomposable and tests Hom/Ext vanishing from later to earlier.
bool oracleIsExceptionalSequence(const std::vector<CurveClass>& seq, int n);

// All exceptional sequences of length 1..maxLen, in depth-first order over
// ascending class indices; `oracle` picks the representation-theoretic or the
// curve test.
std::vector<std::vector<CurveClass>> enumerateSequences(int n, int maxLen, bool oracle);

struct SequenceMismatch {
  std::vector<CurveClass> seq;
  bool geometric = false;
  bool homological = false;
};

// Walks the sequence tree evaluating both tests, recording any disagreement
// and descending only below sequences both tests accept. Empty result means
// the two models agree on every sequence of length <= maxLen. Guarded to
// n <= 6 (ResourceLimitError).
std::vector<SequenceMismatch> crossValidate(int n, int maxLen);

}  // namespace dq
