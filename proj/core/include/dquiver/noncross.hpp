#pragma once

#include <string>
#include <vector>

#include "dquiver/curves.hpp"
#include "dquiver/signed_perm.hpp"

namespace dq {

// Partition of the labels {1..n, -1..-n} into blocks, stored canonically:
// entries of a block ascending, blocks sorted lexicographically.
struct DPartition {
  std::vector<std::vector<int>> blocks;

  friend auto operator<=>(const DPartition&, const DPartition&) = default;
};

void canonicalize(DPartition& p);

DPartition discretePartition(int n);

// Structural requirements: the blocks partition the 2n labels, the negative
// of every block is a block, at most one block is self-negative (the zero
// block), and the zero block is never a single pair {i,-i}.
bool isValidDPartition(const DPartition& p, int n);

// Crossing test for two disjoint blocks, drawn with boundary labels at their
// marked points and the labels n, -n at the puncture (a block's picture is
// the boundary of its convex position hull, plus a spoke to the puncture when
// it holds a puncture label). Blocks cross when boundary points interleave,
// when a hull that strictly surrounds the puncture meets a block using the
// puncture or another surrounding hull, or when a spoke to the puncture has
// its foot strictly inside a short hull edge of the other block.
// Throws std::invalid_argument if the blocks share a label.
bool blocksCross(const std::vector<int>& a, const std::vector<int>& b, int n);

// Valid and pairwise non-crossing.
bool isNoncrossing(const DPartition& p, int n);

// Partition attached to an even-signed permutation: each paired cycle orbit
// {C, -C} contributes its two support blocks, and the supports of all
// balanced cycles merge into the zero block.
DPartition fMap(const SignedPerm& w);

// n minus the number of {B, -B} pairs of non-zero blocks; matches the
// reflection length through fMap.
int partitionRank(const DPartition& p, int n);

// a refines b (every block of a lies inside a block of b).
bool refines(const DPartition& a, const DPartition& b);

// The lattice of noncrossing partitions, ordered by refinement, graded by
// partitionRank.
struct NCPoset {
  int n = 0;
  std::vector<DPartition> elems;  // sorted
  std::vector<int> rank;
  std::vector<std::vector<char>> leq;
  std::vector<std::vector<int>> coversOf;  // j in coversOf[i]: j covers i

  int indexOf(const DPartition& p) const;
  int minIndex() const;  // the discrete partition
};

// Filters all set partitions of the 2n labels through isNoncrossing.
NCPoset buildNCGeometric(int n);

// Images under fMap of the interval below the Coxeter element in absolute
// order; fMap must be injective there (std::logic_error otherwise).
NCPoset buildNCInterval(int n);

long long countMaximalChains(const NCPoset& poset);

// The saturated chain attached to an exceptional sequence: partitions of the
// prefix products r_m ... r_1 of the class reflections, starting at the
// discrete partition. Throws std::invalid_argument on a non-exceptional
// sequence.
std::vector<DPartition> chainOfSequence(const std::vector<CurveClass>& seq, int n);

struct BijectionReport {
  bool ok = true;
  std::string failure;                   // first problem found, empty if ok
  std::vector<long long> seqCountByLen;  // index = length
  std::vector<long long> chainCountByLen;
};

// Matches exceptional sequences against saturated chains from the minimum:
// chainOfSequence must land on covers, injectively, onto the full chain set.
// completeOnly restricts both sides to length n.
BijectionReport bijectionCheck(int n, bool completeOnly);

std::string partitionToString(const DPartition& p);

}  // namespace dq
