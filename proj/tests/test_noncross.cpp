#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dquiver/curves.hpp"
#include "dquiver/noncross.hpp"
#include "dquiver/signed_perm.hpp"

using namespace dq;

namespace {

DPartition mk(std::vector<std::vector<int>> blocks) {
  DPartition p;
  p.blocks = std::move(blocks);
  canonicalize(p);
  return p;
}

std::vector<CurveClass> runningExample() {
  return {makeClass(3, 5, 5), makeClass(4, 5, 5), makeClass(2, 3, 5),
          makeClass(2, -5, 5), makeClass(1, 2, 5)};
}

}  // namespace

TEST_CASE("partition validity") {
  CHECK(isValidDPartition(discretePartition(5), 5));
  CHECK(isValidDPartition(mk({{3, 5}, {-3, -5}, {1}, {-1}, {2}, {-2}, {4}, {-4}}), 5));
  CHECK(isValidDPartition(mk({{2, 3, -2, -3}, {1}, {-1}}), 3));
  // A zero block of size two would be a degenerate pair.
  CHECK(!isValidDPartition(mk({{1, -1}, {2}, {-2}, {3}, {-3}}), 3));
  // Mirror of every block must be present.
  CHECK(!isValidDPartition(mk({{1, 2}, {-1}, {-2}, {3}, {-3}}), 3));
  // Two self-negative blocks are not allowed.
  CHECK(!isValidDPartition(mk({{1, -1, 2, -2}, {3, -3, 4, -4}}), 4));
  // Not a partition of the label set.
  DPartition bad;
  bad.blocks = {{1, 2}, {-1, -2}};
  CHECK(!isValidDPartition(bad, 3));
}

TEST_CASE("block crossing") {
  CHECK(blocksCross({1, 3}, {2, 4}, 5));
  CHECK(!blocksCross({3, 4, 5}, {-3, -4, -5}, 5));
  CHECK(blocksCross({3, 5}, {2, 4}, 5));    // spoke exits the hull
  CHECK(!blocksCross({1, 5}, {2, 4}, 5));
  CHECK(blocksCross({2, -2, 3, -3}, {1, 4}, 5));
  CHECK(!blocksCross({2, -2, 3, -3}, {1}, 5));
  CHECK(!blocksCross({1}, {-1}, 5));
  CHECK_THROWS_AS(blocksCross({1, 2}, {2, 3}, 5), std::invalid_argument);
}

TEST_CASE("noncrossing partitions") {
  CHECK(isNoncrossing(discretePartition(5), 5));
  CHECK(isNoncrossing(mk({{3, 4, 5}, {-3, -4, -5}, {1}, {-1}, {2}, {-2}}), 5));
  CHECK(!isNoncrossing(mk({{1, 3}, {-1, -3}, {2, 4}, {-2, -4}, {5}, {-5}}), 5));
}

TEST_CASE("partition of a group element") {
  CHECK(fMap(identityPerm(5)) == discretePartition(5));
  CHECK(fMap(pairedTransposition(3, 5, 5)) ==
        mk({{3, 5}, {-3, -5}, {1}, {-1}, {2}, {-2}, {4}, {-4}}));

  // Prefix product of the first four running-example reflections: balanced
  // cycles pool into the zero block.
  SignedPerm w4 = identityPerm(5);
  for (SignedPerm r : {pairedTransposition(3, 5, 5), pairedTransposition(4, 5, 5),
                       pairedTransposition(2, 3, 5), pairedTransposition(2, -5, 5)})
    w4 = compose(r, w4);
  CHECK(fMap(w4) == mk({{2, 3, 4, 5, -2, -3, -4, -5}, {1}, {-1}}));

  CHECK(partitionRank(discretePartition(5), 5) == 0);
  CHECK(partitionRank(fMap(w4), 5) == 4);
  CHECK(partitionRank(mk({{1, 2, 3, -1, -2, -3}}), 3) == 3);

  // Reflection length transports through the partition map.
  for (const SignedPerm& w : allGroupD(4))
    CHECK(partitionRank(fMap(w), 4) == absoluteLength(w));
}

TEST_CASE("refinement") {
  DPartition a = mk({{3, 5}, {-3, -5}, {1}, {-1}, {2}, {-2}, {4}, {-4}});
  DPartition b = mk({{3, 4, 5}, {-3, -4, -5}, {1}, {-1}, {2}, {-2}});
  CHECK(refines(a, b));
  CHECK(!refines(b, a));
  CHECK(refines(discretePartition(5), a));
  DPartition c = mk({{1, 2}, {-1, -2}, {3}, {-3}, {4}, {-4}, {5}, {-5}});
  CHECK(!refines(c, b));
}

TEST_CASE("the two constructions of the noncrossing poset coincide") {
  for (int n = 3; n <= 4; ++n) {
    NCPoset geo = buildNCGeometric(n);
    NCPoset itv = buildNCInterval(n);
    CHECK(geo.elems == itv.elems);
    CHECK(geo.rank == itv.rank);
    CHECK(geo.leq == itv.leq);
    CHECK(geo.coversOf == itv.coversOf);
    CHECK(geo.minIndex() >= 0);
    CHECK(geo.elems[geo.minIndex()] == discretePartition(n));
  }
  CHECK(buildNCGeometric(3).elems.size() == 14);
  CHECK(buildNCGeometric(4).elems.size() == 50);
  CHECK_THROWS_AS(buildNCGeometric(6), ResourceLimitError);
  CHECK_THROWS_AS(buildNCInterval(6), ResourceLimitError);
}

TEST_CASE("maximal chain counts") {
  CHECK(countMaximalChains(buildNCInterval(4)) == 162);
  NCPoset int5 = buildNCInterval(5);
  CHECK(int5.elems.size() == 182);
  CHECK(countMaximalChains(int5) == 2048);
  for (const DPartition& p : int5.elems) CHECK(isNoncrossing(p, 5));
}

TEST_CASE("chain of the running example") {
  std::vector<DPartition> chain = chainOfSequence(runningExample(), 5);
  REQUIRE(chain.size() == 6);
  CHECK(chain[0] == discretePartition(5));
  CHECK(chain[1] == mk({{3, 5}, {-3, -5}, {1}, {-1}, {2}, {-2}, {4}, {-4}}));
  CHECK(chain[2] == mk({{3, 4, 5}, {-3, -4, -5}, {1}, {-1}, {2}, {-2}}));
  CHECK(chain[3] == mk({{2, 3, 4, 5}, {-2, -3, -4, -5}, {1}, {-1}}));
  CHECK(chain[4] == mk({{2, 3, 4, 5, -2, -3, -4, -5}, {1}, {-1}}));
  CHECK(chain[5] == mk({{1, 2, 3, 4, 5, -1, -2, -3, -4, -5}}));
  for (int k = 0; k < 6; ++k) {
    CHECK(partitionRank(chain[k], 5) == k);
    CHECK(isNoncrossing(chain[k], 5));
    if (k) CHECK(refines(chain[k - 1], chain[k]));
  }

  CHECK(chainOfSequence({}, 5) == std::vector<DPartition>{discretePartition(5)});
  CHECK_THROWS_AS(
      chainOfSequence({makeClass(4, 5, 5), makeClass(3, 5, 5)}, 5),
      std::invalid_argument);
}

TEST_CASE("sequences biject onto saturated chains") {
  BijectionReport r3 = bijectionCheck(3, false);
  CHECK(r3.ok);
  BijectionReport r4 = bijectionCheck(4, false);
  CHECK(r4.ok);
  REQUIRE(r4.seqCountByLen.size() == 5);
  CHECK(r4.seqCountByLen[1] == 12);
  CHECK(r4.seqCountByLen[4] == 162);
  CHECK(r4.seqCountByLen == r4.chainCountByLen);
}

TEST_CASE("partition strings") {
  CHECK(partitionToString(mk({{3, 5}, {-3, -5}, {1}, {-1}, {2}, {-2}, {4}, {-4}})) ==
        "{{-5,-3},{-4},{-2},{-1},{1},{2},{3,5},{4}}");
}
