#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dquiver/quiver.hpp"

namespace dq {

// Auslander-Reiten quiver at the level of dimension vectors: one vertex per
// indecomposable, arrows for irreducible maps, and the translate tau.
struct ARQuiver {
  Quiver q;
  std::vector<DimVec> verts;               // lexicographic order
  std::vector<std::optional<int>> tau;     // nullopt exactly on projectives
  std::vector<std::pair<int, int>> arrows; // (from, to) vertex indices, sorted
  std::vector<char> projective;
  std::vector<char> injective;             // not in the image of tau

  int indexOf(const DimVec& d) const;      // -1 if absent
};

// Builds the AR quiver by knitting: arrows into the projective cover P_s are
// the radical inclusions P_t -> P_s (one per quiver arrow s -> t), and for
// non-projective Z the arrows Y -> Z correspond to the arrows tau Z -> Y.
// The mesh identity dims(tau Z) + dims(Z) = sum of dims over arrows into Z
// is checked at every non-projective vertex, and the arrow digraph must be
// acyclic; violations throw std::logic_error.
ARQuiver buildARQuiver(int n);

}  // namespace dq
