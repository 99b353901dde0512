#pragma once

#include <optional>
#include <vector>

#include "dquiver/matrix.hpp"
#include "dquiver/quiver.hpp"

namespace dq {

// A finite-dimensional representation of a quiver: a vector space K^{dims[k-1]}
// at each vertex k and, parallel to q.arrows, a matrix of shape
// dims[target-1] x dims[source-1] for each arrow (acting on column vectors).
struct Rep {
  Quiver q;
  DimVec dims;
  std::vector<Mat> mats;
};

// Throws std::invalid_argument if the matrix shapes do not match dims/arrows.
void validateRep(const Rep& r);

// dim Hom(U, V), computed as the corank of the linear system expressing that
// a tuple (theta_k : U_k -> V_k) commutes with every arrow map.
int homDim(const Rep& u, const Rep& v);

// dim Ext^1(U, V) = dim Hom(U, V) - <dim U, dim V>  (hereditary path algebra).
int ext1Dim(const Rep& u, const Rep& v);

// Coxeter translate: reflection functors applied at vertices 1..n, each a sink
// of the successively re-oriented quiver; the composite lands back on the
// original orientation. Returns nullopt when the result is the zero
// representation, which for an indecomposable input means it was projective.
std::optional<Rep> tauRep(const Rep& u);

// dim Ext^1(U, V) computed as dim Hom(V, tau U); U must be indecomposable
// (throws std::invalid_argument otherwise), and projective U gives 0.
int ext1ViaTau(const Rep& u, const Rep& v);

// A sequence (V^1, ..., V^k) is exceptional when every term is a brick with no
// self-extensions and Hom(V^j, V^i) = Ext^1(V^j, V^i) = 0 for all i < j.
bool isExceptionalSequenceReps(const std::vector<Rep>& seq);

}  // namespace dq
