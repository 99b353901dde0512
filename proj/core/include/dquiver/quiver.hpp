#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dq {

// The type-D quiver on vertices 1..n with every arrow pointing toward
// vertex 1: arrows (k+1 -> k) for k = 1..n-2 plus the fork arrow (n -> n-2).
// For n = 3 this degenerates to (2 -> 1), (3 -> 1).
struct Quiver {
  int n = 0;
  std::vector<std::pair<int, int>> arrows;  // (source, target), 1-based
};

// Dimension vector, entry i-1 holds the dimension at vertex i.
using DimVec = std::vector<int>;

Quiver buildQuiver(int n);  // throws std::invalid_argument if n < 3

bool isSink(const Quiver& q, int k);

// Reverses all arrows incident to k; k must be a sink.
Quiver reflectQuiver(const Quiver& q, int k);

// Euler form <u, v> = sum_i u_i v_i - sum_{a: s->t} u_s v_t.
long long eulerForm(const Quiver& q, const DimVec& u, const DimVec& v);

// Simple reflection of a dimension vector at a sink k:
//   d_k <- -d_k + sum over arrows into k of d_source.
// The result is not clamped and may have negative entries.
DimVec reflectSinkDim(const Quiver& q, const DimVec& d, int k);

// Coxeter translate of a dimension vector: reflect at 1, 2, ..., n on the
// successively re-oriented quiver. Returns nullopt (the translate is
// undefined) as soon as a reflection produces a negative entry, which for a
// positive root happens exactly when the root is projective.
std::optional<DimVec> tauDim(const Quiver& q, DimVec d);

// Dimension vectors of the indecomposable representations: the positive
// roots, i.e. nonzero d >= 0 with <d, d> = 1. Listed in lexicographic order.
std::vector<DimVec> listIndecomposables(const Quiver& q);

// "00101"-style rendering (entries of a type-D root are always <= 2, so one
// digit per vertex).
std::string dimsToString(const DimVec& d);

// Accepts both the digit string "00101" and a comma-separated form "0,0,1,0,1".
DimVec dimsFromString(const std::string& s, int n);

}  // namespace dq
