#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "dquiver/curves.hpp"

namespace dq {

// Signed permutation in window notation: w[i-1] = w(i) for i = 1..n, extended
// by w(-i) = -w(i). Members of the even-signed (type D) group have an even
// number of negative window entries.
struct SignedPerm {
  std::vector<int> w;

  int n() const { return static_cast<int>(w.size()); }
  friend auto operator<=>(const SignedPerm&, const SignedPerm&) = default;
};

SignedPerm identityPerm(int n);

int applyPerm(const SignedPerm& p, int x);  // x in {-n..-1, 1..n}

// (a . b)(x) = a(b(x)).
SignedPerm compose(const SignedPerm& a, const SignedPerm& b);

SignedPerm inverseOf(const SignedPerm& p);

// Window entries are a signed arrangement of 1..n with an even number of
// negatives.
bool inGroupD(const SignedPerm& p);

// The reflection ((i,j)): swaps i <-> j and -i <-> -j (j may be negative).
SignedPerm pairedTransposition(int i, int j, int n);

// Simple generators: s_k = ((k,k+1)) for k <= n-2, s_{n-1} = ((n-1,n)),
// s_n = ((n-1,-n)).
SignedPerm generatorPerm(int letter, int n);

// Evaluates a word in the generators, rightmost letter acting first.
SignedPerm phi(const std::vector<int>& word, int n);

// A reduced word for the reflection of a curve class, palindromic around the
// letter carrying the small endpoint; phi(wordOfClass(c)) equals
// reflectionOfClass(c).
std::vector<int> wordOfClass(const CurveClass& c, int n);

SignedPerm reflectionOfClass(const CurveClass& c, int n);

// All n(n-1) reflections ((i,j)), i < j <= n, both signs of j.
std::vector<SignedPerm> allReflections(int n);

// Every element of the group, lexicographic by window. Size 2^{n-1} n!.
std::vector<SignedPerm> allGroupD(int n);

// Signed cycle decomposition. A cycle closed under negation is balanced and
// stored once; otherwise the orbit pair {C, -C} is paired and the copy
// containing the smallest positive entry is stored. Fixed points appear as
// paired singletons. Every stored cycle starts at its smallest positive entry.
struct SignedCycles {
  std::vector<std::vector<int>> paired;
  std::vector<std::vector<int>> balanced;
};

SignedCycles cycleDecomp(const SignedPerm& p);

// Reflection length n - #paired cycle pairs; throws std::invalid_argument
// outside the even-signed group.
int absoluteLength(const SignedPerm& p);

// Reflection length of every group element by breadth-first search over the
// Cayley graph generated by all reflections; keyed by window. Guarded to
// n <= 6 (throws ResourceLimitError beyond).
std::map<std::vector<int>, int> absoluteLengthBFS(int n);

// u <= w in absolute order.
bool absLeq(const SignedPerm& u, const SignedPerm& w);

// phi of the word (1, 2, ..., n).
SignedPerm coxeterElement(int n);

std::string permToString(const SignedPerm& p);  // "[1,-5,3,4,-2]"

// Raised when an operation would exceed the supported problem size.
struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace dq
