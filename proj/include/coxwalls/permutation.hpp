#pragma once

#include <cstdint>
#include <vector>

namespace coxwalls {

// A permutation of {0, ..., n-1} stored as its image list: p[x] is the image
// of x. JSON interfaces use 1-based image lists; everything internal is 0-based.
using Permutation = std::vector<int>;

Permutation identity_permutation(int degree);
bool is_permutation(const Permutation& p);

inline int apply(const Permutation& p, int x) { return p[x]; }

// (a * b)(x) = b(a(x)) - apply a first, then b
Permutation compose(const Permutation& a, const Permutation& b);

Permutation inverse(const Permutation& p);

// order as an element of the symmetric group (lcm of cycle lengths)
long permutation_order(const Permutation& p);

bool is_identity(const Permutation& p);

// a transposition (a b), 0-based points
Permutation transposition(int degree, int a, int b);

// Deterministic enumeration of the subgroup generated by `generators`:
// breadth-first from the identity, multiplying on the right by generators in
// order. Element 0 is the identity. Throws if the group exceeds `cap`.
std::vector<Permutation> generated_subgroup(const std::vector<Permutation>& generators,
                                            std::size_t cap = 10'000'000);

}  // namespace coxwalls
