#pragma once

#include <string>
#include <vector>

#include "coxwalls/coxeter.hpp"
#include "coxwalls/permutation.hpp"
#include "coxwalls/two_complex.hpp"

namespace coxwalls {

// Finite permutation quotient of a Coxeter presentation: one permutation per
// generator. Used to induce regular covers of the presentation complex.
struct PermutationQuotient {
    int degree = 0;
    std::vector<Permutation> generator_images;
};

// a_i -> transposition (1, i+1) on r+1 points; a valid torsion-free quotient
// for uniform exponent 3 (pairwise products are 3-cycles)
PermutationQuotient star_transposition_quotient(int rank);

// One block per generator pair carrying the order-2m dihedral group in its
// regular action: the pair's first generator multiplies by a reflection, the
// second by the adjacent reflection, and every other generator by the first
// reflection. Within a foreign block a pair's images cancel, so each pair's
// product has order exactly m: a valid torsion-free quotient of uniform(r, m)
// for every r >= 2, m >= 2. (With mixed exponents no such per-pair assignment
// exists; candidate quotients for those come from the user.)
PermutationQuotient uniform_dihedral_quotient(int rank, int m);

// Outcome of the torsion-free-kernel test. The quotient map must be a
// homomorphism in the first place (images are involutions or trivial, pair
// products have order dividing m_ij); torsion-freeness then asks for the
// orders to be exact: order(psi(a_i)) = 2 and order(psi(a_i)psi(a_j)) = m_ij
// for every finite m_ij, i.e. the map is injective on every finite standard
// parabolic of a dimension <= 2 presentation.
struct KernelCheck {
    bool homomorphism = false;
    bool torsion_free = false;
    std::string diagnostic;  // names the first violated generator or pair

    bool ok() const { return homomorphism && torsion_free; }
};

KernelCheck check_torsion_free_kernel(const CoxeterPresentation& p,
                                      const PermutationQuotient& q);

// Cover of the presentation complex given by the regular action of the
// subgroup generated by the generator images on itself: one 0-cell per
// element, lifts of every loop and relator at every element. Vertex order is
// the deterministic enumeration of generated_subgroup. Throws if the torsion
// check fails or the group exceeds `cap`.
struct RegularCover {
    TwoComplex complex;
    int degree = 0;
    std::vector<Permutation> group_elements;  // vertex id -> group element
};

RegularCover regular_cover(const CoxeterPresentation& p, const PermutationQuotient& q,
                           std::size_t cap = 10'000'000);

// Compression of a regular cover: a_i^2 digons collapse, merging each doubled
// edge into one unoriented edge; the 2m_ij lifts of each (a_i a_j)^{m_ij}
// polygon sharing one boundary cycle are identified to a single 2-cell.
// Result: d 0-cells, dr/2 1-cells, d/(2 m_ij) 2-cells per finite pair.
// Throws if a polygon class has size != 2m_ij (a torsion-check escape).
TwoComplex compress(const TwoComplex& cover, const CoxeterPresentation& p);

}  // namespace coxwalls
