#pragma once

#include <optional>
#include <vector>

#include "coxwalls/coxeter.hpp"
#include "coxwalls/rational.hpp"
#include "coxwalls/two_complex.hpp"

namespace coxwalls {

// A 2-complex with an angle at every corner. All angles here are rational
// multiples of pi, stored and returned as the exact coefficient of pi; the
// deficiency of a corner is pi - angle.
struct AngledComplex {
    TwoComplex base;
    // corner_angle_pi[f][pos] is the angle at corner pos of 2-cell f, over pi
    std::vector<std::vector<Rational>> corner_angle_pi;

    const Rational& angle_pi(int cell, int pos) const {
        return corner_angle_pi.at(cell).at(pos);
    }
};

// each corner of an n-gon gets (n-2)pi/n; digons are rejected (compression
// removes them)
AngledComplex regular_euclidean_angles(const TwoComplex& k);

// kappa(f)/pi = 2 - sum of deficiencies over the corners of f
Rational cell_curvature_pi(const AngledComplex& ac, int f);

// kappa(y)/pi = (2 - v) + sum of deficiencies over the corners at y, where v
// counts link vertices; equivalently (2 - chi(link(y))) - sum of angles, all
// over pi
Rational vertex_curvature_pi(const AngledComplex& ac, int x);

// A section at x: a subgraph of link(x) given by a set of link-edge indices;
// its vertex set is the set of endpoints. Regular means nonempty, connected,
// every vertex of valence >= 2.
struct SectionSpec {
    int vertex = 0;
    std::vector<int> link_edges;  // indices into link(base, vertex).edges
};

// curvature of the section: (2 - v)pi + sum of deficiencies of its edges;
// rejects irregular subgraphs
Rational section_curvature_pi(const AngledComplex& ac, const SectionSpec& s);

struct SectionalVerdict {
    bool nonpositive = false;
    bool dimension_at_most_2 = false;  // advisory flag
    std::optional<std::vector<int>> witness_subset;  // generators of the positive-chi subgroup
    std::optional<Rational> witness_chi;
};

// chi(H) <= 0 for every Coxeter subgroup whose diagram is connected and not
// a tree; the first violating subset is the witness
SectionalVerdict has_nonpositive_sectional(const CoxeterPresentation& p);

// Exhaustive maximum of section curvature over all regular subgraphs of
// link(x) (every edge subset whose induced graph is nonempty, connected,
// without valence <= 1 vertices). Empty optional when no regular section
// exists. Requires at most 7 link vertices and 24 link edges.
std::optional<Rational> brute_force_sectional_at(const AngledComplex& ac, int x);

// all finite exponents satisfy m_ij > r(r-1)/(2(r-2)); r >= 3 required
bool negative_sectional_sufficient(const CoxeterPresentation& p);

// uniform exponent m >= 3r/2; rejects non-uniform presentations
bool locally_quasiconvex_sufficient(const CoxeterPresentation& p);

}  // namespace coxwalls
