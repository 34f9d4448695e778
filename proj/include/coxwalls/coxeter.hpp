#pragma once

#include <optional>
#include <vector>

#include "coxwalls/rational.hpp"

namespace coxwalls {

// Exponent of a generator pair: a finite value >= 2, or absent for an
// infinite exponent (no relator between the pair). Infinity is never a
// sentinel integer; formulas treat absent entries as contributing nothing.
using Exponent = std::optional<int>;

inline constexpr std::optional<int> infinite_exponent = std::nullopt;

// Coxeter presentation: rank r and a symmetric exponent matrix m_ij over
// {2,3,...} U {inf} off the diagonal. Generators are indexed 1..r.
// Immutable after construction.
class CoxeterPresentation {
public:
    // rank-r presentation with every exponent infinite
    explicit CoxeterPresentation(int rank);

    // entries: list of (i, j, m) with 1 <= i < j <= r; pairs not listed are infinite
    CoxeterPresentation(int rank, const std::vector<std::tuple<int, int, int>>& entries);

    int rank() const { return rank_; }

    // 1-based generator indices, i != j
    Exponent exponent(int i, int j) const;
    void set_exponent(int i, int j, Exponent m);  // used by builders before sharing

    bool is_uniform() const;  // all off-diagonal exponents equal (all finite m, or all infinite)
    std::optional<int> uniform_exponent() const;  // the common finite m, if uniform and finite

    std::vector<std::pair<int, int>> finite_pairs() const;  // i < j with m_ij < inf

private:
    int rank_;
    std::vector<Exponent> exponents_;  // rank x rank, symmetric, diagonal unused

    std::size_t at(int i, int j) const;
};

// all off-diagonal exponents equal to m (m >= 2)
CoxeterPresentation uniform(int rank, int m);

// chi(G) = 1 - r/2 + sum over finite pairs of 1/(2 m_ij), exact
Rational euler_characteristic(const CoxeterPresentation& p);

// presentation on a nonempty subset of the generators, restricted exponents,
// relabelled order-preservingly to 1..|subset|
CoxeterPresentation coxeter_subgroup(const CoxeterPresentation& p,
                                     const std::vector<int>& subset);

// true iff 1/m_ij + 1/m_jk + 1/m_ki <= 1 for every triple (infinite terms
// contribute 0); equivalently every 3-generator Coxeter subgroup is infinite
bool has_dimension_at_most_2(const CoxeterPresentation& p);

// The labelled diagram: one vertex per generator, an edge {i,j} labelled
// m_ij exactly when m_ij is finite.
class CoxeterDiagram {
public:
    explicit CoxeterDiagram(const CoxeterPresentation& p);

    int vertex_count() const { return rank_; }
    const std::vector<std::tuple<int, int, int>>& edges() const { return edges_; }  // (i, j, m), i < j

    bool connected() const;
    bool is_tree() const;  // connected with edge count = vertex count - 1

private:
    int rank_;
    std::vector<std::tuple<int, int, int>> edges_;
    std::vector<std::vector<int>> adjacency_;
};

}  // namespace coxwalls
