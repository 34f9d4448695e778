#include "coxwalls/curvature.hpp"

#include <algorithm>
#include <stdexcept>

namespace coxwalls {

AngledComplex regular_euclidean_angles(const TwoComplex& k) {
    AngledComplex ac;
    ac.base = k;
    ac.corner_angle_pi.resize(k.two_cell_count());
    for (int f = 0; f < k.two_cell_count(); ++f) {
        const long n = static_cast<long>(k.two_cell(f).boundary.size());
        if (n < 3)
            throw std::invalid_argument(
                "regular_euclidean_angles: 2-cell with fewer than 3 sides");
        ac.corner_angle_pi[f].assign(n, frac(n - 2, n));
    }
    return ac;
}

Rational cell_curvature_pi(const AngledComplex& ac, int f) {
    Rational kappa = 2;
    for (const Rational& angle : ac.corner_angle_pi.at(f)) kappa -= 1 - angle;
    kappa.canonicalize();
    return kappa;
}

Rational vertex_curvature_pi(const AngledComplex& ac, int x) {
    LinkGraph lg = link(ac.base, x);
    const long v = static_cast<long>(lg.vertices.size());
    const long e = static_cast<long>(lg.edges.size());
    Rational sum_angles = 0;
    for (const LinkEdge& corner : lg.edges) sum_angles += ac.angle_pi(corner.cell, corner.pos);

    Rational kappa = Rational(2 - v) + (Rational(e) - sum_angles);  // (2-v) + sum(1 - angle)
    // same value through the link Euler characteristic, as a bookkeeping guard
    Rational cross = Rational(2 - (v - e)) - sum_angles;
    if (kappa != cross)
        throw std::logic_error("vertex_curvature_pi: corner accounting mismatch");
    kappa.canonicalize();
    return kappa;
}

Rational section_curvature_pi(const AngledComplex& ac, const SectionSpec& s) {
    LinkGraph lg = link(ac.base, s.vertex);
    std::vector<int> chosen = s.link_edges;
    std::sort(chosen.begin(), chosen.end());
    if (std::adjacent_find(chosen.begin(), chosen.end()) != chosen.end())
        throw std::invalid_argument("section: repeated link edge");
    for (int e : chosen)
        if (e < 0 || e >= static_cast<int>(lg.edges.size()))
            throw std::invalid_argument("section: link edge index out of range");
    if (chosen.empty()) throw std::invalid_argument("section: empty (not regular)");

    const int n = static_cast<int>(lg.vertices.size());
    std::vector<int> valence(n, 0);
    std::vector<std::vector<int>> adjacency(n);
    for (int e : chosen) {
        const LinkEdge& edge = lg.edges[e];
        ++valence[edge.a];
        ++valence[edge.b];
        adjacency[edge.a].push_back(edge.b);
        adjacency[edge.b].push_back(edge.a);
    }
    long v = 0;
    int start = -1;
    for (int i = 0; i < n; ++i)
        if (valence[i] > 0) {
            ++v;
            if (start < 0) start = i;
            if (valence[i] < 2)
                throw std::invalid_argument("section: vertex of valence <= 1 (not regular)");
        }
    std::vector<char> seen(n, 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    long reached = 0;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        ++reached;
        for (int w : adjacency[u])
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    if (reached != v) throw std::invalid_argument("section: disconnected (not regular)");

    Rational kappa = Rational(2 - v);
    for (int e : chosen) kappa += 1 - ac.angle_pi(lg.edges[e].cell, lg.edges[e].pos);
    kappa.canonicalize();
    return kappa;
}

SectionalVerdict has_nonpositive_sectional(const CoxeterPresentation& p) {
    const int r = p.rank();
    if (r > 25)
        throw std::invalid_argument("has_nonpositive_sectional: rank too large to enumerate");
    SectionalVerdict verdict;
    verdict.dimension_at_most_2 = has_dimension_at_most_2(p);
    verdict.nonpositive = true;
    for (long mask = 1; mask < (1L << r); ++mask) {
        std::vector<int> subset;
        for (int i = 0; i < r; ++i)
            if (mask & (1L << i)) subset.push_back(i + 1);
        if (subset.size() < 3) continue;  // a connected non-tree diagram needs a cycle
        CoxeterPresentation h = coxeter_subgroup(p, subset);
        CoxeterDiagram diagram(h);
        if (!diagram.connected() || diagram.is_tree()) continue;
        Rational chi = euler_characteristic(h);
        if (chi > 0) {
            verdict.nonpositive = false;
            verdict.witness_subset = subset;
            verdict.witness_chi = chi;
            return verdict;
        }
    }
    return verdict;
}

std::optional<Rational> brute_force_sectional_at(const AngledComplex& ac, int x) {
    LinkGraph lg = link(ac.base, x);
    const int n = static_cast<int>(lg.vertices.size());
    const int e = static_cast<int>(lg.edges.size());
    if (n > 7 || e > 24)
        throw std::invalid_argument("brute_force_sectional_at: link too large");

    std::optional<Rational> best;
    for (long mask = 1; mask < (1L << e); ++mask) {
        std::vector<int> valence(n, 0);
        std::vector<std::vector<int>> adjacency(n);
        for (int i = 0; i < e; ++i)
            if (mask & (1L << i)) {
                ++valence[lg.edges[i].a];
                ++valence[lg.edges[i].b];
                adjacency[lg.edges[i].a].push_back(lg.edges[i].b);
                adjacency[lg.edges[i].b].push_back(lg.edges[i].a);
            }
        bool regular = true;
        long v = 0;
        int start = -1;
        for (int i = 0; i < n && regular; ++i) {
            if (valence[i] == 0) continue;
            ++v;
            if (start < 0) start = i;
            if (valence[i] < 2) regular = false;
        }
        if (!regular || v == 0) continue;
        std::vector<char> seen(n, 0);
        std::vector<int> stack{start};
        seen[start] = 1;
        long reached = 0;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            ++reached;
            for (int w : adjacency[u])
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        if (reached != v) continue;

        Rational kappa = Rational(2 - v);
        for (int i = 0; i < e; ++i)
            if (mask & (1L << i))
                kappa += 1 - ac.angle_pi(lg.edges[i].cell, lg.edges[i].pos);
        kappa.canonicalize();
        if (!best || kappa > *best) best = kappa;
    }
    return best;
}

bool negative_sectional_sufficient(const CoxeterPresentation& p) {
    const long r = p.rank();
    if (r < 3) throw std::invalid_argument("negative_sectional_sufficient: needs r >= 3");
    const Rational threshold = frac(r * (r - 1), 2 * (r - 2));
    for (auto [i, j] : p.finite_pairs())
        if (Rational(*p.exponent(i, j)) <= threshold) return false;
    return true;
}

bool locally_quasiconvex_sufficient(const CoxeterPresentation& p) {
    if (!p.is_uniform())
        throw std::invalid_argument("criterion stated for uniform exponent only");
    if (p.rank() < 2) return true;
    Exponent m = p.exponent(1, 2);
    if (!m) return true;  // infinite uniform exponent beats any threshold
    return Rational(*m) >= frac(3L * p.rank(), 2);
}

}  // namespace coxwalls
