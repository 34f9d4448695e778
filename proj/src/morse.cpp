#include "coxwalls/morse.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "coxwalls/bitstream.hpp"

namespace coxwalls {

DirectedSkeleton induce_directions(const TwoComplex& k, const WallSet& ws,
                                   const TwoSidedResult& sided, const WallOrientation& o) {
    if (o.sign.size() != ws.walls.size())
        throw std::invalid_argument("orientation has wrong number of wall signs");
    for (const Wall& w : ws.walls)
        if (!sided.two_sided[w.id])
            throw std::invalid_argument("induce_directions: wall " + std::to_string(w.id) +
                                        " is one-sided");
    DirectedSkeleton ds;
    ds.forward.resize(k.one_cell_count());
    for (int e = 0; e < k.one_cell_count(); ++e) {
        bool base_forward = sided.direction[e] == 0;
        bool flip = o.sign[ws.one_cell_to_wall[e]] < 0;
        ds.forward[e] = static_cast<char>(base_forward != flip);
    }
    return ds;
}

DirectedSkeleton induce_directions(const TwoComplex& k, const PathologyReport& pathology,
                                   const WallOrientation& o) {
    TwoSidedResult sided;
    sided.direction = pathology.direction;
    sided.two_sided.resize(pathology.reports.size());
    sided.contradiction.resize(pathology.reports.size());
    for (const WallReport& wr : pathology.reports)
        sided.two_sided[wr.wall] = wr.two_sided ? 1 : 0;
    return induce_directions(k, pathology.walls, sided, o);
}

namespace {

// whether step `pos` of cell `f` is traversed along its induced direction
inline bool along(const TwoComplex& k, const DirectedSkeleton& ds, int f, int pos) {
    const BoundaryStep& s = k.two_cell(f).boundary[pos];
    return (ds.forward[s.edge] != 0) == s.forward;
}

int cyclic_sign_changes(const TwoComplex& k, const DirectedSkeleton& ds, int f) {
    const int len = static_cast<int>(k.two_cell(f).boundary.size());
    int changes = 0;
    for (int t = 0; t < len; ++t)
        if (along(k, ds, f, t) != along(k, ds, f, (t + 1) % len)) ++changes;
    return changes;
}

// The corner positions at which the boundary walk reads +^n then -^n: the
// unique direction source (ascending corner) and sink (descending corner).
// They exist iff the sequence has exactly two sign changes with balanced
// runs; wall-induced directions are antiperiodic, so two changes are always
// balanced there.
struct CellCorners {
    int source = -1;
    int sink = -1;
};

CellCorners lawful_corners(const TwoComplex& k, const DirectedSkeleton& ds, int f) {
    const int len = static_cast<int>(k.two_cell(f).boundary.size());
    CellCorners corners;
    int up = -1, down = -1, changes = 0;
    for (int t = 0; t < len; ++t) {
        bool prev = along(k, ds, f, (t + len - 1) % len);
        bool cur = along(k, ds, f, t);
        if (prev != cur) {
            ++changes;
            (cur ? up : down) = t;
        }
    }
    if (changes == 2 && (down - up + len) % len == len / 2 && len % 2 == 0) {
        corners.source = up;
        corners.sink = down;
    }
    return corners;
}

// link incidence precomputed once per complex; orientation checks reuse it
struct LinkCache {
    struct Corner {
        int cell = 0;
        int pos = 0;
        int a = 0;  // link vertex indices
        int b = 0;
    };
    struct VertexLink {
        std::vector<LinkVertex> vertices;
        std::vector<Corner> corners;
    };
    std::vector<VertexLink> links;

    explicit LinkCache(const TwoComplex& k) {
        links.resize(k.zero_cell_count());
        for (int x = 0; x < k.zero_cell_count(); ++x) {
            LinkGraph lg = link(k, x);
            links[x].vertices = lg.vertices;
            for (const LinkEdge& e : lg.edges)
                links[x].corners.push_back({e.cell, e.pos, e.a, e.b});
        }
    }
};

LinkVerdict subgraph_verdict(const std::vector<char>& vertex_in,
                             const std::vector<std::pair<int, int>>& edges) {
    LinkVerdict v;
    const int n = static_cast<int>(vertex_in.size());
    std::vector<int> comp(n, -1);
    int components = 0;
    std::vector<int> stack;
    std::vector<std::vector<int>> adjacency(n);
    for (auto [a, b] : edges) {
        adjacency[a].push_back(b);
        adjacency[b].push_back(a);
        ++v.edges;
    }
    for (int s = 0; s < n; ++s) {
        if (!vertex_in[s]) continue;
        ++v.vertices;
        if (comp[s] != -1) continue;
        ++components;
        comp[s] = components;
        stack.push_back(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : adjacency[u])
                if (comp[w] == -1) {
                    comp[w] = components;
                    stack.push_back(w);
                }
        }
    }
    v.nonempty = v.vertices > 0;
    v.connected = v.nonempty && components == 1;
    return v;
}

AscDescReport evaluate_links(const TwoComplex& k, const DirectedSkeleton& ds,
                             const LinkCache& cache) {
    AscDescReport report;
    report.per_vertex.resize(k.zero_cell_count());

    // direction source/sink corner per cell, shared across vertices
    std::vector<CellCorners> corners(k.two_cell_count());
    for (int f = 0; f < k.two_cell_count(); ++f) corners[f] = lawful_corners(k, ds, f);

    report.all_ok = true;
    for (int x = 0; x < k.zero_cell_count(); ++x) {
        const auto& lk = cache.links[x];
        const int n = static_cast<int>(lk.vertices.size());
        std::vector<char> asc(n, 0), desc(n, 0);
        for (int v = 0; v < n; ++v) {
            const LinkVertex& lv = lk.vertices[v];
            bool fwd = ds.forward[lv.edge] != 0;
            bool away = (lv.end == 0) ? fwd : !fwd;
            (away ? asc : desc)[v] = 1;
        }
        std::vector<std::pair<int, int>> asc_edges, desc_edges;
        for (const auto& c : lk.corners) {
            if (corners[c.cell].source == c.pos) asc_edges.push_back({c.a, c.b});
            if (corners[c.cell].sink == c.pos) desc_edges.push_back({c.a, c.b});
        }
        VertexLinkReport& vr = report.per_vertex[x];
        vr.ascending = subgraph_verdict(asc, asc_edges);
        vr.descending = subgraph_verdict(desc, desc_edges);
        if (!vr.ok()) report.all_ok = false;
    }
    return report;
}

}  // namespace

AscDescReport asc_desc_links(const TwoComplex& k, const DirectedSkeleton& ds) {
    LinkCache cache(k);
    return evaluate_links(k, ds, cache);
}

TwoComplex lawful_subcomplex(const TwoComplex& k, const DirectedSkeleton& ds) {
    TwoComplex out(k.zero_cell_count());
    for (const OneCell& e : k.one_cells()) out.add_one_cell(e.v0, e.v1, e.label);
    for (int f = 0; f < k.two_cell_count(); ++f)
        if (cyclic_sign_changes(k, ds, f) == 2)
            out.add_two_cell(k.two_cell(f).boundary, k.two_cell(f).relator);
    return out;
}

bool has_positive_closed_path(const TwoComplex& k, const DirectedSkeleton& ds) {
    // directed cycle detection by iterative DFS with colors
    std::vector<std::vector<int>> out(k.zero_cell_count());
    for (int e = 0; e < k.one_cell_count(); ++e) {
        const OneCell& c = k.one_cell(e);
        int from = ds.forward[e] ? c.v0 : c.v1;
        int to = ds.forward[e] ? c.v1 : c.v0;
        if (from == to) return true;  // directed loop
        out[from].push_back(to);
    }
    std::vector<char> color(k.zero_cell_count(), 0);  // 0 new, 1 on stack, 2 done
    for (int s = 0; s < k.zero_cell_count(); ++s) {
        if (color[s]) continue;
        std::vector<std::pair<int, std::size_t>> stack{{s, 0}};
        color[s] = 1;
        while (!stack.empty()) {
            auto& [u, next] = stack.back();
            if (next < out[u].size()) {
                int w = out[u][next++];
                if (color[w] == 1) return true;
                if (color[w] == 0) {
                    color[w] = 1;
                    stack.push_back({w, 0});
                }
            } else {
                color[u] = 2;
                stack.pop_back();
            }
        }
    }
    return false;
}

OrientationSearchResult random_orientation_search(const TwoComplex& k,
                                                  const PathologyReport& pathology,
                                                  std::uint64_t seed, long max_attempts) {
    OrientationSearchResult result;
    if (!pathology.good_walls) {
        result.status = OrientationSearchResult::Status::refused;
        result.refusal_reason =
            "walls are not all embedded, two-sided and osculation-free; the "
            "per-vertex independence argument does not apply";
        return result;
    }

    const std::size_t wall_count = pathology.walls.walls.size();
    LinkCache cache(k);
    BitSource bits(seed);

    for (long attempt = 0; attempt < max_attempts; ++attempt) {
        WallOrientation o;
        o.sign.resize(wall_count);
        for (std::size_t w = 0; w < wall_count; ++w)
            o.sign[w] = bits.bit() ? 1 : -1;

        DirectedSkeleton ds = induce_directions(k, pathology, o);
        AscDescReport links = evaluate_links(k, ds, cache);
        ++result.stats.attempts;

        std::vector<int> failing;
        for (int x = 0; x < k.zero_cell_count(); ++x) {
            const VertexLinkReport& vr = links.per_vertex[x];
            if (!vr.ascending.nonempty) ++result.stats.ascending_empty;
            else if (!vr.ascending.connected) ++result.stats.ascending_disconnected;
            if (!vr.descending.nonempty) ++result.stats.descending_empty;
            else if (!vr.descending.connected) ++result.stats.descending_disconnected;
            if (!vr.ok()) failing.push_back(x);
        }

        if (failing.empty()) {
            result.status = OrientationSearchResult::Status::found;
            result.orientation = std::move(o);
            return result;
        }
        if (result.best_failing_vertices < 0 ||
            static_cast<int>(failing.size()) < result.best_failing_vertices) {
            result.best_attempt = attempt;
            result.best_failing_vertices = static_cast<int>(failing.size());
            result.best_orientation = o;
            result.best_failing_list = std::move(failing);
        }
    }
    result.status = OrientationSearchResult::Status::exhausted;
    return result;
}

Certificate incoherence_certificate(const CoxeterPresentation& p,
                                    const PermutationQuotient& q,
                                    const TwoComplex& compressed,
                                    const PathologyReport& pathology,
                                    const OrientationSearchResult& search) {
    Certificate cert;
    cert.chi = euler_characteristic(p);
    cert.degree = compressed.zero_cell_count();
    cert.quotient_degree = q.degree;
    cert.dimension_at_most_2 = has_dimension_at_most_2(p);
    cert.good_walls = pathology.good_walls;
    cert.orientation_found = search.status == OrientationSearchResult::Status::found;
    cert.total_two_cells = compressed.two_cell_count();

    const std::optional<WallOrientation>& shown =
        cert.orientation_found ? search.orientation : search.best_orientation;
    if (shown) {
        DirectedSkeleton ds = induce_directions(compressed, pathology, *shown);
        cert.per_vertex = asc_desc_links(compressed, ds).per_vertex;
        cert.positive_closed_path = has_positive_closed_path(compressed, ds);
        cert.lawful_two_cells = lawful_subcomplex(compressed, ds).two_cell_count();
        cert.orientation = *shown;
    }

    if (!cert.dimension_at_most_2)
        cert.missing.push_back("presentation has a finite 3-generator subgroup (dimension > 2)");
    if (!cert.good_walls) cert.missing.push_back("wall pathologies present");
    if (!cert.orientation_found)
        cert.missing.push_back("no orientation found with all links nonempty and connected");
    else if (!cert.positive_closed_path)
        cert.missing.push_back("no positively directed closed path");

    cert.full = cert.missing.empty();
    if (cert.full) {
        cert.conclusions.push_back(
            "every ascending and descending link is nonempty and connected: the kernel of "
            "the induced epimorphism to Z is finitely generated (Bestvina-Brady criterion)");
        if (cert.chi > 0)
            cert.conclusions.push_back(
                "chi = " + to_string(cert.chi) +
                " > 0: the finitely generated kernel is an infinite-index normal subgroup "
                "that can be neither free nor of finite index (Bieri), so it is not finitely "
                "presented and the group is incoherent");
        else
            cert.conclusions.push_back("chi = " + to_string(cert.chi) +
                                       " <= 0: kernel finitely generated only; incoherence "
                                       "not concluded");
    } else {
        cert.conclusions.push_back("partial certificate: hypotheses missing");
    }
    return cert;
}

}  // namespace coxwalls
