#include "coxwalls/walls.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace coxwalls {

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

WallSet extract_walls(const TwoComplex& k) {
    Dsu dsu(k.one_cell_count());
    std::vector<std::pair<int, WallArc>> arcs;  // (any member edge, arc)
    for (int f = 0; f < k.two_cell_count(); ++f) {
        const auto& boundary = k.two_cell(f).boundary;
        if (boundary.size() % 2 != 0)
            throw std::invalid_argument("extract_walls: 2-cell with odd boundary length");
        const int half = static_cast<int>(boundary.size()) / 2;
        for (int t = 0; t < half; ++t) {
            int e = boundary[t].edge;
            int o = boundary[t + half].edge;
            dsu.unite(e, o);
            arcs.push_back({e, {f, t, t + half}});
        }
    }

    // wall ids ordered by smallest member 1-cell
    WallSet ws;
    ws.one_cell_to_wall.assign(k.one_cell_count(), -1);
    std::map<int, int> root_to_wall;
    for (int e = 0; e < k.one_cell_count(); ++e) {
        int root = dsu.find(e);
        auto [it, fresh] = root_to_wall.try_emplace(root, static_cast<int>(ws.walls.size()));
        if (fresh) ws.walls.push_back({it->second, {}, {}});
        ws.one_cell_to_wall[e] = it->second;
        ws.walls[it->second].dual_one_cells.push_back(e);
    }
    for (auto& [e, arc] : arcs)
        ws.walls[ws.one_cell_to_wall[e]].arcs.push_back(arc);
    return ws;
}

std::vector<std::optional<EmbeddingIssue>> embeddedness(const TwoComplex& k,
                                                        const WallSet& ws) {
    std::vector<std::optional<EmbeddingIssue>> issues(ws.walls.size());
    for (const Wall& w : ws.walls) {
        std::map<int, int> arcs_in_cell;
        for (const WallArc& arc : w.arcs) {
            if (++arcs_in_cell[arc.cell] >= 2) {
                issues[w.id] = EmbeddingIssue{EmbeddingIssue::Kind::two_arcs_in_cell,
                                              arc.cell, -1};
                break;
            }
            const auto& boundary = k.two_cell(arc.cell).boundary;
            if (boundary[arc.pos_a].edge == boundary[arc.pos_b].edge) {
                issues[w.id] = EmbeddingIssue{EmbeddingIssue::Kind::arc_endpoints_coincide,
                                              arc.cell, boundary[arc.pos_a].edge};
                break;
            }
        }
    }
    return issues;
}

TwoSidedResult two_sidedness(const TwoComplex& k, const WallSet& ws) {
    TwoSidedResult result;
    result.two_sided.assign(ws.walls.size(), 0);
    result.direction.assign(k.one_cell_count(), 0);
    result.contradiction.resize(ws.walls.size());

    // adjacency of the wall graph: per 1-cell, the incident arcs
    std::vector<std::vector<const WallArc*>> incident(k.one_cell_count());
    for (const Wall& w : ws.walls)
        for (const WallArc& arc : w.arcs) {
            const auto& boundary = k.two_cell(arc.cell).boundary;
            incident[boundary[arc.pos_a].edge].push_back(&arc);
            incident[boundary[arc.pos_b].edge].push_back(&arc);
        }

    auto arc_ends = [&](const WallArc& arc) {
        const auto& boundary = k.two_cell(arc.cell).boundary;
        // required relation between the orientation bits of the two dual
        // 1-cells: opposite as traversed, i.e. o_a ^ o_b = d_a ^ d_b ^ 1
        int ea = boundary[arc.pos_a].edge, eb = boundary[arc.pos_b].edge;
        int da = boundary[arc.pos_a].forward ? 0 : 1;
        int db = boundary[arc.pos_b].forward ? 0 : 1;
        return std::tuple{ea, eb, da ^ db ^ 1};
    };

    std::vector<char> assigned(k.one_cell_count(), 0);
    std::vector<std::pair<int, const WallArc*>> parent(k.one_cell_count(), {-1, nullptr});

    for (const Wall& w : ws.walls) {
        bool consistent = true;
        for (int root : w.dual_one_cells) {
            if (assigned[root]) continue;
            assigned[root] = 1;
            result.direction[root] = 0;
            std::vector<int> queue{root};
            for (std::size_t head = 0; head < queue.size() && consistent; ++head) {
                int e = queue[head];
                for (const WallArc* arc : incident[e]) {
                    auto [ea, eb, rel] = arc_ends(*arc);
                    int other = (ea == e) ? eb : ea;
                    char want = static_cast<char>(result.direction[e] ^ rel);
                    if (ea == eb) {
                        // self-loop arc: consistent only when rel == 0
                        if (rel != 0) {
                            consistent = false;
                            result.contradiction[w.id] = {*arc};
                            break;
                        }
                        continue;
                    }
                    if (!assigned[other]) {
                        assigned[other] = 1;
                        result.direction[other] = want;
                        parent[other] = {e, arc};
                        queue.push_back(other);
                    } else if (result.direction[other] != want) {
                        // odd cycle: the two tree paths plus this arc
                        consistent = false;
                        std::vector<WallArc> cycle{*arc};
                        for (int v : {e, other})
                            for (int u = v; parent[u].second != nullptr; u = parent[u].first)
                                cycle.push_back(*parent[u].second);
                        result.contradiction[w.id] = std::move(cycle);
                        break;
                    }
                }
            }
            if (!consistent) break;
        }
        result.two_sided[w.id] = consistent ? 1 : 0;
    }
    return result;
}

std::vector<std::vector<OsculationPoint>> self_osculations(const TwoComplex& k,
                                                           const WallSet& ws) {
    // adjacency lists per (wall, 0-cell), built by walking incidences
    std::map<std::pair<int, int>, std::vector<WallAdjacency>> adjacency;

    // at link vertices: each incident 1-cell end is dual to its wall
    for (int e = 0; e < k.one_cell_count(); ++e) {
        const OneCell& c = k.one_cell(e);
        int w = ws.one_cell_to_wall[e];
        adjacency[{w, c.v0}].push_back(
            {WallAdjacency::Kind::at_vertex, e, 0, -1, -1});
        adjacency[{w, c.v1}].push_back(
            {WallAdjacency::Kind::at_vertex, e, 1, -1, -1});
    }

    // at link edges: a corner of a cell the wall crosses while being dual to
    // neither corner 1-cell
    for (int f = 0; f < k.two_cell_count(); ++f) {
        const auto& boundary = k.two_cell(f).boundary;
        const int len = static_cast<int>(boundary.size());
        std::vector<int> walls_through;
        for (int t = 0; t < len / 2; ++t)
            walls_through.push_back(ws.one_cell_to_wall[boundary[t].edge]);
        std::sort(walls_through.begin(), walls_through.end());
        walls_through.erase(std::unique(walls_through.begin(), walls_through.end()),
                            walls_through.end());
        for (int pos = 0; pos < len; ++pos) {
            int x = k.step_source(boundary[pos]);
            int w_in = ws.one_cell_to_wall[boundary[(pos + len - 1) % len].edge];
            int w_out = ws.one_cell_to_wall[boundary[pos].edge];
            for (int w : walls_through) {
                if (w == w_in || w == w_out) continue;
                adjacency[{w, x}].push_back(
                    {WallAdjacency::Kind::at_edge, -1, -1, f, pos});
            }
        }
    }

    std::vector<std::vector<OsculationPoint>> result(ws.walls.size());
    for (auto& [key, list] : adjacency)
        if (list.size() >= 2)
            result[key.first].push_back({key.second, std::move(list)});
    return result;
}

PathologyReport pathology_report(const TwoComplex& k) {
    PathologyReport report;
    report.walls = extract_walls(k);
    auto embed = embeddedness(k, report.walls);
    auto sided = two_sidedness(k, report.walls);
    auto oscul = self_osculations(k, report.walls);
    report.direction = sided.direction;

    report.good_walls = true;
    for (const Wall& w : report.walls.walls) {
        WallReport wr;
        wr.wall = w.id;
        wr.embedded = !embed[w.id].has_value();
        wr.embedding_issue = embed[w.id];
        wr.two_sided = sided.two_sided[w.id] != 0;
        wr.contradiction = sided.contradiction[w.id];
        wr.osculations = oscul[w.id];
        if (!wr.embedded || !wr.two_sided || !wr.osculations.empty())
            report.good_walls = false;
        report.reports.push_back(std::move(wr));
    }
    return report;
}

}  // namespace coxwalls
