#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coxwalls/two_complex.hpp"

namespace coxwalls {

// One passage of a wall through a 2-cell: the pair of opposite boundary
// positions (pos, pos + half) whose 1-cells the wall is dual to.
struct WallArc {
    int cell = 0;
    int pos_a = 0;
    int pos_b = 0;

    friend bool operator==(const WallArc&, const WallArc&) = default;
};

// Equivalence class of 1-cells under the relation generated by "opposite
// edges of a 2-cell", together with its graph: vertices are the dual
// 1-cells, edges are the arcs.
struct Wall {
    int id = 0;
    std::vector<int> dual_one_cells;  // sorted
    std::vector<WallArc> arcs;
};

struct WallSet {
    std::vector<Wall> walls;
    std::vector<int> one_cell_to_wall;  // total map, consistent with dual_one_cells
};

// Disjoint-set closure over all opposite-position pairs of all 2-cells.
// Every boundary must have even length.
WallSet extract_walls(const TwoComplex& k);

// A wall fails to embed when two of its arcs cross inside one 2-cell, or an
// arc's two opposite positions carry the same 1-cell (the wall runs through
// the cell between two sides glued to one edge).
struct EmbeddingIssue {
    enum class Kind { two_arcs_in_cell, arc_endpoints_coincide };
    Kind kind = Kind::two_arcs_in_cell;
    int cell = 0;
    int one_cell = -1;  // the repeated 1-cell, for arc_endpoints_coincide
};

std::vector<std::optional<EmbeddingIssue>> embeddedness(const TwoComplex& k,
                                                        const WallSet& ws);

// Two-sidedness: each arc forces the two dual 1-cells to carry opposite
// orientations as traversed along the cell boundary; a wall is two-sided iff
// this constraint system is consistent. On success, `direction` holds a
// witness orientation bit per 1-cell (0 = the reference v0->v1 direction);
// on failure, `contradiction` is a closed chain of arcs forcing an edge to
// oppose itself.
struct TwoSidedResult {
    std::vector<char> two_sided;               // per wall
    std::vector<char> direction;               // per 1-cell, meaningful for two-sided walls
    std::vector<std::vector<WallArc>> contradiction;  // per wall, empty when two-sided
};

TwoSidedResult two_sidedness(const TwoComplex& k, const WallSet& ws);

// Adjacency of a wall at a 0-cell: at a link vertex (dual to the incident
// 1-cell end) or at a link edge (an arc in the corner's 2-cell while not
// dual to either corner 1-cell). Two or more adjacencies at one 0-cell is a
// self-osculation.
struct WallAdjacency {
    enum class Kind { at_vertex, at_edge };
    Kind kind = Kind::at_vertex;
    int edge = -1;  // at_vertex: the incident 1-cell
    int end = -1;   // at_vertex: which end (0/1)
    int cell = -1;  // at_edge: the 2-cell of the corner
    int pos = -1;   // at_edge: the corner position
};

struct OsculationPoint {
    int vertex = 0;
    std::vector<WallAdjacency> adjacencies;
};

std::vector<std::vector<OsculationPoint>> self_osculations(const TwoComplex& k,
                                                           const WallSet& ws);

struct WallReport {
    int wall = 0;
    bool embedded = false;
    std::optional<EmbeddingIssue> embedding_issue;
    bool two_sided = false;
    std::vector<WallArc> contradiction;
    std::vector<OsculationPoint> osculations;
};

struct PathologyReport {
    WallSet walls;
    std::vector<WallReport> reports;
    std::vector<char> direction;  // witness orientations from two_sidedness
    bool good_walls = false;      // every wall embedded, two-sided, osculation-free
};

PathologyReport pathology_report(const TwoComplex& k);

}  // namespace coxwalls
