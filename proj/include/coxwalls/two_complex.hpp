#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "coxwalls/coxeter.hpp"

namespace coxwalls {

// Unoriented 1-cell with a reference direction v0 -> v1 for bookkeeping.
// v0 == v1 is a loop. `label` is a generator index when the complex comes
// from a presentation.
struct OneCell {
    int v0 = 0;
    int v1 = 0;
    std::optional<int> label;
};

// One traversal step of a 2-cell boundary: `forward` means v0 -> v1.
struct BoundaryStep {
    int edge = 0;
    bool forward = true;

    friend bool operator==(const BoundaryStep&, const BoundaryStep&) = default;
    friend auto operator<=>(const BoundaryStep&, const BoundaryStep&) = default;
};

// 2-cell with a cyclic closed boundary path. `relator` tags cells built from
// a presentation: {i,i} marks an a_i^2 digon, {i,j} with i < j a (a_i a_j)^m
// polygon. Compression relies on these tags.
struct TwoCell {
    std::vector<BoundaryStep> boundary;
    std::optional<std::pair<int, int>> relator;
};

// Combinatorial 2-complex: indexed 0-cells, 1-cells with endpoints, 2-cells
// with cyclic boundary words. Immutable once built (builders fill it, users
// only read).
class TwoComplex {
public:
    TwoComplex() = default;
    explicit TwoComplex(int zero_cells) : zero_cells_(zero_cells) {}

    int zero_cell_count() const { return zero_cells_; }
    int one_cell_count() const { return static_cast<int>(one_cells_.size()); }
    int two_cell_count() const { return static_cast<int>(two_cells_.size()); }

    const OneCell& one_cell(int e) const { return one_cells_.at(e); }
    const TwoCell& two_cell(int f) const { return two_cells_.at(f); }
    const std::vector<OneCell>& one_cells() const { return one_cells_; }
    const std::vector<TwoCell>& two_cells() const { return two_cells_; }

    int add_zero_cell() { return zero_cells_++; }
    int add_one_cell(int v0, int v1, std::optional<int> label = std::nullopt);
    int add_two_cell(std::vector<BoundaryStep> boundary,
                     std::optional<std::pair<int, int>> relator = std::nullopt);

    int step_source(const BoundaryStep& s) const;
    int step_target(const BoundaryStep& s) const;

    long euler_characteristic() const;  // V - E + F

    // checks endpoint ranges and that every boundary is a closed edge path
    void validate() const;

private:
    int zero_cells_ = 0;
    std::vector<OneCell> one_cells_;
    std::vector<TwoCell> two_cells_;
};

// one 0-cell, r labelled loops, one digon per generator and one 2m_ij-gon
// per finite pair, boundary word (a_i a_j)^{m_ij}
TwoComplex presentation_complex(const CoxeterPresentation& p);

// A vertex of link(x) is an incident 1-cell end (loops contribute both ends).
struct LinkVertex {
    int edge = 0;
    int end = 0;  // 0 = the v0 end, 1 = the v1 end

    friend bool operator==(const LinkVertex&, const LinkVertex&) = default;
    friend auto operator<=>(const LinkVertex&, const LinkVertex&) = default;
};

// An edge of link(x) is a corner of a 2-cell at x. Corner `pos` of cell
// `cell` sits between boundary steps pos-1 (mod len) and pos; it joins the
// arriving end of the former and the departing end of the latter.
struct LinkEdge {
    int cell = 0;
    int pos = 0;
    int a = 0;  // indices into LinkGraph::vertices
    int b = 0;
};

struct LinkGraph {
    int base_vertex = 0;
    std::vector<LinkVertex> vertices;
    std::vector<LinkEdge> edges;

    int vertex_index(const LinkVertex& v) const;  // -1 if absent
};

LinkGraph link(const TwoComplex& k, int x);

}  // namespace coxwalls
