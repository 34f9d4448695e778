#include "coxwalls/two_complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace coxwalls {

int TwoComplex::add_one_cell(int v0, int v1, std::optional<int> label) {
    if (v0 < 0 || v0 >= zero_cells_ || v1 < 0 || v1 >= zero_cells_)
        throw std::invalid_argument("one-cell endpoint out of range");
    one_cells_.push_back({v0, v1, label});
    return one_cell_count() - 1;
}

int TwoComplex::add_two_cell(std::vector<BoundaryStep> boundary,
                             std::optional<std::pair<int, int>> relator) {
    two_cells_.push_back({std::move(boundary), relator});
    const TwoCell& f = two_cells_.back();
    if (f.boundary.empty())
        throw std::invalid_argument("two-cell with empty boundary");
    for (std::size_t t = 0; t < f.boundary.size(); ++t) {
        const BoundaryStep& cur = f.boundary[t];
        const BoundaryStep& nxt = f.boundary[(t + 1) % f.boundary.size()];
        if (cur.edge < 0 || cur.edge >= one_cell_count())
            throw std::invalid_argument("two-cell boundary references missing edge");
        if (step_target(cur) != step_source(nxt))
            throw std::invalid_argument("two-cell boundary is not a closed edge path");
    }
    return two_cell_count() - 1;
}

int TwoComplex::step_source(const BoundaryStep& s) const {
    const OneCell& e = one_cells_.at(s.edge);
    return s.forward ? e.v0 : e.v1;
}

int TwoComplex::step_target(const BoundaryStep& s) const {
    const OneCell& e = one_cells_.at(s.edge);
    return s.forward ? e.v1 : e.v0;
}

long TwoComplex::euler_characteristic() const {
    return static_cast<long>(zero_cells_) - one_cell_count() + two_cell_count();
}

void TwoComplex::validate() const {
    for (const OneCell& e : one_cells_)
        if (e.v0 < 0 || e.v0 >= zero_cells_ || e.v1 < 0 || e.v1 >= zero_cells_)
            throw std::logic_error("one-cell endpoint out of range");
    for (const TwoCell& f : two_cells_) {
        if (f.boundary.empty())
            throw std::logic_error("two-cell with empty boundary");
        for (std::size_t t = 0; t < f.boundary.size(); ++t) {
            const BoundaryStep& cur = f.boundary[t];
            const BoundaryStep& nxt = f.boundary[(t + 1) % f.boundary.size()];
            if (step_target(cur) != step_source(nxt))
                throw std::logic_error("two-cell boundary is not closed");
        }
    }
}

TwoComplex presentation_complex(const CoxeterPresentation& p) {
    TwoComplex x(1);
    for (int i = 1; i <= p.rank(); ++i)
        x.add_one_cell(0, 0, i);  // loop labelled a_i, id i-1
    for (int i = 1; i <= p.rank(); ++i)
        x.add_two_cell({{i - 1, true}, {i - 1, true}}, std::make_pair(i, i));
    for (auto [i, j] : p.finite_pairs()) {
        std::vector<BoundaryStep> word;
        for (int t = 0; t < *p.exponent(i, j); ++t) {
            word.push_back({i - 1, true});
            word.push_back({j - 1, true});
        }
        x.add_two_cell(std::move(word), std::make_pair(i, j));
    }
    return x;
}

int LinkGraph::vertex_index(const LinkVertex& v) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    if (it == vertices.end() || !(*it == v)) return -1;
    return static_cast<int>(it - vertices.begin());
}

LinkGraph link(const TwoComplex& k, int x) {
    if (x < 0 || x >= k.zero_cell_count())
        throw std::invalid_argument("link: no such zero-cell");
    LinkGraph lg;
    lg.base_vertex = x;
    for (int e = 0; e < k.one_cell_count(); ++e) {
        const OneCell& c = k.one_cell(e);
        if (c.v0 == x) lg.vertices.push_back({e, 0});
        if (c.v1 == x) lg.vertices.push_back({e, 1});
    }
    std::sort(lg.vertices.begin(), lg.vertices.end());

    for (int f = 0; f < k.two_cell_count(); ++f) {
        const auto& boundary = k.two_cell(f).boundary;
        const int len = static_cast<int>(boundary.size());
        for (int pos = 0; pos < len; ++pos) {
            const BoundaryStep& out = boundary[pos];
            if (k.step_source(out) != x) continue;
            const BoundaryStep& in = boundary[(pos + len - 1) % len];
            LinkVertex arriving{in.edge, in.forward ? 1 : 0};
            LinkVertex departing{out.edge, out.forward ? 0 : 1};
            lg.edges.push_back(
                {f, pos, lg.vertex_index(arriving), lg.vertex_index(departing)});
        }
    }
    return lg;
}

}  // namespace coxwalls
