#include "coxwalls/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace coxwalls {

json to_json(const CoxeterPresentation& p) {
    json exponents = json::array();
    for (auto [i, j] : p.finite_pairs())
        exponents.push_back({{"i", i}, {"j", j}, {"m", *p.exponent(i, j)}});
    return {{"rank", p.rank()}, {"exponents", exponents}};
}

CoxeterPresentation presentation_from_json(const json& j) {
    if (!j.contains("rank") || !j["rank"].is_number_integer())
        throw std::invalid_argument("presentation JSON: missing integer \"rank\"");
    CoxeterPresentation p(j["rank"].get<int>());
    for (const json& entry : j.value("exponents", json::array())) {
        int i = entry.at("i").get<int>();
        int jj = entry.at("j").get<int>();
        const json& m = entry.at("m");
        if (m.is_string()) {
            if (m.get<std::string>() != "inf")
                throw std::invalid_argument("presentation JSON: bad exponent string");
            p.set_exponent(i, jj, infinite_exponent);
        } else {
            p.set_exponent(i, jj, m.get<int>());
        }
    }
    return p;
}

json to_json(const PermutationQuotient& q) {
    json generators = json::array();
    for (const Permutation& g : q.generator_images) {
        json images = json::array();
        for (int x : g) images.push_back(x + 1);
        generators.push_back(images);
    }
    return {{"degree", q.degree}, {"generators", generators}};
}

PermutationQuotient quotient_from_json(const json& j) {
    PermutationQuotient q;
    q.degree = j.at("degree").get<int>();
    if (q.degree < 1) throw std::invalid_argument("quotient JSON: degree must be >= 1");
    for (const json& list : j.at("generators")) {
        Permutation g;
        for (const json& v : list) {
            int image = v.get<int>();
            if (image < 1 || image > q.degree)
                throw std::invalid_argument("quotient JSON: image out of range");
            g.push_back(image - 1);
        }
        if (static_cast<int>(g.size()) != q.degree || !is_permutation(g))
            throw std::invalid_argument("quotient JSON: generator is not a permutation");
        q.generator_images.push_back(std::move(g));
    }
    return q;
}

json to_json(const TwoComplex& k) {
    json one_cells = json::array();
    for (int e = 0; e < k.one_cell_count(); ++e) {
        const OneCell& c = k.one_cell(e);
        json cell = {{"id", e}, {"v", {c.v0, c.v1}}};
        if (c.label) cell["label"] = *c.label;
        one_cells.push_back(cell);
    }
    json two_cells = json::array();
    for (int f = 0; f < k.two_cell_count(); ++f) {
        const TwoCell& c = k.two_cell(f);
        json boundary = json::array();
        for (const BoundaryStep& s : c.boundary)
            boundary.push_back({s.edge, s.forward ? 1 : -1});
        json cell = {{"id", f}, {"boundary", boundary}};
        if (c.relator) cell["relator"] = {c.relator->first, c.relator->second};
        two_cells.push_back(cell);
    }
    return {{"zero_cells", k.zero_cell_count()},
            {"one_cells", one_cells},
            {"two_cells", two_cells}};
}

TwoComplex complex_from_json(const json& j) {
    TwoComplex k(j.at("zero_cells").get<int>());
    for (const json& cell : j.value("one_cells", json::array())) {
        std::optional<int> label;
        if (cell.contains("label")) label = cell["label"].get<int>();
        k.add_one_cell(cell.at("v").at(0).get<int>(), cell.at("v").at(1).get<int>(), label);
    }
    for (const json& cell : j.value("two_cells", json::array())) {
        std::vector<BoundaryStep> boundary;
        for (const json& step : cell.at("boundary")) {
            int dir = step.at(1).get<int>();
            if (dir != 1 && dir != -1)
                throw std::invalid_argument("complex JSON: boundary direction must be +-1");
            boundary.push_back({step.at(0).get<int>(), dir == 1});
        }
        std::optional<std::pair<int, int>> relator;
        if (cell.contains("relator"))
            relator = std::make_pair(cell["relator"].at(0).get<int>(),
                                     cell["relator"].at(1).get<int>());
        k.add_two_cell(std::move(boundary), relator);
    }
    k.validate();
    return k;
}

json to_json(const PartitionFamily& f) {
    json partitions = json::array();
    for (const Partition& p : f.partitions) {
        json values = json::array();
        for (std::uint8_t v : p.value) values.push_back(static_cast<int>(v));
        partitions.push_back(values);
    }
    return {{"r", f.r}, {"partitions", partitions}};
}

PartitionFamily family_from_json(const json& j) {
    PartitionFamily f;
    f.r = j.at("r").get<int>();
    for (const json& list : j.at("partitions")) {
        Partition p;
        for (const json& v : list) {
            int value = v.get<int>();
            if (value < 1 || value > 4)
                throw std::invalid_argument("family JSON: partition values must be 1..4");
            p.value.push_back(static_cast<std::uint8_t>(value));
        }
        if (p.r() != f.r)
            throw std::invalid_argument("family JSON: partition of wrong ground set");
        f.partitions.push_back(std::move(p));
    }
    return f;
}

json to_json(const WallOrientation& o) {
    json signs = json::object();
    for (std::size_t w = 0; w < o.sign.size(); ++w)
        signs[std::to_string(w)] = static_cast<int>(o.sign[w]);
    return {{"wall_signs", signs}};
}

WallOrientation orientation_from_json(const json& j) {
    const json& signs = j.at("wall_signs");
    WallOrientation o;
    o.sign.resize(signs.size());
    for (auto it = signs.begin(); it != signs.end(); ++it) {
        std::size_t w = std::stoul(it.key());
        int s = it.value().get<int>();
        if (w >= o.sign.size() || (s != 1 && s != -1))
            throw std::invalid_argument("orientation JSON: bad wall sign entry");
        o.sign[w] = static_cast<std::int8_t>(s);
    }
    return o;
}

namespace {

json to_json(const WallAdjacency& a) {
    if (a.kind == WallAdjacency::Kind::at_vertex)
        return {{"kind", "vertex"}, {"edge", a.edge}, {"end", a.end}};
    return {{"kind", "edge"}, {"cell", a.cell}, {"pos", a.pos}};
}

json to_json(const LinkVerdict& v) {
    return {{"nonempty", v.nonempty},
            {"connected", v.connected},
            {"vertices", v.vertices},
            {"edges", v.edges}};
}

}  // namespace

json to_json(const PathologyReport& report) {
    json walls = json::array();
    for (const WallReport& wr : report.reports) {
        const Wall& w = report.walls.walls[wr.wall];
        json arcs = json::array();
        for (const WallArc& arc : w.arcs)
            arcs.push_back({{"cell", arc.cell}, {"pos", {arc.pos_a, arc.pos_b}}});
        json entry = {{"id", w.id},
                      {"dual_one_cells", w.dual_one_cells},
                      {"arcs", arcs},
                      {"embedded", wr.embedded},
                      {"two_sided", wr.two_sided}};
        if (wr.embedding_issue) {
            entry["embedding_issue"] = {
                {"kind", wr.embedding_issue->kind == EmbeddingIssue::Kind::two_arcs_in_cell
                             ? "two arcs in one 2-cell"
                             : "arc endpoints on one 1-cell"},
                {"cell", wr.embedding_issue->cell}};
            if (wr.embedding_issue->one_cell >= 0)
                entry["embedding_issue"]["one_cell"] = wr.embedding_issue->one_cell;
        }
        if (!wr.contradiction.empty()) {
            json cycle = json::array();
            for (const WallArc& arc : wr.contradiction)
                cycle.push_back({{"cell", arc.cell}, {"pos", {arc.pos_a, arc.pos_b}}});
            entry["contradiction"] = cycle;
        }
        json osculations = json::array();
        for (const OsculationPoint& op : wr.osculations) {
            json adjacencies = json::array();
            for (const WallAdjacency& a : op.adjacencies) adjacencies.push_back(to_json(a));
            osculations.push_back({{"vertex", op.vertex}, {"adjacencies", adjacencies}});
        }
        entry["self_osculations"] = osculations;
        walls.push_back(entry);
    }
    return {{"good_walls", report.good_walls},
            {"wall_count", static_cast<int>(report.walls.walls.size())},
            {"walls", walls}};
}

json to_json(const OrientationSearchResult& result) {
    json j;
    switch (result.status) {
        case OrientationSearchResult::Status::found: j["status"] = "found"; break;
        case OrientationSearchResult::Status::exhausted: j["status"] = "exhausted"; break;
        case OrientationSearchResult::Status::refused: j["status"] = "refused"; break;
    }
    if (!result.refusal_reason.empty()) j["reason"] = result.refusal_reason;
    if (result.orientation) j["orientation"] = to_json(*result.orientation);
    j["stats"] = {{"attempts", result.stats.attempts},
                  {"ascending_empty", result.stats.ascending_empty},
                  {"ascending_disconnected", result.stats.ascending_disconnected},
                  {"descending_empty", result.stats.descending_empty},
                  {"descending_disconnected", result.stats.descending_disconnected}};
    if (result.best_attempt >= 0) {
        j["best_attempt"] = {{"attempt", result.best_attempt},
                             {"failing_vertices", result.best_failing_vertices},
                             {"failing", result.best_failing_list}};
        if (result.best_orientation)
            j["best_attempt"]["orientation"] = to_json(*result.best_orientation);
    }
    return j;
}

json to_json(const Certificate& cert) {
    json per_vertex = json::array();
    for (const VertexLinkReport& vr : cert.per_vertex)
        per_vertex.push_back(
            {{"ascending", to_json(vr.ascending)}, {"descending", to_json(vr.descending)}});
    json j = {{"status", cert.full ? "full" : "partial"},
              {"missing", cert.missing},
              {"chi", to_string(cert.chi)},
              {"degree", cert.degree},
              {"quotient_degree", cert.quotient_degree},
              {"dimension_at_most_2", cert.dimension_at_most_2},
              {"good_walls", cert.good_walls},
              {"orientation_found", cert.orientation_found},
              {"positive_closed_path", cert.positive_closed_path},
              {"total_two_cells", cert.total_two_cells},
              {"conclusions", cert.conclusions},
              {"per_vertex", per_vertex}};
    if (cert.orientation) j["orientation"] = to_json(*cert.orientation);
    if (cert.lawful_two_cells >= 0) j["lawful_two_cells"] = cert.lawful_two_cells;
    return j;
}

std::string dot_skeleton(const TwoComplex& k) {
    std::ostringstream out;
    out << "graph skeleton {\n";
    for (int v = 0; v < k.zero_cell_count(); ++v) out << "  " << v << ";\n";
    for (int e = 0; e < k.one_cell_count(); ++e) {
        const OneCell& c = k.one_cell(e);
        out << "  " << c.v0 << " -- " << c.v1;
        if (c.label) out << " [label=\"a" << *c.label << "\"]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string dot_walls(const TwoComplex& k, const WallSet& ws) {
    std::ostringstream out;
    out << "graph walls {\n";
    for (int v = 0; v < k.zero_cell_count(); ++v) out << "  " << v << ";\n";
    for (int e = 0; e < k.one_cell_count(); ++e) {
        const OneCell& c = k.one_cell(e);
        int w = ws.one_cell_to_wall[e];
        out << "  " << c.v0 << " -- " << c.v1 << " [wall=" << w << ", colorscheme=set312, color="
            << (w % 12) + 1;
        if (c.label) out << ", label=\"a" << *c.label << "\"";
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

std::string probe_csv(const LinkModel& model, const MonteCarloResult& mc, bool header) {
    std::optional<ExactFailure> exact;
    if (model.bit_count() <= 24) exact = exact_failure_small(model);

    std::ostringstream out;
    if (header) out << "r,m,quantity,trials,count,estimate,stderr,exact,union_bound\n";
    out.precision(10);
    auto row = [&](const std::string& name, long count, const Rational* exact_value,
                   const Rational* bound) {
        out << model.r << "," << model.m << "," << name << "," << mc.trials << "," << count
            << "," << mc.estimate(count) << "," << mc.standard_error(count) << ",";
        if (exact_value) out << to_string(*exact_value);
        out << ",";
        if (bound) out << to_string(*bound);
        out << "\n";
    };
    Rational union_bound = p1(model.r) + p2_bound(model.r, model.m);
    Rational both_bound = total_failure_bound(model.r, model.m);
    Rational p1_value = p1(model.r);
    row("ascending_fails", mc.asc_fail_count, exact ? &exact->asc_fails : nullptr,
        &union_bound);
    row("descending_fails", mc.desc_fail_count, exact ? &exact->desc_fails : nullptr,
        &union_bound);
    row("either_fails", mc.either_fail_count, exact ? &exact->either_fails : nullptr,
        &both_bound);
    row("no_ascending_vertex", mc.no_asc_vertex_count,
        exact ? &exact->no_ascending_vertex : nullptr, &p1_value);
    row("no_descending_vertex", mc.no_desc_vertex_count,
        exact ? &exact->no_descending_vertex : nullptr, &p1_value);
    return out.str();
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void save_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

}  // namespace coxwalls
