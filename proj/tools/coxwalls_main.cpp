// Command-line driver for the Coxeter wall toolkit: batch, non-interactive,
// deterministic under fixed seeds. Exit codes: 0 success, 1 hypothesis
// failure (partial results emitted), 2 input error.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "coxwalls/coxeter.hpp"
#include "coxwalls/covers.hpp"
#include "coxwalls/curvature.hpp"
#include "coxwalls/json_io.hpp"
#include "coxwalls/morse.hpp"
#include "coxwalls/partitions.hpp"
#include "coxwalls/probability.hpp"

using namespace coxwalls;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_hypothesis = 1;
constexpr int exit_input = 2;

struct PresentationInput {
    int rank = 0;
    int m = 0;
    std::string file;

    void attach(CLI::App* cmd) {
        cmd->add_option("--rank", rank, "rank of a uniform presentation");
        cmd->add_option("--m", m, "uniform exponent");
        cmd->add_option("--presentation", file, "presentation JSON file");
    }

    CoxeterPresentation load() const {
        if (!file.empty()) return presentation_from_json(load_json_file(file));
        if (rank > 0 && m > 0) return uniform(rank, m);
        throw std::invalid_argument("need --presentation or both --rank and --m");
    }
};

struct QuotientInput {
    std::string spec;

    void attach(CLI::App* cmd) {
        cmd->add_option("--quotient", spec,
                        "quotient JSON file, 'star' (transposition star, exponent 3) or "
                        "'dihedral' (per-pair dihedral blocks, uniform exponent)")
            ->required();
    }

    PermutationQuotient load(const CoxeterPresentation& p) const {
        if (spec == "star") return star_transposition_quotient(p.rank());
        if (spec == "dihedral") {
            auto m = p.uniform_exponent();
            if (!m)
                throw std::invalid_argument(
                    "the dihedral quotient needs a uniform finite exponent");
            return uniform_dihedral_quotient(p.rank(), *m);
        }
        return quotient_from_json(load_json_file(spec));
    }
};

void emit(const json& j, const std::string& out_path) {
    std::string text = j.dump(2) + "\n";
    if (!out_path.empty()) save_text_file(out_path, text);
    std::cout << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coxwalls: covers of Coxeter presentation complexes, wall analysis, "
                 "orientation search, and the supporting probability bounds"};
    app.require_subcommand(1);

    // ---- chi ----
    PresentationInput chi_in;
    auto* cmd_chi = app.add_subcommand("chi", "Euler characteristic of a presentation");
    chi_in.attach(cmd_chi);

    // ---- dimension ----
    PresentationInput dim_in;
    auto* cmd_dimension =
        app.add_subcommand("dimension", "whether every 3-generator subgroup is infinite");
    dim_in.attach(cmd_dimension);

    // ---- cover ----
    PresentationInput cover_in;
    QuotientInput cover_q;
    std::string cover_out, cover_dot;
    auto* cmd_cover = app.add_subcommand("cover", "regular cover induced by a quotient");
    cover_in.attach(cmd_cover);
    cover_q.attach(cmd_cover);
    cmd_cover->add_option("--out", cover_out, "complex JSON output path");
    cmd_cover->add_option("--dot", cover_dot, "1-skeleton DOT output path");

    // ---- compress ----
    PresentationInput comp_in;
    QuotientInput comp_q;
    std::string comp_out, comp_dot;
    auto* cmd_compress = app.add_subcommand("compress", "compressed cover");
    comp_in.attach(cmd_compress);
    comp_q.attach(cmd_compress);
    cmd_compress->add_option("--out", comp_out, "complex JSON output path");
    cmd_compress->add_option("--dot", comp_dot, "1-skeleton DOT output path");

    // ---- walls ----
    PresentationInput walls_in;
    QuotientInput walls_q;
    std::string walls_report, walls_dot;
    auto* cmd_walls =
        app.add_subcommand("walls", "wall extraction and pathology report on the "
                                    "compressed cover");
    walls_in.attach(cmd_walls);
    walls_q.attach(cmd_walls);
    cmd_walls->add_option("--report", walls_report, "pathology JSON output path");
    cmd_walls->add_option("--dot", walls_dot, "wall-colored skeleton DOT output path");

    // ---- orient ----
    PresentationInput orient_in;
    QuotientInput orient_q;
    std::uint64_t orient_seed = 0;
    long orient_attempts = 1000;
    std::string orient_out;
    auto* cmd_orient = app.add_subcommand("orient", "random wall-orientation search");
    orient_in.attach(cmd_orient);
    orient_q.attach(cmd_orient);
    cmd_orient->add_option("--seed", orient_seed, "random seed")->required();
    cmd_orient->add_option("--max-attempts", orient_attempts, "attempt budget");
    cmd_orient->add_option("--out", orient_out, "search result JSON output path");

    // ---- certify ----
    PresentationInput cert_in;
    QuotientInput cert_q;
    std::uint64_t cert_seed = 0;
    long cert_attempts = 1000;
    std::string cert_out;
    auto* cmd_certify = app.add_subcommand(
        "certify", "full pipeline: cover, compress, walls, orient, certificate");
    cert_in.attach(cmd_certify);
    cert_q.attach(cmd_certify);
    cmd_certify->add_option("--seed", cert_seed, "random seed")->required();
    cmd_certify->add_option("--max-attempts", cert_attempts, "attempt budget");
    cmd_certify->add_option("--out", cert_out, "certificate JSON output path");

    // ---- partitions ----
    auto* cmd_partitions = app.add_subcommand("partitions", "separating partition families");
    cmd_partitions->require_subcommand(1);
    int fam_r = 0, fam_k = 0;
    std::uint64_t fam_seed = 0;
    long fam_attempts = 2000;
    std::string fam_method = "random", fam_out, fam_verify;
    auto* cmd_generate = cmd_partitions->add_subcommand("generate", "build a family");
    cmd_generate->add_option("--r", fam_r, "ground set size")->required();
    cmd_generate->add_option("--k", fam_k, "family size (default: the ceiling bound)");
    cmd_generate->add_option("--method", fam_method, "random or greedy");
    cmd_generate->add_option("--seed", fam_seed, "random seed")->required();
    cmd_generate->add_option("--max-attempts", fam_attempts, "attempt budget");
    cmd_generate->add_option("--out", fam_out, "family JSON output path");
    auto* cmd_verify = cmd_partitions->add_subcommand("verify", "check a family file");
    cmd_verify->add_option("--family", fam_verify, "family JSON file")->required();

    // ---- probe ----
    int probe_r = 0, probe_m = 0, probe_r_max = 0;
    long probe_trials = 0;
    std::uint64_t probe_seed = 0;
    std::string probe_csv_path;
    auto* cmd_probe =
        app.add_subcommand("probe", "Monte Carlo and exact link-model failure rates");
    cmd_probe->add_option("--r", probe_r, "link vertices")->required();
    cmd_probe->add_option("--r-max", probe_r_max, "sweep up to this many vertices");
    cmd_probe->add_option("--m", probe_m, "uniform exponent")->required();
    cmd_probe->add_option("--trials", probe_trials, "trial count per model")->required();
    cmd_probe->add_option("--seed", probe_seed, "random seed")->required();
    cmd_probe->add_option("--csv", probe_csv_path, "CSV output path");

    // ---- threshold ----
    int thr_m = 0;
    long thr_q = 0;
    auto* cmd_threshold = app.add_subcommand(
        "threshold", "smallest rank where the failure bound beats the degree bound");
    cmd_threshold->add_option("--m", thr_m, "uniform exponent")->required();
    cmd_threshold->add_option("--qsize", thr_q, "quotient size")->required();

    // ---- ramsey ----
    std::vector<long> ramsey_orders;
    auto* cmd_ramsey =
        app.add_subcommand("ramsey", "recursive multicolor Ramsey upper bound");
    cmd_ramsey->add_option("orders", ramsey_orders, "clique orders, one per color")
        ->required();

    // ---- curvature ----
    PresentationInput curv_in;
    std::string curv_quotient, curv_preset = "regular-euclidean", curv_out;
    auto* cmd_curvature = app.add_subcommand(
        "curvature", "angled-complex curvature and sectional-curvature verdicts");
    curv_in.attach(cmd_curvature);
    cmd_curvature->add_option("--quotient", curv_quotient,
                              "quotient ('star' or JSON file) for per-cell/vertex data");
    cmd_curvature->add_option("--preset", curv_preset, "angle preset (regular-euclidean)");
    cmd_curvature->add_option("--out", curv_out, "report JSON output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_input;
    }

    try {
        if (*cmd_chi) {
            std::cout << to_string(euler_characteristic(chi_in.load())) << "\n";
            return exit_ok;
        }

        if (*cmd_dimension) {
            std::cout << (has_dimension_at_most_2(dim_in.load()) ? "true" : "false") << "\n";
            return exit_ok;
        }

        if (*cmd_cover || *cmd_compress) {
            bool compressing = static_cast<bool>(*cmd_compress);
            const PresentationInput& in = compressing ? comp_in : cover_in;
            const QuotientInput& qin = compressing ? comp_q : cover_q;
            CoxeterPresentation p = in.load();
            PermutationQuotient q = qin.load(p);
            KernelCheck check = check_torsion_free_kernel(p, q);
            if (!check.ok()) {
                std::cout << "torsion-free-kernel check failed: " << check.diagnostic << "\n";
                return exit_hypothesis;
            }
            RegularCover cover = regular_cover(p, q);
            TwoComplex result =
                compressing ? compress(cover.complex, p) : cover.complex;
            std::cout << "degree " << cover.degree << ": " << result.zero_cell_count()
                      << " 0-cells, " << result.one_cell_count() << " 1-cells, "
                      << result.two_cell_count() << " 2-cells\n";
            const std::string& out = compressing ? comp_out : cover_out;
            const std::string& dot = compressing ? comp_dot : cover_dot;
            if (!out.empty()) save_text_file(out, to_json(result).dump(2) + "\n");
            if (!dot.empty()) save_text_file(dot, dot_skeleton(result));
            return exit_ok;
        }

        if (*cmd_walls) {
            CoxeterPresentation p = walls_in.load();
            PermutationQuotient q = walls_q.load(p);
            TwoComplex c = compress(regular_cover(p, q).complex, p);
            PathologyReport report = pathology_report(c);
            json j = to_json(report);
            if (!walls_report.empty()) save_text_file(walls_report, j.dump(2) + "\n");
            if (!walls_dot.empty()) save_text_file(walls_dot, dot_walls(c, report.walls));
            std::cout << j.dump(2) << "\n";
            return report.good_walls ? exit_ok : exit_hypothesis;
        }

        if (*cmd_orient) {
            CoxeterPresentation p = orient_in.load();
            PermutationQuotient q = orient_q.load(p);
            TwoComplex c = compress(regular_cover(p, q).complex, p);
            PathologyReport report = pathology_report(c);
            OrientationSearchResult result =
                random_orientation_search(c, report, orient_seed, orient_attempts);
            emit(to_json(result), orient_out);
            return result.status == OrientationSearchResult::Status::found ? exit_ok
                                                                           : exit_hypothesis;
        }

        if (*cmd_certify) {
            CoxeterPresentation p = cert_in.load();
            PermutationQuotient q = cert_q.load(p);
            KernelCheck check = check_torsion_free_kernel(p, q);
            if (!check.ok()) {
                json j = {{"status", "partial"},
                          {"missing", {"quotient fails the torsion-free-kernel criterion: " +
                                       check.diagnostic}},
                          {"chi", to_string(euler_characteristic(p))},
                          {"dimension_at_most_2", has_dimension_at_most_2(p)}};
                emit(j, cert_out);
                return exit_hypothesis;
            }
            TwoComplex c = compress(regular_cover(p, q).complex, p);
            PathologyReport report = pathology_report(c);
            OrientationSearchResult search =
                random_orientation_search(c, report, cert_seed, cert_attempts);
            Certificate cert = incoherence_certificate(p, q, c, report, search);
            emit(to_json(cert), cert_out);
            return cert.full ? exit_ok : exit_hypothesis;
        }

        if (*cmd_partitions) {
            if (*cmd_generate) {
                if (fam_method == "greedy") {
                    PartitionFamily family = greedy_family(fam_r, fam_seed);
                    json j = to_json(family);
                    j["k_required"] = k_required(fam_r);
                    emit(j, fam_out);
                    return exit_ok;
                }
                if (fam_method != "random")
                    throw std::invalid_argument("unknown method: " + fam_method);
                int k = fam_k > 0 ? fam_k : k_required(fam_r);
                FamilySearchResult result = random_family(fam_r, k, fam_seed, fam_attempts);
                json j = to_json(result.family);
                j["k_required"] = k_required(fam_r);
                j["attempts"] = result.attempts;
                j["separating"] = result.found;
                if (!result.found) j["best_unseparated"] = result.best_unseparated;
                emit(j, fam_out);
                return result.found ? exit_ok : exit_hypothesis;
            }
            PartitionFamily family = family_from_json(load_json_file(fam_verify));
            auto missing = verify_family(family);
            json j = {{"r", family.r},
                      {"size", family.partitions.size()},
                      {"separating", missing.empty()},
                      {"unseparated_count", missing.size()}};
            json list = json::array();
            for (const auto& quad : missing) list.push_back(quad);
            j["unseparated"] = list;
            std::cout << j.dump(2) << "\n";
            return missing.empty() ? exit_ok : exit_hypothesis;
        }

        if (*cmd_probe) {
            int last = std::max(probe_r, probe_r_max);
            std::string csv;
            for (int rr = probe_r; rr <= last; ++rr) {
                LinkModel model(rr, probe_m);
                MonteCarloResult mc = monte_carlo_failure(model, probe_trials, probe_seed);
                csv += probe_csv(model, mc, rr == probe_r);
            }
            if (!probe_csv_path.empty()) save_text_file(probe_csv_path, csv);
            std::cout << csv;
            return exit_ok;
        }

        if (*cmd_threshold) {
            std::cout << threshold_rank(thr_m, thr_q) << "\n";
            return exit_ok;
        }

        if (*cmd_ramsey) {
            std::cout << ramsey_upper_bound(ramsey_orders).get_str() << "\n";
            return exit_ok;
        }

        if (*cmd_curvature) {
            if (curv_preset != "regular-euclidean")
                throw std::invalid_argument("unknown preset: " + curv_preset);
            CoxeterPresentation p = curv_in.load();
            json j;
            j["preset"] = curv_preset;
            j["chi"] = to_string(euler_characteristic(p));
            SectionalVerdict verdict = has_nonpositive_sectional(p);
            json sectional = {{"nonpositive", verdict.nonpositive},
                              {"dimension_at_most_2", verdict.dimension_at_most_2}};
            if (verdict.witness_subset) {
                sectional["witness_subset"] = *verdict.witness_subset;
                sectional["witness_chi"] = to_string(*verdict.witness_chi);
            }
            j["has_nonpositive_sectional"] = sectional;
            if (p.rank() >= 3)
                j["negative_sectional_sufficient"] = negative_sectional_sufficient(p);
            try {
                j["locally_quasiconvex_sufficient"] = locally_quasiconvex_sufficient(p);
            } catch (const std::invalid_argument& e) {
                j["locally_quasiconvex_sufficient"] = e.what();
            }

            if (!curv_quotient.empty()) {
                QuotientInput qin{curv_quotient};
                PermutationQuotient q = qin.load(p);
                TwoComplex c = compress(regular_cover(p, q).complex, p);
                AngledComplex ac = regular_euclidean_angles(c);
                json cells = json::array();
                for (int f = 0; f < c.two_cell_count(); ++f)
                    cells.push_back(to_string(cell_curvature_pi(ac, f)) + " pi");
                json vertices = json::array();
                for (int x = 0; x < c.zero_cell_count(); ++x)
                    vertices.push_back(to_string(vertex_curvature_pi(ac, x)) + " pi");
                j["cell_curvatures"] = cells;
                j["vertex_curvatures"] = vertices;
                if (p.rank() <= 7) {
                    auto best = brute_force_sectional_at(ac, 0);
                    j["max_section_curvature_at_basepoint"] =
                        best ? to_string(*best) + " pi" : "no regular sections";
                }
            }
            emit(j, curv_out);
            return exit_ok;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return exit_input;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    }
    return exit_input;
}
