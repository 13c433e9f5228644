// conevol: exact cone volume measures of polytopes, subspace concentration
// audits, equality diagnosis, and pyramid-lift bound chains. JSON in, JSON
// out; all scalars are exact rational literals.
//
// Exit codes: 0 success / audit passed, 1 audit found a violating subspace,
// 2 usage or input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "conevol/conevol.hpp"

namespace {

using conevol::json;

json read_input_json(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(path);
        if (!in) throw conevol::ParseError("cannot open input file: " + path);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw conevol::ParseError(std::string("malformed JSON: ") + e.what());
    }
}

conevol::Polytope read_polytope(const std::string& path) {
    return conevol::polytope_from_json(read_input_json(path));
}

void emit(const json& doc) { std::cout << doc.dump(2) << '\n'; }

std::vector<int> parse_index_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw conevol::ParseError("bad index list entry: '" + item + "'");
        }
    }
    return out;
}

int depth_cap_from_env() {
    if (const char* raw = std::getenv("CONEVOL_DEPTH_CAP")) {
        try {
            int cap = std::stoi(raw);
            if (cap >= 0) return cap;
        } catch (const std::exception&) {
        }
        throw conevol::ParseError("CONEVOL_DEPTH_CAP must be a non-negative integer");
    }
    return conevol::kDefaultDepthCap;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cone volume measures and subspace concentration audits"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string mode;
    std::string track_list;
    std::string gen_name;
    bool allow_noncentered = false;
    int atom_cap = conevol::kDefaultAtomCap;
    int levels = 1;
    int brute_trials = 0;
    std::uint64_t brute_seed = 0;
    std::uint64_t mc_samples = 0;
    std::uint64_t mc_seed = 0;
    conevol::GenSpec gen_spec;
    bool gen_no_center = false;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("input", input, "polytope JSON file, or - for stdin");
    };

    CLI::App* hull = app.add_subcommand("hull", "convex hull of a vertex list");
    add_input(hull);
    CLI::App* center_cmd = app.add_subcommand("center", "translate the body to its centroid");
    add_input(center_cmd);
    CLI::App* polar_cmd = app.add_subcommand("polar", "polar dual body");
    add_input(polar_cmd);
    CLI::App* conevol_cmd = app.add_subcommand("conevol", "cone volume measure");
    add_input(conevol_cmd);
    conevol_cmd->add_option("--mc-samples", mc_samples,
                            "attach a Monte Carlo volume cross-check with this many samples");
    conevol_cmd->add_option("--mc-seed", mc_seed, "seed for the Monte Carlo cross-check");

    CLI::App* audit = app.add_subcommand("audit", "subspace concentration audit");
    add_input(audit);
    audit->add_option("--mode", mode, "linear or affine")
        ->required()
        ->check(CLI::IsMember({"linear", "affine"}));
    audit->add_flag("--allow-noncentered", allow_noncentered,
                    "audit a non-centered body (counterexample hunting)");
    audit->add_option("--atom-cap", atom_cap, "candidate enumeration atom cap");
    audit->add_option("--brute-trials", brute_trials,
                      "also sample this many random subspaces and report the worst ratio");
    audit->add_option("--brute-seed", brute_seed, "seed for --brute-trials");

    CLI::App* diagnose = app.add_subcommand("diagnose", "audit plus equality-case diagnosis");
    add_input(diagnose);
    diagnose->add_option("--mode", mode, "linear or affine")
        ->required()
        ->check(CLI::IsMember({"linear", "affine"}));
    diagnose->add_flag("--allow-noncentered", allow_noncentered,
                       "audit a non-centered body");
    diagnose->add_option("--atom-cap", atom_cap, "candidate enumeration atom cap");

    CLI::App* lift = app.add_subcommand("lift", "pyramid-lift tower report");
    add_input(lift);
    lift->add_option("--levels", levels, "tower depth J (capped by CONEVOL_DEPTH_CAP)");
    lift->add_option("--track", track_list,
                     "comma-separated facet indices whose cones are tracked");
    lift->add_flag("--allow-noncentered", allow_noncentered, "lift a non-centered body");

    CLI::App* gen = app.add_subcommand("gen", "generate a polytope");
    auto* name_opt =
        gen->add_option("--name", gen_name,
                        "canonical body (cube_N, crosspolytope_N, centered_simplex_N, "
                        "square_pyramid_3, noncentered_triangle)");
    name_opt->excludes(gen->add_option("--dim", gen_spec.dim, "ambient dimension"));
    name_opt->excludes(gen->add_option("--vertices", gen_spec.vertex_count, "points to sample"));
    name_opt->excludes(gen->add_option("--range", gen_spec.coord_range, "coordinate range"));
    name_opt->excludes(gen->add_option("--seed", gen_spec.seed, "generator seed"));
    name_opt->excludes(gen->add_flag("--symmetrize", gen_spec.symmetrize,
                                     "append antipodes (P = -P)"));
    name_opt->excludes(gen->add_flag("--no-center", gen_no_center,
                                     "skip the centering translation"));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (hull->parsed()) {
            emit(conevol::polytope_to_json(read_polytope(input)));
        } else if (center_cmd->parsed()) {
            emit(conevol::polytope_to_json(conevol::center(read_polytope(input))));
        } else if (polar_cmd->parsed()) {
            emit(conevol::polytope_to_json(conevol::polar(read_polytope(input))));
        } else if (conevol_cmd->parsed()) {
            conevol::Polytope p = read_polytope(input);
            conevol::ConeVolumeMeasure mu = conevol::cone_volumes(p);
            json doc = conevol::measure_to_json(mu);
            if (mc_samples > 0) {
                auto mc = conevol::mc_volume(
                    p, conevol::default_oracle_config(p, mc_samples, mc_seed));
                doc["mc"] = {{"estimate", mc.estimate},
                             {"std_error", mc.std_error},
                             {"samples", mc.samples},
                             {"exact", conevol::rational_literal(mu.total)},
                             {"within_4_std_errors",
                              std::abs(mc.estimate - mu.total.convert_to<double>()) <=
                                  4.0 * mc.std_error}};
            }
            emit(doc);
        } else if (audit->parsed() || diagnose->parsed()) {
            conevol::Polytope p = read_polytope(input);
            conevol::SubspaceKind kind = mode == "linear" ? conevol::SubspaceKind::Linear
                                                          : conevol::SubspaceKind::Affine;
            conevol::AuditOptions opts{allow_noncentered, atom_cap};
            conevol::AuditReport report = diagnose->parsed()
                                              ? conevol::diagnose_scc(p, kind, opts)
                                              : conevol::check_scc(p, kind, opts);
            json doc = conevol::report_to_json(report);
            if (audit->parsed() && brute_trials > 0) {
                conevol::ConeVolumeMeasure mu = conevol::cone_volumes(p);
                conevol::ExactScalar worst =
                    conevol::brute_force_audit(mu, kind, brute_trials, brute_seed);
                doc["brute"] = {{"trials", brute_trials},
                                {"worst_ratio", conevol::rational_literal(worst)},
                                {"within_enumerated_max", worst <= report.max_ratio}};
            }
            emit(doc);
            return report.pass ? 0 : 1;
        } else if (lift->parsed()) {
            conevol::Polytope p = read_polytope(input);
            int cap = depth_cap_from_env();
            auto chain = std::make_shared<const conevol::LiftChain>(
                conevol::build_chain(p, levels, cap, allow_noncentered));
            std::vector<int> tracked = track_list.empty() ? std::vector<int>{}
                                                          : parse_index_list(track_list);
            if (tracked.empty()) {
                // Nothing tracked: report the plain tower with the whole-body
                // measure (A = affine hull of all atoms is not proper, so
                // bounds use every facet).
                std::vector<int> all(static_cast<std::size_t>(p.facet_count()));
                std::iota(all.begin(), all.end(), 0);
                tracked = std::move(all);
            }
            conevol::LiftTower tower = conevol::build_tower_over_facets(chain, tracked);
            conevol::ChainBounds bounds = conevol::chain_bounds(tower);
            emit(conevol::tower_report_json(tower, bounds));
        } else if (gen->parsed()) {
            if (!gen_name.empty()) {
                emit(conevol::polytope_to_json(conevol::canonical(gen_name)));
            } else {
                gen_spec.center = !gen_no_center;
                emit(conevol::polytope_to_json(conevol::generate(gen_spec)));
            }
        }
        return 0;
    } catch (const conevol::Error& e) {
        emit(json{{"error", e.what()}});
        return 2;
    } catch (const std::exception& e) {
        emit(json{{"error", std::string("internal error: ") + e.what()}});
        return 2;
    }
}
