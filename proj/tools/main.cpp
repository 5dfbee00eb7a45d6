// Command-line surface over the toolkit: slope arithmetic, norms, the index
// calculus, graph analysis, cobordism reports, verification runs and the
// surgery decision table.
//
// Exit status: 0 on success or an empty violation report, 1 on violations,
// verification failures or an inapplicable theorem, 2 on parse or usage
// errors.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dehnkit/cobordism.hpp"
#include "dehnkit/fatgraph.hpp"
#include "dehnkit/harness.hpp"
#include "dehnkit/io.hpp"
#include "dehnkit/slope.hpp"
#include "dehnkit/surface.hpp"
#include "dehnkit/sutured.hpp"

using nlohmann::json;

namespace {

enum class Format { Text, Records };

struct CommonOpts {
    std::string format = "text";
    unsigned seed = 1;

    Format fmt() const { return format == "records" ? Format::Records : Format::Text; }
};

int exit_violations(const dehnkit::ValidationReport& rep, Format fmt) {
    if (fmt == Format::Records) {
        for (const auto& v : rep.violations)
            std::cout << json{{"violation", v.axiom}, {"message", v.message}}.dump() << "\n";
        for (const auto& n : rep.notes) std::cout << json{{"note", n}}.dump() << "\n";
        if (rep.ok()) std::cout << json{{"result", "ok"}}.dump() << "\n";
    } else {
        std::cout << rep.to_text();
    }
    return rep.ok() ? 0 : 1;
}

std::string cycle_text(const dehnkit::FatGraph& g, const dehnkit::Cycle& c) {
    std::string out = "length-" + std::to_string(c.steps.size()) + " lambda-" +
                      std::to_string(c.tail_label) + " cycle:";
    for (const auto& st : c.steps) {
        const auto& e = g.interior_edges()[st.edge];
        auto tail = st.from_a ? e.a : e.b;
        auto head = st.from_a ? e.b : e.a;
        out += " " + std::to_string(tail.vertex) + "[" + std::to_string(tail.slot) + "]->" +
               std::to_string(head.vertex) + "[" + std::to_string(head.slot) + "]";
    }
    return out;
}

json cycle_record(const dehnkit::FatGraph& g, const dehnkit::Cycle& c) {
    json steps = json::array();
    for (const auto& st : c.steps) {
        const auto& e = g.interior_edges()[st.edge];
        auto tail = st.from_a ? e.a : e.b;
        auto head = st.from_a ? e.b : e.a;
        steps.push_back({{"edge", st.edge},
                         {"tail", {tail.vertex, tail.slot}},
                         {"head", {head.vertex, head.slot}}});
    }
    return {{"length", c.steps.size()},
            {"tail_label", c.tail_label},
            {"interior_edges", c.interior_edge_count},
            {"steps", steps}};
}

int print_report(const dehnkit::VerificationReport& rep, const CommonOpts& opts) {
    if (opts.fmt() == Format::Records) {
        json j{{"family", rep.family},     {"params", rep.params},
               {"instances", rep.instances}, {"rejected", rep.rejected},
               {"failures", rep.failures},   {"wall_seconds", rep.wall_seconds},
               {"seed", opts.seed},          {"result", rep.ok() ? "PASS" : "FAIL"}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "seed: " << opts.seed << "\n" << rep.to_text();
    }
    return rep.ok() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"combinatorial sutured-manifold toolkit"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    CommonOpts opts;
    app.add_option("--format", opts.format, "output format: text or records")
        ->check(CLI::IsMember({"text", "records"}));
    app.add_option("--seed", opts.seed, "seed recorded in verification reports");

    // slope-delta a b
    std::string slope_a, slope_b;
    auto* cmd_delta = app.add_subcommand("slope-delta", "minimal intersection number of two slopes");
    cmd_delta->add_option("a", slope_a, "first slope, p/q")->required();
    cmd_delta->add_option("b", slope_b, "second slope, p/q")->required();

    // norm <surface.json>
    std::string norm_path;
    auto* cmd_norm = app.add_subcommand("norm", "Euler characteristic and norms of a surface file");
    cmd_norm->add_option("file", norm_path, "param-surface file")->required();

    // index <sutured.json> <surface.json>
    std::string index_sutured, index_surface;
    auto* cmd_index = app.add_subcommand("index", "validate a parameterizing surface and compute its index");
    cmd_index->add_option("sutured", index_sutured, "sutured data file")->required();
    cmd_index->add_option("surface", index_surface, "param-surface file")->required();

    // graph-check <graph.json> [--dot out.dot]
    std::string graph_path, dot_path;
    auto* cmd_gcheck = app.add_subcommand("graph-check", "admissibility report of a fat graph");
    cmd_gcheck->add_option("file", graph_path, "fatgraph file")->required();
    cmd_gcheck->add_option("--dot", dot_path, "also write a Graphviz rendering here");

    // graph-scharlemann <graph.json>
    std::string sch_path;
    auto* cmd_sch = app.add_subcommand("graph-scharlemann", "find a Scharlemann cycle in a Gabai graph");
    cmd_sch->add_option("file", sch_path, "fatgraph file")->required();

    // cobordism --genus --kind --q --a --alpha
    int cb_genus = 0, cb_q = 1, cb_alpha = 2, cb_boundary = 0;
    std::string cb_kind = "sphere";
    std::vector<long long> cb_coeffs;
    auto* cmd_cob = app.add_subcommand("cobordism", "homology of a tube-compression region");
    cmd_cob->add_option("--genus", cb_genus, "genus of the compressed surface");
    cmd_cob->add_option("--kind", cb_kind, "sphere | disc | closed | bounded")
        ->check(CLI::IsMember({"sphere", "disc", "closed", "bounded"}));
    cmd_cob->add_option("--q", cb_q, "tube crossings of the disc boundary")->required();
    cmd_cob->add_option("--a", cb_coeffs, "surface-basis coefficients a_1..a_2g");
    cmd_cob->add_option("--alpha", cb_alpha, "alpha intersections of the surface");
    cmd_cob->add_option("--boundary", cb_boundary, "boundary count for kind=bounded");

    // verify <what> --max-v --mu --max-boundary --max-arcs --max-extra
    std::string verify_what;
    int v_maxv = 4, v_mu = 2, v_max_boundary = -1, v_max_arcs = 2, v_max_extra = 1;
    auto* cmd_verify = app.add_subcommand("verify", "exhaustive small-instance verification runs");
    cmd_verify->add_option("what", verify_what, "scharlemann | lambda | connectivity | enumerate")
        ->required()
        ->check(CLI::IsMember({"scharlemann", "lambda", "connectivity", "enumerate"}));
    cmd_verify->add_option("--max-v", v_maxv, "vertex bound");
    cmd_verify->add_option("--mu", v_mu, "mu");
    cmd_verify->add_option("--max-boundary", v_max_boundary, "boundary edge bound (enumerate)");
    cmd_verify->add_option("--max-arcs", v_max_arcs, "arc bound (connectivity)");
    cmd_verify->add_option("--max-extra", v_max_extra, "extra crossing pairs (connectivity)");

    // scenario <scenario.json>
    std::string scenario_path;
    auto* cmd_scn = app.add_subcommand("scenario", "decision table for the surgery theorems");
    cmd_scn->add_option("file", scenario_path, "scenario file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (*cmd_delta) {
            auto a = dehnkit::Slope::parse(slope_a);
            auto b = dehnkit::Slope::parse(slope_b);
            long long d = dehnkit::delta(a, b);
            if (opts.fmt() == Format::Records)
                std::cout << json{{"delta", d}}.dump() << "\n";
            else
                std::cout << d << "\n";
            return 0;
        }

        if (*cmd_norm) {
            auto q = dehnkit::parse_param_surface(dehnkit::read_file(norm_path), norm_path);
            dehnkit::SurfaceSpec spec;
            for (const auto& p : q.pieces) spec.push_back(p.surface);
            dehnkit::validate(spec);
            if (opts.fmt() == Format::Records)
                std::cout << json{{"chi", euler(spec)},
                                  {"thurston_norm", thurston_norm(spec)},
                                  {"beta_norm", beta_norm(spec)}}
                                 .dump()
                          << "\n";
            else
                std::cout << "chi: " << euler(spec) << "\nthurston_norm: " << thurston_norm(spec)
                          << "\nbeta_norm: " << beta_norm(spec) << "\n";
            return 0;
        }

        if (*cmd_index) {
            auto data = dehnkit::parse_sutured(dehnkit::read_file(index_sutured), index_sutured);
            auto q = dehnkit::parse_param_surface(dehnkit::read_file(index_surface), index_surface);
            auto rep = dehnkit::check_param_conditions(q, data);
            if (!rep.ok()) return exit_violations(rep, opts.fmt());
            long long i = dehnkit::index(q, data);
            if (opts.fmt() == Format::Records)
                std::cout << json{{"index", i}}.dump() << "\n";
            else
                std::cout << "index: " << i << "\n";
            return 0;
        }

        if (*cmd_gcheck) {
            auto g = dehnkit::parse_fatgraph(dehnkit::read_file(graph_path), graph_path);
            if (!dot_path.empty()) {
                std::ofstream out(dot_path);
                out << dehnkit::to_dot(g);
            }
            return exit_violations(dehnkit::admissible(g), opts.fmt());
        }

        if (*cmd_sch) {
            auto g = dehnkit::parse_fatgraph(dehnkit::read_file(sch_path), sch_path);
            try {
                auto trace = dehnkit::find_scharlemann_cycle_traced(g);
                if (opts.fmt() == Format::Records) {
                    std::cout << json{{"cycle", cycle_record(g, trace.chosen)},
                                      {"first_found", cycle_record(g, trace.first_found)},
                                      {"empty_side", trace.side}}
                                     .dump()
                              << "\n";
                } else {
                    std::cout << cycle_text(g, trace.chosen) << "\n";
                }
                return 0;
            } catch (const dehnkit::CounterexampleError& e) {
                std::cout << "counterexample: " << e.what() << "\n" << e.instance << "\n";
                return 1;
            } catch (const dehnkit::PreconditionError& e) {
                std::cout << e.what() << "\n";
                return 1;
            }
        }

        if (*cmd_cob) {
            dehnkit::TubeCompressionData d;
            d.genus = cb_genus;
            d.kind = cb_kind == "sphere"  ? dehnkit::CompressedSurfaceKind::Sphere
                     : cb_kind == "disc"  ? dehnkit::CompressedSurfaceKind::Disc
                     : cb_kind == "closed" ? dehnkit::CompressedSurfaceKind::ClosedGenus
                                            : dehnkit::CompressedSurfaceKind::Bounded;
            if (d.kind == dehnkit::CompressedSurfaceKind::Bounded) d.boundary_count = cb_boundary;
            d.q = cb_q;
            d.coefficients = cb_coeffs;
            if (d.coefficients.empty()) d.coefficients.assign(2 * cb_genus, 0);
            d.alpha_intersections = cb_alpha;
            auto rep = dehnkit::cobordism_homology(d);
            if (opts.fmt() == Format::Records) {
                json j{{"h1", rep.h1_integral.to_text()},
                       {"rational_rank", rep.h1_rational_rank},
                       {"is_product", rep.is_product},
                       {"is_rational_cobordism", rep.is_rational_cobordism},
                       {"r_genus", rep.r_surface.genus},
                       {"r_alpha_intersections", rep.r_surface.puncture_count}};
                if (rep.lens_summand) j["lens_summand"] = *rep.lens_summand;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "H1(W) = " << rep.h1_integral.to_text() << "\n";
                std::cout << "rational rank: " << rep.h1_rational_rank << "\n";
                std::cout << "product: " << (rep.is_product ? "yes" : "no") << "\n";
                if (rep.lens_summand)
                    std::cout << "lens summand of order " << *rep.lens_summand << "\n";
                std::cout << "R-surface: genus " << rep.r_surface.genus << ", "
                          << rep.r_surface.puncture_count << " alpha intersections\n";
                for (const auto& n : rep.notes) std::cout << "note: " << n << "\n";
            }
            return 0;
        }

        if (*cmd_verify) {
            if (verify_what == "scharlemann")
                return print_report(dehnkit::verify_scharlemann_existence(v_maxv, v_mu), opts);
            if (verify_what == "lambda")
                return print_report(dehnkit::verify_lambda_cycle_existence(v_maxv, v_mu), opts);
            if (verify_what == "connectivity") {
                dehnkit::ConnectivityFamilyConfig cfg;
                cfg.max_arcs = v_max_arcs;
                cfg.mu = v_mu;
                cfg.max_extra_crossings = v_max_extra;
                cfg.seed = opts.seed;
                return print_report(dehnkit::verify_connectivity_dichotomy(cfg), opts);
            }
            // enumerate
            int max_b = v_max_boundary < 0 ? v_mu - 1 : v_max_boundary;
            long long count = 0;
            dehnkit::enumerate_gabai_graphs({v_maxv, v_mu, max_b}, [&](const dehnkit::FatGraph& g) {
                ++count;
                if (opts.fmt() == Format::Records)
                    std::cout << json{{"code", dehnkit::canonical_code(g)}, {"graph", g.dump()}}.dump()
                              << "\n";
            });
            if (opts.fmt() == Format::Records)
                std::cout << json{{"family_size", count}}.dump() << "\n";
            else
                std::cout << "family size: " << count << "\n";
            return 0;
        }

        if (*cmd_scn) {
            auto s = dehnkit::parse_scenario(dehnkit::read_file(scenario_path), scenario_path);
            auto conclusion = dehnkit::scenario_report(s);
            if (opts.fmt() == Format::Records) {
                json j{{"branch", to_string(conclusion.branch)}, {"text", conclusion.text}};
                if (conclusion.missing_flag) j["missing_flag"] = *conclusion.missing_flag;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << to_string(conclusion.branch) << ": " << conclusion.text << "\n";
            }
            return conclusion.branch == dehnkit::ConclusionBranch::NotApplicable ? 1 : 0;
        }
    } catch (const dehnkit::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const dehnkit::Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 2;
}
