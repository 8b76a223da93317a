#include <algorithm>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "schur/oracle.hpp"
#include "schur/parallel.hpp"
#include "schur/problem_io.hpp"
#include "schur/svg_plot.hpp"

// Exit codes: 0 success, 1 malformed input, 2 infeasible classification
// (still writes output), 3 verify-suite violation.

namespace {

using namespace schur;

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitViolation = 3;

struct GlobalFlags {
    std::string input;
    std::string output;
    double tol_boundary = 0.0;   // 0 = keep problem-file / default value
    double tol_sep = 0.0;
    bool pretty = false;
    std::uint64_t seed = 1;
};

void emit(const GlobalFlags& g, const std::string& contents) {
    if (g.output.empty())
        std::cout << contents;
    else
        io::atomic_write(g.output, contents);
}

io::ProblemFile load(const GlobalFlags& g) {
    if (g.input.empty()) throw std::invalid_argument("missing --input");
    io::ProblemFile p = io::load_problem(g.input);
    if (g.tol_boundary > 0) p.tol.boundary = g.tol_boundary;
    if (g.tol_sep > 0) p.tol.separation = g.tol_sep;
    return p;
}

std::vector<VariabilityRegion> solve_queries(const io::ProblemFile& p) {
    std::vector<VariabilityRegion> regions(p.queries.size());
    if (p.mode == io::ProblemFile::Mode::multipoint) {
        const InterpolationData data{p.nodes, p.values};
        data.validate(p.tol);
        parallel_for(p.queries.size(), [&](std::size_t i) {
            regions[i] = multipoint_region(data, p.queries[i], p.tol);
        });
    } else {
        const SchurParameter param{p.z0, p.gamma};
        param.validate(p.tol);
        parallel_for(p.queries.size(), [&](std::size_t i) {
            regions[i] = hyperbolic_variability(param, p.queries[i], p.tol);
        });
    }
    return regions;
}

bool problem_infeasible(const io::ProblemFile& p) {
    if (p.mode == io::ProblemFile::Mode::multipoint) {
        return build_table(InterpolationData{p.nodes, p.values}, p.tol).infeasible();
    }
    const SolvabilityClass cls = schur_solvability(SchurParameter{p.z0, p.gamma}, p.tol);
    return cls.kind == SolvabilityClass::Kind::no_solution;
}

int cmd_region(const GlobalFlags& g) {
    const io::ProblemFile p = load(g);
    const std::vector<VariabilityRegion> regions = solve_queries(p);
    emit(g, g.pretty ? io::region_results_pretty(p, regions)
                     : io::region_results_json(p, regions));
    bool any_empty = problem_infeasible(p);
    for (const auto& r : regions)
        if (r.kind == VariabilityRegion::Kind::empty) any_empty = true;
    return any_empty ? kExitInfeasible : kExitOk;
}

int cmd_table(const GlobalFlags& g) {
    const io::ProblemFile p = load(g);
    if (p.mode != io::ProblemFile::Mode::multipoint)
        throw std::invalid_argument("table: only multipoint problems have a difference table");
    const InterpolationData data{p.nodes, p.values};
    const DifferenceTable table = build_table(data, p.tol);
    emit(g, g.pretty ? io::table_pretty(data, table) : io::table_json(data, table));
    return table.infeasible() ? kExitInfeasible : kExitOk;
}

int cmd_solvability(const GlobalFlags& g) {
    const io::ProblemFile p = load(g);
    if (p.mode != io::ProblemFile::Mode::hyperbolic)
        throw std::invalid_argument("solvability: requires a hyperbolic problem (z0, gamma)");
    const SolvabilityClass cls = schur_solvability(SchurParameter{p.z0, p.gamma}, p.tol);
    emit(g, io::solvability_json(cls));
    return cls.kind == SolvabilityClass::Kind::no_solution ? kExitInfeasible : kExitOk;
}

int cmd_plot(const GlobalFlags& g, int epsilon_samples_flag, int grid) {
    const io::ProblemFile p = load(g);
    if (p.queries.empty()) throw std::invalid_argument("plot: need at least one query point");
    const Complex z = p.queries.front();

    VariabilityRegion region;
    std::vector<Complex> nodes;
    ChainConfig config = ChainConfig::confluent(0.0, {Complex{0.0, 0.0}});
    bool have_config = false;
    if (p.mode == io::ProblemFile::Mode::multipoint) {
        const InterpolationData data{p.nodes, p.values};
        data.validate(p.tol);
        nodes = p.nodes;
        region = multipoint_region(data, z, p.tol);
        if (region.kind == VariabilityRegion::Kind::disk) {
            config = make_chain_config(data, p.tol);
            have_config = true;
        }
    } else {
        const SchurParameter param{p.z0, p.gamma};
        param.validate(p.tol);
        nodes = {p.z0};
        region = hyperbolic_variability(param, z, p.tol);
        if (region.kind == VariabilityRegion::Kind::disk) {
            config = ChainConfig::confluent(p.z0, p.gamma, p.tol);
            have_config = true;
        }
    }

    io::PlotOptions opts;
    opts.epsilon_samples = epsilon_samples_flag >= 0 ? epsilon_samples_flag : p.epsilon_samples;
    opts.grid = grid;

    std::vector<Complex> samples;
    if (have_config && region.kind == VariabilityRegion::Kind::disk) {
        samples.resize(static_cast<std::size_t>(opts.epsilon_samples));
        parallel_for(samples.size(), [&](std::size_t k) {
            const double phi = 2.0 * 3.14159265358979323846 * static_cast<double>(k) /
                               static_cast<double>(samples.size());
            samples[k] = extremal_eval(config, std::polar(1.0, phi), z);
        });
    }

    emit(g, io::render_plot_svg(nodes, z, region, samples, opts));
    return region.kind == VariabilityRegion::Kind::empty ? kExitInfeasible : kExitOk;
}

int cmd_verify(const GlobalFlags& g, const std::string& suite, long trials) {
    if (trials < 0) throw std::invalid_argument("verify: --trials must be >= 0");
    const bool all = suite == "all";
    std::vector<std::string> fragments;
    bool pass = true;

    if (trials > 0 && (all || suite == "identities")) {
        const oracle::IdentityReport r = oracle::identity_suite(g.seed, trials);
        fragments.push_back(io::identity_report_json(r));
        pass = pass && r.pass();
    }
    if (trials > 0 && (all || suite == "membership")) {
        // split the budget across data sizes and both ground-truth families
        const long slots = 10;
        const long per = std::max<long>(1, trials / slots);
        oracle::MembershipReport total;
        total.seed = g.seed;
        for (int n = 0; n <= 4; ++n) {
            for (int fam = 0; fam < 2; ++fam) {
                oracle::RandomProblemSpec spec;
                spec.seed = g.seed + static_cast<std::uint64_t>(n * 2 + fam) * 0x10001ULL;
                spec.n = n;
                spec.family = fam == 0 ? oracle::RandomProblemSpec::Family::blaschke
                                       : oracle::RandomProblemSpec::Family::scaled_blaschke;
                const oracle::MembershipReport r = oracle::membership_test(spec, per);
                total.trials += r.trials;
                total.violations += r.violations;
                total.resampled_draws += r.resampled_draws;
                total.max_overhang = std::max(total.max_overhang, r.max_overhang);
                if (r.first_violation_trial >= 0 && total.first_violation_trial < 0) {
                    total.first_violation_trial = r.first_violation_trial;
                    total.first_violation_case = r.first_violation_case;
                }
            }
        }
        fragments.push_back(io::membership_report_json(total));
        pass = pass && total.violations == 0;
    }
    if (trials > 0 && (all || suite == "confluence")) {
        struct Case {
            Complex z0;
            std::vector<Complex> gamma;
        };
        const std::vector<Case> cases = {
            {Complex{0.3, 0.1}, {Complex{0.2, -0.1}, Complex{0.3, 0.2}}},
            {Complex{-0.2, 0.25}, {Complex{0.1, 0.1}, Complex{-0.3, 0.1}, Complex{0.2, -0.2}}},
            {Complex{0.0, 0.0}, {Complex{0.0, 0.0}, Complex{0.9, 0.0}}},
        };
        for (const Case& c : cases) {
            const SchurFunction F = SchurFunction::nested_chain(
                std::vector<Complex>(c.gamma.size(), c.z0), c.gamma, Complex{0.37, 0.2});
            const oracle::ConfluenceReport r =
                oracle::confluence_experiment(c.z0, c.gamma, 1e-1, F);
            fragments.push_back(io::confluence_report_json(r));
            pass = pass && r.converged;
        }
    }

    std::string report = "{\n  \"suites\": [";
    for (std::size_t i = 0; i < fragments.size(); ++i)
        report += (i ? ",\n    " : "\n    ") + fragments[i];
    report += fragments.empty() ? "],\n" : "\n  ],\n";
    report += std::string("  \"pass\": ") + (pass ? "true" : "false") + "\n}\n";
    emit(g, report);
    return pass ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"variability regions of bounded analytic interpolants on the unit disk"};
    app.require_subcommand(1);
    app.fallthrough();   // global flags may follow the subcommand name

    GlobalFlags g;
    app.add_option("--input", g.input, "problem file (JSON)");
    app.add_option("--output", g.output, "output path (stdout when omitted)");
    app.add_option("--tol-boundary", g.tol_boundary, "boundary classification tolerance");
    app.add_option("--tol-sep", g.tol_sep, "minimum node separation tolerance");
    app.add_option("--seed", g.seed, "seed for randomized suites");
    app.add_flag("--pretty", g.pretty, "human-readable text output");

    auto* region = app.add_subcommand("region", "variability region per query point");
    auto* table = app.add_subcommand("table", "hyperbolic divided-difference table");
    auto* solvability = app.add_subcommand("solvability", "classify a parameter list");
    auto* plot = app.add_subcommand("plot", "SVG figure of the unit disk and region");
    int eps_samples = -1, grid = 0;
    plot->add_option("--epsilon-samples", eps_samples, "extremal boundary markers");
    plot->add_option("--grid", grid, "reference grid density");
    auto* verify = app.add_subcommand("verify", "run randomized property suites");
    std::string suite = "all";
    long trials = 100;
    verify->add_option("--suite", suite, "identities | membership | confluence | all")
        ->check(CLI::IsMember({"identities", "membership", "confluence", "all"}));
    verify->add_option("--trials", trials, "trial count (0 = empty report)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (region->parsed()) return cmd_region(g);
        if (table->parsed()) return cmd_table(g);
        if (solvability->parsed()) return cmd_solvability(g);
        if (plot->parsed()) return cmd_plot(g, eps_samples, grid);
        if (verify->parsed()) return cmd_verify(g, suite, trials);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
