// Acceptance suite: one pass/fail line per criterion, nonzero exit when
// anything fails.  Usage: acceptance <cli-binary> <fixtures-dir>

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "schur/oracle.hpp"
#include "schur/problem_io.hpp"
#include "schur/variability.hpp"

using namespace schur;
namespace fs = std::filesystem;

namespace {

const double kPi = 3.14159265358979323846;

int g_failures = 0;

void report(int index, const std::string& name, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL", index, name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

// ---- shared problem generator: data from a Blaschke ground truth ----

struct SampledProblem {
    InterpolationData data;
    ChainConfig config = ChainConfig::confluent(0.0, {Complex{0.0, 0.0}});
    Complex z;
    SchurFunction truth = SchurFunction::constant(0.0);
};

SampledProblem sample_problem(std::mt19937_64& rng, int n) {
    for (;;) {
        const SchurFunction F = oracle::random_blaschke(n + 2, rng);
        std::vector<Complex> nodes;
        while (static_cast<int>(nodes.size()) < n + 1) {
            const Complex c = oracle::random_disk_point(rng, 0.8);
            bool clear = true;
            for (Complex q : nodes)
                if (pseudo_hyperbolic_distance(c, q) < 1e-2) clear = false;
            if (clear) nodes.push_back(c);
        }
        std::vector<Complex> values;
        for (Complex q : nodes) values.push_back(F(q));
        const InterpolationData data{nodes, values};
        const DifferenceTable table = build_table(data);
        bool ok = !table.infeasible();
        for (const TableEntry& e : table.diagonal())
            if (e.status != EntryStatus::interior) ok = false;
        if (!ok) continue;

        Complex z;
        for (;;) {
            z = oracle::random_disk_point(rng, 0.9);
            bool clear = true;
            for (Complex q : nodes)
                if (pseudo_hyperbolic_distance(z, q) < 1e-2) clear = false;
            if (clear) break;
        }
        SampledProblem p{data, make_chain_config(data), z, F};
        return p;
    }
}

// ---------------------------------------------------------- criteria

void criterion_identities() {
    const auto t0 = std::chrono::steady_clock::now();
    const oracle::IdentityReport r = oracle::identity_suite(20260809, 1000);
    const double dt = seconds_since(t0);
    const bool pass = r.pass(1e-11) && dt < 10.0;
    report(1, "identity suite (1000 configs, residual < 1e-11)", pass,
           "det " + fmt(r.max_determinant) + ", refl " + fmt(r.max_reflection) + ", nbr " +
               fmt(r.max_neighbor) + ", gap slack " + fmt(r.min_gap_slack) + ", " + fmt(dt) + "s");
}

void criterion_membership() {
    const auto t0 = std::chrono::steady_clock::now();
    long violations = 0, trials = 0;
    double overhang = -1.0;
    for (int n = 0; n <= 4; ++n) {
        for (int fam = 0; fam < 2; ++fam) {
            oracle::RandomProblemSpec spec;
            spec.seed = 5550u + static_cast<std::uint64_t>(n * 2 + fam);
            spec.n = n;
            spec.family = fam == 0 ? oracle::RandomProblemSpec::Family::blaschke
                                   : oracle::RandomProblemSpec::Family::scaled_blaschke;
            const auto r = oracle::membership_test(spec, 1000);
            violations += r.violations;
            trials += r.trials;
            overhang = std::max(overhang, r.max_overhang);
        }
    }
    const double dt = seconds_since(t0);
    report(2, "membership (10^4 trials, tolerance 1e-9)",
           violations == 0 && trials == 10000 && dt < 60.0,
           std::to_string(violations) + " violations, max overhang " + fmt(overhang) + ", " +
               fmt(dt) + "s");
}

void criterion_extremality() {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(333);
    double worst_rim = 0.0, worst_wind = 0.0;
    for (int rep = 0; rep < 200; ++rep) {
        const SampledProblem p = sample_problem(rng, static_cast<int>(rng() % 5));
        const VariabilityRegion region = multipoint_region(p.data, p.z);
        if (region.kind != VariabilityRegion::Kind::disk) {
            report(3, "boundary extremality", false, "sampled problem not a disk");
            return;
        }
        const Complex c = region.disk.center;
        const double rho = region.disk.radius;
        for (int i = 0; i < 64; ++i) {
            const Complex eps = std::polar(1.0, 2.0 * kPi * i / 64.0);
            const Complex v = extremal_eval(p.config, eps, p.z);
            worst_rim = std::max(worst_rim, std::abs(std::abs(v - c) - rho));
        }
        double total = 0.0, prev = 0.0;
        for (int i = 0; i <= 256; ++i) {
            const Complex eps = std::polar(1.0, 2.0 * kPi * i / 256.0);
            const double a = std::arg(extremal_eval(p.config, eps, p.z) - c);
            if (i > 0) {
                double d = a - prev;
                while (d > kPi) d -= 2.0 * kPi;
                while (d < -kPi) d += 2.0 * kPi;
                total += d;
            }
            prev = a;
        }
        worst_wind = std::max(worst_wind, std::abs(total / (2.0 * kPi) - 1.0));
    }
    const double dt = seconds_since(t0);
    report(3, "boundary extremality and winding (200 problems x 64 eps)",
           worst_rim < 1e-10 && worst_wind < 1e-6 && dt < 30.0,
           "max rim residual " + fmt(worst_rim) + ", max winding error " + fmt(worst_wind) +
               ", " + fmt(dt) + "s");
}

void criterion_interpolation() {
    std::mt19937_64 rng(444);
    double worst = 0.0;
    for (int rep = 0; rep < 100; ++rep) {
        const SampledProblem p = sample_problem(rng, static_cast<int>(rng() % 5));
        const auto fstar = oracle::random_blaschke(2, rng);
        for (int i = 0; i < 8; ++i) {
            const Complex eps = std::polar(1.0, 2.0 * kPi * i / 8.0);
            for (std::size_t j = 0; j < p.data.size(); ++j)
                worst = std::max(worst, std::abs(extremal_eval(p.config, eps, p.data.nodes[j]) -
                                                 p.data.values[j]));
        }
        for (std::size_t j = 0; j < p.data.size(); ++j)
            worst = std::max(worst, std::abs(interpolant_eval(p.config, fstar, p.data.nodes[j]) -
                                             p.data.values[j]));
    }
    report(4, "interpolation at the nodes (extremal and free-parameter forms)", worst < 1e-10,
           "max node defect " + fmt(worst));
}

void criterion_solvability() {
    using K = SolvabilityClass::Kind;
    const Complex z0{0.15, -0.1};
    const Complex u = std::polar(1.0, 0.8);   // generic unimodular entry
    struct Case {
        std::vector<Complex> gamma;
        K expected;
        int degree;
    };
    const Complex a{0.5, 0.0}, b{0.3, 0.2}, c{-0.4, 0.1}, z{0.0, 0.0};
    const std::vector<Case> cases = {
        // interior vectors of every length: infinitely many
        {{a}, K::infinitely_many, -1},
        {{a, b}, K::infinitely_many, -1},
        {{a, b, c}, K::infinitely_many, -1},
        {{z, z, z, z}, K::infinitely_many, -1},
        {{b, c, a, b, c}, K::infinitely_many, -1},
        {{Complex{0.99, 0.0}, Complex{0.0, 0.99}}, K::infinitely_many, -1},
        // boundary entry with clean zero tail: unique Blaschke of that degree
        {{u}, K::unique_blaschke, 0},
        {{Complex{1.0, 0.0}}, K::unique_blaschke, 0},
        {{a, u}, K::unique_blaschke, 1},
        {{a, u, z}, K::unique_blaschke, 1},
        {{a, u, z, z}, K::unique_blaschke, 1},
        {{a, b, u}, K::unique_blaschke, 2},
        {{a, b, u, z}, K::unique_blaschke, 2},
        {{a, b, c, u, z, z}, K::unique_blaschke, 3},
        {{u, z, z}, K::unique_blaschke, 0},
        {{Complex{0.0, 1.0}, z}, K::unique_blaschke, 0},
        {{a, Complex{-1.0, 0.0}, z}, K::unique_blaschke, 1},
        // boundary entry with a nonzero tail: no solution
        {{a, u, b}, K::no_solution, -1},
        {{a, u, z, c}, K::no_solution, -1},
        {{u, b}, K::no_solution, -1},
        {{u, z, Complex{1e-3, 0.0}}, K::no_solution, -1},
        {{a, b, u, u}, K::no_solution, -1},
        {{u, u}, K::no_solution, -1},
        // entries beyond the closed disk: no solution
        {{Complex{1.2, 0.0}}, K::no_solution, -1},
        {{a, Complex{0.0, 1.4}}, K::no_solution, -1},
        {{a, b, Complex{-1.01, 0.0}, z}, K::no_solution, -1},
        {{Complex{2.0, 2.0}, u}, K::no_solution, -1},
    };

    bool pass = cases.size() == 27;
    std::string detail = pass ? "" : "case count mismatch";
    for (std::size_t i = 0; pass && i < cases.size(); ++i) {
        SchurParameter param{z0, cases[i].gamma};
        SolvabilityClass got;
        try {
            got = schur_solvability(param);
        } catch (const std::exception& e) {
            pass = false;
            detail = "case " + std::to_string(i) + " threw: " + e.what();
            break;
        }
        if (got.kind != cases[i].expected ||
            (cases[i].expected == K::unique_blaschke && got.degree != cases[i].degree)) {
            pass = false;
            detail = "case " + std::to_string(i) + " misclassified";
            break;
        }
        if (got.kind == K::unique_blaschke) {
            // the forced interpolant must carry exactly the stated parameters
            const auto params = schur_parameters(*got.unique, z0,
                                                 static_cast<int>(cases[i].gamma.size()));
            for (std::size_t k = 0; k < cases[i].gamma.size(); ++k)
                if (std::abs(params[k] - cases[i].gamma[k]) > 1e-9) {
                    pass = false;
                    detail = "case " + std::to_string(i) + " unique interpolant drifts";
                }
        }
    }
    report(5, "solvability trichotomy (27 hand-built parameter vectors)", pass, detail);
}

void criterion_closed_forms() {
    std::mt19937_64 rng(555);
    double worst = 0.0;

    // one-point disk
    for (int i = 0; i < 1000; ++i) {
        const Complex z1 = oracle::random_disk_point(rng, 0.9);
        const Complex w1 = oracle::random_disk_point(rng, 0.95);
        Complex z = oracle::random_disk_point(rng, 0.95);
        while (pseudo_hyperbolic_distance(z, z1) < 1e-3) z = oracle::random_disk_point(rng, 0.95);
        const double t2 = std::norm(mobius_transfer(-z1, z));
        const double den = 1.0 - std::norm(w1) * t2;
        const Complex c_ref = w1 * (1.0 - t2) / den;
        const double rho_ref = (1.0 - std::norm(w1)) * std::sqrt(t2) / den;
        const auto r = multipoint_region(InterpolationData{{z1}, {w1}}, z);
        worst = std::max({worst, std::abs(r.disk.center - c_ref),
                          std::abs(r.disk.radius - rho_ref)});
    }

    // first-order prescribed derivative at a movable base point
    for (int i = 0; i < 1000; ++i) {
        const Complex z0 = oracle::random_disk_point(rng, 0.8);
        const Complex g0 = oracle::random_disk_point(rng, 0.9);
        const Complex g1 = oracle::random_disk_point(rng, 0.9);
        Complex z = oracle::random_disk_point(rng, 0.95);
        while (pseudo_hyperbolic_distance(z, z0) < 1e-3) z = oracle::random_disk_point(rng, 0.95);
        const Complex t = mobius_transfer(-z0, z);
        const Complex A1 = std::conj(g1) + std::conj(g0) * t;
        const Complex At1 = g0 * std::conj(g1) + t;
        const Complex B1 = 1.0 + std::conj(g0) * g1 * t;
        const Complex Bt1 = g0 + g1 * t;
        const double den = std::norm(B1) - std::norm(t) * std::norm(A1);
        const Complex c_ref = (std::conj(B1) * Bt1 - std::norm(t) * std::conj(A1) * At1) / den;
        const double rho_ref =
            std::norm(t) * (1.0 - std::norm(g0)) * (1.0 - std::norm(g1)) / den;
        const auto r = hyperbolic_region(SchurParameter{z0, {g0, g1}}, z);
        worst = std::max({worst, std::abs(r.disk.center - c_ref),
                          std::abs(r.disk.radius - rho_ref)});

        // zero-value special case pins the classical quotient form
        if (i < 500) {
            const double den0 = 1.0 - std::norm(t) * std::norm(g1);
            const Complex c0 = g1 * t * (1.0 - std::norm(t)) / den0;
            const double rho0 = std::norm(t) * (1.0 - std::norm(g1)) / den0;
            const auto r0 = hyperbolic_region(SchurParameter{z0, {Complex{0.0, 0.0}, g1}}, z);
            worst = std::max({worst, std::abs(r0.disk.center - c0),
                              std::abs(r0.disk.radius - rho0)});
        }
    }

    // two-point disk with the first point pinned to the origin
    for (int i = 0; i < 1000; ++i) {
        Complex z2 = oracle::random_disk_point(rng, 0.9);
        while (std::abs(z2) < 0.05) z2 = oracle::random_disk_point(rng, 0.9);
        const Complex w2 = oracle::random_disk_point(rng, 0.9) * std::abs(z2);   // |w2/z2| < 1
        Complex z = oracle::random_disk_point(rng, 0.95);
        while (std::abs(z) < 1e-3 || pseudo_hyperbolic_distance(z, z2) < 1e-3)
            z = oracle::random_disk_point(rng, 0.95);
        const Complex t = mobius_transfer(-z2, z);
        const Complex ratio = w2 / z2;
        const double den = 1.0 - std::norm(t) * std::norm(ratio);
        const Complex c_ref = (1.0 - std::norm(t)) / den * (z * w2 / z2);
        const double rho_ref = std::abs(z * t) * (1.0 - std::norm(ratio)) / den;
        const auto r = multipoint_region(InterpolationData{{0.0, z2}, {0.0, w2}}, z);
        worst = std::max({worst, std::abs(r.disk.center - c_ref),
                          std::abs(r.disk.radius - rho_ref)});
    }

    report(6, "closed-form cross-checks (one-point, first-order, two-point)", worst < 1e-12,
           "max deviation " + fmt(worst));
}

void criterion_radius_decay() {
    std::mt19937_64 rng(666);
    double worst_bound = 0.0;
    bool monotone = true;
    double final_radius = 0.0;
    int accepted = 0;
    while (accepted < 40) {
        const Complex z0 = oracle::random_disk_point(rng, 0.5);
        const SchurFunction F = oracle::random_blaschke(8, rng);
        const std::vector<Complex> gamma = schur_parameters(F, z0, 7);
        bool interior = true;
        for (Complex g : gamma)
            if (std::abs(g) > 0.98) interior = false;
        if (!interior) continue;
        ++accepted;

        // query with |T_{-z0}(z)| <= 0.3
        const Complex z =
            mobius_transfer(z0, 0.28 * std::polar(1.0, 2.0 * kPi * oracle::uniform01(rng)));
        double prev = 2.0;
        for (int n = 0; n <= 6; ++n) {
            const std::vector<Complex> head(gamma.begin(), gamma.begin() + n + 1);
            const auto r = hyperbolic_region(SchurParameter{z0, head}, z);
            const double bound = std::pow(std::abs(mobius_transfer(-z0, z)), n + 1);
            worst_bound = std::max(worst_bound, r.disk.radius - bound);
            if (r.disk.radius > prev + 1e-12) monotone = false;
            prev = r.disk.radius;
            if (n == 6) final_radius = std::max(final_radius, r.disk.radius);
        }
    }
    report(7, "radius bound and shrinkage to n = 6",
           worst_bound <= 1e-12 && monotone && final_radius < 1e-3,
           "max bound excess " + fmt(worst_bound) + ", largest n=6 radius " + fmt(final_radius));
}

void criterion_confluence() {
    double worst = 0.0;
    struct Case {
        Complex z0;
        std::vector<Complex> gamma;
    };
    const std::vector<Case> cases = {
        {Complex{0.3, 0.1}, {Complex{0.2, -0.1}, Complex{0.3, 0.2}}},
        {Complex{-0.2, 0.25}, {Complex{0.1, 0.1}, Complex{-0.3, 0.1}, Complex{0.2, -0.2}}},
        {Complex{0.0, 0.0}, {Complex{0.4, 0.0}, Complex{0.0, 0.5}, Complex{0.25, 0.25}}},
    };
    for (const Case& cs : cases) {
        const auto F = SchurFunction::nested_chain(
            std::vector<Complex>(cs.gamma.size(), cs.z0), cs.gamma, Complex{0.37, 0.2});
        const Complex z = cs.z0 + std::polar(0.35 * (1.0 - std::abs(cs.z0)), 0.7);
        const auto ref = hyperbolic_region(SchurParameter{cs.z0, cs.gamma}, z);
        const auto nodes =
            oracle::clustered_nodes(cs.z0, 1e-3, static_cast<int>(cs.gamma.size()));
        std::vector<Complex> values;
        for (Complex q : nodes) values.push_back(F(q));
        const auto got = multipoint_region(InterpolationData{nodes, values}, z);
        worst = std::max({worst, std::abs(got.disk.center - ref.disk.center),
                          std::abs(got.disk.radius - ref.disk.radius)});
    }
    report(8, "confluence of clustered multi-point disks (delta = 1e-3)", worst < 1e-4,
           "max deviation " + fmt(worst));
}

void criterion_derivative_roundtrip() {
    std::mt19937_64 rng(777);
    double worst_est = 0.0, worst_move = 0.0;
    for (int rep = 0; rep < 100; ++rep) {
        const int n = static_cast<int>(rng() % 5);
        const Complex z0 = oracle::random_disk_point(rng, 0.6);
        std::vector<Complex> gamma;
        for (int k = 0; k <= n; ++k) gamma.push_back(oracle::random_disk_point(rng, 0.85));
        const Complex eps = oracle::random_disk_point(rng, 0.9);
        const auto f =
            SchurFunction::nested_chain(std::vector<Complex>(gamma.size(), z0), gamma, eps);

        worst_est = std::max(worst_est, std::abs(f(z0) - gamma[0]));
        for (int order = 1; order <= n; ++order)
            worst_est =
                std::max(worst_est, std::abs(hyperbolic_derivative_estimate(f, z0, order) -
                                             gamma[static_cast<std::size_t>(order)]));

        const auto g = conjugate_to_origin(SchurParameter{z0, gamma}, f);
        const auto moved = schur_parameters(g, 0.0, n + 1);
        for (int k = 0; k <= n; ++k)
            worst_move = std::max(worst_move, std::abs(moved[static_cast<std::size_t>(k)] -
                                                       gamma[static_cast<std::size_t>(k)]));
    }
    report(9, "derivative estimates and base-point moves recover parameters",
           worst_est < 1e-6 && worst_move < 1e-6,
           "max estimate error " + fmt(worst_est) + ", max move error " + fmt(worst_move));
}

// ------------------------------------------------------------- CLI

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int run_cli(const std::string& cli, const std::string& args) {
    const int rc = std::system((cli + " " + args + " 2>/dev/null").c_str());
    if (rc == -1) return -1;
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

void criterion_cli(const std::string& cli, const fs::path& fixtures) {
    struct Run {
        std::string args;     // with {in} and {out} placeholders
        std::string fixture;
        std::string golden;
        int exit_code;
    };
    const std::vector<Run> runs = {
        {"region --input {in} --output {out}", "f1_schwarz.json", "f1_region.json", 0},
        {"plot --input {in} --output {out}", "f1_schwarz.json", "f1_plot.svg", 0},
        {"region --input {in} --output {out}", "f2_twopoint.json", "f2_region.json", 0},
        {"table --input {in} --output {out}", "f2_twopoint.json", "f2_table.json", 0},
        {"plot --input {in} --output {out} --epsilon-samples 64", "f2_twopoint.json",
         "f2_plot.svg", 0},
        {"region --input {in} --output {out}", "f3_infeasible.json", "f3_region.json", 2},
        {"table --input {in} --output {out}", "f3_infeasible.json", "f3_table.json", 2},
        {"region --input {in} --output {out}", "f4_rogosinski.json", "f4_region.json", 0},
        {"solvability --input {in} --output {out}", "f4_rogosinski.json", "f4_solvability.json",
         0},
        {"plot --input {in} --output {out}", "f4_rogosinski.json", "f4_plot.svg", 0},
        {"region --input {in} --output {out}", "f5_unique.json", "f5_region.json", 0},
        {"solvability --input {in} --output {out}", "f5_unique.json", "f5_solvability.json", 0},
    };

    const fs::path tmp = fs::temp_directory_path() / "schur_acceptance";
    fs::create_directories(tmp);
    bool pass = true;
    std::string detail;

    for (const Run& r : runs) {
        const std::string in = (fixtures / r.fixture).string();
        const std::string out1 = (tmp / ("a_" + r.golden)).string();
        const std::string out2 = (tmp / ("b_" + r.golden)).string();
        auto subst = [&](const std::string& out) {
            std::string a = r.args;
            a.replace(a.find("{in}"), 4, in);
            a.replace(a.find("{out}"), 5, out);
            return a;
        };
        const int c1 = run_cli(cli, subst(out1));
        const int c2 = run_cli(cli, subst(out2));
        if (c1 != r.exit_code || c2 != r.exit_code) {
            pass = false;
            detail = r.golden + ": exit " + std::to_string(c1) + " want " +
                     std::to_string(r.exit_code);
            break;
        }
        const std::string b1 = slurp(out1), b2 = slurp(out2);
        if (b1.empty() || b1 != b2) {
            pass = false;
            detail = r.golden + ": outputs differ between runs";
            break;
        }
        const std::string want = slurp(fixtures / "golden" / r.golden);
        if (b1 != want) {
            pass = false;
            detail = r.golden + ": output differs from the golden file";
            break;
        }
    }

    if (pass) {
        // exit-code corners: malformed input, no-solution classification, empty verify
        const std::string bad = (tmp / "bad.json").string();
        std::ofstream(bad) << "this is not json";
        if (run_cli(cli, "region --input " + bad + " --output " + (tmp / "x.json").string()) !=
            1) {
            pass = false;
            detail = "malformed input should exit 1";
        }
        const std::string nosol = (tmp / "nosol.json").string();
        std::ofstream(nosol) << R"({"mode": "hyperbolic", "z0": [0, 0],)"
                             << R"( "gamma": [[0.5, 0], [1, 0], [0.2, 0]], "queries": []})";
        if (pass && run_cli(cli, "solvability --input " + nosol + " --output " +
                                     (tmp / "y.json").string()) != 2) {
            pass = false;
            detail = "no-solution classification should exit 2";
        }
        if (pass &&
            run_cli(cli, "verify --trials 0 --output " + (tmp / "z.json").string()) != 0) {
            pass = false;
            detail = "verify --trials 0 should exit 0";
        }
        // worker count must not leak into the bytes of randomized reports
        if (pass) {
            const std::string v1 = (tmp / "v1.json").string(), v2 = (tmp / "v2.json").string();
            const int e1 = std::system(("SCHUR_REGIONS_THREADS=1 " + cli +
                                        " verify --trials 60 --seed 5 --output " + v1)
                                           .c_str());
            const int e2 = std::system(("SCHUR_REGIONS_THREADS=8 " + cli +
                                        " verify --trials 60 --seed 5 --output " + v2)
                                           .c_str());
            if (WEXITSTATUS(e1) != 0 || WEXITSTATUS(e2) != 0 || slurp(v1) != slurp(v2) ||
                slurp(v1).empty()) {
                pass = false;
                detail = "verify reports depend on the thread budget";
            }
        }
    }

    fs::remove_all(tmp);
    report(10, "CLI golden files and exit codes", pass, detail);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::fprintf(stderr, "usage: acceptance <cli-binary> <fixtures-dir>\n");
        return 2;
    }
    const std::string cli = argv[1];
    const fs::path fixtures = argv[2];

    criterion_identities();
    criterion_membership();
    criterion_extremality();
    criterion_interpolation();
    criterion_solvability();
    criterion_closed_forms();
    criterion_radius_decay();
    criterion_confluence();
    criterion_derivative_roundtrip();
    criterion_cli(cli, fixtures);

    if (g_failures) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
