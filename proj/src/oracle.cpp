#include "schur/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "schur/parallel.hpp"

namespace schur::oracle {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::string format_complex(Complex v) {
    char buf[80];
    std::snprintf(buf, sizeof buf, "[%.17g, %.17g]", v.real(), v.imag());
    return buf;
}

std::string format_case(const std::vector<Complex>& nodes, const std::vector<Complex>& values,
                        Complex z, std::uint64_t seed, long trial) {
    std::string s = "{\"seed\": " + std::to_string(seed) + ", \"trial\": " + std::to_string(trial) +
                    ", \"nodes\": [";
    for (std::size_t i = 0; i < nodes.size(); ++i)
        s += (i ? ", " : "") + format_complex(nodes[i]);
    s += "], \"values\": [";
    for (std::size_t i = 0; i < values.size(); ++i)
        s += (i ? ", " : "") + format_complex(values[i]);
    s += "], \"z\": " + format_complex(z) + "}";
    return s;
}

}  // namespace

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Complex random_disk_point(std::mt19937_64& rng, double rmax) {
    const double r = rmax * std::sqrt(uniform01(rng));
    const double phi = 2.0 * kPi * uniform01(rng);
    return std::polar(r, phi);
}

SchurFunction random_blaschke(int degree, std::mt19937_64& rng) {
    if (degree < 0 || degree > 32)
        throw std::domain_error("random_blaschke: degree must lie in [0, 32]");
    std::vector<Complex> zeros;
    zeros.reserve(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) zeros.push_back(random_disk_point(rng, 0.9));
    const double theta = 2.0 * kPi * uniform01(rng);
    return SchurFunction::blaschke(std::move(zeros), theta);
}

SchurFunction random_blaschke(int degree, std::uint64_t seed) {
    std::mt19937_64 rng(splitmix64(seed));
    return random_blaschke(degree, rng);
}

SchurFunction random_ground_truth(const RandomProblemSpec& spec, std::mt19937_64& rng) {
    const int degree = spec.degree >= 0 ? spec.degree : spec.n + 2;
    switch (spec.family) {
        case RandomProblemSpec::Family::blaschke:
            return random_blaschke(degree, rng);
        case RandomProblemSpec::Family::scaled_blaschke: {
            const double scale = 0.3 + 0.65 * uniform01(rng);
            std::vector<Complex> zeros;
            for (int i = 0; i < degree; ++i) zeros.push_back(random_disk_point(rng, 0.9));
            return SchurFunction::scaled_blaschke(scale, std::move(zeros),
                                                  2.0 * kPi * uniform01(rng));
        }
        case RandomProblemSpec::Family::constant:
            return SchurFunction::constant(random_disk_point(rng, 0.95));
    }
    throw std::logic_error("random_ground_truth: unreachable");
}

MembershipReport membership_test(const RandomProblemSpec& spec, long trials) {
    struct TrialOutcome {
        double overhang = -1.0;
        long resampled = 0;
        bool violated = false;
        std::string replay;
    };
    std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(trials));

    parallel_for(static_cast<std::size_t>(trials), [&](std::size_t idx) {
        std::mt19937_64 rng(splitmix64(spec.seed + idx));
        TrialOutcome& out = outcomes[idx];
        const std::size_t points = static_cast<std::size_t>(spec.n) + 1;

        for (int attempt = 0; attempt < 100; ++attempt) {
            const SchurFunction F = random_ground_truth(spec, rng);
            std::vector<Complex> nodes;
            while (nodes.size() < points) {
                const Complex c = random_disk_point(rng, spec.r_max);
                bool clear = true;
                for (Complex q : nodes)
                    if (pseudo_hyperbolic_distance(c, q) < 1e-3) clear = false;
                if (clear) nodes.push_back(c);
            }
            std::vector<Complex> values;
            values.reserve(points);
            for (Complex q : nodes) values.push_back(F(q));

            InterpolationData data{nodes, values};
            const DifferenceTable table = build_table(data);
            bool degenerate = table.infeasible();
            for (const TableEntry& e : table.diagonal())
                if (e.status != EntryStatus::interior) degenerate = true;
            if (degenerate) {
                ++out.resampled;
                continue;
            }

            Complex z;
            for (;;) {
                z = random_disk_point(rng, 0.95);
                bool clear = true;
                for (Complex q : nodes)
                    if (pseudo_hyperbolic_distance(z, q) < 1e-3) clear = false;
                if (clear) break;
            }

            const VariabilityRegion region = multipoint_region(data, z);
            const Complex truth = F(z);
            double overhang;
            if (region.kind == VariabilityRegion::Kind::disk)
                overhang = std::abs(truth - region.disk.center) - region.disk.radius;
            else if (region.kind == VariabilityRegion::Kind::point)
                overhang = std::abs(truth - region.point);
            else
                overhang = 1.0;   // empty region cannot contain the generator
            out.overhang = overhang;
            if (overhang > 1e-9) {
                out.violated = true;
                out.replay = format_case(nodes, values, z, spec.seed, static_cast<long>(idx));
            }
            return;
        }
        // ran out of attempts; record as a resample-starved draw, not a violation
        out.overhang = -1.0;
    });

    MembershipReport report;
    report.seed = spec.seed;
    report.trials = trials;
    for (long i = 0; i < trials; ++i) {
        const TrialOutcome& out = outcomes[static_cast<std::size_t>(i)];
        report.resampled_draws += out.resampled;
        report.max_overhang = std::max(report.max_overhang, out.overhang);
        if (out.violated) {
            ++report.violations;
            if (report.first_violation_trial < 0) {
                report.first_violation_trial = i;
                report.first_violation_case = out.replay;
            }
        }
    }
    return report;
}

std::vector<Complex> clustered_nodes(Complex z0, double delta, int count) {
    if (count < 1) throw std::domain_error("clustered_nodes: count must be >= 1");
    if (count == 1) return {z0};
    if (std::abs(z0) + delta >= 1.0)
        throw std::domain_error("clustered_nodes: cluster leaves the unit disk");
    std::vector<Complex> nodes;
    nodes.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k)
        nodes.push_back(z0 + std::polar(delta, 2.0 * kPi * k / count));
    return nodes;
}

ConfluenceReport confluence_experiment(Complex z0, const std::vector<Complex>& gamma,
                                       double delta0, const SchurFunction& F,
                                       const Tolerances& tol) {
    if (delta0 < 1e-4 || delta0 > 1e-1)
        throw std::domain_error("confluence_experiment: delta must lie in [1e-4, 1e-1]");
    SchurParameter param{z0, gamma};
    param.validate(tol);

    const int count = static_cast<int>(gamma.size());
    const std::vector<Complex> actual = schur_parameters(F, z0, count, tol);
    for (int k = 0; k < count; ++k)
        if (std::abs(actual[static_cast<std::size_t>(k)] - gamma[static_cast<std::size_t>(k)]) > 1e-6)
            throw std::invalid_argument("confluence_experiment: F does not carry the parameters");

    Complex z = z0 + std::polar(0.35 * (1.0 - std::abs(z0)), 0.7);
    const VariabilityRegion ref = hyperbolic_region(param, z, tol);

    double scale = 1.0;
    for (Complex g : gamma) scale /= (1.0 - std::norm(g));
    const double noise_floor = 1e-11 * scale;

    ConfluenceReport report;
    bool monotone = true;
    for (int rung = 0; rung < 8; ++rung) {
        const double delta = delta0 * std::pow(0.5, rung);
        const std::vector<Complex> nodes = clustered_nodes(z0, delta, count);
        std::vector<Complex> values;
        values.reserve(nodes.size());
        for (Complex q : nodes) values.push_back(F(q));
        const VariabilityRegion got = multipoint_region(InterpolationData{nodes, values}, z, tol);
        if (got.kind != VariabilityRegion::Kind::disk) {
            report.note = "clustered problem degenerated at delta=" + std::to_string(delta);
            return report;
        }
        const double dc = std::abs(got.disk.center - ref.disk.center);
        const double dr = std::abs(got.disk.radius - ref.disk.radius);
        if (!report.deltas.empty()) {
            const double prev = report.center_dev.back() + report.radius_dev.back();
            if (dc + dr > 1.1 * prev + noise_floor) monotone = false;
        }
        report.deltas.push_back(delta);
        report.center_dev.push_back(dc);
        report.radius_dev.push_back(dr);
    }
    const double final_dev = report.center_dev.back() + report.radius_dev.back();
    report.converged = monotone && final_dev <= 1e-3;
    if (!report.converged)
        report.note = monotone ? "deviations stagnate above 1e-3" : "deviations not monotone";
    return report;
}

bool IdentityReport::pass(double residual_tol) const {
    return max_determinant < residual_tol && max_reflection < residual_tol &&
           max_neighbor < residual_tol && min_gap_slack >= -residual_tol &&
           first_violation_trial < 0;
}

IdentityReport identity_suite(std::uint64_t seed, long trials) {
    struct TrialOutcome {
        double det = 0.0, refl = 0.0, nb = 0.0, gap = 0.0;
        bool violated = false;
        std::string replay;
    };
    std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(trials));

    parallel_for(static_cast<std::size_t>(trials), [&](std::size_t idx) {
        std::mt19937_64 rng(splitmix64(seed ^ (0x5851f42d4c957f2dULL + idx)));
        TrialOutcome& out = outcomes[idx];

        const int n = static_cast<int>(rng() % 7);   // n <= 6
        std::vector<Complex> nodes, diag;
        for (int k = 0; k <= n; ++k) {
            nodes.push_back(random_disk_point(rng, 0.9));
            diag.push_back(random_disk_point(rng, 0.95));
        }
        Complex z = random_disk_point(rng, 1.0);
        while (std::abs(z) < 1e-2) z = random_disk_point(rng, 1.0);

        const ChainConfig config = ChainConfig::multipoint(nodes, diag);
        const ChainEvaluation ev = evaluate_chain(config, z);
        out.det = check_determinant_identity(ev);
        out.nb = check_neighbor_identities(ev);
        out.gap = check_coefficient_gap(ev);
        out.refl = check_reflection_identity(config, z);
        if (out.det > 1e-11 || out.nb > 1e-11 || out.refl > 1e-11 || out.gap < -1e-11) {
            out.violated = true;
            out.replay = format_case(nodes, diag, z, seed, static_cast<long>(idx));
        }
    });

    IdentityReport report;
    report.seed = seed;
    report.trials = trials;
    report.min_gap_slack = trials > 0 ? std::numeric_limits<double>::infinity() : 0.0;
    for (long i = 0; i < trials; ++i) {
        const TrialOutcome& out = outcomes[static_cast<std::size_t>(i)];
        report.max_determinant = std::max(report.max_determinant, out.det);
        report.max_reflection = std::max(report.max_reflection, out.refl);
        report.max_neighbor = std::max(report.max_neighbor, out.nb);
        report.min_gap_slack = std::min(report.min_gap_slack, out.gap);
        if (out.violated && report.first_violation_trial < 0) {
            report.first_violation_trial = i;
            report.first_violation_case = out.replay;
        }
    }
    return report;
}

}  // namespace schur::oracle
