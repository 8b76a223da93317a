#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "schur/schur_function.hpp"
#include "schur/variability.hpp"

// Ground-truth generators and brute-force verification drives shared by
// the property suites and the verify subcommand.

namespace schur::oracle {

// Deterministic uniform in [0, 1) from the raw engine output, so reports
// replay bit-for-bit regardless of the standard library.
double uniform01(std::mt19937_64& rng);
// Area-uniform point with |z| <= rmax.
Complex random_disk_point(std::mt19937_64& rng, double rmax);

struct RandomProblemSpec {
    enum class Family { blaschke, scaled_blaschke, constant };

    std::uint64_t seed = 1;
    int n = 2;                 // n + 1 interpolation nodes
    double r_max = 0.9;        // node / zero sampling radius
    Family family = Family::blaschke;
    int degree = -1;           // ground-truth Blaschke degree; -1 = n + 2
};

SchurFunction random_blaschke(int degree, std::uint64_t seed);
SchurFunction random_blaschke(int degree, std::mt19937_64& rng);
SchurFunction random_ground_truth(const RandomProblemSpec& spec, std::mt19937_64& rng);

struct MembershipReport {
    long trials = 0;
    long violations = 0;
    long resampled_draws = 0;      // infeasible draws that were re-rolled
    double max_overhang = -1.0;    // max |F(z) - c| - rho over all trials
    std::uint64_t seed = 0;
    long first_violation_trial = -1;
    std::string first_violation_case;   // serialized problem for replay
};

// Samples ground truth F, interpolation data from it, and random queries;
// every F(z) must land in the computed region (tolerance 1e-9).
MembershipReport membership_test(const RandomProblemSpec& spec, long trials);

struct ConfluenceReport {
    std::vector<double> deltas;
    std::vector<double> center_dev;
    std::vector<double> radius_dev;
    bool converged = false;
    std::string note;
};

// Clusters nodes around z0 at shrinking spreads and compares the
// multi-point disk with the prescribed-derivative disk of gamma.
// F must carry the parameters gamma at z0.
ConfluenceReport confluence_experiment(Complex z0, const std::vector<Complex>& gamma,
                                       double delta0, const SchurFunction& F,
                                       const Tolerances& tol = {});

// Node cluster used by the experiment: z0 itself for a single point,
// otherwise z0 + delta * (roots of unity) so odd-order errors cancel.
std::vector<Complex> clustered_nodes(Complex z0, double delta, int count);

struct IdentityReport {
    long trials = 0;
    double max_determinant = 0.0;
    double max_reflection = 0.0;
    double max_neighbor = 0.0;
    double min_gap_slack = 0.0;
    std::uint64_t seed = 0;
    long first_violation_trial = -1;
    std::string first_violation_case;
    bool pass(double residual_tol = 1e-11) const;
};

// Random chain configurations (n <= 6, |entries| <= 0.95) checked against
// the determinant, reflection, neighbor and gap identities.
IdentityReport identity_suite(std::uint64_t seed, long trials);

}  // namespace schur::oracle
