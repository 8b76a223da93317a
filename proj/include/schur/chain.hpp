#pragma once

#include <vector>

#include "schur/hyperbolic.hpp"

// The 2x2 matrix recurrence producing the rational functions A_k, At_k,
// B_k, Bt_k whose ratios parametrize every interpolant, together with
// checkable forms of the identities they satisfy.

namespace schur {

class ChainConfig {
public:
    // one node per stage, nodes.size() == diagonal.size()
    static ChainConfig multipoint(std::vector<Complex> nodes, std::vector<Complex> diagonal,
                                  const Tolerances& tol = {});
    // all stages anchored at z0, diagonal = (gamma_0 .. gamma_n)
    static ChainConfig confluent(Complex z0, std::vector<Complex> gamma,
                                 const Tolerances& tol = {});

    bool is_confluent() const { return confluent_; }
    std::size_t size() const { return diagonal_.size(); }   // n + 1
    Complex node(std::size_t k) const { return confluent_ ? base_ : nodes_[k]; }
    Complex base() const { return base_; }
    const std::vector<Complex>& diagonal() const { return diagonal_; }
    bool last_entry_boundary() const { return last_boundary_; }
    std::vector<Complex> node_list() const;

private:
    ChainConfig() = default;
    std::vector<Complex> nodes_;
    std::vector<Complex> diagonal_;
    Complex base_{0.0, 0.0};
    bool confluent_ = false;
    bool last_boundary_ = false;
};

struct ChainStage {
    Complex A, At, B, Bt;
};

class ChainEvaluation {
public:
    std::size_t stages() const { return stages_.size(); }
    const ChainStage& stage(std::size_t k) const { return stages_[k]; }
    const ChainStage& last() const { return stages_.back(); }
    Complex query() const { return z_; }
    // T_{-node(k)}(z)
    Complex t_factor(std::size_t k) const { return t_factors_[k]; }
    // prod_{l < k} t_factor(l); index up to stages()
    Complex t_prefix(std::size_t k) const { return t_prefix_[k]; }
    // prod_{l <= k} (1 - |d_l|^2)
    double gap_prefix(std::size_t k) const { return gap_prefix_[k]; }
    const ChainConfig& config() const { return config_; }

private:
    friend ChainEvaluation evaluate_chain_extended(const ChainConfig&, Complex);
    ChainEvaluation(ChainConfig cfg, Complex z) : config_(std::move(cfg)), z_(z) {}
    ChainConfig config_;
    Complex z_{0.0, 0.0};
    std::vector<ChainStage> stages_;
    std::vector<Complex> t_factors_;
    std::vector<Complex> t_prefix_;
    std::vector<double> gap_prefix_;
};

// Evaluates all stages k = 0..n at z, |z| <= 1.
ChainEvaluation evaluate_chain(const ChainConfig& config, Complex z);

// Same with no disk guard: the rational functions extend to the plane and
// the reflection identities need values at 1/conj(z).
ChainEvaluation evaluate_chain_extended(const ChainConfig& config, Complex z);

// max over k of |At_k B_k - A_k Bt_k - P_k| / (1 + |P_k|) with
// P_k = prod_{l<k} T_{-z_l}(z) prod_{l<=k} (1 - |d_l|^2).
double check_determinant_identity(const ChainEvaluation& ev);

// max residual of the four reflection formulas relating values at z and
// 1/conj(z); requires z != 0 and no T-factor pole at the reflected point.
double check_reflection_identity(const ChainConfig& config, Complex z);

// max residual of the two consecutive-stage identities.
double check_neighbor_identities(const ChainEvaluation& ev);

// min over k of |B_k|^2 - |A_k|^2 - prod_{l<=k}(1 - |d_l|^2); valid for
// |z| <= 1.  Throws if |Bt_k| >= |B_k| anywhere, which the chain excludes.
double check_coefficient_gap(const ChainEvaluation& ev);

}  // namespace schur
