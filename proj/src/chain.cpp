#include "schur/chain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace schur {

namespace {

void validate_diagonal(const std::vector<Complex>& diag, const Tolerances& tol) {
    if (diag.empty()) throw std::invalid_argument("ChainConfig: empty diagonal");
    for (std::size_t k = 0; k + 1 < diag.size(); ++k)
        if (std::abs(diag[k]) >= 1.0 - tol.boundary)
            throw std::invalid_argument("ChainConfig: interior diagonal entry on the boundary");
    if (std::abs(diag.back()) > 1.0 + tol.boundary)
        throw std::invalid_argument("ChainConfig: last diagonal entry outside the closed disk");
}

}  // namespace

ChainConfig ChainConfig::multipoint(std::vector<Complex> nodes, std::vector<Complex> diagonal,
                                    const Tolerances& tol) {
    if (nodes.size() != diagonal.size())
        throw std::invalid_argument("ChainConfig: need one node per diagonal entry");
    for (Complex z : nodes)
        if (std::abs(z) >= 1.0) throw std::invalid_argument("ChainConfig: node outside the open disk");
    validate_diagonal(diagonal, tol);
    ChainConfig c;
    c.nodes_ = std::move(nodes);
    c.diagonal_ = std::move(diagonal);
    c.last_boundary_ = std::abs(c.diagonal_.back()) >= 1.0 - tol.boundary;
    return c;
}

ChainConfig ChainConfig::confluent(Complex z0, std::vector<Complex> gamma, const Tolerances& tol) {
    if (std::abs(z0) >= 1.0) throw std::invalid_argument("ChainConfig: |z0| >= 1");
    validate_diagonal(gamma, tol);
    ChainConfig c;
    c.confluent_ = true;
    c.base_ = z0;
    c.diagonal_ = std::move(gamma);
    c.last_boundary_ = std::abs(c.diagonal_.back()) >= 1.0 - tol.boundary;
    return c;
}

std::vector<Complex> ChainConfig::node_list() const {
    if (!confluent_) return nodes_;
    return std::vector<Complex>(diagonal_.size(), base_);
}

ChainEvaluation evaluate_chain_extended(const ChainConfig& config, Complex z) {
    const std::size_t n1 = config.size();
    ChainEvaluation ev(config, z);
    ev.stages_.reserve(n1);
    ev.t_factors_.reserve(n1);
    ev.t_prefix_.reserve(n1 + 1);
    ev.gap_prefix_.reserve(n1);

    for (std::size_t k = 0; k < n1; ++k)
        ev.t_factors_.push_back(mobius_raw(-config.node(k), z));

    Complex tp = 1.0;
    ev.t_prefix_.push_back(tp);
    double gp = 1.0;
    const auto& d = config.diagonal();

    ChainStage s{std::conj(d[0]), 1.0, 1.0, d[0]};
    ev.stages_.push_back(s);
    gp *= 1.0 - std::norm(d[0]);
    ev.gap_prefix_.push_back(gp);
    tp *= ev.t_factors_[0];
    ev.t_prefix_.push_back(tp);

    for (std::size_t k = 1; k < n1; ++k) {
        const Complex t = ev.t_factors_[k - 1];
        const Complex dk = d[k];
        ChainStage next;
        next.A = t * s.A + std::conj(dk) * s.B;
        next.At = t * s.At + std::conj(dk) * s.Bt;
        next.B = t * dk * s.A + s.B;
        next.Bt = t * dk * s.At + s.Bt;
        s = next;
        ev.stages_.push_back(s);
        gp *= 1.0 - std::norm(dk);
        ev.gap_prefix_.push_back(gp);
        if (k + 1 <= n1) {
            tp *= ev.t_factors_[k];
            ev.t_prefix_.push_back(tp);
        }
    }
    return ev;
}

ChainEvaluation evaluate_chain(const ChainConfig& config, Complex z) {
    if (std::abs(z) > 1.0 + kInfinityTol)
        throw std::domain_error("evaluate_chain: |z| > 1");
    return evaluate_chain_extended(config, z);
}

double check_determinant_identity(const ChainEvaluation& ev) {
    double worst = 0.0;
    for (std::size_t k = 0; k < ev.stages(); ++k) {
        const ChainStage& s = ev.stage(k);
        const Complex lhs = s.At * s.B - s.A * s.Bt;
        const Complex rhs = ev.t_prefix(k) * ev.gap_prefix(k);
        worst = std::max(worst, std::abs(lhs - rhs) / (1.0 + std::abs(rhs)));
    }
    return worst;
}

double check_reflection_identity(const ChainConfig& config, Complex z) {
    if (std::abs(z) < 1e-13)
        throw std::domain_error("check_reflection_identity: z must be nonzero");
    const Complex zr = 1.0 / std::conj(z);
    const ChainEvaluation ev = evaluate_chain_extended(config, z);
    const ChainEvaluation evr = evaluate_chain_extended(config, zr);   // throws at a pole
    double worst = 0.0;
    for (std::size_t k = 0; k < ev.stages(); ++k) {
        const ChainStage& s = ev.stage(k);
        const ChainStage& r = evr.stage(k);
        const Complex tp = ev.t_prefix(k);
        const double res[4] = {
            std::abs(s.At - std::conj(r.B) * tp) / (1.0 + std::abs(s.At)),
            std::abs(s.Bt - std::conj(r.A) * tp) / (1.0 + std::abs(s.Bt)),
            std::abs(s.A - std::conj(r.Bt) * tp) / (1.0 + std::abs(s.A)),
            std::abs(s.B - std::conj(r.At) * tp) / (1.0 + std::abs(s.B)),
        };
        worst = std::max({worst, res[0], res[1], res[2], res[3]});
    }
    return worst;
}

double check_neighbor_identities(const ChainEvaluation& ev) {
    double worst = 0.0;
    const auto& d = ev.config().diagonal();
    for (std::size_t k = 0; k + 1 < ev.stages(); ++k) {
        const ChainStage& s = ev.stage(k);
        const ChainStage& t = ev.stage(k + 1);
        const Complex rhs_a = std::conj(d[k + 1]) * ev.t_prefix(k) * ev.gap_prefix(k);
        const Complex rhs_b = d[k + 1] * ev.t_prefix(k + 1) * ev.gap_prefix(k);
        const Complex lhs_a = s.At * t.A - s.A * t.At;
        const Complex lhs_b = s.B * t.Bt - s.Bt * t.B;
        worst = std::max({worst, std::abs(lhs_a - rhs_a) / (1.0 + std::abs(rhs_a)),
                          std::abs(lhs_b - rhs_b) / (1.0 + std::abs(rhs_b))});
    }
    return worst;
}

double check_coefficient_gap(const ChainEvaluation& ev) {
    double min_slack = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < ev.stages(); ++k) {
        const ChainStage& s = ev.stage(k);
        min_slack = std::min(min_slack, std::norm(s.B) - std::norm(s.A) - ev.gap_prefix(k));
        if (std::abs(s.Bt) >= std::abs(s.B))
            throw std::runtime_error("check_coefficient_gap: |Bt| >= |B|, chain invariant broken");
    }
    return min_slack;
}

}  // namespace schur
