#include "schur/variability.hpp"

#include <cmath>

namespace schur {

VariabilityRegion VariabilityRegion::make_disk(ClosedDisk d, std::string why) {
    VariabilityRegion r;
    if (d.radius <= 0.0) {   // zero-radius disks surface as points
        r.kind = Kind::point;
        r.point = d.center;
    } else {
        r.kind = Kind::disk;
        r.disk = d;
    }
    r.provenance = std::move(why);
    return r;
}

VariabilityRegion VariabilityRegion::make_point(Complex p, std::string why) {
    VariabilityRegion r;
    r.kind = Kind::point;
    r.point = p;
    r.provenance = std::move(why);
    return r;
}

VariabilityRegion VariabilityRegion::make_empty(std::string why) {
    VariabilityRegion r;
    r.kind = Kind::empty;
    r.provenance = std::move(why);
    return r;
}

bool VariabilityRegion::contains(Complex w, double slack) const {
    switch (kind) {
        case Kind::disk: return disk.contains(w, slack);
        case Kind::point: return std::abs(w - point) <= slack;
        case Kind::empty: return false;
    }
    return false;
}

namespace {

// c(z), rho(z) of the main theorems: shared by both region solvers.
ClosedDisk region_disk(const ChainEvaluation& ev) {
    const std::size_t n = ev.stages() - 1;
    const ChainStage& s = ev.stage(n);
    const double t_last2 = std::norm(ev.t_factor(n));
    const double den = std::norm(s.B) - t_last2 * std::norm(s.A);
    if (den < 1e-13)
        throw std::runtime_error("region: denominator collapsed, data badly conditioned");
    const Complex c = (std::conj(s.B) * s.Bt - t_last2 * std::conj(s.A) * s.At) / den;
    double num = 1.0;
    for (std::size_t k = 0; k <= n; ++k)
        num *= std::abs(ev.t_factor(k)) * (1.0 - std::norm(ev.config().diagonal()[k]));
    return ClosedDisk{c, num / den};
}

std::vector<Complex> finite_diagonal(const std::vector<TableEntry>& diag, std::size_t upto) {
    std::vector<Complex> d;
    d.reserve(upto + 1);
    for (std::size_t k = 0; k <= upto; ++k) d.push_back(diag[k].value.value());
    return d;
}

}  // namespace

ChainConfig make_chain_config(const InterpolationData& data, const Tolerances& tol) {
    const DifferenceTable table = build_table(data, tol);
    if (table.infeasible())
        throw std::invalid_argument("make_chain_config: no interpolant exists for the data");
    const auto diag = table.diagonal();
    for (std::size_t k = 0; k + 1 < diag.size(); ++k)
        if (diag[k].status == EntryStatus::boundary)
            throw std::invalid_argument("make_chain_config: degenerate (boundary) table");
    return ChainConfig::multipoint(data.nodes, finite_diagonal(diag, diag.size() - 1), tol);
}

VariabilityRegion multipoint_region(const InterpolationData& data, Complex z,
                                    const Tolerances& tol) {
    data.validate(tol);
    if (std::abs(z) >= 1.0) throw std::domain_error("multipoint_region: |z| >= 1");

    const DifferenceTable table = build_table(data, tol);
    if (table.infeasible())
        return VariabilityRegion::make_empty("no interpolant: divided difference left the disk");

    for (std::size_t j = 0; j < data.size(); ++j)
        if (pseudo_hyperbolic_distance(z, data.nodes[j]) <= tol.separation)
            return VariabilityRegion::make_point(data.values[j], "query coincides with a node");

    const auto diag = table.diagonal();
    std::size_t boundary_at = diag.size();
    for (std::size_t k = 0; k < diag.size(); ++k)
        if (diag[k].status == EntryStatus::boundary) {
            boundary_at = k;
            break;
        }

    if (boundary_at < diag.size()) {
        // the interpolant is the forced Blaschke product of degree m
        const std::size_t m = boundary_at;
        const std::vector<Complex> d = finite_diagonal(diag, m);
        std::vector<Complex> chain_nodes(data.nodes.begin(),
                                         data.nodes.begin() + static_cast<long>(m));
        const Complex w = SchurFunction::nested_boundary(chain_nodes, d)(z);
        // independent route: the eps-free ratio Bt/B of the chain through d_m
        std::vector<Complex> all_nodes(data.nodes.begin(),
                                       data.nodes.begin() + static_cast<long>(m) + 1);
        const ChainEvaluation ev =
            evaluate_chain(ChainConfig::multipoint(std::move(all_nodes), d, tol), z);
        const Complex w2 = ev.last().Bt / ev.last().B;
        if (std::abs(w - w2) > 1e-9)
            throw std::runtime_error("multipoint_region: degenerate point forms disagree");
        return VariabilityRegion::make_point(w, "unique Blaschke interpolant");
    }

    const ChainConfig config =
        ChainConfig::multipoint(data.nodes, finite_diagonal(diag, diag.size() - 1), tol);
    return VariabilityRegion::make_disk(region_disk(evaluate_chain(config, z)), "interior disk");
}

VariabilityRegion hyperbolic_region(const SchurParameter& param, Complex z,
                                    const Tolerances& tol) {
    param.validate(tol);
    if (std::abs(z) >= 1.0) throw std::domain_error("hyperbolic_region: |z| >= 1");
    for (Complex g : param.gamma)
        if (std::abs(g) >= 1.0 - tol.boundary)
            throw std::domain_error(
                "hyperbolic_region: boundary parameter entry; classify with schur_solvability");
    if (pseudo_hyperbolic_distance(z, param.z0) <= tol.separation)
        return VariabilityRegion::make_point(param.gamma[0], "query coincides with the base point");

    const ChainConfig config = ChainConfig::confluent(param.z0, param.gamma, tol);
    const ChainEvaluation ev = evaluate_chain(config, z);

    const std::size_t n = ev.stages() - 1;
    const ChainStage& s = ev.stage(n);
    const double t2 = std::norm(ev.t_factor(n));
    const double den = std::norm(s.B) - t2 * std::norm(s.A);
    if (den < 1e-13)
        throw std::runtime_error("hyperbolic_region: denominator collapsed");
    const Complex c = (std::conj(s.B) * s.Bt - t2 * std::conj(s.A) * s.At) / den;
    const double rho =
        std::pow(std::abs(ev.t_factor(n)), static_cast<double>(n + 1)) * ev.gap_prefix(n) / den;
    return VariabilityRegion::make_disk(ClosedDisk{c, rho}, "interior disk");
}

VariabilityRegion hyperbolic_variability(const SchurParameter& param, Complex z,
                                         const Tolerances& tol) {
    const SolvabilityClass cls = schur_solvability(param, tol);
    switch (cls.kind) {
        case SolvabilityClass::Kind::infinitely_many:
            return hyperbolic_region(param, z, tol);
        case SolvabilityClass::Kind::unique_blaschke:
            return VariabilityRegion::make_point((*cls.unique)(z), "unique Blaschke interpolant");
        case SolvabilityClass::Kind::no_solution:
            return VariabilityRegion::make_empty("no solution for the parameter list");
    }
    throw std::logic_error("hyperbolic_variability: unreachable");
}

SolvabilityClass schur_solvability(const SchurParameter& param, const Tolerances& tol) {
    if (param.gamma.empty()) throw std::invalid_argument("schur_solvability: empty parameter list");
    if (std::abs(param.z0) >= 1.0) throw std::invalid_argument("schur_solvability: |z0| >= 1");

    SolvabilityClass out;
    const auto& g = param.gamma;
    std::size_t j = g.size();
    for (std::size_t k = 0; k < g.size(); ++k) {
        if (std::abs(g[k]) >= 1.0 - tol.boundary) {
            j = k;
            break;
        }
    }
    if (j == g.size()) {
        out.kind = SolvabilityClass::Kind::infinitely_many;
        return out;
    }
    if (std::abs(g[j]) > 1.0 + tol.boundary) {
        out.kind = SolvabilityClass::Kind::no_solution;   // |gamma_j| > 1
        return out;
    }
    for (std::size_t k = j + 1; k < g.size(); ++k) {
        if (std::abs(g[k]) > tol.boundary) {
            out.kind = SolvabilityClass::Kind::no_solution;
            return out;
        }
    }
    out.kind = SolvabilityClass::Kind::unique_blaschke;
    out.degree = static_cast<int>(j);
    std::vector<Complex> head(g.begin(), g.begin() + static_cast<long>(j) + 1);
    out.unique = SchurFunction::nested_boundary(std::vector<Complex>(j, param.z0), head);
    return out;
}

Complex extremal_eval(const ChainConfig& config, Complex eps, Complex z) {
    if (std::abs(eps) > 1.0 + kInfinityTol)
        throw std::domain_error("extremal_eval: |eps| > 1");
    if (std::abs(z) >= 1.0) throw std::domain_error("extremal_eval: |z| >= 1");
    if (config.last_entry_boundary())
        throw std::domain_error("extremal_eval: degenerate problem, use the unique interpolant");

    const ChainEvaluation ev = evaluate_chain(config, z);
    const ChainStage& s = ev.last();
    const Complex t = ev.t_factor(ev.stages() - 1);
    const Complex rational = (eps * t * s.At + s.Bt) / (eps * t * s.A + s.B);
    const Complex nested =
        SchurFunction::nested_chain(config.node_list(), config.diagonal(), eps)(z);
    if (std::abs(rational - nested) > 1e-11 * (1.0 + std::abs(rational)))
        throw std::runtime_error("extremal_eval: nested and rational forms disagree");
    return rational;
}

Complex interpolant_eval(const ChainConfig& config, const SchurFunction& fstar, Complex z) {
    if (std::abs(z) >= 1.0) throw std::domain_error("interpolant_eval: |z| >= 1");
    const ChainEvaluation ev = evaluate_chain(config, z);
    const ChainStage& s = ev.last();
    const Complex t = ev.t_factor(ev.stages() - 1);
    const Complex fs = fstar(z);
    return (t * s.At * fs + s.Bt) / (t * s.A * fs + s.B);
}

Complex free_parameter_from_value(const ChainConfig& config, Complex f_of_z, Complex z) {
    const ChainEvaluation ev = evaluate_chain(config, z);
    const ChainStage& s = ev.last();
    const Complex t = ev.t_factor(ev.stages() - 1);
    const Complex den = t * (s.At - s.A * f_of_z);
    if (std::abs(den) < 1e-300)
        throw std::runtime_error("free_parameter_from_value: degenerate inversion");
    return (s.B * f_of_z - s.Bt) / den;
}

SchurFunction conjugate_to_origin(const SchurParameter& param, const SchurFunction& f,
                                  const Tolerances& tol) {
    param.validate(tol);
    const int count = static_cast<int>(param.gamma.size());
    const std::vector<Complex> actual = schur_parameters(f, param.z0, count, tol);
    for (int k = 0; k < count; ++k)
        if (std::abs(actual[static_cast<std::size_t>(k)] -
                     param.gamma[static_cast<std::size_t>(k)]) > 1e-8)
            throw std::invalid_argument("conjugate_to_origin: f does not carry the stated parameters");

    // T_{z0}(z) = (z + z0)/(1 + conj(z0) z) is the degree-1 factor with zero -z0
    SchurFunction g =
        SchurFunction::compose(f, SchurFunction::blaschke({-param.z0}, 0.0));
    const std::vector<Complex> moved = schur_parameters(g, 0.0, count, tol);
    for (int k = 0; k < count; ++k)
        if (std::abs(moved[static_cast<std::size_t>(k)] -
                     param.gamma[static_cast<std::size_t>(k)]) > 1e-5)
            throw std::runtime_error("conjugate_to_origin: parameter verification failed after the move");
    return g;
}

}  // namespace schur
