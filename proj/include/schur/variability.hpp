#pragma once

#include <optional>
#include <string>

#include "schur/chain.hpp"
#include "schur/divided_differences.hpp"
#include "schur_function.hpp"

// Top-level solvers: exact variability regions for multi-point data and
// for prescribed hyperbolic derivatives, the solvability trichotomy, and
// extremal / interpolant evaluation.

namespace schur {

struct VariabilityRegion {
    enum class Kind { disk, point, empty };

    Kind kind = Kind::empty;
    ClosedDisk disk{};       // kind == disk
    Complex point{};         // kind == point
    std::string provenance;  // which theorem case produced the result

    static VariabilityRegion make_disk(ClosedDisk d, std::string why);
    static VariabilityRegion make_point(Complex p, std::string why);
    static VariabilityRegion make_empty(std::string why);

    bool contains(Complex w, double slack) const;
};

struct SolvabilityClass {
    enum class Kind { infinitely_many, unique_blaschke, no_solution };

    Kind kind = Kind::no_solution;
    int degree = -1;                        // unique_blaschke only
    std::optional<SchurFunction> unique;    // the forced Blaschke product
};

// Region of f(z) over all Schur-class f with f(z_j) = w_j.  A query inside
// the separation tolerance of a node returns that node's value as a point.
VariabilityRegion multipoint_region(const InterpolationData& data, Complex z,
                                    const Tolerances& tol = {});

// Region of f(z) over all f with prescribed value and hyperbolic
// derivatives at z0; requires every gamma entry strictly interior.
// Boundary entries are a solvability question, not a disk: use
// schur_solvability / hyperbolic_variability for those.
VariabilityRegion hyperbolic_region(const SchurParameter& param, Complex z,
                                    const Tolerances& tol = {});

// Full trichotomy dispatch accepting closed-disk gamma entries.
VariabilityRegion hyperbolic_variability(const SchurParameter& param, Complex z,
                                         const Tolerances& tol = {});

SolvabilityClass schur_solvability(const SchurParameter& param, const Tolerances& tol = {});

// f_eps(z); evaluates both the nested tower and the rational chain form
// and insists they agree before returning the latter.
Complex extremal_eval(const ChainConfig& config, Complex eps, Complex z);

// Interpolant generated by a free Schur parameter function fstar.
Complex interpolant_eval(const ChainConfig& config, const SchurFunction& fstar, Complex z);

// Recovers fstar(z) from an interpolant value by inverting the chain form.
Complex free_parameter_from_value(const ChainConfig& config, Complex f_of_z, Complex z);

// g = f o T_{z0}: moves a problem anchored at z0 to the origin; verifies
// that f carries the stated parameters and that g reproduces them at 0.
SchurFunction conjugate_to_origin(const SchurParameter& param, const SchurFunction& f,
                                  const Tolerances& tol = {});

// Convenience: diagonal of the difference table as a chain configuration.
// Throws if the table is infeasible or degenerate.
ChainConfig make_chain_config(const InterpolationData& data, const Tolerances& tol = {});

}  // namespace schur
