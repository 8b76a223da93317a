#pragma once

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "schur/hyperbolic.hpp"

// Evaluatable functions of the Schur class (analytic self-maps of the
// closed disk) with enough declared structure to differentiate them
// exactly, plus the difference-quotient operator that drives the Schur
// algorithm.

namespace schur {

// Truncated Taylor expansion c_0 + c_1 u + ... + c_m u^m about an
// implicit base point.  All binary operations require equal length.
class TaylorJet {
public:
    TaylorJet() = default;
    explicit TaylorJet(std::vector<Complex> coeffs) : c_(std::move(coeffs)) {}
    static TaylorJet constant(Complex v, int order);
    // value + u (the coordinate z expanded at a base with z(base) = value)
    static TaylorJet variable(Complex value, int order);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    Complex operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
    Complex& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }
    const std::vector<Complex>& coeffs() const { return c_; }

    friend TaylorJet operator+(const TaylorJet& a, const TaylorJet& b);
    friend TaylorJet operator-(const TaylorJet& a, const TaylorJet& b);
    friend TaylorJet operator*(const TaylorJet& a, const TaylorJet& b);
    friend TaylorJet operator/(const TaylorJet& a, const TaylorJet& b);
    friend TaylorJet operator*(Complex s, const TaylorJet& a);

private:
    std::vector<Complex> c_;
};

// outer evaluated on an inner increment jet whose constant term is zero.
TaylorJet compose_jets(const TaylorJet& outer, const TaylorJet& inner_increment);

// Jet of T_a(u) for a jet-valued argument u.
TaylorJet mobius_jet(Complex a, const TaylorJet& u);

// Jet of z |-> T_{-c}(z) = (z - c)/(1 - conj(c) z) about z0.
TaylorJet mobius_factor_jet(Complex c, Complex z0, int order);

struct DerivativeEstimate {
    Complex value;
    double uncertainty;   // spread of the last two extrapolants
};

// Central differences over +-h, +-ih at radii h, h/2, h/4 with two
// Richardson eliminations.  h defaults to 1e-2 (1 - |z0|) when <= 0.
DerivativeEstimate richardson_derivative(const std::function<Complex(Complex)>& f,
                                         Complex z0, double base_step = 0.0);
// Same stencil applied to function values: extrapolates lim_{z->z0} f(z).
DerivativeEstimate richardson_limit(const std::function<Complex(Complex)>& f,
                                    Complex z0, double base_step = 0.0);

class SchurFunction {
public:
    Complex operator()(Complex z) const;
    // Complex derivative; exact for structured forms, numerical for custom.
    Complex derivative(Complex z) const;

    // True when the structure supports exact Taylor jets.
    bool has_jet() const;
    TaylorJet jet(Complex z0, int order) const;

    bool is_constant() const;
    // Set when delta_operator collapsed a unimodular value by the
    // maximum principle.
    bool maximum_principle_constant() const;

    static SchurFunction constant(Complex c);
    static SchurFunction identity();
    // scale e^{i theta} prod (z - a_j)/(1 - conj(a_j) z), scale in (0, 1].
    static SchurFunction blaschke(std::vector<Complex> zeros, double theta);
    static SchurFunction scaled_blaschke(double scale, std::vector<Complex> zeros, double theta);
    // T_{d_0}(T_{-n_0}(z) T_{d_1}( ... T_{d_m}(eps T_{-n_m}(z)) ... ));
    // nodes and diagonal have equal length m+1.
    static SchurFunction nested_chain(std::vector<Complex> nodes,
                                      std::vector<Complex> diagonal, Complex eps);
    // Same tower terminated by the unimodular constant d_m in place of the
    // innermost free block: T_{d_0}( ... T_{d_{m-1}}(d_m T_{-n_{m-1}}(z)) ... ).
    // Requires nodes.size() + 1 == diagonal.size(); a Blaschke product of
    // degree m.
    static SchurFunction nested_boundary(std::vector<Complex> nodes,
                                         std::vector<Complex> diagonal);
    static SchurFunction compose(SchurFunction outer, SchurFunction inner);
    // Opaque callable: no jets, numerical derivatives only.
    static SchurFunction custom(std::function<Complex(Complex)> f);

    struct Node;

private:
    explicit SchurFunction(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;

    friend SchurFunction delta_operator(const SchurFunction&, Complex, const Tolerances&);
};

// The hyperbolic difference quotient g(z) = [f(z), f(z0)] / [z, z0],
// extended across z0 by the hyperbolic derivative.  If |f(z0)| = 1 the
// maximum principle forces f constant and the zero function is returned.
SchurFunction delta_operator(const SchurFunction& f, Complex z0, const Tolerances& tol = {});

// H^order f(z0): iterates delta_operator and evaluates at z0.  Exact via
// jets for structured functions, Richardson extrapolation otherwise.
// order in [1, 8].
Complex hyperbolic_derivative_estimate(const SchurFunction& f, Complex z0, int order,
                                       const Tolerances& tol = {});

// (f(z0), H^1 f(z0), ..., H^{count-1} f(z0)).
std::vector<Complex> schur_parameters(const SchurFunction& f, Complex z0, int count,
                                      const Tolerances& tol = {});

// Applies delta_operator once per parameter point (first entry first) and
// evaluates the result at z.  Returns infinity when an intermediate value
// escapes the closed disk, which certifies non-Schur data.
ExtendedComplex iterated_divided_difference(const SchurFunction& f, Complex z,
                                            std::span<const Complex> params,
                                            const Tolerances& tol = {});

}  // namespace schur
