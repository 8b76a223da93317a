#include "schur/schur_function.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace schur {

// ---------------------------------------------------------------- jets

TaylorJet TaylorJet::constant(Complex v, int order) {
    std::vector<Complex> c(static_cast<std::size_t>(order) + 1, Complex{});
    c[0] = v;
    return TaylorJet(std::move(c));
}

TaylorJet TaylorJet::variable(Complex value, int order) {
    TaylorJet j = constant(value, order);
    if (order >= 1) j[1] = 1.0;
    return j;
}

static void require_same_order(const TaylorJet& a, const TaylorJet& b) {
    if (a.order() != b.order()) throw std::logic_error("TaylorJet: order mismatch");
}

TaylorJet operator+(const TaylorJet& a, const TaylorJet& b) {
    require_same_order(a, b);
    TaylorJet r = a;
    for (int k = 0; k <= r.order(); ++k) r[k] += b[k];
    return r;
}

TaylorJet operator-(const TaylorJet& a, const TaylorJet& b) {
    require_same_order(a, b);
    TaylorJet r = a;
    for (int k = 0; k <= r.order(); ++k) r[k] -= b[k];
    return r;
}

TaylorJet operator*(const TaylorJet& a, const TaylorJet& b) {
    require_same_order(a, b);
    const int m = a.order();
    TaylorJet r = TaylorJet::constant(0.0, m);
    for (int i = 0; i <= m; ++i)
        for (int j = 0; i + j <= m; ++j) r[i + j] += a[i] * b[j];
    return r;
}

TaylorJet operator/(const TaylorJet& a, const TaylorJet& b) {
    require_same_order(a, b);
    if (std::abs(b[0]) < 1e-300) throw std::runtime_error("TaylorJet: division by zero constant term");
    const int m = a.order();
    TaylorJet r = TaylorJet::constant(0.0, m);
    for (int k = 0; k <= m; ++k) {
        Complex s = a[k];
        for (int j = 1; j <= k; ++j) s -= b[j] * r[k - j];
        r[k] = s / b[0];
    }
    return r;
}

TaylorJet operator*(Complex s, const TaylorJet& a) {
    TaylorJet r = a;
    for (int k = 0; k <= r.order(); ++k) r[k] *= s;
    return r;
}

TaylorJet compose_jets(const TaylorJet& outer, const TaylorJet& inner_increment) {
    require_same_order(outer, inner_increment);
    const int m = outer.order();
    TaylorJet r = TaylorJet::constant(outer[m], m);
    for (int k = m - 1; k >= 0; --k) {
        r = r * inner_increment;
        r[0] += outer[k];
    }
    return r;
}

TaylorJet mobius_jet(Complex a, const TaylorJet& u) {
    TaylorJet num = u;
    num[0] += a;
    TaylorJet den = std::conj(a) * u;
    den[0] += 1.0;
    return num / den;
}

TaylorJet mobius_factor_jet(Complex c, Complex z0, int order) {
    TaylorJet num = TaylorJet::variable(z0 - c, order);
    TaylorJet den = TaylorJet::constant(1.0 - std::conj(c) * z0, order);
    if (order >= 1) den[1] = -std::conj(c);
    return num / den;
}

// --------------------------------------------- Richardson extrapolation

namespace {

double default_step(Complex z0) { return 1e-2 * std::max(1e-6, 1.0 - std::abs(z0)); }

DerivativeEstimate extrapolate(const std::function<Complex(double)>& avg, double h) {
    const Complex a0 = avg(h), a1 = avg(h / 2), a2 = avg(h / 4);
    // the four-direction average has a pure h^4 leading error term
    const Complex r1 = (16.0 * a1 - a0) / 15.0;
    const Complex r2 = (16.0 * a2 - a1) / 15.0;
    return {(256.0 * r2 - r1) / 255.0, std::abs(r2 - r1)};
}

}  // namespace

DerivativeEstimate richardson_derivative(const std::function<Complex(Complex)>& f,
                                         Complex z0, double base_step) {
    const double h0 = base_step > 0 ? base_step : default_step(z0);
    auto avg = [&](double h) {
        const Complex dr = (f(z0 + h) - f(z0 - h)) / (2.0 * h);
        const Complex di = (f(z0 + Complex(0, h)) - f(z0 - Complex(0, h))) / Complex(0, 2.0 * h);
        return (dr + di) / 2.0;
    };
    return extrapolate(avg, h0);
}

DerivativeEstimate richardson_limit(const std::function<Complex(Complex)>& f,
                                    Complex z0, double base_step) {
    const double h0 = base_step > 0 ? base_step : default_step(z0);
    auto avg = [&](double h) {
        return (f(z0 + h) + f(z0 - h) + f(z0 + Complex(0, h)) + f(z0 - Complex(0, h))) / 4.0;
    };
    return extrapolate(avg, h0);
}

// ---------------------------------------------------------------- nodes

struct SchurFunction::Node {
    virtual ~Node() = default;
    virtual Complex eval(Complex z) const = 0;
    virtual Complex deriv(Complex z) const = 0;
    virtual bool jets() const = 0;
    virtual TaylorJet jet(Complex z0, int order) const = 0;
    virtual bool constant() const { return false; }
    virtual bool max_principle() const { return false; }
};

namespace {

using Node = SchurFunction::Node;

struct ConstantNode final : Node {
    Complex c;
    bool via_max_principle;
    ConstantNode(Complex v, bool mp) : c(v), via_max_principle(mp) {}
    Complex eval(Complex) const override { return c; }
    Complex deriv(Complex) const override { return 0.0; }
    bool jets() const override { return true; }
    TaylorJet jet(Complex, int order) const override { return TaylorJet::constant(c, order); }
    bool constant() const override { return true; }
    bool max_principle() const override { return via_max_principle; }
};

struct BlaschkeNode final : Node {
    double scale;
    Complex unimodular;   // e^{i theta}
    std::vector<Complex> zeros;

    BlaschkeNode(double s, double theta, std::vector<Complex> zs)
        : scale(s), unimodular(std::polar(1.0, theta)), zeros(std::move(zs)) {}

    Complex eval(Complex z) const override {
        Complex r = scale * unimodular;
        for (Complex a : zeros) r *= (z - a) / (1.0 - std::conj(a) * z);
        return r;
    }

    // product-rule sum; each factor derivative is (1-|a|^2)/(1-conj(a)z)^2
    Complex deriv(Complex z) const override {
        Complex sum = 0.0;
        for (std::size_t j = 0; j < zeros.size(); ++j) {
            Complex term = scale * unimodular;
            for (std::size_t i = 0; i < zeros.size(); ++i) {
                const Complex a = zeros[i];
                const Complex den = 1.0 - std::conj(a) * z;
                if (i == j)
                    term *= (1.0 - std::norm(a)) / (den * den);
                else
                    term *= (z - a) / den;
            }
            sum += term;
        }
        return sum;
    }

    bool jets() const override { return true; }
    TaylorJet jet(Complex z0, int order) const override {
        TaylorJet r = TaylorJet::constant(scale * unimodular, order);
        for (Complex a : zeros) r = r * mobius_factor_jet(a, z0, order);
        return r;
    }
    bool constant() const override { return zeros.empty(); }
};

struct NestedChainNode final : Node {
    std::vector<Complex> nodes;      // T_{-nodes[k]} factors
    std::vector<Complex> diagonal;   // d_0 .. d_m
    Complex eps;
    bool boundary_terminated;        // innermost block is d_m T_{-n_{m-1}}(z)

    Complex eval(Complex z) const override {
        const int m = static_cast<int>(diagonal.size()) - 1;
        Complex u;
        int first;
        if (boundary_terminated) {
            if (m == 0) return diagonal[0];
            u = diagonal[static_cast<std::size_t>(m)] * mobius_raw(-nodes[static_cast<std::size_t>(m - 1)], z);
            first = m - 1;
        } else {
            u = eps * mobius_raw(-nodes[static_cast<std::size_t>(m)], z);
            first = m;
        }
        for (int k = first; k >= 1; --k) {
            u = mobius_raw(diagonal[static_cast<std::size_t>(k)], u);
            u *= mobius_raw(-nodes[static_cast<std::size_t>(k - 1)], z);
        }
        return mobius_raw(diagonal[0], u);
    }

    Complex deriv(Complex z) const override {
        // forward recursion carrying (u, du/dz)
        auto t_pair = [&](Complex c) {
            const Complex den = 1.0 + std::conj(-c) * z;
            return std::pair<Complex, Complex>{(z - c) / den, (1.0 - std::norm(c)) / (den * den)};
        };
        const int m = static_cast<int>(diagonal.size()) - 1;
        Complex u, du;
        int first;
        if (boundary_terminated) {
            if (m == 0) return 0.0;
            auto [t, dt] = t_pair(nodes[static_cast<std::size_t>(m - 1)]);
            u = diagonal[static_cast<std::size_t>(m)] * t;
            du = diagonal[static_cast<std::size_t>(m)] * dt;
            first = m - 1;
        } else {
            auto [t, dt] = t_pair(nodes[static_cast<std::size_t>(m)]);
            u = eps * t;
            du = eps * dt;
            first = m;
        }
        for (int k = first; k >= 1; --k) {
            const Complex a = diagonal[static_cast<std::size_t>(k)];
            const Complex den = 1.0 + std::conj(a) * u;
            const Complex v = (u + a) / den;
            const Complex dv = (1.0 - std::norm(a)) / (den * den) * du;
            auto [t, dt] = t_pair(nodes[static_cast<std::size_t>(k - 1)]);
            u = t * v;
            du = dt * v + t * dv;
        }
        const Complex a0 = diagonal[0];
        const Complex den = 1.0 + std::conj(a0) * u;
        return (1.0 - std::norm(a0)) / (den * den) * du;
    }

    bool jets() const override { return true; }
    TaylorJet jet(Complex z0, int order) const override {
        const int m = static_cast<int>(diagonal.size()) - 1;
        TaylorJet u;
        int first;
        if (boundary_terminated) {
            if (m == 0) return TaylorJet::constant(diagonal[0], order);
            u = diagonal[static_cast<std::size_t>(m)]
                * mobius_factor_jet(nodes[static_cast<std::size_t>(m - 1)], z0, order);
            first = m - 1;
        } else {
            u = eps * mobius_factor_jet(nodes[static_cast<std::size_t>(m)], z0, order);
            first = m;
        }
        for (int k = first; k >= 1; --k) {
            u = mobius_jet(diagonal[static_cast<std::size_t>(k)], u);
            u = u * mobius_factor_jet(nodes[static_cast<std::size_t>(k - 1)], z0, order);
        }
        return mobius_jet(diagonal[0], u);
    }
    bool constant() const override { return boundary_terminated && diagonal.size() == 1; }
};

struct CustomNode final : Node {
    std::function<Complex(Complex)> fn;
    explicit CustomNode(std::function<Complex(Complex)> f) : fn(std::move(f)) {}
    Complex eval(Complex z) const override { return fn(z); }
    Complex deriv(Complex z) const override { return richardson_derivative(fn, z).value; }
    bool jets() const override { return false; }
    TaylorJet jet(Complex, int) const override {
        throw std::logic_error("SchurFunction: jet unavailable for custom functions");
    }
};

struct ComposeNode final : Node {
    std::shared_ptr<const Node> outer, inner;
    Complex eval(Complex z) const override { return outer->eval(inner->eval(z)); }
    Complex deriv(Complex z) const override {
        return outer->deriv(inner->eval(z)) * inner->deriv(z);
    }
    bool jets() const override { return outer->jets() && inner->jets(); }
    TaylorJet jet(Complex z0, int order) const override {
        TaylorJet gj = inner->jet(z0, order);
        const Complex g0 = gj[0];
        TaylorJet increment = gj;
        increment[0] = 0.0;
        return compose_jets(outer->jet(g0, order), increment);
    }
};

// One step of the Schur algorithm at the jet level: from the expansion of
// f about z0 (order m+1) to the expansion of [f(z), f(z0)]/[z, z0] (order m).
TaylorJet schur_step_jet(const TaylorJet& f, Complex z0) {
    const int m = f.order() - 1;
    if (m < 0) throw std::logic_error("schur_step_jet: need order >= 1");
    const Complex w0 = f[0];
    TaylorJet num = f;
    num[0] = 0.0;                           // f - w0, exact cancellation
    TaylorJet den = (-std::conj(w0)) * f;
    den[0] += 1.0;
    TaylorJet n = num / den;
    // divide by [z, z0] = u / ((1 - |z0|^2) - conj(z0) u):  n has n[0] = 0
    TaylorJet shifted = TaylorJet::constant(0.0, m);
    for (int k = 0; k <= m; ++k) shifted[k] = n[k + 1];
    TaylorJet mult = TaylorJet::constant(1.0 - std::norm(z0), m);
    if (m >= 1) mult[1] = -std::conj(z0);
    return shifted * mult;
}

struct DeltaQuotientNode final : Node {
    std::shared_ptr<const Node> inner;
    Complex z0;
    Complex w0;       // inner(z0)
    Complex center;   // hyperbolic derivative of inner at z0

    Complex eval(Complex z) const override {
        const double dist = std::abs(z - z0);
        if (dist < 1e-14) return center;
        // near the base point the direct quotient cancels; use the local
        // expansion instead when the structure permits
        if (inner->jets() && dist < 1e-4 * (1.0 - std::abs(z0))) {
            const TaylorJet local = jet(z0, 4);
            const Complex u = z - z0;
            Complex acc = local[4];
            for (int k = 3; k >= 0; --k) acc = acc * u + local[k];
            return acc;
        }
        const Complex fz = inner->eval(z);
        const Complex num = (fz - w0) / (1.0 - std::conj(w0) * fz);
        const Complex den = (z - z0) / (1.0 - std::conj(z0) * z);
        return num / den;
    }

    Complex deriv(Complex z) const override {
        if (inner->jets()) {
            const TaylorJet j = jet(z, 1);
            return j[1];
        }
        return richardson_derivative([this](Complex y) { return eval(y); }, z).value;
    }

    bool jets() const override { return inner->jets(); }
    TaylorJet jet(Complex at, int order) const override {
        if (std::abs(at - z0) < 1e-14) return schur_step_jet(inner->jet(z0, order + 1), z0);
        TaylorJet f = inner->jet(at, order);
        TaylorJet num = f;
        num[0] -= w0;
        TaylorJet den = (-std::conj(w0)) * f;
        den[0] += 1.0;
        // [z, z0] expanded at `at`; regular since at != z0
        const TaylorJet br = mobius_factor_jet(z0, at, order);
        return (num / den) / br;
    }
};

}  // namespace

// --------------------------------------------------------- SchurFunction

Complex SchurFunction::operator()(Complex z) const { return node_->eval(z); }
Complex SchurFunction::derivative(Complex z) const { return node_->deriv(z); }
bool SchurFunction::has_jet() const { return node_->jets(); }
TaylorJet SchurFunction::jet(Complex z0, int order) const { return node_->jet(z0, order); }
bool SchurFunction::is_constant() const { return node_->constant(); }
bool SchurFunction::maximum_principle_constant() const { return node_->max_principle(); }

SchurFunction SchurFunction::constant(Complex c) {
    return SchurFunction(std::make_shared<ConstantNode>(c, false));
}

SchurFunction SchurFunction::identity() { return blaschke({Complex{0.0, 0.0}}, 0.0); }

SchurFunction SchurFunction::blaschke(std::vector<Complex> zeros, double theta) {
    return scaled_blaschke(1.0, std::move(zeros), theta);
}

SchurFunction SchurFunction::scaled_blaschke(double scale, std::vector<Complex> zeros, double theta) {
    if (scale <= 0.0 || scale > 1.0)
        throw std::domain_error("scaled_blaschke: scale must lie in (0, 1]");
    for (Complex a : zeros)
        if (std::abs(a) >= 1.0) throw std::domain_error("blaschke: zero outside the open disk");
    return SchurFunction(std::make_shared<BlaschkeNode>(scale, theta, std::move(zeros)));
}

SchurFunction SchurFunction::nested_chain(std::vector<Complex> nodes,
                                          std::vector<Complex> diagonal, Complex eps) {
    if (nodes.size() != diagonal.size() || diagonal.empty())
        throw std::invalid_argument("nested_chain: need equally many nodes and diagonal entries");
    if (std::abs(eps) > 1.0 + kInfinityTol)
        throw std::domain_error("nested_chain: |eps| > 1");
    auto n = std::make_shared<NestedChainNode>();
    n->nodes = std::move(nodes);
    n->diagonal = std::move(diagonal);
    n->eps = eps;
    n->boundary_terminated = false;
    return SchurFunction(std::move(n));
}

SchurFunction SchurFunction::nested_boundary(std::vector<Complex> nodes,
                                             std::vector<Complex> diagonal) {
    if (diagonal.empty() || nodes.size() + 1 != diagonal.size())
        throw std::invalid_argument("nested_boundary: need one more diagonal entry than nodes");
    auto n = std::make_shared<NestedChainNode>();
    n->nodes = std::move(nodes);
    n->diagonal = std::move(diagonal);
    n->eps = 0.0;
    n->boundary_terminated = true;
    return SchurFunction(std::move(n));
}

SchurFunction SchurFunction::compose(SchurFunction outer, SchurFunction inner) {
    auto n = std::make_shared<ComposeNode>();
    n->outer = std::move(outer.node_);
    n->inner = std::move(inner.node_);
    return SchurFunction(std::move(n));
}

SchurFunction SchurFunction::custom(std::function<Complex(Complex)> f) {
    return SchurFunction(std::make_shared<CustomNode>(std::move(f)));
}

// ------------------------------------------------------------ operators

SchurFunction delta_operator(const SchurFunction& f, Complex z0, const Tolerances& tol) {
    if (std::abs(z0) >= 1.0) throw std::domain_error("delta_operator: |z0| >= 1");
    const Complex w0 = f(z0);
    const double mag = std::abs(w0);
    if (mag > 1.0 + tol.boundary)
        throw std::domain_error("delta_operator: |f(z0)| > 1, not a Schur-class value");
    if (mag >= 1.0 - tol.boundary) {
        // maximum principle: f is the unimodular constant w0, quotient is 0
        return SchurFunction(std::make_shared<ConstantNode>(Complex{0.0, 0.0}, true));
    }
    auto n = std::make_shared<DeltaQuotientNode>();
    n->inner = f.node_;
    n->z0 = z0;
    n->w0 = w0;
    if (f.has_jet()) {
        const TaylorJet j = f.jet(z0, 1);
        n->center = (1.0 - std::norm(z0)) * j[1] / (1.0 - std::norm(w0));
    } else {
        const DerivativeEstimate d =
            richardson_derivative([&f](Complex y) { return f(y); }, z0);
        if (d.uncertainty > 1e-5)
            throw std::runtime_error("delta_operator: derivative estimate did not converge");
        n->center = (1.0 - std::norm(z0)) * d.value / (1.0 - std::norm(w0));
    }
    return SchurFunction(std::move(n));
}

Complex hyperbolic_derivative_estimate(const SchurFunction& f, Complex z0, int order,
                                       const Tolerances& tol) {
    if (order < 1 || order > 8)
        throw std::domain_error("hyperbolic_derivative_estimate: order must lie in [1, 8]");
    SchurFunction g = f;
    for (int k = 0; k < order; ++k) g = delta_operator(g, z0, tol);
    return g(z0);
}

std::vector<Complex> schur_parameters(const SchurFunction& f, Complex z0, int count,
                                      const Tolerances& tol) {
    if (count < 1) throw std::domain_error("schur_parameters: count must be >= 1");
    std::vector<Complex> out;
    out.reserve(static_cast<std::size_t>(count));
    SchurFunction g = f;
    out.push_back(g(z0));
    for (int k = 1; k < count; ++k) {
        g = delta_operator(g, z0, tol);
        out.push_back(g(z0));
    }
    return out;
}

ExtendedComplex iterated_divided_difference(const SchurFunction& f, Complex z,
                                            std::span<const Complex> params,
                                            const Tolerances& tol) {
    SchurFunction g = f;
    for (const Complex p : params) {
        if (std::abs(g(p)) > 1.0 + tol.boundary) return ExtendedComplex::infinity();
        g = delta_operator(g, p, tol);
    }
    const Complex v = g(z);
    if (std::abs(v) > 1.0 + tol.boundary) return ExtendedComplex::infinity();
    return v;
}

}  // namespace schur
