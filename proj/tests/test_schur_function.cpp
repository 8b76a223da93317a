#include <doctest.h>

#include <cmath>
#include <random>

#include "schur/oracle.hpp"
#include "schur/schur_function.hpp"

using namespace schur;

namespace {
const double kPi = 3.14159265358979323846;
}

TEST_CASE("blaschke evaluation and boundary modulus") {
    const auto B = SchurFunction::blaschke({0.0, 0.5}, 0.3);
    for (int i = 0; i < 128; ++i) {
        const Complex z = std::polar(1.0, 2.0 * kPi * i / 128.0);
        CHECK(std::abs(std::abs(B(z)) - 1.0) < 1e-12);
    }
    // degree 1, zero at 0, theta 0 is the identity
    const auto id = SchurFunction::identity();
    CHECK(std::abs(id(Complex{0.3, -0.2}) - Complex{0.3, -0.2}) < 1e-15);
}

TEST_CASE("blaschke derivative: product-rule sum matches the jet") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 200; ++i) {
        std::vector<Complex> zeros;
        const int d = 1 + static_cast<int>(rng() % 4);
        for (int j = 0; j < d; ++j) zeros.push_back(oracle::random_disk_point(rng, 0.8));
        const auto B = SchurFunction::blaschke(zeros, 2.0 * kPi * oracle::uniform01(rng));
        const Complex z = oracle::random_disk_point(rng, 0.9);
        const TaylorJet j = B.jet(z, 1);
        CHECK(std::abs(B.derivative(z) - j[1]) < 1e-12 * (1.0 + std::abs(j[1])));
        CHECK(std::abs(B(z) - j[0]) < 1e-13);
    }
}

TEST_CASE("delta_operator: f(z) = z^2 at 0 gives the identity") {
    const auto f = SchurFunction::blaschke({0.0, 0.0}, 0.0);
    const auto g = delta_operator(f, 0.0);
    CHECK(std::abs(g(Complex{0.3, 0.2}) - Complex{0.3, 0.2}) < 1e-13);
    CHECK(std::abs(g(0.0)) < 1e-13);   // center value H^1 f(0) = 0
}

TEST_CASE("delta_operator: constants collapse to zero") {
    const auto f = SchurFunction::constant(Complex{0.3, 0.1});
    const auto g = delta_operator(f, Complex{0.2, 0.0});
    for (Complex z : {Complex{0.0, 0.0}, Complex{0.5, 0.1}, Complex{-0.3, 0.4}})
        CHECK(std::abs(g(z)) < 1e-14);
}

TEST_CASE("delta_operator: identity map has quotient one everywhere") {
    const Complex a{0.37, -0.21};
    const auto g = delta_operator(SchurFunction::identity(), a);
    CHECK(std::abs(g(Complex{0.1, 0.6}) - 1.0) < 1e-13);
    CHECK(std::abs(g(a) - 1.0) < 1e-13);
}

TEST_CASE("delta_operator: unimodular value collapses by the maximum principle") {
    const auto f = SchurFunction::constant(Complex{0.0, 1.0});
    const auto g = delta_operator(f, 0.1);
    CHECK(g.is_constant());
    CHECK(g.maximum_principle_constant());
    CHECK(std::abs(g(0.3)) == 0.0);
}

TEST_CASE("hyperbolic_derivative_estimate: z^2 orders 1 and 2") {
    const auto f = SchurFunction::blaschke({0.0, 0.0}, 0.0);
    CHECK(std::abs(hyperbolic_derivative_estimate(f, 0.0, 1)) < 1e-12);
    CHECK(std::abs(hyperbolic_derivative_estimate(f, 0.0, 2) - 1.0) < 1e-12);
    CHECK_THROWS_AS(hyperbolic_derivative_estimate(f, 0.0, 0), std::domain_error);
    CHECK_THROWS_AS(hyperbolic_derivative_estimate(f, 0.0, 9), std::domain_error);
}

TEST_CASE("hyperbolic_derivative_estimate: constants vanish at every order") {
    const auto f = SchurFunction::constant(Complex{0.2, -0.4});
    for (int order = 1; order <= 4; ++order)
        CHECK(std::abs(hyperbolic_derivative_estimate(f, Complex{0.1, 0.1}, order)) < 1e-12);
}

TEST_CASE("hyperbolic_derivative_estimate: recovers the tower parameters") {
    const Complex z0{0.25, 0.0};
    const std::vector<Complex> gamma{Complex{0.3, 0.0}, Complex{-0.2, 0.0}, Complex{0.1, 0.1}};
    const auto f = SchurFunction::nested_chain(std::vector<Complex>(3, z0), gamma,
                                               Complex{0.41, -0.37});
    for (int order = 1; order <= 2; ++order) {
        const Complex est = hyperbolic_derivative_estimate(f, z0, order);
        CHECK(std::abs(est - gamma[static_cast<std::size_t>(order)]) < 1e-6);
    }
    const auto params = schur_parameters(f, z0, 3);
    for (int k = 0; k < 3; ++k)
        CHECK(std::abs(params[static_cast<std::size_t>(k)] - gamma[static_cast<std::size_t>(k)]) <
              1e-10);
}

TEST_CASE("H^1 agreement with the closed-form hyperbolic derivative") {
    std::mt19937_64 rng(22);
    for (int i = 0; i < 100; ++i) {
        std::vector<Complex> zeros;
        const int d = 1 + static_cast<int>(rng() % 3);
        for (int j = 0; j < d; ++j) zeros.push_back(oracle::random_disk_point(rng, 0.7));
        const auto f = SchurFunction::blaschke(zeros, 2.0 * kPi * oracle::uniform01(rng));
        const Complex z0 = oracle::random_disk_point(rng, 0.8);
        const Complex expected =
            (1.0 - std::norm(z0)) * f.derivative(z0) / (1.0 - std::norm(f(z0)));
        if (std::abs(std::abs(f(z0)) - 1.0) < 1e-6) continue;
        CHECK(std::abs(hyperbolic_derivative_estimate(f, z0, 1) - expected) < 1e-8);
    }
}

TEST_CASE("richardson derivative agrees with the analytic route on opaque functions") {
    const Complex z0{0.2, -0.1};
    const auto analytic = SchurFunction::blaschke({0.4, Complex{-0.1, 0.3}}, 0.7);
    const auto opaque = SchurFunction::custom([=](Complex z) { return analytic(z); });
    CHECK_FALSE(opaque.has_jet());
    const Complex got = hyperbolic_derivative_estimate(opaque, z0, 1);
    const Complex want = hyperbolic_derivative_estimate(analytic, z0, 1);
    CHECK(std::abs(got - want) < 1e-9);
    // second order still within the documented numerical budget
    const Complex got2 = hyperbolic_derivative_estimate(opaque, z0, 2);
    const Complex want2 = hyperbolic_derivative_estimate(analytic, z0, 2);
    CHECK(std::abs(got2 - want2) < 1e-6);
}

TEST_CASE("automorphism parameters: unimodular first derivative, zero tail") {
    // a degree-1 factor attains Schwarz-Pick equality, so its quotient is a
    // unimodular constant and everything after collapses by the maximum principle
    const auto f = SchurFunction::blaschke({Complex{0.3, -0.2}}, 0.55);
    const Complex z0{0.1, 0.25};
    const auto params = schur_parameters(f, z0, 4);
    CHECK(std::abs(params[0]) < 1.0);
    CHECK(std::abs(std::abs(params[1]) - 1.0) < 1e-12);
    CHECK(std::abs(params[2]) == 0.0);
    CHECK(std::abs(params[3]) == 0.0);
}

TEST_CASE("richardson_limit reproduces the stored quotient center") {
    // independent route to the extension value across the base point
    std::mt19937_64 rng(26);
    for (int i = 0; i < 50; ++i) {
        const auto f = oracle::random_blaschke(3, rng);
        const Complex z0 = oracle::random_disk_point(rng, 0.7);
        const auto g = delta_operator(f, z0);
        const auto limit = richardson_limit([&g](Complex y) { return g(y); }, z0);
        CHECK(limit.uncertainty < 1e-8);
        CHECK(std::abs(limit.value - g(z0)) < 1e-9);
    }
}

TEST_CASE("chain rule for the difference quotient") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 100; ++i) {
        const auto f = oracle::random_blaschke(2, rng);
        const auto g = oracle::random_blaschke(1 + static_cast<int>(rng() % 2), rng);
        const Complex z0 = oracle::random_disk_point(rng, 0.7);
        const Complex z = oracle::random_disk_point(rng, 0.9);
        if (std::abs(z - z0) < 1e-3) continue;

        const auto composed = SchurFunction::compose(f, g);
        const Complex lhs = delta_operator(composed, z0)(z);
        const Complex rhs = delta_operator(f, g(z0))(g(z)) * delta_operator(g, z0)(z);
        CHECK(std::abs(lhs - rhs) < 1e-9 * (1.0 + std::abs(rhs)));
    }
}

TEST_CASE("difference quotient keeps the Schur class") {
    std::mt19937_64 rng(24);
    for (int rep = 0; rep < 10; ++rep) {
        const auto f = oracle::random_blaschke(3, rng);
        const Complex z0 = oracle::random_disk_point(rng, 0.8);
        const auto g = delta_operator(f, z0);
        for (int i = 0; i < 100; ++i) {
            const Complex z = oracle::random_disk_point(rng, 0.999);
            CHECK(std::abs(g(z)) <= 1.0 + 1e-10);
        }
    }
}

TEST_CASE("iterated_divided_difference: identity and degree reduction") {
    const Complex a{0.3, 0.1};
    const std::vector<Complex> params{a};
    const auto one = iterated_divided_difference(SchurFunction::identity(), Complex{0.5, -0.2},
                                                 params);
    CHECK_FALSE(one.is_infinite());
    CHECK(std::abs(one.value() - 1.0) < 1e-12);

    // degree-2 Blaschke with both zeros peeled off leaves a unimodular constant
    const auto B = SchurFunction::blaschke({0.0, 0.5}, 0.9);
    const std::vector<Complex> peel{0.0, 0.5};
    for (Complex z : {Complex{0.2, 0.3}, Complex{-0.4, 0.1}, Complex{0.6, 0.0}}) {
        const auto v = iterated_divided_difference(B, z, peel);
        CHECK_FALSE(v.is_infinite());
        CHECK(std::abs(std::abs(v.value()) - 1.0) < 1e-11);
    }
}

TEST_CASE("iterated_divided_difference: flags escape from the disk") {
    // data from a non-Schur sample: |values| > 1 reachable straight away
    const auto f = SchurFunction::custom([](Complex z) { return 1.4 * z; });
    const std::vector<Complex> params{0.9};
    CHECK(iterated_divided_difference(f, 0.2, params).is_infinite());
}

TEST_CASE("compose jets and nested chains agree with direct evaluation") {
    std::mt19937_64 rng(25);
    const std::vector<Complex> nodes{Complex{0.1, 0.2}, Complex{-0.3, 0.1}, Complex{0.2, -0.4}};
    const std::vector<Complex> diag{Complex{0.5, 0.1}, Complex{-0.2, 0.3}, Complex{0.0, 0.6}};
    const auto f = SchurFunction::nested_chain(nodes, diag, Complex{0.3, 0.4});
    const Complex at = oracle::random_disk_point(rng, 0.6);
    const TaylorJet j = f.jet(at, 3);
    CHECK(std::abs(j[0] - f(at)) < 1e-13);
    CHECK(std::abs(j[1] - f.derivative(at)) < 1e-12);
    // finite differences on the second coefficient
    const double h = 1e-4;
    const Complex second =
        (f(at + h) - 2.0 * f(at) + f(at - h)) / (h * h) / 2.0;
    CHECK(std::abs(j[2] - second) < 1e-5);
}
