#include "schur/hyperbolic.hpp"

#include <cmath>

namespace schur {

Complex mobius_raw(Complex a, Complex z) {
    const Complex den = 1.0 + std::conj(a) * z;
    if (std::abs(den) < 1e-13) throw std::runtime_error("mobius_raw: pole");
    return (z + a) / den;
}

Complex mobius_transfer(Complex a, Complex z) {
    if (std::abs(a) >= 1.0) throw std::domain_error("mobius_transfer: |a| >= 1");
    if (std::abs(z) > 1.0 + kInfinityTol)
        throw std::domain_error("mobius_transfer: |z| > 1");
    return mobius_raw(a, z);
}

Complex bracket_raw(Complex z, Complex w) {
    return (z - w) / (1.0 - std::conj(w) * z);
}

ExtendedComplex bracket(Complex z, Complex w) {
    if (std::abs(z) > 1.0 + kInfinityTol || std::abs(w) > 1.0 + kInfinityTol)
        throw std::domain_error("bracket: argument outside the closed disk");
    if (std::abs(1.0 - std::conj(w) * z) < kInfinityTol)
        return ExtendedComplex::infinity();
    return bracket_raw(z, w);
}

double pseudo_hyperbolic_distance(Complex z, Complex w) {
    if (std::abs(z) >= 1.0 || std::abs(w) >= 1.0)
        throw std::domain_error("pseudo_hyperbolic_distance: argument outside the open disk");
    return std::abs(bracket_raw(z, w));
}

ClosedDisk apollonius_disk(Complex p, Complex q, double k) {
    if (k < 0.0) throw std::domain_error("apollonius_disk: k < 0");
    if (p == q || k == 0.0) return ClosedDisk{p, 0.0};
    const double k2 = k * k;
    if (std::abs(1.0 - k2) < 1e-13)
        throw std::domain_error("apollonius_disk: k too close to 1 (degenerate half-plane)");
    return ClosedDisk{(p - k2 * q) / (1.0 - k2), k * std::abs(p - q) / std::abs(1.0 - k2)};
}

}  // namespace schur
