#pragma once

#include <complex>
#include <stdexcept>

// Elementary hyperbolic-disk algebra on the closed unit disk: the
// automorphisms T_a, the pseudo-hyperbolic difference quotient [z,w],
// and the Apollonius-disk solver behind every region computation.

namespace schur {

using Complex = std::complex<double>;

struct Tolerances {
    double boundary = 1e-9;     // |w| >= 1 - boundary counts as unimodular
    double separation = 1e-8;   // minimum pseudo-hyperbolic node separation
};

// |1 - conj(w) z| below this means z conj(w) == 1 for bracket purposes.
inline constexpr double kInfinityTol = 1e-12;

// A point of the extended plane: either a finite complex value or the
// point at infinity produced by the bracket on the boundary torus.
class ExtendedComplex {
public:
    ExtendedComplex() = default;
    ExtendedComplex(Complex v) : value_(v) {}
    static ExtendedComplex infinity() {
        ExtendedComplex e;
        e.infinite_ = true;
        return e;
    }

    bool is_infinite() const { return infinite_; }
    Complex value() const {
        if (infinite_) throw std::domain_error("ExtendedComplex: value() on infinity");
        return value_;
    }

private:
    Complex value_{0.0, 0.0};
    bool infinite_ = false;
};

struct ClosedDisk {
    Complex center{0.0, 0.0};
    double radius = 0.0;   // radius 0 denotes a single point

    bool contains(Complex w, double slack = 0.0) const {
        return std::abs(w - center) <= radius + slack;
    }
};

// T_a(z) = (z + a) / (1 + conj(a) z).  Requires |a| < 1 and |z| <= 1.
Complex mobius_transfer(Complex a, Complex z);

// Same formula with no domain guard, defined wherever the denominator is
// nonzero.  Used by the chain evaluator at reflected points 1/conj(z).
Complex mobius_raw(Complex a, Complex z);

// [z, w] = (z - w) / (1 - conj(w) z), infinity when z conj(w) = 1.
// Both arguments must lie in the closed disk (small tolerance).
ExtendedComplex bracket(Complex z, Complex w);

// The raw algebraic quotient, no domain guard and no infinity branch.
Complex bracket_raw(Complex z, Complex w);

// |[z, w]| for z, w in the open disk.
double pseudo_hyperbolic_distance(Complex z, Complex w);

// Solves { lambda : |(lambda - p)/(lambda - q)| <= k } as a closed disk,
// center (p - k^2 q)/(1 - k^2), radius k |p - q| / |1 - k^2|.  For k > 1
// the same formulas give the closure of the complementary inequality.
ClosedDisk apollonius_disk(Complex p, Complex q, double k);

}  // namespace schur
