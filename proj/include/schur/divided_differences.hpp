#pragma once

#include <vector>

#include "schur/hyperbolic.hpp"

// The triangular table of hyperbolic divided differences built from
// multi-point interpolation data by the Schur-algorithm recursion.

namespace schur {

struct InterpolationData {
    std::vector<Complex> nodes;    // pairwise distinct, |z_j| < 1
    std::vector<Complex> values;   // |w_j| <= 1, same length

    // n + 1 (number of points)
    std::size_t size() const { return nodes.size(); }
    void validate(const Tolerances& tol = {}) const;
};

// One prescribed point with hyperbolic derivatives up to order n.
struct SchurParameter {
    Complex z0{0.0, 0.0};
    std::vector<Complex> gamma;    // (gamma_0 .. gamma_n), |gamma_j| <= 1

    void validate(const Tolerances& tol = {}) const;
};

enum class EntryStatus { interior, boundary, infinite };

struct TableEntry {
    ExtendedComplex value;
    EntryStatus status = EntryStatus::interior;
    // set when the 0-entry came from coinciding unimodular operands
    bool boundary_exception = false;
};

class DifferenceTable {
public:
    // column k holds the order-k differences for points k+1 .. n+1;
    // construction stops at the first column containing an infinite entry.
    const std::vector<std::vector<TableEntry>>& columns() const { return cols_; }
    std::size_t points() const { return points_; }
    bool infeasible() const { return infeasible_; }

    // entry for (point j, order k), both zero-based: j in [k, n]
    const TableEntry& entry(std::size_t j, std::size_t k) const;

    // (Delta_1^0, Delta_2^1, ..., Delta_{n+1}^n); entries of columns that
    // were never built propagate as infinite markers.
    std::vector<TableEntry> diagonal() const;

private:
    friend DifferenceTable build_table(const InterpolationData&, const Tolerances&);
    std::vector<std::vector<TableEntry>> cols_;
    std::size_t points_ = 0;
    bool infeasible_ = false;
};

DifferenceTable build_table(const InterpolationData& data, const Tolerances& tol = {});

inline std::vector<TableEntry> table_diagonal(const DifferenceTable& t) { return t.diagonal(); }

}  // namespace schur
