#include "schur/divided_differences.hpp"

#include <cmath>

namespace schur {

void InterpolationData::validate(const Tolerances& tol) const {
    if (nodes.empty() || nodes.size() != values.size())
        throw std::invalid_argument("InterpolationData: need equally many nodes and values, at least one");
    for (Complex z : nodes)
        if (std::abs(z) >= 1.0) throw std::invalid_argument("InterpolationData: node outside the open disk");
    for (Complex w : values)
        if (std::abs(w) > 1.0 + kInfinityTol)
            throw std::invalid_argument("InterpolationData: value outside the closed disk");
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j)
            if (pseudo_hyperbolic_distance(nodes[i], nodes[j]) <= tol.separation)
                throw std::invalid_argument("InterpolationData: coincident nodes");
}

void SchurParameter::validate(const Tolerances& tol) const {
    if (gamma.empty()) throw std::invalid_argument("SchurParameter: empty parameter list");
    if (std::abs(z0) >= 1.0) throw std::invalid_argument("SchurParameter: |z0| >= 1");
    for (Complex g : gamma)
        if (std::abs(g) > 1.0 + tol.boundary)
            throw std::invalid_argument("SchurParameter: entry outside the closed disk");
}

namespace {

TableEntry classify(Complex v, const Tolerances& tol) {
    TableEntry e;
    e.value = v;
    e.status = std::abs(v) < 1.0 - tol.boundary ? EntryStatus::interior : EntryStatus::boundary;
    return e;
}

TableEntry infinite_entry() {
    TableEntry e;
    e.value = ExtendedComplex::infinity();
    e.status = EntryStatus::infinite;
    return e;
}

}  // namespace

const TableEntry& DifferenceTable::entry(std::size_t j, std::size_t k) const {
    if (k >= cols_.size() || j < k || j >= points_)
        throw std::out_of_range("DifferenceTable::entry");
    return cols_[k][j - k];
}

std::vector<TableEntry> DifferenceTable::diagonal() const {
    std::vector<TableEntry> d;
    d.reserve(points_);
    for (std::size_t k = 0; k < points_; ++k)
        d.push_back(k < cols_.size() ? cols_[k][0] : infinite_entry());
    return d;
}

DifferenceTable build_table(const InterpolationData& data, const Tolerances& tol) {
    data.validate(tol);
    const std::size_t m = data.size();

    DifferenceTable table;
    table.points_ = m;
    std::vector<TableEntry> col0;
    col0.reserve(m);
    for (Complex w : data.values) col0.push_back(classify(w, tol));
    table.cols_.push_back(std::move(col0));

    for (std::size_t k = 1; k < m; ++k) {
        const auto& prev = table.cols_[k - 1];
        const TableEntry& pivot = prev[0];   // Delta_k^{k-1}
        std::vector<TableEntry> col;
        col.reserve(m - k);
        bool hit_infinity = false;
        for (std::size_t i = 1; i < prev.size(); ++i) {
            const TableEntry& op = prev[i];   // Delta_j^{k-1}, j = k + i
            if (pivot.status == EntryStatus::infinite || op.status == EntryStatus::infinite) {
                col.push_back(infinite_entry());
                hit_infinity = true;
                continue;
            }
            const Complex dj = op.value.value();
            const Complex dk = pivot.value.value();
            // coinciding unimodular operands force a zero entry
            if (std::abs(dj - dk) < kInfinityTol && std::abs(std::abs(dk) - 1.0) < tol.boundary) {
                TableEntry e = classify(Complex{0.0, 0.0}, tol);
                e.boundary_exception = true;
                col.push_back(e);
                continue;
            }
            const ExtendedComplex num = bracket(dj, dk);
            const Complex den = bracket_raw(data.nodes[k - 1 + i], data.nodes[k - 1]);
            if (num.is_infinite() ||
                std::abs(num.value()) > std::abs(den) * (1.0 + tol.boundary)) {
                col.push_back(infinite_entry());
                hit_infinity = true;
                continue;
            }
            col.push_back(classify(num.value() / den, tol));
        }
        table.cols_.push_back(std::move(col));
        if (hit_infinity) {
            table.infeasible_ = true;
            break;   // later columns are never used once no interpolant exists
        }
    }
    return table;
}

}  // namespace schur
