#pragma once

#include "jetcalc/ring.hpp"

#include <map>
#include <optional>
#include <vector>

namespace jetcalc {

using SparseRow = std::map<int, Scalar>;

// Exact sparse Gaussian elimination for sum_c row[c] * x_c = rhs, with several
// right-hand sides carried as sparse columns.
class SparseSystem {
public:
    explicit SparseSystem(int unknowns) : n_(unknowns) {}

    int unknowns() const { return n_; }
    std::size_t equations() const { return added_; }
    void add_equation(SparseRow row, SparseRow rhs);
    void add_equation(SparseRow row, const Scalar& rhs) { add_equation(std::move(row), SparseRow{{0, rhs}}); }

    bool consistent() const { return !conflict_.has_value(); }
    // first equation that reduced to 0 = nonzero: (original index, residual)
    std::optional<std::pair<std::size_t, Scalar>> conflict() const { return conflict_; }
    int rank() const { return static_cast<int>(pivots_.size()); }

    // free unknowns set to zero
    std::vector<Scalar> solve(int rhs_column = 0) const;

private:
    struct Pivot {
        SparseRow row;  // leading coefficient 1
        SparseRow rhs;
    };
    int n_;
    std::size_t added_ = 0;
    std::map<int, Pivot> pivots_;
    std::optional<std::pair<std::size_t, Scalar>> conflict_;
};

}  // namespace jetcalc
