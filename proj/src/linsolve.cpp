#include "jetcalc/linsolve.hpp"

namespace jetcalc {

namespace {

void axpy(SparseRow& y, const Scalar& f, const SparseRow& x)
{
    for (auto& [c, v] : x) {
        auto [it, fresh] = y.try_emplace(c, 0);
        it->second -= f * v;
        if (it->second == 0)
            y.erase(it);
    }
}

void strip(SparseRow& r)
{
    for (auto it = r.begin(); it != r.end();)
        it = it->second == 0 ? r.erase(it) : std::next(it);
}

}  // namespace

void SparseSystem::add_equation(SparseRow row, SparseRow rhs)
{
    std::size_t index = added_++;
    strip(row);
    strip(rhs);
    while (!row.empty()) {
        auto p = pivots_.find(row.begin()->first);
        if (p == pivots_.end())
            break;
        Scalar f = row.begin()->second;
        axpy(row, f, p->second.row);
        axpy(rhs, f, p->second.rhs);
    }
    if (row.empty()) {
        if (!rhs.empty() && !conflict_)
            conflict_ = {index, rhs.begin()->second};
        return;
    }
    Scalar lead = row.begin()->second;
    for (auto& [c, v] : row)
        v /= lead;
    for (auto& [c, v] : rhs)
        v /= lead;
    int col = row.begin()->first;
    pivots_.emplace(col, Pivot{std::move(row), std::move(rhs)});
}

std::vector<Scalar> SparseSystem::solve(int rhs_column) const
{
    if (conflict_)
        throw std::runtime_error("SparseSystem: inconsistent system");
    std::vector<Scalar> x(n_, 0);
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
        auto r = it->second.rhs.find(rhs_column);
        Scalar v = r == it->second.rhs.end() ? Scalar(0) : r->second;
        for (auto& [c, a] : it->second.row)
            if (c != it->first)
                v -= a * x[c];
        x[it->first] = v;
    }
    return x;
}

}  // namespace jetcalc
