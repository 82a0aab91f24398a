#pragma once

#include "jetcalc/degree_poly.hpp"
#include "jetcalc/ring.hpp"

#include <optional>
#include <vector>

namespace jetcalc {

// chern[0] = 1, chern[i] homogeneous of degree i, up to the table truncation
struct BundleData {
    int rank = 0;
    std::vector<GradedClass> chern;

    const GradedClass& c(int i) const { return chern.at(i); }
    GradedClass total() const;
};

struct ChernCharacter {
    std::vector<GradedClass> ch;

    const TablePtr& table() const { return ch.at(0).table(); }
    int top() const { return static_cast<int>(ch.size()) - 1; }
};

BundleData make_bundle(int rank, const std::vector<GradedClass>& classes);
BundleData trivial_bundle(const TablePtr& t, int rank);

// top defaults to the table truncation; a smaller top zeroes higher components
ChernCharacter chern_to_ch(const BundleData& e, int top = -1);
BundleData ch_to_chern(const ChernCharacter& c, int top = -1);
ChernCharacter ch_sum(const ChernCharacter& x, const ChernCharacter& y);
ChernCharacter ch_diff(const ChernCharacter& x, const ChernCharacter& y);
ChernCharacter ch_tensor(const ChernCharacter& x, const ChernCharacter& y);
ChernCharacter ch_dual(const ChernCharacter& x);
ChernCharacter ch_truncate(const ChernCharacter& x, int top);
ChernCharacter ch_normal_form(const ChernCharacter& x, const Ring& ring);
BundleData bundle_normal_form(const BundleData& e, const Ring& ring);

GradedClass todd(const BundleData& e);

struct HypersurfaceData {
    std::optional<long> d;  // empty in symbolic mode
    TablePtr table;
    GradedClass h, c1, c2, c3;

    bool symbolic() const { return !d.has_value(); }
    BundleData tangent() const;
    // point rule h^3 -> d on top-degree base classes (numeric mode)
    Scalar integrate(const GradedClass& x) const;
};

// numeric d in a table with generator h; symbolic d in a table with h, c1, c2, c3
HypersurfaceData hypersurface_data(long d);
HypersurfaceData hypersurface_symbolic();
HypersurfaceData hypersurface_data(long d, const TablePtr& table);
HypersurfaceData hypersurface_symbolic(const TablePtr& table);

// maps a degree-3 class in h, c1, c2, c3 to a polynomial in d
DegreePoly substitute_degree(const GradedClass& x);
Scalar substitute_at(const GradedClass& x, long d);

}  // namespace jetcalc
