#include "jetcalc/charclass.hpp"

namespace jetcalc {

namespace {

Scalar factorial(int n)
{
    Scalar f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

GradedClass zero_like(const TablePtr& t)
{
    return GradedClass(t);
}

}  // namespace

GradedClass BundleData::total() const
{
    GradedClass s(chern.at(0).table());
    for (auto& c : chern)
        s = add(s, c);
    return s;
}

BundleData make_bundle(int rank, const std::vector<GradedClass>& classes)
{
    if (classes.empty())
        throw usage_error("make_bundle: need at least c1");
    const TablePtr& t = classes.front().table();
    BundleData e;
    e.rank = rank;
    e.chern.push_back(GradedClass::constant(t, 1));
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (!classes[i].is_zero() && classes[i].degree() != static_cast<int>(i) + 1)
            throw usage_error("make_bundle: c" + std::to_string(i + 1) + " has wrong degree");
        e.chern.push_back(classes[i]);
    }
    while (static_cast<int>(e.chern.size()) <= t->truncation())
        e.chern.push_back(zero_like(t));
    return e;
}

BundleData trivial_bundle(const TablePtr& t, int rank)
{
    return make_bundle(rank, {zero_like(t)});
}

ChernCharacter chern_to_ch(const BundleData& e, int top)
{
    const TablePtr& t = e.chern.at(0).table();
    if (top < 0)
        top = t->truncation();
    auto c = [&](int i) { return i < static_cast<int>(e.chern.size()) ? e.chern[i] : zero_like(t); };
    std::vector<GradedClass> p(top + 1, zero_like(t));
    for (int k = 1; k <= top; ++k) {
        GradedClass s = scale(c(k), (k % 2 ? 1 : -1) * k);
        for (int i = 1; i < k; ++i)
            s = add(s, scale(mul(c(i), p[k - i]), i % 2 ? 1 : -1));
        p[k] = s;
    }
    ChernCharacter r;
    r.ch.push_back(GradedClass::constant(t, e.rank));
    for (int k = 1; k <= top; ++k)
        r.ch.push_back(scale(p[k], 1 / factorial(k)));
    return r;
}

BundleData ch_to_chern(const ChernCharacter& x, int top)
{
    const TablePtr& t = x.table();
    if (top < 0)
        top = x.top();
    const GradedClass& c0 = x.ch.at(0);
    Scalar rk = c0.coeff(Monomial{});
    if (c0.size() > 1 || (c0.size() == 1 && c0.terms().begin()->first != Monomial{}))
        throw usage_error("ch_to_chern: ch0 is not a multiple of the unit");
    if (rk < 0 || rk.get_den() != 1)
        throw usage_error("ch_to_chern: ch0 is not a nonnegative integer");
    auto chk = [&](int i) { return i <= x.top() ? x.ch[i] : zero_like(t); };
    std::vector<GradedClass> p(top + 1, zero_like(t));
    for (int k = 1; k <= top; ++k)
        p[k] = scale(chk(k), factorial(k));
    BundleData e;
    e.rank = static_cast<int>(rk.get_num().get_si());
    e.chern.push_back(GradedClass::constant(t, 1));
    for (int k = 1; k <= top; ++k) {
        GradedClass s = scale(p[k], k % 2 ? 1 : -1);
        for (int i = 1; i < k; ++i)
            s = add(s, scale(mul(e.chern[k - i], p[i]), i % 2 ? 1 : -1));
        e.chern.push_back(scale(s, frac(1, k)));
    }
    while (static_cast<int>(e.chern.size()) <= t->truncation())
        e.chern.push_back(zero_like(t));
    return e;
}

ChernCharacter ch_sum(const ChernCharacter& x, const ChernCharacter& y)
{
    ChernCharacter r;
    int n = std::max(x.top(), y.top());
    for (int i = 0; i <= n; ++i) {
        GradedClass a = i <= x.top() ? x.ch[i] : zero_like(x.table());
        GradedClass b = i <= y.top() ? y.ch[i] : zero_like(x.table());
        r.ch.push_back(add(a, b));
    }
    return r;
}

ChernCharacter ch_diff(const ChernCharacter& x, const ChernCharacter& y)
{
    ChernCharacter neg;
    for (auto& c : y.ch)
        neg.ch.push_back(scale(c, -1));
    return ch_sum(x, neg);
}

ChernCharacter ch_tensor(const ChernCharacter& x, const ChernCharacter& y)
{
    int n = std::max(x.top(), y.top());
    ChernCharacter r;
    for (int k = 0; k <= n; ++k) {
        GradedClass s = zero_like(x.table());
        for (int i = 0; i <= k; ++i)
            if (i <= x.top() && k - i <= y.top())
                s = add(s, mul(x.ch[i], y.ch[k - i]));
        r.ch.push_back(s);
    }
    return r;
}

ChernCharacter ch_dual(const ChernCharacter& x)
{
    ChernCharacter r;
    for (int i = 0; i <= x.top(); ++i)
        r.ch.push_back(i % 2 ? scale(x.ch[i], -1) : x.ch[i]);
    return r;
}

ChernCharacter ch_truncate(const ChernCharacter& x, int top)
{
    ChernCharacter r;
    for (int i = 0; i <= x.top(); ++i)
        r.ch.push_back(i <= top ? x.ch[i] : zero_like(x.table()));
    return r;
}

ChernCharacter ch_normal_form(const ChernCharacter& x, const Ring& ring)
{
    ChernCharacter r;
    for (auto& c : x.ch)
        r.ch.push_back(ring.nf(c));
    return r;
}

BundleData bundle_normal_form(const BundleData& e, const Ring& ring)
{
    BundleData r;
    r.rank = e.rank;
    for (auto& c : e.chern)
        r.chern.push_back(ring.nf(c));
    return r;
}

GradedClass todd(const BundleData& e)
{
    const TablePtr& t = e.chern.at(0).table();
    if (t->truncation() < 3)
        throw usage_error("todd: truncation below 3");
    const GradedClass& c1 = e.c(1);
    const GradedClass& c2 = e.c(2);
    GradedClass r = GradedClass::constant(t, 1);
    r = add(r, scale(c1, Scalar(1, 2)));
    r = add(r, scale(add(mul(c1, c1), c2), Scalar(1, 12)));
    r = add(r, scale(mul(c1, c2), Scalar(1, 24)));
    return r;
}

BundleData HypersurfaceData::tangent() const
{
    return make_bundle(3, {c1, c2, c3});
}

Scalar HypersurfaceData::integrate(const GradedClass& x) const
{
    if (symbolic())
        throw usage_error("integrate: symbolic hypersurface has no point rule; use substitute_degree");
    Scalar s = 0;
    int hi = table->index("h");
    for (auto& [m, c] : x.terms()) {
        if (table->weight(m) != 3)
            continue;
        for (int i = 0; i < table->size(); ++i)
            if (i != hi && m[i])
                throw usage_error("integrate: class is not a base class");
        s += c * Scalar(*d);
    }
    return s;
}

HypersurfaceData hypersurface_data(long d, const TablePtr& table)
{
    if (d < 1)
        throw usage_error("hypersurface degree must be positive");
    HypersurfaceData X;
    X.d = d;
    X.table = table;
    X.h = GradedClass::generator(table, "h");
    GradedClass h2 = mul(X.h, X.h), h3 = mul(h2, X.h);
    X.c1 = scale(X.h, -(d - 5));
    X.c2 = scale(h2, d * d - 5 * d + 10);
    X.c3 = scale(h3, -(d * d * d - 5 * d * d + 10 * d - 10));
    return X;
}

HypersurfaceData hypersurface_symbolic(const TablePtr& table)
{
    HypersurfaceData X;
    X.table = table;
    X.h = GradedClass::generator(table, "h");
    X.c1 = GradedClass::generator(table, "c1");
    X.c2 = GradedClass::generator(table, "c2");
    X.c3 = GradedClass::generator(table, "c3");
    return X;
}

HypersurfaceData hypersurface_data(long d)
{
    return hypersurface_data(d, GeneratorTable::make({"h"}, {1}, 3));
}

HypersurfaceData hypersurface_symbolic()
{
    return hypersurface_symbolic(GeneratorTable::make({"h", "c1", "c2", "c3"}, {1, 1, 2, 3}, 3));
}

DegreePoly substitute_degree(const GradedClass& x)
{
    const TablePtr& t = x.table();
    DegreePoly d = DegreePoly::d();
    auto cst = [](long v) { return DegreePoly::constant(v); };
    DegreePoly c1 = cst(-1) * (d - cst(5));
    DegreePoly c2 = d * d - cst(5) * d + cst(10);
    DegreePoly c3 = cst(-1) * (d * d * d - cst(5) * d * d + cst(10) * d - cst(10));
    DegreePoly result;
    for (auto& [m, c] : x.terms()) {
        if (t->weight(m) != 3)
            throw usage_error("substitute_degree: term of degree " + std::to_string(t->weight(m)));
        DegreePoly v = DegreePoly::constant(c) * d;
        for (int i = 0; i < t->size(); ++i) {
            if (!m[i])
                continue;
            const std::string& n = t->names[i];
            const DegreePoly* f = nullptr;
            if (n == "c1")
                f = &c1;
            else if (n == "c2")
                f = &c2;
            else if (n == "c3")
                f = &c3;
            else if (n != "h")
                throw usage_error("substitute_degree: non-base generator " + n);
            if (f)
                for (int k = 0; k < m[i]; ++k)
                    v = v * *f;
        }
        result = result + v;
    }
    return result;
}

Scalar substitute_at(const GradedClass& x, long d)
{
    return substitute_degree(x).eval(Scalar(d));
}

}  // namespace jetcalc
