#include "jetcalc/jetpoly.hpp"

#include <algorithm>
#include <sstream>

namespace jetcalc {

JetVars::JetVars(int d) : d_(d)
{
    if (d < 1 || d > 8)
        throw usage_error("JetVars: degree out of range");
    for (int j = 1; j <= 4; ++j)
        names_.push_back("z" + std::to_string(j));
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 4; ++j)
            names_.push_back("xi" + std::to_string(i) + "_" + std::to_string(j));
    for (auto [i, l] : {std::pair{1, 1}, {1, 2}, {2, 2}})
        for (int j = 1; j <= 4; ++j)
            names_.push_back("xi" + std::to_string(i) + std::to_string(l) + "_" + std::to_string(j));
    for (int t = d; t >= 0; --t)
        for (int a1 = t; a1 >= 0; --a1)
            for (int a2 = t - a1; a2 >= 0; --a2)
                for (int a3 = t - a1 - a2; a3 >= 0; --a3)
                    alphas_.push_back({a1, a2, a3, t - a1 - a2 - a3});
    a_begin_ = count();
    for (auto& al : alphas_) {
        if (al == leading())
            continue;
        a_index_[al] = count();
        a_alpha_.push_back(al);
        names_.push_back("a" + std::to_string(al[0]) + std::to_string(al[1]) + std::to_string(al[2]) +
                         std::to_string(al[3]));
    }
    a_end_ = count();
}

int JetVars::z(int j) const
{
    if (j < 1 || j > 4)
        throw usage_error("z index out of range");
    return j - 1;
}

int JetVars::xi(int i, int j) const
{
    if (i < 1 || i > 2 || j < 1 || j > 4)
        throw usage_error("xi index out of range");
    return 4 + (i - 1) * 4 + (j - 1);
}

int JetVars::xi2(int i, int l, int j) const
{
    if (i > l)
        std::swap(i, l);
    if (i < 1 || l > 2 || j < 1 || j > 4)
        throw usage_error("xi2 index out of range");
    int block = i == 1 ? (l == 1 ? 0 : 1) : 2;
    return 12 + block * 4 + (j - 1);
}

int JetVars::a(const Alpha& alpha) const
{
    if (alpha == leading())
        return -1;
    auto it = a_index_.find(alpha);
    if (it == a_index_.end())
        throw usage_error("a: multi-index outside the chart");
    return it->second;
}

JetMono mono_mul(const JetMono& a, const JetMono& b)
{
    JetMono r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first))
            r.push_back(a[i++]);
        else if (i == a.size() || b[j].first < a[i].first)
            r.push_back(b[j++]);
        else {
            r.push_back({a[i].first, static_cast<std::uint16_t>(a[i].second + b[j].second)});
            ++i;
            ++j;
        }
    }
    return r;
}

int mono_exponent(const JetMono& m, int id)
{
    for (auto& [v, e] : m)
        if (v == id)
            return e;
    return 0;
}

JetPoly JetPoly::constant(const Scalar& c)
{
    JetPoly p;
    p.add_term({}, c);
    return p;
}

JetPoly JetPoly::var(int id, int power)
{
    JetPoly p;
    if (power == 0)
        p.add_term({}, 1);
    else
        p.add_term({{static_cast<std::uint16_t>(id), static_cast<std::uint16_t>(power)}}, 1);
    return p;
}

void JetPoly::add_term(const JetMono& m, const Scalar& c)
{
    if (c == 0)
        return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Scalar JetPoly::coeff(const JetMono& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
}

JetPoly JetPoly::derivative(int id) const
{
    JetPoly r;
    for (auto& [m, c] : terms_) {
        for (std::size_t k = 0; k < m.size(); ++k) {
            if (m[k].first != id)
                continue;
            JetMono n = m;
            int e = n[k].second;
            if (e == 1)
                n.erase(n.begin() + static_cast<long>(k));
            else
                n[k].second = static_cast<std::uint16_t>(e - 1);
            r.add_term(n, c * e);
            break;
        }
    }
    return r;
}

std::string JetPoly::str(const JetVars& v) const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms_) {
        os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
        Scalar a = abs(c);
        bool unit = a == 1 && !m.empty();
        if (!unit)
            os << a.get_str();
        bool star = !unit;
        for (auto& [id, e] : m) {
            os << (star ? "*" : "") << v.name(id);
            if (e > 1)
                os << '^' << e;
            star = true;
        }
        first = false;
    }
    return os.str();
}

JetPoly operator+(const JetPoly& x, const JetPoly& y)
{
    JetPoly r = x;
    for (auto& [m, c] : y.terms())
        r.add_term(m, c);
    return r;
}

JetPoly operator-(const JetPoly& x, const JetPoly& y)
{
    JetPoly r = x;
    for (auto& [m, c] : y.terms())
        r.add_term(m, -c);
    return r;
}

JetPoly operator*(const JetPoly& x, const JetPoly& y)
{
    JetPoly r;
    for (auto& [m1, c1] : x.terms())
        for (auto& [m2, c2] : y.terms())
            r.add_term(mono_mul(m1, m2), c1 * c2);
    return r;
}

JetPoly operator*(const Scalar& c, const JetPoly& x)
{
    JetPoly r;
    if (c == 0)
        return r;
    for (auto& [m, v] : x.terms())
        r.add_term(m, c * v);
    return r;
}

JetPoly z_power(const JetVars& v, const Alpha& alpha)
{
    JetMono m;
    for (int j = 0; j < 4; ++j)
        if (alpha[j])
            m.push_back({static_cast<std::uint16_t>(v.z(j + 1)), static_cast<std::uint16_t>(alpha[j])});
    JetPoly p;
    p.add_term(m, 1);
    return p;
}

void VectorFieldSym::add(int id, const JetPoly& c)
{
    JetPoly& slot = components[id];
    slot = slot + c;
    if (slot.is_zero())
        components.erase(id);
}

JetPoly apply_field(const VectorFieldSym& V, const JetPoly& f)
{
    JetPoly r;
    for (auto& [id, c] : V.components) {
        JetPoly df = f.derivative(id);
        for (auto& [m1, c1] : c.terms())
            for (auto& [m2, c2] : df.terms())
                r.add_term(mono_mul(m1, m2), c1 * c2);
    }
    return r;
}

}  // namespace jetcalc
