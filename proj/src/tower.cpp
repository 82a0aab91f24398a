#include "jetcalc/tower.hpp"

#include <algorithm>
#include <deque>

namespace jetcalc {

bool TowerLevel::is_fiber_monomial(const Monomial& m) const
{
    const auto& t = *ring.table();
    for (int i = 0; i < t.size(); ++i)
        if (m[i] && t.levels[i] != fiber_level)
            return false;
    return true;
}

Monomial TowerLevel::fiber_part(const Monomial& m) const
{
    const auto& t = *ring.table();
    Monomial f{};
    for (int i = 0; i < t.size(); ++i)
        if (t.levels[i] == fiber_level)
            f[i] = m[i];
    return f;
}

namespace {

struct Lead {
    Monomial m;
    Scalar c;
};

Lead leading(const GradedClass& g)
{
    const auto& t = *g.table();
    auto it = g.terms().begin();
    Lead best{it->first, it->second};
    for (; it != g.terms().end(); ++it)
        if (t.compare(it->first, best.m) > 0)
            best = {it->first, it->second};
    return best;
}

RewriteRule make_rule(const GradedClass& g)
{
    Lead l = leading(g);
    GradedClass rest(g.table());
    for (auto& [m, c] : g.terms())
        if (m != l.m)
            rest.add_term(m, -c / l.c);
    return {l.m, rest};
}

void enumerate_fiber(const GeneratorTable& t, int level, int maxw, std::vector<int>& gens, std::size_t pos,
                     Monomial& cur, int w, std::vector<Monomial>& out)
{
    if (pos == gens.size()) {
        out.push_back(cur);
        return;
    }
    int g = gens[pos];
    for (int e = 0; w + e * t.degrees[g] <= maxw; ++e) {
        cur[g] = static_cast<std::uint8_t>(e);
        enumerate_fiber(t, level, maxw, gens, pos + 1, cur, w + e * t.degrees[g], out);
    }
    cur[g] = 0;
}

}  // namespace

TowerLevel grassmann_level(const Ring& base, const BundleData& V, int p,
                           const std::vector<std::string>& sub_names, int index)
{
    const TablePtr& t = base.table();
    int r = V.rank;
    if (p < 1 || p > 3 || r > 6 || p >= r)
        throw usage_error("grassmann_level: unsupported rank " + std::to_string(r) + " / p " +
                          std::to_string(p));
    if (static_cast<int>(sub_names.size()) != p)
        throw usage_error("grassmann_level: need p generator names");
    TowerLevel L;
    L.index = index;
    L.p = p;
    L.rank = r;
    L.V = bundle_normal_form(V, base);
    L.fiber_level = t->levels[t->index(sub_names[0])];
    std::vector<int> fiber_gens;
    for (int i = 0; i < p; ++i) {
        int gi = t->index(sub_names[i]);
        if (t->degrees[gi] != i + 1 || t->levels[gi] != L.fiber_level)
            throw usage_error("grassmann_level: generator " + sub_names[i] + " has wrong degree/level");
        fiber_gens.push_back(gi);
        L.sub.push_back(GradedClass::generator(t, sub_names[i]));
    }
    for (int i = 0; i < t->size(); ++i)
        if (t->levels[i] == L.fiber_level &&
            std::find(fiber_gens.begin(), fiber_gens.end(), i) == fiber_gens.end())
            throw usage_error("grassmann_level: stray generator on the fiber level");
    L.fiber_dim = p * (r - p);

    auto Vc = [&](int k) { return k < static_cast<int>(L.V.chern.size()) ? L.V.chern[k] : GradedClass(t); };
    std::vector<GradedClass> b{base.one()};
    for (int k = 1; k <= r; ++k) {
        GradedClass s = Vc(k);
        for (int i = 1; i <= std::min(k, p); ++i)
            s = sub(s, mul(L.sub[i - 1], b[k - i]));
        b.push_back(base.nf(s));
    }
    for (int k = 0; k <= r - p; ++k)
        L.quot.push_back(b[k]);
    for (int k = r - p + 1; k <= r; ++k)
        L.vanishing.push_back(b[k]);

    // completion restricted to the fiber generators: pairs with base rules have coprime
    // leads and pairs with truncation monomials reduce to zero, so only fiber pairs matter
    std::deque<GradedClass> queue(L.vanishing.begin(), L.vanishing.end());
    Ring cur = base;
    L.ring = base;
    int guard = 0;
    while (!queue.empty()) {
        if (++guard > 200)
            throw std::runtime_error("grassmann_level: completion does not settle");
        GradedClass g = cur.nf(queue.front());
        queue.pop_front();
        if (g.is_zero())
            continue;
        RewriteRule rule = make_rule(g);
        if (!L.is_fiber_monomial(rule.leading))
            throw std::runtime_error("grassmann_level: leading monomial " + t->format(rule.leading) +
                                     " is not a pure fiber monomial");
        GradedClass rel = rule_relation(rule);
        for (auto& old : L.relations) {
            Monomial l = mono_lcm(old.leading, rule.leading);
            if (l == mono_mul(old.leading, rule.leading))
                continue;
            GradedClass s1 = mul(GradedClass::monomial(t, mono_div(l, rule.leading)), rel);
            GradedClass s2 = mul(GradedClass::monomial(t, mono_div(l, old.leading)), rule_relation(old));
            queue.push_back(sub(s1, s2));
        }
        L.relations.push_back(rule);
        cur = cur.with_rules({rule});
    }
    L.ring = cur;

    std::vector<Monomial> all;
    Monomial m{};
    enumerate_fiber(*t, L.fiber_level, L.fiber_dim, fiber_gens, 0, m, 0, all);
    for (auto& mm : all) {
        bool red = false;
        for (auto& rl : L.relations)
            if (mono_divides(rl.leading, mm))
                red = true;
        if (!red)
            L.basis.push_back(mm);
    }
    std::sort(L.basis.begin(), L.basis.end(), [&](auto& a, auto& b2) { return t->compare(a, b2) < 0; });
    int tops = 0;
    for (auto& mm : L.basis)
        if (t->weight(mm) == L.fiber_dim) {
            L.top = mm;
            ++tops;
        }
    if (tops != 1)
        throw std::runtime_error("grassmann_level: top fiber degree is not one-dimensional");

    // full-box Schubert class b_{r-p}^p is the point class of the fiber
    GradedClass pt = cur.pow(L.quot.back(), p);
    Scalar v = pt.coeff(L.top);
    if (v == 0)
        throw std::runtime_error("grassmann_level: degenerate point class");
    L.norm = 1 / v;
    L.u = scale(L.sub[0], -1);
    return L;
}

GradedClass fiber_integrate(const TowerLevel& level, const GradedClass& x)
{
    GradedClass y = level.ring.nf(x);
    const TablePtr& t = y.table();
    GradedClass out(t);
    for (auto& [m, c] : y.terms()) {
        if (level.fiber_part(m) != level.top)
            continue;
        Monomial rest = mono_div(m, level.top);
        out.add_term(rest, c * level.norm);
    }
    return out;
}

std::vector<GradedClass> whitney_residuals(const TowerLevel& level)
{
    const TablePtr& t = level.ring.table();
    std::vector<GradedClass> res;
    int q = level.rank - level.p;
    for (int k = 1; k <= level.rank; ++k) {
        GradedClass s = k < static_cast<int>(level.V.chern.size()) ? scale(level.V.chern[k], -1) : GradedClass(t);
        for (int i = 0; i <= std::min(k, level.p); ++i) {
            int j = k - i;
            if (j > q)
                continue;
            GradedClass ai = i == 0 ? level.ring.one() : level.sub[i - 1];
            s = add(s, mul(ai, level.quot[j]));
        }
        res.push_back(level.ring.nf(s));
    }
    return res;
}

GradedClass eliminated_relation(const TowerLevel& level)
{
    const Monomial& a1 = level.sub[0].terms().begin()->first;
    int gi = static_cast<int>(std::find(a1.begin(), a1.end(), 1) - a1.begin());
    for (auto& r : level.relations) {
        Monomial only{};
        only[gi] = r.leading[gi];
        if (r.leading == only)
            return rule_relation(r);
    }
    throw std::runtime_error("eliminated_relation: no pure a1 relation");
}

std::string to_string(V1Convention c)
{
    return c == V1Convention::Printed ? "printed-ch-truncation" : "full-ch";
}

TablePtr tower_table(bool symbolic)
{
    if (symbolic)
        return GeneratorTable::make_levels({"h", "c1", "c2", "c3", "a1", "a2", "d1", "d2"},
                                           {1, 1, 2, 3, 1, 2, 1, 2}, {0, 0, 0, 0, 1, 1, 2, 2}, {3, 5, 9});
    return GeneratorTable::make_levels({"h", "a1", "a2", "d1", "d2"}, {1, 1, 2, 1, 2}, {0, 1, 1, 2, 2},
                                       {3, 5, 9});
}

static TablePtr free_table_of(const TablePtr& t)
{
    return GeneratorTable::make_levels(t->names, t->degrees, std::vector<int>(t->names.size(), 0),
                                       {t->truncation()});
}

BundleData compute_V1(const TablePtr& ft, const BundleData& V0_free, V1Convention conv)
{
    BundleData S1 = make_bundle(2, {GradedClass::generator(ft, "a1"), GradedClass::generator(ft, "a2")});
    const int top = 4;
    ChernCharacter chS1 = chern_to_ch(S1, top);
    ChernCharacter chV0 = chern_to_ch(V0_free, top);
    if (conv == V1Convention::Printed) {
        chS1 = ch_truncate(chS1, 2);
        chV0 = ch_truncate(chV0, 3);
    }
    ChernCharacter chS1d = ch_dual(chS1);
    ChernCharacter chV1 = ch_sum(chS1, ch_diff(ch_tensor(chV0, chS1d), ch_tensor(chS1, chS1d)));
    chV1 = ch_truncate(chV1, top);
    BundleData V1 = ch_to_chern(chV1, top);
    V1.chern.resize(top + 1);
    return V1;
}

Tower build_tower_from(const HypersurfaceData& X, V1Convention conv)
{
    Tower T;
    T.X = X;
    T.table = X.table;
    T.free_table = free_table_of(X.table);
    T.convention = conv;
    T.base = Ring(T.table, {});
    T.V0 = X.tangent();
    T.L1 = grassmann_level(T.base, T.V0, 2, {"a1", "a2"}, 1);

    BundleData V0f;
    V0f.rank = 3;
    for (auto& c : T.V0.chern)
        V0f.chern.push_back(c.rebase(T.free_table));
    T.V1_free = compute_V1(T.free_table, V0f, conv);
    BundleData V1;
    V1.rank = 4;
    for (auto& c : T.V1_free.chern)
        V1.chern.push_back(T.L1.ring.nf(c.rebase(T.table)));
    T.V1 = V1;
    T.L2 = grassmann_level(T.L1.ring, T.V1, 2, {"d1", "d2"}, 2);
    return T;
}

Tower build_tower_symbolic(V1Convention conv)
{
    return build_tower_from(hypersurface_symbolic(tower_table(true)), conv);
}

Tower build_tower(long d, V1Convention conv)
{
    return build_tower_from(hypersurface_data(d, tower_table(false)), conv);
}

GradedClass Tower::push_to_base(const GradedClass& x) const
{
    return fiber_integrate(L1, fiber_integrate(L2, x));
}

Scalar Tower::integrate_numeric(const GradedClass& x) const
{
    return X.integrate(push_to_base(x));
}

GradedClass z2_class(const Tower& t)
{
    return add(add(t.u2(), t.u1()), t.X.c1);
}

GradedClass integrate_total(const Tower& t, const GradedClass& x)
{
    if (!x.is_zero() && (!x.is_homogeneous() || x.degree() != 9))
        throw usage_error("integrate_total: class must be homogeneous of degree 9");
    return t.push_to_base(x);
}

long binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

long dim_Xk(long n, long r, long p, long k)
{
    if (p < 1 || r < p || k < 0)
        throw usage_error("dim_Xk: need 1 <= p <= r, k >= 0");
    long dim = n, pk = 1;
    for (long j = 1; j <= k; ++j) {
        pk *= p;
        dim += pk * (r - p);
    }
    return dim;
}

long rank_Vk(long r, long p, long k)
{
    if (p < 1 || r < p || k < 0)
        throw usage_error("rank_Vk: need 1 <= p <= r, k >= 0");
    if (k == 0)
        return r;
    long pk = 1;
    for (long j = 1; j <= k; ++j)
        pk *= p;
    return pk * (r - p) + p;
}

}  // namespace jetcalc
