#include "jetcalc/combinatorics.hpp"

#include "jetcalc/charclass.hpp"

#include <algorithm>
#include <functional>

namespace jetcalc {

namespace {

long long binom(long long n, long long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    long long r = 1;
    for (long long i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

}  // namespace

std::vector<MultiIndex> index_set(int p, int l)
{
    std::vector<MultiIndex> out;
    MultiIndex cur(p, 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == p - 1) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[pos] = v;
            rec(pos + 1, left - v);
        }
    };
    if (p >= 1)
        rec(0, l);
    return out;
}

bool CompositionTable::satisfies(const std::vector<int>& q) const
{
    if (q.size() != slots.size())
        return false;
    std::vector<long> total(p, 0);
    for (std::size_t s = 0; s < slots.size(); ++s) {
        if (q[s] < 0)
            return false;
        for (int j = 0; j < p; ++j)
            total[j] += static_cast<long>(q[s]) * slots[s].i[j];
    }
    for (long t : total)
        if (t != m)
            return false;
    return true;
}

CompositionTable enumerate_compositions(int p, int k, int m)
{
    if (p < 1 || k < 1 || m < 1 || p > 3 || k > 3 || m > 12)
        throw usage_error("enumerate_compositions: need 1 <= p <= 3, 1 <= k <= 3, 1 <= m <= 12");
    CompositionTable t;
    t.p = p;
    t.k = k;
    t.m = m;
    for (int l = 1; l <= k; ++l) {
        auto I = index_set(p, l);
        if (static_cast<long long>(I.size()) != binom(l + p - 1, p - 1))
            throw std::logic_error("index_set: wrong cardinality");
        for (auto& i : I)
            t.slots.push_back({l, i});
    }
    std::vector<int> q(t.slots.size(), 0);
    std::vector<int> left(p, m);
    std::function<void(std::size_t)> rec = [&](std::size_t s) {
        if (s == t.slots.size()) {
            if (std::all_of(left.begin(), left.end(), [](int v) { return v == 0; }))
                t.entries.push_back(q);
            return;
        }
        const MultiIndex& i = t.slots[s].i;
        int cap = m;
        for (int j = 0; j < p; ++j)
            if (i[j])
                cap = std::min(cap, left[j] / i[j]);
        for (int v = 0; v <= cap; ++v) {
            q[s] = v;
            for (int j = 0; j < p; ++j)
                left[j] -= v * i[j];
            rec(s + 1);
            for (int j = 0; j < p; ++j)
                left[j] += v * i[j];
        }
        q[s] = 0;
    };
    rec(0);
    for (auto& e : t.entries)
        if (!t.satisfies(e))
            throw std::logic_error("enumerate_compositions: entry violates the weight equation");
    return t;
}

long long rank_EGG(int p, int k, int m, int n)
{
    CompositionTable t = enumerate_compositions(p, k, m);
    long long total = 0;
    for (auto& q : t.entries) {
        long long prod = 1;
        for (int v : q)
            prod *= binom(v + n - 1, n - 1);
        total += prod;
    }
    return total;
}

long long rank_EGG_bruteforce(int p, int k, int m, int n)
{
    if (p < 1 || k < 1 || m < 1 || n < 1)
        throw usage_error("rank_EGG_bruteforce: positive parameters required");
    // one variable xi_j^{(i)} per coordinate j and multi-index i, weight i
    std::vector<MultiIndex> vars;
    for (int l = 1; l <= k; ++l)
        for (auto& i : index_set(p, l))
            for (int j = 0; j < n; ++j)
                vars.push_back(i);
    std::vector<int> left(p, m);
    long long count = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t v) {
        if (v == vars.size()) {
            if (std::all_of(left.begin(), left.end(), [](int x) { return x == 0; }))
                ++count;
            return;
        }
        for (int e = 0;; ++e) {
            bool fits = true;
            for (int j = 0; j < p; ++j)
                if (left[j] < e * vars[v][j])
                    fits = false;
            if (!fits)
                break;
            for (int j = 0; j < p; ++j)
                left[j] -= e * vars[v][j];
            rec(v + 1);
            for (int j = 0; j < p; ++j)
                left[j] += e * vars[v][j];
        }
    };
    rec(0);
    return count;
}

std::vector<int> YoungShape::column_heights() const
{
    check_partition(lambda);
    std::vector<int> t;
    int cols = lambda.empty() ? 0 : lambda.front();
    for (int i = 1; i <= cols; ++i)
        t.push_back(static_cast<int>(std::count_if(lambda.begin(), lambda.end(), [i](int l) { return l >= i; })));
    return t;
}

void check_partition(const std::vector<int>& lambda)
{
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i] < 0)
            throw usage_error("partition has a negative part");
        if (i && lambda[i] > lambda[i - 1])
            throw usage_error("partition is not weakly decreasing");
    }
}

Scalar schur_dim(const std::vector<int>& lambda, int r)
{
    check_partition(lambda);
    std::vector<int> l = lambda;
    while (!l.empty() && l.back() == 0)
        l.pop_back();
    if (static_cast<int>(l.size()) > r)
        throw usage_error("schur_dim: partition longer than the rank");
    l.resize(r, 0);
    Scalar v = 1;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j)
            v *= frac(l[i] - l[j] + j - i, j - i);
    return v;
}

std::vector<std::vector<int>> ssyt_weights(const std::vector<int>& lambda, int r)
{
    check_partition(lambda);
    std::vector<int> l = lambda;
    while (!l.empty() && l.back() == 0)
        l.pop_back();
    std::vector<std::vector<int>> T;
    for (int len : l)
        T.emplace_back(len, 0);
    std::vector<std::vector<int>> out;
    std::vector<int> content(r, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t row, int col) {
        if (row == T.size()) {
            out.push_back(content);
            return;
        }
        if (col == static_cast<int>(T[row].size())) {
            rec(row + 1, 0);
            return;
        }
        int lo = 1;
        if (col > 0)
            lo = std::max(lo, T[row][col - 1]);
        if (row > 0)
            lo = std::max(lo, T[row - 1][col] + 1);
        for (int v = lo; v <= r; ++v) {
            T[row][col] = v;
            ++content[v - 1];
            rec(row, col + 1);
            --content[v - 1];
        }
    };
    rec(0, 0);
    return out;
}

long long ssyt_count(const std::vector<int>& lambda, int r)
{
    return static_cast<long long>(ssyt_weights(lambda, r).size());
}

bool br_vanishing(const YoungShape& shape, int n, int N)
{
    if (N <= n)
        throw usage_error("br_vanishing: need N > n");
    auto t = shape.column_heights();
    long sum = 0;
    for (int i = 0; i < N - n && i < static_cast<int>(t.size()); ++i)
        sum += t[i];
    return sum < n;
}

bool order_k_vanishing(int p, int k, int n, int codim)
{
    if (p < 1 || k < 1 || n < 1 || codim < 1)
        throw usage_error("order_k_vanishing: positive inputs required");
    return (binom(k + p, p) - 1) * codim < n;
}

long long coefficient_space_dim(int d)
{
    if (d < 1)
        throw usage_error("coefficient_space_dim: need d >= 1");
    return binom(d + 4, 4) - 1;
}

std::vector<std::vector<int>> schur_weights_mm0(int m)
{
    auto w = ssyt_weights({m, m}, 3);
    for (auto& v : w)
        for (int& x : v)
            x = -x;
    std::sort(w.begin(), w.end());
    return w;
}

std::vector<std::vector<int>> sym_twist_weights_mm0(int m)
{
    std::vector<std::vector<int>> w;
    for (int a = 0; a <= m; ++a)
        for (int b = 0; a + b <= m; ++b)
            w.push_back({a - m, b - m, (m - a - b) - m});
    std::sort(w.begin(), w.end());
    return w;
}

bool character_identity_holds(int m)
{
    return schur_weights_mm0(m) == sym_twist_weights_mm0(m);
}

namespace {

// ch_k of a bundle with the given root weights, as a class in c1, c2, c3 (k <= 3)
GradedClass ch_component(const HypersurfaceData& X, const std::vector<std::vector<int>>& weights, int k)
{
    const TablePtr& t = X.table;
    GradedClass e1 = X.c1, e2 = X.c2, e3 = X.c3;
    // coefficient of x^lambda for each partition lambda of k
    auto coeff = [&](std::array<int, 3> ex) {
        Scalar s = 0;
        for (auto& w : weights) {
            Scalar term = 1;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < ex[i]; ++j)
                    term *= frac(w[i], j + 1);
            s += term;
        }
        return s;
    };
    switch (k) {
    case 0:
        return GradedClass::constant(t, static_cast<long>(weights.size()));
    case 1:
        return scale(e1, coeff({1, 0, 0}));
    case 2:
        return add(scale(sub(mul(e1, e1), scale(e2, 2)), coeff({2, 0, 0})), scale(e2, coeff({1, 1, 0})));
    case 3: {
        GradedClass m3 = add(sub(mul(mul(e1, e1), e1), scale(mul(e1, e2), 3)), scale(e3, 3));
        GradedClass m21 = sub(mul(e1, e2), scale(e3, 3));
        return add(add(scale(m3, coeff({3, 0, 0})), scale(m21, coeff({2, 1, 0}))), scale(e3, coeff({1, 1, 1})));
    }
    default:
        throw usage_error("ch_component: degree above 3");
    }
}

}  // namespace

GradedClass euler_char_form(int m, EulerRoute route)
{
    if (m < 0 || m > 10)
        throw usage_error("euler_char: need 0 <= m <= 10");
    HypersurfaceData X = hypersurface_symbolic();
    auto w = route == EulerRoute::SchurWeights ? schur_weights_mm0(m) : sym_twist_weights_mm0(m);
    GradedClass td = todd(X.tangent());
    GradedClass ch(X.table);
    for (int k = 0; k <= 3; ++k)
        ch = add(ch, ch_component(X, w, k));
    return mul(ch, td).component(3);
}

Scalar euler_char_mm0(long d, int m, EulerRoute route)
{
    if (d < 1 || d > 20)
        throw usage_error("euler_char: need 1 <= d <= 20");
    return substitute_at(euler_char_form(m, route), d);
}

EulerLeading leading_coefficient_check(long d, int samples, int bound)
{
    std::vector<std::pair<Scalar, Scalar>> pts;
    for (int m = 0; m < samples; ++m)
        pts.emplace_back(Scalar(m), euler_char_mm0(d, m));
    EulerLeading r;
    r.chi = interpolate(pts, bound);
    r.degree = r.chi.degree_d();
    r.leading = r.chi.coeff(5);
    HypersurfaceData X = hypersurface_symbolic();
    GradedClass f = sub(sub(scale(mul(mul(X.c1, X.c1), X.c1), 4), scale(mul(X.c1, X.c2), 3)), X.c3);
    r.expected = substitute_at(f, d) / 120;
    r.ok = r.degree == 5 && r.leading == r.expected;
    return r;
}

}  // namespace jetcalc
