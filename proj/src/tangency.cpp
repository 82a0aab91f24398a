#include "jetcalc/tangency.hpp"

#include <algorithm>
#include <set>

namespace jetcalc {

JetPoly first_order(const JetVars& v, const JetPoly& P, int i)
{
    JetPoly g;
    for (int j = 1; j <= 4; ++j)
        g = g + P.derivative(v.z(j)) * JetPoly::var(v.xi(i, j));
    return g;
}

JetPoly second_order(const JetVars& v, const JetPoly& P, int i, int l)
{
    JetPoly g;
    for (int j = 1; j <= 4; ++j) {
        JetPoly Pj = P.derivative(v.z(j));
        g = g + Pj * JetPoly::var(v.xi2(i, l, j));
        for (int k = 1; k <= 4; ++k)
            g = g + Pj.derivative(v.z(k)) * JetPoly::var(v.xi(i, j)) * JetPoly::var(v.xi(l, k));
    }
    return g;
}

JetIdeal build_jet_ideal(int d)
{
    if (d < 3 || d > 6)
        throw usage_error("build_jet_ideal: need 3 <= d <= 6");
    JetIdeal I{JetVars(d), {}, {}, {}};
    const JetVars& v = I.vars;
    for (auto& al : v.alphas()) {
        int id = v.a(al);
        I.P = I.P + (id < 0 ? z_power(v, al) : JetPoly::var(id) * z_power(v, al));
    }
    I.generators.push_back(I.P);
    I.labels.push_back("P");
    for (int i = 1; i <= 2; ++i) {
        I.generators.push_back(first_order(v, I.P, i));
        I.labels.push_back("g" + std::to_string(i));
    }
    for (auto [i, l] : {std::pair{1, 1}, {1, 2}, {2, 2}}) {
        I.generators.push_back(second_order(v, I.P, i, l));
        I.labels.push_back("g" + std::to_string(i) + std::to_string(l));
    }
    return I;
}

namespace {

long binom_small(int n, int k)
{
    long r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

}  // namespace

VectorFieldSym pattern_field(const JetVars& v, const Alpha& e, const Alpha& alpha, bool drop_last)
{
    VectorFieldSym V;
    for (int s0 = 0; s0 <= e[0]; ++s0)
        for (int s1 = 0; s1 <= e[1]; ++s1)
            for (int s2 = 0; s2 <= e[2]; ++s2)
                for (int s3 = 0; s3 <= e[3]; ++s3) {
                    Alpha s{s0, s1, s2, s3};
                    if (drop_last && s == e)
                        continue;
                    Alpha target;
                    Scalar c = 1;
                    for (int j = 0; j < 4; ++j) {
                        target[j] = alpha[j] - s[j];
                        c *= binom_small(e[j], s[j]);
                    }
                    if ((s0 + s1 + s2 + s3) % 2)
                        c = -c;
                    int id = v.a(target);
                    if (id < 0)
                        throw usage_error("pattern_field: touches the fixed leading coefficient");
                    V.add(id, c * z_power(v, s));
                }
    return V;
}

std::vector<Alpha> field_patterns(const std::string& type)
{
    std::vector<Alpha> out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k) {
                Alpha e{0, 0, 0, 0};
                if (type == "300") {
                    if (j || k)
                        continue;
                    e[i] = 3;
                } else if (type == "210") {
                    if (k || i == j)
                        continue;
                    e[i] = 2;
                    e[j] = 1;
                } else if (type == "111") {
                    if (!(i < j && j < k))
                        continue;
                    e[i] = e[j] = e[k] = 1;
                } else {
                    throw usage_error("field_patterns: unknown type " + type);
                }
                out.push_back(e);
            }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<CoefficientField> coefficient_fields(const JetVars& v)
{
    std::vector<CoefficientField> out;
    std::set<std::pair<Alpha, Alpha>> seen;
    for (std::string type : {"300", "210", "111"})
        for (auto& e : field_patterns(type))
            for (auto& al : v.alphas()) {
                if (al == v.leading())
                    continue;
                bool fits = true;
                for (int j = 0; j < 4; ++j)
                    fits = fits && al[j] >= e[j];
                if (!fits || !seen.insert({e, al}).second)
                    continue;
                out.push_back({type, e, al, pattern_field(v, e, al)});
            }
    return out;
}

bool TangencyReport::tangent() const
{
    return std::all_of(images.begin(), images.end(), [](const JetPoly& p) { return p.is_zero(); });
}

std::vector<bool> TangencyReport::zero() const
{
    std::vector<bool> z;
    for (auto& p : images)
        z.push_back(p.is_zero());
    return z;
}

TangencyReport check_tangency(const VectorFieldSym& V, const JetIdeal& ideal)
{
    TangencyReport r;
    for (auto& g : ideal.generators)
        r.images.push_back(apply_field(V, g));
    return r;
}

VectorFieldSym xi_field(const JetVars& v, const Matrix4& A)
{
    VectorFieldSym V;
    auto twist = [&](auto idx) {
        for (int j = 1; j <= 4; ++j) {
            JetPoly w;
            for (int m = 1; m <= 4; ++m)
                w = w + A[j - 1][m - 1] * JetPoly::var(idx(m));
            V.add(idx(j), w);
        }
    };
    for (int k = 1; k <= 2; ++k)
        twist([&](int j) { return v.xi(k, j); });
    for (auto [i, k] : {std::pair{1, 1}, {1, 2}, {2, 2}})
        twist([&](int j) { return v.xi2(i, k, j); });
    return V;
}

namespace {

// splits a monomial into its a-variable (or -1) and the remaining z/xi part
std::pair<int, JetMono> split_a(const JetVars& v, const JetMono& m)
{
    int a = -1;
    JetMono rest;
    for (auto& t : m) {
        if (v.is_a(t.first)) {
            if (a >= 0 || t.second != 1)
                throw std::logic_error("split_a: a-degree above one");
            a = t.first;
        } else {
            rest.push_back(t);
        }
    }
    return {a, rest};
}

}  // namespace

AFieldResult solve_A_field(const Matrix4& A, const JetIdeal& ideal)
{
    const JetVars& v = ideal.vars;
    if (v.d() > 4)
        throw usage_error("solve_A_field: need d <= 4");
    const JetVars cubic(3);
    std::vector<Alpha> betas = cubic.alphas();
    std::vector<int> avars;
    for (int id = 0; id < v.count(); ++id)
        if (v.is_a(id))
            avars.push_back(id);
    int nb = static_cast<int>(betas.size());
    int nunk = static_cast<int>(avars.size()) * nb;

    using Key = std::pair<int, JetMono>;
    std::map<Key, SparseRow> rows;
    for (std::size_t ai = 0; ai < avars.size(); ++ai)
        for (std::size_t g = 0; g < ideal.generators.size(); ++g) {
            JetPoly D = ideal.generators[g].derivative(avars[ai]);
            for (int bi = 0; bi < nb; ++bi) {
                JetMono zb = z_power(v, betas[bi]).terms().begin()->first;
                int u = static_cast<int>(ai) * nb + bi;
                for (auto& [m, c] : D.terms())
                    rows[{static_cast<int>(g), mono_mul(zb, m)}][u] += c;
            }
        }
    // right-hand sides, one column per a-degree block: column 0 is the a-free part
    std::map<int, int> block_of{{-1, 0}};
    for (std::size_t i = 0; i < avars.size(); ++i)
        block_of[avars[i]] = static_cast<int>(i) + 1;
    VectorFieldSym W = xi_field(v, A);
    std::map<Key, SparseRow> rhs;
    for (std::size_t g = 0; g < ideal.generators.size(); ++g) {
        JetPoly img = apply_field(W, ideal.generators[g]);
        for (auto& [m, c] : img.terms()) {
            auto [a, rest] = split_a(v, m);
            rhs[{static_cast<int>(g), rest}][block_of.at(a)] -= c;
        }
    }
    for (auto& [k, r] : rhs)
        rows.try_emplace(k);

    AFieldResult res;
    res.unknowns_per_block = nunk;
    SparseSystem sys(nunk);
    for (auto& [k, row] : rows) {
        auto it = rhs.find(k);
        sys.add_equation(row, it == rhs.end() ? SparseRow{} : it->second);
    }
    res.equations = static_cast<int>(sys.equations());
    res.rank = sys.rank();
    if (!sys.consistent()) {
        res.certificate = sys.conflict();
        return res;
    }
    res.feasible = true;
    res.field = W;
    for (auto& [a, block] : block_of) {
        std::vector<Scalar> x = sys.solve(block);
        JetPoly ga = a < 0 ? JetPoly::constant(1) : JetPoly::var(a);
        for (int u = 0; u < nunk; ++u)
            if (x[u] != 0)
                res.field.add(avars[u / nb], x[u] * z_power(v, betas[u % nb]) * ga);
    }
    return res;
}

namespace {

JetPoly det3(const std::array<std::array<JetPoly, 3>, 3>& M)
{
    return M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) - M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
           M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
}

std::array<JetPoly, 3> column_of(const JetVars& v, const Alpha& al, int i, int l)
{
    JetPoly za = z_power(v, al);
    return {za, first_order(v, za, i), second_order(v, za, i, l)};
}

}  // namespace

CramerReport cramer_pole_audit(int d, int i, int l)
{
    if (d < 3)
        throw usage_error("cramer_pole_audit: need d >= 3");
    if (i < 1 || i > 2 || l < 1 || l > 2)
        throw usage_error("cramer_pole_audit: bad (i, l)");
    JetVars v(d);
    const std::array<Alpha, 3> unknowns{Alpha{0, 0, 0, 0}, Alpha{1, 0, 0, 0}, Alpha{0, 1, 0, 0}};
    std::array<std::array<JetPoly, 3>, 3> M;
    for (int t = 0; t < 3; ++t) {
        auto col = column_of(v, unknowns[t], i, l);
        for (int r = 0; r < 3; ++r)
            M[r][t] = col[r];
    }
    CramerReport rep;
    rep.denominator = det3(M);
    JetPoly W12 = JetPoly::var(v.xi(i, 1)) * JetPoly::var(v.xi2(i, l, 2)) -
                  JetPoly::var(v.xi2(i, l, 1)) * JetPoly::var(v.xi(i, 2));
    rep.denominator_is_W12 = rep.denominator == W12;
    rep.identity_ok = true;
    rep.profiles_ok = true;
    const JetVars quadratic(2);
    for (auto& al : quadratic.alphas()) {
        if (std::find(unknowns.begin(), unknowns.end(), al) != unknowns.end())
            continue;
        auto r = column_of(v, al, i, l);
        std::array<JetPoly, 3> N;
        for (int t = 0; t < 3; ++t) {
            auto Mt = M;
            for (int row = 0; row < 3; ++row)
                Mt[row][t] = r[row];
            N[t] = JetPoly::constant(-1) * det3(Mt);
        }
        for (int row = 0; row < 3; ++row) {
            JetPoly s = rep.denominator * r[row];
            for (int t = 0; t < 3; ++t)
                s = s + M[row][t] * N[t];
            rep.identity_ok = rep.identity_ok && s.is_zero();
        }
        for (int t = 0; t < 3; ++t) {
            CramerEntry e{al, t, N[t]};
            for (auto& [m, c] : N[t].terms()) {
                int dz = 0, dx = 0, de = 0;
                for (auto& [id, ex] : m) {
                    if (v.is_z(id))
                        dz += ex;
                    else if (v.is_xi(id))
                        dx += ex;
                    else
                        de += ex;
                }
                e.max_z = std::max(e.max_z, dz);
                e.max_xi = std::max(e.max_xi, dx);
                e.max_eta = std::max(e.max_eta, de);
                e.max_total = std::max(e.max_total, dz + dx + de);
                bool ok = (dz <= 2 && dx <= 1 && de <= 1) || (dz <= 1 && dx <= 3 && de == 0);
                e.profile_ok = e.profile_ok && ok;
            }
            rep.max_numerator_degree = std::max(rep.max_numerator_degree, e.max_total);
            rep.profiles_ok = rep.profiles_ok && e.profile_ok;
            rep.entries.push_back(std::move(e));
        }
    }
    rep.order = rep.max_numerator_degree + rep.first_package_order;
    return rep;
}

bool sigma_locus(const std::array<Scalar, 4>& x, const std::array<Scalar, 4>& y)
{
    for (int j = 0; j < 4; ++j)
        for (int k = j + 1; k < 4; ++k)
            if (x[j] * y[k] - x[k] * y[j] != 0)
                return false;
    return true;
}

}  // namespace jetcalc
