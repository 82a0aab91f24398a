#include "jetcalc/positivity.hpp"

#include <future>
#include <sstream>

namespace jetcalc {

std::vector<long> weight_to_b(const WeightTuple& w)
{
    std::vector<long> b;
    long s = 0;
    for (long a : w.a)
        b.push_back(s += a);
    return b;
}

bool is_effective_weight(const WeightTuple& w)
{
    for (long b : weight_to_b(w))
        if (b < 0)
            return false;
    return true;
}

WeightTuple operator+(const WeightTuple& x, const WeightTuple& y)
{
    WeightTuple r;
    r.a.resize(std::max(x.a.size(), y.a.size()), 0);
    for (std::size_t i = 0; i < x.a.size(); ++i)
        r.a[i] += x.a[i];
    for (std::size_t i = 0; i < y.a.size(); ++i)
        r.a[i] += y.a[i];
    r.h_twist = x.h_twist + y.h_twist;
    r.delta_twist = x.delta_twist + y.delta_twist;
    r.delta_symbolic = x.delta_symbolic || y.delta_symbolic;
    return r;
}

NefResult nef_recursion(int p, int k, NefVariant variant)
{
    if (p < 1 || k < 1)
        throw usage_error("nef_recursion: need p, k >= 1");
    long m = static_cast<long>(p) * p + 2;
    // L_{k-1} pulled back: B_{k-1} (or A_{k-1}) unrolled, u_j carries (p^2+1) m^{k-1-j}
    NefResult r;
    r.weights.a.assign(k, 0);
    r.weights.a[k - 1] = 1;
    long mult = 1;
    for (int j = k - 1; j >= 1; --j) {
        r.weights.a[j - 1] = (m - 1) * mult;
        mult *= m;
    }
    r.ell = 2L * p * mult;
    if (variant == NefVariant::A)
        r.weights.h_twist = r.ell;
    return r;
}

std::string to_string(UOrdering o)
{
    return o == UOrdering::PerLevel ? "per-level" : "reversed";
}

std::string weight_form(const WeightTuple& w, UOrdering o)
{
    std::ostringstream os;
    std::size_t k = w.a.size();
    bool first = true;
    for (std::size_t j = 0; j < k; ++j) {
        std::size_t level = o == UOrdering::PerLevel ? j + 1 : k - j;
        if (!first)
            os << " + ";
        os << w.a[j] << "*u" << level;
        first = false;
    }
    if (w.h_twist) {
        os << (first ? "" : " + ") << w.h_twist << "*h";
        first = false;
    }
    if (w.delta_symbolic)
        os << (first ? "" : " + ") << "delta*K";
    else if (w.delta_twist != 0)
        os << (first ? "" : " + ") << w.delta_twist.get_str() << "*K";
    return first && !w.delta_symbolic && w.delta_twist == 0 ? "0" : os.str();
}

WeightClass weight_class(const Tower& t, const WeightTuple& w, UOrdering o)
{
    if (w.a.size() > 2)
        throw usage_error("weight_class: at most two levels");
    std::vector<GradedClass> u{t.u1(), t.u2()};
    std::size_t k = w.a.size();
    WeightClass c{GradedClass(t.table), GradedClass(t.table)};
    for (std::size_t j = 0; j < k; ++j) {
        std::size_t level = o == UOrdering::PerLevel ? j : k - 1 - j;
        c.fixed = add(c.fixed, scale(u[level], w.a[j]));
    }
    c.fixed = add(c.fixed, scale(t.X.h, w.h_twist));
    GradedClass K = scale(t.X.c1, -1);
    if (w.delta_symbolic)
        c.per_delta = K;
    else
        c.fixed = add(c.fixed, scale(K, w.delta_twist));
    return c;
}

namespace {

// (F^8 - 8 F^7 G) Z split into its delta^0 and delta^1 parts before integration
std::pair<GradedClass, GradedClass> morse_integrands(const Tower& t, const WeightTuple& F, const WeightTuple& G,
                                                     UOrdering o)
{
    WeightClass f = weight_class(t, F, o);
    if (!f.per_delta.is_zero())
        throw usage_error("morse: F cannot carry a symbolic delta");
    WeightClass g = weight_class(t, G, o);
    const Ring& R = t.ring();
    GradedClass Z = z2_class(t);
    GradedClass F7Z = R.mul(R.pow(f.fixed, 7), Z);
    GradedClass base = sub(R.mul(f.fixed, F7Z), scale(R.mul(g.fixed, F7Z), 8));
    GradedClass per = scale(R.mul(g.per_delta, F7Z), -8);
    return {base, per};
}

}  // namespace

MorseReport morse_quantity(const Tower& t, const WeightTuple& F, const WeightTuple& G, UOrdering o)
{
    if (!t.X.symbolic())
        throw usage_error("morse_quantity: needs a symbolic tower");
    auto [base, per] = morse_integrands(t, F, G, o);
    MorseReport r;
    r.F = F;
    r.G = G;
    r.ordering = o;
    r.convention = t.convention;
    r.chern_form = integrate_total(t, base);
    r.chern_form_delta = integrate_total(t, per);
    r.degree_poly = substitute_degree(r.chern_form) + DegreePoly::delta() * substitute_degree(r.chern_form_delta);
    if (r.chern_form_delta.is_zero() && r.degree_poly.degree_d() >= 0) {
        try {
            r.threshold = threshold_search(r.degree_poly);
        } catch (const std::runtime_error&) {
        }
    }
    return r;
}

std::pair<Scalar, Scalar> morse_value(const Tower& t, const WeightTuple& F, const WeightTuple& G, UOrdering o)
{
    auto [base, per] = morse_integrands(t, F, G, o);
    return {t.X.integrate(integrate_total(t, base)), t.X.integrate(integrate_total(t, per))};
}

DegreePoly morse_interpolated(const WeightTuple& F, const WeightTuple& G, UOrdering o, V1Convention conv,
                              const std::vector<long>& samples, int degree_bound, bool parallel)
{
    auto eval = [&](long d) { return morse_value(build_tower(d, conv), F, G, o); };
    std::vector<std::pair<Scalar, Scalar>> values(samples.size());
    if (parallel) {
        std::vector<std::future<std::pair<Scalar, Scalar>>> jobs;
        for (long d : samples)
            jobs.push_back(std::async(std::launch::async, eval, d));
        for (std::size_t i = 0; i < jobs.size(); ++i)
            values[i] = jobs[i].get();
    } else {
        for (std::size_t i = 0; i < samples.size(); ++i)
            values[i] = eval(samples[i]);
    }
    std::vector<std::pair<Scalar, Scalar>> p0, p1;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        p0.emplace_back(Scalar(samples[i]), values[i].first);
        p1.emplace_back(Scalar(samples[i]), values[i].second);
    }
    return interpolate(p0, degree_bound) + DegreePoly::delta() * interpolate(p1, degree_bound);
}

long threshold_search(const DegreePoly& poly, int window)
{
    if (!poly.linear_in_delta() || !poly.delta_part(1).is_zero())
        throw usage_error("threshold_search: polynomial depends on delta");
    int deg = poly.degree_d();
    if (deg < 0 || poly.coeff(deg) <= 0)
        throw std::runtime_error("threshold_search: polynomial is not eventually positive");
    // past the largest root bound the polynomial stays positive; Cauchy bound caps the scan
    Scalar lead = poly.coeff(deg), cap = 0;
    for (int i = 0; i < deg; ++i)
        cap = std::max(cap, Scalar(abs(poly.coeff(i)) / lead));
    Scalar c2 = cap + 2;
    mpz_class limit = c2.get_num() / c2.get_den() + 1;
    long last_bad = 0;
    for (long d = 1; d <= limit.get_si() + window; ++d)
        if (poly.eval(Scalar(d)) <= 0)
            last_bad = d;
    return last_bad + 1;
}

bool bound_feasible(const DegreePoly& alpha, long d, long poles, BoundWitness* w)
{
    if (!alpha.linear_in_delta())
        throw usage_error("effective_bound: alpha is not linear in delta");
    if (d <= 5)
        return false;
    Scalar A = alpha.delta_part(0).eval(Scalar(d));
    Scalar B = alpha.delta_part(1).eval(Scalar(d));
    Scalar dmin = frac(poles, d - 5);
    Scalar at_min = A + B * dmin;
    bool ok = B > 0 || at_min > 0;
    if (w) {
        w->d = d;
        w->delta_min = dmin;
        w->alpha_at_min = at_min;
        if (!ok)
            w->delta = dmin;
        else if (B < 0)
            w->delta = dmin + at_min / (-2 * B);
        else if (B == 0)
            w->delta = dmin + 1;
        else
            w->delta = dmin + 1 + (at_min < 0 ? Scalar(-at_min / B) : Scalar(0));
        w->alpha_at_delta = A + B * w->delta;
    }
    return ok;
}

long effective_bound(const DegreePoly& alpha, long poles, int window)
{
    long run = 0;
    for (long d = 6; d < 100000; ++d) {
        if (bound_feasible(alpha, d, poles)) {
            if (++run == window + 1)
                return d - window;
        } else {
            run = 0;
        }
    }
    throw std::runtime_error("effective_bound: no feasible window below 100000");
}

bool degeneracy_inequality(long d, const Scalar& delta, long m, long poles)
{
    return Scalar(poles * m) - delta * m * (d - 5) < 0;
}

WeightTuple cor_weights()
{
    WeightTuple w;
    w.a = {5, 1};
    w.h_twist = 24;
    return w;
}

WeightTuple morse_g()
{
    WeightTuple w;
    w.h_twist = 24;
    return w;
}

WeightTuple alpha_g()
{
    WeightTuple w;
    w.h_twist = 24;
    w.delta_symbolic = true;
    return w;
}

}  // namespace jetcalc
