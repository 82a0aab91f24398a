#include <doctest.h>

#include "jetcalc/parse.hpp"
#include "jetcalc/positivity.hpp"
#include "jetcalc/reference.hpp"

using namespace jetcalc;

namespace {

const Tower& symbolic()
{
    static const Tower t = build_tower_symbolic();
    return t;
}

DegreePoly quartic(std::initializer_list<long> c)
{
    DegreePoly p;
    int k = static_cast<int>(c.size()) - 1;
    for (long x : c)
        p.add_term(k--, 0, x);
    return p;
}

DegreePoly printed_alpha()
{
    DegreePoly a;
    for (auto& t : reference::kAlpha)
        a.add_term(t.dpow, t.deltapow, t.coeff);
    return a;
}

// frozen from an independent dictionary-based rational prototype
constexpr const char* kPerLevelForm =
    "122176*c3 + 594768*c1*c2 - 1118128*c1^3 + 115282944*h^2*c1 - 498548736*h^3";
constexpr const char* kReversedForm =
    "-61736000*c3 + 161442000*c1*c2 - 53806000*c1^3 + 7217280000*h^2*c1 - 71608320000*h^3";
constexpr const char* kPerLevelFullForm =
    "122688*c3 + 593936*c1*c2 - 1117872*c1^3 + 115282944*h^2*c1 - 498548736*h^3";
constexpr const char* kReversedFullForm =
    "-101736000*c3 + 196442000*c1*c2 - 73806000*c1^3 + 7217280000*h^2*c1 - 71608320000*h^3";

}  // namespace

TEST_CASE("weight tuples")
{
    WeightTuple w{{5, -1, 2}, 3};
    CHECK(weight_to_b(w) == std::vector<long>{5, 4, 6});
    CHECK(is_effective_weight(w));
    CHECK_FALSE(is_effective_weight(WeightTuple{{1, -2}}));
    WeightTuple s = w + WeightTuple{{1}, 1, 2};
    CHECK(s.a == std::vector<long>{6, -1, 2});
    CHECK(s.h_twist == 4);
    CHECK(s.delta_twist == 2);
    WeightTuple x{{2, 3}}, y{{-1, 4}};
    auto bx = weight_to_b(x), by = weight_to_b(y), bs = weight_to_b(x + y);
    for (std::size_t i = 0; i < bs.size(); ++i)
        CHECK(bs[i] == bx[i] + by[i]);
    CHECK(weight_form(cor_weights(), UOrdering::PerLevel) == "5*u1 + 1*u2 + 24*h");
    CHECK(weight_form(cor_weights(), UOrdering::Reversed) == "5*u2 + 1*u1 + 24*h");
}

TEST_CASE("nef recursion")
{
    NefResult r = nef_recursion(2, 2, NefVariant::B);
    CHECK(r.weights.a == std::vector<long>{5, 1});
    CHECK(r.ell == 24);
    CHECK(nef_recursion(2, 2, NefVariant::A).weights.h_twist == 24);
    NefResult one = nef_recursion(2, 1, NefVariant::A);
    CHECK(one.weights.a == std::vector<long>{1});
    CHECK(one.weights.h_twist == 4);
    CHECK(nef_recursion(1, 2, NefVariant::B).weights.a == std::vector<long>{2, 1});
    for (int p = 1; p <= 3; ++p)
        for (int k = 1; k <= 4; ++k) {
            long m = p * p + 2, ell = 2 * p;
            for (int j = 1; j < k; ++j)
                ell *= m;
            NefResult x = nef_recursion(p, k, NefVariant::B);
            CHECK(x.ell == ell);
            CHECK(x.weights.a.back() == 1);
            CHECK(is_effective_weight(x.weights));
            long step = m - 1;
            for (int j = k - 2; j >= 0; --j, step *= m)
                CHECK(x.weights.a[j] == step);
        }
    CHECK_THROWS_AS(nef_recursion(0, 1, NefVariant::A), usage_error);
}

TEST_CASE("threshold search")
{
    // (d - 7)(d + 2)(d^2 + 1)
    DegreePoly p = quartic({1, -5, -13, -5, -14});
    CHECK(threshold_search(p) == 8);
    CHECK(threshold_search(quartic({1, 0})) == 1);
    // positive, dips below zero between 40 and 41, then positive for good
    DegreePoly q = quartic({1, -81, 1640});  // (d-40)(d-41)
    CHECK(q.eval(40) == 0);
    CHECK(threshold_search(q) == 42);
    CHECK_THROWS(threshold_search(quartic({-1, 3})));
    CHECK(threshold_search(quartic({840000, -13300000, -43246000, -2473520, 0})) == 19);
}

TEST_CASE("printed quartic changes sign between 18 and 19")
{
    DegreePoly p = quartic({840000, -13300000, -43246000, -2473520, 0});
    CHECK(p.eval(18) == Scalar(-3441987360L));
    CHECK(p.eval(19) == Scalar(2586137120L));
}

TEST_CASE("effective bound logic on the printed alpha")
{
    DegreePoly a = printed_alpha();
    CHECK(effective_bound(a) == reference::kEffectiveBound);
    CHECK(a.eval(93, frac(84, 88)) > 0);
    CHECK(a.eval(92, frac(84, 87)) < 0);
    BoundWitness w;
    CHECK(bound_feasible(a, 93, 84, &w));
    CHECK(w.delta > w.delta_min);
    CHECK(w.alpha_at_delta > 0);
    CHECK(degeneracy_inequality(93, w.delta));
    CHECK_FALSE(bound_feasible(a, 92));
    CHECK_FALSE(bound_feasible(a, 5));
    CHECK_FALSE(degeneracy_inequality(93, frac(84, 88)));
}

TEST_CASE("Morse forms for both orderings")
{
    const Tower& t = symbolic();
    MorseReport per = morse_quantity(t, cor_weights(), morse_g(), UOrdering::PerLevel);
    MorseReport rev = morse_quantity(t, cor_weights(), morse_g(), UOrdering::Reversed);
    CHECK(per.chern_form == parse_class(t.table, kPerLevelForm));
    CHECK(rev.chern_form == parse_class(t.table, kReversedForm));
    CHECK(per.chern_form_delta.is_zero());
    CHECK(per.degree_poly == substitute_degree(per.chern_form));
    CHECK(per.degree_poly == quartic({401184, -10213360, -53461984, -30939856, 0}));
    REQUIRE(per.threshold.has_value());
    CHECK(*per.threshold == 30);
    CHECK_FALSE(rev.threshold.has_value());
    CHECK(rev.degree_poly.coeff(4) == -45900000);

    Tower full = build_tower_symbolic(V1Convention::Full);
    CHECK(morse_quantity(full, cor_weights(), morse_g(), UOrdering::PerLevel).chern_form ==
          parse_class(full.table, kPerLevelFullForm));
    CHECK(morse_quantity(full, cor_weights(), morse_g(), UOrdering::Reversed).chern_form ==
          parse_class(full.table, kReversedFullForm));
}

TEST_CASE("Morse value is linear in G")
{
    const Tower& t = symbolic();
    WeightTuple K;
    K.delta_twist = 1;
    MorseReport none = morse_quantity(t, cor_weights(), WeightTuple{}, UOrdering::PerLevel);
    MorseReport withK = morse_quantity(t, cor_weights(), K, UOrdering::PerLevel);
    MorseReport sym = morse_quantity(t, cor_weights(), alpha_g(), UOrdering::PerLevel);
    MorseReport fixed = morse_quantity(t, cor_weights(), morse_g(), UOrdering::PerLevel);
    CHECK(sym.chern_form == fixed.chern_form);
    CHECK(sym.chern_form_delta == withK.chern_form - none.chern_form);
    CHECK(sym.degree_poly.delta_part(0) == fixed.degree_poly);
    CHECK(sym.degree_poly.linear_in_delta());
    // report(F, G1 + G2) = report(F, G1) + report(F, G2) - report(F, 0)
    MorseReport both = morse_quantity(t, cor_weights(), morse_g() + K, UOrdering::PerLevel);
    CHECK(both.degree_poly == fixed.degree_poly + withK.degree_poly - none.degree_poly);
}

TEST_CASE("alpha and the effective bound from the engine")
{
    const Tower& t = symbolic();
    DegreePoly a = morse_quantity(t, cor_weights(), alpha_g(), UOrdering::PerLevel).degree_poly;
    DegreePoly want;
    for (auto [dp, ep, c] : std::initializer_list<std::tuple<int, int, long>>{
             {4, 1, -627456}, {4, 0, 401184}, {3, 1, 656848}, {3, 0, -10213360},
             {2, 1, 11035264}, {2, 0, -53461984}, {1, 1, 6834480}, {1, 0, -30939856}})
        want.add_term(dp, ep, c);
    CHECK(a == want);
    CHECK(effective_bound(a) == 161);
    CHECK(bound_feasible(a, 161));
    CHECK_FALSE(bound_feasible(a, 160));
}

TEST_CASE("numeric towers agree with the symbolic degree polynomial")
{
    const Tower& t = symbolic();
    for (UOrdering o : {UOrdering::PerLevel, UOrdering::Reversed}) {
        DegreePoly a = morse_quantity(t, cor_weights(), alpha_g(), o).degree_poly;
        for (long d : {6L, 7L, 12L, 19L, 41L, 93L}) {
            auto [v0, v1] = morse_value(build_tower(d), cor_weights(), alpha_g(), o);
            CHECK(v0 == a.delta_part(0).eval(d));
            CHECK(v1 == a.delta_part(1).eval(d));
        }
    }
}

TEST_CASE("interpolation route")
{
    const Tower& t = symbolic();
    std::vector<long> samples;
    for (long d = 20; d <= 30; ++d)
        samples.push_back(d);
    DegreePoly sym = morse_quantity(t, cor_weights(), morse_g(), UOrdering::PerLevel).degree_poly;
    CHECK(morse_interpolated(cor_weights(), morse_g(), UOrdering::PerLevel, V1Convention::Printed, samples, 10) ==
          sym);
    std::vector<long> few{20, 21, 22, 23, 24, 25};
    CHECK(morse_interpolated(cor_weights(), morse_g(), UOrdering::PerLevel, V1Convention::Printed, few, 4,
                             false) == sym);
}
