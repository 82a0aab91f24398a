#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace jetcalc {

using Scalar = mpq_class;

std::string to_string(const Scalar& s);
// canonical num/den
Scalar frac(long num, long den);

constexpr int kMaxGens = 12;
using Monomial = std::array<std::uint8_t, kMaxGens>;

class usage_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Generators carry a weighted degree and a level. A monomial vanishes when the
// weighted degree of its generators of level <= L exceeds caps[L]; caps.back()
// is the overall truncation.
struct GeneratorTable {
    std::vector<std::string> names;
    std::vector<int> degrees;
    std::vector<int> levels;
    std::vector<int> caps;

    static std::shared_ptr<const GeneratorTable> make(std::vector<std::string> names,
                                                      std::vector<int> degrees, int truncation);
    static std::shared_ptr<const GeneratorTable> make_levels(std::vector<std::string> names,
                                                             std::vector<int> degrees,
                                                             std::vector<int> levels,
                                                             std::vector<int> caps);

    int size() const { return static_cast<int>(names.size()); }
    int truncation() const { return caps.back(); }
    int top_level() const { return static_cast<int>(caps.size()) - 1; }
    int index(std::string_view name) const;
    bool has(std::string_view name) const;
    int weight(const Monomial& m) const;
    int level_weight(const Monomial& m, int level) const;
    bool vanishes(const Monomial& m) const;
    // block order: higher levels first, weighted degree, then later generators first
    int compare(const Monomial& a, const Monomial& b) const;
    std::string format(const Monomial& m) const;
};

using TablePtr = std::shared_ptr<const GeneratorTable>;

Monomial mono_mul(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b);
Monomial mono_div(const Monomial& a, const Monomial& b);
Monomial mono_lcm(const Monomial& a, const Monomial& b);

class GradedClass {
public:
    GradedClass() = default;
    explicit GradedClass(TablePtr t) : table_(std::move(t)) {}

    static GradedClass constant(TablePtr t, const Scalar& c);
    static GradedClass generator(TablePtr t, std::string_view name);
    static GradedClass monomial(TablePtr t, const Monomial& m, const Scalar& c = 1);

    const TablePtr& table() const { return table_; }
    const std::map<Monomial, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Scalar coeff(const Monomial& m) const;
    void add_term(const Monomial& m, const Scalar& c);
    bool is_homogeneous() const;
    int degree() const;  // -1 for zero; throws when inhomogeneous
    GradedClass component(int deg) const;
    // same generator names, reinterpreted in another table; monomials that vanish there are dropped
    GradedClass rebase(TablePtr t) const;

    std::string str() const;

    bool operator==(const GradedClass& o) const { return terms_ == o.terms_; }

private:
    TablePtr table_;
    std::map<Monomial, Scalar> terms_;
};

GradedClass add(const GradedClass& x, const GradedClass& y);
GradedClass sub(const GradedClass& x, const GradedClass& y);
GradedClass scale(const GradedClass& x, const Scalar& c);
GradedClass mul(const GradedClass& x, const GradedClass& y);
GradedClass pow(const GradedClass& x, int n);
GradedClass operator+(const GradedClass& x, const GradedClass& y);
GradedClass operator-(const GradedClass& x, const GradedClass& y);
GradedClass operator-(const GradedClass& x);
GradedClass operator*(const GradedClass& x, const GradedClass& y);
GradedClass operator*(const Scalar& c, const GradedClass& x);

struct RewriteRule {
    Monomial leading;
    GradedClass replacement;
};

// leading - replacement, the relation a rule encodes
GradedClass rule_relation(const RewriteRule& r);

class Ring {
public:
    Ring() = default;
    Ring(TablePtr t, std::vector<RewriteRule> rules);

    const TablePtr& table() const { return table_; }
    const std::vector<RewriteRule>& rules() const { return rules_; }
    Ring with_rules(const std::vector<RewriteRule>& more) const;

    GradedClass nf(const GradedClass& x) const;
    GradedClass mul(const GradedClass& x, const GradedClass& y) const;
    GradedClass pow(const GradedClass& x, int n) const;
    GradedClass gen(std::string_view name) const;
    GradedClass one() const;
    GradedClass constant(const Scalar& c) const;
    bool reducible(const Monomial& m) const;

private:
    TablePtr table_;
    std::vector<RewriteRule> rules_;
};

GradedClass normal_form(const GradedClass& x, const std::vector<RewriteRule>& rules);

}  // namespace jetcalc
