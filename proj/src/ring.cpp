#include "jetcalc/ring.hpp"

#include <algorithm>
#include <sstream>

namespace jetcalc {

Scalar frac(long num, long den)
{
    if (den == 0)
        throw usage_error("frac: zero denominator");
    Scalar r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Scalar& s)
{
    return s.get_str();
}

std::shared_ptr<const GeneratorTable> GeneratorTable::make(std::vector<std::string> names,
                                                           std::vector<int> degrees, int truncation)
{
    std::vector<int> levels(names.size(), 0);
    return make_levels(std::move(names), std::move(degrees), std::move(levels), {truncation});
}

std::shared_ptr<const GeneratorTable> GeneratorTable::make_levels(std::vector<std::string> names,
                                                                  std::vector<int> degrees,
                                                                  std::vector<int> levels,
                                                                  std::vector<int> caps)
{
    if (names.size() != degrees.size() || names.size() != levels.size())
        throw usage_error("generator table: length mismatch");
    if (names.size() > static_cast<std::size_t>(kMaxGens))
        throw usage_error("generator table: too many generators");
    if (caps.empty())
        throw usage_error("generator table: no truncation");
    for (std::size_t i = 0; i < names.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j)
            if (names[i] == names[j])
                throw usage_error("generator table: duplicate name " + names[i]);
        if (degrees[i] <= 0 || degrees[i] > caps.back())
            throw usage_error("generator table: bad degree for " + names[i]);
        if (levels[i] < 0 || levels[i] >= static_cast<int>(caps.size()))
            throw usage_error("generator table: bad level for " + names[i]);
    }
    auto t = std::make_shared<GeneratorTable>();
    t->names = std::move(names);
    t->degrees = std::move(degrees);
    t->levels = std::move(levels);
    t->caps = std::move(caps);
    return t;
}

int GeneratorTable::index(std::string_view name) const
{
    for (int i = 0; i < size(); ++i)
        if (names[i] == name)
            return i;
    throw usage_error("unknown generator: " + std::string(name));
}

bool GeneratorTable::has(std::string_view name) const
{
    return std::find(names.begin(), names.end(), name) != names.end();
}

int GeneratorTable::weight(const Monomial& m) const
{
    int w = 0;
    for (int i = 0; i < size(); ++i)
        w += m[i] * degrees[i];
    return w;
}

int GeneratorTable::level_weight(const Monomial& m, int level) const
{
    int w = 0;
    for (int i = 0; i < size(); ++i)
        if (levels[i] == level)
            w += m[i] * degrees[i];
    return w;
}

bool GeneratorTable::vanishes(const Monomial& m) const
{
    int acc = 0;
    for (int L = 0; L < static_cast<int>(caps.size()); ++L) {
        acc += level_weight(m, L);
        if (acc > caps[L])
            return true;
    }
    return false;
}

int GeneratorTable::compare(const Monomial& a, const Monomial& b) const
{
    for (int L = top_level(); L >= 0; --L) {
        int wa = level_weight(a, L), wb = level_weight(b, L);
        if (wa != wb)
            return wa < wb ? -1 : 1;
        for (int i = size() - 1; i >= 0; --i) {
            if (levels[i] != L || a[i] == b[i])
                continue;
            return a[i] < b[i] ? -1 : 1;
        }
    }
    return 0;
}

std::string GeneratorTable::format(const Monomial& m) const
{
    std::string s;
    for (int i = 0; i < size(); ++i) {
        if (!m[i])
            continue;
        if (!s.empty())
            s += '*';
        s += names[i];
        if (m[i] > 1)
            s += '^' + std::to_string(m[i]);
    }
    return s;
}

Monomial mono_mul(const Monomial& a, const Monomial& b)
{
    Monomial r{};
    for (int i = 0; i < kMaxGens; ++i) {
        int e = a[i] + b[i];
        if (e > 255)
            throw std::overflow_error("monomial exponent overflow");
        r[i] = static_cast<std::uint8_t>(e);
    }
    return r;
}

bool mono_divides(const Monomial& a, const Monomial& b)
{
    for (int i = 0; i < kMaxGens; ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

Monomial mono_div(const Monomial& a, const Monomial& b)
{
    Monomial r{};
    for (int i = 0; i < kMaxGens; ++i)
        r[i] = static_cast<std::uint8_t>(a[i] - b[i]);
    return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b)
{
    Monomial r{};
    for (int i = 0; i < kMaxGens; ++i)
        r[i] = std::max(a[i], b[i]);
    return r;
}

GradedClass GradedClass::constant(TablePtr t, const Scalar& c)
{
    GradedClass x(std::move(t));
    x.add_term(Monomial{}, c);
    return x;
}

GradedClass GradedClass::generator(TablePtr t, std::string_view name)
{
    Monomial m{};
    m[t->index(name)] = 1;
    return monomial(std::move(t), m);
}

GradedClass GradedClass::monomial(TablePtr t, const Monomial& m, const Scalar& c)
{
    GradedClass x(std::move(t));
    x.add_term(m, c);
    return x;
}

Scalar GradedClass::coeff(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void GradedClass::add_term(const Monomial& m, const Scalar& c)
{
    if (c == 0 || table_->vanishes(m))
        return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

bool GradedClass::is_homogeneous() const
{
    int d = -1;
    for (auto& [m, c] : terms_) {
        int w = table_->weight(m);
        if (d >= 0 && w != d)
            return false;
        d = w;
    }
    return true;
}

int GradedClass::degree() const
{
    if (terms_.empty())
        return -1;
    if (!is_homogeneous())
        throw std::logic_error("degree of an inhomogeneous class");
    return table_->weight(terms_.begin()->first);
}

GradedClass GradedClass::component(int deg) const
{
    GradedClass r(table_);
    for (auto& [m, c] : terms_)
        if (table_->weight(m) == deg)
            r.terms_.emplace(m, c);
    return r;
}

GradedClass GradedClass::rebase(TablePtr t) const
{
    GradedClass r(t);
    for (auto& [m, c] : terms_) {
        Monomial mm{};
        for (int i = 0; i < table_->size(); ++i) {
            if (!m[i])
                continue;
            if (!t->has(table_->names[i]))
                throw usage_error("rebase: generator " + table_->names[i] + " missing");
            mm[t->index(table_->names[i])] = m[i];
        }
        r.add_term(mm, c);
    }
    return r;
}

std::string GradedClass::str() const
{
    if (terms_.empty())
        return "0";
    std::vector<std::pair<Monomial, Scalar>> v(terms_.begin(), terms_.end());
    std::stable_sort(v.begin(), v.end(), [&](auto& a, auto& b) {
        int wa = table_->weight(a.first), wb = table_->weight(b.first);
        if (wa != wb)
            return wa > wb;
        return table_->compare(a.first, b.first) > 0;
    });
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : v) {
        std::string ms = table_->format(m);
        Scalar a = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        if (ms.empty())
            os << a.get_str();
        else if (a == 1)
            os << ms;
        else
            os << a.get_str() << '*' << ms;
        first = false;
    }
    return os.str();
}

static void check_same(const GradedClass& x, const GradedClass& y)
{
    if (x.table() != y.table())
        throw usage_error("classes live in different generator tables");
}

GradedClass add(const GradedClass& x, const GradedClass& y)
{
    check_same(x, y);
    GradedClass r = x;
    for (auto& [m, c] : y.terms())
        r.add_term(m, c);
    return r;
}

GradedClass sub(const GradedClass& x, const GradedClass& y)
{
    check_same(x, y);
    GradedClass r = x;
    for (auto& [m, c] : y.terms())
        r.add_term(m, -c);
    return r;
}

GradedClass scale(const GradedClass& x, const Scalar& c)
{
    GradedClass r(x.table());
    if (c == 0)
        return r;
    for (auto& [m, a] : x.terms())
        r.add_term(m, a * c);
    return r;
}

GradedClass mul(const GradedClass& x, const GradedClass& y)
{
    check_same(x, y);
    GradedClass r(x.table());
    for (auto& [m1, c1] : x.terms())
        for (auto& [m2, c2] : y.terms())
            r.add_term(mono_mul(m1, m2), c1 * c2);
    return r;
}

GradedClass pow(const GradedClass& x, int n)
{
    GradedClass r = GradedClass::constant(x.table(), 1);
    for (int i = 0; i < n; ++i)
        r = mul(r, x);
    return r;
}

GradedClass operator+(const GradedClass& x, const GradedClass& y) { return add(x, y); }
GradedClass operator-(const GradedClass& x, const GradedClass& y) { return sub(x, y); }
GradedClass operator-(const GradedClass& x) { return scale(x, -1); }
GradedClass operator*(const GradedClass& x, const GradedClass& y) { return mul(x, y); }
GradedClass operator*(const Scalar& c, const GradedClass& x) { return scale(x, c); }

GradedClass rule_relation(const RewriteRule& r)
{
    GradedClass lead = GradedClass::monomial(r.replacement.table(), r.leading);
    return sub(lead, r.replacement);
}

Ring::Ring(TablePtr t, std::vector<RewriteRule> rules) : table_(std::move(t)), rules_(std::move(rules))
{
    for (auto& r : rules_) {
        if (r.replacement.table() != table_)
            throw usage_error("rewrite rule from another table");
        int w = table_->weight(r.leading);
        for (auto& [m, c] : r.replacement.terms()) {
            if (table_->weight(m) != w)
                throw usage_error("rewrite rule is not homogeneous: " + table_->format(r.leading));
            if (table_->compare(m, r.leading) >= 0)
                throw usage_error("non-terminating rewrite rule: " + table_->format(r.leading) +
                                  " -> " + r.replacement.str());
        }
    }
}

Ring Ring::with_rules(const std::vector<RewriteRule>& more) const
{
    std::vector<RewriteRule> all = rules_;
    all.insert(all.end(), more.begin(), more.end());
    return Ring(table_, std::move(all));
}

bool Ring::reducible(const Monomial& m) const
{
    for (auto& r : rules_)
        if (mono_divides(r.leading, m))
            return true;
    return false;
}

GradedClass Ring::nf(const GradedClass& x) const
{
    if (x.table() != table_)
        throw usage_error("normal form: class from another table");
    auto desc = [this](const Monomial& a, const Monomial& b) { return table_->compare(a, b) > 0; };
    std::map<Monomial, Scalar, decltype(desc)> work(desc);
    for (auto& [m, c] : x.terms())
        work.emplace(m, c);
    GradedClass out(table_);
    while (!work.empty()) {
        auto it = work.begin();
        Monomial m = it->first;
        Scalar c = it->second;
        work.erase(it);
        const RewriteRule* hit = nullptr;
        for (auto& r : rules_)
            if (mono_divides(r.leading, m)) {
                hit = &r;
                break;
            }
        if (!hit) {
            out.add_term(m, c);
            continue;
        }
        Monomial q = mono_div(m, hit->leading);
        for (auto& [rm, rc] : hit->replacement.terms()) {
            Monomial mm = mono_mul(rm, q);
            if (table_->vanishes(mm))
                continue;
            auto [jt, fresh] = work.try_emplace(mm, c * rc);
            if (!fresh) {
                jt->second += c * rc;
                if (jt->second == 0)
                    work.erase(jt);
            }
        }
    }
    return out;
}

GradedClass Ring::mul(const GradedClass& x, const GradedClass& y) const
{
    return nf(jetcalc::mul(x, y));
}

GradedClass Ring::pow(const GradedClass& x, int n) const
{
    GradedClass r = one();
    GradedClass b = nf(x);
    while (n > 0) {
        if (n & 1)
            r = mul(r, b);
        n >>= 1;
        if (n)
            b = mul(b, b);
    }
    return r;
}

GradedClass Ring::gen(std::string_view name) const
{
    return GradedClass::generator(table_, name);
}

GradedClass Ring::one() const
{
    return GradedClass::constant(table_, 1);
}

GradedClass Ring::constant(const Scalar& c) const
{
    return GradedClass::constant(table_, c);
}

GradedClass normal_form(const GradedClass& x, const std::vector<RewriteRule>& rules)
{
    return Ring(x.table(), rules).nf(x);
}

}  // namespace jetcalc
