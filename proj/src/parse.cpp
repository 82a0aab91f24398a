#include "jetcalc/parse.hpp"

#include <cctype>

namespace jetcalc {

namespace {

class Parser {
public:
    Parser(const TablePtr& t, std::string_view s, const std::map<std::string, GradedClass>& env)
        : t_(t), s_(s), env_(env) {}

    GradedClass run()
    {
        GradedClass r = expr();
        skip();
        if (pos_ != s_.size())
            fail("trailing input");
        return r;
    }

private:
    const TablePtr& t_;
    std::string_view s_;
    const std::map<std::string, GradedClass>& env_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& why)
    {
        throw usage_error("parse error at " + std::to_string(pos_) + ": " + why + " in '" +
                          std::string(s_) + "'");
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    char peek()
    {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    GradedClass expr()
    {
        GradedClass r(t_);
        bool first = true;
        for (;;) {
            char c = peek();
            int sign = 1;
            if (c == '+' || c == '-') {
                sign = c == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                break;
            }
            GradedClass x = term();
            r = sign > 0 ? add(r, x) : sub(r, x);
            first = false;
        }
        return r;
    }

    GradedClass term()
    {
        GradedClass r = factor();
        while (peek() == '*') {
            ++pos_;
            r = mul(r, factor());
        }
        return r;
    }

    GradedClass factor()
    {
        GradedClass b = primary();
        if (peek() == '^') {
            ++pos_;
            skip();
            std::size_t st = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            if (st == pos_)
                fail("exponent expected");
            b = pow(b, std::stoi(std::string(s_.substr(st, pos_ - st))));
        }
        return b;
    }

    GradedClass primary()
    {
        char c = peek();
        if (c == '(') {
            ++pos_;
            GradedClass r = expr();
            if (peek() != ')')
                fail("')' expected");
            ++pos_;
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t st = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                    ++pos_;
            }
            return GradedClass::constant(t_, parse_scalar(s_.substr(st, pos_ - st)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t st = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string id(s_.substr(st, pos_ - st));
            if (auto it = env_.find(id); it != env_.end())
                return it->second;
            if (!t_->has(id))
                fail("unknown identifier " + id);
            return GradedClass::generator(t_, id);
        }
        fail("unexpected character");
    }
};

}  // namespace

GradedClass parse_class(const TablePtr& table, std::string_view text,
                        const std::map<std::string, GradedClass>& env)
{
    return Parser(table, text, env).run();
}

Scalar parse_scalar(std::string_view text)
{
    Scalar s;
    std::string str(text);
    if (s.set_str(str, 10) != 0)
        throw usage_error("bad rational: " + str);
    s.canonicalize();
    if (s.get_den() == 0)
        throw usage_error("zero denominator: " + str);
    return s;
}

}  // namespace jetcalc
