#include "germlab/parse.hpp"

#include <cctype>
#include <vector>

namespace germlab {

namespace {

class Parser {
public:
    Parser(const std::string& text, const VariableSet& vars) : s_(text), vars_(vars), p_(vars.size()) {}

    Poly run() {
        skip();
        if (at_end()) throw ParseError("empty expression", pos_);
        Poly r = expr();
        skip();
        if (!at_end()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
        return r;
    }

private:
    const std::string& s_;
    const VariableSet& vars_;
    int p_;
    std::size_t pos_ = 0;

    bool at_end() const { return pos_ >= s_.size(); }
    void skip() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (!at_end() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Poly expr() {
        skip();
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        Poly acc = term();
        if (neg) acc = -acc;
        for (;;) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                return acc;
        }
    }

    Poly term() {
        Poly acc = factor();
        while (eat('*')) acc = acc * factor();
        return acc;
    }

    Poly factor() {
        Poly b = base();
        if (eat('^')) {
            skip();
            std::size_t start = pos_;
            std::string digits = read_digits();
            if (digits.empty()) throw ParseError("expected exponent", start);
            if (digits.size() > 4) throw ParseError("exponent too large", start);
            b = b.pow(std::stoi(digits));
        }
        return b;
    }

    std::string read_digits() {
        std::string d;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) d += s_[pos_++];
        return d;
    }

    Poly base() {
        skip();
        if (at_end()) throw ParseError("unexpected end of expression", pos_);
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Poly e = expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = read_digits();
            std::size_t save = pos_;
            skip();
            if (!at_end() && s_[pos_] == '/') {
                ++pos_;
                skip();
                std::size_t dpos = pos_;
                std::string den = read_digits();
                if (den.empty()) throw ParseError("expected denominator", dpos);
                Rational q = Rational::parse(num + "/" + den);
                return Poly::constant(p_, q);
            }
            pos_ = save;
            return Poly::constant(p_, Rational::parse(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            std::string name;
            while (!at_end() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                name += s_[pos_++];
            int idx = vars_.index_of(name);
            if (idx < 0) throw ParseError("unknown variable '" + name + "'", start);
            return Poly::var(p_, idx);
        }
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }
};

}  // namespace

Poly parse_poly(const std::string& text, const VariableSet& vars) { return Parser(text, vars).run(); }

long long eval_int_expr(const std::string& text, const std::map<std::string, long long>& params) {
    std::vector<std::string> names;
    std::vector<Poly> values;
    for (const auto& [k, v] : params) names.push_back(k);
    if (names.empty()) names.push_back("_");
    VariableSet vs(names);
    Poly p = parse_poly(text, vs);
    for (const auto& n : names) values.push_back(Poly::constant(1, Rational(params.count(n) ? params.at(n) : 0)));
    Poly v = p.substitute(values);
    Rational c = v.constant_term();
    if (!c.is_integer() || !c.fits_int()) throw ParseError("expression is not an integer: " + text, 0);
    return c.to_int();
}

}  // namespace germlab
