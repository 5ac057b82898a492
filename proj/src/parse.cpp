#include "surfstrat/parse.hpp"

#include <cctype>

namespace surfstrat {

namespace {

struct Parser {
    const std::string& s;
    size_t i = 0;
    const std::optional<std::set<std::string>>& allowed;

    Parser(const std::string& text, const std::optional<std::set<std::string>>& al)
        : s(text), allowed(al) {}

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) i++;
    }

    bool peek(char c) {
        skip_ws();
        return i < s.size() && s[i] == c;
    }

    bool eat(char c) {
        if (peek(c)) {
            i++;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, i); }

    PolyQ parse_expr() {
        skip_ws();
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        PolyQ r = parse_term();
        if (neg) r = -r;
        while (true) {
            skip_ws();
            if (eat('+')) r += parse_term();
            else if (eat('-')) r -= parse_term();
            else break;
        }
        return r;
    }

    PolyQ parse_term() {
        PolyQ r = parse_factor();
        while (true) {
            skip_ws();
            if (eat('*')) {
                r *= parse_factor();
            } else if (i < s.size() &&
                       (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '(')) {
                fail("implicit multiplication is not allowed; use '*'");
            } else {
                break;
            }
        }
        return r;
    }

    PolyQ parse_factor() {
        PolyQ base = parse_atom();
        skip_ws();
        if (eat('^')) {
            skip_ws();
            size_t start = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) i++;
            if (i == start) fail("expected a non-negative integer exponent");
            long e = std::stol(s.substr(start, i - start));
            base = base.pow(e);
        }
        return base;
    }

    PolyQ parse_atom() {
        skip_ws();
        if (i >= s.size()) fail("unexpected end of input");
        char c = s[i];
        if (c == '(') {
            i++;
            PolyQ r = parse_expr();
            skip_ws();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) i++;
            std::string num = s.substr(start, i - start);
            skip_ws();
            if (i < s.size() && s[i] == '/') {
                i++;
                skip_ws();
                size_t dstart = i;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) i++;
                if (i == dstart) fail("expected denominator digits");
                std::string den = s.substr(dstart, i - dstart);
                return PolyQ::constant(Rational(Int(num), Int(den)));
            }
            return PolyQ::constant(Rational(Int(num)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = i;
            while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
                i++;
            std::string name = s.substr(start, i - start);
            if (allowed && !allowed->count(name))
                throw ParseError("unknown variable '" + name + "'", start);
            return poly_var(name);
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

} // namespace

PolyQ parse_poly(const std::string& text, const std::optional<std::set<std::string>>& allowed) {
    Parser p(text, allowed);
    PolyQ r = p.parse_expr();
    p.skip_ws();
    if (p.i != text.size()) throw ParseError("trailing input", p.i);
    return r;
}

} // namespace surfstrat
