#include "hypercox/expr.hpp"

#include "hypercox/errors.hpp"

#include <algorithm>
#include <cctype>

namespace hypercox {

struct ExprParser::Cursor {
    std::string_view s;
    std::size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool at_end() {
        skip();
        return pos >= s.size();
    }
    char peek() {
        skip();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool eat(char ch) {
        if (peek() == ch) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char ch) {
        if (!eat(ch)) throw SyntaxError(pos, std::string("expected '") + ch + "'");
    }
    bool eat_word(std::string_view w) {
        skip();
        if (s.substr(pos, w.size()) == w) {
            pos += w.size();
            return true;
        }
        return false;
    }
    mpz_class integer() {
        skip();
        const std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw SyntaxError(pos, "expected a number");
        return mpz_class(std::string(s.substr(start, pos - start)));
    }
};

ExprParser::ExprParser() : ctx_(Tower::rationals()) {}
ExprParser::ExprParser(TowerPtr context) : ctx_(std::move(context)) {}

AlgNum ExprParser::settle(const AlgNum& x) {
    AlgNum y = move_into(x, ctx_);
    ctx_ = y.tower();
    return y;
}

AlgNum ExprParser::parse(std::string_view text) {
    Cursor c{text};
    if (c.at_end()) throw SyntaxError(0, "empty expression");
    AlgNum v = expr(c);
    if (!c.at_end()) throw SyntaxError(c.pos, "unexpected trailing input");
    return settle(v);
}

AlgNum ExprParser::expr(Cursor& c) {
    AlgNum v = term(c);
    while (true) {
        if (c.eat('+')) {
            v = settle(v) + settle(term(c));
        } else if (c.eat('-')) {
            v = settle(v) - settle(term(c));
        } else {
            return v;
        }
    }
}

AlgNum ExprParser::term(Cursor& c) {
    AlgNum v = factor(c);
    while (true) {
        if (c.eat('*')) {
            v = settle(v) * settle(factor(c));
        } else if (c.peek() == '/') {
            const std::size_t at = c.pos;
            c.eat('/');
            AlgNum d = factor(c);
            if (d.is_zero()) throw SyntaxError(at, "division by zero");
            v = settle(v) / settle(d);
        } else {
            return v;
        }
    }
}

AlgNum ExprParser::factor(Cursor& c) {
    const char ch = c.peek();
    if (ch == '-') {
        c.eat('-');
        return -factor(c);
    }
    if (ch == '(') {
        c.eat('(');
        AlgNum v = expr(c);
        c.expect(')');
        return v;
    }
    if (ch == 's') {
        const std::size_t at = c.pos;
        if (!c.eat_word("sqrt")) throw SyntaxError(at, "unknown identifier");
        c.expect('(');
        AlgNum v = settle(expr(c));
        c.expect(')');
        if (v.sign() < 0) throw NegativeRadicand("square root of a negative number at position " + std::to_string(at));
        return settle(sqrt_extend(v));
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
        mpz_class n = c.integer();
        // INT '/' INT binds as one rational literal
        const std::size_t save = c.pos;
        if (c.eat('/')) {
            c.skip();
            if (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) {
                const std::size_t at = c.pos;
                mpz_class d = c.integer();
                if (d == 0) throw SyntaxError(at, "zero denominator");
                return AlgNum(mpq_class(n, d));
            }
            c.pos = save;
        }
        return AlgNum(mpq_class(n));
    }
    if (ch == '\0') throw SyntaxError(c.pos, "unexpected end of input");
    throw SyntaxError(c.pos, std::string("unexpected character '") + ch + "'");
}

AlgNum parse_algebraic(std::string_view text) {
    ExprParser p;
    return p.parse(text);
}

namespace {

/// Radical factors of a monomial, in radicand order.
std::vector<std::string> monomial_factors(const TowerPtr& t, std::size_t mask) {
    std::vector<std::string> f;
    for (int i = 0; i < t->level(); ++i) {
        if ((mask >> i) & 1U) f.push_back(to_expression(t->ancestor(i + 1)->radicand()));
    }
    std::sort(f.begin(), f.end(), radicand_less);
    return f;
}

}  // namespace

bool radicand_less(const std::string& a, const std::string& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
}

std::string to_expression(const AlgNum& x0) {
    const AlgNum x = x0.trimmed();
    const auto& c = x.coeffs();
    struct Term {
        std::vector<std::string> factors;
        mpq_class coeff;
    };
    std::vector<Term> terms;
    for (std::size_t m = 0; m < c.size(); ++m) {
        if (c[m] != 0) terms.push_back({monomial_factors(x.tower(), m), c[m]});
    }
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
        if (a.factors.size() != b.factors.size()) return a.factors.size() < b.factors.size();
        return std::lexicographical_compare(a.factors.begin(), a.factors.end(), b.factors.begin(), b.factors.end(),
                                            radicand_less);
    });

    std::string out;
    for (const auto& t : terms) {
        mpq_class a = t.coeff;
        const bool neg = a < 0;
        if (neg) a = -a;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (t.factors.empty()) {
            out += a.get_str();
            continue;
        }
        if (a != 1) out += a.get_str() + "*";
        for (std::size_t i = 0; i < t.factors.size(); ++i) out += (i ? "*sqrt(" : "sqrt(") + t.factors[i] + ")";
    }
    return out.empty() ? "0" : out;
}

std::string signed_sqrt_expression(int sign, const AlgNum& square) {
    if (sign == 0 || square.is_zero()) return "0";
    if (auto r = is_square(square)) return to_expression(sign > 0 ? *r : -*r);
    std::string s = "sqrt(" + to_expression(square) + ")";
    return sign > 0 ? s : "-" + s;
}

std::vector<std::string> tower_radicands(const TowerPtr& tower) {
    std::vector<std::string> out;
    for (int l = 1; l <= tower->level(); ++l) out.push_back(to_expression(tower->ancestor(l)->radicand()));
    return out;
}

TowerPtr tower_from_radicands(const std::vector<std::string>& radicands) {
    ExprParser p;
    for (const auto& r : radicands) p.parse("sqrt(" + r + ")");
    return p.context();
}

}  // namespace hypercox
