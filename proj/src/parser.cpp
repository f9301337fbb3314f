#include "buchiff/parser.hpp"

#include <cctype>
#include <optional>

#include "buchiff/errors.hpp"
#include "json.hpp"

namespace buchiff {

namespace {

class Parser {
public:
    explicit Parser(const std::string& src) : s_(src) {}

    ExprAst run() {
        ExprAst e = expr();
        skip_ws();
        if (pos_ < s_.size())
            throw SyntaxError("unexpected trailing input", col());
        return e;
    }

private:
    const std::string& s_;
    size_t pos_ = 0;

    long col() const { return static_cast<long>(pos_) + 1; }

    void skip_ws() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    char peek2() const {
        return pos_ + 1 < s_.size() ? s_[pos_ + 1] : '\0';
    }

    static ExprAst node(ExprAst::Kind k, long column) {
        ExprAst n;
        n.kind = k;
        n.column = column;
        return n;
    }

    ExprAst expr() {
        ExprAst left;
        if (peek() == '-') {
            long c = col();
            ++pos_;
            left = node(ExprAst::Kind::Neg, c);
            left.children.push_back(term());
        } else {
            left = term();
        }
        for (;;) {
            char ch = peek();
            if (ch != '+' && ch != '-') break;
            long c = col();
            ++pos_;
            ExprAst parent = node(ch == '+' ? ExprAst::Kind::Add : ExprAst::Kind::Sub, c);
            parent.children.push_back(std::move(left));
            parent.children.push_back(term());
            left = std::move(parent);
        }
        return left;
    }

    ExprAst term() {
        ExprAst left = factor();
        for (;;) {
            char ch = peek();
            bool implicit = std::isalnum(static_cast<unsigned char>(ch)) || ch == '(';
            if (ch != '*' && ch != '/' && !implicit) break;
            long c = col();
            ExprAst::Kind k = ExprAst::Kind::Mul;
            if (!implicit) {
                if (ch == '*' && peek2() == '*')
                    throw SyntaxError("'**' needs a base to its left", c);
                k = ch == '*' ? ExprAst::Kind::Mul : ExprAst::Kind::Div;
                ++pos_;
            }
            ExprAst parent = node(k, c);
            parent.children.push_back(std::move(left));
            parent.children.push_back(factor());
            left = std::move(parent);
        }
        return left;
    }

    ExprAst factor() {
        if (peek() == '-') {
            long c = col();
            ++pos_;
            ExprAst n = node(ExprAst::Kind::Neg, c);
            n.children.push_back(factor());
            return n;
        }
        ExprAst base = atom();
        char ch = peek();
        bool is_pow = ch == '^' || (ch == '*' && peek2() == '*');
        if (!is_pow) return base;
        long c = col();
        pos_ += ch == '^' ? 1 : 2;
        if (peek() == '-')
            throw NegativeExponent("exponents must be non-negative", col());
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw SyntaxError("expected an integer exponent", col());
        long e = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            e = e * 10 + (s_[pos_] - '0');
            if (e > 1000000) throw SyntaxError("exponent too large", col());
            ++pos_;
        }
        ExprAst n = node(ExprAst::Kind::Pow, c);
        n.exponent = e;
        n.children.push_back(std::move(base));
        return n;
    }

    ExprAst atom() {
        char ch = peek();
        long c = col();
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::string digits;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                digits.push_back(s_[pos_]);
                ++pos_;
            }
            ExprAst n = node(ExprAst::Kind::Int, c);
            n.int_value = Int(digits);
            return n;
        }
        if (std::isalpha(static_cast<unsigned char>(ch))) {
            ++pos_;
            ExprAst n = node(ExprAst::Kind::Var, c);
            n.var = ch;
            return n;
        }
        if (ch == '(') {
            ++pos_;
            ExprAst inner = expr();
            if (peek() != ')') throw SyntaxError("expected ')'", col());
            ++pos_;
            return inner;
        }
        if (ch == '\0') throw SyntaxError("unexpected end of input", c);
        throw SyntaxError(std::string("unexpected character '") + ch + "'", c);
    }
};

// constant folding; nullopt where a variable blocks it
std::optional<Rational> fold_rational(const ExprAst& a) {
    using K = ExprAst::Kind;
    switch (a.kind) {
        case K::Int: return Rational(a.int_value);
        case K::Rat: return a.rat_value;
        case K::Var: return std::nullopt;
        case K::Neg: {
            auto v = fold_rational(a.children[0]);
            return v ? std::optional<Rational>(-*v) : std::nullopt;
        }
        case K::Pow: {
            auto v = fold_rational(a.children[0]);
            if (!v) return std::nullopt;
            Rational r(1);
            for (long i = 0; i < a.exponent; ++i) r = r * *v;
            return r;
        }
        default: {
            auto l = fold_rational(a.children[0]);
            auto r = fold_rational(a.children[1]);
            if (!l || !r) return std::nullopt;
            switch (a.kind) {
                case K::Add: return *l + *r;
                case K::Sub: return *l - *r;
                case K::Mul: return *l * *r;
                case K::Div:
                    if (r->sign() == 0) throw DivisionByZero("division by zero");
                    return *l / *r;
                default: throw Error("internal: unhandled fold node");
            }
        }
    }
}

QPoly fold_poly(const ExprAst& a, char var) {
    using K = ExprAst::Kind;
    switch (a.kind) {
        case K::Int: return QPoly::constant(Rational(a.int_value));
        case K::Rat: return QPoly::constant(a.rat_value);
        case K::Var:
            if (a.var != var)
                throw WrongVariable(std::string("expected variable '") + var +
                                        "', found '" + a.var + "'",
                                    a.column);
            return QPoly::variable();
        case K::Neg: return -fold_poly(a.children[0], var);
        case K::Add: return fold_poly(a.children[0], var) + fold_poly(a.children[1], var);
        case K::Sub: return fold_poly(a.children[0], var) - fold_poly(a.children[1], var);
        case K::Mul: return fold_poly(a.children[0], var) * fold_poly(a.children[1], var);
        case K::Pow: return fold_poly(a.children[0], var).pow(a.exponent);
        case K::Div: {
            auto l = fold_rational(a.children[0]);
            auto r = fold_rational(a.children[1]);
            if (!l || !r)
                throw DivisionInPolyContext(
                    "division is only allowed between constants here", a.column);
            if (r->sign() == 0) throw DivisionByZero("division by zero");
            return QPoly::constant(*l / *r);
        }
    }
    throw Error("internal: unhandled poly fold node");
}

QX fold_ratfunc(const ExprAst& a) {
    using K = ExprAst::Kind;
    switch (a.kind) {
        case K::Int: return QX(QPoly::constant(Rational(a.int_value)));
        case K::Rat: return QX(QPoly::constant(a.rat_value));
        case K::Var:
            if (a.var != 'x')
                throw WrongVariable(std::string("expected variable 'x', found '") +
                                        a.var + "'",
                                    a.column);
            return QX(QPoly::variable());
        case K::Neg: return -fold_ratfunc(a.children[0]);
        case K::Add: return fold_ratfunc(a.children[0]) + fold_ratfunc(a.children[1]);
        case K::Sub: return fold_ratfunc(a.children[0]) - fold_ratfunc(a.children[1]);
        case K::Mul: return fold_ratfunc(a.children[0]) * fold_ratfunc(a.children[1]);
        case K::Div: {
            QX den = fold_ratfunc(a.children[1]);
            if (den.is_zero()) throw DivisionByZero("division by the zero function");
            return fold_ratfunc(a.children[0]) / den;
        }
        case K::Pow: {
            QX base = fold_ratfunc(a.children[0]);
            QX r(1);
            for (long i = 0; i < a.exponent; ++i) r = r * base;
            return r;
        }
    }
    throw Error("internal: unhandled ratfunc fold node");
}

} // namespace

ExprAst parse_expr(const std::string& src) { return Parser(src).run(); }

QPoly parse_poly_q(const std::string& src, char var) {
    return fold_poly(parse_expr(src), var);
}

QX parse_ratfunc_q(const std::string& src) { return fold_ratfunc(parse_expr(src)); }

QForm parse_form(const std::string& json_src) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_src);
    } catch (const nlohmann::json::parse_error& e) {
        throw SyntaxError(std::string("invalid JSON: ") + e.what(),
                          static_cast<long>(e.byte));
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("coeffs"))
        throw SyntaxError("form JSON needs fields \"n\" and \"coeffs\"", 1);
    if (!j["n"].is_number_integer())
        throw SyntaxError("\"n\" must be an integer", 1);
    long n = j["n"].get<long>();
    if (!j["coeffs"].is_array() ||
        static_cast<long>(j["coeffs"].size()) != n)
        throw SyntaxError("\"coeffs\" must list a_0..a_{n-1}", 1);
    std::vector<QX> coeffs;
    coeffs.reserve(j["coeffs"].size());
    for (const auto& c : j["coeffs"]) {
        if (!c.is_string())
            throw SyntaxError("coefficients must be expression strings", 1);
        coeffs.push_back(parse_ratfunc_q(c.get<std::string>()));
    }
    return QForm::from_coeffs(std::move(coeffs));
}

FqElement parse_fq_element(const std::string& src, const FqCtx& ctx) {
    QPoly p = fold_poly(parse_expr(src), 'y');
    long pr = ctx->p();
    if (p.deg_i() >= 1 && ctx->e() < 2)
        throw DomainError("generator y needs an extension field");
    FqElement out(ctx, 0LL);
    // the generator only exists in a proper extension; prime-field inputs
    // are constants and never touch it
    FqElement y = ctx->e() >= 2 ? FqElement(ctx, std::vector<long>{0, 1})
                                : FqElement(ctx, 0LL);
    for (long i = p.deg_i(); i >= 0; --i) {
        Rational c = p.coeff(i);
        Int nr = c.num() % pr;
        if (nr < 0) nr += pr;
        Int dr = c.den() % pr;
        if (dr == 0)
            throw DomainError("coefficient denominator divisible by the characteristic");
        FqElement cv = FqElement(ctx, nr.convert_to<long long>()) /
                       FqElement(ctx, dr.convert_to<long long>());
        out = out * y + cv;
    }
    return out;
}

} // namespace buchiff
