#include "magnetic/app/expr.hpp"

#include "magnetic/forms.hpp"
#include "magnetic/halfint.hpp"
#include "magnetic/precision.hpp"

#include <cctype>

namespace magnetic::app {

namespace {

ExprPtr make(Expr::Kind kind, std::vector<ExprPtr> args = {}) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->args = std::move(args);
    return e;
}

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    ExprPtr parse() {
        ExprPtr e = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw UsageError("parse error at position " + std::to_string(pos_) + ": " + msg);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    void expect_word(std::string_view w) {
        skip();
        if (s_.substr(pos_, w.size()) != w) fail("expected '" + std::string(w) + "'");
        pos_ += w.size();
    }

    long integer() {
        skip();
        std::size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        std::size_t digits = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == digits) {
            pos_ = start;
            fail("expected an integer");
        }
        try {
            return std::stol(std::string(s_.substr(start, pos_ - start)));
        } catch (const std::out_of_range&) {
            pos_ = start;
            fail("integer out of range");
        }
    }

    ExprPtr expr() {
        ExprPtr lhs = term();
        while (true) {
            if (accept('+')) lhs = make(Expr::Kind::Add, {lhs, term()});
            else if (accept('-')) lhs = make(Expr::Kind::Sub, {lhs, term()});
            else return lhs;
        }
    }

    ExprPtr term() {
        ExprPtr lhs = unary();
        while (true) {
            if (accept('*')) lhs = make(Expr::Kind::Mul, {lhs, unary()});
            else if (accept('/')) lhs = make(Expr::Kind::Div, {lhs, unary()});
            else return lhs;
        }
    }

    ExprPtr unary() {
        if (accept('-')) return make(Expr::Kind::Neg, {unary()});
        return power();
    }

    ExprPtr power() {
        ExprPtr base = primary();
        if (accept('^')) {
            auto e = make(Expr::Kind::Pow, {base});
            bool paren = accept('(');
            std::const_pointer_cast<Expr>(e)->i0 = integer();
            if (paren) expect(')');
            return e;
        }
        return base;
    }

    ExprPtr primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            ExprPtr e = expr();
            expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (std::isalpha(static_cast<unsigned char>(c))) return named();
        fail("unexpected '" + std::string(1, c) + "'");
    }

    ExprPtr number() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        auto e = make(Expr::Kind::Number);
        std::const_pointer_cast<Expr>(e)->value = parse_rational(s_.substr(start, pos_ - start));
        return e;
    }

    ExprPtr named() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        std::string id(s_.substr(start, pos_ - start));
        if (id == "q") return make(Expr::Kind::Q);
        if (id == "f" && accept('(')) {
            auto e = make(Expr::Kind::Monomial);
            auto* m = const_cast<Expr*>(e.get());
            m->i0 = integer();
            expect(',');
            m->i1 = integer();
            expect(',');
            m->i2 = integer();
            expect(')');
            if (m->i0 < 0) fail("E2 exponent must be non-negative");
            return e;
        }
        if (id == "basis") {
            expect(':');
            expect_word("k");
            expect('=');
            auto e = make(Expr::Kind::Basis);
            auto* m = const_cast<Expr*>(e.get());
            m->i0 = integer();
            expect(',');
            expect_word("m");
            expect('=');
            m->i1 = integer();
            return e;
        }
        if (id == "delta" || id == "antiderivative") {
            expect('(');
            ExprPtr inner = expr();
            long order = 1;
            if (accept(',')) order = integer();
            expect(')');
            if (order < 0) fail("order must be non-negative");
            auto e = make(id == "delta" ? Expr::Kind::Delta : Expr::Kind::Anti, {inner});
            const_cast<Expr*>(e.get())->i0 = order;
            return e;
        }
        if (id == "sub") {
            expect('(');
            ExprPtr inner = expr();
            expect(',');
            long m = integer();
            expect(')');
            if (m < 1) fail("sub needs a positive power");
            auto e = make(Expr::Kind::Subst, {inner});
            const_cast<Expr*>(e.get())->i0 = m;
            return e;
        }
        if (auto f = forms::parse_form_name(id)) {
            auto e = make(Expr::Kind::Form);
            const_cast<Expr*>(e.get())->name = std::string(forms::symbol(*f));
            return e;
        }
        if (halfint::is_plus_form_name(id)) {
            auto e = make(Expr::Kind::PlusForm);
            const_cast<Expr*>(e.get())->name = id;
            return e;
        }
        pos_ = start;
        fail("unknown name '" + id + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

bool is_number(const Expr& e) { return e.kind == Expr::Kind::Number; }

}  // namespace

ExprPtr parse_expr(std::string_view text) { return Parser(text).parse(); }

std::string normalized(const Expr& e) {
    using K = Expr::Kind;
    auto arg = [&](std::size_t i) { return normalized(*e.args[i]); };
    switch (e.kind) {
        case K::Number: return to_string(e.value);
        case K::Q: return "q";
        case K::Form:
        case K::PlusForm: return e.name;
        case K::Basis: return "basis:k=" + std::to_string(e.i0) + ",m=" + std::to_string(e.i1);
        case K::Monomial:
            return "f(" + std::to_string(e.i0) + "," + std::to_string(e.i1) + "," + std::to_string(e.i2) + ")";
        case K::Add: return "(" + arg(0) + "+" + arg(1) + ")";
        case K::Sub: return "(" + arg(0) + "-" + arg(1) + ")";
        case K::Mul: return "(" + arg(0) + "*" + arg(1) + ")";
        case K::Div: return "(" + arg(0) + "/" + arg(1) + ")";
        case K::Neg: return "(-" + arg(0) + ")";
        case K::Pow: return "(" + arg(0) + "^" + std::to_string(e.i0) + ")";
        case K::Delta: return "delta(" + arg(0) + "," + std::to_string(e.i0) + ")";
        case K::Anti: return "antiderivative(" + arg(0) + "," + std::to_string(e.i0) + ")";
        case K::Subst: return "sub(" + arg(0) + "," + std::to_string(e.i0) + ")";
    }
    return "";
}

QSeries evaluate_at(const Expr& e, long w) {
    using K = Expr::Kind;
    if (w < 0) w = 0;
    auto arg = [&](std::size_t i) { return evaluate_at(*e.args[i], w); };
    switch (e.kind) {
        case K::Number: return QSeries::constant(e.value, w);
        case K::Q: return w >= 1 ? QSeries::monomial(1, 1, w) : QSeries::zero(0, w);
        case K::Form: return forms::named_form(*forms::parse_form_name(e.name), w);
        case K::PlusForm: return halfint::named_plus_form(e.name, w).series();
        case K::Basis: return halfint::basis_element(e.i0, e.i1, w).series();
        case K::Monomial: return forms::quasi_monomial(e.i0, e.i1, e.i2, w);
        case K::Add: return arg(0) + arg(1);
        case K::Sub: return arg(0) - arg(1);
        case K::Mul:
            if (is_number(*e.args[0])) return e.args[0]->value * arg(1);
            if (is_number(*e.args[1])) return arg(0) * e.args[1]->value;
            return mul(arg(0), arg(1));
        case K::Div:
            if (is_number(*e.args[1])) {
                if (sgn(e.args[1]->value) == 0) throw DomainError("division by zero");
                return arg(0) * Rational(1 / e.args[1]->value);
            }
            return divide(arg(0), arg(1));
        case K::Neg: return -arg(0);
        case K::Pow: {
            QSeries base = arg(0);
            if (e.i0 >= 0) return pow_int(base, e.i0);
            return inv(pow_int(base, -e.i0));
        }
        case K::Delta: return delta_pow(arg(0), static_cast<unsigned>(e.i0));
        case K::Anti: return e.i0 == 0 ? arg(0) : antiderivative(arg(0), static_cast<unsigned>(e.i0));
        case K::Subst: return substitute_power(evaluate_at(*e.args[0], w / e.i0 + 1), e.i0);
    }
    throw UsageError("unsupported expression");
}

QSeries evaluate(const Expr& e, long prec) {
    if (prec < 0) throw UsageError("prec must be >= 0");
    return with_precision(prec, 0, [&](long w) { return evaluate_at(e, w); }, "expression");
}

}  // namespace magnetic::app
