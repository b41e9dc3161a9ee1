#pragma once

#include "magnetic/qseries.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace magnetic::app {

// Grammar:
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' ['-'] integer)?
//   primary := number | 'q' | name | 'f(' int ',' int ',' int ')'
//            | 'basis:k=' int ',m=' int
//            | ('delta' | 'antiderivative') '(' expr [',' int] ')'
//            | 'sub(' expr ',' int ')' | '(' expr ')'
// Names: E2 E4 E6 Delta j theta E24 F4a F4b F6 LS8 Triple8 HK_num1 HK_num2
//        g0 g1 g2 h0 f4a f4b f6half.
struct Expr {
    enum class Kind { Number, Q, Form, PlusForm, Basis, Monomial, Add, Sub, Mul, Div, Neg, Pow, Delta, Anti, Subst };
    Kind kind = Kind::Number;
    Rational value;
    std::string name;
    long i0 = 0, i1 = 0, i2 = 0;
    std::vector<std::shared_ptr<const Expr>> args;
};

using ExprPtr = std::shared_ptr<const Expr>;

// Throws UsageError with the byte position of the problem.
ExprPtr parse_expr(std::string_view text);
// Canonical, fully parenthesized text; equal for equivalent spellings.
std::string normalized(const Expr& e);
// Evaluates at working precision w; the result is whatever the operations can vouch for.
QSeries evaluate_at(const Expr& e, long w);
// Known through exactly prec, widening the working precision as needed.
QSeries evaluate(const Expr& e, long prec);

}  // namespace magnetic::app
