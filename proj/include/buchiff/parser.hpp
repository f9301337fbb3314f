/*
 * parser.hpp
 * ----------
 * Recursive-descent front end for the expression grammar shared by every
 * CLI flag and JSON field:
 *
 *   expr   := '-'? term (('+'|'-') term)*
 *   term   := factor (('*'|'/') factor)*     (implicit mult: "3x", "2(x+1)")
 *   factor := '-' factor | atom (('^'|'**') uint)?
 *   atom   := integer | variable | '(' expr ')'
 *
 * Variables are single characters fixed per call site (x for the function
 * field, t for forms, y for finite-field moduli). Error columns are
 * 1-based.
 */
#pragma once

#include <string>
#include <vector>

#include "buchiff/finite_field.hpp"
#include "buchiff/funcfield.hpp"

namespace buchiff {

struct ExprAst {
    enum class Kind { Int, Rat, Var, Neg, Add, Sub, Mul, Div, Pow } kind;
    Int int_value{};          // Kind::Int
    Rational rat_value{};     // Kind::Rat
    char var = 0;             // Kind::Var
    long exponent = 0;        // Kind::Pow
    std::vector<ExprAst> children;
    long column = 0;          // 1-based position of the node's head token
};

// parse only; accepts any variable in {x, t, y}
ExprAst parse_expr(const std::string& src);

// folds into Q[var]; '/' is allowed only between subexpressions that fold
// to constants (so "1/2*x" is fine), otherwise DivisionInPolyContext
QPoly parse_poly_q(const std::string& src, char var = 'x');

// folds into Q(x); unrestricted '/'
QX parse_ratfunc_q(const std::string& src);

// JSON object {"n": N, "coeffs": [a_0, ..., a_{n-1}]} with each a_i a
// rational-function expression in x; returns the monic form
QForm parse_form(const std::string& json_src);

// expression in y with integer coefficients, reduced into the field
FqElement parse_fq_element(const std::string& src, const FqCtx& ctx);

} // namespace buchiff
