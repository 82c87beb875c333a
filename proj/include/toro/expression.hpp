#pragma once

#include <memory>
#include <optional>
#include <string>

#include "toro/jet.hpp"
#include "toro/plane_curve.hpp"

namespace toro {

/// One-variable arithmetic expression in t, evaluated through jets so
/// user-supplied curves get exact derivatives like the built-in ones.
///
/// Grammar (documented in docs/expressions.md):
///   expr    = term { ("+" | "-") term } ;
///   term    = unary { ("*" | "/") unary } ;
///   unary   = { "+" | "-" } power ;
///   power   = primary [ "^" unary ] ;          (exponent: constant)
///   primary = number | "t" | "pi" | name "(" expr ")" | "(" expr ")" ;
///   name    = "sin" | "cos" | "sqrt" ;
class Expression {
public:
    static Expression parse(const std::string& text);

    Jet eval(double t, int order) const;
    double operator()(double t) const { return eval(t, 0).value(); }

    const std::string& text() const noexcept { return text_; }

    struct Node;

private:
    Expression() = default;
    std::shared_ptr<const Node> root_;
    std::string text_;
};

/// Plane curve from a pair of coordinate expressions.  The period is
/// the caller's claim; closure is not verified here.
PlaneCurve expression_curve(const std::string& x_text, const std::string& y_text, double t_min,
                            double t_max, std::optional<double> period = std::nullopt);

} // namespace toro
