#pragma once

#include <memory>
#include <string>

namespace relaxwave::expr {

enum class NodeKind {
    number,
    var_x,
    const_pi,
    neg,
    add,
    sub,
    mul,
    div,
    pow,
    fn_sin,
    fn_cos,
    fn_exp,
    fn_sqrt,
    fn_abs,
};

struct Node {
    NodeKind kind;
    double value = 0.0;  // number only
    std::shared_ptr<const Node> a, b;
};

/// Immutable expression over x with constants and {sin, cos, exp, sqrt, abs}.
/// Evaluation is pure; copies share the AST.
class Expr {
public:
    Expr() = default;
    explicit Expr(std::shared_ptr<const Node> root) : root_(std::move(root)) {}

    bool valid() const { return root_ != nullptr; }
    const Node* root() const { return root_.get(); }

    /// Evaluate at x. Throws errc::domain_error on sqrt of a negative,
    /// division by zero, fractional powers of negative bases, or any
    /// non-finite intermediate.
    double operator()(double x) const;

    /// Canonical printing; parse(str(e)) is structurally equal to e.
    std::string str() const;

    /// Substitute x by (1 - x); used to mirror data between the two walls.
    Expr mirror_x() const;

    friend bool operator==(const Expr& lhs, const Expr& rhs);

private:
    std::shared_ptr<const Node> root_;
};

/// Parse an expression string. Grammar (loosest to tightest): + - | * / |
/// unary - | ^ (right-assoc) | atoms and function calls. Throws
/// errc::syntax_error with a byte offset, errc::unknown_identifier for
/// names outside {x, pi, sin, cos, exp, sqrt, abs}.
Expr parse(const std::string& source);

double eval(const Expr& e, double x);

}  // namespace relaxwave::expr
