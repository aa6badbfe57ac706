#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "lcframed/jet.hpp"

// Closed-form scalar expressions in the variables u and v: parsing,
// printing, pointwise evaluation, and evaluation into jets.
//
// Grammar (whitespace-insensitive):
//   expr    := term  { ('+' | '-') term }
//   term    := factor { ('*' | '/') factor }
//   factor  := '-' factor | power
//   power   := atom [ '^' exponent ]          (right-associative)
//   exponent:= ['-'] integer [ '^' exponent ]
//   atom    := number | 'u' | 'v' | 'pi' | name '(' expr ')' | '(' expr ')'
//   name    := sin | cos | tan | exp | log | sqrt
// Unary minus binds tighter than '*', so "-u*v" is "(-u)*v"; '^' binds
// tighter still, so "-u^2" is "-(u^2)".  Exponents are integer literals.

namespace lcf {

enum class NodeKind { literal, var_u, var_v, const_pi, add, sub, mul, div, neg, pow, call };
enum class FuncKind { sin, cos, tan, exp, log, sqrt };

struct ExprNode {
    NodeKind kind{};
    double literal = 0.0;       // kind == literal
    long long exponent = 0;     // kind == pow
    FuncKind func{};            // kind == call
    std::size_t offset = 0;     // byte offset of this node in the source
    std::shared_ptr<const ExprNode> a; // operand / lhs
    std::shared_ptr<const ExprNode> b; // rhs of binary nodes
};

class ExprAst {
  public:
    ExprAst() = default;
    explicit ExprAst(std::shared_ptr<const ExprNode> root) : root_(std::move(root)) {}
    const ExprNode* root() const { return root_.get(); }
    bool empty() const { return root_ == nullptr; }

  private:
    std::shared_ptr<const ExprNode> root_;
};

// Throws ParseError / UnknownIdentifier.
ExprAst parse_expr(std::string_view src);

// Prints so that parse_expr(to_string(ast)) yields a structurally equal AST.
std::string to_string(const ExprAst& ast);

bool structurally_equal(const ExprAst& a, const ExprAst& b);

// Evaluation.  All three throw DomainError when a node's argument leaves
// its domain (log <= 0, sqrt <= 0, |divisor| < 1e-300).
double eval_value(const ExprAst& ast, double u, double v);
Jet2 eval_jet(const ExprAst& ast, double u, double v);
Jet<4> eval_jet4(const ExprAst& ast, double u, double v);

} // namespace lcf
