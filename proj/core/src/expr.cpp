#include "lcframed/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <vector>

namespace lcf {

namespace {

using NodePtr = std::shared_ptr<const ExprNode>;

NodePtr make(NodeKind k, std::size_t off, NodePtr a = nullptr, NodePtr b = nullptr) {
    auto n = std::make_shared<ExprNode>();
    n->kind = k;
    n->offset = off;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}

struct Parser {
    std::string_view src;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < src.size() && src[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }

    [[noreturn]] void fail(std::vector<std::string> expected, const std::string& detail) {
        skip_ws();
        throw ParseError(pos, std::move(expected), detail);
    }

    NodePtr parse_expr() {
        NodePtr lhs = parse_term();
        for (;;) {
            skip_ws();
            std::size_t off = pos;
            if (eat('+'))
                lhs = make(NodeKind::add, off, lhs, parse_term());
            else if (eat('-'))
                lhs = make(NodeKind::sub, off, lhs, parse_term());
            else
                return lhs;
        }
    }

    NodePtr parse_term() {
        NodePtr lhs = parse_factor();
        for (;;) {
            skip_ws();
            std::size_t off = pos;
            if (eat('*'))
                lhs = make(NodeKind::mul, off, lhs, parse_factor());
            else if (eat('/'))
                lhs = make(NodeKind::div, off, lhs, parse_factor());
            else
                return lhs;
        }
    }

    NodePtr parse_factor() {
        skip_ws();
        std::size_t off = pos;
        if (eat('-')) {
            NodePtr inner = parse_factor();
            if (inner->kind == NodeKind::literal) {
                // Fold so that printing "-2" round-trips to the same node.
                auto lit = std::make_shared<ExprNode>(*inner);
                lit->literal = -lit->literal;
                lit->offset = off;
                return lit;
            }
            return make(NodeKind::neg, off, std::move(inner));
        }
        return parse_power();
    }

    NodePtr parse_power() {
        NodePtr base = parse_atom();
        skip_ws();
        std::size_t off = pos;
        if (!eat('^')) return base;
        auto n = std::make_shared<ExprNode>();
        n->kind = NodeKind::pow;
        n->offset = off;
        n->a = base;
        n->exponent = parse_exponent();
        return n;
    }

    // Right-associative chain of integer exponents, folded at parse time.
    long long parse_exponent() {
        skip_ws();
        bool negative = eat('-');
        skip_ws();
        if (pos >= src.size() || !std::isdigit(static_cast<unsigned char>(src[pos])))
            fail({"integer"}, "exponent must be an integer literal");
        long long n = 0;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
            n = n * 10 + (src[pos] - '0');
            if (n > 1000000) fail({"integer"}, "exponent too large");
            ++pos;
        }
        skip_ws();
        if (eat('^')) {
            long long rest = parse_exponent();
            if (rest < 0) fail({"non-negative integer"}, "negative exponent inside exponent chain");
            long long acc = 1;
            for (long long i = 0; i < rest; ++i) {
                acc *= n;
                if (acc > 1000000 || acc < -1000000) fail({"integer"}, "exponent too large");
            }
            n = acc;
        }
        return negative ? -n : n;
    }

    NodePtr parse_atom() {
        skip_ws();
        std::size_t off = pos;
        if (pos >= src.size())
            fail({"number", "identifier", "'('", "'-'"}, "unexpected end of input");

        char c = src[pos];
        if (c == '(') {
            ++pos;
            NodePtr inner = parse_expr();
            if (!eat(')')) fail({"')'"}, "unbalanced parenthesis");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_identifier();
        fail({"number", "identifier", "'('", "'-'"}, std::string("unexpected character '") + c + "'");
    }

    NodePtr parse_number() {
        std::size_t off = pos;
        std::size_t end = pos;
        while (end < src.size() && (std::isdigit(static_cast<unsigned char>(src[end])) || src[end] == '.')) ++end;
        if (end < src.size() && (src[end] == 'e' || src[end] == 'E')) {
            std::size_t e = end + 1;
            if (e < src.size() && (src[e] == '+' || src[e] == '-')) ++e;
            if (e < src.size() && std::isdigit(static_cast<unsigned char>(src[e]))) {
                ++e;
                while (e < src.size() && std::isdigit(static_cast<unsigned char>(src[e]))) ++e;
                end = e;
            }
        }
        double value = 0.0;
        auto [ptr, ec] = std::from_chars(src.data() + pos, src.data() + end, value);
        if (ec != std::errc() || ptr != src.data() + end)
            fail({"number"}, "malformed numeric literal");
        pos = end;
        auto n = std::make_shared<ExprNode>();
        n->kind = NodeKind::literal;
        n->literal = value;
        n->offset = off;
        return n;
    }

    NodePtr parse_identifier() {
        std::size_t off = pos;
        std::size_t end = pos;
        while (end < src.size() &&
               (std::isalnum(static_cast<unsigned char>(src[end])) || src[end] == '_'))
            ++end;
        std::string_view name = src.substr(pos, end - pos);
        pos = end;

        if (name == "u") return make(NodeKind::var_u, off);
        if (name == "v") return make(NodeKind::var_v, off);
        if (name == "pi") return make(NodeKind::const_pi, off);

        FuncKind f;
        if (name == "sin") f = FuncKind::sin;
        else if (name == "cos") f = FuncKind::cos;
        else if (name == "tan") f = FuncKind::tan;
        else if (name == "exp") f = FuncKind::exp;
        else if (name == "log") f = FuncKind::log;
        else if (name == "sqrt") f = FuncKind::sqrt;
        else throw UnknownIdentifier(off, std::string(name));

        if (!eat('(')) fail({"'('"}, "function name must be followed by a parenthesized argument");
        NodePtr arg = parse_expr();
        if (!eat(')')) fail({"')'"}, "unbalanced parenthesis in function call");
        auto n = std::make_shared<ExprNode>();
        n->kind = NodeKind::call;
        n->func = f;
        n->offset = off;
        n->a = arg;
        return n;
    }
};

// --- printing ----------------------------------------------------------------

constexpr int kPrecAdd = 1, kPrecMul = 2, kPrecNeg = 3, kPrecPow = 4, kPrecAtom = 5;

int node_prec(const ExprNode* n) {
    switch (n->kind) {
    case NodeKind::add:
    case NodeKind::sub: return kPrecAdd;
    case NodeKind::mul:
    case NodeKind::div: return kPrecMul;
    case NodeKind::neg: return kPrecNeg;
    case NodeKind::pow: return kPrecPow;
    case NodeKind::literal:
        // A negative literal prints with a leading '-', which re-parses as a
        // (folded) unary minus; give it that precedence so it parenthesizes
        // exactly where a unary minus would.
        return std::signbit(n->literal) ? kPrecNeg : kPrecAtom;
    default: return kPrecAtom;
    }
}

std::string_view func_name(FuncKind f) {
    switch (f) {
    case FuncKind::sin: return "sin";
    case FuncKind::cos: return "cos";
    case FuncKind::tan: return "tan";
    case FuncKind::exp: return "exp";
    case FuncKind::log: return "log";
    case FuncKind::sqrt: return "sqrt";
    }
    return "?";
}

std::string format_literal(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, ptr);
}

void print_node(const ExprNode* n, int parent_prec, std::string& out) {
    const int prec = node_prec(n);
    const bool parens = prec < parent_prec;
    if (parens) out += '(';
    switch (n->kind) {
    case NodeKind::literal:
        if (std::signbit(n->literal)) {
            out += '-';
            out += format_literal(-n->literal);
        } else {
            out += format_literal(n->literal);
        }
        break;
    case NodeKind::var_u: out += 'u'; break;
    case NodeKind::var_v: out += 'v'; break;
    case NodeKind::const_pi: out += "pi"; break;
    case NodeKind::add:
        print_node(n->a.get(), kPrecAdd, out);
        out += " + ";
        print_node(n->b.get(), kPrecAdd + 1, out);
        break;
    case NodeKind::sub:
        print_node(n->a.get(), kPrecAdd, out);
        out += " - ";
        print_node(n->b.get(), kPrecAdd + 1, out);
        break;
    case NodeKind::mul:
        print_node(n->a.get(), kPrecMul, out);
        out += "*";
        print_node(n->b.get(), kPrecMul + 1, out);
        break;
    case NodeKind::div:
        print_node(n->a.get(), kPrecMul, out);
        out += "/";
        print_node(n->b.get(), kPrecMul + 1, out);
        break;
    case NodeKind::neg:
        out += '-';
        print_node(n->a.get(), kPrecNeg, out);
        break;
    case NodeKind::pow:
        print_node(n->a.get(), kPrecAtom, out);
        out += '^';
        if (n->exponent < 0) out += '-';
        out += std::to_string(n->exponent < 0 ? -n->exponent : n->exponent);
        break;
    case NodeKind::call:
        out += func_name(n->func);
        out += '(';
        print_node(n->a.get(), 0, out);
        out += ')';
        break;
    }
    if (parens) out += ')';
}

// --- evaluation ---------------------------------------------------------------

// Shared by the double and jet evaluators via tiny adaptor shims.
struct DoubleOps {
    using T = double;
    static T literal(double x) { return x; }
    static T var_u(double u) { return u; }
    static T var_v(double v) { return v; }
    static T add(T a, T b) { return a + b; }
    static T sub(T a, T b) { return a - b; }
    static T mul(T a, T b) { return a * b; }
    static T div(T a, T b, std::size_t off) {
        if (std::fabs(b) < kDivFloor) throw DomainError(off, "division by (near-)zero");
        return a / b;
    }
    static T neg(T a) { return -a; }
    static T pow(T a, long long e, std::size_t off) {
        if (e < 0) {
            if (std::fabs(a) < kDivFloor) throw DomainError(off, "division by (near-)zero");
            return 1.0 / pow(a, -e, off);
        }
        T acc = 1.0, base = a;
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }
    static T call(FuncKind f, T a, std::size_t off) {
        switch (f) {
        case FuncKind::sin: return std::sin(a);
        case FuncKind::cos: return std::cos(a);
        case FuncKind::tan: return std::tan(a);
        case FuncKind::exp: return std::exp(a);
        case FuncKind::log:
            if (!(a > 0.0)) throw DomainError(off, "log of non-positive value");
            return std::log(a);
        case FuncKind::sqrt:
            if (!(a > 0.0)) throw DomainError(off, "sqrt of non-positive value");
            return std::sqrt(a);
        }
        throw DomainError(off, "unknown function");
    }
};

template <int N> struct JetOps {
    using T = Jet<N>;
    static T literal(double x) { return T::constant(x); }
    static T var_u(double u) { return T::variable_u(u); }
    static T var_v(double v) { return T::variable_v(v); }
    static T add(const T& a, const T& b) { return a + b; }
    static T sub(const T& a, const T& b) { return a - b; }
    static T mul(const T& a, const T& b) { return a * b; }
    static T div(const T& a, const T& b, std::size_t off) { return a * recip(b, off); }
    static T neg(const T& a) { return -a; }
    static T pow(const T& a, long long e, std::size_t off) { return ipow(a, e, off); }
    static T call(FuncKind f, const T& a, std::size_t off) {
        switch (f) {
        case FuncKind::sin: return lcf::sin(a);
        case FuncKind::cos: return lcf::cos(a);
        case FuncKind::tan: return lcf::tan(a);
        case FuncKind::exp: return lcf::exp(a);
        case FuncKind::log: return lcf::log(a, off);
        case FuncKind::sqrt: return lcf::sqrt(a, off);
        }
        throw DomainError(off, "unknown function");
    }
};

template <class Ops> typename Ops::T eval_node(const ExprNode* n, double u, double v) {
    using T = typename Ops::T;
    switch (n->kind) {
    case NodeKind::literal: return Ops::literal(n->literal);
    case NodeKind::var_u: return Ops::var_u(u);
    case NodeKind::var_v: return Ops::var_v(v);
    case NodeKind::const_pi: return Ops::literal(3.14159265358979323846);
    case NodeKind::add: return Ops::add(eval_node<Ops>(n->a.get(), u, v), eval_node<Ops>(n->b.get(), u, v));
    case NodeKind::sub: return Ops::sub(eval_node<Ops>(n->a.get(), u, v), eval_node<Ops>(n->b.get(), u, v));
    case NodeKind::mul: return Ops::mul(eval_node<Ops>(n->a.get(), u, v), eval_node<Ops>(n->b.get(), u, v));
    case NodeKind::div:
        return Ops::div(eval_node<Ops>(n->a.get(), u, v), eval_node<Ops>(n->b.get(), u, v), n->offset);
    case NodeKind::neg: return Ops::neg(eval_node<Ops>(n->a.get(), u, v));
    case NodeKind::pow: return Ops::pow(eval_node<Ops>(n->a.get(), u, v), n->exponent, n->offset);
    case NodeKind::call: return Ops::call(n->func, eval_node<Ops>(n->a.get(), u, v), n->offset);
    }
    throw DomainError(n->offset, "malformed expression node");
}

const ExprNode* require_root(const ExprAst& ast) {
    if (ast.empty()) throw DomainError(0, "empty expression");
    return ast.root();
}

} // namespace

ExprAst parse_expr(std::string_view src) {
    Parser p{src};
    NodePtr root = p.parse_expr();
    p.skip_ws();
    if (p.pos != src.size())
        throw ParseError(p.pos, {"operator", "end of input"}, "trailing characters after expression");
    return ExprAst(std::move(root));
}

std::string to_string(const ExprAst& ast) {
    std::string out;
    if (!ast.empty()) print_node(ast.root(), 0, out);
    return out;
}

bool structurally_equal(const ExprAst& a, const ExprAst& b) {
    struct Cmp {
        static bool eq(const ExprNode* x, const ExprNode* y) {
            if (x == y) return true;
            if (!x || !y) return false;
            if (x->kind != y->kind) return false;
            switch (x->kind) {
            case NodeKind::literal: return x->literal == y->literal;
            case NodeKind::pow: return x->exponent == y->exponent && eq(x->a.get(), y->a.get());
            case NodeKind::call: return x->func == y->func && eq(x->a.get(), y->a.get());
            default: break;
            }
            return eq(x->a.get(), y->a.get()) && eq(x->b.get(), y->b.get());
        }
    };
    return Cmp::eq(a.root(), b.root());
}

double eval_value(const ExprAst& ast, double u, double v) {
    return eval_node<DoubleOps>(require_root(ast), u, v);
}

Jet2 eval_jet(const ExprAst& ast, double u, double v) {
    return eval_node<JetOps<3>>(require_root(ast), u, v);
}

Jet<4> eval_jet4(const ExprAst& ast, double u, double v) {
    return eval_node<JetOps<4>>(require_root(ast), u, v);
}

} // namespace lcf
