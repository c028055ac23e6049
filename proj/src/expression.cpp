#include "vlab/expression.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "vlab/errors.hpp"

namespace vlab {

namespace {

struct Parser {
    std::string_view src;
    int dim;
    std::size_t pos = 0;
    std::vector<Expression::Node>* pool;

    [[noreturn]] void err(const std::string& expected) const {
        std::ostringstream os;
        os << "at byte " << pos << ": expected " << expected;
        if (pos < src.size())
            os << ", found '" << src[pos] << "'";
        else
            os << ", found end of input";
        fail(Errc::ParseError, os.str());
    }

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

    int push(Expression::Node n) {
        pool->push_back(n);
        return static_cast<int>(pool->size()) - 1;
    }

    int make(Expression::Op op, int a, int b = -1) {
        Expression::Node n;
        n.op = op;
        n.a = a;
        n.b = b;
        return push(n);
    }

    // expr := term (('+'|'-') term)*
    int parse_expr() {
        int lhs = parse_term();
        while (true) {
            if (eat('+'))
                lhs = make(Expression::Op::Add, lhs, parse_term());
            else if (eat('-'))
                lhs = make(Expression::Op::Sub, lhs, parse_term());
            else
                return lhs;
        }
    }

    // term := factor (('*'|'/') factor)*
    int parse_term() {
        int lhs = parse_factor();
        while (true) {
            if (eat('*'))
                lhs = make(Expression::Op::Mul, lhs, parse_factor());
            else if (eat('/'))
                lhs = make(Expression::Op::Div, lhs, parse_factor());
            else
                return lhs;
        }
    }

    // factor := '-' factor | power
    int parse_factor() {
        if (eat('-')) return make(Expression::Op::Neg, parse_factor());
        return parse_power();
    }

    // power := atom ('^' factor)?   (right-associative, exponent may be signed)
    int parse_power() {
        int base = parse_atom();
        if (eat('^')) return make(Expression::Op::Pow, base, parse_factor());
        return base;
    }

    int parse_atom() {
        skip_ws();
        if (pos >= src.size()) err("number, variable, function or '('");
        const char c = src[pos];
        if (c == '(') {
            ++pos;
            const int inner = parse_expr();
            if (!eat(')')) err("')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c))) return parse_name();
        err("number, variable, function or '('");
    }

    int parse_number() {
        const char* begin = src.data() + pos;
        char* end = nullptr;
        const double v = std::strtod(begin, &end);
        if (end == begin) err("number");
        pos += static_cast<std::size_t>(end - begin);
        Expression::Node n;
        n.op = Expression::Op::Lit;
        n.lit = v;
        return push(n);
    }

    int parse_name() {
        const std::size_t start = pos;
        while (pos < src.size() &&
               (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
            ++pos;
        const std::string_view name = src.substr(start, pos - start);

        if (name.size() >= 2 && name[0] == 'x' &&
            std::isdigit(static_cast<unsigned char>(name[1]))) {
            int idx = 0;
            for (std::size_t i = 1; i < name.size(); ++i) {
                if (!std::isdigit(static_cast<unsigned char>(name[i]))) {
                    pos = start;
                    err("variable of the form x1..x" + std::to_string(dim));
                }
                idx = idx * 10 + (name[i] - '0');
            }
            if (idx < 1 || idx > dim) {
                pos = start;
                err("variable index in 1.." + std::to_string(dim));
            }
            Expression::Node n;
            n.op = Expression::Op::Var;
            n.var = idx - 1;
            return push(n);
        }

        const auto unary = [&](Expression::Op op) {
            if (!eat('(')) err("'(' after function name");
            const int a = parse_expr();
            if (!eat(')')) err("')'");
            return make(op, a);
        };
        const auto binary = [&](Expression::Op op) {
            if (!eat('(')) err("'(' after function name");
            const int a = parse_expr();
            if (!eat(',')) err("','");
            const int b = parse_expr();
            if (!eat(')')) err("')'");
            return make(op, a, b);
        };

        if (name == "abs") return unary(Expression::Op::Abs);
        if (name == "sqrt") return unary(Expression::Op::Sqrt);
        if (name == "exp") return unary(Expression::Op::Exp);
        if (name == "log") return unary(Expression::Op::Log);
        if (name == "min") return binary(Expression::Op::Min);
        if (name == "max") return binary(Expression::Op::Max);
        if (name == "pow") return binary(Expression::Op::Pow);
        pos = start;
        err("one of abs, sqrt, exp, log, min, max, pow, or a variable x1..x" + std::to_string(dim));
    }
};

double eval_node(const std::vector<Expression::Node>& pool, int id, const Vec& x) {
    const Expression::Node& n = pool[static_cast<std::size_t>(id)];
    using Op = Expression::Op;
    switch (n.op) {
        case Op::Lit: return n.lit;
        case Op::Var: return x[static_cast<std::size_t>(n.var)];
        case Op::Add: return eval_node(pool, n.a, x) + eval_node(pool, n.b, x);
        case Op::Sub: return eval_node(pool, n.a, x) - eval_node(pool, n.b, x);
        case Op::Mul: return eval_node(pool, n.a, x) * eval_node(pool, n.b, x);
        case Op::Div: {
            const double num = eval_node(pool, n.a, x);
            const double den = eval_node(pool, n.b, x);
            require(den != 0.0, Errc::EvalDomain, "division by zero");
            return num / den;
        }
        case Op::Pow: {
            const double base = eval_node(pool, n.a, x);
            const double expo = eval_node(pool, n.b, x);
            const double v = std::pow(base, expo);
            require(!std::isnan(v), Errc::EvalDomain, "pow produced NaN");
            return v;
        }
        case Op::Neg: return -eval_node(pool, n.a, x);
        case Op::Abs: return std::fabs(eval_node(pool, n.a, x));
        case Op::Sqrt: {
            const double v = eval_node(pool, n.a, x);
            require(v >= 0.0, Errc::EvalDomain, "sqrt of a negative value");
            return std::sqrt(v);
        }
        case Op::Exp: return std::exp(eval_node(pool, n.a, x));
        case Op::Log: {
            const double v = eval_node(pool, n.a, x);
            require(v > 0.0, Errc::EvalDomain, "log of a nonpositive value");
            return std::log(v);
        }
        case Op::Min: return std::min(eval_node(pool, n.a, x), eval_node(pool, n.b, x));
        case Op::Max: return std::max(eval_node(pool, n.a, x), eval_node(pool, n.b, x));
    }
    fail(Errc::EvalDomain, "corrupt expression node");
}

void print_node(const std::vector<Expression::Node>& pool, int id, std::ostream& os) {
    const Expression::Node& n = pool[static_cast<std::size_t>(id)];
    using Op = Expression::Op;
    const auto bin = [&](const char* sym) {
        os << '(';
        print_node(pool, n.a, os);
        os << ' ' << sym << ' ';
        print_node(pool, n.b, os);
        os << ')';
    };
    const auto fun = [&](const char* name, bool two) {
        os << name << '(';
        print_node(pool, n.a, os);
        if (two) {
            os << ", ";
            print_node(pool, n.b, os);
        }
        os << ')';
    };
    switch (n.op) {
        case Op::Lit: {
            std::ostringstream tmp;
            tmp.precision(17);
            tmp << n.lit;
            os << tmp.str();
            return;
        }
        case Op::Var: os << 'x' << (n.var + 1); return;
        case Op::Add: bin("+"); return;
        case Op::Sub: bin("-"); return;
        case Op::Mul: bin("*"); return;
        case Op::Div: bin("/"); return;
        case Op::Pow: bin("^"); return;
        case Op::Neg:
            os << "(-";
            print_node(pool, n.a, os);
            os << ')';
            return;
        case Op::Abs: fun("abs", false); return;
        case Op::Sqrt: fun("sqrt", false); return;
        case Op::Exp: fun("exp", false); return;
        case Op::Log: fun("log", false); return;
        case Op::Min: fun("min", true); return;
        case Op::Max: fun("max", true); return;
    }
}

bool same_node(const std::vector<Expression::Node>& pa, int ia,
               const std::vector<Expression::Node>& pb, int ib) {
    const Expression::Node& a = pa[static_cast<std::size_t>(ia)];
    const Expression::Node& b = pb[static_cast<std::size_t>(ib)];
    if (a.op != b.op) return false;
    if (a.op == Expression::Op::Lit) return a.lit == b.lit;
    if (a.op == Expression::Op::Var) return a.var == b.var;
    if ((a.a >= 0) != (b.a >= 0)) return false;
    if (a.a >= 0 && !same_node(pa, a.a, pb, b.a)) return false;
    if ((a.b >= 0) != (b.b >= 0)) return false;
    if (a.b >= 0 && !same_node(pa, a.b, pb, b.b)) return false;
    return true;
}

} // namespace

Expression parse_expression(std::string_view src, int dim) {
    require(!src.empty(), Errc::ParseError, "empty expression");
    require(dim >= 1 && dim <= 8, Errc::BadParam, "expression dimension must be in [1, 8]");
    Expression e;
    e.dim_ = dim;
    e.source_ = std::string(src);
    Parser p{src, dim, 0, &e.nodes_};
    e.root_ = p.parse_expr();
    p.skip_ws();
    if (p.pos != src.size()) p.err("operator or end of input");
    return e;
}

double Expression::eval(const Vec& x) const {
    require(static_cast<int>(x.size()) == dim_, Errc::BadParam, "point dimension mismatch");
    return eval_node(nodes_, root_, x);
}

std::string Expression::str() const {
    std::ostringstream os;
    print_node(nodes_, root_, os);
    return os.str();
}

bool Expression::same_structure(const Expression& other) const {
    return dim_ == other.dim_ && same_node(nodes_, root_, other.nodes_, other.root_);
}

double eval_expression(const Expression& e, const Vec& x) { return e.eval(x); }

} // namespace vlab
