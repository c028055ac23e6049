#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "vlab/geom.hpp"

namespace vlab {

// Parsed arithmetic expression over x1..xN, literals, + - * / ^, unary minus
// and the functions abs, sqrt, exp, log, min, max, pow. `^` is
// right-associative and binds tighter than unary minus; whitespace is
// insignificant; variables are 1-indexed.
class Expression {
public:
    enum class Op {
        Lit,
        Var,
        Add,
        Sub,
        Mul,
        Div,
        Pow,
        Neg,
        Abs,
        Sqrt,
        Exp,
        Log,
        Min,
        Max,
    };

    struct Node {
        Op op;
        double lit = 0.0;
        int var = -1; // 0-based variable index
        int a = -1;   // child indices into the pool
        int b = -1;
    };

    int dim() const { return dim_; }
    const std::string& source() const { return source_; }

    double eval(const Vec& x) const;
    std::string str() const;
    bool same_structure(const Expression& other) const;

private:
    friend Expression parse_expression(std::string_view, int);

    std::vector<Node> nodes_;
    int root_ = -1;
    int dim_ = 0;
    std::string source_;
};

// Throws Error(Errc::ParseError) with the byte offset and the expected-token
// set in the message; Error(Errc::EvalDomain) at evaluation time for log/sqrt
// of a negative, division by zero and NaN-producing powers.
Expression parse_expression(std::string_view src, int dim);

double eval_expression(const Expression& e, const Vec& x);

} // namespace vlab
