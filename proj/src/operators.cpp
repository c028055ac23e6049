#include "vlab/operators.hpp"

#include <cmath>

#include "vlab/errors.hpp"

namespace vlab {

const char* operator_kind_name(OperatorKind k) {
    switch (k) {
        case OperatorKind::LambdaK: return "lambda_k";
        case OperatorKind::PMinusK: return "pminus_k";
        case OperatorKind::PPlusK: return "pplus_k";
        case OperatorKind::Plug: return "plug";
    }
    return "?";
}

OperatorKind operator_kind_from_name(const std::string& name) {
    if (name == "lambda_k") return OperatorKind::LambdaK;
    if (name == "pminus_k") return OperatorKind::PMinusK;
    if (name == "pplus_k") return OperatorKind::PPlusK;
    if (name == "plug") return OperatorKind::Plug;
    fail(Errc::ValidationError, "unknown operator kind '" + name + "'");
}

std::string OperatorSpec::name() const {
    if (kind == OperatorKind::Plug) return plug_name.empty() ? "plug" : plug_name;
    return std::string(operator_kind_name(kind)) + "(" + std::to_string(k) + ")";
}

namespace {

void check_k(const SymMatrix& X, int k) {
    require(k >= 1 && k <= X.dim(), Errc::IndexOutOfRange,
            "k=" + std::to_string(k) + " out of range for dimension " + std::to_string(X.dim()));
}

} // namespace

double lambda_k(const SymMatrix& X, int k) {
    check_k(X, k);
    return eigenvalues_sorted(X).values[static_cast<std::size_t>(k - 1)];
}

double pminus_k(const SymMatrix& X, int k) {
    check_k(X, k);
    const EigenDecomposition d = eigenvalues_sorted(X);
    double s = 0.0;
    for (int i = 0; i < k; ++i) s += d.values[static_cast<std::size_t>(i)];
    return s;
}

double pplus_k(const SymMatrix& X, int k) {
    check_k(X, k);
    const EigenDecomposition d = eigenvalues_sorted(X);
    double s = 0.0;
    for (int i = 0; i < k; ++i) s += d.values[static_cast<std::size_t>(X.dim() - 1 - i)];
    return s;
}

KFrameValue pminus_k_frame(const SymMatrix& X, int k) {
    check_k(X, k);
    const EigenDecomposition d = eigenvalues_sorted(X);
    KFrameValue r;
    r.frame = Mat(X.dim(), k);
    r.value = 0.0;
    for (int i = 0; i < k; ++i) {
        r.value += d.values[static_cast<std::size_t>(i)];
        r.frame.set_col(i, d.vectors.col(i));
    }
    return r;
}

double operator_eval(const OperatorSpec& op, const SymMatrix& X) {
    switch (op.kind) {
        case OperatorKind::LambdaK: return lambda_k(X, op.k);
        case OperatorKind::PMinusK: return pminus_k(X, op.k);
        case OperatorKind::PPlusK: return pplus_k(X, op.k);
        case OperatorKind::Plug:
            require(static_cast<bool>(op.plug_eval), Errc::PlugUnavailable,
                    "no evaluator registered for plug operator");
            return op.plug_eval(X);
    }
    fail(Errc::OperatorUnavailable, "unhandled operator kind");
}

OperatorPropertyReport verify_operator_properties(const OperatorSpec& op, int dim, int samples, Rng& rng) {
    OperatorPropertyReport rep;
    rep.samples = samples;
    Rng local = rng.fork("op_props");

    const auto random_sym = [&](double scale) {
        SymMatrix m(dim);
        for (int i = 0; i < dim; ++i)
            for (int j = i; j < dim; ++j) m.set(i, j, scale * local.normal());
        return m;
    };

    for (int s = 0; s < samples; ++s) {
        const SymMatrix X = random_sym(1.0);
        const double base = operator_eval(op, X);

        // (F2): adding a PSD matrix must not decrease the value.
        SymMatrix P(dim);
        {
            Mat g(dim, dim);
            for (double& v : g.a) v = local.normal();
            for (int i = 0; i < dim; ++i)
                for (int j = i; j < dim; ++j) {
                    double acc = 0.0;
                    for (int c = 0; c < dim; ++c) acc += g.at(i, c) * g.at(j, c);
                    P.set(i, j, 0.3 * acc);
                }
        }
        const double bumped = operator_eval(op, X.plus(P));
        rep.worst_ellipticity_violation = std::max(rep.worst_ellipticity_violation, base - bumped);

        // (F4) with the declared degree.
        for (double t : {0.5, 2.0, 10.0}) {
            const double lhs = operator_eval(op, X.scaled(t));
            const double rhs = std::pow(t, op.homogeneity_degree) * base;
            const double err = std::fabs(lhs - rhs) / (1.0 + std::fabs(rhs));
            rep.worst_homogeneity_error = std::max(rep.worst_homogeneity_error, err);
        }
    }

    rep.degenerate_elliptic = rep.worst_ellipticity_violation <= 1e-12;
    rep.homogeneous = rep.worst_homogeneity_error <= 1e-10;
    return rep;
}

} // namespace vlab
