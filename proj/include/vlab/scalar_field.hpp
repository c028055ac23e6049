#pragma once

#include <functional>
#include <vector>

#include "vlab/geom.hpp"
#include "vlab/sym_matrix.hpp"

namespace vlab {

// Evaluable function on a box, with optional analytic derivatives and an
// optional predicate flagging points within `radius` of a known nonsmooth
// set. All callables must be pure.
struct ScalarField {
    int dim = 0;
    Box domain_box;
    std::function<double(const Vec&)> eval;
    std::function<Vec(const Vec&)> grad;
    std::function<SymMatrix(const Vec&)> hess;
    std::function<bool(const Vec&, double)> nonsmooth;

    double operator()(const Vec& x) const { return eval(x); }
    bool flagged(const Vec& x, double radius) const { return nonsmooth && nonsmooth(x, radius); }
};

struct GridSpec {
    Box box;
    int resolution = 3; // points per axis
    double fd_step = 1e-4;

    int dim() const { return box.dim(); }
    void validate() const;
    double spacing(int axis) const;
    double min_spacing() const;
    long total_points() const;

    // deterministic row-major enumeration
    std::vector<Vec> points() const;
    template <typename F>
    void for_each(F&& f) const {
        const int n = dim();
        std::vector<int> idx(static_cast<std::size_t>(n), 0);
        Vec x(static_cast<std::size_t>(n));
        while (true) {
            for (int i = 0; i < n; ++i)
                x[static_cast<std::size_t>(i)] =
                    box.lo[static_cast<std::size_t>(i)] + idx[static_cast<std::size_t>(i)] * spacing(i);
            f(static_cast<const Vec&>(x));
            int axis = n - 1;
            while (axis >= 0 && ++idx[static_cast<std::size_t>(axis)] == resolution) {
                idx[static_cast<std::size_t>(axis)] = 0;
                --axis;
            }
            if (axis < 0) break;
        }
    }
};

// Central differences, O(h^2) on smooth fields. Requires the ball of radius
// dim*h about x to be inside the field's domain box.
Vec gradient_fd(const ScalarField& field, const Vec& x, double h);
SymMatrix hessian_fd(const ScalarField& field, const Vec& x, double h);

// Hessian via the analytic callback when present, FD otherwise.
SymMatrix hessian_of(const ScalarField& field, const Vec& x, double h);

// Discrete inf-convolution min_y { u(y) + |x-y|^2 / (2 eps) } over a local
// tensor stencil, computed by per-axis lower-envelope passes. Returns the
// envelope on the same stencil so callers can take differences.
struct InfConvStencil {
    Vec origin;       // stencil center
    double step = 0.0; // grid step
    int half = 0;      // points per side
    std::vector<double> values; // envelope values, row-major over the stencil
    double at(const std::vector<int>& offsets) const;
};
InfConvStencil inf_convolution(const ScalarField& u, const Vec& x, double eps, double radius, int half);

} // namespace vlab
