#include "vlab/scalar_field.hpp"

#include <algorithm>
#include <cmath>

#include "vlab/errors.hpp"

namespace vlab {

void GridSpec::validate() const {
    require(dim() >= 1, Errc::BadParam, "grid box has no dimensions");
    require(resolution >= 3, Errc::GridTooCoarse, "grid resolution must be >= 3 points per axis");
    require(fd_step > 0.0, Errc::GridTooCoarse, "fd_step must be positive");
    require(fd_step < box.min_edge() / resolution, Errc::GridTooCoarse,
            "fd_step must be below the grid spacing");
    for (int i = 0; i < dim(); ++i)
        require(box.lo[static_cast<std::size_t>(i)] < box.hi[static_cast<std::size_t>(i)],
                Errc::BadParam, "grid box is empty along an axis");
}

double GridSpec::spacing(int axis) const {
    return (box.hi[static_cast<std::size_t>(axis)] - box.lo[static_cast<std::size_t>(axis)]) /
           (resolution - 1);
}

double GridSpec::min_spacing() const {
    double s = spacing(0);
    for (int i = 1; i < dim(); ++i) s = std::min(s, spacing(i));
    return s;
}

long GridSpec::total_points() const {
    long t = 1;
    for (int i = 0; i < dim(); ++i) t *= resolution;
    return t;
}

std::vector<Vec> GridSpec::points() const {
    std::vector<Vec> pts;
    pts.reserve(static_cast<std::size_t>(total_points()));
    for_each([&](const Vec& x) { pts.push_back(x); });
    return pts;
}

namespace {

void check_stencil_room(const ScalarField& field, const Vec& x, double h) {
    require(field.domain_box.contains_ball(x, field.dim * h), Errc::OutOfDomain,
            "finite-difference stencil leaves the field domain");
}

} // namespace

Vec gradient_fd(const ScalarField& field, const Vec& x, double h) {
    check_stencil_room(field, x, h);
    const int n = field.dim;
    Vec g(static_cast<std::size_t>(n));
    Vec p = x;
    for (int i = 0; i < n; ++i) {
        p[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)] + h;
        const double fp = field.eval(p);
        p[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)] - h;
        const double fm = field.eval(p);
        p[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)];
        g[static_cast<std::size_t>(i)] = (fp - fm) / (2.0 * h);
    }
    return g;
}

SymMatrix hessian_fd(const ScalarField& field, const Vec& x, double h) {
    check_stencil_room(field, x, h);
    const int n = field.dim;
    SymMatrix H(n);
    const double f0 = field.eval(x);
    Vec p = x;
    for (int i = 0; i < n; ++i) {
        p[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)] + h;
        const double fp = field.eval(p);
        p[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)] - h;
        const double fm = field.eval(p);
        p[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)];
        H.set(i, i, (fp - 2.0 * f0 + fm) / (h * h));
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            double s = 0.0;
            for (int si = -1; si <= 1; si += 2)
                for (int sj = -1; sj <= 1; sj += 2) {
                    p[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)] + si * h;
                    p[static_cast<std::size_t>(j)] = x[static_cast<std::size_t>(j)] + sj * h;
                    s += si * sj * field.eval(p);
                }
            p[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)];
            p[static_cast<std::size_t>(j)] = x[static_cast<std::size_t>(j)];
            H.set(i, j, s / (4.0 * h * h));
        }
    }
    return H;
}

SymMatrix hessian_of(const ScalarField& field, const Vec& x, double h) {
    if (field.hess) return field.hess(x);
    return hessian_fd(field, x, h);
}

double InfConvStencil::at(const std::vector<int>& offsets) const {
    const int side = 2 * half + 1;
    std::size_t idx = 0;
    for (int o : offsets) {
        const int c = o + half;
        idx = idx * static_cast<std::size_t>(side) + static_cast<std::size_t>(c);
    }
    return values[idx];
}

InfConvStencil inf_convolution(const ScalarField& u, const Vec& x, double eps, double radius, int half) {
    require(half >= 1, Errc::BadParam, "inf-convolution stencil too small");
    const int n = u.dim;
    const int side = 2 * half + 1;
    InfConvStencil st;
    st.origin = x;
    st.half = half;
    st.step = radius / half;

    long total = 1;
    for (int i = 0; i < n; ++i) total *= side;
    st.values.resize(static_cast<std::size_t>(total));

    // raw field values on the stencil, clamped to the domain box
    std::vector<int> idx(static_cast<std::size_t>(n), 0);
    Vec p(static_cast<std::size_t>(n));
    for (long flat = 0; flat < total; ++flat) {
        long rem = flat;
        for (int i = n - 1; i >= 0; --i) {
            idx[static_cast<std::size_t>(i)] = static_cast<int>(rem % side) - half;
            rem /= side;
        }
        bool in_domain = true;
        for (int i = 0; i < n; ++i) {
            p[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)] + idx[static_cast<std::size_t>(i)] * st.step;
            if (p[static_cast<std::size_t>(i)] < u.domain_box.lo[static_cast<std::size_t>(i)] ||
                p[static_cast<std::size_t>(i)] > u.domain_box.hi[static_cast<std::size_t>(i)])
                in_domain = false;
        }
        st.values[static_cast<std::size_t>(flat)] = in_domain ? u.eval(p) : 1e300;
    }

    // Per-axis lower-envelope passes: after all axes, values[c] equals
    // min_y { raw(y) + |c - y|^2 step^2 / (2 eps) } over the stencil.
    const double w = st.step * st.step / (2.0 * eps);
    std::vector<double> line(static_cast<std::size_t>(side));
    long stride = 1;
    for (int axis = n - 1; axis >= 0; --axis) {
        const long block = stride * side;
        for (long base = 0; base < total; ++base) {
            if ((base / stride) % side != 0) continue;
            for (int c = 0; c < side; ++c)
                line[static_cast<std::size_t>(c)] = st.values[static_cast<std::size_t>(base + c * stride)];
            for (int c = 0; c < side; ++c) {
                double best = line[static_cast<std::size_t>(c)];
                for (int y = 0; y < side; ++y) {
                    const double d = static_cast<double>(c - y);
                    best = std::min(best, line[static_cast<std::size_t>(y)] + w * d * d);
                }
                st.values[static_cast<std::size_t>(base + c * stride)] = best;
            }
        }
        stride = block;
    }
    return st;
}

} // namespace vlab
