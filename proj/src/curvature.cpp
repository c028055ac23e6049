#include "vlab/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>

#include "vlab/eigen.hpp"
#include "vlab/errors.hpp"

namespace vlab {

namespace {

// Level-set function with psi < 0 inside U, from the signed distance or a
// chart. The curvature convention below only needs the sign orientation.
struct LevelSet {
    ScalarField psi;
};

LevelSet level_set_of(const RegionSpec& U, const Vec& near_x) {
    LevelSet ls;
    ls.psi.dim = U.dim;
    ls.psi.domain_box = U.bbox.inflated(U.bbox.max_edge());
    if (U.signed_dist) {
        ls.psi.eval = U.signed_dist;
        return ls;
    }
    if (U.chart_at) {
        auto chart = U.chart_at(near_x);
        if (chart) {
            const auto c = std::make_shared<Chart>(*chart);
            ls.psi.eval = [c](const Vec& x) {
                const Vec local = c->rotation.apply_transpose(sub(x, c->base));
                const Vec xp(local.begin(), local.end() - 1);
                return c->height(xp) - local.back();
            };
            return ls;
        }
    }
    fail(Errc::NotSmooth, "region has neither signed distance nor chart near the query point");
}

} // namespace

PrincipalCurvatures principal_curvatures(const RegionSpec& U, const Vec& x, double fd_step) {
    const int n = U.dim;
    const LevelSet ls = level_set_of(U, x);
    const double h = fd_step;

    Vec g = gradient_fd(ls.psi, x, h);
    double gn = norm(g);
    require(gn > 1e-8, Errc::NotSmooth, "level-set gradient vanishes near the query point");
    require(std::fabs(ls.psi.eval(x)) / gn <= 1e-6, Errc::NotOnBoundary,
            "query point is farther than 1e-6 from the boundary");

    // Newton projection to the zero level set
    Vec foot = x;
    for (int it = 0; it < 30; ++it) {
        const double val = ls.psi.eval(foot);
        if (std::fabs(val) <= 1e-12 * (1.0 + gn)) break;
        const Vec gf = gradient_fd(ls.psi, foot, h);
        const double gg = dot(gf, gf);
        if (gg < 1e-16) break;
        foot = axpy(foot, -val / gg, gf);
    }

    const SymMatrix H = hessian_fd(ls.psi, foot, h);
    {
        // second-derivative consistency guard
        const SymMatrix H2 = hessian_fd(ls.psi, foot, 0.5 * h);
        double diff = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) diff = std::max(diff, std::fabs(H(i, j) - H2(i, j)));
        require(diff <= 1e-2 * (1.0 + H.max_abs()), Errc::NotSmooth,
                "finite-difference second derivatives are inconsistent");
    }

    g = gradient_fd(ls.psi, foot, h);
    gn = norm(g);
    require(gn > 1e-8, Errc::NotSmooth, "level-set gradient vanishes at the foot point");
    const Vec outward = scaled(g, 1.0 / gn);

    // frame with the outward normal last; leading columns span the tangent space
    const Mat frame = frame_with_last_axis(outward);

    PrincipalCurvatures pc;
    pc.base = foot;
    pc.kappas.resize(static_cast<std::size_t>(n - 1));

    if (n - 1 == 1) {
        const Vec t = frame.col(0);
        pc.kappas[0] = H.quad(t) / gn;
        pc.tangent_frame = Mat(n, 1);
        pc.tangent_frame.set_col(0, t);
        return pc;
    }

    SymMatrix M(n - 1);
    for (int i = 0; i < n - 1; ++i) {
        const Vec ti = frame.col(i);
        const Vec Hti = H.apply(ti);
        for (int j = i; j < n - 1; ++j) M.set(i, j, dot(Hti, frame.col(j)) / gn);
    }
    const EigenDecomposition d = eigenvalues_sorted(M);
    pc.kappas = d.values;
    pc.tangent_frame = Mat(n, n - 1);
    for (int c = 0; c < n - 1; ++c) {
        Vec t = zeros(n);
        for (int i = 0; i < n - 1; ++i) t = axpy(t, d.vectors.at(i, c), frame.col(i));
        pc.tangent_frame.set_col(c, t);
    }
    return pc;
}

std::vector<Vec> boundary_sample(const RegionSpec& U, const GridSpec& grid) {
    grid.validate();
    const int n = grid.dim();
    const std::vector<Vec> pts = grid.points();
    std::vector<char> in(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) in[i] = U.inside(pts[i]) ? 1 : 0;

    std::vector<long> stride(static_cast<std::size_t>(n));
    {
        long s = 1;
        for (int i = n - 1; i >= 0; --i) {
            stride[static_cast<std::size_t>(i)] = s;
            s *= grid.resolution;
        }
    }

    const auto bisect = [&](const Vec& a, const Vec& b) {
        // a inside, b outside
        Vec lo = a, hi = b;
        while (dist(lo, hi) > 1e-9) {
            const Vec mid = scaled(add(lo, hi), 0.5);
            (U.inside(mid) ? lo : hi) = mid;
        }
        return scaled(add(lo, hi), 0.5);
    };

    std::vector<Vec> out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (int axis = 0; axis < n; ++axis) {
            const long coord = (static_cast<long>(i) / stride[static_cast<std::size_t>(axis)]) % grid.resolution;
            if (coord + 1 >= grid.resolution) continue;
            const std::size_t j = i + static_cast<std::size_t>(stride[static_cast<std::size_t>(axis)]);
            if (in[i] == in[j]) continue;
            out.push_back(in[i] ? bisect(pts[i], pts[j]) : bisect(pts[j], pts[i]));
        }
    }
    require(!out.empty(), Errc::EmptyBoundary, "no boundary crossing on the grid");
    return out;
}

} // namespace vlab
