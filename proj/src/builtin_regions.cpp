#include "vlab/builtin_regions.hpp"

#include <cmath>
#include <memory>

#include "vlab/errors.hpp"

namespace vlab {

RegionSpec transformed_region(const RegionSpec& r, const Mat& rotation, const Vec& shift) {
    const auto inner = std::make_shared<RegionSpec>(r);
    const auto rot = std::make_shared<Mat>(rotation);
    const auto sh = std::make_shared<Vec>(shift);

    const auto pull_back = [inner, rot, sh](const Vec& x) { return rot->apply_transpose(sub(x, *sh)); };

    RegionSpec out;
    out.dim = r.dim;
    out.label = r.label + "_rigid";
    out.inside = [inner, pull_back](const Vec& x) { return inner->inside(pull_back(x)); };
    if (r.signed_dist)
        out.signed_dist = [inner, pull_back](const Vec& x) { return inner->signed_dist(pull_back(x)); };
    if (r.complement_distance)
        out.complement_distance = [inner, pull_back](const Vec& x) {
            return inner->complement_distance(pull_back(x));
        };
    if (r.chart_at)
        out.chart_at = [inner, pull_back, rot, sh](const Vec& x) -> std::optional<Chart> {
            auto c = inner->chart_at(pull_back(x));
            if (!c) return std::nullopt;
            Chart moved = *c;
            moved.base = add(rot->apply(c->base), *sh);
            moved.rotation = rot->times(c->rotation);
            return moved;
        };

    // axis-aligned hull of the transformed corners
    const int n = r.dim;
    out.bbox.lo = Vec(static_cast<std::size_t>(n), 1e300);
    out.bbox.hi = Vec(static_cast<std::size_t>(n), -1e300);
    for (int corner = 0; corner < (1 << n); ++corner) {
        Vec c(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            c[static_cast<std::size_t>(i)] =
                (corner >> i & 1) ? r.bbox.hi[static_cast<std::size_t>(i)] : r.bbox.lo[static_cast<std::size_t>(i)];
        const Vec w = add(rotation.apply(c), shift);
        for (int i = 0; i < n; ++i) {
            out.bbox.lo[static_cast<std::size_t>(i)] = std::min(out.bbox.lo[static_cast<std::size_t>(i)], w[static_cast<std::size_t>(i)]);
            out.bbox.hi[static_cast<std::size_t>(i)] = std::max(out.bbox.hi[static_cast<std::size_t>(i)], w[static_cast<std::size_t>(i)]);
        }
    }
    return out;
}

RegionSpec ball_region(int dim, double radius, Vec center) {
    require(radius > 0.0, Errc::BadParam, "ball radius must be positive");
    if (center.empty()) center = zeros(dim);
    require(static_cast<int>(center.size()) == dim, Errc::BadParam, "ball center dimension mismatch");

    RegionSpec r;
    r.dim = dim;
    r.label = "ball";
    r.bbox = cube_box(dim, radius * 1.5, center);
    r.signed_dist = [center, radius](const Vec& x) { return dist(x, center) - radius; };
    r.inside = [center, radius](const Vec& x) { return dist(x, center) < radius; };
    r.complement_distance = [center, radius](const Vec& x) {
        return std::max(radius - dist(x, center), 0.0);
    };
    return r;
}

RegionSpec halfspace_region(int dim, Vec normal, double offset) {
    if (normal.empty()) normal = unit(dim, dim - 1);
    require(static_cast<int>(normal.size()) == dim, Errc::BadParam, "halfspace normal dimension mismatch");
    const double nn = norm(normal);
    require(nn > 0.0, Errc::BadParam, "halfspace normal must be nonzero");
    const Vec n = scaled(normal, 1.0 / nn);
    const double c = offset / nn;

    RegionSpec r;
    r.dim = dim;
    r.label = "halfspace";
    r.bbox = cube_box(dim, 2.0);
    r.signed_dist = [n, c](const Vec& x) { return c - dot(n, x); };
    r.inside = [n, c](const Vec& x) { return dot(n, x) > c; };
    r.complement_distance = [n, c](const Vec& x) { return std::max(dot(n, x) - c, 0.0); };
    return r;
}

RegionSpec slab_region(int dim, Vec normal, double lo, double hi) {
    require(lo < hi, Errc::BadParam, "slab needs lo < hi");
    if (normal.empty()) normal = unit(dim, dim - 1);
    const double nn = norm(normal);
    require(nn > 0.0, Errc::BadParam, "slab normal must be nonzero");
    const Vec n = scaled(normal, 1.0 / nn);
    const double a = lo / nn, b = hi / nn;

    RegionSpec r;
    r.dim = dim;
    r.label = "slab";
    r.bbox = cube_box(dim, std::max(2.0, std::max(std::fabs(a), std::fabs(b)) + 1.0));
    r.signed_dist = [n, a, b](const Vec& x) {
        const double t = dot(n, x);
        return std::max(a - t, t - b);
    };
    r.inside = [n, a, b](const Vec& x) {
        const double t = dot(n, x);
        return t > a && t < b;
    };
    r.complement_distance = [n, a, b](const Vec& x) {
        const double t = dot(n, x);
        return std::max(std::min(t - a, b - t), 0.0);
    };
    return r;
}

RegionSpec torus_region(double major, double minor) {
    require(minor > 0.0 && minor < major, Errc::BadParam, "torus needs 0 < minor < major");

    RegionSpec r;
    r.dim = 3;
    r.label = "torus_solid";
    r.bbox = cube_box(3, major + 2.0 * minor);
    const auto sd = [major, minor](const Vec& x) {
        const double rho = std::sqrt(x[0] * x[0] + x[1] * x[1]);
        const double d = std::sqrt((rho - major) * (rho - major) + x[2] * x[2]);
        return d - minor;
    };
    r.signed_dist = sd;
    r.inside = [sd](const Vec& x) { return sd(x) < 0.0; };
    r.complement_distance = [sd](const Vec& x) { return std::max(-sd(x), 0.0); };
    return r;
}

namespace {

// Distance from x to the "notch" sphere of a two-ball union: the (N-2)-sphere
// where the two boundary spheres intersect. Center q on the center line,
// radius rho, living in the hyperplane with normal n.
struct NotchSphere {
    Vec q;
    Vec n; // unit, from c1 toward c2
    double rho;
};

double dist_to_notch(const NotchSphere& ns, const Vec& x) {
    const Vec d = sub(x, ns.q);
    const double axial = dot(d, ns.n);
    const Vec perp = axpy(d, -axial, ns.n);
    const double radial = norm(perp) - ns.rho;
    return std::sqrt(axial * axial + radial * radial);
}

} // namespace

RegionSpec union_balls_region(int dim, Vec c1, double r1, Vec c2, double r2) {
    require(r1 > 0.0 && r2 > 0.0, Errc::BadParam, "union_balls radii must be positive");
    require(static_cast<int>(c1.size()) == dim && static_cast<int>(c2.size()) == dim,
            Errc::BadParam, "union_balls center dimension mismatch");
    const double sep = dist(c1, c2);
    require(sep < r1 + r2, Errc::BadParam, "union_balls: balls are disjoint");
    require(sep + r1 > r2 && sep + r2 > r1, Errc::BadParam, "union_balls: one ball contains the other");
    require(sep > 0.0, Errc::BadParam, "union_balls: centers coincide");

    // Intersection sphere of the two boundary spheres.
    NotchSphere ns;
    ns.n = normalized(sub(c2, c1));
    const double t = (sep * sep + r1 * r1 - r2 * r2) / (2.0 * sep);
    ns.q = axpy(c1, t, ns.n);
    ns.rho = std::sqrt(std::max(r1 * r1 - t * t, 0.0));

    RegionSpec r;
    r.dim = dim;
    r.label = "union_balls";
    {
        Vec lo(static_cast<std::size_t>(dim)), hi(static_cast<std::size_t>(dim));
        for (int i = 0; i < dim; ++i) {
            lo[static_cast<std::size_t>(i)] = std::min(c1[static_cast<std::size_t>(i)] - r1, c2[static_cast<std::size_t>(i)] - r2) - 0.5;
            hi[static_cast<std::size_t>(i)] = std::max(c1[static_cast<std::size_t>(i)] + r1, c2[static_cast<std::size_t>(i)] + r2) + 0.5;
        }
        r.bbox = Box{lo, hi};
    }
    r.inside = [c1, r1, c2, r2](const Vec& x) { return dist(x, c1) < r1 || dist(x, c2) < r2; };
    // min of the two signed distances: exact sign everywhere, exact value outside
    r.signed_dist = [c1, r1, c2, r2](const Vec& x) {
        return std::min(dist(x, c1) - r1, dist(x, c2) - r2);
    };
    // Exact distance to the complement: nearest boundary point lies either on
    // the radial projection to one sphere (if that projection is not eaten by
    // the other ball) or on the notch sphere.
    r.complement_distance = [c1, r1, c2, r2, ns](const Vec& x) {
        const double d1 = dist(x, c1), d2 = dist(x, c2);
        if (d1 >= r1 && d2 >= r2) return 0.0;
        double best = 1e300;
        if (d1 > 1e-12) {
            const Vec p = axpy(c1, r1 / d1, sub(x, c1));
            if (dist(p, c2) >= r2) best = std::min(best, std::fabs(r1 - d1));
        } else {
            best = std::min(best, r1); // at the center the whole sphere is candidate
        }
        if (d2 > 1e-12) {
            const Vec p = axpy(c2, r2 / d2, sub(x, c2));
            if (dist(p, c1) >= r1) best = std::min(best, std::fabs(r2 - d2));
        } else {
            best = std::min(best, r2);
        }
        best = std::min(best, dist_to_notch(ns, x));
        return best;
    };
    return r;
}

RegionSpec l_shape_region(int dim, double half_width) {
    require(half_width > 0.0, Errc::BadParam, "l_shape half_width must be positive");
    require(dim >= 2, Errc::BadParam, "l_shape needs dimension >= 2");
    const double w = half_width;

    RegionSpec r;
    r.dim = dim;
    r.label = "l_shape";
    r.bbox = cube_box(dim, 1.5 * w);
    const auto in_cube = [w, dim](const Vec& x) {
        for (int i = 0; i < dim; ++i)
            if (std::fabs(x[static_cast<std::size_t>(i)]) >= w) return false;
        return true;
    };
    r.inside = [in_cube](const Vec& x) {
        return in_cube(x) && !(x[0] >= 0.0 && x[1] >= 0.0);
    };
    r.signed_dist = [w, dim](const Vec& x) {
        // outer cube part, Chebyshev style (sign-exact)
        double cube = -1e300;
        for (int i = 0; i < dim; ++i)
            cube = std::max(cube, std::fabs(x[static_cast<std::size_t>(i)]) - w);
        // distance to the removed closed quadrant {x1 >= 0, x2 >= 0}
        const double q1 = std::min(x[0], 0.0), q2 = std::min(x[1], 0.0);
        const double to_quad = std::sqrt(q1 * q1 + q2 * q2);
        if (to_quad > 0.0) return std::max(cube, -to_quad);
        // on or in the quadrant: nearest membership flip is across a wall
        return std::max(cube, std::min(x[0], x[1]));
    };
    r.complement_distance = [w, dim](const Vec& x) {
        double to_cube_c = 1e300;
        for (int i = 0; i < dim; ++i)
            to_cube_c = std::min(to_cube_c, w - std::fabs(x[static_cast<std::size_t>(i)]));
        const double q1 = std::min(x[0], 0.0), q2 = std::min(x[1], 0.0);
        const double to_quad = std::sqrt(q1 * q1 + q2 * q2);
        const double d = std::min(to_cube_c, to_quad);
        return std::max(d, 0.0);
    };
    return r;
}

RegionSpec epigraph_region(const Expression& g, Box bbox) {
    const int dim = g.dim() + 1;
    require(bbox.dim() == dim, Errc::BadParam, "epigraph bbox dimension mismatch");
    const auto expr = std::make_shared<Expression>(g);

    RegionSpec r;
    r.dim = dim;
    r.label = "graph_epigraph";
    r.bbox = bbox;
    r.inside = [expr, dim](const Vec& x) {
        const Vec xp(x.begin(), x.end() - 1);
        return x[static_cast<std::size_t>(dim - 1)] > expr->eval(xp);
    };
    r.chart_at = [expr, dim](const Vec& x) -> std::optional<Chart> {
        Chart c;
        c.base = zeros(dim);
        c.rotation = Mat::identity(dim);
        c.height = [expr](const Vec& xp) { return expr->eval(xp); };
        (void)x;
        return c;
    };
    return r;
}

RegionSpec sdf_region(const Expression& sd, Box bbox) {
    const int dim = sd.dim();
    require(bbox.dim() == dim, Errc::BadParam, "sdf bbox dimension mismatch");
    const auto expr = std::make_shared<Expression>(sd);

    RegionSpec r;
    r.dim = dim;
    r.label = "sdf_expr";
    r.bbox = bbox;
    r.signed_dist = [expr](const Vec& x) { return expr->eval(x); };
    r.inside = [expr](const Vec& x) { return expr->eval(x) < 0.0; };
    return r;
}

RegionSpec complement_region(const RegionSpec& inner, Box bbox) {
    const auto in = std::make_shared<RegionSpec>(inner);
    RegionSpec r;
    r.dim = inner.dim;
    r.label = "complement(" + inner.label + ")";
    r.bbox = bbox.dim() == inner.dim ? bbox : inner.bbox;
    r.inside = [in](const Vec& x) { return !in->inside(x); };
    if (inner.signed_dist) r.signed_dist = [in](const Vec& x) { return -in->signed_dist(x); };
    return r;
}

RegionSpec box_region(Box box) {
    RegionSpec r;
    r.dim = box.dim();
    r.label = "box";
    r.bbox = box.inflated(0.25 * box.min_edge());
    const Box b = box;
    r.inside = [b](const Vec& x) {
        for (std::size_t i = 0; i < b.lo.size(); ++i)
            if (x[i] <= b.lo[i] || x[i] >= b.hi[i]) return false;
        return true;
    };
    r.signed_dist = [b](const Vec& x) {
        double m = -1e300;
        for (std::size_t i = 0; i < b.lo.size(); ++i)
            m = std::max(m, std::max(b.lo[i] - x[i], x[i] - b.hi[i]));
        return m;
    };
    r.complement_distance = [b](const Vec& x) {
        double m = 1e300;
        for (std::size_t i = 0; i < b.lo.size(); ++i)
            m = std::min(m, std::min(x[i] - b.lo[i], b.hi[i] - x[i]));
        return std::max(m, 0.0);
    };
    return r;
}

std::vector<std::string> builtin_region_names() {
    return {"ball", "halfspace", "slab", "torus_solid", "union_balls", "l_shape",
            "graph_epigraph", "sdf_expr", "complement", "box"};
}

} // namespace vlab
