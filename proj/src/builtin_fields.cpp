#include "vlab/builtin_fields.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "vlab/errors.hpp"

namespace vlab {

FieldPair radial_bump(int dim, double R, double alpha) {
    require(alpha > 2.0, Errc::BadParam, "radial_bump needs alpha > 2");
    require(R > 0.0, Errc::BadParam, "radial_bump needs R > 0");

    const Box domain = cube_box(dim, 2.0 * R);
    const double R2 = R * R;

    FieldPair pair;
    pair.u.dim = dim;
    pair.u.domain_box = domain;
    pair.u.eval = [R2, alpha](const Vec& x) {
        const double s = R2 - dot(x, x);
        return s > 0.0 ? std::pow(s, alpha) : 0.0;
    };
    pair.u.grad = [R2, alpha, dim](const Vec& x) {
        const double s = R2 - dot(x, x);
        if (s <= 0.0) return zeros(dim);
        return scaled(x, -2.0 * alpha * std::pow(s, alpha - 1.0));
    };
    pair.u.hess = [R2, alpha, dim](const Vec& x) {
        const double s = R2 - dot(x, x);
        SymMatrix H(dim);
        if (s <= 0.0) return H;
        const double g1 = -2.0 * alpha * std::pow(s, alpha - 1.0);
        const double g2 = 4.0 * alpha * (alpha - 1.0) * std::pow(s, alpha - 2.0);
        H = SymMatrix::outer(x).scaled(g2);
        H.add_scaled_identity(g1);
        return H;
    };
    // C^2 everywhere for alpha > 2, no nonsmooth locus.

    pair.f.dim = dim;
    pair.f.domain_box = domain;
    pair.f.eval = [R2, alpha](const Vec& x) {
        const double s = R2 - dot(x, x);
        return s > 0.0 ? -2.0 * alpha * std::pow(s, alpha - 1.0) : 0.0;
    };
    return pair;
}

FieldPair abs_power_sum(int dim, int k, double alpha) {
    require(alpha > 0.0 && alpha < 1.0, Errc::BadParam, "abs_power_sum needs alpha in (0,1)");
    require(k >= 1 && dim >= 2 * k, Errc::BadParam, "abs_power_sum needs N >= 2k");

    const Box domain = cube_box(dim, 1.0);

    const auto min_coord = [k](const Vec& x) {
        double m = 1e300;
        for (int i = 0; i < k; ++i) m = std::min(m, std::fabs(x[static_cast<std::size_t>(i)]));
        return m;
    };

    FieldPair pair;
    pair.u.dim = dim;
    pair.u.domain_box = domain;
    pair.u.eval = [k, alpha](const Vec& x) {
        double s = 0.0;
        for (int i = 0; i < k; ++i) s += std::pow(std::fabs(x[static_cast<std::size_t>(i)]), alpha);
        return s;
    };
    pair.u.grad = [k, alpha, dim, min_coord](const Vec& x) {
        require(min_coord(x) > 0.0, Errc::EvalDomain, "gradient undefined on a coordinate hyperplane");
        Vec g = zeros(dim);
        for (int i = 0; i < k; ++i) {
            const double xi = x[static_cast<std::size_t>(i)];
            g[static_cast<std::size_t>(i)] =
                alpha * std::pow(std::fabs(xi), alpha - 1.0) * (xi > 0.0 ? 1.0 : -1.0);
        }
        return g;
    };
    pair.u.hess = [k, alpha, dim, min_coord](const Vec& x) {
        require(min_coord(x) > 0.0, Errc::EvalDomain, "hessian undefined on a coordinate hyperplane");
        SymMatrix H(dim);
        for (int i = 0; i < k; ++i)
            H.set(i, i, alpha * (alpha - 1.0) * std::pow(std::fabs(x[static_cast<std::size_t>(i)]), alpha - 2.0));
        return H;
    };
    pair.u.nonsmooth = [min_coord](const Vec& x, double radius) { return min_coord(x) <= radius; };

    pair.f.dim = dim;
    pair.f.domain_box = domain;
    pair.f.eval = [k, alpha](const Vec& x) {
        bool prod_zero = false;
        double m = 0.0;
        for (int i = 0; i < k; ++i) {
            const double a = std::fabs(x[static_cast<std::size_t>(i)]);
            if (a == 0.0) prod_zero = true;
            m = std::max(m, std::min(a, 1.0));
        }
        if (prod_zero) return 0.0;
        return alpha * (alpha - 1.0) * std::pow(m, alpha - 2.0);
    };
    pair.f.nonsmooth = [min_coord](const Vec& x, double radius) { return min_coord(x) <= radius; };
    return pair;
}

ScalarField field_from_expression(const Expression& e, Box domain) {
    require(domain.dim() == e.dim(), Errc::BadParam, "expression/domain dimension mismatch");
    const auto expr = std::make_shared<Expression>(e);
    ScalarField f;
    f.dim = e.dim();
    f.domain_box = domain;
    f.eval = [expr](const Vec& x) { return expr->eval(x); };
    return f;
}

ScalarField zero_field(int dim, Box domain) {
    ScalarField f;
    f.dim = dim;
    f.domain_box = domain;
    f.eval = [](const Vec&) { return 0.0; };
    f.grad = [dim](const Vec&) { return zeros(dim); };
    f.hess = [dim](const Vec&) { return SymMatrix(dim); };
    return f;
}

namespace {

// Generic distance to the complement: expanding sampled search for complement
// points, then bisection along the connecting segments to land on the
// boundary, then a short pattern refinement around the best contact.
double sampled_complement_distance(const RegionSpec& U, const Vec& x) {
    const int n = U.dim;
    if (!U.inside(x)) return 0.0;

    const double max_r = U.bbox.max_edge();
    double r = std::max(1e-3 * max_r, 1e-9);
    const int per_axis = 7;

    std::vector<Vec> complement_hits;
    for (int round = 0; round < 24 && complement_hits.empty(); ++round, r *= 1.8) {
        GridSpec local;
        local.box = cube_box(n, r, x);
        local.resolution = per_axis;
        local.fd_step = r / 100.0;
        local.for_each([&](const Vec& p) {
            if (!U.inside(p)) complement_hits.push_back(p);
        });
    }
    require(!complement_hits.empty(), Errc::EmptyComplement,
            "no complement point found near the query");

    const auto bisect_to_boundary = [&](const Vec& outside) {
        double lo = 0.0, hi = 1.0; // x + t (outside - x); lo inside, hi outside
        const Vec d = sub(outside, x);
        for (int it = 0; it < 80; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (U.inside(axpy(x, mid, d)))
                lo = mid;
            else
                hi = mid;
        }
        return axpy(x, hi, d);
    };

    double best = 1e300;
    Vec best_pt;
    std::sort(complement_hits.begin(), complement_hits.end(),
              [&](const Vec& a, const Vec& b) { return dist(a, x) < dist(b, x); });
    const std::size_t take = std::min<std::size_t>(complement_hits.size(), 24);
    for (std::size_t i = 0; i < take; ++i) {
        const Vec b = bisect_to_boundary(complement_hits[i]);
        const double d = dist(b, x);
        if (d < best) {
            best = d;
            best_pt = b;
        }
    }

    // coordinate pattern refinement around the best contact
    double step = 0.25 * best;
    for (int round = 0; round < 40 && step > 1e-10 * (1.0 + best); ++round) {
        bool improved = false;
        for (int axis = 0; axis < n; ++axis) {
            for (int sgn = -1; sgn <= 1; sgn += 2) {
                Vec cand = best_pt;
                cand[static_cast<std::size_t>(axis)] += sgn * step;
                const Vec probe = U.inside(cand) ? bisect_to_boundary(axpy(x, 2.0, sub(cand, x)))
                                                 : bisect_to_boundary(cand);
                const double d = dist(probe, x);
                if (d < best) {
                    best = d;
                    best_pt = probe;
                    improved = true;
                }
            }
        }
        if (!improved) step *= 0.5;
    }
    return best;
}

} // namespace

ScalarField distance_field(const RegionSpec& U) {
    const auto region = std::make_shared<RegionSpec>(U);

    // sanity: the enlarged bounding box must contain complement points
    {
        bool found = false;
        GridSpec scan;
        scan.box = U.bbox.inflated(0.2 * U.bbox.max_edge());
        scan.resolution = 6;
        scan.fd_step = scan.box.min_edge() / 100.0;
        scan.for_each([&](const Vec& p) {
            if (!region->inside(p)) found = true;
        });
        require(found, Errc::EmptyComplement, "region complement is empty in the bounding box");
    }

    ScalarField v;
    v.dim = U.dim;
    v.domain_box = U.bbox.inflated(0.5 * U.bbox.max_edge());
    if (U.complement_distance) {
        v.eval = [region](const Vec& x) { return region->complement_distance(x); };
    } else {
        v.eval = [region](const Vec& x) { return sampled_complement_distance(*region, x); };
    }
    // Kinks live on the boundary seam and on the interior ridge where two
    // boundary pieces are equidistant; catch both with a value test plus a
    // second-derivative consistency probe.
    const auto eval_copy = v.eval;
    const int dim = U.dim;
    const Box domain = v.domain_box;
    v.nonsmooth = [eval_copy, dim, domain](const Vec& x, double radius) {
        const double val = eval_copy(x);
        if (val <= radius) return true; // within `radius` of the boundary seam
        ScalarField tmp;
        tmp.dim = dim;
        tmp.domain_box = domain;
        tmp.eval = eval_copy;
        const double h = std::max(1e-5, 0.05 * radius);
        try {
            const SymMatrix Ha = hessian_fd(tmp, x, h);
            const SymMatrix Hb = hessian_fd(tmp, x, 0.5 * h);
            double diff = 0.0;
            for (int i = 0; i < dim; ++i)
                for (int j = i; j < dim; ++j) diff = std::max(diff, std::fabs(Ha(i, j) - Hb(i, j)));
            return diff > 0.5 * (1.0 + Ha.max_abs());
        } catch (const Error&) {
            return true;
        }
    };
    return v;
}

ScalarField indicator_field(const RegionSpec& U) {
    const auto region = std::make_shared<RegionSpec>(U);
    ScalarField v;
    v.dim = U.dim;
    v.domain_box = U.bbox.inflated(0.5 * U.bbox.max_edge());
    v.eval = [region](const Vec& x) { return region->inside(x) ? 1.0 : 0.0; };
    v.nonsmooth = [region](const Vec& x, double radius) {
        if (region->signed_dist) return std::fabs(region->signed_dist(x)) <= radius;
        const bool ref = region->inside(x);
        const int n = region->dim;
        for (int axis = 0; axis < n; ++axis)
            for (int sgn = -1; sgn <= 1; sgn += 2) {
                Vec p = x;
                p[static_cast<std::size_t>(axis)] += sgn * radius;
                if (region->inside(p) != ref) return true;
            }
        // diagonal probes catch corners the axis probes miss
        Vec p = x;
        for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] += radius / std::sqrt(double(n));
        if (region->inside(p) != ref) return true;
        for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] -= 2.0 * radius / std::sqrt(double(n));
        return region->inside(p) != ref;
    };
    return v;
}

RegionSpec threshold_region(const ScalarField& u, double tol, Box bbox) {
    const auto field = std::make_shared<ScalarField>(u);
    RegionSpec r;
    r.dim = u.dim;
    r.label = "positivity_set";
    r.bbox = bbox.dim() == u.dim ? bbox : u.domain_box;
    r.inside = [field, tol](const Vec& x) {
        if (!field->domain_box.contains(x)) return false;
        return field->eval(x) > tol;
    };
    return r;
}

ScalarField translated_field(const ScalarField& u, const Vec& shift) {
    const auto inner = std::make_shared<ScalarField>(u);
    const Vec s = shift;
    ScalarField v;
    v.dim = u.dim;
    v.domain_box = Box{add(u.domain_box.lo, s), add(u.domain_box.hi, s)};
    v.eval = [inner, s](const Vec& x) { return inner->eval(sub(x, s)); };
    if (u.grad) v.grad = [inner, s](const Vec& x) { return inner->grad(sub(x, s)); };
    if (u.hess) v.hess = [inner, s](const Vec& x) { return inner->hess(sub(x, s)); };
    if (u.nonsmooth)
        v.nonsmooth = [inner, s](const Vec& x, double r) { return inner->nonsmooth(sub(x, s), r); };
    return v;
}

} // namespace vlab
