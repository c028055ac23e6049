#include "vlab/cylinder.hpp"

#include <cmath>

#include "vlab/errors.hpp"

namespace vlab {

namespace {

double halton(long index, int base) {
    double f = 1.0, r = 0.0;
    long i = index;
    while (i > 0) {
        f /= base;
        r += f * (i % base);
        i /= base;
    }
    return r;
}

constexpr int kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19};

// Acklam's rational approximation of the standard normal quantile; plenty for
// spreading low-discrepancy points over the sphere.
double inverse_normal_cdf(double p) {
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425, phigh = 1.0 - plow;
    if (p < plow) {
        const double q = std::sqrt(-2.0 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    if (p > phigh) {
        const double q = std::sqrt(-2.0 * std::log(1.0 - p));
        return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    const double q = p - 0.5, r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

} // namespace

std::vector<Vec> unit_sphere_points(int m, int count, int halton_offset) {
    std::vector<Vec> pts;
    if (m == 1) {
        pts.push_back({-1.0});
        pts.push_back({1.0});
        return pts;
    }
    for (int i = 0; i < m; ++i) {
        pts.push_back(unit(m, i));
        pts.push_back(scaled(unit(m, i), -1.0));
    }
    long index = 1 + halton_offset;
    while (static_cast<int>(pts.size()) < count) {
        Vec v(static_cast<std::size_t>(m));
        double n2 = 0.0;
        for (int i = 0; i < m; ++i) {
            double u = halton(index, kPrimes[i]);
            u = std::min(std::max(u, 1e-12), 1.0 - 1e-12);
            v[static_cast<std::size_t>(i)] = inverse_normal_cdf(u);
            n2 += v[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(i)];
        }
        ++index;
        if (n2 < 1e-12) continue;
        pts.push_back(scaled(v, 1.0 / std::sqrt(n2)));
    }
    return pts;
}

std::vector<Vec> unit_ball_points(int m, int count, bool closed, int halton_offset) {
    std::vector<Vec> pts;
    pts.push_back(zeros(m));
    if (m == 1) {
        // evenly spaced segment sample
        const int n = std::max(count, 3);
        for (int i = 0; i < n; ++i) {
            const double t = closed ? (-1.0 + 2.0 * i / (n - 1.0)) : (-1.0 + 2.0 * (i + 1.0) / (n + 1.0));
            if (t != 0.0) pts.push_back({t});
        }
        return pts;
    }
    const int shells = 4;
    const int per_shell = std::max((count - 1) / shells, 2 * m);
    int shell_offset = halton_offset;
    for (int s = 1; s <= shells; ++s) {
        const double r = closed ? static_cast<double>(s) / shells
                                : static_cast<double>(s) / (shells + 1);
        for (const Vec& dir : unit_sphere_points(m, per_shell, shell_offset))
            pts.push_back(scaled(dir, r));
        shell_offset += 37; // decorrelate shells
    }
    return pts;
}

Cylinder Cylinder::translated(const Vec& shift) const {
    Cylinder c = *this;
    c.center = add(center, shift);
    return c;
}

std::vector<Vec> cylinder_points(const Cylinder& c, CylinderPart part, int density) {
    require(density >= 2, Errc::BadParam, "cylinder sampling density must be >= 2");
    const int n = c.dim();
    const int k = c.split_k;
    const int m = n - k;
    require(k >= 1 && k < n, Errc::BadParam, "cylinder split must satisfy 1 <= k < N");
    require(c.a > 0.0 && c.b > 0.0, Errc::BadParam, "cylinder radii must be positive");
    require(max_orthogonality_defect(c.frame) <= 1e-12, Errc::BadParam,
            "cylinder frame must be orthogonal");

    const auto sphere_count = [&](int d) {
        if (d == 1) return 2;
        return std::min(std::max(2 * d + density * density, 8), 64);
    };
    const auto ball_count = [&](int d) {
        if (d == 1) return 2 * density + 1;
        return std::min(std::max(1 + 2 * d * density, 9), 96);
    };

    const auto combine = [&](const std::vector<Vec>& first, const std::vector<Vec>& second,
                             std::vector<Vec>& out) {
        Vec local(static_cast<std::size_t>(n));
        for (const Vec& p : first)
            for (const Vec& q : second) {
                for (int i = 0; i < k; ++i) local[static_cast<std::size_t>(i)] = c.a * p[static_cast<std::size_t>(i)];
                for (int j = 0; j < m; ++j) local[static_cast<std::size_t>(k + j)] = c.b * q[static_cast<std::size_t>(j)];
                out.push_back(c.to_world(local));
            }
    };

    std::vector<Vec> out;
    switch (part) {
        case CylinderPart::Interior:
            combine(unit_ball_points(k, ball_count(k), false, 3),
                    unit_ball_points(m, ball_count(m), false, 5), out);
            break;
        case CylinderPart::Lateral:
            combine(unit_sphere_points(k, sphere_count(k), 11),
                    unit_ball_points(m, ball_count(m), true, 13), out);
            break;
        case CylinderPart::Closure: {
            // lateral + opposite boundary part + interior, so the lateral and
            // interior samples are subsets by construction
            combine(unit_sphere_points(k, sphere_count(k), 11),
                    unit_ball_points(m, ball_count(m), true, 13), out);
            combine(unit_ball_points(k, ball_count(k), true, 17),
                    unit_sphere_points(m, sphere_count(m), 19), out);
            combine(unit_ball_points(k, ball_count(k), false, 3),
                    unit_ball_points(m, ball_count(m), false, 5), out);
            break;
        }
    }
    return out;
}

} // namespace vlab
