#include "vlab/geom.hpp"

#include <algorithm>
#include <cstddef>

namespace vlab {

double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

double dist(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

Vec add(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec scaled(const Vec& a, double t) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * t;
    return r;
}

Vec axpy(const Vec& a, double t, const Vec& d) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + t * d[i];
    return r;
}

Vec normalized(const Vec& a) {
    const double n = norm(a);
    require(n > 0.0, Errc::BadParam, "cannot normalize the zero vector");
    return scaled(a, 1.0 / n);
}

Vec unit(int dim, int axis) {
    Vec r(static_cast<std::size_t>(dim), 0.0);
    r[static_cast<std::size_t>(axis)] = 1.0;
    return r;
}

Vec zeros(int dim) { return Vec(static_cast<std::size_t>(dim), 0.0); }

bool all_finite(const Vec& a) {
    for (double v : a)
        if (!std::isfinite(v)) return false;
    return true;
}

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

Vec Mat::col(int j) const {
    Vec v(static_cast<std::size_t>(rows));
    for (int i = 0; i < rows; ++i) v[static_cast<std::size_t>(i)] = at(i, j);
    return v;
}

void Mat::set_col(int j, const Vec& v) {
    for (int i = 0; i < rows; ++i) at(i, j) = v[static_cast<std::size_t>(i)];
}

Vec Mat::apply(const Vec& x) const {
    Vec r(static_cast<std::size_t>(rows), 0.0);
    for (int i = 0; i < rows; ++i) {
        double s = 0.0;
        for (int j = 0; j < cols; ++j) s += at(i, j) * x[static_cast<std::size_t>(j)];
        r[static_cast<std::size_t>(i)] = s;
    }
    return r;
}

Vec Mat::apply_transpose(const Vec& x) const {
    Vec r(static_cast<std::size_t>(cols), 0.0);
    for (int j = 0; j < cols; ++j) {
        double s = 0.0;
        for (int i = 0; i < rows; ++i) s += at(i, j) * x[static_cast<std::size_t>(i)];
        r[static_cast<std::size_t>(j)] = s;
    }
    return r;
}

Mat Mat::times(const Mat& other) const {
    Mat r(rows, other.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            const double v = at(i, k);
            if (v == 0.0) continue;
            for (int j = 0; j < other.cols; ++j) r.at(i, j) += v * other.at(k, j);
        }
    return r;
}

Mat Mat::transposed() const {
    Mat r(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
    return r;
}

double Mat::max_abs() const {
    double m = 0.0;
    for (double v : a) m = std::max(m, std::fabs(v));
    return m;
}

bool orthonormalize_columns(Mat& m, double tol) {
    for (int j = 0; j < m.cols; ++j) {
        Vec v = m.col(j);
        for (int p = 0; p < j; ++p) {
            const Vec u = m.col(p);
            const double c = dot(u, v);
            for (int i = 0; i < m.rows; ++i) v[static_cast<std::size_t>(i)] -= c * u[static_cast<std::size_t>(i)];
        }
        const double n = norm(v);
        if (n < tol) return false;
        m.set_col(j, scaled(v, 1.0 / n));
    }
    return true;
}

Mat frame_with_last_axis(const Vec& unit_last) {
    const int n = static_cast<int>(unit_last.size());
    // Householder reflection mapping e_n to the given direction keeps the
    // construction deterministic and well-conditioned.
    Vec w = unit_last;
    w[static_cast<std::size_t>(n - 1)] += (w[static_cast<std::size_t>(n - 1)] >= 0.0 ? 1.0 : -1.0);
    const double wn2 = dot(w, w);
    Mat H = Mat::identity(n);
    if (wn2 > 1e-300) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                H.at(i, j) -= 2.0 * w[static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(j)] / wn2;
    }
    // Column n-1 of H is now +/- unit_last; fix the sign.
    Vec last = H.col(n - 1);
    if (dot(last, unit_last) < 0.0)
        for (int i = 0; i < n; ++i) H.at(i, n - 1) = -H.at(i, n - 1);
    return H;
}

Mat frame_from_leading(int dim, const std::vector<Vec>& leading, Rng& rng) {
    Mat m(dim, dim);
    int j = 0;
    for (const Vec& v : leading) m.set_col(j++, v);
    Rng local = rng.fork("frame_fill");
    int attempts = 0;
    while (j < dim) {
        Vec v(static_cast<std::size_t>(dim));
        for (double& x : v) x = local.normal();
        Mat trial = m;
        trial.set_col(j, v);
        Mat sub(dim, j + 1);
        for (int c = 0; c <= j; ++c) sub.set_col(c, trial.col(c));
        if (orthonormalize_columns(sub)) {
            for (int c = 0; c <= j; ++c) m.set_col(c, sub.col(c));
            ++j;
        }
        require(++attempts < 200, Errc::BadParam, "degenerate leading frame");
    }
    return m;
}

Mat random_orthogonal(int dim, Rng& rng) {
    while (true) {
        Mat m(dim, dim);
        for (double& v : m.a) v = rng.normal();
        if (orthonormalize_columns(m)) return m;
    }
}

double max_orthogonality_defect(const Mat& m) {
    double worst = 0.0;
    for (int i = 0; i < m.cols; ++i)
        for (int j = i; j < m.cols; ++j) {
            const double g = dot(m.col(i), m.col(j)) - (i == j ? 1.0 : 0.0);
            worst = std::max(worst, std::fabs(g));
        }
    return worst;
}

bool Box::contains(const Vec& x) const {
    for (std::size_t i = 0; i < lo.size(); ++i)
        if (x[i] < lo[i] || x[i] > hi[i]) return false;
    return true;
}

bool Box::contains_ball(const Vec& x, double r) const {
    for (std::size_t i = 0; i < lo.size(); ++i)
        if (x[i] - r < lo[i] || x[i] + r > hi[i]) return false;
    return true;
}

Vec Box::center() const {
    Vec c(lo.size());
    for (std::size_t i = 0; i < lo.size(); ++i) c[i] = 0.5 * (lo[i] + hi[i]);
    return c;
}

double Box::min_edge() const {
    double e = hi[0] - lo[0];
    for (std::size_t i = 1; i < lo.size(); ++i) e = std::min(e, hi[i] - lo[i]);
    return e;
}

double Box::max_edge() const {
    double e = hi[0] - lo[0];
    for (std::size_t i = 1; i < lo.size(); ++i) e = std::max(e, hi[i] - lo[i]);
    return e;
}

Box Box::inflated(double margin) const {
    Box b = *this;
    for (std::size_t i = 0; i < lo.size(); ++i) {
        b.lo[i] -= margin;
        b.hi[i] += margin;
    }
    return b;
}

Box Box::intersect(const Box& other) const {
    Box b = *this;
    for (std::size_t i = 0; i < lo.size(); ++i) {
        b.lo[i] = std::max(lo[i], other.lo[i]);
        b.hi[i] = std::min(hi[i], other.hi[i]);
    }
    return b;
}

Box cube_box(int dim, double half_width, const Vec& center) {
    Vec c = center.empty() ? zeros(dim) : center;
    Box b;
    b.lo.resize(static_cast<std::size_t>(dim));
    b.hi.resize(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) {
        b.lo[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i)] - half_width;
        b.hi[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i)] + half_width;
    }
    return b;
}

} // namespace vlab
