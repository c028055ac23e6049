#include "vlab/sym_matrix.hpp"

#include <algorithm>
#include <cmath>

#include "vlab/errors.hpp"

namespace vlab {

SymMatrix::SymMatrix(int n) : n_(n) {
    require(n >= 2 && n <= 8, Errc::BadParam, "SymMatrix dimension must be in [2, 8]");
    tri_.assign(static_cast<std::size_t>(n) * (n + 1) / 2, 0.0);
}

SymMatrix SymMatrix::identity(int n) {
    SymMatrix m(n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1.0);
    return m;
}

SymMatrix SymMatrix::diag(const Vec& d) {
    SymMatrix m(static_cast<int>(d.size()));
    for (int i = 0; i < m.n_; ++i) m.set(i, i, d[static_cast<std::size_t>(i)]);
    return m;
}

SymMatrix SymMatrix::outer(const Vec& p) {
    SymMatrix m(static_cast<int>(p.size()));
    for (int i = 0; i < m.n_; ++i)
        for (int j = i; j < m.n_; ++j)
            m.set(i, j, p[static_cast<std::size_t>(i)] * p[static_cast<std::size_t>(j)]);
    return m;
}

SymMatrix SymMatrix::from_frame_diag(const Mat& frame, const Vec& d) {
    SymMatrix m(frame.rows);
    for (int c = 0; c < static_cast<int>(d.size()); ++c) {
        const double dc = d[static_cast<std::size_t>(c)];
        if (dc == 0.0) continue;
        for (int i = 0; i < m.n_; ++i)
            for (int j = i; j < m.n_; ++j) m.add(i, j, dc * frame.at(i, c) * frame.at(j, c));
    }
    return m;
}

SymMatrix& SymMatrix::add_scaled_identity(double t) {
    for (int i = 0; i < n_; ++i) add(i, i, t);
    return *this;
}

SymMatrix& SymMatrix::add_scaled(const SymMatrix& other, double t) {
    for (std::size_t i = 0; i < tri_.size(); ++i) tri_[i] += t * other.tri_[i];
    return *this;
}

SymMatrix SymMatrix::scaled(double t) const {
    SymMatrix m = *this;
    for (double& v : m.tri_) v *= t;
    return m;
}

SymMatrix SymMatrix::plus(const SymMatrix& other) const {
    SymMatrix m = *this;
    m.add_scaled(other, 1.0);
    return m;
}

Vec SymMatrix::apply(const Vec& x) const {
    Vec r(static_cast<std::size_t>(n_), 0.0);
    for (int i = 0; i < n_; ++i) {
        double s = 0.0;
        for (int j = 0; j < n_; ++j) s += (*this)(i, j) * x[static_cast<std::size_t>(j)];
        r[static_cast<std::size_t>(i)] = s;
    }
    return r;
}

double SymMatrix::quad(const Vec& d) const {
    double s = 0.0;
    for (int i = 0; i < n_; ++i) {
        s += (*this)(i, i) * d[static_cast<std::size_t>(i)] * d[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n_; ++j)
            s += 2.0 * (*this)(i, j) * d[static_cast<std::size_t>(i)] * d[static_cast<std::size_t>(j)];
    }
    return s;
}

double SymMatrix::frobenius() const {
    double s = 0.0;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) s += (*this)(i, j) * (*this)(i, j);
    return std::sqrt(s);
}

double SymMatrix::max_abs() const {
    double m = 0.0;
    for (double v : tri_) m = std::max(m, std::fabs(v));
    return m;
}

bool SymMatrix::finite() const {
    for (double v : tri_)
        if (!std::isfinite(v)) return false;
    return true;
}

} // namespace vlab
