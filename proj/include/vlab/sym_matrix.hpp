#pragma once

#include <vector>

#include "vlab/geom.hpp"

namespace vlab {

// Dense N x N real symmetric matrix, 2 <= N <= 8. Only the upper triangle is
// stored, so the reconstruction is exactly symmetric by construction.
class SymMatrix {
public:
    explicit SymMatrix(int n);

    static SymMatrix zero(int n) { return SymMatrix(n); }
    static SymMatrix identity(int n);
    static SymMatrix diag(const Vec& d);
    static SymMatrix outer(const Vec& p); // p p^T
    // sum_i d_i v_i v_i^T over the columns of the frame
    static SymMatrix from_frame_diag(const Mat& frame, const Vec& d);

    int dim() const { return n_; }

    double operator()(int i, int j) const { return tri_[idx(i, j)]; }
    void set(int i, int j, double v) { tri_[idx(i, j)] = v; }
    void add(int i, int j, double v) { tri_[idx(i, j)] += v; }

    SymMatrix& add_scaled_identity(double t);
    SymMatrix& add_scaled(const SymMatrix& other, double t);
    SymMatrix scaled(double t) const;
    SymMatrix plus(const SymMatrix& other) const;

    Vec apply(const Vec& x) const;
    double quad(const Vec& d) const; // d^T X d

    double frobenius() const;
    double max_abs() const;
    bool finite() const;

    const std::vector<double>& packed() const { return tri_; }

private:
    std::size_t idx(int i, int j) const {
        if (i > j) std::swap(i, j);
        return static_cast<std::size_t>(i) * n_ - static_cast<std::size_t>(i) * (i - 1) / 2 +
               static_cast<std::size_t>(j - i);
    }

    int n_;
    std::vector<double> tri_;
};

} // namespace vlab
