#pragma once

#include <cmath>
#include <vector>

#include "vlab/errors.hpp"
#include "vlab/rng.hpp"

namespace vlab {

using Vec = std::vector<double>;

double dot(const Vec& a, const Vec& b);
double norm(const Vec& a);
double dist(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scaled(const Vec& a, double t);
// a + t * d
Vec axpy(const Vec& a, double t, const Vec& d);
Vec normalized(const Vec& a);
Vec unit(int dim, int axis);
Vec zeros(int dim);
bool all_finite(const Vec& a);

// Dense matrix, row-major. Square in most uses; rectangular for frames
// (rows x cols, columns are the frame vectors).
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<double> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0.0) {}

    static Mat identity(int n);

    double& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    double at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    Vec col(int j) const;
    void set_col(int j, const Vec& v);

    Vec apply(const Vec& x) const;           // A x
    Vec apply_transpose(const Vec& x) const; // A^T x
    Mat times(const Mat& other) const;
    Mat transposed() const;

    double max_abs() const;
};

// Modified Gram-Schmidt on the columns; returns false if rank-deficient.
bool orthonormalize_columns(Mat& m, double tol = 1e-12);

// Orthonormal basis whose last column is the given unit vector.
Mat frame_with_last_axis(const Vec& unit_last);

// Orthonormal basis whose leading columns span the given (independent) set.
Mat frame_from_leading(int dim, const std::vector<Vec>& leading, Rng& rng);

Mat random_orthogonal(int dim, Rng& rng);
double max_orthogonality_defect(const Mat& m);

struct Box {
    Vec lo;
    Vec hi;

    int dim() const { return static_cast<int>(lo.size()); }
    bool contains(const Vec& x) const;
    bool contains_ball(const Vec& x, double r) const;
    Vec center() const;
    double min_edge() const;
    double max_edge() const;
    Box inflated(double margin) const;
    Box intersect(const Box& other) const;
};

Box cube_box(int dim, double half_width, const Vec& center = {});

} // namespace vlab
