#include "vlab/eigen.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "vlab/errors.hpp"

namespace vlab {

namespace {

double offdiag_frobenius(const double* a, int n) {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) s += 2.0 * a[i * n + j] * a[i * n + j];
    return std::sqrt(s);
}

} // namespace

double EigenDecomposition::reconstruction_residual(const SymMatrix& X) const {
    const int n = X.dim();
    double worst = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            double s = 0.0;
            for (int c = 0; c < n; ++c)
                s += values[static_cast<std::size_t>(c)] * vectors.at(i, c) * vectors.at(j, c);
            worst = std::max(worst, std::fabs(s - X(i, j)));
        }
    return worst;
}

EigenDecomposition eigenvalues_sorted(const SymMatrix& X) {
    require(X.finite(), Errc::NonFinite, "matrix has NaN or infinite entries");

    const int n = X.dim();
    std::array<double, 64> a{};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i * n + j)] = X(i, j);

    Mat v = Mat::identity(n);
    const double target = 1e-14 * X.frobenius();

    for (int sweep = 0; sweep < 50; ++sweep) {
        if (offdiag_frobenius(a.data(), n) <= target) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a[static_cast<std::size_t>(p * n + q)];
                if (apq == 0.0) continue;
                const double app = a[static_cast<std::size_t>(p * n + p)];
                const double aqq = a[static_cast<std::size_t>(q * n + q)];
                // Skip rotations that would only stir rounding noise.
                if (std::fabs(apq) <= 1e-300 ||
                    std::fabs(apq) <= 1e-18 * (std::fabs(app) + std::fabs(aqq)))
                    continue;

                const double theta = (aqq - app) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                for (int i = 0; i < n; ++i) {
                    const double aip = a[static_cast<std::size_t>(i * n + p)];
                    const double aiq = a[static_cast<std::size_t>(i * n + q)];
                    a[static_cast<std::size_t>(i * n + p)] = c * aip - s * aiq;
                    a[static_cast<std::size_t>(i * n + q)] = s * aip + c * aiq;
                }
                for (int j = 0; j < n; ++j) {
                    const double apj = a[static_cast<std::size_t>(p * n + j)];
                    const double aqj = a[static_cast<std::size_t>(q * n + j)];
                    a[static_cast<std::size_t>(p * n + j)] = c * apj - s * aqj;
                    a[static_cast<std::size_t>(q * n + j)] = s * apj + c * aqj;
                }
                for (int i = 0; i < n; ++i) {
                    const double vip = v.at(i, p);
                    const double viq = v.at(i, q);
                    v.at(i, p) = c * vip - s * viq;
                    v.at(i, q) = s * vip + c * viq;
                }
            }
        }
    }

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
        return a[static_cast<std::size_t>(i * n + i)] < a[static_cast<std::size_t>(j * n + j)];
    });

    EigenDecomposition d;
    d.values.resize(static_cast<std::size_t>(n));
    d.vectors = Mat(n, n);
    for (int c = 0; c < n; ++c) {
        const int src = order[static_cast<std::size_t>(c)];
        d.values[static_cast<std::size_t>(c)] = a[static_cast<std::size_t>(src * n + src)];
        d.vectors.set_col(c, v.col(src));
    }
    return d;
}

} // namespace vlab
