#pragma once

#include <functional>
#include <optional>
#include <string>

#include "vlab/geom.hpp"
#include "vlab/sym_matrix.hpp"

namespace vlab {

// Local graph description of the boundary near a base point: in chart
// coordinates (world = base + rotation * local) the region is
// { local_N > height(local') } with the inward normal along +e_N.
struct Chart {
    Vec base;
    Mat rotation;
    std::function<double(const Vec&)> height;
    std::function<Vec(const Vec&)> height_grad;      // optional
    std::function<SymMatrix(const Vec&)> height_hess; // optional
};

// Open set via a membership predicate plus optional analytic extras. The
// predicates must be pure; everything downstream assumes they are safe to
// call concurrently.
struct RegionSpec {
    int dim = 0;
    Box bbox;
    std::string label;
    std::function<bool(const Vec&)> inside;
    // negative strictly inside, positive strictly outside
    std::function<double(const Vec&)> signed_dist;
    // exact dist(x, complement of U) where known in closed form
    std::function<double(const Vec&)> complement_distance;
    std::function<std::optional<Chart>(const Vec&)> chart_at;
};

RegionSpec transformed_region(const RegionSpec& r, const Mat& rotation, const Vec& shift);

} // namespace vlab
