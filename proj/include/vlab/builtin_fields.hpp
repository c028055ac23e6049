#pragma once

#include "vlab/expression.hpp"
#include "vlab/region.hpp"
#include "vlab/scalar_field.hpp"

namespace vlab {

struct FieldPair {
    ScalarField u;
    ScalarField f;
};

// u(x) = (R^2 - |x|^2)^alpha inside the R-ball, 0 outside (alpha > 2 keeps it
// C^2), paired with the forcing f(x) = -2 alpha (R^2 - |x|^2)^(alpha-1) inside
// and 0 outside, so that the k-th Hessian eigenvalue of u equals f for k < N.
FieldPair radial_bump(int dim, double R, double alpha);

// u(x) = sum_{i<=k} |x_i|^alpha with alpha in (0,1) and N >= 2k, paired with
// the clamped forcing f(x) = alpha (alpha-1) (max_i min(|x_i|,1))^(alpha-2)
// off the coordinate hyperplanes and 0 on them.
FieldPair abs_power_sum(int dim, int k, double alpha);

ScalarField field_from_expression(const Expression& e, Box domain);
ScalarField zero_field(int dim, Box domain);

// v(x) = dist(x, complement of U): exact closed forms where the region
// carries them, sampled complement search with bisection refinement
// otherwise.
ScalarField distance_field(const RegionSpec& U);

// v = 1 on U, 0 elsewhere; nonsmooth locus flags a band around the boundary.
ScalarField indicator_field(const RegionSpec& U);

// positivity set { x : u(x) > tol } as a region
RegionSpec threshold_region(const ScalarField& u, double tol, Box bbox);

// translated copy: u'(x) = u(x - shift)
ScalarField translated_field(const ScalarField& u, const Vec& shift);

} // namespace vlab
