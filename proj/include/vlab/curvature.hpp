#pragma once

#include <vector>

#include "vlab/region.hpp"
#include "vlab/scalar_field.hpp"
#include "vlab/sym_matrix.hpp"

namespace vlab {

// Principal curvatures at a boundary point, sorted nondecreasing, with the
// convention fixed so a ball interior gets kappa_i = +1/R everywhere. The
// tangent frame columns pair with the kappas.
struct PrincipalCurvatures {
    Vec base;
    Vec kappas;
    Mat tangent_frame;
};

// Requires x within 1e-6 of the boundary and a twice-differentiable local
// description (signed distance or chart). Throws NotOnBoundary / NotSmooth.
PrincipalCurvatures principal_curvatures(const RegionSpec& U, const Vec& x, double fd_step = 1e-4);

// Grid-edge sign changes bisected onto the boundary, parameter tolerance 1e-9.
std::vector<Vec> boundary_sample(const RegionSpec& U, const GridSpec& grid);

} // namespace vlab
