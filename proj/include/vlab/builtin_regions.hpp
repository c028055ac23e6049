#pragma once

#include <vector>

#include "vlab/expression.hpp"
#include "vlab/region.hpp"

namespace vlab {

RegionSpec ball_region(int dim, double radius, Vec center = {});
// { x : normal . x > offset }, normal need not be unit
RegionSpec halfspace_region(int dim, Vec normal, double offset = 0.0);
// { x : lo < normal . x < hi }
RegionSpec slab_region(int dim, Vec normal, double lo, double hi);
// solid torus about the x3 axis, dim must be 3, minor < major
RegionSpec torus_region(double major, double minor);
// union of two overlapping balls; rejects disjoint or nested pairs
RegionSpec union_balls_region(int dim, Vec c1, double r1, Vec c2, double r2);
// open cube (-w, w)^N minus the closed quadrant { x1 >= 0, x2 >= 0 }
RegionSpec l_shape_region(int dim, double half_width = 1.0);
// { x : x_N > g(x1..x_{N-1}) }, g an expression in dim-1 variables
RegionSpec epigraph_region(const Expression& g, Box bbox);
// { x : sd(x) < 0 } for an expression-defined level-set function
RegionSpec sdf_region(const Expression& sd, Box bbox);
RegionSpec complement_region(const RegionSpec& r, Box bbox);
RegionSpec box_region(Box box);

std::vector<std::string> builtin_region_names();

} // namespace vlab
