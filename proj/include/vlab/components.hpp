#pragma once

#include <vector>

#include "vlab/region.hpp"
#include "vlab/rng.hpp"
#include "vlab/scalar_field.hpp"

namespace vlab {

// Face-adjacency flood fill over the grid points inside U. Components are
// sorted by size descending, ties by lexicographic seed point.
std::vector<std::vector<Vec>> connected_components(const RegionSpec& U, const GridSpec& grid);

struct ConvexityResult {
    bool convex = true;
    Vec x, y, midpoint; // witness triple when not convex
};

// Samples point pairs from the component and walks the segments; a failing
// segment point is re-verified at 4x density before being reported.
ConvexityResult is_component_convex(const std::vector<Vec>& component, const RegionSpec& U,
                                    int trials, Rng& rng);

} // namespace vlab
