#pragma once

#include <vector>

#include "vlab/geom.hpp"

namespace vlab {

// Rigid image of closed_ball^k(a) x closed_ball^(N-k)(b). The first split_k
// frame columns span the "a" factor. The lateral boundary is
// sphere^k(a) x closed_ball^(N-k)(b).
struct Cylinder {
    int split_k = 1;
    double a = 1.0;
    double b = 1.0;
    Vec center;
    Mat frame;

    int dim() const { return frame.rows; }
    Vec to_world(const Vec& local) const { return add(center, frame.apply(local)); }
    Vec to_local(const Vec& world) const { return frame.apply_transpose(sub(world, center)); }
    Cylinder translated(const Vec& shift) const;
};

enum class CylinderPart { Interior, Lateral, Closure };

// Deterministic low-discrepancy sample of the requested part, generated in
// canonical coordinates and mapped through the rigid frame, so rigid
// invariance holds exactly. density is samples per radius (>= 2).
std::vector<Vec> cylinder_points(const Cylinder& c, CylinderPart part, int density);

// Deterministic point sets on the unit sphere / unit ball in m dimensions.
// Sphere sets always include the +/- coordinate poles; closed ball sets
// include the center and the full-radius shell, open ones stay strictly
// inside.
std::vector<Vec> unit_sphere_points(int m, int count, int halton_offset);
std::vector<Vec> unit_ball_points(int m, int count, bool closed, int halton_offset);

} // namespace vlab
