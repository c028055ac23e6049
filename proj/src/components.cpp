#include "vlab/components.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

#include "vlab/errors.hpp"

namespace vlab {

std::vector<std::vector<Vec>> connected_components(const RegionSpec& U, const GridSpec& grid) {
    grid.validate();
    require(grid.resolution >= 8, Errc::GridTooCoarse, "component extraction needs resolution >= 8");
    const int n = grid.dim();

    std::vector<Vec> pts;
    std::vector<std::int64_t> keys;
    std::unordered_map<std::int64_t, int> index_of;

    const auto key_of = [&](const std::vector<int>& idx) {
        std::int64_t k = 0;
        for (int i = 0; i < n; ++i) k = k * grid.resolution + idx[static_cast<std::size_t>(i)];
        return k;
    };

    {
        std::vector<int> idx(static_cast<std::size_t>(n), 0);
        Vec x(static_cast<std::size_t>(n));
        while (true) {
            for (int i = 0; i < n; ++i)
                x[static_cast<std::size_t>(i)] =
                    grid.box.lo[static_cast<std::size_t>(i)] + idx[static_cast<std::size_t>(i)] * grid.spacing(i);
            if (U.inside(x)) {
                index_of[key_of(idx)] = static_cast<int>(pts.size());
                pts.push_back(x);
                keys.push_back(key_of(idx));
            }
            int axis = n - 1;
            while (axis >= 0 && ++idx[static_cast<std::size_t>(axis)] == grid.resolution) {
                idx[static_cast<std::size_t>(axis)] = 0;
                --axis;
            }
            if (axis < 0) break;
        }
    }
    require(!pts.empty(), Errc::EmptyRegion, "no grid point lies inside the region");

    std::vector<int> comp(pts.size(), -1);
    int n_comp = 0;
    std::vector<int> stack;
    std::int64_t axis_stride[8];
    {
        std::int64_t s = 1;
        for (int i = n - 1; i >= 0; --i) {
            axis_stride[i] = s;
            s *= grid.resolution;
        }
    }

    for (std::size_t seed = 0; seed < pts.size(); ++seed) {
        if (comp[seed] >= 0) continue;
        const int id = n_comp++;
        stack.clear();
        stack.push_back(static_cast<int>(seed));
        comp[seed] = id;
        while (!stack.empty()) {
            const int cur = stack.back();
            stack.pop_back();
            const std::int64_t key = keys[static_cast<std::size_t>(cur)];
            for (int axis = 0; axis < n; ++axis) {
                const std::int64_t coord = (key / axis_stride[axis]) % grid.resolution;
                for (int sgn = -1; sgn <= 1; sgn += 2) {
                    const std::int64_t c2 = coord + sgn;
                    if (c2 < 0 || c2 >= grid.resolution) continue;
                    const auto it = index_of.find(key + sgn * axis_stride[axis]);
                    if (it == index_of.end() || comp[static_cast<std::size_t>(it->second)] >= 0) continue;
                    comp[static_cast<std::size_t>(it->second)] = id;
                    stack.push_back(it->second);
                }
            }
        }
    }

    std::vector<std::vector<Vec>> components(static_cast<std::size_t>(n_comp));
    for (std::size_t i = 0; i < pts.size(); ++i)
        components[static_cast<std::size_t>(comp[i])].push_back(pts[i]);

    // grid enumeration is lexicographic, so components[.] front() is the seed
    std::stable_sort(components.begin(), components.end(),
                     [](const std::vector<Vec>& a, const std::vector<Vec>& b) {
                         if (a.size() != b.size()) return a.size() > b.size();
                         return std::lexicographical_compare(a.front().begin(), a.front().end(),
                                                             b.front().begin(), b.front().end());
                     });
    return components;
}

namespace {

bool segment_ok(const Vec& x, const Vec& y, const RegionSpec& U, int samples, Vec* bad) {
    for (int s = 1; s < samples; ++s) {
        const double t = static_cast<double>(s) / samples;
        const Vec p = axpy(x, t, sub(y, x));
        if (!U.inside(p)) {
            if (bad) *bad = p;
            return false;
        }
    }
    return true;
}

} // namespace

ConvexityResult is_component_convex(const std::vector<Vec>& component, const RegionSpec& U,
                                    int trials, Rng& rng) {
    require(!component.empty(), Errc::EmptyRegion, "empty component");
    ConvexityResult res;
    const std::size_t n = component.size();
    if (n < 2) return res;

    Rng local = rng.fork("convexity");
    const int base_density = 32;

    const auto try_pair = [&](std::size_t i, std::size_t j) {
        Vec bad;
        if (segment_ok(component[i], component[j], U, base_density, &bad)) return false;
        // confirm at 4x density so boundary-grazing noise does not count
        Vec bad4;
        if (segment_ok(component[i], component[j], U, 4 * base_density, &bad4)) return false;
        res.convex = false;
        res.x = component[i];
        res.y = component[j];
        res.midpoint = bad4;
        return true;
    };

    // all pairs while affordable, then seeded random pairs
    const long exhaustive = static_cast<long>(n) * static_cast<long>(n - 1) / 2;
    if (exhaustive <= trials) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (try_pair(i, j)) return res;
        return res;
    }
    for (int t = 0; t < trials; ++t) {
        const std::size_t i = static_cast<std::size_t>(local.uniform_int(static_cast<int>(n)));
        const std::size_t j = static_cast<std::size_t>(local.uniform_int(static_cast<int>(n)));
        if (i == j) continue;
        if (try_pair(i, j)) return res;
    }
    return res;
}

} // namespace vlab
