#include "mcvd/geometry.hpp"

#include <cmath>

namespace mcvd::geometry {

double distance(const Point3& a, const Point3& b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    const double dz = a.z - b.z;
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

double sphere_volume(double radius) {
    if (radius < 0.0) {
        throw GeometryError("sphere_volume: negative radius");
    }
    return (4.0 / 3.0) * M_PI * radius * radius * radius;
}

double lens_volume(double r1, double r2, double center_dist) {
    if (r1 < 0.0 || r2 < 0.0 || center_dist < 0.0) {
        throw GeometryError("lens_volume: negative input");
    }
    if (r1 == 0.0 || r2 == 0.0) {
        return 0.0;
    }
    if (center_dist >= r1 + r2) {
        return 0.0;  // disjoint or externally tangent
    }
    const double rmin = std::min(r1, r2);
    if (center_dist <= std::abs(r1 - r2)) {
        return sphere_volume(rmin);  // smaller sphere fully contained
    }
    // Standard two-sphere intersection volume.
    const double d = center_dist;
    const double h = r1 + r2 - d;
    return M_PI * h * h *
           (d * d + 2.0 * d * r2 - 3.0 * r2 * r2 + 2.0 * d * r1 + 6.0 * r1 * r2 -
            3.0 * r1 * r1) /
           (12.0 * d);
}

double overlap_volume(const ChannelGeometry& geom) {
    if (!geom.enzyme) {
        return 0.0;
    }
    const EnzymeRegion& e = *geom.enzyme;
    double v = 0.0;
    if (geom.rx.radius > 0.0) {
        v += lens_volume(e.outer_radius, geom.rx.radius, distance(e.center, geom.rx.center));
    }
    if (geom.tx.radius > 0.0) {
        v += lens_volume(e.outer_radius, geom.tx.radius, distance(e.center, geom.tx.center));
    }
    return v;
}

double total_enzyme_volume(const ChannelGeometry& geom) {
    if (!geom.enzyme) {
        throw GeometryError("total_enzyme_volume: geometry has no enzyme region");
    }
    const double v = sphere_volume(geom.enzyme->outer_radius) - overlap_volume(geom);
    if (v <= 0.0) {
        throw GeometryError("total_enzyme_volume: non-positive enzyme volume");
    }
    return v;
}

bool contains(const SphereBody& body, const Point3& p) {
    return distance(body.center, p) <= body.radius;
}

bool contains(const EnzymeRegion& region, const Point3& p) {
    return distance(region.center, p) <= region.outer_radius;
}

}  // namespace mcvd::geometry
