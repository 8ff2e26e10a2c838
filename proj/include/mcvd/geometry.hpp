#pragma once

#include <optional>
#include <stdexcept>

namespace mcvd::geometry {

struct Point3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

double distance(const Point3& a, const Point3& b);

enum class BodyBehavior { Absorbing, Reflecting, PassivePoint };

/// A spherical node. A passive point has radius zero and never interacts
/// with diffusing molecules.
struct SphereBody {
    Point3 center;
    double radius = 0.0;
    BodyBehavior behavior = BodyBehavior::PassivePoint;
};

enum class EnzymeAnchor { AroundRx, AroundTx, Everywhere };

/// Sphere inside which molecules are subject to degradation. For the
/// around-Rx / around-Tx structures the outer radius is the anchor body
/// radius plus the extended enzyme radius.
struct EnzymeRegion {
    Point3 center;
    double outer_radius = 0.0;
    EnzymeAnchor anchor = EnzymeAnchor::AroundRx;
};

struct ChannelGeometry {
    SphereBody tx;
    SphereBody rx;
    std::optional<EnzymeRegion> enzyme;
    double surface_distance = 0.0;  // shortest gap between Tx and Rx surfaces
};

struct GeometryError : std::domain_error {
    using std::domain_error::domain_error;
};

/// (4/3) pi r^3
double sphere_volume(double radius);

/// Volume of the intersection of two spheres whose centers are
/// center_dist apart. Handles the disjoint and fully-contained cases.
double lens_volume(double r1, double r2, double center_dist);

/// Volume of the enzyme sphere occupied by the Tx and Rx bodies (V_lp).
/// A point body contributes nothing.
double overlap_volume(const ChannelGeometry& geom);

/// Enzyme-sphere volume minus the body overlap; always positive for a
/// valid geometry.
double total_enzyme_volume(const ChannelGeometry& geom);

// Boundary convention: a point exactly on the surface counts as inside.
bool contains(const SphereBody& body, const Point3& p);
bool contains(const EnzymeRegion& region, const Point3& p);

}  // namespace mcvd::geometry
