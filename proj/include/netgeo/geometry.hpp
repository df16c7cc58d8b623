#pragma once

#include <span>

#include "netgeo/matrix.hpp"

namespace netgeo {

// Node position in the native hyperbolic disk (curvature -1).
// theta is kept reduced into [0, 2*pi); construct through polar() so the
// invariant holds everywhere.
struct PolarPoint {
    double r = 0.0;
    double theta = 0.0;
};

// Reduces an arbitrary angle into [0, 2*pi).
double normalize_angle(double theta);

// Validating constructor: r >= 0, theta normalized.
PolarPoint polar(double r, double theta);

// Smaller angle between two directions, in [0, pi]. Symmetric; inputs are
// reduced mod 2*pi internally.
double angular_separation(double theta1, double theta2);

// Geodesic length between two points, native-disk hyperbolic law of cosines.
// Evaluated as acosh(cosh(r1-r2) + 2*sin^2(dtheta/2)*sinh(r1)*sinh(r2)), which
// keeps the acosh argument >= 1 up to roundoff; a clamp at 1 absorbs the
// residual (see geometry tests for the clamp-magnitude bound).
double hyperbolic_distance(const PolarPoint& p, const PolarPoint& q);

// Pairwise geodesic table over a coordinate set. Symmetric, zero diagonal.
DistMatrix geodesic_matrix(std::span<const PolarPoint> coords);

}  // namespace netgeo
