#include "netgeo/geometry.hpp"

#include <cmath>
#include <numbers>

#include "netgeo/errors.hpp"

namespace netgeo {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double normalize_angle(double theta) {
    double t = std::fmod(theta, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    // fmod of a value just below 0 can round back up to 2*pi
    if (t >= kTwoPi) t = 0.0;
    return t;
}

PolarPoint polar(double r, double theta) {
    if (!(r >= 0.0)) throw UsageError("polar: radius must be nonnegative");
    if (!std::isfinite(theta)) throw UsageError("polar: angle must be finite");
    return PolarPoint{r, normalize_angle(theta)};
}

double angular_separation(double theta1, double theta2) {
    const double d = std::fabs(normalize_angle(theta1) - normalize_angle(theta2));
    return std::numbers::pi - std::fabs(std::numbers::pi - d);
}

double hyperbolic_distance(const PolarPoint& p, const PolarPoint& q) {
    const double half = 0.5 * angular_separation(p.theta, q.theta);
    const double s = std::sin(half);
    double arg = std::cosh(p.r - q.r) + 2.0 * s * s * std::sinh(p.r) * std::sinh(q.r);
    if (arg < 1.0) arg = 1.0;
    return std::acosh(arg);
}

DistMatrix geodesic_matrix(std::span<const PolarPoint> coords) {
    if (coords.empty()) throw UsageError("geodesic_matrix: empty coordinate set");
    const auto n = static_cast<int32_t>(coords.size());
    DistMatrix d(n, 0.0);
    for (int32_t i = 0; i < n; ++i) {
        for (int32_t j = i + 1; j < n; ++j) {
            const double v = hyperbolic_distance(coords[i], coords[j]);
            d(i, j) = v;
            d(j, i) = v;
        }
    }
    return d;
}

}  // namespace netgeo
