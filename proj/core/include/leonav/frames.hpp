#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <utility>

#include "leonav/time.hpp"

namespace leonav {

// WGS-84 ellipsoid and Earth rotation.
inline constexpr double kWgs84A = 6378137.0;               // semi-major axis, m
inline constexpr double kWgs84F = 1.0 / 298.257223563;     // flattening
inline constexpr double kWgs84B = kWgs84A * (1.0 - kWgs84F);
inline constexpr double kWgs84E2 = kWgs84F * (2.0 - kWgs84F);  // first eccentricity squared
inline constexpr double kEarthRotationRate = 7.2921159e-5;     // rad/s
inline constexpr double kMuEarth = 3.986004418e14;             // m^3/s^2
inline constexpr double kJ2 = 1.08262668e-3;

/// Geodetic position on the WGS-84 ellipsoid. Angles in radians, altitude in
/// meters above the ellipsoid.
struct GeodeticPosition {
    double lat = 0.0;
    double lon = 0.0;
    double alt = 0.0;
};

/// Local East-North-Up tangent frame: ECEF origin plus the rotation whose
/// columns are the local East, North and Up unit vectors in ECEF.
struct EnuFrame {
    Eigen::Vector3d origin_ecef = Eigen::Vector3d::Zero();
    Eigen::Matrix3d rotation_enu_to_ecef = Eigen::Matrix3d::Identity();
};

struct GeodeticNonConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Closed-form WGS-84 forward transform.
Eigen::Vector3d geodetic_to_ecef(const GeodeticPosition& g);

/// Iterative inverse of geodetic_to_ecef. Converges to |dlat| < 1e-12 rad;
/// throws GeodeticNonConvergence for degenerate inputs near the Earth center.
GeodeticPosition ecef_to_geodetic(const Eigen::Vector3d& r);

/// ENU tangent frame at a geodetic reference point.
EnuFrame enu_frame_at(const GeodeticPosition& g);

/// r_ecef = origin + R * p_enu, v_ecef = R * v_enu.
std::pair<Eigen::Vector3d, Eigen::Vector3d> enu_to_ecef_state(const EnuFrame& frame,
                                                              const Eigen::Vector3d& p_enu,
                                                              const Eigen::Vector3d& v_enu);

/// Inverse map: p_enu = R^T (r_ecef - origin).
Eigen::Vector3d ecef_to_enu_pos(const EnuFrame& frame, const Eigen::Vector3d& r_ecef);

/// GMST rotation from the propagator's quasi-inertial frame (TEME treated as
/// ECI) to ECEF, with the omega x r velocity correction.
std::pair<Eigen::Vector3d, Eigen::Vector3d> teme_to_ecef(const Eigen::Vector3d& r_teme,
                                                         const Eigen::Vector3d& v_teme,
                                                         UtcTime t);

/// Same rotation including the coordinate acceleration: the Coriolis and
/// centripetal terms are applied so the result is the true second time
/// derivative of the ECEF position coordinates.
void teme_to_ecef(const Eigen::Vector3d& r_teme, const Eigen::Vector3d& v_teme,
                  const Eigen::Vector3d& a_teme, UtcTime t,
                  Eigen::Vector3d& r_ecef, Eigen::Vector3d& v_ecef, Eigen::Vector3d& a_ecef);

}  // namespace leonav
