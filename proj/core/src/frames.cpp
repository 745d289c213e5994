#include "leonav/frames.hpp"

#include <cmath>

#include "leonav/util.hpp"

namespace leonav {

Eigen::Vector3d geodetic_to_ecef(const GeodeticPosition& g) {
    const double slat = std::sin(g.lat), clat = std::cos(g.lat);
    const double slon = std::sin(g.lon), clon = std::cos(g.lon);
    const double n = kWgs84A / std::sqrt(1.0 - kWgs84E2 * slat * slat);
    return {(n + g.alt) * clat * clon,
            (n + g.alt) * clat * slon,
            (n * (1.0 - kWgs84E2) + g.alt) * slat};
}

GeodeticPosition ecef_to_geodetic(const Eigen::Vector3d& r) {
    const double p = std::hypot(r.x(), r.y());
    GeodeticPosition g;
    g.lon = std::atan2(r.y(), r.x());

    // Near the spin axis the longitude is arbitrary and the latitude is +-90.
    if (p < 1e-6) {
        if (std::abs(r.z()) < 1e3) {
            throw GeodeticNonConvergence("ecef_to_geodetic: point too close to Earth center");
        }
        g.lat = r.z() > 0.0 ? kPi / 2.0 : -kPi / 2.0;
        g.alt = std::abs(r.z()) - kWgs84B;
        return g;
    }

    double lat = std::atan2(r.z(), p * (1.0 - kWgs84E2));
    constexpr int kMaxIter = 20;
    for (int it = 0; it < kMaxIter; ++it) {
        const double slat = std::sin(lat);
        const double n = kWgs84A / std::sqrt(1.0 - kWgs84E2 * slat * slat);
        const double alt = p / std::cos(lat) - n;
        const double next = std::atan2(r.z(), p * (1.0 - kWgs84E2 * n / (n + alt)));
        const double dlat = std::abs(next - lat);
        lat = next;
        if (dlat < 1e-12) {
            const double sl = std::sin(lat);
            const double nn = kWgs84A / std::sqrt(1.0 - kWgs84E2 * sl * sl);
            g.lat = lat;
            g.alt = p / std::cos(lat) - nn;
            return g;
        }
    }
    throw GeodeticNonConvergence("ecef_to_geodetic: latitude iteration did not converge");
}

EnuFrame enu_frame_at(const GeodeticPosition& g) {
    const double slat = std::sin(g.lat), clat = std::cos(g.lat);
    const double slon = std::sin(g.lon), clon = std::cos(g.lon);
    EnuFrame f;
    f.origin_ecef = geodetic_to_ecef(g);
    // Columns: East, North, Up in ECEF.
    f.rotation_enu_to_ecef << -slon, -slat * clon, clat * clon,
                               clon, -slat * slon, clat * slon,
                                0.0,         clat,        slat;
    return f;
}

std::pair<Eigen::Vector3d, Eigen::Vector3d> enu_to_ecef_state(const EnuFrame& frame,
                                                              const Eigen::Vector3d& p_enu,
                                                              const Eigen::Vector3d& v_enu) {
    return {frame.origin_ecef + frame.rotation_enu_to_ecef * p_enu,
            frame.rotation_enu_to_ecef * v_enu};
}

Eigen::Vector3d ecef_to_enu_pos(const EnuFrame& frame, const Eigen::Vector3d& r_ecef) {
    return frame.rotation_enu_to_ecef.transpose() * (r_ecef - frame.origin_ecef);
}

namespace {

Eigen::Matrix3d gmst_rotation(UtcTime t) {
    const double g = gmst_rad(t);
    const double c = std::cos(g), s = std::sin(g);
    Eigen::Matrix3d r;
    r <<  c, s, 0.0,
         -s, c, 0.0,
        0.0, 0.0, 1.0;
    return r;
}

const Eigen::Vector3d kOmegaEarth{0.0, 0.0, kEarthRotationRate};

}  // namespace

std::pair<Eigen::Vector3d, Eigen::Vector3d> teme_to_ecef(const Eigen::Vector3d& r_teme,
                                                         const Eigen::Vector3d& v_teme,
                                                         UtcTime t) {
    const Eigen::Matrix3d rot = gmst_rotation(t);
    const Eigen::Vector3d r = rot * r_teme;
    const Eigen::Vector3d v = rot * v_teme - kOmegaEarth.cross(r);
    return {r, v};
}

void teme_to_ecef(const Eigen::Vector3d& r_teme, const Eigen::Vector3d& v_teme,
                  const Eigen::Vector3d& a_teme, UtcTime t,
                  Eigen::Vector3d& r_ecef, Eigen::Vector3d& v_ecef, Eigen::Vector3d& a_ecef) {
    const Eigen::Matrix3d rot = gmst_rotation(t);
    r_ecef = rot * r_teme;
    v_ecef = rot * v_teme - kOmegaEarth.cross(r_ecef);
    a_ecef = rot * a_teme - 2.0 * kOmegaEarth.cross(v_ecef) -
             kOmegaEarth.cross(kOmegaEarth.cross(r_ecef));
}

}  // namespace leonav
