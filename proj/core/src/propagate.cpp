#include "leonav/propagate.hpp"

#include <algorithm>
#include <cmath>

#include "leonav/util.hpp"

namespace leonav {

double solve_kepler(double mean_anomaly, double eccentricity) {
    const double m = wrap_two_pi(mean_anomaly);
    const double e = eccentricity;

    double big_e = e < 0.8 ? m : kPi;
    for (int it = 0; it < 30; ++it) {
        const double f = big_e - e * std::sin(big_e) - m;
        const double fp = 1.0 - e * std::cos(big_e);
        const double step = f / fp;
        big_e -= step;
        if (std::abs(step) < 1e-12) return wrap_two_pi(big_e);
    }

    // Newton failed (possible for e close to 1); g(E) = E - e sinE - m is
    // monotone on [0, 2*pi], so bisection always lands.
    double lo = 0.0, hi = kTwoPi;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double g = mid - e * std::sin(mid) - m;
        if (g > 0.0) hi = mid;
        else lo = mid;
        if (hi - lo < 1e-13) return wrap_two_pi(0.5 * (lo + hi));
    }
    throw KeplerNonConvergence("solve_kepler: no convergence for M=" + std::to_string(m) +
                               " e=" + std::to_string(e));
}

namespace {

Eigen::Matrix3d rot_z(double a) {
    const double c = std::cos(a), s = std::sin(a);
    Eigen::Matrix3d r;
    r << c, -s, 0.0,
         s,  c, 0.0,
         0.0, 0.0, 1.0;
    return r;
}

Eigen::Matrix3d rot_x(double a) {
    const double c = std::cos(a), s = std::sin(a);
    Eigen::Matrix3d r;
    r << 1.0, 0.0, 0.0,
         0.0,   c,  -s,
         0.0,   s,   c;
    return r;
}

}  // namespace

SatStateEcef Propagator::state_at(const TleRecord& rec, UtcTime t) const {
    const double dt = t - rec.epoch;
    if (std::abs(dt) > opts_.staleness_limit_s) {
        throw StaleElements("elements for " + std::to_string(rec.norad_id) + " are " +
                            std::to_string(dt / 86400.0) + " days from epoch");
    }

    const double n0 = rec.mean_motion * kTwoPi / 86400.0;  // rad/s
    const double a = std::cbrt(kMuEarth / (n0 * n0));
    const double e = rec.eccentricity;
    const double inc = rec.inclination;

    if (a * (1.0 - e) < kWgs84A + 100e3) {
        throw DecayedOrbit("perigee below 100 km for " + std::to_string(rec.norad_id));
    }

    const double beta = std::sqrt(1.0 - e * e);
    const double p = a * (1.0 - e * e);
    const double sin_i = std::sin(inc);

    double raan_dot = 0.0, argp_dot = 0.0, m_dot = n0;
    if (opts_.j2_enabled) {
        const double k2 = 1.5 * kJ2 * n0 * (kWgs84A / p) * (kWgs84A / p);
        raan_dot = -k2 * std::cos(inc);
        argp_dot = k2 * (2.0 - 2.5 * sin_i * sin_i);
        m_dot = n0 + k2 * beta * (1.0 - 1.5 * sin_i * sin_i);
    }

    const double mean_anom = rec.mean_anomaly + m_dot * dt;
    const double raan = rec.raan + raan_dot * dt;
    const double argp = rec.arg_perigee + argp_dot * dt;

    const double big_e = solve_kepler(mean_anom, e);
    const double se = std::sin(big_e), ce = std::cos(big_e);
    const double edot = m_dot / (1.0 - e * ce);
    const double eddot = -e * se * edot * edot / (1.0 - e * ce);

    const Eigen::Vector3d r_pf{a * (ce - e), a * beta * se, 0.0};
    const Eigen::Vector3d rdot_pf{-a * se * edot, a * beta * ce * edot, 0.0};
    const Eigen::Vector3d rddot_pf{-a * (ce * edot * edot + se * eddot),
                                   a * beta * (-se * edot * edot + ce * eddot), 0.0};

    const Eigen::Matrix3d rot = rot_z(raan) * rot_x(inc) * rot_z(argp);

    // Secular drift of the node and perigee makes the perifocal frame rotate
    // slowly: about the inertial z axis at raan_dot and about the orbit
    // normal at argp_dot. Chain-ruling that rotation in keeps v and a exact
    // derivatives of r. (The raan_dot*argp_dot cross term is ~1e-12 rad/s^2
    // and is dropped.)
    const Eigen::Vector3d h_dir = rot * Eigen::Vector3d::UnitZ();
    const Eigen::Vector3d omega_frame =
        raan_dot * Eigen::Vector3d::UnitZ() + argp_dot * h_dir;

    const Eigen::Vector3d r_i = rot * r_pf;
    const Eigen::Vector3d rv = rot * rdot_pf;
    const Eigen::Vector3d v_i = rv + omega_frame.cross(r_i);
    const Eigen::Vector3d a_i = rot * rddot_pf + 2.0 * omega_frame.cross(rv) +
                                omega_frame.cross(omega_frame.cross(r_i));

    SatStateEcef out;
    out.norad_id = rec.norad_id;
    out.t = t;
    teme_to_ecef(r_i, v_i, a_i, t, out.r_S, out.v_S, out.a_S);
    return out;
}

SatStateEcef propagate(const TleRecord& rec, UtcTime t) {
    static const Propagator default_propagator;
    return default_propagator.state_at(rec, t);
}

double elevation(const SatStateEcef& sat, const Eigen::Vector3d& user_ecef, const EnuFrame& frame) {
    const Eigen::Vector3d los = sat.r_S - user_ecef;
    const double up = frame.rotation_enu_to_ecef.col(2).dot(los.normalized());
    return std::asin(std::clamp(up, -1.0, 1.0));
}

VisibilityReport visible_satellites(const TleCatalog& cat, const GeodeticPosition& user, UtcTime t,
                                    double mask_gps, double mask_leo, const Propagator& prop) {
    VisibilityReport report;
    report.t = t;
    const EnuFrame frame = enu_frame_at(user);

    for (const TleRecord& rec : cat.records) {
        if (rec.constellation == Constellation::Other) continue;
        try {
            const SatStateEcef s = prop.state_at(rec, t);
            const double el = elevation(s, frame.origin_ecef, frame);
            if (rec.constellation == Constellation::Starlink && el >= mask_leo)
                report.visible_starlink.emplace_back(rec.norad_id, el);
            else if (rec.constellation == Constellation::Navstar && el >= mask_gps)
                report.visible_navstar.emplace_back(rec.norad_id, el);
        } catch (const std::exception& e) {
            report.skipped.emplace_back(rec.norad_id, e.what());
        }
    }

    auto by_elevation = [](const std::pair<int, double>& a, const std::pair<int, double>& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    };
    std::sort(report.visible_starlink.begin(), report.visible_starlink.end(), by_elevation);
    std::sort(report.visible_navstar.begin(), report.visible_navstar.end(), by_elevation);
    return report;
}

}  // namespace leonav
