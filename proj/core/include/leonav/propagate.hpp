#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>
#include <vector>

#include "leonav/frames.hpp"
#include "leonav/time.hpp"
#include "leonav/tle.hpp"

namespace leonav {

/// Satellite ECEF state. v_S and a_S are the true first and second time
/// derivatives of the ECEF position coordinates (Coriolis/centripetal terms
/// included), which is what range-rate and range-acceleration models need.
struct SatStateEcef {
    int norad_id = 0;
    UtcTime t = 0.0;
    Eigen::Vector3d r_S = Eigen::Vector3d::Zero();
    Eigen::Vector3d v_S = Eigen::Vector3d::Zero();
    Eigen::Vector3d a_S = Eigen::Vector3d::Zero();
};

struct VisibilityReport {
    UtcTime t = 0.0;
    std::vector<std::pair<int, double>> visible_starlink;  // (norad_id, elevation rad), desc
    std::vector<std::pair<int, double>> visible_navstar;
    std::vector<std::pair<int, std::string>> skipped;  // propagation failures
};

struct StaleElements : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DecayedOrbit : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct KeplerNonConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PropagatorOptions {
    bool j2_enabled = true;
    double staleness_limit_s = 7.0 * 86400.0;
};

/// Two-body propagation of TLE mean elements with first-order secular J2
/// drift on RAAN, argument of perigee and mean anomaly. Not SGP4: the same
/// model generates truth geometry and predicted signatures, so ephemeris
/// model error cancels in closed-loop use. Velocity and acceleration are the
/// exact analytic derivatives of the propagated position (secular rates
/// chain-ruled in), so finite differences of r_S reproduce them.
class Propagator {
public:
    Propagator() = default;
    explicit Propagator(const PropagatorOptions& opts) : opts_(opts) {}

    SatStateEcef state_at(const TleRecord& rec, UtcTime t) const;

    const PropagatorOptions& options() const { return opts_; }

private:
    PropagatorOptions opts_;
};

/// Propagate with default options.
SatStateEcef propagate(const TleRecord& rec, UtcTime t);

/// Solve Kepler's equation M = E - e*sin(E). Newton iteration at 1e-12 rad
/// with a bisection fallback. Returns eccentric anomaly in [0, 2*pi).
double solve_kepler(double mean_anomaly, double eccentricity);

/// Elevation of a satellite above the user's local horizon, [-pi/2, pi/2].
double elevation(const SatStateEcef& sat, const Eigen::Vector3d& user_ecef, const EnuFrame& frame);

/// Per-constellation visibility under elevation masks; lists sorted by
/// descending elevation (norad id breaks ties). Satellites that fail to
/// propagate are recorded in `skipped`.
VisibilityReport visible_satellites(const TleCatalog& cat, const GeodeticPosition& user, UtcTime t,
                                    double mask_gps, double mask_leo,
                                    const Propagator& prop = Propagator{});

}  // namespace leonav
