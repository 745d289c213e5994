#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "leonav/frames.hpp"
#include "leonav/nav_state.hpp"
#include "leonav/propagate.hpp"

namespace leonav {

/// Line-of-sight geometry between one satellite and the user.
/// rho_ddot is the range acceleration u.a_S + (|v_rel|^2 - (u.v_rel)^2)/rho;
/// the user's own acceleration is not modeled (static-user assumption).
struct GeometryObservables {
    double rho = 0.0;                                  // m
    Eigen::Vector3d u = Eigen::Vector3d::Zero();       // unit line of sight
    Eigen::Vector3d v_rel = Eigen::Vector3d::Zero();   // m/s
    double rho_dot = 0.0;                              // m/s
    double rho_ddot = 0.0;                             // m/s^2
};

struct BeaconCarrier {
    double f_c = 11.7e9;                  // Hz, Ku-band downlink tone
    static constexpr double c = 299792458.0;  // m/s
};

enum class MeasurementKind { GpsPseudorange, LeoDopplerRate, OfdmDiffRange };

struct Measurement {
    MeasurementKind kind = MeasurementKind::GpsPseudorange;
    UtcTime t = 0.0;
    int sat_id = 0;
    double value = 0.0;  // m | Hz/s | m depending on kind
    double sigma = 1.0;
    int ref_sat_id = -1;  // OfdmDiffRange only
};

struct ZeroRange : std::runtime_error {
    using std::runtime_error::runtime_error;
};

GeometryObservables geometry(const SatStateEcef& sat, const Eigen::Vector3d& r_user,
                             const Eigen::Vector3d& v_user);

/// alpha = -(f_c / c) * rho_ddot.
double doppler_rate(const GeometryObservables& geom, const BeaconCarrier& carrier);

/// f_D = -(f_c / c) * rho_dot.
double doppler_shift(const GeometryObservables& geom, const BeaconCarrier& carrier);

/// |r_S - r_user| + clock_bias. Simulation runs with clock_bias = 0
/// (clock-corrected pseudoranges; the filter carries no clock state).
double gps_pseudorange(const SatStateEcef& sat, const Eigen::Vector3d& r_user, double clock_bias_m);

/// rho_i - rho_ref; differencing cancels any common receiver clock bias.
double ofdm_diff_range(const SatStateEcef& sat_i, const SatStateEcef& sat_ref,
                       const Eigen::Vector3d& r_user);

/// Satellite states visible at one measurement epoch, already restricted to
/// the scenario's selected subsets and sorted by norad id.
struct MeasurementEpoch {
    UtcTime t = 0.0;
    std::vector<SatStateEcef> gps_sats;
    std::vector<SatStateEcef> leo_sats;
};

struct MeasurementSimConfig {
    double gps_sigma_m = 3.0;
    double alpha_sigma_hzps = 1.5;
    double ofdm_sigma_m = 5.0;
    double gps_rate_hz = 10.0;
    double alpha_rate_hz = 1.0;
    double ofdm_rate_hz = 1.0;
    bool enable_gps = true;
    bool enable_alpha = true;
    bool enable_ofdm = false;
    BeaconCarrier carrier{};
    std::uint64_t seed = 0;
};

struct MeasurementSimResult {
    std::vector<Measurement> measurements;  // time-ordered, sat-id tiebreak
    std::vector<std::string> warnings;      // e.g. < 4 visible of a required kind
};

/// Simulate all enabled measurement kinds along a truth trajectory. Epochs
/// must be sampled on the trajectory grid; each kind fires at its own rate
/// (a divisor of the grid rate). Noise is N(0, sigma^2) per kind from
/// independent seeded streams, so runs are reproducible and adding one kind
/// does not perturb another kind's draws. The OFDM reference satellite is
/// the highest-elevation LEO at each epoch.
MeasurementSimResult simulate_measurements(const Trajectory& truth, const EnuFrame& frame,
                                           const std::vector<MeasurementEpoch>& epochs,
                                           const MeasurementSimConfig& cfg);

}  // namespace leonav
