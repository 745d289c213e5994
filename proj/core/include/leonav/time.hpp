#pragma once

#include <cstdint>
#include <string>

namespace leonav {

/// UTC instants are plain seconds since the Unix epoch (1970-01-01T00:00:00Z).
/// Leap seconds are ignored; scenario windows are tens of seconds, far below
/// the scale where that matters.
using UtcTime = double;

/// Build a UTC instant from a civil date/time.
UtcTime utc_from_civil(int year, int month, int day,
                       int hour = 0, int minute = 0, double second = 0.0);

/// TLE epoch field: two-digit year plus fractional day-of-year (1-based).
/// Years < 57 are 20xx, otherwise 19xx.
UtcTime utc_from_tle_epoch(int two_digit_year, double day_of_year);

/// Inverse of utc_from_tle_epoch, for fixed-width re-serialization.
void tle_epoch_from_utc(UtcTime t, int& two_digit_year, double& day_of_year);

/// Greenwich mean sidereal time, radians in [0, 2*pi).
/// IAU 1982 polynomial; UTC is used directly in place of UT1.
double gmst_rad(UtcTime t);

/// Parse "YYYY-MM-DDThh:mm:ss" (optionally fractional seconds, optional
/// trailing 'Z'). Throws std::invalid_argument on malformed input.
UtcTime utc_from_iso8601(const std::string& s);

}  // namespace leonav
