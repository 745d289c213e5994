#include "leonav/time.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "leonav/util.hpp"

namespace leonav {

namespace {

double days_since_epoch(int year, int month, int day) {
    using namespace std::chrono;
    const sys_days d = year_month_day{std::chrono::year{year}, std::chrono::month{unsigned(month)},
                                      std::chrono::day{unsigned(day)}};
    return double(d.time_since_epoch().count());
}

}  // namespace

UtcTime utc_from_civil(int year, int month, int day, int hour, int minute, double second) {
    return days_since_epoch(year, month, day) * 86400.0 + hour * 3600.0 + minute * 60.0 + second;
}

UtcTime utc_from_tle_epoch(int two_digit_year, double day_of_year) {
    const int year = two_digit_year < 57 ? 2000 + two_digit_year : 1900 + two_digit_year;
    return days_since_epoch(year, 1, 1) * 86400.0 + (day_of_year - 1.0) * 86400.0;
}

void tle_epoch_from_utc(UtcTime t, int& two_digit_year, double& day_of_year) {
    using namespace std::chrono;
    const sys_days d{days{int64_t(std::floor(t / 86400.0))}};
    const year_month_day ymd{d};
    const int year = int(ymd.year());
    const double year_start = days_since_epoch(year, 1, 1) * 86400.0;
    two_digit_year = year % 100;
    day_of_year = (t - year_start) / 86400.0 + 1.0;
}

double gmst_rad(UtcTime t) {
    const double jd = t / 86400.0 + 2440587.5;
    const double tc = (jd - 2451545.0) / 36525.0;  // Julian centuries from J2000
    double sec = 67310.54841 + (876600.0 * 3600.0 + 8640184.812866) * tc +
                 0.093104 * tc * tc - 6.2e-6 * tc * tc * tc;
    sec = std::fmod(sec, 86400.0);
    if (sec < 0.0) sec += 86400.0;
    return sec * kTwoPi / 86400.0;
}

UtcTime utc_from_iso8601(const std::string& s) {
    int y = 0, mo = 0, d = 0, h = 0, mi = 0;
    double sec = 0.0;
    const int n = std::sscanf(s.c_str(), "%d-%d-%dT%d:%d:%lf", &y, &mo, &d, &h, &mi, &sec);
    if (n < 3) throw std::invalid_argument("utc_from_iso8601: cannot parse '" + s + "'");
    if (mo < 1 || mo > 12 || d < 1 || d > 31 || h < 0 || h > 23 || mi < 0 || mi > 59 ||
        sec < 0.0 || sec >= 61.0) {
        throw std::invalid_argument("utc_from_iso8601: field out of range in '" + s + "'");
    }
    return utc_from_civil(y, mo, d, h, mi, sec);
}

}  // namespace leonav
