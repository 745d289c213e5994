#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "leonav/time.hpp"

namespace leonav {

enum class Constellation { Starlink, Navstar, Other };

/// One parsed two-line element set. Angles are radians normalized to
/// [0, 2*pi); mean motion stays in rev/day as printed in the catalog.
struct TleRecord {
    std::string name;
    int norad_id = 0;
    UtcTime epoch = 0.0;
    double inclination = 0.0;
    double raan = 0.0;
    double eccentricity = 0.0;
    double arg_perigee = 0.0;
    double mean_anomaly = 0.0;
    double mean_motion = 0.0;  // rev/day
    double bstar = 0.0;        // 1/earth-radii
    Constellation constellation = Constellation::Other;

    /// Columns the propagator does not consume, kept verbatim so a record
    /// re-serializes to its source lines.
    struct Aux {
        char classification = 'U';
        std::string intl_designator = "        ";  // cols 10-17 of line 1
        std::string ndot = " .00000000";           // cols 34-43
        std::string nddot = " 00000-0";            // cols 45-52
        std::string bstar_raw = " 00000-0";        // cols 54-61
        char ephemeris_type = '0';
        std::string element_set = "  99";          // cols 65-68
        std::string rev_number = "    1";          // cols 64-68 of line 2
    } aux;
};

struct TleCatalog {
    std::vector<TleRecord> records;
    UtcTime source_date = 0.0;  // latest record epoch
};

struct TleError : std::runtime_error {
    TleError(const std::string& what, int line) : std::runtime_error(what), line_number(line) {}
    int line_number;
};
struct ChecksumMismatch : TleError {
    using TleError::TleError;
};
struct MalformedField : TleError {
    using TleError::TleError;
};
struct TruncatedRecord : TleError {
    using TleError::TleError;
};
struct DuplicateNoradId : TleError {
    using TleError::TleError;
};

/// Mod-10 TLE checksum over the first 68 characters: digits count their
/// value, '-' counts 1, everything else 0. Throws MalformedField if the line
/// is not 68 or 69 characters long.
int checksum(const std::string& line);

struct TleParseOptions {
    bool strict = true;  // non-strict skips bad records and counts them
};

struct TleParseResult {
    TleCatalog catalog;
    int skipped_records = 0;  // non-strict mode only
    std::vector<std::string> warnings;
};

/// Parse a 2-line or 3-line (name + 2) grouped TLE stream. Constellation is
/// inferred from the name prefix: STARLINK -> Starlink, NAVSTAR/GPS ->
/// Navstar, anything else Other.
TleParseResult parse_tle_file(const std::string& text, const TleParseOptions& opts = {});

/// Convenience: parse from a file path, strict mode unless told otherwise.
TleParseResult parse_tle_path(const std::string& path, const TleParseOptions& opts = {});

/// Re-serialize a record to its two fixed-width 69-character lines
/// (checksums recomputed). Returns {line1, line2}.
std::pair<std::string, std::string> format_tle(const TleRecord& rec);

TleCatalog filter_constellation(const TleCatalog& cat, Constellation c);

Constellation constellation_from_name(const std::string& name);

}  // namespace leonav
