#include "leonav/tle.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "leonav/util.hpp"

namespace leonav {

int checksum(const std::string& line) {
    if (line.size() != 68 && line.size() != 69) {
        throw MalformedField("checksum: line must be 68 or 69 characters, got " +
                                 std::to_string(line.size()),
                             0);
    }
    int sum = 0;
    for (size_t i = 0; i < 68; ++i) {
        const char c = line[i];
        if (c >= '0' && c <= '9') sum += c - '0';
        else if (c == '-') sum += 1;
    }
    return sum % 10;
}

Constellation constellation_from_name(const std::string& name) {
    std::string upper(name);
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char c) { return std::toupper(c); });
    if (upper.rfind("STARLINK", 0) == 0) return Constellation::Starlink;
    if (upper.rfind("NAVSTAR", 0) == 0 || upper.rfind("GPS", 0) == 0) return Constellation::Navstar;
    return Constellation::Other;
}

namespace {

std::string rstrip(std::string s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == '\n' || s.back() == ' ' || s.back() == '\t'))
        s.pop_back();
    return s;
}

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

double parse_double_field(const std::string& line, int col0, int len, int line_no,
                          const char* what) {
    const std::string field = trim(line.substr(col0, len));
    if (field.empty())
        throw MalformedField(std::string("empty ") + what + " field (cols " +
                                 std::to_string(col0 + 1) + "-" + std::to_string(col0 + len) + ")",
                             line_no);
    size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(field, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != field.size())
        throw MalformedField(std::string("bad ") + what + " field '" + field + "' (cols " +
                                 std::to_string(col0 + 1) + "-" + std::to_string(col0 + len) + ")",
                             line_no);
    return v;
}

int parse_int_field(const std::string& line, int col0, int len, int line_no, const char* what) {
    const double v = parse_double_field(line, col0, len, line_no, what);
    if (v != std::floor(v))
        throw MalformedField(std::string("non-integer ") + what + " field", line_no);
    return int(v);
}

/// Implied-decimal exponent field, e.g. " 12345-4" -> 0.12345e-4.
double parse_implied_decimal(const std::string& field, int line_no, const char* what) {
    if (field.size() != 8) throw MalformedField(std::string("bad ") + what + " width", line_no);
    const char sign_c = field[0];
    const double sign = sign_c == '-' ? -1.0 : 1.0;
    if (sign_c != ' ' && sign_c != '-' && sign_c != '+' && !std::isdigit((unsigned char)sign_c))
        throw MalformedField(std::string("bad ") + what + " sign", line_no);
    const std::string mant = trim(field.substr(1, 5));
    const std::string exps = field.substr(6, 2);
    if (mant.empty()) return 0.0;
    for (char c : mant)
        if (!std::isdigit((unsigned char)c))
            throw MalformedField(std::string("bad ") + what + " mantissa '" + mant + "'", line_no);
    const double mantissa = std::stod("0." + mant);
    const double esign = exps[0] == '-' ? -1.0 : 1.0;
    if (!std::isdigit((unsigned char)exps[1]))
        throw MalformedField(std::string("bad ") + what + " exponent", line_no);
    const double e = exps[1] - '0';
    return sign * mantissa * std::pow(10.0, esign * e);
}

void validate_checksum(const std::string& line, int line_no) {
    const char last = line[68];
    if (!std::isdigit((unsigned char)last))
        throw ChecksumMismatch("checksum column is not a digit", line_no);
    if (checksum(line) != last - '0')
        throw ChecksumMismatch("checksum mismatch: computed " + std::to_string(checksum(line)) +
                                   ", line says " + std::string(1, last),
                               line_no);
}

TleRecord parse_record(const std::string& name, const std::string& l1, const std::string& l2,
                       int line1_no) {
    validate_checksum(l1, line1_no);
    validate_checksum(l2, line1_no + 1);

    TleRecord rec;
    rec.name = name;
    rec.norad_id = parse_int_field(l1, 2, 5, line1_no, "norad id");
    const int norad2 = parse_int_field(l2, 2, 5, line1_no + 1, "norad id");
    if (rec.norad_id != norad2)
        throw MalformedField("line 1/2 norad id mismatch: " + std::to_string(rec.norad_id) +
                                 " vs " + std::to_string(norad2),
                             line1_no + 1);

    const int yy = parse_int_field(l1, 18, 2, line1_no, "epoch year");
    const double doy = parse_double_field(l1, 20, 12, line1_no, "epoch day");
    if (doy < 1.0 || doy >= 367.0) throw MalformedField("epoch day out of range", line1_no);
    rec.epoch = utc_from_tle_epoch(yy, doy);

    rec.inclination = wrap_two_pi(parse_double_field(l2, 8, 8, line1_no + 1, "inclination") * kDegToRad);
    rec.raan = wrap_two_pi(parse_double_field(l2, 17, 8, line1_no + 1, "raan") * kDegToRad);
    rec.eccentricity = parse_double_field(l2, 26, 7, line1_no + 1, "eccentricity") * 1e-7;
    if (rec.eccentricity < 0.0 || rec.eccentricity >= 1.0)
        throw MalformedField("eccentricity out of [0,1)", line1_no + 1);
    rec.arg_perigee = wrap_two_pi(parse_double_field(l2, 34, 8, line1_no + 1, "arg perigee") * kDegToRad);
    rec.mean_anomaly = wrap_two_pi(parse_double_field(l2, 43, 8, line1_no + 1, "mean anomaly") * kDegToRad);
    rec.mean_motion = parse_double_field(l2, 52, 11, line1_no + 1, "mean motion");
    if (rec.mean_motion <= 0.0) throw MalformedField("mean motion must be positive", line1_no + 1);

    rec.aux.classification = l1[7];
    rec.aux.intl_designator = l1.substr(9, 8);
    rec.aux.ndot = l1.substr(33, 10);
    rec.aux.nddot = l1.substr(44, 8);
    rec.aux.bstar_raw = l1.substr(53, 8);
    rec.bstar = parse_implied_decimal(rec.aux.bstar_raw, line1_no, "bstar");
    rec.aux.ephemeris_type = l1[62];
    rec.aux.element_set = l1.substr(64, 4);
    rec.aux.rev_number = l2.substr(63, 5);

    rec.constellation = constellation_from_name(name);
    return rec;
}

std::string strip_name_line(const std::string& line) {
    std::string n = trim(line);
    if (n.size() > 2 && n[0] == '0' && n[1] == ' ') n = n.substr(2);  // 3LE "0 NAME" style
    return n;
}

bool is_data_line(const std::string& line, char which) {
    return line.size() >= 2 && line[0] == which && line[1] == ' ';
}

}  // namespace

TleParseResult parse_tle_file(const std::string& text, const TleParseOptions& opts) {
    TleParseResult result;
    std::unordered_set<int> seen_ids;
    std::istringstream in(text);
    std::string raw;
    std::string pending_name;
    int line_no = 0;

    auto record_skip = [&](const TleError& err) {
        ++result.skipped_records;
        result.warnings.push_back("line " + std::to_string(err.line_number) + ": " + err.what());
    };

    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = rstrip(raw);
        if (line.empty()) continue;

        if (is_data_line(line, '1')) {
            const int l1_no = line_no;
            std::string l2;
            const bool have_l2 = bool(std::getline(in, l2));
            if (have_l2) ++line_no;
            l2 = rstrip(l2);
            try {
                if (!have_l2)
                    throw TruncatedRecord("line 1 at end of input without line 2", l1_no);
                if (line.size() != 69)
                    throw MalformedField("data line must be 69 characters, got " +
                                             std::to_string(line.size()),
                                         l1_no);
                if (!is_data_line(l2, '2'))
                    throw TruncatedRecord("line 1 not followed by line 2", l1_no);
                if (l2.size() != 69)
                    throw MalformedField("data line must be 69 characters, got " +
                                             std::to_string(l2.size()),
                                         line_no);
                TleRecord rec = parse_record(pending_name, line, l2, l1_no);
                if (!seen_ids.insert(rec.norad_id).second)
                    throw DuplicateNoradId("duplicate norad id " + std::to_string(rec.norad_id),
                                           l1_no);
                result.catalog.records.push_back(std::move(rec));
            } catch (const TleError& e) {
                if (opts.strict) throw;
                record_skip(e);
            }
            pending_name.clear();
        } else if (is_data_line(line, '2')) {
            TruncatedRecord orphan("orphan line 2", line_no);
            if (opts.strict) throw orphan;
            record_skip(orphan);
        } else {
            pending_name = strip_name_line(line);
        }
    }

    for (const TleRecord& r : result.catalog.records)
        result.catalog.source_date = std::max(result.catalog.source_date, r.epoch);
    return result;
}

TleParseResult parse_tle_path(const std::string& path, const TleParseOptions& opts) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open TLE file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_tle_file(ss.str(), opts);
}

std::pair<std::string, std::string> format_tle(const TleRecord& rec) {
    int yy = 0;
    double doy = 0.0;
    tle_epoch_from_utc(rec.epoch, yy, doy);

    char l1[70];
    std::snprintf(l1, sizeof(l1), "1 %5d%c %-8s %02d%012.8f%-10s %-8s %-8s %c%-4s",
                  rec.norad_id, rec.aux.classification, rec.aux.intl_designator.c_str(), yy, doy,
                  rec.aux.ndot.c_str(), rec.aux.nddot.c_str(), rec.aux.bstar_raw.c_str(),
                  rec.aux.ephemeris_type, rec.aux.element_set.c_str());
    std::string line1(l1);
    line1 += char('0' + checksum(line1));

    char l2[70];
    std::snprintf(l2, sizeof(l2), "2 %5d %8.4f %8.4f %07ld %8.4f %8.4f %11.8f%-5s",
                  rec.norad_id, rec.inclination * kRadToDeg, rec.raan * kRadToDeg,
                  std::lround(rec.eccentricity * 1e7), rec.arg_perigee * kRadToDeg,
                  rec.mean_anomaly * kRadToDeg, rec.mean_motion, rec.aux.rev_number.c_str());
    std::string line2(l2);
    line2 += char('0' + checksum(line2));

    return {line1, line2};
}

TleCatalog filter_constellation(const TleCatalog& cat, Constellation c) {
    TleCatalog out;
    out.source_date = cat.source_date;
    for (const TleRecord& r : cat.records)
        if (r.constellation == c) out.records.push_back(r);
    return out;
}

}  // namespace leonav
