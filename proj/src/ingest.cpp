#include "tsrg/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace tsrg {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

bool all_digits(const std::string& s, std::size_t from) {
    if (from >= s.size()) return false;
    for (std::size_t p = from; p < s.size(); ++p)
        if (!std::isdigit(static_cast<unsigned char>(s[p]))) return false;
    return true;
}

// Days since 1970-01-01 for a proleptic Gregorian date.
std::int64_t days_from_civil(std::int64_t y, unsigned m, unsigned d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

std::string number_to_text(double v) {
    if (std::isfinite(v) && v == std::floor(v) && std::abs(v) < 1e15) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%lld", static_cast<long long>(v));
        return buf;
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

std::optional<EventRecord> parse_csv_line(const std::string& line, std::string& error) {
    const std::size_t c1 = line.find(',');
    if (c1 == std::string::npos) {
        error = "expected timestamp,source,value";
        return std::nullopt;
    }
    const std::size_t c2 = line.find(',', c1 + 1);
    if (c2 == std::string::npos) {
        error = "missing value field";
        return std::nullopt;
    }
    EventRecord rec;
    const std::string ts_text = trim(line.substr(0, c1));
    rec.source = trim(line.substr(c1 + 1, c2 - c1 - 1));
    rec.value = trim(line.substr(c2 + 1));

    auto ts = parse_timestamp(ts_text);
    if (!ts) {
        error = "malformed timestamp '" + ts_text + "'";
        return std::nullopt;
    }
    rec.timestamp = *ts;
    if (rec.source.empty()) {
        error = "empty source";
        return std::nullopt;
    }
    if (rec.value.empty()) {
        error = "empty value";
        return std::nullopt;
    }
    return rec;
}

std::optional<EventRecord> parse_jsonl_line(const std::string& line, std::string& error) {
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
        error = "not a JSON object";
        return std::nullopt;
    }
    if (!j.contains("timestamp") || !j.contains("source") || !j.contains("value")) {
        error = "missing timestamp/source/value field";
        return std::nullopt;
    }
    EventRecord rec;
    const auto& jt = j["timestamp"];
    if (jt.is_number_integer()) {
        rec.timestamp = jt.get<std::int64_t>();
    } else if (jt.is_string()) {
        auto ts = parse_timestamp(jt.get<std::string>());
        if (!ts) {
            error = "malformed timestamp";
            return std::nullopt;
        }
        rec.timestamp = *ts;
    } else {
        error = "timestamp must be integer milliseconds or ISO-8601 text";
        return std::nullopt;
    }
    if (!j["source"].is_string() || j["source"].get<std::string>().empty()) {
        error = "source must be a non-empty string";
        return std::nullopt;
    }
    rec.source = j["source"].get<std::string>();
    const auto& jv = j["value"];
    if (jv.is_string()) {
        rec.value = jv.get<std::string>();
    } else if (jv.is_number()) {
        rec.value = jv.is_number_integer() ? std::to_string(jv.get<std::int64_t>())
                                           : number_to_text(jv.get<double>());
    } else {
        error = "value must be text or a number";
        return std::nullopt;
    }
    if (rec.value.empty()) {
        error = "empty value";
        return std::nullopt;
    }
    return rec;
}

}  // namespace

std::optional<EventFormat> parse_event_format(const std::string& name) {
    if (name == "csv") return EventFormat::csv;
    if (name == "jsonl") return EventFormat::jsonl;
    return std::nullopt;
}

std::optional<Timestamp> parse_timestamp(const std::string& text) {
    if (text.empty()) return std::nullopt;
    // raw epoch milliseconds
    if (all_digits(text, text[0] == '-' ? 1 : 0)) {
        errno = 0;
        char* end = nullptr;
        const long long v = std::strtoll(text.c_str(), &end, 10);
        if (errno != 0 || end != text.c_str() + text.size()) return std::nullopt;
        return static_cast<Timestamp>(v);
    }
    // ISO-8601 UTC
    int year = 0, month = 0, day = 0, hour = 0, minute = 0, second = 0;
    int consumed = 0;
    if (std::sscanf(text.c_str(), "%d-%d-%dT%d:%d:%d%n", &year, &month, &day, &hour, &minute,
                    &second, &consumed) != 6)
        return std::nullopt;
    std::int64_t millis = 0;
    std::size_t p = static_cast<std::size_t>(consumed);
    if (p < text.size() && text[p] == '.') {
        std::size_t digits = 0;
        std::int64_t frac = 0;
        ++p;
        while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) {
            if (digits < 3) frac = frac * 10 + (text[p] - '0');
            ++digits;
            ++p;
        }
        if (digits == 0) return std::nullopt;
        while (digits < 3) {
            frac *= 10;
            ++digits;
        }
        millis = frac;
    }
    if (p + 1 != text.size() || text[p] != 'Z') return std::nullopt;
    if (month < 1 || month > 12 || day < 1 || day > 31 || hour > 23 || minute > 59 || second > 60)
        return std::nullopt;
    const std::int64_t days = days_from_civil(year, static_cast<unsigned>(month),
                                              static_cast<unsigned>(day));
    return days * 86400000LL + hour * 3600000LL + minute * 60000LL + second * 1000LL + millis;
}

ParseResult parse_events(std::istream& in, EventFormat format) {
    ParseResult result;
    std::string line;
    std::size_t line_no = 0;
    std::size_t considered = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        ++considered;
        std::string error;
        auto rec = format == EventFormat::csv ? parse_csv_line(line, error)
                                              : parse_jsonl_line(line, error);
        if (rec)
            result.records.push_back(std::move(*rec));
        else
            result.rejected.push_back(ParseDiagnostic{line_no, error});
    }
    if (considered > 0 && result.records.empty())
        throw std::runtime_error("no parseable event line in input (" +
                                 std::to_string(result.rejected.size()) + " rejected)");
    return result;
}

void write_events_csv(std::ostream& out, const std::vector<EventRecord>& records) {
    for (const EventRecord& rec : records)
        out << rec.timestamp << ',' << rec.source << ',' << rec.value << '\n';
}

std::string make_item_id(const std::string& source, const std::string& value) {
    return source + ": " + value;
}

std::string item_source(const Item& item) {
    const std::size_t sep = item.find(": ");
    return sep == std::string::npos ? item : item.substr(0, sep);
}

TimeSeries records_to_series(const std::vector<EventRecord>& records) {
    std::vector<std::pair<Timestamp, Item>> events;
    events.reserve(records.size());
    for (const EventRecord& rec : records)
        events.emplace_back(rec.timestamp, make_item_id(rec.source, rec.value));
    return build_time_series(events);
}

const SourceBins* DiscretizeSpec::find(const std::string& source) const {
    for (const SourceBins& bins : sources)
        if (bins.source == source) return &bins;
    return nullptr;
}

namespace {

std::string bin_label(const SourceBins& bins, double v) {
    if (bins.width > 0.0) {
        const double lo = std::floor(v / bins.width) * bins.width;
        return "[" + number_to_text(lo) + "," + number_to_text(lo + bins.width) + ")";
    }
    const auto& cuts = bins.cuts;
    if (v < cuts.front()) return "(-inf," + number_to_text(cuts.front()) + ")";
    if (v >= cuts.back()) return "[" + number_to_text(cuts.back()) + ",inf)";
    auto upper = std::upper_bound(cuts.begin(), cuts.end(), v);
    // v >= *(upper-1); a value exactly on a cut lands in the upper bin
    return "[" + number_to_text(*(upper - 1)) + "," + number_to_text(*upper) + ")";
}

std::optional<double> parse_number(const std::string& text) {
    if (text.empty()) return std::nullopt;
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (errno != 0 || end != text.c_str() + text.size() || !std::isfinite(v)) return std::nullopt;
    return v;
}

}  // namespace

DiscretizeResult discretize(const std::vector<EventRecord>& records, const DiscretizeSpec& spec) {
    DiscretizeResult result;
    std::map<std::string, std::string> last_label;  // per source
    for (const EventRecord& rec : records) {
        const SourceBins* bins = spec.find(rec.source);
        if (!bins) {
            result.records.push_back(rec);
            continue;
        }
        auto v = parse_number(rec.value);
        if (!v) {
            result.rejected.push_back("non-numeric value '" + rec.value + "' for source '" +
                                      rec.source + "' at " + std::to_string(rec.timestamp));
            continue;
        }
        std::string label = bin_label(*bins, *v);
        auto it = last_label.find(rec.source);
        if (it != last_label.end() && it->second == label) continue;  // no state change
        last_label[rec.source] = label;
        result.records.push_back(EventRecord{rec.timestamp, rec.source, std::move(label)});
    }
    return result;
}

bool glob_match(const std::string& pattern, const std::string& text) {
    std::size_t p = 0, t = 0;
    std::size_t star = std::string::npos, mark = 0;
    while (t < text.size()) {
        if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
            ++p;
            ++t;
        } else if (p < pattern.size() && pattern[p] == '*') {
            star = p++;
            mark = t;
        } else if (star != std::string::npos) {
            p = star + 1;
            t = ++mark;
        } else {
            return false;
        }
    }
    while (p < pattern.size() && pattern[p] == '*') ++p;
    return p == pattern.size();
}

bool GlobFilter::matches_source(const std::string& source) const {
    for (const std::string& pattern : patterns)
        if (glob_match(pattern, source)) return true;
    return false;
}

bool GlobFilter::matches_item(const Item& item) const {
    return matches_source(item_source(item)) || matches_source(item);
}

GlobFilter load_filter_file(std::istream& in) {
    GlobFilter filter;
    std::string line;
    while (std::getline(in, line)) {
        const std::string entry = trim(line);
        if (entry.empty() || entry[0] == '#') continue;
        filter.patterns.push_back(entry);
    }
    return filter;
}

}  // namespace tsrg
