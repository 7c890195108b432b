// ingest.hpp - event-log ingestion: CSV/JSONL parsing, amplitude
// discretization, item rendering and glob-based item filters.
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tsrg/event_model.hpp"

namespace tsrg {

// One raw device event. The mined item id is "source: value".
struct EventRecord {
    Timestamp timestamp = 0;
    std::string source;
    std::string value;

    bool operator==(const EventRecord&) const = default;
};

enum class EventFormat { csv, jsonl };
std::optional<EventFormat> parse_event_format(const std::string& name);

struct ParseDiagnostic {
    std::size_t line = 0;  // 1-based
    std::string message;
};

struct ParseResult {
    std::vector<EventRecord> records;
    std::vector<ParseDiagnostic> rejected;
};

// Reads "timestamp,source,value" lines (CSV) or one JSON object per line
// with the same fields. Timestamps are epoch milliseconds or ISO-8601 UTC
// ("2017-01-31T10:44:00Z"). Invalid lines are collected with their line
// numbers; the parse only fails (std::runtime_error) when every non-blank
// line is invalid.
ParseResult parse_events(std::istream& in, EventFormat format);

// Epoch-ms CSV writer; parse_events(write_events_csv(x)) == x.
void write_events_csv(std::ostream& out, const std::vector<EventRecord>& records);

std::string make_item_id(const std::string& source, const std::string& value);

// Groups records into the mining input.
TimeSeries records_to_series(const std::vector<EventRecord>& records);

// Epoch-ms integer, or ISO-8601 "YYYY-MM-DDTHH:MM:SS[.fff]Z".
std::optional<Timestamp> parse_timestamp(const std::string& text);

// Binning for one numeric source: fixed width, or explicit cut points.
// Bins are half-open; a value exactly on an edge goes to the upper bin.
struct SourceBins {
    std::string source;
    double width = 0.0;         // > 0 when used
    std::vector<double> cuts;   // ascending when used
};

struct DiscretizeSpec {
    std::vector<SourceBins> sources;

    const SourceBins* find(const std::string& source) const;
};

struct DiscretizeResult {
    std::vector<EventRecord> records;
    std::vector<std::string> rejected;  // diagnostics for non-numeric values
};

// Maps numeric values of configured sources to bin labels like "[19,20)".
// Consecutive records of a source falling in the same bin collapse to one
// event at the first timestamp (state-change semantics). Other sources pass
// through untouched.
DiscretizeResult discretize(const std::vector<EventRecord>& records, const DiscretizeSpec& spec);

// '*' and '?' wildcards.
bool glob_match(const std::string& pattern, const std::string& text);

// Item filter backed by a pattern list (one source id or glob per line).
// An item matches when some pattern matches its source (the id up to the
// first ": ") or the full id.
struct GlobFilter {
    std::vector<std::string> patterns;

    bool matches_source(const std::string& source) const;
    bool matches_item(const Item& item) const;
};

// Reads patterns from a text stream; blank lines and '#' comments skipped.
GlobFilter load_filter_file(std::istream& in);

std::string item_source(const Item& item);

}  // namespace tsrg
