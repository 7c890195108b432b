// event_model.hpp - time series, multisets, rules and rule occurrences.
// Shared value types for the whole library. Everything here is immutable
// after construction and safe to share across threads.
#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

namespace tsrg {

// Milliseconds since an arbitrary epoch. Integer so blacklist membership
// and window arithmetic are exact.
using Timestamp = std::int64_t;
using Duration = std::int64_t;

// Item identity is its text id (e.g. "bedroom light 1: 0"). Expansion
// ordering uses the byte-wise lexicographic order of the id.
using Item = std::string;

// One observation point: the set of distinct items seen at one timestamp.
struct Entry {
    Timestamp time = 0;
    std::vector<Item> items;  // sorted, no duplicates

    bool operator==(const Entry&) const = default;
};

// Ordered sequence of entries with strictly increasing timestamps.
// Spacing may be irregular; every itemset is non-empty.
struct TimeSeries {
    std::vector<Entry> entries;

    std::size_t size() const { return entries.size(); }
    bool empty() const { return entries.empty(); }

    // Index of the first entry with time >= t (entries.size() if none).
    std::size_t first_at_or_after(Timestamp t) const;
    // Index of the first entry with time > t.
    std::size_t first_after(Timestamp t) const;

    bool operator==(const TimeSeries&) const = default;
};

// Bag of items with multiplicities >= 1. Condition or prediction part of
// a rule.
struct Multiset {
    std::map<Item, int> counts;

    Multiset() = default;
    // From a list of items; repeats accumulate multiplicity.
    explicit Multiset(std::initializer_list<Item> items);

    bool empty() const { return counts.empty(); }
    // Total number of instances (sum of multiplicities).
    std::size_t size() const;
    int multiplicity(const Item& x) const;
    // Greatest item id present. Multiset must be non-empty.
    const Item& max_item() const;
    void add(const Item& x, int times = 1);

    bool operator==(const Multiset&) const = default;
    auto operator<=>(const Multiset&) const = default;
};

// Timestamps realizing one side of a rule occurrence: item -> sorted
// timestamps, exactly multiplicity-many per item.
using OccurrenceMap = std::map<Item, std::vector<Timestamp>>;

// One concrete occurrence of a rule. Every condition timestamp precedes
// every prediction timestamp and the whole span fits in the window.
struct RuleOccurrence {
    OccurrenceMap condition;
    OccurrenceMap prediction;

    Timestamp condition_min() const;
    Timestamp condition_max() const;
    Timestamp prediction_min() const;
    Timestamp prediction_max() const;
    Timestamp min_time() const;
    Timestamp max_time() const;
    Duration span() const { return max_time() - min_time(); }

    bool operator==(const RuleOccurrence&) const = default;
};

// Adds one timestamp to an item's slot, keeping the slot sorted.
void occurrence_add(OccurrenceMap& side, const Item& x, Timestamp t);

// A mined prediction rule: condition => prediction, with its statistics.
struct Rule {
    Multiset condition;
    Multiset prediction;
    int support = 0;
    double rel_support = 0.0;
    double interest = 0.0;
};

// Groups raw (timestamp, item) events into a time series: events sharing a
// timestamp merge into one itemset, duplicates within a timestamp collapse,
// entries come out sorted ascending. Empty input gives an empty series.
TimeSeries build_time_series(const std::vector<std::pair<Timestamp, Item>>& events);

// Deterministic text key for a rule's multiset pair, e.g.
// "b:1,c:1=>x:1,y:1". Equal condition/prediction multisets give equal keys.
std::string canonical_rule_key(const Rule& rule);
std::string canonical_rule_key(const Multiset& condition, const Multiset& prediction);

// "b:1,c:1" part of the key; also used by serialization.
std::string multiset_key(const Multiset& ms);

}  // namespace tsrg
