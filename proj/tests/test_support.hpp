// test_support.hpp - shared fixtures and random-instance generators for the
// unit and acceptance suites.
#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "tsrg/event_model.hpp"

namespace tsrg::testing {

// Nine-entry smart-home day: presence sensor plus a radio with a station
// selector. Two entries carry two simultaneous items.
inline TimeSeries radio_room_series() {
    auto minutes = [](std::int64_t m) { return m * 60'000; };
    std::vector<std::pair<Timestamp, Item>> events = {
        {minutes(600), "presence: on"},     // 10:00
        {minutes(644), "radio: on"},        // 10:44
        {minutes(644), "station: music"},
        {minutes(696), "radio: off"},       // 11:36
        {minutes(731), "presence: off"},    // 12:11
        {minutes(854), "presence: on"},     // 14:14
        {minutes(892), "radio: on"},        // 14:52
        {minutes(892), "station: news"},
        {minutes(949), "station: music"},   // 15:49
        {minutes(1034), "radio: off"},      // 17:14
        {minutes(1077), "presence: off"},   // 17:57
    };
    return build_time_series(events);
}

// The 15-entry series whose transaction conversion validates x => y with
// confidence 1 while the time-series support says 0.25: four x around each
// y, sliced into identical 5-second transactions.
inline TimeSeries pathology_series() {
    std::vector<std::pair<Timestamp, Item>> events;
    for (Timestamp t : {0, 1, 3, 4, 10, 11, 13, 14, 20, 21, 23, 24})
        events.emplace_back(t * 1000, "x");
    for (Timestamp t : {2, 12, 22}) events.emplace_back(t * 1000, "y");
    return build_time_series(events);
}

// Seconds-scale three-entry series used by the expansion edge cases.
inline TimeSeries xxy_series() {
    return build_time_series({{1000, "x"}, {2000, "x"}, {3000, "y"}});
}

struct RandomSeriesOptions {
    int max_entries = 40;
    int max_alphabet = 5;
    int max_items_per_entry = 3;
    Duration min_gap = 400;
    Duration max_gap = 1600;
};

// Random small instance; item ids are "a".."f".
inline TimeSeries random_series(std::mt19937_64& rng, const RandomSeriesOptions& opt = {}) {
    static const char* names[] = {"a", "b", "c", "d", "e", "f"};
    std::uniform_int_distribution<int> entry_count(1, opt.max_entries);
    std::uniform_int_distribution<int> alphabet(2, opt.max_alphabet);
    std::uniform_int_distribution<Duration> gap(opt.min_gap, opt.max_gap);

    const int n = entry_count(rng);
    const int letters = alphabet(rng);
    std::uniform_int_distribution<int> item_count(1, opt.max_items_per_entry);
    std::uniform_int_distribution<int> letter(0, letters - 1);

    std::vector<std::pair<Timestamp, Item>> events;
    Timestamp t = 0;
    for (int e = 0; e < n; ++e) {
        t += gap(rng);
        const int count = item_count(rng);
        for (int q = 0; q < count; ++q) events.emplace_back(t, names[letter(rng)]);
    }
    return build_time_series(events);
}

// Multiset over the items present in the series (absent-item cases are the
// caller's business). Size 1..max_size counting multiplicities.
inline Multiset random_multiset(std::mt19937_64& rng, const TimeSeries& ts, int max_size) {
    std::vector<Item> present;
    for (const Entry& e : ts.entries)
        for (const Item& x : e.items) present.push_back(x);
    std::sort(present.begin(), present.end());
    present.erase(std::unique(present.begin(), present.end()), present.end());

    std::uniform_int_distribution<int> size_dist(1, max_size);
    std::uniform_int_distribution<std::size_t> pick(0, present.size() - 1);
    Multiset ms;
    const int size = size_dist(rng);
    for (int q = 0; q < size; ++q) ms.add(present[pick(rng)]);
    return ms;
}

}  // namespace tsrg::testing
