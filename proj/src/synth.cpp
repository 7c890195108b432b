#include "tsrg/synth.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <tuple>

namespace tsrg {

namespace {

constexpr Duration kSlotGapFloorMs = 30'000;  // keeps habit instances out of each other's windows

Multiset to_multiset(const std::vector<HabitEvent>& events) {
    Multiset ms;
    for (const HabitEvent& e : events) ms.add(make_item_id(e.source, e.value));
    return ms;
}

Duration worst_case_span(const HabitSpec& spec) {
    Duration span = 0;
    for (Duration d : spec.delays_ms) span += d + spec.jitter_ms;
    return span;
}

}  // namespace

SynthResult generate_synthetic(const std::vector<HabitSpec>& specs, std::size_t length,
                               std::uint64_t seed) {
    for (const HabitSpec& spec : specs) {
        if (spec.condition.empty() || spec.prediction.empty())
            throw std::invalid_argument("habit '" + spec.name +
                                        "': condition and prediction must be non-empty");
        const std::size_t events = spec.condition.size() + spec.prediction.size();
        if (spec.delays_ms.size() + 1 != events)
            throw std::invalid_argument("habit '" + spec.name +
                                        "': need exactly one delay per consecutive event pair");
        if (spec.repetitions < 1)
            throw std::invalid_argument("habit '" + spec.name + "': repetitions must be >= 1");
        for (Duration d : spec.delays_ms)
            if (d < 1) throw std::invalid_argument("habit '" + spec.name + "': delays must be >= 1 ms");
    }

    std::mt19937_64 rng(seed);
    SynthResult result;

    // Ground truth and recoverability warnings.
    for (const HabitSpec& spec : specs) {
        GroundTruthRule rule;
        rule.habit = spec.name;
        rule.condition = to_multiset(spec.condition);
        rule.prediction = to_multiset(spec.prediction);
        rule.expected_support = spec.repetitions;
        rule.recoverable = true;
        if (spec.intended_window_ms > 0) {
            if (spec.jitter_ms > spec.intended_window_ms) {
                rule.recoverable = false;
                result.warnings.push_back("habit '" + spec.name +
                                          "': jitter exceeds the intended window; unrecoverable");
            } else if (worst_case_span(spec) > spec.intended_window_ms) {
                rule.recoverable = false;
                result.warnings.push_back(
                    "habit '" + spec.name +
                    "': worst-case span exceeds the intended window; unrecoverable");
            }
        }
        result.truth.push_back(std::move(rule));
    }

    // Interleave habit occurrences over well-separated slots.
    std::vector<std::size_t> slots;
    Duration slot_gap = kSlotGapFloorMs;
    for (std::size_t h = 0; h < specs.size(); ++h) {
        for (int r = 0; r < specs[h].repetitions; ++r) slots.push_back(h);
        slot_gap = std::max(slot_gap, 3 * specs[h].intended_window_ms);
        slot_gap = std::max(slot_gap, 3 * worst_case_span(specs[h]));
    }
    std::shuffle(slots.begin(), slots.end(), rng);

    std::set<std::tuple<Timestamp, std::string, std::string>> used;
    auto push_event = [&](Timestamp t, const std::string& source, const std::string& value) {
        while (!used.insert({t, source, value}).second) ++t;  // avoid exact duplicates
        result.records.push_back(EventRecord{t, source, value});
        return t;
    };

    std::uniform_int_distribution<Duration> slot_offset(0, slot_gap / 4);
    Timestamp span_end = 1000;
    std::vector<std::string> noise_pool;
    // a wide pool keeps random co-occurrence of any one noise pair far below
    // mining thresholds even at multi-second windows
    const std::size_t pool_size = std::max<std::size_t>(16, length / 50);
    for (std::size_t p = 0; p < pool_size; ++p)
        noise_pool.push_back("noise " + std::to_string(p));

    for (std::size_t s = 0; s < slots.size(); ++s) {
        const HabitSpec& spec = specs[slots[s]];
        std::vector<const HabitEvent*> sequence;
        for (const HabitEvent& e : spec.condition) sequence.push_back(&e);
        for (const HabitEvent& e : spec.prediction) sequence.push_back(&e);

        Timestamp t = static_cast<Timestamp>(s) * slot_gap + 1000 + slot_offset(rng);
        const Timestamp occurrence_start = t;
        t = push_event(t, sequence[0]->source, sequence[0]->value);
        for (std::size_t e = 1; e < sequence.size(); ++e) {
            Duration delay = spec.delays_ms[e - 1];
            if (spec.jitter_ms > 0) {
                std::uniform_int_distribution<Duration> jitter(-spec.jitter_ms, spec.jitter_ms);
                delay += jitter(rng);
            }
            if (delay < 1) delay = 1;
            t = push_event(t + delay, sequence[e]->source, sequence[e]->value);
        }
        span_end = std::max(span_end, t);

        // local noise around this occurrence
        if (spec.noise_rate > 0.0) {
            const Duration neighborhood = (t - occurrence_start) + 4000;
            std::poisson_distribution<int> noise_count(spec.noise_rate * neighborhood / 1000.0);
            std::uniform_int_distribution<Duration> noise_offset(0, neighborhood);
            std::uniform_int_distribution<std::size_t> noise_item(0, noise_pool.size() - 1);
            const int burst = noise_count(rng);
            for (int q = 0; q < burst; ++q)
                push_event(occurrence_start - 2000 + noise_offset(rng), noise_pool[noise_item(rng)],
                           "1");
        }
    }
    span_end = std::max(span_end, static_cast<Timestamp>(slots.size()) * slot_gap + 1000);

    // Background noise up to the target length.
    if (result.records.size() < length && !noise_pool.empty()) {
        std::uniform_int_distribution<Timestamp> noise_time(0, span_end);
        std::uniform_int_distribution<std::size_t> noise_item(0, noise_pool.size() - 1);
        const std::size_t missing = length - result.records.size();
        for (std::size_t q = 0; q < missing; ++q)
            push_event(noise_time(rng), noise_pool[noise_item(rng)], "1");
    }

    std::sort(result.records.begin(), result.records.end(),
              [](const EventRecord& a, const EventRecord& b) {
                  return std::tie(a.timestamp, a.source, a.value) <
                         std::tie(b.timestamp, b.source, b.value);
              });
    result.series = records_to_series(result.records);
    return result;
}

}  // namespace tsrg
