// synth.hpp - deterministic synthetic habit-log generator. Produces a
// device event log with injected habits plus background noise, together
// with the rules a miner must recover. Ground truth for the acceptance
// suite and the `synth` CLI subcommand.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tsrg/event_model.hpp"
#include "tsrg/ingest.hpp"

namespace tsrg {

// (source, value) pair; the log stores both, the miner sees "source: value".
struct HabitEvent {
    std::string source;
    std::string value;
};

// One habit: the condition events, then the prediction events, separated by
// fixed delays (one per consecutive event pair), repeated `repetitions`
// times with +/- jitter on every delay. `noise_rate` adds unrelated events
// (events per second) around each occurrence. The habit stays recoverable
// as long as its worst-case span fits `intended_window_ms`.
struct HabitSpec {
    std::string name;
    std::vector<HabitEvent> condition;
    std::vector<HabitEvent> prediction;
    std::vector<Duration> delays_ms;  // size = condition+prediction count - 1
    int repetitions = 0;
    Duration jitter_ms = 0;
    Duration intended_window_ms = 0;
    double noise_rate = 0.0;
};

struct GroundTruthRule {
    std::string habit;
    Multiset condition;
    Multiset prediction;
    int expected_support = 0;
    bool recoverable = true;
};

struct SynthResult {
    std::vector<EventRecord> records;  // time-sorted log
    TimeSeries series;
    std::vector<GroundTruthRule> truth;
    std::vector<std::string> warnings;
};

// Deterministic for a given (specs, length, seed): habit occurrences are
// spread over well-separated slots, per-habit noise and uniform background
// noise fill the log up to ~`length` events.
SynthResult generate_synthetic(const std::vector<HabitSpec>& specs, std::size_t length,
                               std::uint64_t seed);

}  // namespace tsrg
