#include "tsrg/cli.hpp"

#include <algorithm>
#include <cerrno>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tsrg/ingest.hpp"
#include "tsrg/interest.hpp"
#include "tsrg/miner.hpp"
#include "tsrg/support_engine.hpp"
#include "tsrg/synth.hpp"
#include "tsrg/transaction_baseline.hpp"

namespace tsrg {

namespace {

using nlohmann::json;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Duration require_duration(const std::string& text, const std::string& flag) {
    auto d = parse_duration_ms(text);
    if (!d || *d <= 0)
        throw ConfigError(flag + ": expected a positive duration like 500ms, 2s or 5m, got '" +
                          text + "'");
    return *d;
}

json multiset_json(const Multiset& ms) {
    json arr = json::array();
    for (const auto& [item, mult] : ms.counts) arr.push_back(json::array({item, mult}));
    return arr;
}

json interest_json(double v) {
    // JSON cannot express infinities (conviction at confidence 1)
    if (!std::isfinite(v)) return nullptr;
    return v;
}

json rule_json(const Rule& rule, Duration window) {
    json j;
    j["condition"] = multiset_json(rule.condition);
    j["prediction"] = multiset_json(rule.prediction);
    j["support"] = rule.support;
    j["rel_support"] = rule.rel_support;
    j["interest"] = interest_json(rule.interest);
    j["window_ms"] = window;
    return j;
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot read input file '" + path + "'");
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write output file '" + path + "'");
    return out;
}

std::vector<EventRecord> read_records(const std::string& path, const std::string& format_name,
                                      const std::string& discretize_path) {
    auto format = parse_event_format(format_name);
    if (!format) throw ConfigError("unknown input format '" + format_name + "'");

    std::ifstream in = open_input(path);
    ParseResult parsed = parse_events(in, *format);
    for (const ParseDiagnostic& d : parsed.rejected)
        std::cerr << path << ":" << d.line << ": rejected: " << d.message << "\n";

    if (discretize_path.empty()) return std::move(parsed.records);

    std::ifstream spec_in(discretize_path);
    if (!spec_in) throw ConfigError("cannot read discretization spec '" + discretize_path + "'");
    json spec_json = json::parse(spec_in, nullptr, false);
    if (spec_json.is_discarded() || !spec_json.is_object() || !spec_json.contains("sources"))
        throw ConfigError("discretization spec must be a JSON object with a 'sources' array");
    DiscretizeSpec spec;
    for (const auto& entry : spec_json["sources"]) {
        SourceBins bins;
        bins.source = entry.at("source").get<std::string>();
        if (entry.contains("width")) bins.width = entry["width"].get<double>();
        if (entry.contains("cuts")) bins.cuts = entry["cuts"].get<std::vector<double>>();
        if ((bins.width > 0.0) == !bins.cuts.empty())
            throw ConfigError("source '" + bins.source +
                              "': give exactly one of a positive width or a cuts array");
        if (!std::is_sorted(bins.cuts.begin(), bins.cuts.end()))
            throw ConfigError("source '" + bins.source + "': cuts must be ascending");
        spec.sources.push_back(std::move(bins));
    }
    DiscretizeResult out = discretize(parsed.records, spec);
    for (const std::string& msg : out.rejected) std::cerr << "discretize: rejected: " << msg << "\n";
    return std::move(out.records);
}

GlobFilter load_filter(const std::string& path, const std::vector<EventRecord>& records) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read filter file '" + path + "'");
    GlobFilter filter = load_filter_file(in);
    std::set<std::string> universe;
    for (const EventRecord& rec : records) universe.insert(rec.source);
    for (const std::string& pattern : filter.patterns) {
        bool hit = false;
        for (const std::string& source : universe)
            if (glob_match(pattern, source)) {
                hit = true;
                break;
            }
        // full-item patterns still count when some item matches
        for (auto it = records.begin(); !hit && it != records.end(); ++it)
            hit = glob_match(pattern, make_item_id(it->source, it->value));
        if (!hit)
            std::cerr << "warning: filter pattern '" << pattern
                      << "' matches no source in the input\n";
    }
    return filter;
}

struct MineArgs {
    std::string input;
    std::string format = "csv";
    std::string window;
    int min_sup = 20;
    double min_int = 0.9;
    std::string measure = "netconf";
    std::string predict_only;
    std::string condition_only;
    std::size_t max_condition = 0;  // 0 = unlimited
    std::size_t max_prediction = 0;
    std::string discretize_spec;
    std::string output;
    std::string stats_output;
};

int cmd_mine(const MineArgs& args) {
    MiningParams params;
    params.window = require_duration(args.window, "--window");
    if (args.min_sup < 1) throw ConfigError("--min-sup must be >= 1");
    params.min_sup = args.min_sup;
    auto measure = parse_measure(args.measure);
    if (!measure) throw ConfigError("unknown measure '" + args.measure + "'");
    params.measure = *measure;
    if (!min_interest_in_codomain(params.measure, args.min_int))
        throw ConfigError("--min-int outside the codomain of " + measure_name(params.measure));
    params.min_int = args.min_int;
    params.max_condition_size = args.max_condition == 0 ? kNoSizeLimit : args.max_condition;
    params.max_prediction_size = args.max_prediction == 0 ? kNoSizeLimit : args.max_prediction;

    std::vector<EventRecord> records = read_records(args.input, args.format, args.discretize_spec);
    if (!args.predict_only.empty()) {
        GlobFilter filter = load_filter(args.predict_only, records);
        params.prediction_filter = [filter](const Item& item) { return filter.matches_item(item); };
    }
    if (!args.condition_only.empty()) {
        GlobFilter filter = load_filter(args.condition_only, records);
        params.condition_filter = [filter](const Item& item) { return filter.matches_item(item); };
    }

    TimeSeries ts = records_to_series(records);
    if (ts.empty()) throw DataError("input contains no usable events");

    const auto started = std::chrono::steady_clock::now();
    std::vector<Rule> rules = mine(ts, params);
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - started)
                             .count();

    std::ofstream file_out;
    std::ostream* out = &std::cout;
    if (!args.output.empty()) {
        file_out = open_output(args.output);
        out = &file_out;
    }
    for (const Rule& rule : rules) *out << rule_json(rule, params.window).dump() << "\n";

    double mean_interest = 0.0;
    for (const Rule& rule : rules) mean_interest += rule.interest;
    if (!rules.empty()) mean_interest /= static_cast<double>(rules.size());
    json stats;
    stats["rule_count"] = rules.size();
    stats["mean_interest"] = interest_json(mean_interest);
    stats["elapsed_ms"] = elapsed;
    if (!args.stats_output.empty())
        open_output(args.stats_output) << stats.dump() << "\n";
    else
        std::cerr << stats.dump() << "\n";
    return kExitOk;
}

struct BaselineArgs {
    std::string input;
    std::string format = "csv";
    std::string delta_tr;
    std::string window;
    std::string cond_item;
    std::string pred_item;
    std::string discretize_spec;
    std::string output;
};

int cmd_baseline(const BaselineArgs& args) {
    const Duration delta_tr = require_duration(args.delta_tr, "--delta-tr");
    const Duration window = require_duration(args.window, "--window");

    std::vector<EventRecord> records = read_records(args.input, args.format, args.discretize_spec);
    TimeSeries ts = records_to_series(records);
    if (ts.empty()) throw DataError("input contains no usable events");

    const PathologyReport report =
        pathology_report(ts, delta_tr, window, args.cond_item, args.pred_item);

    json j;
    j["cond_item"] = args.cond_item;
    j["pred_item"] = args.pred_item;
    j["delta_tr_ms"] = delta_tr;
    j["window_ms"] = window;
    j["transactions"] = {{"count", report.transaction_count},
                         {"sup_rule", report.transaction_sup_rule},
                         {"sup_cond", report.transaction_sup_i},
                         {"sup_pred", report.transaction_sup_j},
                         {"confidence", report.transaction_confidence_defined
                                            ? json(report.transaction_confidence)
                                            : json(nullptr)}};
    j["time_series"] = {{"sup_cond", report.series_sup_i},
                        {"sup_pred", report.series_sup_j},
                        {"sup_rule", report.series_sup_rule},
                        {"confidence", report.series_confidence_defined
                                           ? json(report.series_confidence)
                                           : json(nullptr)},
                        {"netconf", report.netconf_defined ? json(report.netconf_value)
                                                           : json(nullptr)}};

    if (!args.output.empty())
        open_output(args.output) << j.dump() << "\n";
    else
        std::cout << j.dump() << "\n";
    return kExitOk;
}

struct SynthArgs {
    std::string habits;
    std::size_t length = 10000;
    std::uint64_t seed = 1;
    std::string output;
    std::string truth;
};

std::vector<HabitEvent> habit_events_from_json(const json& arr) {
    std::vector<HabitEvent> events;
    for (const auto& e : arr)
        events.push_back(HabitEvent{e.at("source").get<std::string>(),
                                    e.at("value").get<std::string>()});
    return events;
}

int cmd_synth(const SynthArgs& args) {
    std::ifstream in(args.habits);
    if (!in) throw ConfigError("cannot read habits file '" + args.habits + "'");
    json spec_json = json::parse(in, nullptr, false);
    if (spec_json.is_discarded() || !spec_json.is_object() || !spec_json.contains("habits"))
        throw ConfigError("habits file must be a JSON object with a 'habits' array");

    std::vector<HabitSpec> specs;
    try {
        for (const auto& h : spec_json["habits"]) {
            HabitSpec spec;
            spec.name = h.value("name", "habit " + std::to_string(specs.size()));
            spec.condition = habit_events_from_json(h.at("condition"));
            spec.prediction = habit_events_from_json(h.at("prediction"));
            spec.delays_ms = h.at("delays_ms").get<std::vector<Duration>>();
            spec.repetitions = h.at("repetitions").get<int>();
            spec.jitter_ms = h.value("jitter_ms", 0);
            spec.intended_window_ms = h.value("intended_window_ms", 0);
            spec.noise_rate = h.value("noise_rate", 0.0);
            specs.push_back(std::move(spec));
        }
    } catch (const json::exception& e) {
        throw ConfigError(std::string("habits file: ") + e.what());
    }

    SynthResult result;
    try {
        result = generate_synthetic(specs, args.length, args.seed);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    for (const std::string& w : result.warnings) std::cerr << "warning: " << w << "\n";

    std::ofstream log_out = open_output(args.output);
    write_events_csv(log_out, result.records);

    json truth;
    truth["seed"] = args.seed;
    truth["length"] = args.length;
    truth["warnings"] = result.warnings;
    truth["rules"] = json::array();
    for (const GroundTruthRule& rule : result.truth)
        truth["rules"].push_back({{"habit", rule.habit},
                                  {"condition", multiset_json(rule.condition)},
                                  {"prediction", multiset_json(rule.prediction)},
                                  {"expected_support", rule.expected_support},
                                  {"recoverable", rule.recoverable},
                                  {"key", canonical_rule_key(rule.condition, rule.prediction)}});
    open_output(args.truth) << truth.dump(2) << "\n";
    return kExitOk;
}

struct StatsArgs {
    std::string input;
    std::string output;
};

int cmd_stats(const StatsArgs& args) {
    std::ifstream in = open_input(args.input);
    std::string line;
    std::size_t rule_count = 0;
    std::size_t bad_lines = 0;
    std::size_t considered = 0;
    double interest_sum = 0.0;
    double support_sum = 0.0;
    std::set<Duration> windows;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        ++considered;
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object() || !j.contains("support")) {
            ++bad_lines;
            continue;
        }
        ++rule_count;
        support_sum += j.value("support", 0);
        if (j.contains("interest") && j["interest"].is_number())
            interest_sum += j["interest"].get<double>();
        if (j.contains("window_ms") && j["window_ms"].is_number())
            windows.insert(j["window_ms"].get<Duration>());
    }
    if (considered > 0 && rule_count == 0) throw DataError("no rule object in '" + args.input + "'");
    if (bad_lines > 0) std::cerr << "warning: skipped " << bad_lines << " non-rule lines\n";

    json j;
    j["rule_count"] = rule_count;
    j["mean_interest"] = rule_count ? json(interest_sum / static_cast<double>(rule_count)) : json(nullptr);
    j["mean_support"] = rule_count ? json(support_sum / static_cast<double>(rule_count)) : json(nullptr);
    j["windows_ms"] = windows;
    if (!args.output.empty())
        open_output(args.output) << j.dump() << "\n";
    else
        std::cout << j.dump() << "\n";
    return kExitOk;
}

}  // namespace

std::optional<Duration> parse_duration_ms(const std::string& text) {
    if (text.empty()) return std::nullopt;
    double scale = 1.0;
    std::string number = text;
    if (text.size() > 2 && text.ends_with("ms")) {
        number = text.substr(0, text.size() - 2);
    } else if (text.size() > 1 && text.back() == 's') {
        scale = 1000.0;
        number = text.substr(0, text.size() - 1);
    } else if (text.size() > 1 && text.back() == 'm') {
        scale = 60'000.0;
        number = text.substr(0, text.size() - 1);
    }
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(number.c_str(), &end);
    if (errno != 0 || end != number.c_str() + number.size() || !std::isfinite(v))
        return std::nullopt;
    const double ms = v * scale;
    if (ms < 0 || ms > 9e15) return std::nullopt;
    return static_cast<Duration>(std::llround(ms));
}

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"tsrg - partially-ordered prediction rule mining over event time series"};
    app.require_subcommand(1);

    MineArgs mine_args;
    CLI::App* mine_cmd = app.add_subcommand("mine", "mine prediction rules from an event log");
    mine_cmd->add_option("--input", mine_args.input, "event log file")->required();
    mine_cmd->add_option("--format", mine_args.format, "csv or jsonl (default csv)");
    mine_cmd->add_option("--window", mine_args.window, "rule window, e.g. 2s or 1500ms")->required();
    mine_cmd->add_option("--min-sup", mine_args.min_sup, "minimum absolute support (default 20)");
    mine_cmd->add_option("--min-int", mine_args.min_int, "minimum interest (default 0.9)");
    mine_cmd->add_option("--measure", mine_args.measure,
                         "netconf | confidence | lift | conviction (default netconf)");
    mine_cmd->add_option("--predict-only", mine_args.predict_only,
                         "file of source ids/globs allowed in predictions");
    mine_cmd->add_option("--condition-only", mine_args.condition_only,
                         "file of source ids/globs allowed in conditions");
    mine_cmd->add_option("--max-condition-size", mine_args.max_condition,
                         "cap on condition items (0 = unlimited)");
    mine_cmd->add_option("--max-prediction-size", mine_args.max_prediction,
                         "cap on prediction items (0 = unlimited)");
    mine_cmd->add_option("--discretize", mine_args.discretize_spec,
                         "JSON spec binning numeric sources");
    mine_cmd->add_option("--output", mine_args.output, "rule JSONL output (default stdout)");
    mine_cmd->add_option("--stats-output", mine_args.stats_output,
                         "stats JSON output (default stderr)");

    BaselineArgs baseline_args;
    CLI::App* baseline_cmd = app.add_subcommand(
        "baseline", "compare transaction-based and time-series support for one rule");
    baseline_cmd->add_option("--input", baseline_args.input, "event log file")->required();
    baseline_cmd->add_option("--format", baseline_args.format, "csv or jsonl (default csv)");
    baseline_cmd->add_option("--delta-tr", baseline_args.delta_tr, "transaction slice duration")
        ->required();
    baseline_cmd->add_option("--window", baseline_args.window, "time-series rule window")
        ->required();
    baseline_cmd->add_option("--cond-item", baseline_args.cond_item, "condition item id")
        ->required();
    baseline_cmd->add_option("--pred-item", baseline_args.pred_item, "prediction item id")
        ->required();
    baseline_cmd->add_option("--discretize", baseline_args.discretize_spec,
                             "JSON spec binning numeric sources");
    baseline_cmd->add_option("--output", baseline_args.output, "report output (default stdout)");

    SynthArgs synth_args;
    CLI::App* synth_cmd =
        app.add_subcommand("synth", "generate a synthetic habit log with ground truth");
    synth_cmd->add_option("--habits", synth_args.habits, "habit spec JSON file")->required();
    synth_cmd->add_option("--length", synth_args.length, "target total event count");
    synth_cmd->add_option("--seed", synth_args.seed, "random seed");
    synth_cmd->add_option("--output", synth_args.output, "CSV log output")->required();
    synth_cmd->add_option("--truth", synth_args.truth, "ground-truth JSON output")->required();

    StatsArgs stats_args;
    CLI::App* stats_cmd = app.add_subcommand("stats", "summarize a rule JSONL file");
    stats_cmd->add_option("--input", stats_args.input, "rule JSONL file")->required();
    stats_cmd->add_option("--output", stats_args.output, "summary output (default stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfigError;
    }

    try {
        if (mine_cmd->parsed()) return cmd_mine(mine_args);
        if (baseline_cmd->parsed()) return cmd_baseline(baseline_args);
        if (synth_cmd->parsed()) return cmd_synth(synth_args);
        if (stats_cmd->parsed()) return cmd_stats(stats_args);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDataError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDataError;
    }
    return kExitConfigError;
}

int run_cli(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_cli(args);
}

}  // namespace tsrg
