// cli.hpp - command-line surface: mine | baseline | synth | stats.
// Exit codes: 0 success, 1 data error (unreadable/unparseable input),
// 2 configuration error (bad flags or parameter ranges).
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tsrg/event_model.hpp"

namespace tsrg {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 1;
inline constexpr int kExitConfigError = 2;

// "500ms", "2s", "5m" or a raw integer (milliseconds).
std::optional<Duration> parse_duration_ms(const std::string& text);

int run_cli(const std::vector<std::string>& args);
int run_cli(int argc, char** argv);

}  // namespace tsrg
