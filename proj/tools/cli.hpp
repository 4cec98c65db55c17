#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace forge::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitPropertyFails = 1;
inline constexpr int kExitInputError = 2;

struct Options {
  std::optional<std::int64_t> h0, d, n, f, m, min_f, trials;
  std::optional<int> max_len, depth, jobs;
  std::optional<std::uint64_t> seed;
  std::string mode = "balanced";
  std::string format = "text";
  std::optional<std::string> gate;
  std::optional<std::string> A, T, X, Y, v1, v2, lhs, rhs, identity, input;
};

// One terminal subcommand with its validated flags, e.g. path "word.reduce".
struct Command {
  std::string path;
  std::vector<std::string> args;
  Options options;
};

// Thrown for unknown subcommands or flags and missing arguments; carries the
// usage text to print.
struct UsageError {
  std::string message;
  bool help_requested = false;
};

Command parse_args(const std::vector<std::string>& argv);

struct Outcome {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

Outcome execute(const Command& command);

// parse_args + execute with usage and library errors mapped to exit 2.
Outcome run(const std::vector<std::string>& argv);

}  // namespace forge::cli
