#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tannakit::cli {

enum class Format { json, text, latex };

/// Throws InputError on an unknown name.
Format parse_format(const std::string& name);

struct RunConfig {
  std::size_t nmax = 6;
  std::size_t length_bound = 3;
  std::size_t maxlen = 5;
  std::size_t max_passes = 10000;
  /// --bound: overrides the bound the command uses (nmax for analyze,
  /// length_bound for uend/comod/hilbert, maxlen for comod --fiber).
  std::optional<std::size_t> bound;
  Format format = Format::json;
};

struct CommandOptions {
  std::optional<std::pair<std::string, std::string>> leq;
  std::optional<std::pair<std::string, std::string>> interval;
  std::vector<std::string> words;
  std::optional<std::pair<int, int>> fiber;
};

struct RunResult {
  int exit_code = 0;
  std::string document;
  std::string error;
};

inline constexpr const char* kCommands[] = {"analyze", "uend", "uaut", "comod", "poset", "hb", "classify", "hilbert"};

/// Runs one subcommand on the text of a spec. Exit code 0 on success, 1 on
/// input errors, 2 when the mathematics fails (not AS-regular, singular
/// pairing, inconclusive verification).
RunResult run(const std::string& command, const std::string& spec_text, const RunConfig& config,
              const CommandOptions& options = {});

}  // namespace tannakit::cli
