#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scamwatch/pipeline/config.hpp"
#include "scamwatch/pipeline/fetcher.hpp"

namespace scamwatch::pipeline {

enum class Subcommand { ingest, detect, liveness, campaigns, attribute, coverage, analytics, report, all };

std::optional<Subcommand> parse_subcommand(std::string_view name);
std::string_view to_string(Subcommand subcommand);

inline constexpr int kExitOk = 0;
inline constexpr int kExitPartial = 1;
inline constexpr int kExitFatal = 2;

struct RunResult {
  int exit_code = kExitOk;
  std::vector<std::string> messages;  // warnings and errors, in the order raised
};

// Runs one subcommand (or every subcommand in order for `all`), writing its
// artifacts under config.out. Never throws: configuration problems and
// missing inputs give kExitFatal, skipped malformed input gives
// kExitPartial. `fetcher` replaces the transport named in the config.
RunResult run(Subcommand subcommand, const PipelineConfig& config, Fetcher* fetcher = nullptr);

// Human-readable summary of whatever outputs exist under `out_dir`.
std::string render_report(const std::filesystem::path& out_dir);

}  // namespace scamwatch::pipeline
