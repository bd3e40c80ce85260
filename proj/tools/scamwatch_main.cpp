#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "scamwatch/pipeline/pipeline.hpp"

using namespace scamwatch;

int main(int argc, char** argv) {
  CLI::App app{"Tech-support scam crawl analysis"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  std::size_t parallelism = 0;
  std::string transport;
  std::string replay_dir;
  std::string date;

  auto add_flags = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "Pipeline config (JSON)")->required();
    sub->add_option("--out", out_dir, "Output directory");
    sub->add_option("--parallelism", parallelism, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--transport", transport, "Fetch transport")->check(CLI::IsMember({"replay", "live"}));
    sub->add_option("--replay-dir", replay_dir, "Recorded responses, one <YYYY-MM-DD>.jsonl per day");
    sub->add_option("--date", date, "Logical today (YYYY-MM-DD) for liveness checks");
  };
  for (auto sub : {pipeline::Subcommand::ingest, pipeline::Subcommand::detect, pipeline::Subcommand::liveness,
                   pipeline::Subcommand::campaigns, pipeline::Subcommand::attribute, pipeline::Subcommand::coverage,
                   pipeline::Subcommand::analytics, pipeline::Subcommand::report, pipeline::Subcommand::all}) {
    add_flags(app.add_subcommand(std::string(pipeline::to_string(sub))));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : pipeline::kExitFatal;
  }

  auto subcommand = pipeline::parse_subcommand(app.get_subcommands().front()->get_name());
  pipeline::PipelineConfig config;
  try {
    config = pipeline::load_config(config_path);
    if (!out_dir.empty()) config.out = out_dir;
    if (parallelism > 0) config.parallelism = parallelism;
    if (!transport.empty()) config.transport = transport == "live" ? pipeline::Transport::live : pipeline::Transport::replay;
    if (!replay_dir.empty()) config.replay_dir = replay_dir;
    if (!date.empty()) config.date = parse_date(date);
  } catch (const Error& e) {
    std::cerr << "scamwatch: " << e.what() << "\n";
    return pipeline::kExitFatal;
  }

  auto result = pipeline::run(*subcommand, config);
  for (const auto& message : result.messages) std::cerr << "scamwatch: " << message << "\n";
  return result.exit_code;
}
