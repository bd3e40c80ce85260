#include <doctest.h>

#include <atomic>
#include <cstdlib>
#include <random>
#include <sys/wait.h>

#include <json.hpp>

#include "scamwatch/common/text.hpp"
#include "scamwatch/corpus/crawl_record.hpp"
#include "scamwatch/detector/verdict.hpp"
#include "scamwatch/liveness/timeline_store.hpp"
#include "scamwatch/pipeline/config.hpp"
#include "scamwatch/pipeline/fetcher.hpp"
#include "scamwatch/pipeline/pipeline.hpp"
#include "synthetic_corpus.hpp"

using namespace scamwatch;
using namespace scamwatch::pipeline;
namespace fs = std::filesystem;

namespace {

const fs::path kFixtures = SCAMWATCH_FIXTURES;

fs::path scratch(const std::string& name) {
  static std::mt19937_64 rng(std::random_device{}());
  fs::path dir = fs::temp_directory_path() / ("scamwatch-" + name + "-" + std::to_string(rng() % 1000000000));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::map<std::string, std::string> tree(const fs::path& root) {
  std::map<std::string, std::string> out;
  for (const auto& entry : fs::recursive_directory_iterator(root)) {
    if (entry.is_regular_file()) out[fs::relative(entry.path(), root).string()] = read_file(entry.path());
  }
  return out;
}

PipelineConfig fixture_config(const fs::path& out, std::size_t parallelism = 1) {
  auto config = load_config(kFixtures / "pipeline.json");
  config.out = out;
  config.parallelism = parallelism;
  return config;
}

// Writes a generated corpus and a config naming only it.
PipelineConfig synthetic_config(const fs::path& dir, std::size_t scams, std::size_t benign) {
  std::string lines;
  for (const auto& l : testing::labeled_corpus(77, scams, benign)) lines += corpus::serialize_record(l.record) + "\n";
  write_file(dir / "corpus.jsonl", lines);
  write_file(dir / "config.json", R"({"corpus": "corpus.jsonl", "out": "out", "date": "2026-12-31"})");
  return load_config(dir / "config.json");
}

class CountingFetcher : public Fetcher {
 public:
  FetchResult fetch(const std::string&, Date) override {
    ++calls;
    return {std::nullopt, "unreachable"};
  }
  std::atomic<int> calls{0};
};

int run_cli(const std::string& args) {
  int status = std::system((std::string(SCAMWATCH_CLI) + " " + args + " 2>/dev/null").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("config errors name the offending input") {
  auto dir = scratch("config");
  write_file(dir / "a.json", R"({"corpus": "missing.jsonl"})");
  auto missing = load_config(dir / "a.json");
  try {
    check_config(missing);
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("missing.jsonl") != std::string::npos);
  }
  auto fatal = run(Subcommand::detect, missing);
  CHECK(fatal.exit_code == kExitFatal);
  REQUIRE_FALSE(fatal.messages.empty());
  CHECK(fatal.messages.back().find("missing.jsonl") != std::string::npos);
  write_file(dir / "b.json", R"({"corpus": "x", "surprise": 1})");
  CHECK_THROWS_AS(load_config(dir / "b.json"), ConfigError);
  write_file(dir / "c.json", R"({"corpus": "x", "parallelism": -2})");
  CHECK_THROWS_AS(load_config(dir / "c.json"), ConfigError);
  CHECK_THROWS_AS(load_config(dir / "nope.json"), ConfigError);

  CHECK(run_cli("detect --config " + (dir / "a.json").string()) == kExitFatal);
  CHECK(run_cli("detect") == kExitFatal);
  fs::remove_all(dir);
}

TEST_CASE("config paths resolve against the config file") {
  auto config = load_config(kFixtures / "pipeline.json");
  CHECK(config.corpus == kFixtures / "corpus.jsonl");
  CHECK(config.date == parse_date("2026-03-20"));
  CHECK(config.blacklists.size() == 2);
  for (const auto& p : referenced_inputs(config)) CHECK_MESSAGE(fs::exists(p), p.string());
}

TEST_CASE("detect over a generated corpus") {
  auto dir = scratch("detect");
  auto config = synthetic_config(dir, 100, 100);
  auto result = run(Subcommand::detect, config);
  CHECK(result.exit_code == kExitOk);
  auto verdicts = detector::parse_verdicts(read_file(config.out / "verdicts.jsonl"));
  CHECK(verdicts.size() == 200);
  CHECK(std::count_if(verdicts.begin(), verdicts.end(), [](const auto& v) { return v.is_scam; }) == 100);
  fs::remove_all(dir);
}

TEST_CASE("malformed corpus lines give a partial result") {
  auto dir = scratch("partial");
  auto config = synthetic_config(dir, 3, 3);
  write_file(config.corpus, read_file(config.corpus) + "{not json\n");
  auto result = run(Subcommand::ingest, config);
  CHECK(result.exit_code == kExitPartial);
  auto ingest = nlohmann::json::parse(read_file(config.out / "ingest.json"));
  CHECK(ingest["records"] == 6);
  CHECK(ingest["errors"].size() == 1);
  fs::remove_all(dir);
}

TEST_CASE("report over an empty output directory") {
  auto dir = scratch("report");
  auto config = synthetic_config(dir, 1, 1);
  auto result = run(Subcommand::report, config);
  CHECK(result.exit_code == kExitOk);
  auto text = read_file(config.out / "report.txt");
  CHECK(text.find("no output; run `detect`") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("replay fetcher serves the stored records") {
  ReplayFetcher fetcher(kFixtures / "replay");
  auto date = parse_date("2026-03-20");
  auto stored = corpus::ingest_crawl_records(read_file(kFixtures / "replay" / "2026-03-20.jsonl"));
  REQUIRE_FALSE(stored.records.empty());
  std::vector<std::string> urls;
  for (const auto& r : stored.records) urls.push_back(r.seed_url);
  auto outcomes = fetch_loop(urls, fetcher, date, 4);
  REQUIRE(outcomes.size() == stored.records.size());
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    CHECK(outcomes[i].url == urls[i]);
    REQUIRE(outcomes[i].result.record.has_value());
    CHECK(*outcomes[i].result.record == stored.records[i]);
  }
  CHECK_FALSE(fetcher.fetch("http://never-recorded.example/", date).record.has_value());
  CHECK_FALSE(fetcher.fetch(urls[0], parse_date("2026-03-21")).record.has_value());
}

TEST_CASE("liveness: failing fetcher marks every probe dead, nothing due means no fetches") {
  auto dir = scratch("liveness");
  auto config = synthetic_config(dir, 20, 5);
  CountingFetcher failing;
  auto first = run(Subcommand::liveness, config, &failing);
  CHECK(first.exit_code == kExitOk);
  CHECK(failing.calls > 0);

  auto rows = liveness::parse_timeline_store(read_file(config.out / "liveness" / "timelines.jsonl"));
  std::size_t today_rows = 0;
  for (const auto& r : rows) {
    if (r.date == *config.date) {
      ++today_rows;
      CHECK_FALSE(r.alive);
    }
  }
  CHECK(today_rows > 0);

  CountingFetcher again;
  auto second = run(Subcommand::liveness, config, &again);
  CHECK(second.exit_code == kExitOk);
  CHECK(again.calls == 0);
  fs::remove_all(dir);
}

TEST_CASE("full pipeline over the fixtures is deterministic") {
  auto root = scratch("determinism");
  auto a = run(Subcommand::all, fixture_config(root / "a", 1));
  auto b = run(Subcommand::all, fixture_config(root / "b", 1));
  auto c = run(Subcommand::all, fixture_config(root / "c", 8));
  CHECK(a.exit_code == kExitOk);
  CHECK(a.messages == b.messages);
  auto ta = tree(root / "a");
  CHECK(ta.size() > 10);
  CHECK(ta == tree(root / "b"));
  CHECK(ta == tree(root / "c"));
  CHECK(ta.count("report.txt"));
  CHECK(ta.count("campaigns/etld1_edges.csv"));
  fs::remove_all(root);
}

TEST_CASE("command line runs a subcommand") {
  auto root = scratch("cli");
  CHECK(run_cli("all --config " + (kFixtures / "pipeline.json").string() + " --out " + root.string() +
                " --parallelism 2") == kExitOk);
  auto report = read_file(root / "report.txt");
  CHECK(report.find("== Detection ==") != std::string::npos);
  CHECK(report.find("scam pages            9") != std::string::npos);
  fs::remove_all(root);
}
