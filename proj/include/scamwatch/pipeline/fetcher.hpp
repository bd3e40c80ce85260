#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "scamwatch/common/time.hpp"
#include "scamwatch/corpus/crawl_record.hpp"

namespace scamwatch::pipeline {

struct FetchResult {
  std::optional<corpus::CrawlRecord> record;
  std::string error;  // set when record is empty
};

// The only way the pipeline reaches the network. Implementations must be
// safe to call from several threads and must report failures in the
// result instead of throwing.
class Fetcher {
 public:
  virtual ~Fetcher() = default;
  virtual FetchResult fetch(const std::string& url, Date date) = 0;
};

// Serves records stored as "<dir>/<YYYY-MM-DD>.jsonl", matched on seed_url.
// When a day file lists the same URL twice the first record wins.
class ReplayFetcher : public Fetcher {
 public:
  explicit ReplayFetcher(std::filesystem::path dir);
  FetchResult fetch(const std::string& url, Date date) override;

 private:
  const std::map<std::string, corpus::CrawlRecord>& day(Date date);

  std::filesystem::path dir_;
  std::mutex mutex_;
  std::map<Date, std::map<std::string, corpus::CrawlRecord>> days_;
};

// Plain HTTP GET of the raw page, following redirects. No script runs, so
// records carry no dialogs and vantage "uninstrumented". HTTPS URLs fail
// (no TLS support is built in) and so count as dead.
class LiveFetcher : public Fetcher {
 public:
  explicit LiveFetcher(int timeout_seconds = 20);
  FetchResult fetch(const std::string& url, Date date) override;

 private:
  int timeout_seconds_;
};

struct FetchOutcome {
  std::string url;
  FetchResult result;
};

// Fetches every URL with at most `parallelism` requests in flight. Results
// are in input order.
std::vector<FetchOutcome> fetch_loop(const std::vector<std::string>& urls, Fetcher& fetcher, Date date,
                                     std::size_t parallelism);

}  // namespace scamwatch::pipeline
