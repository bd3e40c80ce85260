#include "scamwatch/pipeline/fetcher.hpp"

#include <chrono>

#include <httplib.h>

#include "scamwatch/common/parallel.hpp"
#include "scamwatch/common/text.hpp"
#include "scamwatch/corpus/url.hpp"

namespace scamwatch::pipeline {

ReplayFetcher::ReplayFetcher(std::filesystem::path dir) : dir_(std::move(dir)) {}

const std::map<std::string, corpus::CrawlRecord>& ReplayFetcher::day(Date date) {
  std::lock_guard lock(mutex_);
  auto it = days_.find(date);
  if (it != days_.end()) return it->second;
  std::map<std::string, corpus::CrawlRecord> by_url;
  auto file = dir_ / (format_date(date) + ".jsonl");
  if (std::filesystem::exists(file)) {
    for (auto& record : corpus::ingest_crawl_records(read_file(file)).records) {
      by_url.try_emplace(record.seed_url, std::move(record));
    }
  }
  return days_.emplace(date, std::move(by_url)).first->second;
}

FetchResult ReplayFetcher::fetch(const std::string& url, Date date) {
  try {
    const auto& records = day(date);
    auto it = records.find(url);
    if (it == records.end()) return {std::nullopt, "no recorded response for " + url + " on " + format_date(date)};
    return {it->second, {}};
  } catch (const std::exception& e) {
    return {std::nullopt, e.what()};
  }
}

LiveFetcher::LiveFetcher(int timeout_seconds) : timeout_seconds_(timeout_seconds) {}

FetchResult LiveFetcher::fetch(const std::string& url, Date) {
  try {
    corpus::Url parsed = corpus::parse_url(url);
    if (parsed.scheme != "http") return {std::nullopt, "unsupported scheme: " + parsed.scheme};
    httplib::Client client("http://" + parsed.authority);
    client.set_follow_location(true);
    client.set_connection_timeout(timeout_seconds_, 0);
    client.set_read_timeout(timeout_seconds_, 0);
    std::string target = parsed.path.empty() ? "/" : parsed.path;
    if (parsed.has_query) target += "?" + parsed.query;
    auto response = client.Get(target);
    if (!response) return {std::nullopt, "request failed: " + httplib::to_string(response.error())};

    auto now = std::chrono::floor<std::chrono::seconds>(std::chrono::system_clock::now());
    corpus::CrawlRecord record;
    record.observed_at = Timestamp{now};
    record.record_id = "live-" + format_timestamp(record.observed_at) + "-" + url;
    record.seed_url = url;
    record.final_url = response->location.empty() ? url : response->location;
    if (record.final_url != url) record.redirect_chain = {url, record.final_url};
    record.vantage = "uninstrumented";
    record.http_status = response->status;
    record.html = is_valid_utf8(response->body) ? response->body : std::string{};
    corpus::validate(record);
    return {std::move(record), {}};
  } catch (const std::exception& e) {
    return {std::nullopt, e.what()};
  }
}

std::vector<FetchOutcome> fetch_loop(const std::vector<std::string>& urls, Fetcher& fetcher, Date date,
                                     std::size_t parallelism) {
  return parallel_map(urls.size(), parallelism, [&](std::size_t i) {
    FetchOutcome outcome{urls[i], {}};
    try {
      outcome.result = fetcher.fetch(urls[i], date);
    } catch (const std::exception& e) {
      outcome.result = {std::nullopt, e.what()};
    }
    if (!outcome.result.record && outcome.result.error.empty()) outcome.result.error = "fetch failed";
    return outcome;
  });
}

}  // namespace scamwatch::pipeline
