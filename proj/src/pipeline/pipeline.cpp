#include "scamwatch/pipeline/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <memory>
#include <set>

#include "scamwatch/analytics/mod_status.hpp"
#include "scamwatch/analytics/revenue.hpp"
#include "scamwatch/analytics/visitors.hpp"
#include "scamwatch/attribution/email_clusters.hpp"
#include "scamwatch/attribution/infrastructure.hpp"
#include "scamwatch/campaigns/graph.hpp"
#include "scamwatch/campaigns/stats.hpp"
#include "scamwatch/common/parallel.hpp"
#include "scamwatch/common/text.hpp"
#include "scamwatch/corpus/domains.hpp"
#include "scamwatch/corpus/url.hpp"
#include "scamwatch/detector/features.hpp"
#include "scamwatch/detector/scorer.hpp"
#include "scamwatch/evaluation/coverage.hpp"
#include "scamwatch/evaluation/statistics.hpp"
#include "scamwatch/liveness/liveness.hpp"
#include "scamwatch/liveness/timeline_store.hpp"

namespace scamwatch::pipeline {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr std::string_view kNames[] = {"ingest",   "detect",    "liveness",  "campaigns", "attribute",
                                       "coverage", "analytics", "report",    "all"};

// Inputs loaded once per run. Everything in here is read-only while the
// subcommands execute.
struct Context {
  PipelineConfig config;
  detector::HeuristicConfig heuristics = detector::HeuristicConfig::defaults();
  corpus::PublicSuffixList suffixes = corpus::PublicSuffixList::bundled();
  corpus::CdnList cdns = corpus::CdnList::bundled();
  attribution::PrivacyServiceList privacy = attribution::PrivacyServiceList::bundled();
  Fetcher* fetcher = nullptr;
  RunResult* result = nullptr;

  corpus::DomainContext domains() const { return {&suffixes, &cdns}; }

  void warn(std::string message) {
    result->messages.push_back(std::move(message));
    result->exit_code = std::max(result->exit_code, kExitPartial);
  }

  // Cached corpus and verdicts; every analysis starts from the corpus so
  // subcommands do not depend on each other's files.
  std::optional<std::vector<corpus::CrawlRecord>> records;
  std::optional<std::vector<detector::Verdict>> verdicts;
};

void write_json(const fs::path& path, const json& value) { write_file(path, value.dump(2) + "\n"); }

const std::vector<corpus::CrawlRecord>& load_records(Context& ctx) {
  if (ctx.records) return *ctx.records;
  auto ingest = corpus::ingest_crawl_records(read_file(ctx.config.corpus), ctx.config.parallelism);
  for (const auto& error : ingest.errors) {
    ctx.warn(ctx.config.corpus.filename().string() + " line " + std::to_string(error.line) + ": " + error.reason);
  }
  ctx.records = std::move(ingest.records);
  return *ctx.records;
}

const std::vector<detector::Verdict>& load_verdicts(Context& ctx) {
  if (ctx.verdicts) return *ctx.verdicts;
  ctx.verdicts = detector::score_pages(load_records(ctx), ctx.heuristics, ctx.config.parallelism, ctx.domains());
  return *ctx.verdicts;
}

attribution::PairMap load_pair_map(Context& ctx, const std::optional<fs::path>& path, attribution::PairMapKind kind) {
  if (!path) return {};
  auto map = attribution::parse_pair_map(read_file(*path), kind, path->filename().string());
  for (const auto& warning : map.warnings) ctx.warn(warning);
  map.warnings.clear();
  return map;
}

// ---- ingest ---------------------------------------------------------------

void run_ingest(Context& ctx) {
  auto ingest = corpus::ingest_crawl_records(read_file(ctx.config.corpus), ctx.config.parallelism);
  std::string out;
  for (const auto& record : ingest.records) out += corpus::serialize_record(record) + "\n";
  write_file(ctx.config.out / "records.jsonl", out);

  json errors = json::array();
  for (const auto& error : ingest.errors) {
    errors.push_back({{"line", error.line}, {"reason", error.reason}});
    ctx.warn(ctx.config.corpus.filename().string() + " line " + std::to_string(error.line) + ": " + error.reason);
  }
  std::map<std::string, std::size_t> vantages;
  for (const auto& record : ingest.records) ++vantages[record.vantage];
  write_json(ctx.config.out / "ingest.json",
             {{"records", ingest.records.size()}, {"errors", errors}, {"vantages", vantages}});
  ctx.records = std::move(ingest.records);
}

// ---- detect ---------------------------------------------------------------

void run_detect(Context& ctx) {
  const auto& records = load_records(ctx);
  const auto& verdicts = load_verdicts(ctx);
  write_file(ctx.config.out / "verdicts.jsonl", detector::serialize_verdicts(verdicts));

  std::string features;
  for (const auto& record : records) {
    json line = detector::to_json(detector::extract_page_features(record, ctx.heuristics.padding));
    line["record_id"] = record.record_id;
    features += line.dump() + "\n";
  }
  write_file(ctx.config.out / "page_features.jsonl", features);

  std::size_t scams = 0, dynamic = 0, padded = 0, audio = 0;
  std::set<std::string> hosts, domains, phones, toll_free;
  for (std::size_t i = 0; i < verdicts.size(); ++i) {
    const auto& v = verdicts[i];
    if (!v.is_scam) continue;
    ++scams;
    dynamic += v.dynamic_delivery.has_value();
    auto page = detector::extract_page_features(records[i], ctx.heuristics.padding);
    padded += page.padded_dialog;
    audio += page.audio_autoplay;
    hosts.insert(v.host);
    domains.insert(v.domain);
    for (const auto& phone : v.phones) {
      phones.insert(phone.digits);
      if (phone.toll_free) toll_free.insert(phone.digits);
    }
  }
  write_json(ctx.config.out / "detect.json", {{"pages", verdicts.size()},
                                              {"scam_pages", scams},
                                              {"benign_pages", verdicts.size() - scams},
                                              {"scam_hosts", hosts.size()},
                                              {"scam_domains", domains.size()},
                                              {"phone_numbers", phones.size()},
                                              {"toll_free_numbers", toll_free.size()},
                                              {"dynamic_delivery_pages", dynamic},
                                              {"padded_dialog_pages", padded},
                                              {"audio_autoplay_pages", audio}});
}

// ---- liveness -------------------------------------------------------------

Date logical_today(const Context& ctx) {
  if (ctx.config.date) return *ctx.config.date;
  return to_date(std::chrono::floor<std::chrono::seconds>(std::chrono::system_clock::now()));
}

void run_liveness(Context& ctx) {
  const auto& records = load_records(ctx);
  const auto& verdicts = load_verdicts(ctx);
  const Date today = logical_today(ctx);
  const fs::path dir = ctx.config.out / "liveness";
  const auto domains = ctx.domains();

  liveness::CheckSchedule schedule;
  if (fs::exists(dir / "schedule.json")) {
    schedule = liveness::CheckSchedule::from_json(json::parse(read_file(dir / "schedule.json")));
  }
  std::vector<liveness::StoredObservation> store;
  if (fs::exists(dir / "timelines.jsonl")) store = liveness::parse_timeline_store(read_file(dir / "timelines.jsonl"));

  // Detections up to today count as alive observations.
  std::map<std::pair<std::string, Date>, bool> updates;
  for (std::size_t i = 0; i < verdicts.size(); ++i) {
    const auto& v = verdicts[i];
    Date seen = to_date(v.observed_at);
    if (!v.is_scam || seen > today) continue;
    schedule.track(records[i].final_url);
    updates[{v.domain, seen}] = true;
  }

  auto before = liveness::replay_timeline_store(store);
  std::vector<std::string> probed_urls;
  std::set<std::string> neighbours;
  std::size_t skipped = 0;
  for (const auto& url : liveness::due_checks(schedule, today)) {
    std::string domain = domains.grouping_domain(corpus::host_of(url));
    auto timeline = before.find(domain);
    if (timeline != before.end() && liveness::is_retired(timeline->second, ctx.config.retire_after_dead_days)) {
      ++skipped;
    } else {
      probed_urls.push_back(url);
      const auto& set = schedule.entries().at(url);
      neighbours.insert(set.begin(), set.end());
    }
    schedule.mark_checked(url, today);
  }

  std::vector<std::string> fetch_list(neighbours.begin(), neighbours.end());
  std::unique_ptr<Fetcher> owned;
  Fetcher* fetcher = ctx.fetcher;
  if (!fetcher && !fetch_list.empty()) {
    if (ctx.config.transport == Transport::live) {
      owned = std::make_unique<LiveFetcher>();
    } else if (ctx.config.replay_dir) {
      owned = std::make_unique<ReplayFetcher>(*ctx.config.replay_dir);
    } else {
      throw ConfigError("replay transport needs replay_dir");
    }
    fetcher = owned.get();
  }

  std::map<std::string, bool> scam_at;
  std::string probe_log;
  std::size_t failures = 0;
  if (!fetch_list.empty()) {
    for (auto& outcome : fetch_loop(fetch_list, *fetcher, today, ctx.config.parallelism)) {
      bool scam = false;
      if (outcome.result.record) {
        scam = detector::score_page(*outcome.result.record, ctx.heuristics, domains).is_scam;
        probe_log += corpus::serialize_record(*outcome.result.record) + "\n";
      } else {
        ++failures;
      }
      scam_at[outcome.url] = scam;
    }
  }
  for (const auto& url : probed_urls) {
    bool alive = false;
    for (const auto& n : schedule.entries().at(url)) alive = alive || scam_at[n];
    auto& slot = updates[{domains.grouping_domain(corpus::host_of(url)), today}];
    slot = slot || alive;
  }

  std::vector<liveness::StoredObservation> rows;
  for (const auto& [key, alive] : updates) rows.push_back({key.first, key.second, alive, 0});
  store = liveness::apply_to_store(store, rows);
  auto timelines = liveness::replay_timeline_store(store);

  write_json(dir / "schedule.json", schedule.to_json());
  write_file(dir / "timelines.jsonl", liveness::serialize_timeline_store(store));
  if (!fetch_list.empty()) write_file(dir / "probes" / (format_date(today) + ".jsonl"), probe_log);

  json per_domain = json::object();
  std::vector<liveness::LivenessTimeline> list;
  for (const auto& [domain, timeline] : timelines) {
    auto first = timeline.first_alive();
    auto last = timeline.last_alive();
    per_domain[domain] = {{"first_seen", format_date(timeline.first_seen())},
                          {"first_alive", first ? json(format_date(*first)) : json(nullptr)},
                          {"last_alive", last ? json(format_date(*last)) : json(nullptr)},
                          {"observations", timeline.observations().size()},
                          {"lifetime_days", liveness::compute_lifetime(timeline)},
                          {"retired", liveness::is_retired(timeline, ctx.config.retire_after_dead_days)}};
    list.push_back(timeline);
  }
  auto dist = liveness::lifetime_distribution(list);
  write_json(ctx.config.out / "lifetimes.json",
             {{"domains", per_domain},
              {"distribution",
               {{"domains", dist.domains},
                {"single_day_fraction", dist.single_day_fraction},
                {"up_to_three_days_fraction", dist.up_to_three_days_fraction},
                {"over_forty_days_fraction", dist.over_forty_days_fraction},
                {"mean_lifetime_days", dist.mean_lifetime_days}}}});

  ctx.result->messages.push_back("liveness " + format_date(today) + ": " + std::to_string(probed_urls.size()) +
                                 " URLs probed, " + std::to_string(fetch_list.size()) + " fetches, " +
                                 std::to_string(failures) + " failed, " + std::to_string(skipped) +
                                 " retired skipped");
}

// ---- campaigns ------------------------------------------------------------

std::optional<campaigns::CampaignInfrastructure> campaign_infrastructure(
    const campaigns::Campaign& campaign, const attribution::PairMap& ip_map, const attribution::PairMap& as_map,
    const attribution::PairMap& geo_map, const corpus::CdnList& cdns) {
  if (ip_map.entries.empty()) return std::nullopt;
  std::set<std::string> ips, ases;
  std::map<std::string, std::size_t> countries, providers;
  for (const auto& [domain, degree] : campaign.domain_degrees) {
    for (const auto& entry : cdns.entries()) {
      if (domain == entry || domain.ends_with("." + entry)) {
        ++providers[entry];
        break;
      }
    }
    const std::string* ip = ip_map.find(domain);
    if (!ip) continue;
    ips.insert(*ip);
    if (const std::string* as = as_map.find(*ip)) {
      ases.insert(*as);
      ++providers[*as];
    }
    if (const std::string* country = geo_map.find(*ip)) ++countries[*country];
  }
  campaigns::CampaignInfrastructure infra;
  infra.ips = ips.size();
  infra.ases = ases.size();
  std::vector<std::pair<std::string, std::size_t>> ordered(countries.begin(), countries.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  for (const auto& entry : ordered) infra.countries.push_back(entry.first);
  std::size_t best = 0;
  for (const auto& [name, count] : providers) {
    if (count > best) {
      best = count;
      infra.top_as_or_cdn = name;
    }
  }
  return infra;
}

void run_campaigns(Context& ctx) {
  const auto& verdicts = load_verdicts(ctx);
  auto ip_map = load_pair_map(ctx, ctx.config.ip_map, attribution::PairMapKind::domain_ip);
  auto as_map = load_pair_map(ctx, ctx.config.as_map, attribution::PairMapKind::ip_as);
  auto geo_map = load_pair_map(ctx, ctx.config.geo_map, attribution::PairMapKind::ip_country);
  const fs::path dir = ctx.config.out / "campaigns";

  json out = json::object();
  for (auto level : {campaigns::GraphLevel::fqdn, campaigns::GraphLevel::etld1}) {
    std::string name = level == campaigns::GraphLevel::fqdn ? "fqdn" : "etld1";
    auto graph = campaigns::build_graph_parallel(verdicts, level, ctx.config.parallelism, ctx.domains());
    write_file(dir / (name + "_edges.csv"), campaigns::export_edges_csv(graph));
    write_file(dir / (name + "_nodes.csv"), campaigns::export_nodes_csv(graph));

    auto list = campaigns::campaigns_of(graph, ctx.heuristics.toll_free_prefixes);
    json correlation = nullptr;
    try {
      correlation = campaigns::size_lifetime_correlation(list);
    } catch (const InvalidArgument&) {
    }
    json top = json::array();
    for (std::size_t i = 0; i < list.size() && i < ctx.config.top_campaigns; ++i) {
      top.push_back(campaigns::campaign_row(list[i], campaign_infrastructure(list[i], ip_map, as_map, geo_map, ctx.cdns)));
    }
    std::size_t single_phone_domains = 0;
    for (const auto& [domain, degree] : graph.domain_degrees()) single_phone_domains += degree == 1;
    out[name] = {{"summary", campaigns::to_json(campaigns::summarize(graph, list))},
                 {"size_lifetime_correlation", correlation},
                 {"domains_with_one_phone", single_phone_domains},
                 {"top", top}};
  }
  write_json(ctx.config.out / "campaigns.json", out);
}

// ---- attribute ------------------------------------------------------------

std::vector<std::string> unique_hosts(const std::vector<detector::Verdict>& verdicts, bool scam) {
  std::set<std::string> hosts;
  for (const auto& v : verdicts) {
    if (v.is_scam == scam && !v.host.empty()) hosts.insert(v.host);
  }
  return {hosts.begin(), hosts.end()};
}

void run_attribute(Context& ctx) {
  const auto& verdicts = load_verdicts(ctx);
  const auto scam_hosts = unique_hosts(verdicts, true);
  const auto domains = ctx.domains();

  std::string features_out;
  std::vector<double> scam_lengths;
  std::size_t with_keyword = 0, random = 0, cdn = 0;
  std::map<std::string, std::size_t> keyword_counts;
  for (const auto& host : scam_hosts) {
    try {
      auto f = detector::extract_domain_features(host, domains);
      features_out += detector::to_json(f).dump() + "\n";
      scam_lengths.push_back(static_cast<double>(f.length));
      with_keyword += !f.scare_keywords.empty();
      random += f.has_random_label;
      cdn += f.cdn_hosted;
      for (const auto& k : f.scare_keywords) ++keyword_counts[k];
    } catch (const Error& e) {
      ctx.result->messages.push_back("domain features skipped for " + host + ": " + e.what());
    }
  }
  write_file(ctx.config.out / "domain_features.jsonl", features_out);

  std::vector<double> benign_lengths;
  for (const auto& host : unique_hosts(verdicts, false)) benign_lengths.push_back(static_cast<double>(host.size()));

  auto share = [](std::size_t n, std::size_t d) { return d == 0 ? 0.0 : static_cast<double>(n) / static_cast<double>(d); };
  json length_test = nullptr;
  try {
    length_test = evaluation::to_json(evaluation::welch_t_test(scam_lengths, benign_lengths));
  } catch (const InvalidArgument&) {
  }
  json domain_summary = {{"hosts", scam_lengths.size()},
                         {"mean_length", scam_lengths.empty() ? 0.0 : evaluation::mean(scam_lengths)},
                         {"scare_keyword_fraction", share(with_keyword, scam_lengths.size())},
                         {"scare_keywords", keyword_counts},
                         {"random_label_fraction", share(random, scam_lengths.size())},
                         {"cdn_hosted_fraction", share(cdn, scam_lengths.size())},
                         {"benign_hosts", benign_lengths.size()},
                         {"benign_mean_length", benign_lengths.empty() ? 0.0 : evaluation::mean(benign_lengths)},
                         {"length_test", length_test}};

  json emails = nullptr;
  if (ctx.config.whois_emails) {
    auto table = attribution::parse_whois_emails(read_file(*ctx.config.whois_emails),
                                                 ctx.config.whois_emails->filename().string());
    for (const auto& warning : table.warnings) ctx.warn(warning);
    std::set<std::string> scam_keys(scam_hosts.begin(), scam_hosts.end());
    for (const auto& v : verdicts) {
      if (v.is_scam) scam_keys.insert(v.domain);
    }
    std::vector<std::string> addresses;
    std::size_t without_email = 0, records = 0;
    for (const auto& record : table.records) {
      if (!scam_keys.contains(record.domain)) continue;
      ++records;
      if (record.email) {
        addresses.push_back(*record.email);
      } else {
        ++without_email;
      }
    }
    auto clusters = attribution::cluster_emails(addresses, ctx.config.email_threshold, ctx.config.parallelism, ctx.privacy);
    json list = json::array();
    std::size_t multi = 0, privacy = 0;
    for (const auto& c : clusters) {
      list.push_back(attribution::to_json(c));
      multi += c.members.size() > 1;
      privacy += c.privacy_service;
    }
    emails = {{"whois_records", records},
              {"records_without_email", without_email},
              {"distinct_emails", std::set<std::string>(addresses.begin(), addresses.end()).size()},
              {"clusters", list.size()},
              {"multi_member_clusters", multi},
              {"privacy_service_clusters", privacy},
              {"threshold", ctx.config.email_threshold},
              {"members", list}};
  }

  json infra = nullptr;
  if (ctx.config.ip_map) {
    auto ip_map = load_pair_map(ctx, ctx.config.ip_map, attribution::PairMapKind::domain_ip);
    auto as_map = load_pair_map(ctx, ctx.config.as_map, attribution::PairMapKind::ip_as);
    auto geo_map = load_pair_map(ctx, ctx.config.geo_map, attribution::PairMapKind::ip_country);
    auto report = ctx.config.cloudflare_as
                      ? attribution::aggregate_infrastructure(scam_hosts, ip_map, as_map, geo_map, ctx.cdns,
                                                              *ctx.config.cloudflare_as)
                      : attribution::aggregate_infrastructure(scam_hosts, ip_map, as_map, geo_map, ctx.cdns);
    infra = attribution::to_json(report);
  }

  write_json(ctx.config.out / "attribution.json",
             {{"domain_features", domain_summary}, {"email_clusters", emails}, {"infrastructure", infra}});
}

// ---- coverage -------------------------------------------------------------

json coverage_json(const evaluation::CoverageReport& report) {
  json j = evaluation::to_json(report);
  j["coverage_text"] = report.total == 0 ? json(nullptr)
                                         : json(evaluation::format_fraction(static_cast<std::int64_t>(report.covered),
                                                                            static_cast<std::int64_t>(report.total)));
  return j;
}

void run_coverage(Context& ctx) {
  const auto& verdicts = load_verdicts(ctx);
  std::map<std::string, Date> domains, phones, ips;
  auto keep_earliest = [](std::map<std::string, Date>& items, const std::string& key, Date date) {
    auto [it, inserted] = items.try_emplace(key, date);
    if (!inserted) it->second = std::min(it->second, date);
  };
  auto ip_map = load_pair_map(ctx, ctx.config.ip_map, attribution::PairMapKind::domain_ip);
  for (const auto& v : verdicts) {
    if (!v.is_scam) continue;
    Date date = to_date(v.observed_at);
    keep_earliest(domains, v.domain, date);
    for (const auto& phone : v.phones) keep_earliest(phones, phone.digits, date);
    if (const std::string* ip = ip_map.find(v.host)) keep_earliest(ips, *ip, date);
  }

  std::vector<evaluation::BlacklistSnapshot> snapshots;
  for (const auto& path : ctx.config.blacklists) {
    auto snapshot = evaluation::parse_blacklist_snapshot(read_file(path), path.stem().string());
    for (const auto& warning : snapshot.warnings) ctx.warn(warning);
    snapshots.push_back(std::move(snapshot));
  }
  json blacklists = json::object();
  for (const auto& snapshot : snapshots) {
    std::map<std::string, std::size_t> by_type;
    for (const auto& [entry, data] : snapshot.entries) ++by_type[std::string(evaluation::to_string(data.type))];
    blacklists[snapshot.name] = by_type;
  }

  json directories = nullptr;
  std::string table;
  if (!ctx.config.directories.empty() && !phones.empty()) {
    std::vector<evaluation::PhoneDirectory> dirs;
    for (const auto& path : ctx.config.directories) {
      auto dir = evaluation::parse_phone_directory(read_file(path), path.stem().string());
      for (const auto& warning : dir.warnings) ctx.warn(warning);
      dirs.push_back(std::move(dir));
    }
    std::set<std::string> numbers;
    for (const auto& entry : phones) numbers.insert(entry.first);
    auto report = evaluation::phone_directory_coverage(numbers, dirs);
    directories = evaluation::to_json(report);
    table = evaluation::format_directory_table(report);
  }
  write_file(ctx.config.out / "coverage_directories.txt", table);

  using evaluation::EntryType;
  write_json(ctx.config.out / "coverage.json",
             {{"blacklists", blacklists},
              {"domains", coverage_json(evaluation::blacklist_coverage(domains, snapshots, EntryType::domain))},
              {"phones", coverage_json(evaluation::blacklist_coverage(phones, snapshots, EntryType::phone))},
              {"ips", coverage_json(evaluation::blacklist_coverage(ips, snapshots, EntryType::ip))},
              {"directories", directories}});
}

// ---- analytics ------------------------------------------------------------

std::vector<double> read_durations(Context& ctx, const fs::path& path) {
  std::vector<double> values;
  std::size_t line_no = 0;
  for (const auto& line : list_entries(read_file(path))) {
    ++line_no;
    try {
      std::size_t used = 0;
      double v = std::stod(line, &used);
      if (used != line.size() || !(v >= 0.0)) throw std::invalid_argument(line);
      values.push_back(v);
    } catch (const std::exception&) {
      ctx.warn(path.filename().string() + ": not a duration: " + line);
    }
  }
  return values;
}

void run_analytics(Context& ctx) {
  json visitors = nullptr, revenue = nullptr, geography = nullptr, triage = nullptr;

  if (ctx.config.modstatus_dir) {
    auto load = analytics::load_mod_status_tree(*ctx.config.modstatus_dir);
    for (const auto& error : load.errors) ctx.warn("mod_status " + error);
    // Per-shard accumulators merged in index order; union makes the order
    // irrelevant anyway.
    std::size_t shards = std::max<std::size_t>(1, std::min(ctx.config.parallelism, load.samples.size()));
    auto partial = parallel_map(shards, ctx.config.parallelism, [&](std::size_t shard) {
      analytics::VisitorAccumulator acc;
      for (std::size_t i = shard; i < load.samples.size(); i += shards) acc.add(load.samples[i]);
      return acc;
    });
    analytics::VisitorAccumulator acc;
    for (const auto& p : partial) acc.merge(p);

    json per_domain = json::array();
    std::int64_t accesses = 0;
    for (const auto& stats : acc.all_stats()) per_domain.push_back(analytics::to_json(stats));
    for (const auto& sample : load.samples) {
      if (sample.total_accesses) accesses = std::max(accesses, *sample.total_accesses);
    }
    auto dedup = static_cast<std::int64_t>(acc.unique_visitors_deduplicated());
    auto summed = static_cast<std::int64_t>(acc.unique_visitors_per_domain_sum());
    visitors = {{"samples", load.samples.size()},
                {"domains", per_domain},
                {"unique_visitors_deduplicated", dedup},
                {"unique_visitors_per_domain_sum", summed},
                {"max_total_accesses", accesses}};
    revenue = {
        {"deduplicated", analytics::to_json(analytics::estimate_revenue(dedup, ctx.config.conversion_rate, ctx.config.avg_price))},
        {"per_domain_sum", analytics::to_json(analytics::estimate_revenue(summed, ctx.config.conversion_rate, ctx.config.avg_price))}};

    std::set<std::string> all_ips;
    for (const auto& [domain, ips] : acc.ips_by_domain()) all_ips.insert(ips.begin(), ips.end());
    auto geo_map = load_pair_map(ctx, ctx.config.geo_map, attribution::PairMapKind::ip_country);
    geography = analytics::to_json(analytics::geolocate_visitors(all_ips, geo_map.entries));
  }

  if (ctx.config.call_durations) {
    auto durations = read_durations(ctx, *ctx.config.call_durations);
    if (durations.size() >= 2) {
      triage = {{"calls", durations.size()},
                {"mean_minutes", evaluation::mean(durations)},
                {"stddev_minutes", evaluation::sample_stddev(durations)},
                {"threshold_minutes", analytics::triage_threshold(durations)}};
    } else {
      ctx.warn("triage threshold needs at least 2 call durations");
    }
  }

  write_json(ctx.config.out / "analytics.json",
             {{"visitors", visitors}, {"revenue", revenue}, {"geography", geography}, {"triage", triage}});
}

// ---- driver ---------------------------------------------------------------

void run_report(Context& ctx) { write_file(ctx.config.out / "report.txt", render_report(ctx.config.out)); }

void run_one(Subcommand sub, Context& ctx) {
  switch (sub) {
    case Subcommand::ingest: return run_ingest(ctx);
    case Subcommand::detect: return run_detect(ctx);
    case Subcommand::liveness: return run_liveness(ctx);
    case Subcommand::campaigns: return run_campaigns(ctx);
    case Subcommand::attribute: return run_attribute(ctx);
    case Subcommand::coverage: return run_coverage(ctx);
    case Subcommand::analytics: return run_analytics(ctx);
    case Subcommand::report: return run_report(ctx);
    case Subcommand::all:
      for (auto s : {Subcommand::ingest, Subcommand::detect, Subcommand::liveness, Subcommand::campaigns,
                     Subcommand::attribute, Subcommand::coverage, Subcommand::analytics, Subcommand::report}) {
        run_one(s, ctx);
      }
      return;
  }
}

}  // namespace

std::optional<Subcommand> parse_subcommand(std::string_view name) {
  for (std::size_t i = 0; i < std::size(kNames); ++i) {
    if (kNames[i] == name) return static_cast<Subcommand>(i);
  }
  return std::nullopt;
}

std::string_view to_string(Subcommand subcommand) { return kNames[static_cast<std::size_t>(subcommand)]; }

RunResult run(Subcommand subcommand, const PipelineConfig& config, Fetcher* fetcher) {
  RunResult result;
  Context ctx;
  ctx.config = config;
  ctx.fetcher = fetcher;
  ctx.result = &result;
  try {
    check_config(config);
    if (config.heuristics) ctx.heuristics = detector::HeuristicConfig::load(*config.heuristics);
    if (config.suffix_list) ctx.suffixes = corpus::PublicSuffixList::parse(read_file(*config.suffix_list));
    if (config.cdn_list) ctx.cdns = corpus::CdnList::parse(read_file(*config.cdn_list));
    if (config.privacy_list) ctx.privacy = attribution::PrivacyServiceList::parse(read_file(*config.privacy_list));
    fs::create_directories(config.out);
    run_one(subcommand, ctx);
  } catch (const std::exception& e) {
    result.messages.push_back(std::string("fatal: ") + e.what());
    result.exit_code = kExitFatal;
  }
  return result;
}

}  // namespace scamwatch::pipeline
