#include <cstdio>
#include <sstream>

#include "scamwatch/common/text.hpp"
#include "scamwatch/pipeline/pipeline.hpp"

namespace scamwatch::pipeline {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string fixed(double value, int decimals = 2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

std::string percent(double fraction) { return fixed(fraction * 100.0, 1) + "%"; }

std::string text(const json& value) {
  if (value.is_null()) return "n/a";
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_float()) return fixed(value.get<double>());
  return value.dump();
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

std::optional<json> load(const fs::path& path) {
  if (!fs::exists(path)) return std::nullopt;
  try {
    return json::parse(read_file(path));
  } catch (const json::exception&) {
    return std::nullopt;
  }
}

void section(std::ostringstream& out, const std::string& title) { out << "\n== " << title << " ==\n"; }

void not_run(std::ostringstream& out, const std::string& subcommand) {
  out << "  (no output; run `" << subcommand << "`)\n";
}

// Top-k entries of a {name: fraction} object, largest first.
std::string top_shares(const json& histogram, std::size_t k) {
  std::vector<std::pair<double, std::string>> entries;
  for (const auto& [name, value] : histogram.items()) entries.emplace_back(value.get<double>(), name);
  std::stable_sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  std::string s;
  for (std::size_t i = 0; i < entries.size() && i < k; ++i) {
    if (i) s += ", ";
    s += entries[i].second + " " + percent(entries[i].first);
  }
  return s.empty() ? "none" : s;
}

void corpus_section(std::ostringstream& out, const fs::path& dir) {
  section(out, "Corpus");
  auto ingest = load(dir / "ingest.json");
  if (!ingest) return not_run(out, "ingest");
  out << "  records ingested      " << (*ingest)["records"].get<std::size_t>() << "\n";
  out << "  malformed lines       " << (*ingest)["errors"].size() << "\n";
  for (const auto& [vantage, count] : (*ingest)["vantages"].items()) {
    out << "  vantage " << pad(vantage, 14) << count.get<std::size_t>() << "\n";
  }
}

void detection_section(std::ostringstream& out, const fs::path& dir) {
  section(out, "Detection");
  auto d = load(dir / "detect.json");
  if (!d) return not_run(out, "detect");
  auto& j = *d;
  out << "  pages scored          " << j["pages"].get<std::size_t>() << "\n";
  out << "  scam pages            " << j["scam_pages"].get<std::size_t>() << "\n";
  out << "  scam hosts            " << j["scam_hosts"].get<std::size_t>() << "\n";
  out << "  scam domains          " << j["scam_domains"].get<std::size_t>() << "\n";
  out << "  phone numbers         " << j["phone_numbers"].get<std::size_t>() << " (" << j["toll_free_numbers"].get<std::size_t>()
      << " toll-free)\n";
  out << "  pay-per-call pages    " << j["dynamic_delivery_pages"].get<std::size_t>() << "\n";
  out << "  padded dialog pages   " << j["padded_dialog_pages"].get<std::size_t>() << "\n";
  out << "  autoplay audio pages  " << j["audio_autoplay_pages"].get<std::size_t>() << "\n";
}

void liveness_section(std::ostringstream& out, const fs::path& dir) {
  section(out, "Lifetimes");
  auto l = load(dir / "lifetimes.json");
  if (!l) return not_run(out, "liveness");
  auto dist = (*l)["distribution"];
  out << "  domains tracked       " << (*l)["domains"].size() << "\n";
  out << "  domains seen alive    " << dist["domains"].get<std::size_t>() << "\n";
  out << "  alive a single day    " << percent(dist["single_day_fraction"].get<double>()) << "\n";
  out << "  alive up to 3 days    " << percent(dist["up_to_three_days_fraction"].get<double>()) << "\n";
  out << "  alive over 40 days    " << percent(dist["over_forty_days_fraction"].get<double>()) << "\n";
  out << "  mean lifetime (days)  " << fixed(dist["mean_lifetime_days"].get<double>()) << "\n";
}

void campaigns_section(std::ostringstream& out, const fs::path& dir) {
  section(out, "Campaigns");
  auto c = load(dir / "campaigns.json");
  if (!c) return not_run(out, "campaigns");
  for (const char* level : {"fqdn", "etld1"}) {
    if (!c->contains(level)) continue;
    auto j = (*c)[level];
    auto s = j["summary"];
    out << "  [" << level << "]\n";
    out << "    domain / phone nodes  " << text(s["domain_nodes"]) << " / " << text(s["phone_nodes"]) << "\n";
    out << "    edges                 " << text(s["edges"]) << "\n";
    out << "    components            " << text(s["components"]) << " (" << text(s["components_over_five"])
        << " with more than 5 nodes)\n";
    out << "    avg degree D / P      " << text(s["avg_domain_degree"]) << " / " << text(s["avg_phone_degree"]) << "\n";
    out << "    max degree D / P      " << text(s["max_domain_degree"]) << " / " << text(s["max_phone_degree"]) << "\n";
    out << "    mean lifetime (days)  " << text(s["mean_campaign_lifetime"]) << "\n";
    out << "    size~lifetime r       " << text(j["size_lifetime_correlation"]) << "\n";
    if (j["top"].empty()) continue;
    out << "    #D   #P   lifetime  TLDs / prefixes\n";
    for (auto row : j["top"]) {
      std::string tlds, prefixes;
      for (const auto& t : row["tlds"]) tlds += (tlds.empty() ? "" : " ") + t.get<std::string>();
      for (const auto& p : row["prefixes"]) prefixes += (prefixes.empty() ? "" : " ") + p.get<std::string>();
      out << "    " << pad(text(row["domains"]), 5) << pad(text(row["phones"]), 5) << pad(text(row["lifetime_days"]), 10)
          << (tlds.empty() ? "-" : tlds) << " / " << (prefixes.empty() ? "-" : prefixes);
      if (row.contains("top_as_or_cdn") && !row["top_as_or_cdn"].is_null()) out << " / " << text(row["top_as_or_cdn"]);
      out << "\n";
    }
  }
}

void attribution_section(std::ostringstream& out, const fs::path& dir) {
  section(out, "Domains and hosting");
  auto a = load(dir / "attribution.json");
  if (!a) return not_run(out, "attribute");
  auto f = (*a)["domain_features"];
  out << "  scam hosts            " << text(f["hosts"]) << "\n";
  out << "  mean host length      " << text(f["mean_length"]) << " (benign " << text(f["benign_mean_length"]) << ")\n";
  if (!f["length_test"].is_null()) {
    out << "  length t-test         t=" << text(f["length_test"]["t_statistic"])
        << " p=" << f["length_test"]["p_value"].get<double>() << "\n";
  }
  out << "  scare keyword hosts   " << percent(f["scare_keyword_fraction"].get<double>()) << "\n";
  out << "  random-looking label  " << percent(f["random_label_fraction"].get<double>()) << "\n";
  out << "  CDN-hosted            " << percent(f["cdn_hosted_fraction"].get<double>()) << "\n";

  auto e = (*a)["email_clusters"];
  if (!e.is_null()) {
    out << "  WHOIS emails          " << text(e["distinct_emails"]) << " distinct, " << text(e["clusters"]) << " clusters ("
        << text(e["multi_member_clusters"]) << " multi-member, " << text(e["privacy_service_clusters"])
        << " privacy services)\n";
  }
  auto i = (*a)["infrastructure"];
  if (!i.is_null()) {
    out << "  hosts with IP         " << text(i["mapped"]) << " (" << text(i["unmapped"]) << " unmapped, "
        << text(i["unique_ips"]) << " unique IPs)\n";
    out << "  countries             " << top_shares(i["country_histogram"], 5) << "\n";
    out << "  autonomous systems    " << top_shares(i["as_histogram"], 5) << "\n";
    out << "  behind Cloudflare     " << percent(i["cloudflare_fraction"].get<double>()) << "\n";
    out << "  on other CDNs         " << percent(i["cdn_fraction"].get<double>()) << "\n";
  }
}

void coverage_section(std::ostringstream& out, const fs::path& dir) {
  section(out, "Blacklist coverage");
  auto c = load(dir / "coverage.json");
  if (!c) return not_run(out, "coverage");
  for (const char* kind : {"domains", "phones", "ips"}) {
    auto r = (*c)[kind];
    out << "  " << pad(kind, 8) << "covered " << text(r["covered"]) << " of " << text(r["total"]);
    if (!r["coverage_text"].is_null()) out << " (" << text(r["coverage_text"]) << ")";
    if (r["covered"].get<std::size_t>() > 0) {
      out << ", mean lag " << text(r["mean_lag"]) << " days, " << text(r["listed_by_detection"])
          << " listed by detection";
    }
    out << "\n";
  }
  std::string table = fs::exists(dir / "coverage_directories.txt") ? read_file(dir / "coverage_directories.txt") : "";
  if (!table.empty()) {
    out << "  phone directories:\n";
    std::istringstream lines(table);
    for (std::string line; std::getline(lines, line);) out << "    " << line << "\n";
  }
}

void analytics_section(std::ostringstream& out, const fs::path& dir) {
  section(out, "Visitors and revenue");
  auto a = load(dir / "analytics.json");
  if (!a) return not_run(out, "analytics");
  auto v = (*a)["visitors"];
  if (v.is_null()) {
    out << "  no server-status samples\n";
  } else {
    for (auto d : v["domains"]) {
      out << "  " << pad(d["domain"].get<std::string>(), 30) << text(d["unique_ips"]) << " visitors over "
          << text(d["days_observed"]) << " days (" << text(d["avg_visitors_per_day"]) << "/day)\n";
    }
    out << "  unique visitors       " << text(v["unique_visitors_deduplicated"]) << " deduplicated, "
        << text(v["unique_visitors_per_domain_sum"]) << " summed per domain\n";
    for (const char* basis : {"deduplicated", "per_domain_sum"}) {
      auto r = (*a)["revenue"][basis];
      out << "  revenue (" << basis << ") " << text(r["victims"]) << " victims, " << text(r["revenue"]) << "\n";
    }
    auto g = (*a)["geography"];
    out << "  visitor countries     " << top_shares(g["fractions"], 5) << " (" << text(g["unmapped"])
        << " unmapped)\n";
  }
  auto t = (*a)["triage"];
  if (!t.is_null()) {
    out << "  call triage cutoff    " << text(t["threshold_minutes"]) << " min (mean " << text(t["mean_minutes"])
        << ", sd " << text(t["stddev_minutes"]) << ", " << text(t["calls"]) << " calls)\n";
  }
}

}  // namespace

std::string render_report(const fs::path& out_dir) {
  std::ostringstream out;
  out << "scamwatch summary\n";
  using Section = void (*)(std::ostringstream&, const fs::path&);
  for (Section s : {corpus_section, detection_section, liveness_section, campaigns_section, attribution_section,
                    coverage_section, analytics_section}) {
    try {
      s(out, out_dir);
    } catch (const json::exception& e) {
      out << "  (unreadable output: " << e.what() << ")\n";
    }
  }
  return out.str();
}

}  // namespace scamwatch::pipeline
