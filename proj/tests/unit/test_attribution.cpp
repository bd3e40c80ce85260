#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "scamwatch/attribution/edit_distance.hpp"
#include "scamwatch/attribution/email_clusters.hpp"
#include "scamwatch/attribution/infrastructure.hpp"
#include "scamwatch/common/error.hpp"

using namespace scamwatch;
using namespace scamwatch::attribution;

namespace {

std::string random_string(std::mt19937_64& rng, std::size_t max_len, const std::string& alphabet) {
  std::string s(rng() % (max_len + 1), ' ');
  for (auto& c : s) c = alphabet[rng() % alphabet.size()];
  return s;
}

std::set<std::set<std::string>> partition(const std::vector<EmailCluster>& clusters) {
  std::set<std::set<std::string>> out;
  for (const auto& c : clusters) out.insert(c.members);
  return out;
}

}  // namespace

TEST_CASE("levenshtein examples") {
  CHECK(levenshtein("", "") == 0);
  CHECK(levenshtein("abc", "") == 3);
  CHECK(levenshtein("kitten", "sitting") == 3);
  CHECK(levenshtein("amitabb8@gmx.com", "amitabb9@gmx.com") == 1);
  CHECK(levenshtein("amitabb8@gmx.com", "amitapp1@gmx.com") == 3);
  CHECK(levenshtein("amitabb8@gmx.com", "amitabb6@gmail.com") == 4);
}

TEST_CASE("levenshtein equals the full-matrix reference") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 1000; ++i) {
    // A small alphabet makes near-matches common.
    std::string a = random_string(rng, 40, i % 2 ? "ab" : "abcdefgh@.");
    std::string b = random_string(rng, 40, i % 2 ? "ab" : "abcdefgh@.");
    CHECK(levenshtein(a, b) == testing::matrix_edit_distance(a, b));
    CHECK(levenshtein(a, b) == levenshtein(b, a));
  }
}

TEST_CASE("email clustering examples") {
  auto c = cluster_emails({"amitabb8@gmx.com", "amitabb9@gmx.com", "amitapp1@gmx.com", "amitabb6@gmail.com"});
  REQUIRE(c.size() == 1);
  CHECK(c[0].members.size() == 4);
  CHECK(c[0].representative == "amitabb6@gmail.com");

  auto same = cluster_emails({"x@y.com", "x@y.com"});
  REQUIRE(same.size() == 1);
  CHECK(same[0].members.size() == 1);

  std::string a = "abcde@mail.com", b = "vwxyz@mail.com";
  REQUIRE(testing::matrix_edit_distance(a, b) == 5);
  CHECK(cluster_emails({a, b}).size() == 2);
  CHECK(cluster_emails({a, b}, 6).size() == 1);

  CHECK(cluster_emails({}).empty());
  CHECK(cluster_emails({"", ""}).empty());
  CHECK_THROWS_AS(cluster_emails({"a@b.c"}, 0), InvalidArgument);
}

TEST_CASE("privacy-service clusters are flagged") {
  auto c = cluster_emails({"abc123@privacyprotect.org", "owner@shop.com"});
  REQUIRE(c.size() == 2);
  CHECK(c[0].privacy_service);
  CHECK_FALSE(c[1].privacy_service);
  auto list = PrivacyServiceList::parse("// comment\nproxy.example\n");
  CHECK(list.covers("someone@proxy.example"));
  CHECK_FALSE(list.covers("someone@example"));
}

TEST_CASE("clustering is permutation invariant and parallel safe") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 50; ++i) {
    std::vector<std::string> emails;
    for (int k = 0; k < 40; ++k) emails.push_back(random_string(rng, 6, "abc") + "@m.com");
    auto expected = cluster_emails(emails);
    std::shuffle(emails.begin(), emails.end(), rng);
    CHECK(cluster_emails(emails) == expected);
    CHECK(cluster_emails(emails, 5, 4) == expected);
  }
}

TEST_CASE("cluster count is non-increasing in threshold") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 30; ++i) {
    std::vector<std::string> emails;
    for (int k = 0; k < 30; ++k) emails.push_back(random_string(rng, 8, "abcd") + "@x.org");
    std::size_t previous = SIZE_MAX;
    for (std::size_t t = 1; t <= 10; ++t) {
      auto count = cluster_emails(emails, t).size();
      CHECK(count <= previous);
      previous = count;
    }
  }
}

TEST_CASE("single linkage joins chains") {
  // Each neighbour is 4 edits apart, the ends 8.
  auto c = cluster_emails({"aaaaaaaa@x.com", "bbbbaaaa@x.com", "bbbbbbbb@x.com"});
  CHECK(c.size() == 1);
  CHECK(partition(cluster_emails({"aaaaaaaa@x.com", "bbbbbbbb@x.com"})).size() == 2);
}

TEST_CASE("pair maps and whois parsing") {
  auto ips = parse_pair_map("domain,ip\nA.com,1.2.3.4\nb.com,not-an-ip\nc.com\n", PairMapKind::domain_ip);
  CHECK(ips.entries.size() == 1);
  CHECK(*ips.find("a.com") == "1.2.3.4");
  CHECK(ips.warnings.size() == 2);
  auto geo = parse_pair_map("ip,country\n1.2.3.4,us\n", PairMapKind::ip_country);
  CHECK(*geo.find("1.2.3.4") == "US");

  auto whois = parse_whois_emails("domain,email\na.com,Owner@Shop.com\nb.com,\n");
  REQUIRE(whois.records.size() == 2);
  CHECK(whois.records[0].email == "owner@shop.com");
  CHECK_FALSE(whois.records[1].email.has_value());
}

TEST_CASE("infrastructure aggregation") {
  CHECK(aggregate_infrastructure({}, {}, {}, {}).domains.empty());

  PairMap ip, as, geo;
  std::vector<std::string> domains;
  for (int i = 0; i < 10; ++i) {
    std::string d = "d" + std::to_string(i) + ".com", addr = "10.0.0." + std::to_string(i);
    domains.push_back(d);
    ip.entries[d] = addr;
    geo.entries[addr] = i < 8 ? "US" : "DE";
    as.entries[addr] = "HostCo";
  }
  auto r = aggregate_infrastructure(domains, ip, as, geo);
  CHECK(r.mapped == 10);
  CHECK(r.country_histogram.at("US") == doctest::Approx(0.8));
  CHECK(r.country_histogram.at("DE") == doctest::Approx(0.2));
  CHECK(r.unique_ips == 10);

  PairMap ip2, as2;
  std::vector<std::string> hundred;
  for (int i = 0; i < 100; ++i) {
    std::string d = "s" + std::to_string(i) + ".net", addr = "10.1.0." + std::to_string(i);
    hundred.push_back(d);
    ip2.entries[d] = addr;
    as2.entries[addr] = i < 18 ? "CLOUDFLARENET" : "OtherNet";
  }
  auto cf = aggregate_infrastructure(hundred, ip2, as2, {});
  CHECK(cf.cloudflare_fraction == doctest::Approx(0.18));
  CHECK(cf.country_histogram.at("unknown") == doctest::Approx(1.0));
}

TEST_CASE("aggregation conserves counts") {
  std::mt19937_64 rng(44);
  for (int i = 0; i < 100; ++i) {
    PairMap ip;
    std::vector<std::string> domains;
    std::size_t n = rng() % 50;
    for (std::size_t k = 0; k < n; ++k) {
      domains.push_back("x" + std::to_string(k) + ".org");
      if (rng() % 3) ip.entries[domains.back()] = "192.0.2." + std::to_string(rng() % 20);
    }
    auto r = aggregate_infrastructure(domains, ip, {}, {});
    CHECK(r.mapped + r.unmapped == n);
    CHECK(r.domains.size() == n);
    double total = 0;
    for (const auto& [k, v] : r.country_histogram) total += v;
    if (r.mapped > 0) CHECK(total == doctest::Approx(1.0));
  }
}
