#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "scamwatch/campaigns/graph.hpp"
#include "scamwatch/campaigns/stats.hpp"
#include "scamwatch/common/error.hpp"

using namespace scamwatch;
using namespace scamwatch::campaigns;

namespace {

Timestamp at(int day) { return parse_timestamp("2026-01-01T00:00:00Z") + std::chrono::days(day); }

detector::Verdict scam(std::string host, std::vector<std::string> phones, int day) {
  detector::Verdict v;
  v.record_id = host + "-" + std::to_string(day);
  v.is_scam = true;
  v.host = host;
  v.observed_at = at(day);
  for (auto& p : phones) v.phones.push_back({p, detector::is_toll_free(p), detector::PhoneSource::dialog});
  return v;
}

CampaignGraph random_graph(std::mt19937_64& rng) {
  CampaignGraph g;
  std::size_t domains = rng() % 100 + 1;
  std::size_t phones = rng() % 100;
  for (std::size_t i = 0; i < domains; ++i) {
    g.add_domain("h" + std::to_string(i) + ".site" + std::to_string(i % 7) + ".com", at(static_cast<int>(rng() % 90)));
  }
  for (std::size_t i = 0; i < phones; ++i) g.add_phone("8005550" + std::to_string(100 + i), at(static_cast<int>(rng() % 90)));
  if (phones > 0) {
    std::size_t edges = rng() % (domains + phones + 1);
    for (std::size_t e = 0; e < edges; ++e) {
      g.add_edge("h" + std::to_string(rng() % domains) + ".site" + std::to_string((rng() % domains) % 7) + ".com",
                 "8005550" + std::to_string(100 + rng() % phones), at(static_cast<int>(rng() % 90)));
    }
  }
  return g;
}

std::set<std::set<NodeRef>> as_sets(const std::vector<Campaign>& campaigns) {
  std::set<std::set<NodeRef>> out;
  for (const auto& c : campaigns) out.insert(std::set<NodeRef>(c.nodes.begin(), c.nodes.end()));
  return out;
}

}  // namespace

TEST_CASE("build_graph: fqdn and etld1 levels") {
  std::vector<detector::Verdict> verdicts = {scam("a.shop.com", {"8885550100"}, 3), scam("b.shop.com", {"8885550100"}, 1),
                                             scam("other.net", {"2125550100"}, 2)};
  auto benign = scam("benign.org", {"8005550100"}, 0);
  benign.is_scam = false;
  verdicts.push_back(benign);

  auto fqdn = build_graph(verdicts, GraphLevel::fqdn);
  CHECK(fqdn.domain_nodes().size() == 3);
  CHECK(fqdn.phone_nodes().size() == 2);
  CHECK(fqdn.edges().size() == 3);
  CHECK(fqdn.phone_nodes().at("8885550100") == at(1));

  auto etld1 = build_graph(verdicts, GraphLevel::etld1);
  CHECK(etld1.domain_nodes().size() == 2);
  CHECK(etld1.domain_nodes().at("shop.com") == at(1));
  CHECK(etld1 == merge_by_etld1(fqdn));
  CHECK(build_graph(verdicts, GraphLevel::fqdn) == fqdn);
  CHECK(build_graph_parallel(verdicts, GraphLevel::fqdn, 4) == fqdn);
}

TEST_CASE("cdn hosts stay whole when contracting") {
  auto g = build_graph({scam("abc.r.cdn77.net", {"8885550100"}, 0), scam("xyz.r.cdn77.net", {"8445550199"}, 0)},
                       GraphLevel::etld1);
  CHECK(g.domain_nodes().size() == 2);
  CHECK(connected_components(g).size() == 2);
}

TEST_CASE("connected components match BFS on random graphs") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    auto g = random_graph(rng);
    auto components = connected_components(g);
    CHECK(as_sets(components) == testing::bfs_components(g));
    std::size_t total = 0;
    for (const auto& c : components) total += c.size;
    CHECK(total == g.node_count());
    for (std::size_t k = 1; k < components.size(); ++k) CHECK(components[k - 1].size >= components[k].size);
  }
}

TEST_CASE("merging by registrable domain never adds components") {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 200; ++i) {
    auto g = random_graph(rng);
    auto merged = merge_by_etld1(g);
    CHECK(connected_components(merged).size() <= connected_components(g).size());
    CHECK(merged.domain_nodes().size() <= g.domain_nodes().size());
    CHECK(merged.phone_nodes() == g.phone_nodes());
  }
}

TEST_CASE("graph merge is a min-timestamp union") {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 50; ++i) {
    auto a = random_graph(rng), b = random_graph(rng);
    auto ab = a, ba = b;
    ab.merge(b);
    ba.merge(a);
    CHECK(ab == ba);
    auto again = ab;
    again.merge(b);
    CHECK(again == ab);
    for (const auto& [d, seen] : a.domain_nodes()) CHECK(ab.domain_nodes().at(d) <= seen);
  }
}

TEST_CASE("campaign stats") {
  CampaignGraph single;
  single.add_domain("lonely.com", at(0));
  auto cs = campaigns_of(single);
  REQUIRE(cs.size() == 1);
  CHECK(cs[0].size == 1);
  CHECK(cs[0].lifetime_days == 0);

  CampaignGraph pair;
  pair.add_domain("first.xyz", at(10));
  pair.add_edge("first.xyz", "8445550199", at(10));
  pair.add_domain("later.top", at(55));
  pair.add_edge("later.top", "8445550199", at(55));
  auto c = campaigns_of(pair);
  REQUIRE(c.size() == 1);
  CHECK(c[0].lifetime_days == 45);
  CHECK(c[0].tlds == std::set<std::string>{"top", "xyz"});
  CHECK(c[0].toll_free_prefixes == std::set<std::string>{"844"});
  CHECK(c[0].representative() == "8445550199");

  CampaignGraph star;
  for (int i = 0; i < 6; ++i) star.add_edge("hub.com", "877555010" + std::to_string(i), at(i));
  for (int i = 0; i < 6; ++i) star.add_edge("leaf" + std::to_string(i) + ".com", "8775550100", at(i));
  auto s = campaigns_of(star);
  REQUIRE(s.size() == 1);
  CHECK(s[0].domain_degrees.at("hub.com") == 6);
  CHECK(s[0].phone_degrees.at("8775550100") == 7);
  auto summary = summarize(star, s);
  CHECK(summary.max_domain_degree == 6);
  CHECK(summary.max_phone_degree == 7);
  CHECK(summary.components_over_five == 1);
}

TEST_CASE("campaign lifetime is independent of insertion order") {
  std::mt19937_64 rng(34);
  for (int i = 0; i < 50; ++i) {
    std::vector<std::tuple<std::string, std::string, int>> edges;
    for (int e = 0; e < 20; ++e) {
      edges.emplace_back("d" + std::to_string(rng() % 6) + ".com", "800555010" + std::to_string(rng() % 4),
                         static_cast<int>(rng() % 60));
    }
    auto build = [&] {
      CampaignGraph g;
      for (const auto& [d, p, day] : edges) g.add_edge(d, p, at(day));
      return campaigns_of(g);
    };
    auto before = build();
    std::shuffle(edges.begin(), edges.end(), rng);
    auto after = build();
    REQUIRE(before.size() == after.size());
    for (std::size_t k = 0; k < before.size(); ++k) CHECK(before[k].lifetime_days == after[k].lifetime_days);
  }
}

TEST_CASE("pearson correlation") {
  std::vector<double> x = {2, 3, 3, 4, 5, 7, 8, 12, 15, 31};
  std::vector<double> y = {0, 1, 5, 2, 9, 14, 10, 30, 22, 61};
  // Exact rational sums: sxy = 1444, sxx = 696, syy = 15702/5.
  double closed = 1444.0 / std::sqrt(696.0 * 15702.0 / 5.0);
  CHECK(std::abs(pearson_correlation(x, y) - closed) < 1e-12);
  CHECK(std::abs(pearson_correlation(x, y) - 0.97672001879702397) < 1e-12);

  std::vector<double> lin = {1, 2, 3, 4}, up = {3, 5, 7, 9}, down = {9, 7, 5, 3};
  CHECK(pearson_correlation(lin, up) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(pearson_correlation(lin, down) == doctest::Approx(-1.0).epsilon(1e-15));

  std::vector<double> flat = {2, 2, 2, 2};
  CHECK_THROWS_AS(pearson_correlation(lin, flat), InvalidArgument);
  CHECK_THROWS_AS(pearson_correlation(std::vector<double>{1}, std::vector<double>{1}), InvalidArgument);
}

TEST_CASE("pearson r is invariant under positive affine maps") {
  std::mt19937_64 rng(35);
  std::uniform_real_distribution<double> u(-50, 50), scale(0.1, 20);
  for (int i = 0; i < 500; ++i) {
    std::vector<double> x(12), y(12);
    for (std::size_t k = 0; k < x.size(); ++k) {
      x[k] = u(rng);
      y[k] = u(rng) + x[k] * 0.3;
    }
    double r = pearson_correlation(x, y);
    CHECK(r >= -1.0);
    CHECK(r <= 1.0);
    double a = scale(rng), b = u(rng);
    auto tx = x;
    for (auto& v : tx) v = a * v + b;
    CHECK(pearson_correlation(tx, y) == doctest::Approx(r).epsilon(1e-9));
  }
}

TEST_CASE("csv exports") {
  CampaignGraph g;
  g.add_edge("b.com", "8885550100", at(1));
  g.add_domain("a.com", at(0));
  CHECK(export_edges_csv(g) == "domain,phone,first_seen\nb.com,8885550100,2026-01-02T00:00:00Z\n");
  auto nodes = export_nodes_csv(g);
  CHECK(nodes.rfind("node,kind,first_seen\n", 0) == 0);
  CHECK(nodes.find("a.com,domain,2026-01-01T00:00:00Z") != std::string::npos);
  CHECK(nodes.find("8885550100,phone,2026-01-02T00:00:00Z") != std::string::npos);
}
