#include "scamwatch/attribution/email_clusters.hpp"

#include <map>
#include <numeric>

#include "scamwatch/attribution/edit_distance.hpp"
#include "scamwatch/bundled_data.hpp"
#include "scamwatch/common/error.hpp"
#include "scamwatch/common/parallel.hpp"
#include "scamwatch/common/text.hpp"

namespace scamwatch::attribution {

PrivacyServiceList PrivacyServiceList::parse(std::string_view content) {
  PrivacyServiceList list;
  for (auto& entry : list_entries(content)) list.domains_.push_back(ascii_lower(entry));
  return list;
}

const PrivacyServiceList& PrivacyServiceList::bundled() {
  static const PrivacyServiceList list = parse(bundled::kPrivacyDomains);
  return list;
}

bool PrivacyServiceList::covers(std::string_view email) const {
  auto at = email.rfind('@');
  if (at == std::string_view::npos) return false;
  std::string domain = ascii_lower(email.substr(at + 1));
  for (const auto& entry : domains_) {
    if (domain == entry) return true;
    if (domain.size() > entry.size() && domain.ends_with(entry) && domain[domain.size() - entry.size() - 1] == '.') {
      return true;
    }
  }
  return false;
}

std::vector<EmailCluster> cluster_emails(const std::vector<std::string>& emails, std::size_t threshold,
                                         std::size_t parallelism, const PrivacyServiceList& privacy) {
  if (threshold < 1) throw InvalidArgument("email clustering threshold must be at least 1");
  std::set<std::string> unique;
  for (const auto& e : emails) {
    if (!e.empty()) unique.insert(e);
  }
  std::vector<std::string> items(unique.begin(), unique.end());
  const std::size_t n = items.size();

  // Pairwise links per row; rows are independent.
  auto links = parallel_map(n, parallelism, [&](std::size_t i) {
    std::vector<std::size_t> linked;
    for (std::size_t j = i + 1; j < n; ++j) {
      std::size_t len_gap = items[i].size() > items[j].size() ? items[i].size() - items[j].size()
                                                              : items[j].size() - items[i].size();
      if (len_gap >= threshold) continue;
      if (levenshtein(items[i], items[j]) < threshold) linked.push_back(j);
    }
    return linked;
  });

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j : links[i]) {
      std::size_t a = find(i), b = find(j);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }

  std::map<std::size_t, EmailCluster> by_root;
  for (std::size_t i = 0; i < n; ++i) {
    auto& cluster = by_root[find(i)];
    cluster.members.insert(items[i]);
    cluster.privacy_service = cluster.privacy_service || privacy.covers(items[i]);
  }
  std::vector<EmailCluster> out;
  for (auto& [root, cluster] : by_root) {
    cluster.representative = *cluster.members.begin();
    out.push_back(std::move(cluster));
  }
  std::sort(out.begin(), out.end(),
            [](const EmailCluster& a, const EmailCluster& b) { return a.representative < b.representative; });
  return out;
}

nlohmann::json to_json(const EmailCluster& cluster) {
  return {{"representative", cluster.representative},
          {"members", cluster.members},
          {"size", cluster.members.size()},
          {"privacy_service", cluster.privacy_service}};
}

}  // namespace scamwatch::attribution
