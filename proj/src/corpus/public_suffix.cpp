#include "scamwatch/corpus/public_suffix.hpp"

#include <arpa/inet.h>

#include <vector>

#include "scamwatch/bundled_data.hpp"
#include "scamwatch/common/error.hpp"
#include "scamwatch/common/text.hpp"

namespace scamwatch::corpus {
namespace {

std::vector<std::string_view> split_labels(std::string_view host) {
  std::vector<std::string_view> labels;
  std::size_t pos = 0;
  while (true) {
    std::size_t dot = host.find('.', pos);
    labels.push_back(host.substr(pos, dot == std::string_view::npos ? std::string_view::npos : dot - pos));
    if (dot == std::string_view::npos) break;
    pos = dot + 1;
  }
  return labels;
}

std::string join_from(const std::vector<std::string_view>& labels, std::size_t first) {
  std::string out;
  for (std::size_t i = first; i < labels.size(); ++i) {
    if (!out.empty()) out += '.';
    out += labels[i];
  }
  return out;
}

// Number of labels in the public suffix of `host`.
std::size_t suffix_label_count(const std::vector<std::string_view>& labels,
                               const std::unordered_set<std::string>& rules,
                               const std::unordered_set<std::string>& wildcards,
                               const std::unordered_set<std::string>& exceptions) {
  const std::size_t n = labels.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (exceptions.count(join_from(labels, i))) return n - i - 1;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (rules.count(join_from(labels, i))) return n - i;
    if (i + 1 < n && wildcards.count(join_from(labels, i + 1))) return n - i;
  }
  return 1;
}

}  // namespace

std::string canonical_hostname(std::string_view hostname) {
  std::string host = ascii_lower(trim(hostname));
  if (!host.empty() && host.back() == '.') host.pop_back();
  if (host.empty() || host.size() > 253) throw ParseError("invalid hostname: " + std::string(hostname));
  for (auto label : split_labels(host)) {
    if (label.empty() || label.size() > 63 || label.front() == '-' || label.back() == '-') {
      throw ParseError("invalid hostname: " + std::string(hostname));
    }
    for (char c : label) {
      bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-' || c == '_';
      if (!ok) throw ParseError("invalid hostname: " + std::string(hostname));
    }
  }
  return host;
}

bool is_ip_literal(std::string_view host) {
  std::string h(host);
  if (h.size() >= 2 && h.front() == '[' && h.back() == ']') h = h.substr(1, h.size() - 2);
  unsigned char buf[16];
  return inet_pton(AF_INET, h.c_str(), buf) == 1 || inet_pton(AF_INET6, h.c_str(), buf) == 1;
}

PublicSuffixList PublicSuffixList::parse(std::string_view content) {
  PublicSuffixList list;
  for (auto& entry : list_entries(content)) {
    // Rules end at the first whitespace.
    std::string rule = ascii_lower(entry.substr(0, entry.find_first_of(" \t")));
    if (rule.rfind("!", 0) == 0) {
      list.exceptions_.insert(rule.substr(1));
    } else if (rule.rfind("*.", 0) == 0) {
      list.wildcards_.insert(rule.substr(2));
    } else {
      list.rules_.insert(rule);
    }
  }
  return list;
}

const PublicSuffixList& PublicSuffixList::bundled() {
  static const PublicSuffixList list = parse(bundled::kPublicSuffixSnapshot);
  return list;
}

std::string PublicSuffixList::public_suffix(std::string_view hostname) const {
  std::string host = canonical_hostname(hostname);
  auto labels = split_labels(host);
  std::size_t count = suffix_label_count(labels, rules_, wildcards_, exceptions_);
  return join_from(labels, labels.size() - count);
}

std::string PublicSuffixList::registrable_domain(std::string_view hostname) const {
  std::string host = canonical_hostname(hostname);
  if (is_ip_literal(host)) throw InvalidArgument("no registrable domain: " + host);
  auto labels = split_labels(host);
  std::size_t count = suffix_label_count(labels, rules_, wildcards_, exceptions_);
  if (count >= labels.size()) throw InvalidArgument("no registrable domain: " + host);
  return join_from(labels, labels.size() - count - 1);
}

std::string etld1(std::string_view fqdn) { return PublicSuffixList::bundled().registrable_domain(fqdn); }

}  // namespace scamwatch::corpus
