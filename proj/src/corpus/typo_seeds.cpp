#include "scamwatch/corpus/typo_seeds.hpp"

#include <vector>

#include "scamwatch/common/error.hpp"

namespace scamwatch::corpus {
namespace {

// QWERTY neighbours of each key.
std::string_view keyboard_neighbours(char c) {
  switch (c) {
    case '1': return "2q";     case '2': return "3wq1";   case '3': return "4ew2";
    case '4': return "5re3";   case '5': return "6tr4";   case '6': return "7yt5";
    case '7': return "8uy6";   case '8': return "9iu7";   case '9': return "0oi8";
    case '0': return "po9";    case 'q': return "12wa";   case 'w': return "3esaq2";
    case 'e': return "4rdsw3"; case 'r': return "5tfde4"; case 't': return "6ygfr5";
    case 'y': return "7uhgt6"; case 'u': return "8ijhy7"; case 'i': return "9okju8";
    case 'o': return "0plki9"; case 'p': return "lo0";    case 'a': return "qwsz";
    case 's': return "edxzaw"; case 'd': return "rfcxse"; case 'f': return "tgvcdr";
    case 'g': return "yhbvft"; case 'h': return "ujnbgy"; case 'j': return "ikmnhu";
    case 'k': return "olmji";  case 'l': return "kop";    case 'z': return "asx";
    case 'x': return "zsdc";   case 'c': return "xdfv";   case 'v': return "cfgb";
    case 'b': return "vghn";   case 'n': return "bhjm";   case 'm': return "njk";
    default: return "";
  }
}

bool valid_label(std::string_view label) {
  return !label.empty() && label.size() <= 63 && label.front() != '-' && label.back() != '-';
}

std::vector<std::string> label_variants(TypoModel model, const std::string& label) {
  std::vector<std::string> out;
  const std::size_t n = label.size();
  switch (model) {
    case TypoModel::char_duplication:
      for (std::size_t i = 0; i < n; ++i) out.push_back(label.substr(0, i + 1) + label.substr(i));
      break;
    case TypoModel::char_omission:
      for (std::size_t i = 0; i < n; ++i) out.push_back(label.substr(0, i) + label.substr(i + 1));
      break;
    case TypoModel::char_transposition:
      for (std::size_t i = 0; i + 1 < n; ++i) {
        if (label[i] == label[i + 1]) continue;
        std::string v = label;
        std::swap(v[i], v[i + 1]);
        out.push_back(std::move(v));
      }
      break;
    case TypoModel::char_substitution_adjacent:
      for (std::size_t i = 0; i < n; ++i) {
        for (char repl : keyboard_neighbours(label[i])) {
          std::string v = label;
          v[i] = repl;
          out.push_back(std::move(v));
        }
      }
      break;
    case TypoModel::missing_dot:
      break;
  }
  return out;
}

}  // namespace

std::string_view to_string(TypoModel model) {
  switch (model) {
    case TypoModel::char_duplication: return "char-duplication";
    case TypoModel::char_omission: return "char-omission";
    case TypoModel::char_transposition: return "char-transposition";
    case TypoModel::char_substitution_adjacent: return "char-substitution-adjacent";
    case TypoModel::missing_dot: return "missing-dot";
  }
  return "";
}

TypoModel parse_typo_model(std::string_view name) {
  for (auto model : kAllTypoModels) {
    if (to_string(model) == name) return model;
  }
  throw InvalidArgument("unknown typo model: " + std::string(name));
}

std::set<std::string> generate_typo_seeds(std::string_view domain, const std::set<TypoModel>& models,
                                          const PublicSuffixList& suffixes) {
  if (domain.find('.') == std::string_view::npos) {
    throw InvalidArgument("domain must contain a dot: " + std::string(domain));
  }
  for (char c : domain) {
    if (static_cast<unsigned char>(c) >= 0x80 || (c >= 'A' && c <= 'Z')) {
      throw InvalidArgument("domain must be lowercase ASCII: " + std::string(domain));
    }
  }
  std::string host;
  try {
    host = canonical_hostname(domain);
  } catch (const ParseError&) {
    throw InvalidArgument("empty or malformed label in " + std::string(domain));
  }

  std::string suffix = suffixes.public_suffix(host);
  if (suffix.size() >= host.size()) throw InvalidArgument("empty label left of public suffix: " + host);
  std::string left = host.substr(0, host.size() - suffix.size() - 1);
  std::size_t dot = left.rfind('.');
  std::string prefix = dot == std::string::npos ? "" : left.substr(0, dot + 1);
  std::string label = dot == std::string::npos ? left : left.substr(dot + 1);
  if (label.empty()) throw InvalidArgument("empty label left of public suffix: " + host);

  std::set<std::string> out;
  for (auto model : models) {
    if (model == TypoModel::missing_dot) {
      if (prefix.empty()) {
        out.insert("www" + label + "." + suffix);
      } else {
        for (std::size_t i = 0; i < left.size(); ++i) {
          if (left[i] == '.') out.insert(left.substr(0, i) + left.substr(i + 1) + "." + suffix);
        }
      }
      continue;
    }
    for (auto& variant : label_variants(model, label)) {
      if (valid_label(variant)) out.insert(prefix + variant + "." + suffix);
    }
  }
  out.erase(host);
  return out;
}

}  // namespace scamwatch::corpus
