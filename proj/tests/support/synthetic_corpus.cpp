#include "synthetic_corpus.hpp"

#include <algorithm>
#include <array>
#include <cstdio>

#include "scamwatch/common/time.hpp"

namespace scamwatch::testing {
namespace {

using corpus::CrawlRecord;
using corpus::DialogEvent;
using corpus::DialogKind;

const char* const kStrongFragments[] = {
    "Your computer is infected with a dangerous virus.",
    "We detected that your PC is infected and your files are at risk.",
    "Spyware is sending your banking passwords to hackers.",
    "A Trojan horse has been found on this device.",
    "Malware has damaged your system registry.",
};

const char* const kSupportFragments[] = {
    "Windows security has blocked this computer.",
    "Microsoft detected a critical error (code 0x80070424).",
    "Do not ignore this warning.",
    "Contact a certified technician immediately.",
    "Your firewall is disabled and your account was hacked.",
    "Our helpline is open 24/7.",
};

const char* const kCallPhrases[] = {"Call now: %s", "Please call %s to unlock your PC.", "Dial %s toll-free.",
                                    "Call Microsoft support at %s"};

const char* const kPhoneFormats[] = {"(%s) %s-%s", "%s-%s-%s", "%s.%s.%s", "+1 %s %s %s", "1-%s-%s-%s",
                                     "%s%s%s"};

const char* const kTollFree[] = {"800", "833", "844", "855", "866", "877", "888"};
const char* const kOtherAreas[] = {"212", "415", "646", "718", "305"};

const char* const kBenignDialogs[] = {
    "Leave site? Changes you made may not be saved.",
    "Please enter a valid email address.",
    "Your session will expire in 5 minutes.",
    "Are you sure you want to remove this item from your cart?",
    "This site uses cookies to improve your experience.",
    "Subscribe to our newsletter for weekly deals?",
};

const char* const kBenignBodies[] = {
    "<h1>Spring sale</h1><p>Free shipping on orders over $50.</p>",
    "<h1>Recipe: lemon cake</h1><p>Mix flour, sugar and eggs. Bake for 40 minutes.</p>",
    "<h1>City council news</h1><p>The library reopens on Monday with new hours.</p>",
    "<h1>Photo gallery</h1><p>Pictures from our summer trip to the coast.</p>",
    "<h1>Contact</h1><p>Visit our store at 12 Main Street. Phone (212) 555-0100.</p>",
};

const char* const kScaryNoPhone[] = {
    "<h1>Antivirus test results</h1><p>Each product scanned a virus, a trojan and spyware samples. "
    "All malware was removed. Windows security scored well.</p>",
    "<h1>How to spot a scam</h1><p>A fake alert may claim your PC is infected with malware. "
    "Never trust a warning like that.</p>",
};

const char* const kTlds[] = {"com", "net", "xyz", "online", "club", "top", "info", "co.uk"};

std::string pick(std::mt19937_64& rng, const auto& list) {
  std::uniform_int_distribution<std::size_t> d(0, std::size(list) - 1);
  return list[d(rng)];
}

std::string digits(std::mt19937_64& rng, int n, bool first_nonzero_nonone = false) {
  std::string s;
  std::uniform_int_distribution<int> d(0, 9), lead(2, 9);
  for (int i = 0; i < n; ++i) s += static_cast<char>('0' + (i == 0 && first_nonzero_nonone ? lead(rng) : d(rng)));
  return s;
}

std::string format(const std::string& pattern, const std::string& a) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern.c_str(), a.c_str());
  return buf;
}

std::string phone(std::mt19937_64& rng, bool toll_free) {
  std::string area = toll_free ? pick(rng, kTollFree) : pick(rng, kOtherAreas);
  std::string exchange = digits(rng, 3, true);
  std::string line = digits(rng, 4);
  char buf[64];
  std::snprintf(buf, sizeof buf, pick(rng, kPhoneFormats).c_str(), area.c_str(), exchange.c_str(), line.c_str());
  return buf;
}

std::string label(std::mt19937_64& rng, std::size_t length) {
  static const char alphabet[] = "abcdefghijklmnopqrstuvwxyz0123456789";
  std::uniform_int_distribution<std::size_t> d(0, 35);
  std::string s;
  for (std::size_t i = 0; i < length; ++i) s += alphabet[d(rng)];
  s.front() = 'a' + static_cast<char>(d(rng) % 26);
  return s;
}

Timestamp timestamp(std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> d(0, 200LL * 86400);
  return Timestamp{std::chrono::seconds{1767225600LL + d(rng)}};  // 2026-01-01 onwards
}

CrawlRecord base_record(std::mt19937_64& rng, const std::string& id, const std::string& host) {
  CrawlRecord r;
  r.record_id = id;
  r.seed_url = "http://" + host + "/";
  r.final_url = r.seed_url;
  r.vantage = pick(rng, std::array{"residential", "cloud", "university"});
  r.observed_at = timestamp(rng);
  r.http_status = 200;
  return r;
}

void add_dialog(CrawlRecord& r, DialogKind kind, std::string message) {
  r.dialogs.push_back(DialogEvent{kind, std::move(message), static_cast<int>(r.dialogs.size()) + 1});
}

std::string scam_text(std::mt19937_64& rng) {
  // Two different strong fragments guarantee two distinct scare words.
  std::vector<std::string> strong(std::begin(kStrongFragments), std::end(kStrongFragments));
  std::shuffle(strong.begin(), strong.end(), rng);
  return strong[0] + " " + strong[1] + " " + pick(rng, kSupportFragments);
}

LabeledRecord scam_page(std::mt19937_64& rng, std::size_t i) {
  std::string host = label(rng, 6 + i % 9) + "-" + pick(rng, std::array{"alert", "support", "help", "fix"}) + "." +
                     pick(rng, kTlds);
  CrawlRecord r = base_record(rng, "scam-" + std::to_string(i), host);
  std::uniform_int_distribution<int> dialogs(0, 4), coin(0, 1);
  int dialog_count = dialogs(rng);
  bool toll_free = coin(rng) || coin(rng);
  std::string number = phone(rng, toll_free);
  std::string call = format(pick(rng, kCallPhrases), number);
  std::string text = scam_text(rng);

  std::string name;
  switch (i % 4) {
    case 0:  // everything in dialogs
      name = "dialog-scam";
      if (dialog_count == 0) dialog_count = 1;
      add_dialog(r, DialogKind::alert, text + " " + call);
      r.html = "<html><body><h1>Please wait</h1></body></html>";
      break;
    case 1:  // dialogs scare, body carries the number
      name = "body-number-scam";
      if (dialog_count == 0) dialog_count = 1;
      add_dialog(r, DialogKind::alert, text);
      r.html = "<html><body><p>" + pick(rng, kSupportFragments) + "</p><p>" + call + "</p></body></html>";
      break;
    case 2:  // popup windows only, no dialogs
      name = "popup-scam";
      dialog_count = 0;
      r.popup_window_count = 1 + static_cast<int>(i % 3);
      r.html = "<html><body><h1>" + text + "</h1><div class=\"phone\">" + call + "</div></body></html>";
      break;
    default:  // number only delivered by pay-per-call script
      name = "pay-per-call-scam";
      if (dialog_count == 0) dialog_count = 1;
      add_dialog(r, DialogKind::alert, text + " Call the number on screen.");
      r.html = "<html><body><p>" + pick(rng, kStrongFragments) + "</p><span id=\"num\"></span></body></html>";
      r.scripts.push_back(kCallpixelsScript);
      break;
  }
  for (int d = static_cast<int>(r.dialogs.size()); d < dialog_count; ++d) {
    add_dialog(r, d % 2 ? DialogKind::confirm : DialogKind::alert, pick(rng, kSupportFragments));
  }
  r.onunload_hooked = coin(rng);
  r.audio_autoplay = coin(rng);
  if (r.audio_autoplay) r.html += "<audio src=\"alarm.mp3\" autoplay></audio>";
  return {std::move(r), true, name};
}

LabeledRecord benign_page(std::mt19937_64& rng, std::size_t i) {
  std::string host = pick(rng, std::array{"www.", "shop.", "news.", ""}) + label(rng, 5 + i % 7) + "." + pick(rng, kTlds);
  CrawlRecord r = base_record(rng, "benign-" + std::to_string(i), host);
  std::uniform_int_distribution<int> count(1, 3);
  std::string name;
  switch (i % 4) {
    case 0:  // scam text and a number, but nothing pops up
      name = "quiet-scam-text";
      r.html = "<html><body><p>" + scam_text(rng) + "</p><p>" + format(pick(rng, kCallPhrases), phone(rng, true)) +
               "</p></body></html>";
      if (i % 8 == 0) r.scripts.push_back(kCallpixelsScript);
      break;
    case 1:  // ordinary dialogs
      name = "dialog-benign";
      for (int d = count(rng); d > 0; --d) add_dialog(r, DialogKind::confirm, pick(rng, kBenignDialogs));
      r.html = std::string("<html><body>") + pick(rng, kBenignBodies) + "</body></html>";
      break;
    case 2:  // scary vocabulary and a dialog, but no number to call
      name = "scary-without-number";
      add_dialog(r, DialogKind::alert, pick(rng, kBenignDialogs));
      r.html = std::string("<html><body>") + pick(rng, kScaryNoPhone) + "</body></html>";
      break;
    default:  // a popup window with an ordinary page
      name = "popup-benign";
      r.popup_window_count = 1;
      r.html = std::string("<html><body>") + pick(rng, kBenignBodies) + "</body></html>";
      break;
  }
  return {std::move(r), false, name};
}

}  // namespace

const char* const kCallpixelsScript = R"js(var ran = false;
function loadNumber() {
  if (!ran) {
    var default_number = "(877) 292-3084";
    var default_plain_number = "8772923084";
    var campaign = new Callpixels.Campaign({campaign_key: '43019bb72cd5ecc4e3b33902645dd4d6'});
    var tags = {};
    var affiliate_id = '1';
    var browser = 'Firefox';
    var country = 'US';
    var os = 'Windows';
    tags = { a: affiliate_id, browser: browser, country: country, os: os };
    campaign.request_number(tags,
      function (matching_number) {
        number = matching_number.get('formatted_number');
        plain_number = matching_number.get('plain_number');
        window.callpixels_number = matching_number;
      },
      function (error) {
        number = default_number;
        plain_number = default_plain_number;
      });
    ran = true;
    var number = "1 " + number;
    FormattedNumber1.innerHTML = number;
  }
}
window.onfocus = loadNumber();)js";

std::vector<LabeledRecord> labeled_corpus(std::uint64_t seed, std::size_t scams, std::size_t benign) {
  std::mt19937_64 rng(seed);
  std::vector<LabeledRecord> out;
  for (std::size_t i = 0; i < scams; ++i) out.push_back(scam_page(rng, i));
  for (std::size_t i = 0; i < benign; ++i) out.push_back(benign_page(rng, i));
  std::shuffle(out.begin(), out.end(), rng);
  return out;
}

CrawlRecord gated_fuzz_record(std::mt19937_64& rng, std::size_t index) {
  CrawlRecord r = base_record(rng, "fuzz-" + std::to_string(index), label(rng, 8) + "." + pick(rng, kTlds));
  std::uniform_int_distribution<int> parts(0, 12), kind(0, 5), coin(0, 1);
  std::string body;
  for (int p = parts(rng); p > 0; --p) {
    switch (kind(rng)) {
      case 0: body += scam_text(rng); break;
      case 1: body += format(pick(rng, kCallPhrases), phone(rng, coin(rng))); break;
      case 2: body += pick(rng, kBenignBodies); break;
      case 3: body += std::string(static_cast<std::size_t>(parts(rng)) * 40, ' '); break;
      case 4: body += "<script>" + std::string(kCallpixelsScript) + "</script>"; break;
      default: body += pick(rng, kSupportFragments); break;
    }
    body += ' ';
  }
  r.html = "<html><body>" + body + "</body></html>";
  if (coin(rng)) r.scripts.push_back(kCallpixelsScript);
  if (coin(rng)) r.scripts.push_back("var phone = '" + phone(rng, true) + "'; // call now");
  r.onunload_hooked = coin(rng);
  r.audio_autoplay = coin(rng);
  return r;
}

std::string render_status_page(const std::string& host, const std::vector<std::string>& clients,
                               std::optional<long long> total_accesses, std::optional<std::string> uptime) {
  std::string out =
      "<html><head><title>Apache Status</title></head><body>\n<h1>Apache Server Status for " + host +
      "</h1>\n<dl><dt>Server Version: Apache/2.4.29 (Ubuntu)</dt>\n";
  if (uptime) out += "<dt>Server uptime:  " + *uptime + "</dt>\n";
  if (total_accesses) out += "<dt>Total accesses: " + std::to_string(*total_accesses) + " - Total Traffic: 3 MB</dt>\n";
  out += "</dl>\n<table border=\"0\"><tr><th>Srv</th><th>PID</th><th>Acc</th><th>M</th><th>CPU\n</th><th>SS</th>"
         "<th>Req</th><th>Conn</th><th>Child</th><th>Slot</th><th>Client</th><th>VHost</th><th>Request</th></tr>\n";
  for (std::size_t i = 0; i < clients.size(); ++i) {
    out += "<tr><td><b>" + std::to_string(i) + "-0</b></td><td>" + std::to_string(1000 + i) +
           "</td><td>0/1/1</td><td>W\n</td><td>0.00</td><td>1</td><td>0</td><td>0.0</td><td>0.00</td><td>0.00\n</td>"
           "<td>" + clients[i] + "</td><td nowrap>" + host + ":80</td><td nowrap>GET / HTTP/1.1</td></tr>\n";
  }
  out += "</table>\n<hr /><table>\n<tr><th>Client</th><td>Client IP address</td></tr>\n"
         "<tr><th>Request</th><td>Current request</td></tr>\n</table>\n</body></html>\n";
  return out;
}

}  // namespace scamwatch::testing
