#include <doctest.h>

#include <algorithm>
#include <random>

#include "scamwatch/common/error.hpp"
#include "scamwatch/common/time.hpp"
#include "scamwatch/detector/features.hpp"
#include "scamwatch/detector/heuristic_config.hpp"
#include "scamwatch/detector/phone.hpp"
#include "scamwatch/detector/scorer.hpp"
#include "scamwatch/detector/verdict.hpp"
#include "synthetic_corpus.hpp"

using namespace scamwatch;
using namespace scamwatch::detector;
using corpus::CrawlRecord;
using corpus::DialogKind;

namespace {

CrawlRecord page(std::vector<std::string> alerts, std::string html = "<html></html>") {
  CrawlRecord r;
  r.record_id = "t";
  r.seed_url = r.final_url = "http://scam.example.com/";
  r.vantage = "test";
  r.observed_at = parse_timestamp("2026-03-01T00:00:00Z");
  r.http_status = 200;
  r.html = std::move(html);
  int ordinal = 0;
  for (auto& a : alerts) r.dialogs.push_back({DialogKind::alert, std::move(a), ++ordinal});
  return r;
}

std::vector<std::string> keywords_of(const Verdict& v) {
  std::vector<std::string> out;
  for (const auto& m : v.matched_keywords) out.push_back(m.keyword);
  return out;
}

bool has(const std::vector<std::string>& list, const std::string& item) {
  return std::find(list.begin(), list.end(), item) != list.end();
}

}  // namespace

TEST_CASE("phone extraction: normalisation, toll-free flag, dedup") {
  auto fig = extract_phone_numbers("(877) 292-3084");
  REQUIRE(fig.size() == 1);
  CHECK(fig[0].digits == "8772923084");
  CHECK(fig[0].toll_free);
  CHECK(extract_phone_numbers("").empty());
  auto dup = extract_phone_numbers("Call +1 844.555.0199 now or 8445550199");
  REQUIRE(dup.size() == 1);
  CHECK(dup[0].digits == "8445550199");
  CHECK(dup[0].toll_free);
}

TEST_CASE("phone extraction: shapes that must not match") {
  CHECK(extract_phone_numbers("order 123-456-7890").empty());   // area code starts with 1
  CHECK(extract_phone_numbers("x8772923084").empty());          // touches a letter
  CHECK(extract_phone_numbers("877292308412").empty());         // too many digits
  CHECK(extract_phone_numbers("877--292-3084").empty());        // two separators
  CHECK(extract_phone_numbers("error 0x80070424").empty());
  auto spans = find_phone_numbers("a 877-292-3084 b (212) 555-0100");
  REQUIRE(spans.size() == 2);
  CHECK(spans[0].begin == 2);
  CHECK(spans[0].end == 14);
  CHECK(spans[1].digits == "2125550100");
}

TEST_CASE("toll-free prefixes") {
  for (const char* prefix : {"800", "833", "844", "855", "866", "877", "888"}) {
    CHECK(is_toll_free(std::string(prefix) + "5550100"));
  }
  CHECK_FALSE(is_toll_free("2125550100"));
  CHECK_FALSE(extract_phone_numbers("(212) 555-0100")[0].toll_free);
}

TEST_CASE("phone normalisation is idempotent") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> lead(2, 9), digit(0, 9);
  for (int i = 0; i < 1000; ++i) {
    std::string digits;
    for (int k = 0; k < 10; ++k) digits += static_cast<char>('0' + ((k == 0 || k == 3) ? lead(rng) : digit(rng)));
    std::string formatted = "(" + digits.substr(0, 3) + ") " + digits.substr(3, 3) + "-" + digits.substr(6);
    auto first = extract_phone_numbers(formatted);
    REQUIRE(first.size() == 1);
    CHECK(first[0].digits == digits);
    auto again = extract_phone_numbers(first[0].digits);
    REQUIRE(again.size() == 1);
    CHECK(again[0].digits == digits);
  }
}

TEST_CASE("dynamic number delivery") {
  auto finding = detect_dynamic_number_delivery({testing::kCallpixelsScript});
  REQUIRE(finding.has_value());
  CHECK(finding->campaign_key == "43019bb72cd5ecc4e3b33902645dd4d6");
  REQUIRE_FALSE(finding->default_numbers.empty());
  CHECK(finding->default_numbers[0].digits == "8772923084");
  CHECK(finding->default_numbers[0].source == PhoneSource::script_default);
  CHECK(finding->framework_marker == "Callpixels.Campaign");

  CHECK_FALSE(detect_dynamic_number_delivery({"var x = 1;"}).has_value());
  CHECK_FALSE(detect_dynamic_number_delivery({"window.retreaver = {};"}).has_value());
  auto keyed = detect_dynamic_number_delivery({"var c = new Retreaver.Campaign({campaign_key: \"abc123\"});"});
  REQUIRE(keyed.has_value());
  CHECK(keyed->campaign_key == "abc123");
  CHECK(keyed->default_numbers.empty());
}

TEST_CASE("score_page: keyword tiers on a scam alert") {
  std::string alert =
      "WINDOWS SECURITY ALERT - your computer is infected with a virus. Call 1-855-555-0100 immediately";
  auto v = score_page(page({alert, alert, alert}), HeuristicConfig::defaults());
  CHECK(v.is_scam);
  auto kw = keywords_of(v);
  for (const char* k : {"virus", "infected", "windows", "security", "alert", "call-near-phone", "immediately"}) {
    CHECK_MESSAGE(has(kw, k), k);
  }
  CHECK(v.score == 3 + 3 + 2 + 2 + 2 + 3 + 1);
  REQUIRE(v.phones.size() == 1);
  CHECK(v.phones[0].digits == "8555550100");
  CHECK(v.phones[0].source == PhoneSource::dialog);
  CHECK(v.domain == "example.com");
  CHECK(v.host == "scam.example.com");
}

TEST_CASE("score_page: gate and benign dialogs") {
  auto quiet = page({}, "<p>Your computer is infected with a virus. Call (855) 555-0100.</p>");
  auto v = score_page(quiet, HeuristicConfig::defaults());
  CHECK_FALSE(v.is_scam);
  CHECK(v.score == 0);
  CHECK(v.phones.empty());

  auto session = score_page(page({"Session expired, please log in"}), HeuristicConfig::defaults());
  CHECK_FALSE(session.is_scam);
  CHECK(session.score < HeuristicConfig::defaults().threshold);

  auto popup = quiet;
  popup.popup_window_count = 1;
  CHECK(score_page(popup, HeuristicConfig::defaults()).is_scam);
}

TEST_CASE("score_page: high score without a number is not a scam") {
  auto v = score_page(page({"Virus and malware and spyware and trojan detected"}), HeuristicConfig::defaults());
  CHECK(v.score >= 12);
  CHECK_FALSE(v.is_scam);
}

TEST_CASE("score_page: keywords match whole words only") {
  auto v = score_page(page({"viruses antivirus supportive"}), HeuristicConfig::defaults());
  CHECK(v.score == 0);
}

TEST_CASE("score_page: dynamic delivery supplies the number") {
  auto r = page({"Trojan and spyware found on your PC"});
  r.scripts.push_back(testing::kCallpixelsScript);
  auto v = score_page(r, HeuristicConfig::defaults());
  CHECK(v.is_scam);
  REQUIRE(v.dynamic_delivery.has_value());
  REQUIRE_FALSE(v.phones.empty());
  CHECK(v.phones[0].source == PhoneSource::script_default);
}

TEST_CASE("score is monotone when a keyword is added to a dialog") {
  std::mt19937_64 rng(21);
  const auto& config = HeuristicConfig::defaults();
  std::vector<std::string> words;
  for (const auto& [k, w] : config.keywords) words.push_back(k);
  for (std::size_t i = 0; i < 500; ++i) {
    auto record = testing::labeled_corpus(i, 1, 1)[rng() % 2].record;
    int before = score_page(record, config).score;
    if (record.dialogs.empty()) record.dialogs.push_back({DialogKind::alert, "", 1});
    record.dialogs.back().message += " " + words[rng() % words.size()];
    CHECK(score_page(record, config).score >= before);
  }
}

TEST_CASE("score_pages is independent of parallelism") {
  std::vector<CrawlRecord> records;
  for (auto& l : testing::labeled_corpus(9, 60, 60)) records.push_back(l.record);
  auto one = score_pages(records, HeuristicConfig::defaults(), 1);
  auto eight = score_pages(records, HeuristicConfig::defaults(), 8);
  CHECK(one == eight);
  CHECK(serialize_verdicts(one) == serialize_verdicts(eight));
}

TEST_CASE("verdicts round-trip through JSON lines") {
  std::vector<CrawlRecord> records;
  for (auto& l : testing::labeled_corpus(4, 20, 20)) records.push_back(l.record);
  auto verdicts = score_pages(records, HeuristicConfig::defaults());
  CHECK(parse_verdicts(serialize_verdicts(verdicts)) == verdicts);
  CHECK_THROWS_AS(parse_verdicts("{\"record_id\": 1}\n"), ParseError);
}

TEST_CASE("heuristic config: defaults, overrides and validation") {
  const auto& d = HeuristicConfig::defaults();
  CHECK(d.threshold == 6);
  CHECK(d.keywords.at("virus") == 3);
  CHECK(d.keywords.at("support") == 1);
  CHECK(d.toll_free_prefixes.size() == 7);
  auto custom = HeuristicConfig::from_json({{"threshold", 20}});
  CHECK(custom.threshold == 20);
  CHECK(custom.keywords == d.keywords);
  CHECK(HeuristicConfig::from_json(d.to_json()).to_json() == d.to_json());
  CHECK_THROWS_AS(HeuristicConfig::from_json({{"threshold", 0}}), InvalidArgument);
  CHECK_THROWS_AS(HeuristicConfig::from_json({{"threshold", "six"}}), ParseError);

  auto strict = HeuristicConfig::from_json({{"threshold", 100}});
  std::string alert = "Windows security alert: virus found. Call 1-855-555-0100";
  CHECK_FALSE(score_page(page({alert}), strict).is_scam);
}

TEST_CASE("page features") {
  std::string padded = "Warning" + std::string(1200, '\n') + std::string(793, 'x');
  auto f = extract_page_features(page({padded}));
  CHECK(f.dialog_count == 1);
  CHECK(f.max_dialog_length == 2000);
  CHECK(f.padded_dialog);
  CHECK_FALSE(extract_page_features(page({std::string(2000, 'x')})).padded_dialog);
  CHECK_FALSE(extract_page_features(page({std::string(100, ' ')})).padded_dialog);

  auto none = extract_page_features(page({}));
  CHECK(none.dialog_count == 0);
  CHECK_FALSE(none.padded_dialog);
  auto audio = page({});
  audio.audio_autoplay = true;
  CHECK(extract_page_features(audio).audio_autoplay);
}

TEST_CASE("domain features") {
  auto scary = extract_domain_features("techsupport-alert-security.example.xyz");
  CHECK(scary.scare_keywords.count("techsupport"));
  CHECK(scary.scare_keywords.count("alert"));
  CHECK(scary.scare_keywords.count("security"));
  CHECK(scary.etld1 == "example.xyz");
  CHECK(scary.length == 38);

  CHECK_FALSE(extract_domain_features("www.example.com").has_random_label);

  auto cdn = extract_domain_features("x9qzkvtrwp.r.cdn77.net");
  CHECK(cdn.cdn_hosted);
  CHECK(cdn.has_random_label);

  // Reference values from Python's math.log2 over character frequencies.
  CHECK(shannon_entropy("x9qzkvtrwp") == doctest::Approx(3.321928094887362).epsilon(1e-12));
  CHECK(shannon_entropy("example") == doctest::Approx(2.5216406363433186).epsilon(1e-12));
  CHECK(shannon_entropy("aaaa") == 0.0);
  CHECK(longest_consonant_run("x9qzkvtrwp") == 8);
  CHECK(longest_consonant_run("rhythm") == 3);  // y counts as a vowel
}

TEST_CASE("generated corpus: every verdict matches its template label") {
  auto corpus = testing::labeled_corpus(2016, 100, 100);
  std::size_t scams = 0;
  for (const auto& l : corpus) {
    auto v = score_page(l.record, HeuristicConfig::defaults());
    CHECK_MESSAGE(v.is_scam == l.scam, l.template_name << " " << l.record.record_id << " score " << v.score);
    scams += v.is_scam;
  }
  CHECK(scams == 100);
}

TEST_CASE("gate holds on fuzzed records without dialogs or popups") {
  std::mt19937_64 rng(99);
  for (std::size_t i = 0; i < 2000; ++i) {
    auto v = score_page(testing::gated_fuzz_record(rng, i), HeuristicConfig::defaults());
    CHECK_FALSE(v.is_scam);
  }
}
