#include <doctest.h>

#include <atomic>
#include <filesystem>

#include "scamwatch/common/csv.hpp"
#include "scamwatch/common/error.hpp"
#include "scamwatch/common/parallel.hpp"
#include "scamwatch/common/text.hpp"
#include "scamwatch/common/time.hpp"

using namespace scamwatch;

TEST_CASE("timestamps round-trip and reject loose formats") {
  auto ts = parse_timestamp("2026-03-01T10:00:05Z");
  CHECK(format_timestamp(ts) == "2026-03-01T10:00:05Z");
  CHECK(format_date(to_date(ts)) == "2026-03-01");
  CHECK_THROWS_AS(parse_timestamp("2026-03-01 10:00:05"), ParseError);
  CHECK_THROWS_AS(parse_timestamp("2026-03-01T10:00:05+01:00"), ParseError);
  CHECK_THROWS_AS(parse_timestamp("2026-02-30T10:00:05Z"), ParseError);
  CHECK_THROWS_AS(parse_date("2026-3-1"), ParseError);
  CHECK(days_between(parse_date("2026-01-10"), parse_date("2026-02-24")) == 45);
  CHECK(days_between(parse_date("2026-02-24"), parse_date("2026-01-10")) == -45);
}

TEST_CASE("whitespace normalisation and case folding") {
  CHECK(normalize_whitespace("  a \n\t b  ") == "a b");
  CHECK(normalize_whitespace("") == "");
  CHECK(ascii_lower("WiNdOwS") == "windows");
  CHECK(trim("\t x \n") == "x");
}

TEST_CASE("utf-8 validation") {
  CHECK(is_valid_utf8("plain"));
  CHECK(is_valid_utf8("caf\xc3\xa9"));
  CHECK_FALSE(is_valid_utf8("\xc3"));
  CHECK_FALSE(is_valid_utf8("\xff\xfe"));
  CHECK(utf8_length("caf\xc3\xa9") == 4);
}

TEST_CASE("visible text drops markup, scripts and comments") {
  std::string html =
      "<html><head><style>p{color:red}</style><script>var call='800';</script></head>"
      "<body><!-- hidden --><p>Call&nbsp;us &amp; <b>now</b></p></body></html>";
  CHECK(normalize_whitespace(visible_text(html)) == "Call us & now");
}

TEST_CASE("list entries skip comments and blanks") {
  auto entries = list_entries("// header\n\n a.com \n// x\nb.net\n");
  CHECK(entries == std::vector<std::string>{"a.com", "b.net"});
}

TEST_CASE("csv parsing keeps quoted commas and line numbers") {
  auto table = parse_csv("domain,email\n\n\"a,b.com\", x@y.com \nc.com,\n");
  CHECK(table.header == std::vector<std::string>{"domain", "email"});
  REQUIRE(table.rows.size() == 2);
  CHECK(table.rows[0].line == 3);
  CHECK(table.rows[0].fields == std::vector<std::string>{"a,b.com", "x@y.com"});
  CHECK(table.rows[1].fields == std::vector<std::string>{"c.com", ""});
}

TEST_CASE("parallel_map preserves index order and rethrows") {
  for (std::size_t workers : {1, 2, 8, 64}) {
    auto out = parallel_map(100, workers, [](std::size_t i) { return i * i; });
    REQUIRE(out.size() == 100);
    for (std::size_t i = 0; i < 100; ++i) CHECK(out[i] == i * i);
  }
  CHECK(parallel_map(0, 4, [](std::size_t i) { return i; }).empty());
  CHECK_THROWS_AS(parallel_map(10, 4,
                               [](std::size_t i) -> int {
                                 if (i == 7) throw InvalidArgument("boom");
                                 return 0;
                               }),
                  InvalidArgument);
}

TEST_CASE("write_file creates parent directories") {
  auto dir = std::filesystem::temp_directory_path() / "scamwatch-common-test";
  std::filesystem::remove_all(dir);
  write_file(dir / "a" / "b.txt", "hello");
  CHECK(read_file(dir / "a" / "b.txt") == "hello");
  CHECK_THROWS_AS(read_file(dir / "missing.txt"), Error);
  std::filesystem::remove_all(dir);
}
