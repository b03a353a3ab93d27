#include <doctest.h>

#include <cstdlib>
#include <filesystem>

#include <unistd.h>

#include "franel/document.hpp"
#include "helpers.hpp"

using namespace franel;
namespace fs = std::filesystem;

namespace {

OperatorDocument random_document() {
  OperatorDocument d;
  d.s = static_cast<int>(testutil::uniform(1, 9));
  std::vector<UPoly> c;
  const int order = static_cast<int>(testutil::uniform(0, 4));
  for (int i = 0; i <= order; ++i) c.push_back(testutil::random_upoly(4, 1000000));
  while (c.back().is_zero()) c.back() = testutil::random_upoly(4, 1000000);
  d.op = RecurrenceOperator(std::move(c));
  d.certificate = Certificate{RatFunc(testutil::random_bipoly(5, 99999, 6), testutil::random_nonzero_bipoly(4, 999, 4))};
  d.provenance = {"1.0.0", "2024-06-11T00:00:00Z", static_cast<int>(testutil::uniform(1, 8))};
  return d;
}

OperatorDocument s3_document() {
  OperatorDocument d;
  d.s = 3;
  const TelescopeResult r = zeilberger(binom_power_term(3), 3);
  d.op = r.op;
  d.certificate = r.certificate;
  d.provenance = {"1.0.0", "1970-01-01T00:00:00Z", 3};
  return d;
}

fs::path scratch_dir(const char* tag) {
  static int counter = 0;
  const fs::path p = fs::temp_directory_path() /
                     ("franel-doc-" + std::string(tag) + "-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

void replace_once(std::string& s, const std::string& from, const std::string& to) {
  const auto pos = s.find(from);
  REQUIRE(pos != std::string::npos);
  s.replace(pos, from.size(), to);
}

}  // namespace

TEST_CASE("document: random round trips") {
  for (int trial = 0; trial < 100; ++trial) {
    const OperatorDocument d = random_document();
    const std::string text = serialize(d);
    CHECK(text.back() == '\n');
    const OperatorDocument back = parse_document(text);
    CHECK(back == d);
    CHECK(serialize(back) == text);
  }
}

TEST_CASE("document: key order and integer encoding") {
  const std::string text = serialize(s3_document());
  const auto pos = [&](const char* key) { return text.find(std::string("\"") + key + "\""); };
  CHECK(pos("schema_version") < pos("s"));
  CHECK(pos("order") < pos("coeffs"));
  CHECK(pos("coeffs") < pos("certificate"));
  CHECK(pos("certificate") < pos("provenance"));
  CHECK(text.find("\"-8\"") != std::string::npos);
}

TEST_CASE("document: malformed input is rejected") {
  const std::string good = serialize(s3_document());
  CHECK_THROWS_AS(parse_document(good.substr(0, good.size() / 2)), DocumentError);
  CHECK_THROWS_AS(parse_document("[]"), DocumentError);
  CHECK_THROWS_AS(parse_document(""), DocumentError);

  std::string bad = good;
  replace_once(bad, "\"schema_version\": 1", "\"schema_version\": 2");
  CHECK_THROWS_AS(parse_document(bad), DocumentError);

  bad = good;
  replace_once(bad, "\"-8\"", "\"-8.5\"");
  CHECK_THROWS_AS(parse_document(bad), DocumentError);

  bad = good;
  replace_once(bad, "\"-8\"", "-8");
  CHECK_THROWS_AS(parse_document(bad), DocumentError);

  bad = good;
  replace_once(bad, "\"order\": 2", "\"order\": 3");
  CHECK_THROWS_AS(parse_document(bad), DocumentError);

  bad = good;
  replace_once(bad, "\"provenance\"", "\"provenance_\"");
  CHECK_THROWS_AS(parse_document(bad), DocumentError);

  bad = good;
  replace_once(bad, "\"s\": 3", "\"s\": 0");
  CHECK_THROWS_AS(parse_document(bad), DocumentError);
}

TEST_CASE("document: a perturbed coefficient parses but fails verification") {
  const OperatorDocument d = s3_document();
  CHECK(verify_certificate(binom_power_term(3), d.op, d.certificate));
  std::string text = serialize(d);
  replace_once(text, "\"-8\"", "\"-9\"");
  const OperatorDocument p = parse_document(text);
  CHECK_FALSE(verify_certificate(binom_power_term(3), p.op, p.certificate));
}

TEST_CASE("document: cache file names") {
  const std::string a = cache_file_name(3, 4);
  CHECK(a.find("s3") != std::string::npos);
  CHECK(a.find(tool_version()) != std::string::npos);
  CHECK(a.find(kNormalizationTag) != std::string::npos);
  CHECK(a != cache_file_name(3, 5));
  CHECK(a != cache_file_name(4, 4));
}

TEST_CASE("document: cache directory precedence") {
  ::setenv("FRANEL_CACHE_DIR", "/tmp/a", 1);
  ::setenv("XDG_CACHE_HOME", "/tmp/b", 1);
  CHECK(default_cache_dir() == fs::path("/tmp/a"));
  ::unsetenv("FRANEL_CACHE_DIR");
  CHECK(default_cache_dir() == fs::path("/tmp/b/franel"));
  ::unsetenv("XDG_CACHE_HOME");
  ::setenv("HOME", "/tmp/c", 1);
  CHECK(default_cache_dir() == fs::path("/tmp/c/.cache/franel"));
}

TEST_CASE("document: atomic write and read back") {
  const fs::path dir = scratch_dir("write");
  const fs::path f = dir / "sub" / "x.json";
  write_file_atomic(f, "first\n");
  write_file_atomic(f, "second\n");
  CHECK(read_file(f) == std::optional<std::string>("second\n"));
  std::size_t entries = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir / "sub")) ++entries;
  CHECK(entries == 1);
  CHECK_FALSE(read_file(dir / "missing.json").has_value());
  fs::remove_all(dir);
}

TEST_CASE("document: timestamp honors SOURCE_DATE_EPOCH") {
  ::setenv("SOURCE_DATE_EPOCH", "0", 1);
  CHECK(current_timestamp() == "1970-01-01T00:00:00Z");
  ::setenv("SOURCE_DATE_EPOCH", "1718064000", 1);
  CHECK(current_timestamp() == "2024-06-11T00:00:00Z");
  ::unsetenv("SOURCE_DATE_EPOCH");
  CHECK(current_timestamp().size() == 20);
}
