#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Run {
  int rc = -1;
  std::string out;
  std::string err;
};

fs::path scratch() {
  static const fs::path dir = [] {
    const fs::path p = fs::temp_directory_path() / ("franel-cli-" + std::to_string(::getpid()));
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Run run(const std::string& args, const std::string& env = "") {
  const fs::path err_file = scratch() / "stderr.txt";
  const std::string cmd = env + " '" + std::string(FRANEL_CLI_PATH) + "' " + args + " 2>'" + err_file.string() + "'";
  Run r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = ::pclose(pipe);
  r.rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = slurp(err_file);
  return r;
}

std::string cache_flag(const char* name) { return "--cache-dir '" + (scratch() / name).string() + "' "; }

}  // namespace

TEST_CASE("cli: compute") {
  Run r = run("compute --s 3 --n-max 4 --J 1 --format json");
  REQUIRE(r.rc == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["rows"][4]["A"][0] == "346");
  r = run("compute --s 3 --n-max 1 --J 1");
  CHECK(r.rc == 0);
  CHECK(r.out.find("12") != std::string::npos);
  CHECK(run("compute --s 0 --n-max 4").rc == 2);
  CHECK(run("compute --s 3").rc == 2);
  CHECK(run("compute --s 3 --n-max 2 --format xml").rc == 2);
  CHECK(run("frobnicate").rc == 2);
  CHECK(run("").rc == 2);
  CHECK(run("--help").rc == 0);
}

TEST_CASE("cli: compute writes --out") {
  const fs::path out = scratch() / "table.json";
  REQUIRE(run("--json --out '" + out.string() + "' compute --s 2 --n-max 3").rc == 0);
  CHECK(nlohmann::json::parse(slurp(out))["rows"][3]["A"][0] == "20");
}

TEST_CASE("cli: telescope orders and failure") {
  Run r = run(cache_flag("t1") + "telescope --s 3 --r-max 3");
  REQUIRE(r.rc == 0);
  CHECK(nlohmann::json::parse(r.out)["order"] == 2);
  r = run(cache_flag("t1") + "telescope --s 6 --r-max 4");
  REQUIRE(r.rc == 0);
  CHECK(nlohmann::json::parse(r.out)["order"] == 3);
  r = run(cache_flag("t1") + "telescope --s 3 --r-max 1");
  CHECK(r.rc == 3);
  CHECK(r.err.find("unsolvable") != std::string::npos);
  CHECK(run(cache_flag("t1") + "telescope --s 0").rc == 2);
  CHECK(run(cache_flag("t1") + "telescope --s 3 --r-max 0").rc == 2);
}

TEST_CASE("cli: verify") {
  const fs::path doc = scratch() / "s4.json";
  REQUIRE(run(cache_flag("v") + "--out '" + doc.string() + "' telescope --s 4").rc == 0);
  CHECK(run("verify --in '" + doc.string() + "'").rc == 0);

  // Perturb the first numerator coefficient by +1.
  auto j = nlohmann::ordered_json::parse(slurp(doc));
  auto& coef = j["certificate"]["num"][0]["coef"];
  const long long bumped = std::stoll(coef.get<std::string>()) + 1;
  coef = std::to_string(bumped == 0 ? 2 : bumped);
  const fs::path bad = scratch() / "s4-bad.json";
  std::ofstream(bad) << j.dump(2) << "\n";
  const Run r = run("verify --in '" + bad.string() + "'");
  CHECK(r.rc == 1);
  CHECK(r.out.find("residual") != std::string::npos);

  const std::string text = slurp(doc);
  const fs::path cut = scratch() / "s4-cut.json";
  std::ofstream(cut) << text.substr(0, text.size() / 2);
  CHECK(run("verify --in '" + cut.string() + "'").rc == 2);
  CHECK(run("verify --in '" + (scratch() / "absent.json").string() + "'").rc == 2);
}

TEST_CASE("cli: cache is byte-identical and survives corruption") {
  const std::string env = "SOURCE_DATE_EPOCH=1718064000";
  const Run fresh = run(cache_flag("c") + "telescope --s 5 --no-cache", env);
  const Run first = run(cache_flag("c") + "telescope --s 5", env);
  const Run hit = run(cache_flag("c") + "telescope --s 5", env);
  REQUIRE(fresh.rc == 0);
  REQUIRE(first.rc == 0);
  REQUIRE(hit.rc == 0);
  CHECK(hit.err.find("cache hit") != std::string::npos);
  CHECK(fresh.out == first.out);
  CHECK(hit.out == first.out);

  fs::path entry;
  for (const auto& e : fs::directory_iterator(scratch() / "c")) entry = e.path();
  REQUIRE_FALSE(entry.empty());
  std::ofstream(entry) << "{ not json";
  const Run again = run(cache_flag("c") + "telescope --s 5", env);
  CHECK(again.rc == 0);
  CHECK(again.err.find("warning") != std::string::npos);
  CHECK(again.out == first.out);
  CHECK(slurp(entry) == first.out);
}

TEST_CASE("cli: limits, asym, demo-apery") {
  Run r = run("--json limits --s 3 --n-max 300 --J 1");
  REQUIRE(r.rc == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(std::stod(j["reports"][1]["abs_error"].get<std::string>()) < 1e-8);
  CHECK(run("--precision-bits 16 limits --s 3 --n-max 300 --J 1").rc == 2);
  CHECK(run("limits --s 3 --n-max 300 --J 2").rc == 2);

  r = run("--json asym --s 1 --n 100");
  REQUIRE(r.rc == 0);
  CHECK(nlohmann::json::parse(r.out)["exact"] == true);
  r = run("--json asym --s 2 --n 1000");
  REQUIRE(r.rc == 0);
  CHECK(nlohmann::json::parse(r.out)["abs_deviation"].get<double>() < 1e-3);
  CHECK(run("asym --s 2 --n 0").rc == 2);
  CHECK(run("asym --s 2 --n x").rc == 2);

  r = run("--json demo-apery --n-max 20");
  REQUIRE(r.rc == 0);
  const auto d = nlohmann::json::parse(r.out);
  CHECK(d["rows"][1]["A"] == "5");
  CHECK(d["rows"][1]["B"] == "1");
  CHECK(d["rows"][2]["A"] == "73");
  CHECK(d["agreement_digits"].get<double>() >= 30.0);
  CHECK(run("demo-apery --n-max 0").rc == 2);
}
