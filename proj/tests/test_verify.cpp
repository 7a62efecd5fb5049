#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "supercong/cache.hpp"
#include "supercong/errors.hpp"
#include "supercong/verify.hpp"

using namespace supercong;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "supercong_test_verify";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  fs::remove(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& p, const std::string& s) {
  std::ofstream out(p, std::ios::trunc);
  out << s;
}

ErrorCode read_error(const std::string& text) {
  std::istringstream in(text);
  try {
    read_cache(in);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::BadParameters;
}

}  // namespace

TEST_CASE("cache text round trip") {
  const CoefficientTable t = CoefficientTable::compute(30);
  std::ostringstream out;
  write_cache(out, t);
  const std::string text = out.str();
  CHECK(text.starts_with("ETAF1 N=30\n1 1\n2 1\n3 7\n4 -7\n"));
  CHECK(text.ends_with("END 30\n"));
  std::istringstream in(text);
  CHECK(read_cache(in) == t);
  CHECK(first_hecke_violation(CoefficientTable::compute(500)) == 0);
}

TEST_CASE("strict cache parsing") {
  std::ostringstream out;
  write_cache(out, CoefficientTable::compute(60));
  const std::string good = out.str();
  const auto replace = [&](const std::string& from, const std::string& to) {
    std::string s = good;
    s.replace(s.find(from), from.size(), to);
    return s;
  };
  CHECK(read_error(replace("ETAF1", "ETAF2")) == ErrorCode::CacheCorrupt);
  CHECK(read_error(replace("N=60", "N=61")) == ErrorCode::CacheCorrupt);
  CHECK(read_error(replace("END 60", "END 59")) == ErrorCode::CacheCorrupt);
  CHECK(read_error(replace("\n7 6\n", "\n7 5\n")) == ErrorCode::CacheCorrupt);    // value edit
  CHECK(read_error(replace("\n7 6\n", "\n8 6\n")) == ErrorCode::CacheCorrupt);    // index edit
  CHECK(read_error(replace("\n7 6\n", "\n7  6\n")) == ErrorCode::CacheCorrupt);   // spacing
  CHECK(read_error(replace("\n7 6\n", "\n7 +6\n")) == ErrorCode::CacheCorrupt);
  CHECK(read_error(replace("\n12 -49\n", "\n12 -48\n")) == ErrorCode::CacheCorrupt);
  CHECK(read_error(good + "extra\n") == ErrorCode::CacheCorrupt);
  CHECK(read_error(good.substr(0, good.size() / 2)) == ErrorCode::CacheCorrupt);
  CHECK(read_error("") == ErrorCode::CacheCorrupt);
}

TEST_CASE("cache lifecycle") {
  const fs::path path = scratch("c.txt");
  const CacheOutcome cold = load_or_build(path, 40);
  CHECK(cold.event == CacheEvent::Computed);
  CHECK(fs::exists(path));
  const CacheOutcome warm = load_or_build(path, 30);
  CHECK(warm.event == CacheEvent::Loaded);
  CHECK(warm.table.order() == 40);
  CHECK(warm.table(11) == -43);

  const CacheOutcome grown = load_or_build(path, 80);
  CHECK(grown.event == CacheEvent::RebuiltTooSmall);
  CHECK(grown.table.order() == 80);
  CHECK(slurp(path).starts_with("ETAF1 N=80\n"));

  std::string text = slurp(path);
  text.replace(text.find("\n9 22\n"), 6, "\n9 23\n");
  spit(path, text);
  const CacheOutcome healed = load_or_build(path, 80);
  CHECK(healed.event == CacheEvent::RebuiltCorrupt);
  CHECK(healed.table(9) == 22);
  CHECK(load_or_build(path, 80).event == CacheEvent::Loaded);

  CHECK(load_or_build("", 10).event == CacheEvent::Computed);
}

TEST_CASE("config resolution") {
  RunConfig c;
  const RunConfig r = resolve(c, kConjectureMax, 3);
  CHECK(r.pmax == 199);
  CHECK(r.order == 199);
  CHECK(r.precision == 3);
  c.order = 10;
  c.pmax = 20;
  CHECK_THROWS_AS(resolve(c, kConjectureMax, 3), Error);
  c = RunConfig{};
  c.precision = 2;
  CHECK_THROWS_AS(resolve(c, kConjectureMax, 3), Error);
  c = RunConfig{};
  c.pmin = 50;
  c.pmax = 40;
  CHECK_THROWS_AS(resolve(c, kConjectureMax, 3), Error);
  c = RunConfig{};
  c.precision = 40;
  CHECK_THROWS_AS(resolve(c, kConjectureMax, 3), Error);
}

TEST_CASE("conjecture run") {
  RunConfig c;
  c.pmax = 23;
  const auto reports = run_conjecture(c);
  REQUIRE(reports.size() == 9);
  CHECK(reports[0].prime == 2);
  CHECK(reports[0].modulus == 8);
  CHECK(reports[0].lhs == "1");
  CHECK(reports[0].rhs == "1");
  CHECK(reports[2].prime == 5);
  CHECK(reports[2].status == Status::Skip);
  CHECK_FALSE(reports[2].note.empty());
  CHECK(all_passed(reports));
}

TEST_CASE("theorem run") {
  RunConfig c;
  c.pmax = 13;
  const auto reports = run_theorem_equality(c);
  REQUIRE(reports.size() == 5);
  CHECK(reports[0].prime == 3);
  CHECK(reports[0].modulus == 81);
  CHECK(all_passed(reports));
  c.pmin = 97;
  c.pmax = 97;
  const auto last = run_theorem_equality(c);
  REQUIRE(last.size() == 1);
  CHECK(last[0].passed());
}

TEST_CASE("wrong c(p) fails without aborting the batch") {
  RunConfig c;
  c.pmax = 13;
  std::vector<std::int64_t> values = CoefficientTable::compute(13).values();
  values[7] += 1;
  const auto reports = run_conjecture(c, CoefficientTable(values));
  CHECK_FALSE(all_passed(reports));
  int fails = 0;
  for (const auto& r : reports) fails += r.status == Status::Fail;
  CHECK(fails == 1);
}

TEST_CASE("task errors become failing reports in order") {
  std::vector<Task> tasks;
  for (int i = 0; i < 20; ++i) {
    tasks.push_back({"t", static_cast<std::uint64_t>(i), "", [i] {
                       if (i == 7) throw Error(ErrorCode::BadParameters, "boom");
                       VerificationReport r;
                       r.identity = "t";
                       r.prime = static_cast<std::uint64_t>(i);
                       return r;
                     }});
  }
  for (unsigned jobs : {1u, 3u, 8u}) {
    const auto out = run_tasks(tasks, jobs);
    REQUIRE(out.size() == 20);
    for (int i = 0; i < 20; ++i) CHECK(out[static_cast<std::size_t>(i)].prime == static_cast<std::uint64_t>(i));
    CHECK(out[7].status == Status::Fail);
    CHECK(out[7].note.find("boom") != std::string::npos);
  }
}

TEST_CASE("rendering") {
  RunConfig c;
  c.pmax = 7;
  const auto reports = run_conjecture(c);
  const std::string json = render(reports, OutputFormat::Json);
  std::istringstream lines(json);
  std::string line;
  int n = 0;
  while (std::getline(lines, line)) {
    const auto j = nlohmann::json::parse(line);
    CHECK(j.contains("identity"));
    CHECK(j.contains("elapsed_ms"));
    ++n;
  }
  CHECK(n == 4);
  CHECK(render(reports, OutputFormat::Json, false).find("elapsed_ms") == std::string::npos);
  const std::string csv = render(reports, OutputFormat::Csv, false);
  CHECK(csv.starts_with(csv_header() + "\n"));
}

TEST_CASE("parallel runs are deterministic") {
  RunConfig c;
  c.pmax = 97;
  c.jobs = 1;
  const auto a = render(run_conjecture(c), OutputFormat::Json, false);
  c.jobs = 8;
  const auto b = render(run_conjecture(c), OutputFormat::Json, false);
  CHECK(a == b);
}
