#include "sympair/parallel.hpp"
#include "sympair/report.hpp"

#include <doctest.h>

#include <cstdlib>
#include <set>
#include <stdexcept>

using namespace sympair;

namespace {

struct ThreadsEnv {
  explicit ThreadsEnv(const char* n) { setenv("SYMPAIR_THREADS", n, 1); }
  ~ThreadsEnv() { unsetenv("SYMPAIR_THREADS"); }
};

}  // namespace

TEST_CASE("report text and exit codes") {
  Report r("demo");
  r.set_result("volume", "4");
  r.add("first", "A1", true, "fine").table.push_back("k | value");
  CHECK(r.ok());
  CHECK(r.exit_code() == 0);
  r.note("probe", "m = 3", "counterexample recorded");
  CHECK(r.ok());
  r.add("second", "A2", false, "broken");
  CHECK_FALSE(r.ok());
  CHECK(r.exit_code() == 2);
  const std::string t = r.text();
  CHECK(t.rfind("sympair demo\nvolume: 4\n", 0) == 0);
  CHECK(t.find("[PASS] first | A1 | fine\n    k | value\n") != std::string::npos);
  CHECK(t.find("[FAIL] second | A2 | broken\n") != std::string::npos);
  CHECK(t.find("summary: 3 checks, 1 failed, 1 notes -> FAIL") != std::string::npos);
  const auto j = nlohmann::json::parse(r.json());
  CHECK(j["command"] == "demo");
  CHECK(j["ok"] == false);
  CHECK(j["results"]["volume"] == "4");
  CHECK(j["checks"].size() == 3);
  CHECK(r.render("json") == r.json());
  CHECK(r.render("text") == r.text());
  CHECK_THROWS(r.render("yaml"));
}

TEST_CASE("rationals are serialized exactly") {
  CHECK(to_json(Rational(7, 3)) == "7/3");
  CHECK(to_json(RatVector{Rational(1), Rational(-1, 2)}).dump() == R"(["1","-1/2"])");
}

TEST_CASE("derived seeds") {
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 1000; ++i) seen.insert(derived_seed(7, i));
  CHECK(seen.size() == 1000);
  CHECK(derived_seed(7, 3) == derived_seed(7, 3));
  CHECK(derived_seed(7, 3) != derived_seed(8, 3));
}

TEST_CASE("parallel_map is independent of the thread count") {
  const auto f = [](std::size_t i) { return derived_seed(1, i) % 1000; };
  std::vector<std::uint64_t> serial, threaded;
  {
    ThreadsEnv env("1");
    serial = parallel_map(200, f);
  }
  {
    ThreadsEnv env("4");
    CHECK(worker_count() == 4);
    threaded = parallel_map(200, f);
  }
  CHECK(serial == threaded);
  for (std::size_t i = 0; i < 200; ++i) CHECK(serial[i] == f(i));
}

TEST_CASE("parallel_map rethrows the lowest failing index") {
  ThreadsEnv env("3");
  const auto f = [](std::size_t i) -> int {
    if (i == 17 || i == 40) throw std::runtime_error("index " + std::to_string(i));
    return 0;
  };
  try {
    parallel_map(64, f);
    FAIL("no exception");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()) == "index 17");
  }
}

TEST_CASE("reports are reproducible") {
  OrthoOptions o;
  o.fan = builtin_fan("A2");
  o.samples = 40;
  o.seed = 9;
  CHECK(ortho_check_report(o).json() == ortho_check_report(o).json());
  o.sets = 4;
  const auto v = ortho_volume_report(o);
  CHECK(v.ok());
  {
    ThreadsEnv env("2");
    CHECK(ortho_volume_report(o).text() == v.text());
  }
}

TEST_CASE("report builders") {
  CHECK(verify_prasad_report(4).ok());
  const auto u4 = verify_prasad_report(builtin_preset("U", 4));
  CHECK(u4.ok());
  CHECK(u4.text().find("8 compositions") != std::string::npos);
  CHECK(list_levis_report(builtin_preset("GL", 4)).text().find("rows: 2") != std::string::npos);
  const auto h = h1_report(LatticeWithAction::norm_one_torus(), "norm one");
  CHECK(h.text().find("h1: Z/2") != std::string::npos);
  CHECK_THROWS_AS(fibers_report(LatticeWithAction::norm_one_torus(), 3, "norm one"), std::invalid_argument);
  CHECK(levi_label(*builtin_fan("A2"), 0) == "A2 levi 0 {} dim 2");
  CHECK_THROWS(validate_report(nlohmann::json::parse(R"({"nothing": 1})"), "x"));
  CHECK_THROWS(validate_report(nlohmann::json::parse("[1, 2]"), "x"));
  CHECK(validate_report(nlohmann::json::parse(R"({"system":"A1","points":[[3],[-1]]})"), "seg").ok());
}
