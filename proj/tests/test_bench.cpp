#include <doctest.h>

#include <cmath>
#include <sstream>

#include "memotab/bench.hpp"

using namespace memotab;

TEST_SUITE("bench") {

TEST_CASE("loglog_slope recovers a cubic exactly") {
  std::vector<std::pair<int, double>> cells;
  for (int n : {8, 16, 32, 64}) cells.emplace_back(n, 1e-7 * n * n * n);
  auto slope = loglog_slope(cells);
  REQUIRE(slope.has_value());
  CHECK(std::abs(*slope - 3.0) < 1e-9);
}

TEST_CASE("loglog_slope skips unusable cells") {
  CHECK_FALSE(loglog_slope({{0, 0.1}, {0, 0.2}}).has_value());
  CHECK_FALSE(loglog_slope({{4, 0.1}}).has_value());
  CHECK_FALSE(loglog_slope({{4, 0.1}, {4, 0.2}}).has_value());  // degenerate x spread
  auto slope = loglog_slope({{0, 0.5}, {2, 4.0 * 1e-3}, {4, 32.0 * 1e-3}, {8, 256.0 * 1e-3}});
  REQUIRE(slope.has_value());
  CHECK(std::abs(*slope - 3.0) < 1e-9);
}

TEST_CASE("run_bench produces one record per cell") {
  auto records = run_bench({BenchSource::resolve("sm")}, {0, 4}, 1);
  REQUIRE(records.size() == 2);
  CHECK(records[0].grammar == "sm");
  CHECK(records[0].n == 0);
  CHECK(records[0].accepted);
  CHECK(records[0].seconds >= 0.0);
  CHECK(records[1].n == 4);
  CHECK(records[1].accepted);
  // fewer than 3 lengths: no slope reported
  CHECK(bench_slopes(records).empty());
}

TEST_CASE("run_bench validates its arguments") {
  CHECK_THROWS(run_bench({BenchSource::resolve("sm")}, {4}, 0));
  CHECK_THROWS(run_bench({BenchSource::resolve("sm")}, {-1}, 1));
  CHECK_THROWS(BenchSource::resolve("no-such-grammar-or-file"));
}

TEST_CASE("csv output keeps the stable schema") {
  std::ostringstream out;
  write_csv(out, {{"sm", 12, 0.25, true}, {"g.dsl", 0, 0.0, false}});
  std::istringstream in(out.str());
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line == "grammar,n,seconds,accepted");
  REQUIRE(std::getline(in, line));
  CHECK(line == "sm,12,0.250000,true");
  REQUIRE(std::getline(in, line));
  CHECK(line == "g.dsl,0,0.000000,false");
  CHECK_FALSE(std::getline(in, line));
}

}  // TEST_SUITE
