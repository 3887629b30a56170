#include <doctest.h>

#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "burau/fox.hpp"
#include "burau/serialize.hpp"
#include "cli.hpp"

using namespace burau;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> r;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) r.push_back(l);
  return r;
}

}  // namespace

TEST_CASE("matrix command") {
  auto r = invoke({"matrix", "-n", "2", "1"});
  CHECK(r.code == cli::kSuccess);
  CHECK(r.out == "braid: 1 on 2 strands, exponent sum 1, permutation (2 1)\n[-t + 1, t]\n[1, 0]\n");
  r = invoke({"matrix", "-n", "2", ""});
  CHECK(r.code == cli::kSuccess);
  CHECK(r.out.find("[1, 0]\n[0, 1]\n") != std::string::npos);
  r = invoke({"matrix", "-n", "3", "--", "1 -2"});
  CHECK(r.code == cli::kSuccess);
  CHECK(r.out.find("[0, t^-1, 1 - t^-1]") != std::string::npos);
}

TEST_CASE("charpoly and alexander commands") {
  auto r = invoke({"charpoly", "-n", "3", "--", "1 -2"});
  CHECK(lines(r.out).back() == "X^3 + (t - 2 + t^-1)*X^2 + (-t + 2 - t^-1)*X - 1");
  r = invoke({"charpoly", "-n", "4", "--reduced", ""});
  CHECK(lines(r.out).back() == "X^3 - 3*X^2 + 3*X - 1");
  r = invoke({"alexander", "-n", "2", "1"});
  CHECK(lines(r.out).back() == "-t - x");
}

TEST_CASE("exit codes") {
  CHECK(invoke({"matrix", "-n", "3", "1 x"}).code == cli::kUsageError);
  CHECK(invoke({"matrix", "-n", "3", "3"}).code == cli::kUsageError);
  CHECK(invoke({"matrix", "-n", "1", "1"}).code == cli::kUsageError);
  CHECK(invoke({"matrix", "3"}).code == cli::kUsageError);
  CHECK(invoke({"frobnicate", "-n", "3", "1"}).code == cli::kUsageError);
  CHECK(invoke({"sweep", "-n", "3", "1", "--grid", "4"}).code == cli::kUsageError);
  CHECK(invoke({"matrix", "-n", "3", "1", "--format", "csv"}).code == cli::kUsageError);
  CHECK(invoke({"charpoly", "-n", "14", "1"}).code == cli::kUsageError);
  const auto bad = invoke({"matrix", "-n", "3", "1 x"});
  CHECK_FALSE(bad.err.empty());
  CHECK(bad.out.empty());
}

TEST_CASE("JSON matrix output round-trips") {
  const auto r = invoke({"matrix", "-n", "4", "--format", "json", "--", "1 -2 -3"});
  REQUIRE(r.code == cli::kSuccess);
  const auto j = json::parse(r.out);
  CHECK(j.at("command") == "matrix");
  CHECK(j.at("strands") == 4);
  CHECK(j.at("exponent_sum") == -1);
  const auto m = burau_from_json(j.at("results").at("matrix"));
  CHECK(m == burau_matrix(BraidWord(4, {1, -2, -3})));
  CHECK(to_json(m).dump() == j.at("results").at("matrix").dump());
}

TEST_CASE("sweep CSV") {
  auto r = invoke({"sweep", "-n", "3", "--", "1 -2"});
  REQUIRE(r.code == cli::kSuccess);
  auto rows = lines(r.out);
  REQUIRE(rows.size() == 1025);
  CHECK(rows[0] == "theta,re_t,im_t,spectral_radius");
  CHECK(rows[513].rfind("3.14159265359,-1,", 0) == 0);
  CHECK(rows[513].substr(rows[513].rfind(',') + 1) == "2.61803398875");
  r = invoke({"sweep", "-n", "3", "", "--grid", "8"});
  rows = lines(r.out);
  REQUIRE(rows.size() == 9);
  for (std::size_t k = 1; k < rows.size(); ++k) CHECK(rows[k].substr(rows[k].rfind(',') + 1) == "1");
}

TEST_CASE("entropy bound and growth reports") {
  auto r = invoke({"entropy-bound", "-n", "3", "--format", "json", "--", "1 -2"});
  REQUIRE(r.code == cli::kSuccess);
  auto j = json::parse(r.out);
  CHECK(j.at("results").at("entropy_bound").at("bound").get<double>() == doctest::Approx(0.962423650119).epsilon(1e-10));
  r = invoke({"entropy-bound", "-n", "3", ""});
  CHECK(r.out.find("entropy lower bound: 0\n") != std::string::npos);
  r = invoke({"growth", "-n", "3", "--iters", "2", "--format", "json", "--", "1 -2"});
  REQUIRE(r.code == cli::kSuccess);
  j = json::parse(r.out);
  CHECK(j.at("results").at("growth").at("exact_growth_rate").get<double>() == doctest::Approx(2.6180339887).epsilon(1e-10));
}

TEST_CASE("verify command") {
  auto r = invoke({"verify", "-n", "4", "--grid", "256", "--", "1 -2 -3"});
  CHECK(r.code == cli::kSuccess);
  r = invoke({"verify", "-n", "4", "--grid", "256", "--lambda-poly", "1 -2 0 -2 1", "--", "1 -2 -3"});
  CHECK(r.code == cli::kSuccess);
  r = invoke({"verify", "-n", "3", "--grid", "256", "--lambda", "2.6180339887498949", "--", "1 -2"});
  CHECK(r.code == cli::kCheckFailed);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"entropy-bound", "-n", "4", "--format", "json", "--", "1 -2 -3"};
  CHECK(invoke(args).out == invoke(args).out);
  const std::vector<std::string> sweep{"sweep", "-n", "5", "--grid", "128", "s4 s3 s2 s1 s4 s3"};
  CHECK(invoke(sweep).out == invoke(sweep).out);
}
