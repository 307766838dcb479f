#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Run {
  int code = 0;
  std::string out, err;
};

Run cli(std::initializer_list<const char*> args) {
  std::vector<const char*> argv{"awstruct"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out, err;
  Run r;
  r.code = awstruct::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("awstruct_test_" + name);
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("Askey-Wilson structure relation over the grid") {
  const Run r = cli({"verify", "--family", "askey-wilson", "--identity", "eq18", "--n-max", "10", "--samples", "20",
                     "--seed", "7", "--no-timestamp"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["run"]["seed"] == 7);
  CHECK(j["run"]["degree_cap"] == 16);
  CHECK(j["run"]["timestamp"].is_null());
  REQUIRE(j["results"].size() == 200);
  for (const auto& res : j["results"]) {
    CHECK(res["status"] == "pass");
    CHECK(res["residual"].is_null());
    CHECK(res["family"] == "askey-wilson");
    CHECK(res["params"]["q"].get<std::string>().find('/') != std::string::npos);
  }
}

TEST_CASE("single fixed point") {
  const Run r = cli({"verify", "--family", "big-q-jacobi", "--identity", "eq41", "--params", "a=1/3,b=1/4,c=1/5,q=1/2",
                     "--no-timestamp"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["results"].size() == 11);
  CHECK(j["results"][0]["params"]["a"] == "1/3");
  CHECK(j["results"][0]["n"] == 0);
}

TEST_CASE("failures exit with 1 and carry residuals") {
  const Run r = cli({"verify", "--family", "cq-ultraspherical", "--identity", "cqu-combination", "--samples", "2",
                     "--n-max", "3", "--no-timestamp"});
  CHECK(r.code == 1);
  const auto j = nlohmann::json::parse(r.out);
  for (const auto& res : j["results"]) {
    CHECK(res["status"] == "fail");
    CHECK(res["residual"]["coeffs"].size() > 0);
  }
}

TEST_CASE("informational results never fail the run") {
  const Run r = cli({"verify", "--family", "askey-wilson", "--identity", "eq73", "--samples", "2", "--n-max", "3"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["run"]["timestamp"].is_string());
  for (const auto& res : j["results"]) CHECK(res["status"] == "info");
}

TEST_CASE("reports are byte-identical without timestamps") {
  const auto a = cli({"verify", "--family", "jacobi,big-q-jacobi", "--identity", "eq28,eq31", "--samples", "3",
                      "--seed", "11", "--no-timestamp", "--threads", "4"});
  const auto b = cli({"verify", "--family", "jacobi,big-q-jacobi", "--identity", "eq28,eq31", "--samples", "3",
                      "--seed", "11", "--no-timestamp", "--threads", "1"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto c = cli({"verify", "--family", "jacobi,big-q-jacobi", "--identity", "eq28,eq31", "--samples", "3",
                      "--seed", "12", "--no-timestamp"});
  CHECK(a.out != c.out);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"verify", "--family", "hermite"}).code == 2);
  CHECK(cli({"verify", "--identity", "eq999"}).code == 2);
  CHECK(cli({"verify", "--samples", "many"}).code == 2);
  CHECK(cli({"verify", "--family", "jacobi", "--params", "alpha=1/0,beta=1"}).code == 2);
  CHECK(cli({"limits", "--which", "sideways"}).code == 2);
  const Run r = cli({"limits", "--alpha", "1"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--which") != std::string::npos);
  CHECK(r.err.find("Usage") != std::string::npos);
}

TEST_CASE("help exits with 0") {
  const Run r = cli({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verify") != std::string::npos);
}

TEST_CASE("limits tables") {
  const Run cq = cli({"limits", "--which", "cqjacobi-to-jacobi", "--alpha", "1", "--beta", "2", "--n", "3"});
  CHECK(cq.code == 0);
  CHECK(cq.out.rfind("step,parameter_value,max_deviation,ratio\n", 0) == 0);
  const Run aw = cli({"limits", "--which", "aw-to-bigq", "--eps-steps", "8"});
  CHECK(aw.code == 0);
  std::istringstream lines(aw.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) ++count;
  CHECK(count == 9);
}

TEST_CASE("config files with command-line overrides") {
  const auto path = temp_file("config.txt");
  {
    std::ofstream f(path);
    f << "family=jacobi\nidentity=eq28,eq64\nsamples=2\nseed=3\nn-max=4\nno-timestamp=true\n";
  }
  const std::string p = path.string();
  const Run base = cli({"verify", "--config", p.c_str()});
  CHECK(base.code == 0);
  const auto j = nlohmann::json::parse(base.out);
  CHECK(j["run"]["seed"] == 3);
  CHECK(j["results"].size() == 2 * 4 + 2 * 5);
  const Run over = cli({"verify", "--config", p.c_str(), "--seed", "9"});
  CHECK(nlohmann::json::parse(over.out)["run"]["seed"] == 9);

  {
    std::ofstream f(path);
    f << "samples=lots\n";
  }
  CHECK(cli({"verify", "--config", p.c_str()}).code == 2);
  CHECK(cli({"verify", "--config", "/nonexistent/awstruct.cfg"}).code == 2);
  std::filesystem::remove(path);
}

TEST_CASE("report and summary files") {
  const auto json = temp_file("report.json");
  const auto csv = temp_file("summary.csv");
  const std::string js = json.string(), cs = csv.string();
  const Run r = cli({"verify", "--family", "jacobi", "--identity", "eq02", "--samples", "2", "--out", js.c_str(),
                     "--summary-csv", cs.c_str()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(json);
  CHECK(nlohmann::json::parse(in)["results"].size() == 20);
  std::ifstream sin(csv);
  std::string header;
  std::getline(sin, header);
  CHECK(header.find("identity_id") != std::string::npos);
  std::filesystem::remove(json);
  std::filesystem::remove(csv);
}

}  // TEST_SUITE
