#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "tilt/cli.hpp"

using nlohmann::json;

namespace {

struct RunResult {
  int code;
  std::string out;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = tilt::cli::run(args, out, err);
  return {code, out.str()};
}

json run_json(const std::vector<std::string>& args) {
  const RunResult r = run_cli(args);
  REQUIRE(r.code == 0);
  return json::parse(r.out);
}

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = "/tmp/tiltstab_test_" + name;
  std::ofstream f(path);
  f << content;
  return path;
}

}  // namespace

TEST_CASE("cli: slope") {
  const json j = run_json({"slope", "--v", "1,1,-1,1", "--alpha-sq", "3", "--beta", "0",
                           "--D", "1"});
  CHECK(j["schema"] == 1);
  CHECK(j["command"] == "slope");
  CHECK(j["results"]["nu_hat"] == "-3/2");
  CHECK(j["results"]["mu"] == "3");
  CHECK_FALSE(j["assumptions"].empty());

  // t1 = 0 input: infinite tilt slope, finite computation
  const json inf = run_json({"slope", "--v", "1,0,-1,1", "--alpha-sq", "3"});
  CHECK(inf["results"]["nu_hat"] == "inf");
  CHECK(inf["results"]["mu"] == "0");
}

TEST_CASE("cli: ideal-sheaf example") {
  const json j = run_json({"ideal-sheaf", "--D", "1", "--d", "1", "--ch3-oc", "-1"});
  CHECK(j["results"]["m_sq"] == "6");
  CHECK(j["results"]["stable"] == true);
  CHECK(j["results"]["stability"] == "stable");
  CHECK(j["results"]["bmt_flag"] == true);
}

TEST_CASE("cli: genus route needs the hypersurface declaration") {
  const RunResult missing = run_cli({"ideal-sheaf", "--D", "5", "--d", "5", "--genus", "7"});
  CHECK(missing.code == 2);
  const json j = run_json(
      {"ideal-sheaf", "--D", "5", "--d", "5", "--genus", "7", "--hypersurface"});
  CHECK(j["results"]["m_sq"] == "6");
  CHECK(j["results"]["genus_bound"] == "23/3");
  CHECK(j["inputs"]["ch3_oc"] == "-6");
}

TEST_CASE("cli: p3-family csv") {
  const RunResult r = run_cli({"p3-family", "--n", "3", "--m", "1", "--format", "csv"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "n,m,c2,c3,ch0,ch1,ch2,ch3,nu_zero,bmt_violated");
  int rows = 0;
  std::string first, last;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    if (rows == 0) first = line;
    last = line;
    ++rows;
  }
  CHECK(rows == 52);
  CHECK(first.substr(0, 12) == "3,1,13,-156,");
  CHECK(last.substr(0, 11) == "3,1,13,-54,");

  const RunResult single = run_cli({"p3-family", "--n", "2", "--m", "2", "--format", "csv"});
  REQUIRE(single.code == 0);
  CHECK(single.out == "n,m,c2,c3,ch0,ch1,ch2,ch3,nu_zero,bmt_violated\n"
                      "2,2,4,-12,-3,6,-2,2,true,true\n");
}

TEST_CASE("cli: p3-family discrepancy warning") {
  const json j = run_json({"p3-family", "--n", "2", "--m", "2"});
  CHECK(j["results"]["count"] == 1);
  CHECK(j["results"]["bound_discrepancy"] == true);
  CHECK(j["results"]["displayed_member_c3"].empty());
  REQUIRE_FALSE(j["warnings"].empty());
}

TEST_CASE("cli: wall csv") {
  const RunResult r = run_cli({"wall", "--v", "1,0,0,0", "--w", "1,1,1/2,0", "--beta-range",
                               "0,1", "--count", "5", "--format", "csv"});
  REQUIRE(r.code == 0);
  CHECK(r.out == "beta,alpha_sq\n1/4,9/16\n1/2,3/4\n3/4,9/16\n");
  const json j = run_json({"wall", "--v", "1,0,0,0", "--w", "1,1,1/2,0"});
  CHECK(j["results"]["polynomial"]["A"] == "1");
  CHECK(j["results"]["polynomial"]["beta2"] == "3");
  CHECK(j["results"]["polynomial"]["beta"] == "-3");
  CHECK(j["results"]["polynomial"]["const"] == "0");
}

TEST_CASE("cli: search output and workers flag") {
  const std::vector<std::string> base = {"search",      "--v",        "-1,1,-1/2,1/6",
                                         "--alpha-sq",  "2",          "--rank-bound",
                                         "6",           "--ch2-bound", "6"};
  const json j = run_json(base);
  bool found = false;
  for (const auto& c : j["results"]["candidates"])
    if (c["w"] == json::array({"0", "1", "0", "0"})) {
      found = true;
      CHECK(c["strict"] == true);
      CHECK(c["nu_hat"] == "0");
    }
  CHECK(found);

  auto with_workers = base;
  with_workers.push_back("--workers");
  with_workers.push_back("3");
  CHECK(run_cli(base).out == run_cli(with_workers).out);

  auto with_prune = base;
  with_prune.push_back("--prune");
  CHECK(run_cli(base).out == run_cli(with_prune).out);
}

TEST_CASE("cli: exact-field validation") {
  CHECK(run_cli({"slope", "--v", "1,0,-1,1", "--beta", "0.5"}).code == 2);
  CHECK(run_cli({"slope", "--v", "1,0,-1,1", "--alpha-sq", "1e3"}).code == 2);
  CHECK(run_cli({"slope", "--v", "1,0,-1"}).code == 2);
  const RunResult bad = run_cli({"slope", "--v", "1,0,-1,0.25"});
  CHECK(bad.code == 2);
  const json err = json::parse(bad.out);
  CHECK(err.contains("error"));
  CHECK(err["error"]["code"] == "invalid_argument");
}

TEST_CASE("cli: errors carry field names and machine-readable objects") {
  const RunResult missing = run_cli({"p3-family", "--m", "1"});
  CHECK(missing.code == 2);
  const json err = json::parse(missing.out);
  CHECK(err["error"]["field"] == "n");

  const RunResult parity = run_cli({"p3-family", "--n", "1", "--m", "2"});
  CHECK(parity.code == 2);
  CHECK(json::parse(parity.out)["error"]["code"] == "domain_error");

  CHECK(run_cli({"no-such-command"}).code == 2);
  CHECK(run_cli({"slope", "--v", "1,0,0,0", "--bogus", "1"}).code == 2);
  CHECK(run_cli({"slope", "--v", "1,1,0,0", "--format", "csv"}).code == 2);
  CHECK(run_cli({}).code == 0);  // usage text
}

TEST_CASE("cli: exit code stays 0 for negative mathematical verdicts") {
  // a BMT violation is a result, not an error
  const json j = run_json({"bmt", "--v", "-3,6,-2,2", "--alpha-sq", "4"});
  CHECK(j["results"]["satisfied"] == false);
  CHECK(j["results"]["margin"] == "-2/3");
}

TEST_CASE("cli: jobfile equivalence and flag override") {
  const std::string path = write_temp("job1", "# family run\n"
                                              "command = p3-family\n"
                                              "n = 2\n"
                                              "m = 2\n"
                                              "format = json\n");
  const RunResult from_file = run_cli({"--jobfile", path});
  const RunResult from_flags = run_cli({"p3-family", "--n", "2", "--m", "2", "--format", "json"});
  REQUIRE(from_file.code == 0);
  CHECK(from_file.out == from_flags.out);

  // flags override the jobfile
  const RunResult overridden = run_cli({"p3-family", "--jobfile", path, "--n", "4"});
  REQUIRE(overridden.code == 0);
  CHECK(json::parse(overridden.out)["results"]["c2"] == (3 * 16 - 4) / 2);

  const std::string bad = write_temp("job2", "command = p3-family\nn 2\n");
  const RunResult broken = run_cli({"--jobfile", bad});
  CHECK(broken.code == 2);
  CHECK(json::parse(broken.out)["error"]["field"] == "jobfile");

  // exactness rule applies to jobfile values too
  const std::string floaty =
      write_temp("job3", "command = slope\nv = 1,0,0,0\nbeta = 0.25\n");
  const RunResult rejected = run_cli({"--jobfile", floaty});
  CHECK(rejected.code == 2);
  CHECK(json::parse(rejected.out)["error"]["field"] == "beta");

  // missing required field in a jobfile names the field
  const std::string partial = write_temp("job4", "command = p3-family\nm = 1\n");
  const RunResult incomplete = run_cli({"--jobfile", partial});
  CHECK(incomplete.code == 2);
  CHECK(json::parse(incomplete.out)["error"]["field"] == "n");

  for (const auto& f : {path, bad, floaty, partial}) std::remove(f.c_str());
}

TEST_CASE("cli: canonical JSON round-trip on random reports") {
  std::mt19937 rng(89);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 6), cmd(0, 2);
  for (int i = 0; i < 100; ++i) {
    auto rat = [&] {
      return std::to_string(num(rng)) + "/" + std::to_string(den(rng));
    };
    const std::string v =
        rat() + "," + rat() + "," + rat() + "," + rat();
    std::vector<std::string> args;
    switch (cmd(rng)) {
      case 0: args = {"slope", "--v", v, "--alpha-sq", "7/2", "--beta", rat()}; break;
      case 1: args = {"discriminant", "--v", v, "--beta", rat()}; break;
      default: args = {"charge", "--v", v, "--alpha-sq", "5/3"}; break;
    }
    const RunResult r = run_cli(args);
    if (r.code != 0) continue;  // zero vectors are domain errors; skip those draws
    const json parsed = json::parse(r.out);
    CHECK(parsed.dump(2) + "\n" == r.out);
  }
}

TEST_CASE("cli: text format is emitted") {
  const RunResult r = run_cli({"line-bundle", "--k", "-1", "--format", "text"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("m_sq_nu_zero: 3") != std::string::npos);
}
