#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#include "bitten/instance.hpp"

#ifndef BITTEN_CLI_PATH
#define BITTEN_CLI_PATH "./bitten"
#endif

using namespace bitten;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  RunResult r;
  std::string cmd = std::string(BITTEN_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_example_file() {
  std::string path = "/tmp/bitten_cli_test_instance.json";
  std::ofstream out(path);
  out << example_instance().to_json_text();
  return path;
}

}  // namespace

TEST_CASE("laws command exit codes follow the contract") {
  std::string file = write_example_file();
  CHECK(run_cli("laws --file " + file + " --pack quotient-theorem").exit_code == 0);
  CHECK(run_cli("laws --file " + file + " --pack heyting").exit_code == 0);
  CHECK(run_cli("laws --file " + file + " --pack bitten-properties").exit_code == 0);
  // the as-printed variant trips over its two typo laws
  CHECK(run_cli("laws --file " + file + " --pack concrete --variant as-printed").exit_code == 1);
  CHECK(run_cli("laws --file /tmp/definitely_missing.json --pack heyting").exit_code == 2);
  CHECK(run_cli("approx --file " + file + " --set {zz}").exit_code == 2);
}

TEST_CASE("JSON reports round-trip") {
  std::string file = write_example_file();
  auto r = run_cli("laws --file " + file + " --pack quotient-theorem --json");
  CHECK(r.exit_code == 0);
  auto parsed = nlohmann::ordered_json::parse(r.out);
  CHECK(parsed.at("report_version").get<int>() == 1);
  CHECK(parsed.at("status").get<std::string>() == "pass");
  CHECK(parsed.dump(2) + "\n" == r.out);
}

TEST_CASE("example output is stable across runs") {
  auto a = run_cli("example");
  auto b = run_cli("example");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("A16") != std::string::npos);
  CHECK(a.out.find("digraph quotient") != std::string::npos);
}

TEST_CASE("pack emission is machine readable") {
  auto r = run_cli("packs --pack abstract --variant corrected");
  CHECK(r.exit_code == 0);
  auto parsed = nlohmann::ordered_json::parse(r.out);
  CHECK(parsed.at("laws").size() == 30);
  auto r2 = run_cli("packs --pack concrete --variant as-printed");
  auto parsed2 = nlohmann::ordered_json::parse(r2.out);
  CHECK(parsed2.at("laws").size() == 32);
}

TEST_CASE("random instances honour seed and BITTEN_SEED") {
  auto a = run_cli("random --size 4 --density 0.5 --seed 7");
  auto b = run_cli("random --size 4 --density 0.5 --seed 7");
  CHECK(a.out == b.out);
  CHECK(InstanceDocument::from_json_text(a.out).universe.size() == 4);
}
