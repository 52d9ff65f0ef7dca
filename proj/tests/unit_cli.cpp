#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

#ifndef ADDCOMB_CLI_PATH
#error "ADDCOMB_CLI_PATH must be defined"
#endif

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string tmp = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR")
                                                      : "/tmp") +
                    "/addcomb_cli_out.txt";
  std::string cmd =
      std::string(ADDCOMB_CLI_PATH) + " " + args + " > " + tmp + " 2>/dev/null";
  int status = std::system(cmd.c_str());
  std::ifstream in(tmp);
  std::stringstream ss;
  ss << in.rdbuf();
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, ss.str()};
}

std::string write_temp(const std::string& name, const std::string& body) {
  std::string path = "/tmp/" + name;
  std::ofstream out(path);
  out << body;
  return path;
}

}  // namespace

TEST_CASE("doubling on the three-block set prints 1194/300 reduced") {
  // Build the set file with exact big integers.
  std::ostringstream body;
  body << "# base-16 block makes the radix header do real work\n";
  body << "base=16\n";
  for (long i = 1; i <= 100; ++i) body << std::hex << i << "\n";
  for (long i = 1; i <= 100; ++i) body << std::hex << 1000 + i << "\n";
  for (long i = 1; i <= 100; ++i) {
    // 2^100 + i in hex: 10000000000000000000000000 + i
    std::ostringstream e;
    e << std::hex << i;
    std::string tail = e.str();
    std::string word(25 - tail.size(), '0');
    body << "1" << word << tail << "\n";
  }
  std::string path = write_temp("cli_a1_hex.txt", body.str());
  auto res = run("doubling --in " + path);
  CHECK(res.exit_code == 0);
  CHECK(res.out == "199/50\n");
}

TEST_CASE("sumset and energy plumbing") {
  std::string a = write_temp("cli_a.txt", "0\n2\n");
  std::string b = write_temp("cli_b.txt", "0\n3\n");
  auto res = run("sumset --in " + a + " --b " + b);
  CHECK(res.exit_code == 0);
  CHECK(res.out == "0\n2\n3\n5\n");

  auto diff = run("sumset --in " + a + " --minus");
  CHECK(diff.out == "-2\n0\n2\n");

  auto en = run("energy --in " + a);
  CHECK(en.out == "6\n");
}

TEST_CASE("cover sharpness fixture exits 1 with witness") {
  std::ostringstream body;
  for (long i = 2; i <= 100; i += 2) body << i << "\n";
  std::string path = write_temp("cli_evens.txt", body.str());
  auto res = run("cover --lemma 5x4 --in " + path + " --no-precheck");
  CHECK(res.exit_code == 1);
  CHECK(res.out.find("witness 1") != std::string::npos);

  auto strict = run("cover --lemma 5x4 --in " + path);
  CHECK(strict.exit_code == 2);
}

TEST_CASE("analyze emits JSON that verify accepts") {
  std::ostringstream body;
  for (long i = 1; i <= 100; ++i) body << i << "\n";
  std::string path = write_temp("cli_interval.txt", body.str());
  auto res = run("analyze --in " + path +
                 " --delta 1/20 --eps 1/10 --min-frac 1/4 --json");
  REQUIRE(res.exit_code == 0);
  auto j = nlohmann::json::parse(res.out);
  CHECK(j.at("schema_version") == 1);
  CHECK(j.at("branch") == "ap_dense");
  CHECK(j.at("density").at("num") == "1");

  std::string report = write_temp("cli_report.json", res.out);
  auto v = run("verify --report " + report + " --in " + path);
  CHECK(v.exit_code == 0);

  // Tampered density must be rejected.
  j["density"]["num"] = "1";
  j["density"]["den"] = "2";
  std::string bad = write_temp("cli_report_bad.json", j.dump());
  auto vbad = run("verify --report " + bad + " --in " + path);
  CHECK(vbad.exit_code == 1);
}

TEST_CASE("bohr extract JSON round-trips through verify") {
  auto res = run("bohr extract --alpha 377/1021 --sigma 1/150 --n 200000 "
                 "--json");
  REQUIRE(res.exit_code == 0);
  auto j = nlohmann::json::parse(res.out);
  CHECK(j.at("cert").at("all_members") == true);
  CHECK(j.at("cert").at("size_ok") == true);
  std::string report = write_temp("cli_bohr.json", res.out);
  auto v = run("verify --report " + report);
  CHECK(v.exit_code == 0);
}

TEST_CASE("byte-identical reports for a fixed seed") {
  std::string flags = "torus kneser --m 32 --d 1 --trials 20 --lambda 0.01 "
                      "--seed 99";
  auto r1 = run(flags);
  auto r2 = run(flags);
  CHECK(r1.exit_code == 0);
  CHECK(r1.out == r2.out);
}

TEST_CASE("sandwich command validates its report") {
  auto res = run("torus sandwich --center 1/2 --halfwidth 1/4 --tau 1/80 "
                 "--m 400");
  CHECK(res.exit_code == 0);
  auto j = nlohmann::json::parse(res.out);
  CHECK(j.at("sandwich_ok") == true);
  CHECK(j.at("gap_ok") == true);
  CHECK(j.at("lipschitz_ok") == true);
}

TEST_CASE("usage and file diagnostics") {
  auto nofile = run("doubling --in /tmp/definitely_missing_9z.txt");
  CHECK(nofile.exit_code == 2);

  std::string garbage = write_temp("cli_garbage.txt", "12\nnot_a_number\n");
  auto bad = run("doubling --in " + garbage);
  CHECK(bad.exit_code == 2);

  auto usage = run("cover --lemma nope --in /tmp/x.txt");
  CHECK(usage.exit_code != 0);
}
