#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("affhecke_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

Run cli(const std::string& args) {
  const fs::path out = scratch() / "out.txt", err = scratch() / "err.txt";
  const std::string cmd = std::string("\"") + AFFHECKE_CLI + "\" " + args + " >" + out.string() + " 2>" + err.string();
  const int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

}  // namespace

TEST_CASE("kl subcommand") {
  CHECK(cli("kl --n 4 --y \"[1,2,3,4]\" --w \"[3,4,1,2]\"").out == "1+q\n");
  CHECK(cli("kl --n 2 --y om --w s1").out == "0\n");
  CHECK(cli("kl --n 3 --y e --w s1.s2.s1").out == "1\n");
  const Run bad = cli("kl --n 3 --y e --w s7");
  CHECK(bad.code == 2);
  CHECK(bad.err.find("cannot parse --w") != std::string::npos);
  CHECK(cli("kl --n 3 --y e").code == 2);
  CHECK(cli("kl --n 1 --y e --w e").code == 2);
  CHECK(cli("frobnicate").code == 2);
  CHECK(cli("--help").code == 0);
}

TEST_CASE("verify subcommand") {
  const Run ok = cli("verify orbits --n 4");
  CHECK(ok.code == 0);
  CHECK(ok.out.find("pass") != std::string::npos);

  const Run js = cli("verify cells --n 3 --json");
  CHECK(js.code == 0);
  const auto j = nlohmann::json::parse(js.out);
  CHECK(j["schema"] == "affhecke-report/1");
  CHECK(j["suite"] == "cells");
  for (const auto& c : j["checks"]) CHECK(c["status"] != "fail");
  CHECK(cli("verify cells --n 3 --json --serial").out == js.out);

  CHECK(cli("verify remark-b --n 3").code == 2);
  CHECK(cli("verify key1 --n 2 --max-len 40").code == 2);
  CHECK(cli("verify no-such-suite").code == 2);
  CHECK(cli("verify bernstein --n 2 --range 9").code == 2);
}

TEST_CASE("table subcommand") {
  const std::string path = (scratch() / "t.klv").string();
  REQUIRE(cli("table build --n 3 --max-len 3 --table " + path).code == 0);
  const std::string first = slurp(path);
  CHECK(first.rfind("klv1 n=3\n", 0) == 0);

  const Run load = cli("table load --n 3 --table " + path);
  CHECK(load.code == 0);
  CHECK(load.out.find("max length 3") != std::string::npos);

  REQUIRE(cli("table extend --n 3 --max-len 5 --table " + path).code == 0);
  const std::string second = slurp(path);
  CHECK(second.size() > first.size());
  CHECK(second.compare(0, first.size(), first) == 0);
  CHECK(cli("table load --n 3 --table " + path).out.find("max length 5") != std::string::npos);

  const std::string fresh = (scratch() / "u.klv").string();
  REQUIRE(cli("table build --n 3 --max-len 5 --table " + fresh).code == 0);
  CHECK(cli("kl --n 3 --table " + path + " --y e --w s1.s2.s0.s1.s2").out ==
        cli("kl --n 3 --table " + fresh + " --y e --w s1.s2.s0.s1.s2").out);
  CHECK(cli("verify key1 --n 3 --max-len 4 --table " + path).code == 0);

  const Run wrong = cli("table load --n 4 --table " + path);
  CHECK(wrong.code == 1);
  CHECK(wrong.err.find("does not match 'klv1 n=4'") != std::string::npos);
  CHECK(cli("table load --n 3 --table " + (scratch() / "missing.klv").string()).code == 1);
  CHECK(cli("table build --n 3 --table " + path).code == 2);
  CHECK(cli("table squash --n 3 --table " + path).code == 2);
}

TEST_CASE("cells and orbits subcommands") {
  const Run c = cli("cells --n 4");
  REQUIRE(c.code == 0);
  const auto j = nlohmann::json::parse(c.out);
  CHECK(j["schema"] == "affhecke-cells/1");
  CHECK(j["elements"] == 24);
  CHECK(j["two_sided"].size() == 5);
  for (const auto& e : j["two_sided"]) CHECK(e["a"]["exact"] == true);

  const Run a = cli("cells --n 2 --max-len 5");
  REQUIRE(a.code == 0);
  CHECK(nlohmann::json::parse(a.out)["two_sided"].size() == 2);
  CHECK(cli("cells --n 4 --max-len 30").code == 2);

  const Run o = cli("orbits --n 4 --json");
  REQUIRE(o.code == 0);
  const auto oj = nlohmann::json::parse(o.out);
  CHECK(oj["orbits"].size() == 5);
  CHECK(oj["covers"].size() == 4);
  CHECK(cli("orbits --n 4").out.find("(2,2)  dim 8") != std::string::npos);
  CHECK(cli("orbits --n 0").code == 2);
}
