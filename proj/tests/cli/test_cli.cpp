#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <sstream>
#include <string>

#include "qjones/braid.hpp"
#include "qjones/format.hpp"
#include "qjones/mcmahon.hpp"

namespace {

struct Run {
  std::string out;
  int status;
};

Run cli(const std::string& args) {
  const std::string cmd = std::string(QJONES_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  return {out, WIFEXITED(raw) ? WEXITSTATUS(raw) : -1};
}

}  // namespace

TEST_CASE("jones") {
  const auto both = cli(R"(jones --word "1 1 1" -N 2 --engine both)");
  CHECK(both.status == 0);
  CHECK(both.out.find("q + q^3 - q^4") != std::string::npos);
  CHECK(both.out.find("EQUAL") != std::string::npos);

  const auto unknot = cli(R"(jones --word "1" -N 5)");
  CHECK(unknot.status == 0);
  CHECK(unknot.out == "1\n");

  const auto link = cli(R"(jones --word "1 1" -N 2)");
  CHECK(link.status == 2);
  CHECK(link.out.find("closure is not a knot") != std::string::npos);

  CHECK(cli(R"(jones --word "1 1 1" -N 2 --mode bosonic)").out == "q + q^3 - q^4\n");
}

TEST_CASE("usage errors exit 1") {
  CHECK(cli("").status == 1);
  CHECK(cli(R"(jones --word "0 1" -N 2)").status == 1);
  CHECK(cli(R"(jones --word "1 1 1")").status == 1);
  CHECK(cli("frobnicate").status == 1);
  CHECK(cli(R"(volume --word "1 -2 1 -2" --N x)").status == 1);
  CHECK(cli(R"(volume --word "1 -2 1 -2" --N 1)").status == 2);
}

TEST_CASE("alexander, kashaev, mahler") {
  CHECK(cli(R"(alexander --word "1 -2 1 -2")").out == "3 - z - z^-1\n");
  CHECK(cli(R"(alexander --word "1 1 1 1 1" --engine both)").status == 0);
  CHECK(cli(R"(kashaev --word "-1 -1 -1" -N 2 --exact)").out == "-3\n");
  const auto m = cli(R"(mahler --poly "3 - z - z^-1")");
  CHECK(std::stod(m.out) == doctest::Approx(2.618034).epsilon(1e-6));
}

TEST_CASE("volume csv") {
  const auto v = cli(R"(volume --word "1 -2 1 -2" --N 10:30:10)");
  REQUIRE(v.status == 0);
  std::istringstream in(v.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "N,abs_value,rate");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    CHECK(line.rfind(std::to_string(10 * rows) + ",", 0) == 0);
  }
  CHECK(rows == 3);
}

TEST_CASE("json output round-trips") {
  for (const char* word : {"1 1 1", "1 -2 1 -2", "1 1 1 2 -1 2"}) {
    const auto r = cli(std::string("--json jones --word \"") + word + "\" -N 3");
    REQUIRE(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    for (const char* key : {"input", "result", "engine", "timings"}) CHECK(j.contains(key));
    CHECK(qjones::parse_laurent(j["result"].get<std::string>()) == qjones::colored_jones(qjones::parse_braid(word), 3));
  }
  const auto a = nlohmann::json::parse(cli(R"(--json alexander --word "1 -2 1 -2")").out);
  CHECK(qjones::parse_laurent(a["result"].get<std::string>()) == qjones::alexander(qjones::parse_braid("1 -2 1 -2")));
}

TEST_CASE("verify on the bundled corpus") {
  const auto v = cli("verify");
  CHECK(v.status == 0);
  CHECK(v.out.find("FAIL") == std::string::npos);
}
