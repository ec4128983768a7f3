#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct CommandResult {
  int exit_code = -1;
  std::string out;
};

CommandResult run_cli(const std::string& args) {
  const std::string command =
      std::string(NTL_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CommandResult result;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
    result.out.append(buffer, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

TEST_CASE("normalize") {
  CHECK(run_cli("normalize -n 3 \"x3x1x2\"").out == "1 3 2\n");
  CHECK(run_cli("normalize -n 3 \"3 1 2 1\"").out == "0\n");
  CHECK(run_cli("normalize -n 3 \"\"").out == "1\n");
  CHECK(run_cli("normalize -n 3 \"x3x1x2\"").exit_code == 0);

  CHECK(run_cli("normalize -n 3 \"x9\"").exit_code == 2);
  CHECK(run_cli("normalize -n 3 \"1 junk\"").exit_code == 2);
  CHECK(run_cli("normalize \"1\"").exit_code == 2);   // missing -n
  CHECK(run_cli("normalize -n -1 \"\"").exit_code == 2);
}

TEST_CASE("basis") {
  CHECK(run_cli("basis -n 2").out == "1\n1\n1 2\n2\n2 1\n");
  CHECK(run_cli("basis -n 0").out == "1\n");
  CHECK(run_cli("basis -n 3 --degree 2").out ==
        "1 2\n1 3\n2 1\n2 3\n3 2\n");

  const auto json_run = run_cli("basis -n 2 --format json");
  CHECK(json_run.exit_code == 0);
  const auto parsed = nlohmann::json::parse(json_run.out);
  CHECK(parsed ==
        nlohmann::json::parse("[[],[1],[1,2],[2],[2,1]]"));

  CHECK(run_cli("basis -n 2 --format csv").exit_code == 2);
}

TEST_CASE("dim") {
  CHECK(run_cli("dim -n 3").out == "14\n");
  CHECK(run_cli("dim -n 5").out == "132\n");
  CHECK(run_cli("dim -n 0").out == "1\n");
}

TEST_CASE("triangle") {
  CHECK(run_cli("triangle -n 0").out == "1\n");
  CHECK(run_cli("triangle -n 2").out == "1\n1,1\n1,2,2\n");
  const auto csv = run_cli("triangle -n 3 --format csv");
  CHECK(csv.out == "1\n1,1\n1,2,2\n1,3,5,4,1\n");
  const auto parsed =
      nlohmann::json::parse(run_cli("triangle -n 3 --format json").out);
  CHECK(parsed[3] == nlohmann::json::parse("[1,3,5,4,1]"));
}

TEST_CASE("convert") {
  CHECK(run_cli("convert to-dyck -n 3 \"3 2 1\"").out == "UUUUDDDD\n");
  CHECK(run_cli("convert from-dyck UDUDUDUD").out == "1\n");
  CHECK(run_cli("convert to-perm -n 3 \"2 1 3 2\"").out == "3 4 1 2\n");
  CHECK(run_cli("convert from-perm \"3 4 1 2\"").out == "2 1 3 2\n");

  const auto profile = nlohmann::json::parse(
      run_cli("convert to-dyck -n 3 \"2 1 3 2\" --format json").out);
  CHECK(profile["n"] == 3);
  CHECK(profile["word"] == nlohmann::json::parse("[2,1,3,2]"));
  CHECK(profile["degree"] == 4);
  CHECK(profile["runs"] == nlohmann::json::parse("[[2,2],[3,2]]"));
  CHECK(profile["dyck"] == "UUUDUDDD");
  CHECK(profile["perm"] == nlohmann::json::parse("[3,4,1,2]"));

  // Conversion failures exit 1; malformed input exits 2.
  CHECK(run_cli("convert to-dyck -n 3 \"3 1 2 1\"").exit_code == 1);
  CHECK(run_cli("convert to-dyck -n 3 \"3 1 2\"").exit_code == 1);
  CHECK(run_cli("convert from-perm \"3 2 1\"").exit_code == 1);
  CHECK(run_cli("convert sideways \"1\"").exit_code == 2);
  CHECK(run_cli("convert from-dyck UDX").exit_code == 2);
  CHECK(run_cli("convert from-dyck UDUD -n 5").exit_code == 2);
  CHECK(run_cli("convert to-dyck \"1\"").exit_code == 2);  // missing -n
}

TEST_CASE("convert renderings") {
  const auto ascii = run_cli("convert to-dyck -n 3 \"3 2 1\" --render ascii");
  CHECK(ascii.exit_code == 0);
  CHECK(ascii.out.find("/") != std::string::npos);
  CHECK(ascii.out.find("\\") != std::string::npos);

  const auto svg = run_cli("convert from-dyck UUDDUD --render svg");
  CHECK(svg.exit_code == 0);
  CHECK(svg.out.rfind("<svg", 0) == 0);

  CHECK(run_cli("convert to-dyck -n 3 \"3 2 1\" --render ascii --format json")
            .exit_code == 2);
}

TEST_CASE("verify") {
  const auto ok = run_cli("verify -n 3");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("ok: dimension equals Catalan(n+1)") != std::string::npos);
  CHECK(run_cli("verify -n 2 --oracle").exit_code == 0);
  CHECK(run_cli("verify -n -1").exit_code == 2);
}

TEST_CASE("output redirection") {
  const std::string path = "/tmp/ntl_cli_test_output.txt";
  std::remove(path.c_str());
  const auto result = run_cli("dim -n 3 --output " + path);
  CHECK(result.exit_code == 0);
  CHECK(result.out.empty());
  std::ifstream file(path);
  std::stringstream content;
  content << file.rdbuf();
  CHECK(content.str() == "14\n");
  std::remove(path.c_str());
}

TEST_CASE("unknown flags and subcommands are usage errors") {
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("dim -n 3 --format yaml").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);  // a subcommand is required
}
