#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <nlohmann/json.hpp>

namespace {

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

/// Runs the installed CLI with the given arguments, merging stderr into the
/// captured output.
CommandResult run_cli(const std::string& args) {
  const std::string command =
      std::string("\"") + QSF_CLI_PATH + "\" " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CommandResult result;
  std::array<char, 4096> buffer{};
  size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), got);
  const int status = pclose(pipe);
  REQUIRE(status != -1);
  result.exit_code = WEXITSTATUS(status);
  return result;
}

int count_lines(const std::string& s) {
  int lines = 0;
  for (char ch : s)
    if (ch == '\n') ++lines;
  return lines;
}

}  // namespace

TEST_CASE("version flag") {
  const CommandResult r = run_cli("--version");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("qsf 0.1.0") != std::string::npos);
}

TEST_CASE("missing subcommand is a usage error") {
  const CommandResult r = run_cli("");
  CHECK(r.exit_code == 2);
}

TEST_CASE("identities emits parseable json with passing checks") {
  const CommandResult r = run_cli("identities --n 1 --trials 100 --seed 2");
  REQUIRE(r.exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(r.output);
  CHECK(doc.at("config").at("subcommand") == "identities");
  CHECK(doc.at("config").at("n") == 1);
  REQUIRE(doc.at("checks").is_array());
  CHECK(!doc.at("checks").empty());
  for (const auto& check : doc.at("checks")) {
    CHECK(check.at("pass").get<bool>());
    CHECK(check.contains("name"));
    CHECK(check.contains("paper_ref"));
    CHECK(check.contains("tolerance"));
  }
}

TEST_CASE("invalid dimension is a configuration error") {
  const CommandResult r = run_cli("identities --n 0");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("error:") != std::string::npos);
}

TEST_CASE("sphere rejects nonpositive curvature") {
  const CommandResult r = run_cli("sphere --c -4 --samples 1000");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("error:") != std::string::npos);
}

TEST_CASE("sphere reports failure under an impossible tolerance") {
  const CommandResult r =
      run_cli("sphere --samples 2000 --tol-lambda1 1e-12 --format text");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("[FAIL]") != std::string::npos);
  CHECK(r.output.find("result: FAIL") != std::string::npos);
}

TEST_CASE("report renders the margin table as csv") {
  const CommandResult r = run_cli("report --n-range 1..5 --format csv");
  REQUIRE(r.exit_code == 0);
  CHECK(count_lines(r.output) == 6);
  CHECK(r.output.find("n,c,classification,verdict,lambda1,einstein_constant,"
                      "margin\n") == 0);
  CHECK(r.output.find("1,4,projective,unstable,16,12,-8\n") !=
        std::string::npos);
  CHECK(r.output.find("5,4,projective,unstable,48,28,-8\n") !=
        std::string::npos);
}

TEST_CASE("report rejects an inverted range") {
  CHECK(run_cli("report --n-range 2..1").exit_code == 2);
}

TEST_CASE("single-dimension range shorthand") {
  const CommandResult r = run_cli("report --n-range 3 --format csv");
  REQUIRE(r.exit_code == 0);
  CHECK(count_lines(r.output) == 2);
  CHECK(r.output.find("3,4,projective,unstable,32,20,-8\n") !=
        std::string::npos);
}

TEST_CASE("stability text output names the verdict") {
  const CommandResult r = run_cli("stability --n 2 --c -1 --format text");
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.find("stable-index-zero") != std::string::npos);
}

TEST_CASE("output bytes are reproducible across runs and thread counts") {
  const std::string args = "sphere --samples 20000 --seed 3";
  const CommandResult a = run_cli(args + " --threads 1");
  const CommandResult b = run_cli(args + " --threads 4");
  const CommandResult c = run_cli(args + " --threads 1");
  REQUIRE(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output == c.output);
}
