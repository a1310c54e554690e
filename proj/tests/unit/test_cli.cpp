#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "pwz/repro.hpp"
#include "pwz_cli/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "pwz");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = pwz::cli::dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("seq prints W_3") {
  const Run r = run({"seq", "--n", "3", "--a", "-3", "--b", "-5", "--c", "10", "--d", "-1"});
  CHECK(r.code == pwz::cli::kPass);
  CHECK(r.out.find("9z^3 + 10z^2 - 23z + 5") != std::string::npos);
  const Run j = run({"seq", "--n", "3", "--a", "-3", "--b", "-5", "--c", "10", "--d", "-1", "--json"});
  CHECK(j.code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc.is_object());
}

TEST_CASE("verify exit codes") {
  CHECK(run({"verify", "--a", "-3", "--b", "-5", "--c", "0.8", "--d", "-1", "--n-max", "20"}).code == 0);
  CHECK(run({"verify", "--a", "-3", "--b", "-5", "--c", "5", "--d", "-1"}).code == pwz::cli::kUsage);
  CHECK(run({"verify", "--a", "3", "--b", "-5", "--c", "1", "--d", "-1"}).code == pwz::cli::kUsage);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == pwz::cli::kUsage);
  CHECK(run({"frobnicate"}).code == pwz::cli::kUsage);
  CHECK(run({"seq", "--a", "x", "--b", "-5", "--c", "10", "--d", "-1"}).code == pwz::cli::kUsage);
  CHECK(run({"seq", "--n", "3"}).code == pwz::cli::kUsage);
  CHECK(run({"roots", "--a", "-3", "--b", "-5", "--c", "10", "--d", "-1", "--n", "3", "--format", "xml"}).code ==
        pwz::cli::kUsage);
  CHECK(run({"repro", "9.9"}).code == pwz::cli::kUsage);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"verify", "--help"}).code == 0);
}

TEST_CASE("roots csv") {
  const Run r = run({"roots", "--a", "-3", "--b", "-5", "--c", "0.8", "--d", "-1", "--n", "4", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.find("-2.396") != std::string::npos);
}

TEST_CASE("repro fixtures") {
  CHECK(pwz::run_repro("3.1a").all_pass());
  CHECK(pwz::run_repro("5.3a").all_pass());
  CHECK(pwz::run_repro("5.3b").all_pass());
  // printed values that no zero matches
  auto failing = [](const pwz::ReproResult& r) {
    std::vector<std::string> out;
    for (const auto& row : r.rows) {
      if (!row.pass) out.push_back(row.label);
    }
    return out;
  };
  CHECK(failing(pwz::run_repro("3.1b")) == std::vector<std::string>{"xi_{5,1}"});
  CHECK(failing(pwz::run_repro("3.2")) == std::vector<std::string>{"xi_{5,2}"});
  CHECK(pwz::printed_tolerance("-2.396") == pwz::Rational(1, 1000));
  CHECK(pwz::printed_tolerance("29.03") == pwz::Rational(1, 100));
  CHECK_THROWS(pwz::run_repro("4.0"));
  CHECK(run({"repro", "3.1a"}).code == 0);
  CHECK(run({"repro", "3.2"}).code == pwz::cli::kCheckFailed);
  CHECK(run({"repro", "--all"}).code == pwz::cli::kCheckFailed);
}
