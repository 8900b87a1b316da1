#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

using json = nlohmann::ordered_json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "", bool stderr_only = false) {
  std::string cmd = env + " " + SEIFERTQ_CLI_PATH + " " + args + (stderr_only ? " 2>&1 1>/dev/null" : " 2>/dev/null");
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("cs of the poincare sphere") {
  Run r = run("cs --p 2,3,5");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["schema_version"] == 1);
  CHECK(j["result"]["cs"] == json({"0", "71/120", "119/120"}));
  CHECK(j["config"]["precision_bits"] == 192);
}

TEST_CASE("invariants") {
  Run r = run("invariants --p 2,3,5 --q -1,-2,6 --casson -1");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out)["result"];
  CHECK(j["P"] == 30);
  CHECK(j["m0"] == -1);
  CHECK(j["n_star"] == -5);
  CHECK(j["phi"] == "181/30");
  CHECK(j["p_hat"] == json({15, 10, 6}));
}

TEST_CASE("gppv exponents are integral") {
  Run r = run("gppv --p 2,3,5 --terms 50");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out)["result"];
  REQUIRE(j["coefficients"].size() == 50);
  CHECK(j["exponents_integral"] == true);
  for (auto& row : j["coefficients"]) CHECK(row["exponent"].get<std::string>().find('/') == std::string::npos);
  CHECK(j["coefficients"][0]["m"] == -1);
  CHECK(j["coefficients"][0]["exponent"] == "0");

  Run csv = run("gppv --p 2,3,5 --terms 3 --format csv");
  REQUIRE(csv.code == 0);
  CHECK(csv.out == "m,chi,exponent\n-1,-1,0\n11,1,1\n19,1,3\n");
}

TEST_CASE("verify radial passes") {
  Run r = run("verify radial --p 2,3,7 --alpha 1/5");
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["pass"] == true);
  CHECK(j["result"]["exact_equal"] == true);
}

TEST_CASE("exact verifiers") {
  for (const char* args : {"verify dft --p 2,3,5,7", "verify moments --p 2,3,7", "hikami --p 2,3,5 --s 0 --dump-dft"}) {
    CAPTURE(args);
    Run r = run(args);
    CHECK(r.code == 0);
    CHECK(json::parse(r.out).is_object());
  }
}

TEST_CASE("wrt and theta reports") {
  Run w = run("wrt --p 2,3,5 -k 5 --exact");
  REQUIRE(w.code == 0);
  json j = json::parse(w.out)["result"];
  CHECK(j["value"]["re"].get<std::string>().rfind("-0.80901699437494742410", 0) == 0);
  CHECK(j.contains("exact"));
  Run t = run("theta --p 2,3,5 --j 0 --alpha 1/5 --orders 4");
  REQUIRE(t.code == 0);
  CHECK(json::parse(t.out)["result"]["coefficients"].size() == 4);
}

TEST_CASE("exit codes") {
  CHECK(run("").code == 1);
  CHECK(run("bogus --p 2,3,5").code == 1);
  CHECK(run("cs").code == 1);
  CHECK(run("cs --p 2,4,5").code == 1);
  CHECK(run("cs --p 2,3,5 --format xml").code == 1);
  CHECK(run("wrt --p 2,3,5 --format csv -k 5").code == 1);
  CHECK(run("verify aec --p 2,3,5 -k 5 --tolerance 1e-200").code == 2);
  CHECK(run("--help").code == 0);

  Run err = run("cs --p 2,4,5", "", true);
  json e = json::parse(err.out);
  CHECK(e["error"]["kind"] == "NonCoprime");
}

TEST_CASE("precision from the environment") {
  Run r = run("cs --p 2,3,5", "SEIFERTQ_PRECISION=256");
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["config"]["precision_bits"] == 256);
  Run o = run("cs --p 2,3,5 --precision 320", "SEIFERTQ_PRECISION=256");
  CHECK(json::parse(o.out)["config"]["precision_bits"] == 320);
}

TEST_CASE("reports round-trip and are deterministic") {
  Run a = run("verify moments --p 2,3,5,7");
  Run b = run("verify moments --p 2,3,5,7");
  CHECK(a.out == b.out);
  json j = json::parse(a.out);
  CHECK(json::parse(j.dump()) == j);
  CHECK(j.dump() + "\n" == a.out);
}
