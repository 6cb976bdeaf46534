// End-to-end checks against the built binary: exit codes, wire formats,
// golden output, determinism.
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

using nlohmann::json;

namespace {

std::string g_binary;

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args, const std::string& stdin_text = "") {
  std::string cmd;
  if (!stdin_text.empty()) cmd += "printf '%s' '" + stdin_text + "' | ";
  cmd += g_binary + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("realizable: negative certificate with witness") {
  RunResult r = run_cli("realizable -",
                        R"({"rank":1,"theta":["x1^-1"],"phi":[1]})");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["verdict"] == "not_realizable");
  CHECK(j["witness"] == "x1");
}

TEST_CASE("realizable: positive verdict") {
  RunResult r = run_cli("realizable -",
                        R"({"rank":1,"theta":["x1"],"phi":[1]})");
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.out)["verdict"] == "realizable");
}

TEST_CASE("realizable: invalid orientation exits 1 and names the generator") {
  RunResult r = run_cli("realizable -",
                        R"({"rank":2,"theta":["x2","x1"],"phi":[1,0]})");
  CHECK(r.exit_code == 1);
  json j = json::parse(r.out);
  CHECK(j["at"] == "/phi");
  CHECK(std::string(j["error"]).find("x1") != std::string::npos);
}

TEST_CASE("realizable: non-involutive theta exits 1 with location") {
  RunResult r = run_cli("realizable -",
                        R"({"rank":1,"theta":["x1 x1"],"phi":[0]})");
  CHECK(r.exit_code == 1);
  CHECK(json::parse(r.out)["at"] == "/theta");
}

TEST_CASE("realizable: exhausted budget exits 2 with unknown verdict") {
  std::string image = "x2^-1 x2^-1 x2^-1 x2^-1 x2^-1 x2^-1 x2^-1 x2^-1 "
                      "x1^-1 "
                      "x2^-1 x2^-1 x2^-1 x2^-1 x2^-1 x2^-1 x2^-1 x2^-1";
  std::string input =
      R"({"rank":2,"theta":[")" + image + R"(","x2"],"phi":[1,0]})";
  RunResult r = run_cli("realizable - --max-witness-length 8", input);
  CHECK(r.exit_code == 2);
  json j = json::parse(r.out);
  CHECK(j["verdict"] == "unknown");
  CHECK(j["budget"] == 8);

  RunResult full = run_cli("realizable - --max-witness-length 16", input);
  CHECK(full.exit_code == 0);
  CHECK(json::parse(full.out)["verdict"] == "not_realizable");
}

TEST_CASE("canonical-form on the pinned matrices") {
  RunResult r1 = run_cli("canonical-form -", "-1");
  CHECK(r1.exit_code == 0);
  json j1 = json::parse(r1.out);
  CHECK(j1["k"] == 0);
  CHECK(j1["r"] == 0);
  CHECK(j1["s"] == 1);
  CHECK(j1["verified"] == true);
  CHECK(j1["P"] == json::parse(R"([["1"]])"));

  RunResult r2 = run_cli("canonical-form -", "1 0; 1 -1");
  CHECK(r2.exit_code == 0);
  json j2 = json::parse(r2.out);
  CHECK(j2["k"] == 1);
  CHECK(j2["r"] == 0);
  CHECK(j2["s"] == 0);
  CHECK(j2["verified"] == true);

  RunResult r3 = run_cli("canonical-form -", "2 0; 0 1");
  CHECK(r3.exit_code == 1);
  CHECK(std::string(json::parse(r3.out)["error"]).find("involution") !=
        std::string::npos);
}

TEST_CASE("classify-vc") {
  RunResult r = run_cli("classify-vc -", R"({"shape":"Z","phi_z":1})");
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.out)["orbit_space"] == "S1twistS2n");

  RunResult bad = run_cli("classify-vc -",
                          R"({"shape":"ZsemiZ2","phi_z":1,"phi_torsion":1})");
  CHECK(bad.exit_code == 0);
  CHECK(json::parse(bad.out)["realizable"] == false);

  RunResult missing = run_cli("classify-vc -", R"({"shape":"Z2"})");
  CHECK(missing.exit_code == 1);
}

TEST_CASE("covers: single row for the connected-sum cover") {
  RunResult r = run_cli("covers RPsharpRP --max-index 8");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "[{\"base\":\"RPsharpRP\",\"group\":{\"family\":\"cyclic\",\"k\":2},"
        "\"index\":2}]\n");
}

TEST_CASE("covers: golden table at the default bound") {
  RunResult r = run_cli("covers S1xS2n --max-index 48");
  CHECK(r.exit_code == 0);
  CHECK(r.out == read_file(std::string(GOLDEN_DIR) + "/covers_s1xs2n_48.json"));

  RunResult bad = run_cli("covers S1xS2n --max-index 49");
  CHECK(bad.exit_code == 1);
}

TEST_CASE("free-product of two order-two factors") {
  RunResult r = run_cli("free-product -",
                        R"([{"rank":0,"theta":[]},{"rank":0,"theta":[]}])");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["group"]["rank"] == 1);
  CHECK(j["group"]["theta"] == json::parse(R"(["x1^-1"])"));
}

TEST_CASE("verify-dyer-scott") {
  std::string input = R"({"group":{"rank":2,"theta":["x1^-1","x1^-1 x2 x1"]},)"
                      R"("claim":{"lambdas":[{"x":1,"ys":[2]}]}})";
  RunResult r = run_cli("verify-dyer-scott -", input);
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.out)["valid"] == true);

  std::string incomplete =
      R"({"group":{"rank":2,"theta":["x1^-1","x1^-1 x2 x1"]},)"
      R"("claim":{"fixed":[1]}})";
  CHECK(run_cli("verify-dyer-scott -", incomplete).exit_code == 1);
}

TEST_CASE("verify-action reports the seed and the violation") {
  RunResult r = run_cli("verify-action - --samples 50 --seed 7",
                        R"({"rank":1,"theta":["x1^-1"],"phi":[1]})");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["seed"] == 7);
  CHECK(j["samples"] == 50);
  CHECK(j["passed"] == false);
  CHECK(j["axiom_failures"].empty());
  CHECK(!j["freeness_failures"].empty());
}

TEST_CASE("pretty rendering") {
  RunResult table = run_cli("covers RPsharpRP --max-index 8 --pretty");
  CHECK(table.exit_code == 0);
  CHECK(table.out.find("index") == 0);
  CHECK(table.out.find("cyclic(2)") != std::string::npos);

  RunResult indented = run_cli("realizable - --pretty",
                               R"({"rank":1,"theta":["x1"],"phi":[1]})");
  CHECK(indented.exit_code == 0);
  CHECK(indented.out.find('\n') != indented.out.size() - 1);
  CHECK(json::parse(indented.out)["verdict"] == "realizable");
}

TEST_CASE("identical invocations are byte-identical") {
  std::string input = R"({"rank":2,"theta":["x2","x1"],"phi":[1,1]})";
  RunResult a = run_cli("realizable -", input);
  RunResult b = run_cli("realizable -", input);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("selfcheck is deterministic and green") {
  RunResult a = run_cli("selfcheck");
  RunResult b = run_cli("selfcheck");
  CHECK(a.exit_code == 0);
  CHECK(b.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("[FAIL]") == std::string::npos);
}

int run_all(int argc, char** argv) {
  doctest::Context context;
  context.applyCommandLine(argc > 1 ? 1 : argc, argv);
  return context.run();
}

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: cli_tests <path-to-binary>\n");
    return 2;
  }
  g_binary = argv[1];
  return run_all(argc, argv);
}
