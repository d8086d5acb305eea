#include <doctest.h>

#include <unistd.h>

#include "cli_fixtures.hpp"
#include "process.hpp"
#include "transcert/commands.hpp"

using namespace transcert;
using io::Json;
using clifix::fixtures;
using clifix::kExampleMatrix;

namespace {

Json bump(const Json& leaf) {
  if (leaf.is_number_integer()) return leaf.get<std::int64_t>() + 1;
  if (leaf.is_string()) return to_string(parse_rational(leaf.get<std::string>()) + 1);
  FAIL("unsupported witness leaf");
  return leaf;
}

}  // namespace

TEST_CASE("example matrix has structural rank 2") {
  const Outcome out = run_command("structural-rank", Json::parse(kExampleMatrix), Params{});
  CHECK(out.exit_code == 0);
  CHECK(out.output["result"]["structural_rank"] == 2);
  CHECK(out.output["schema_version"] == kSchemaVersion);
}

TEST_CASE("every subcommand emits a certificate that verifies") {
  for (const auto& f : fixtures()) {
    CAPTURE(f.command);
    CAPTURE(f.input.dump());
    const Outcome out = run_command(f.command, f.input, Params{});
    REQUIRE(out.exit_code == 0);
    for (const auto& c : out.output["transcript"]) CHECK(c["passed"] == true);
    const Outcome v = verify_certificate(out.output);
    CHECK(v.exit_code == 0);
    CHECK(v.output["verified"] == true);
  }
}

TEST_CASE("tampered witnesses fail verification") {
  for (const auto& f : fixtures()) {
    CAPTURE(f.command);
    Json cert = run_command(f.command, f.input, Params{}).output;
    Json& leaf = cert["result"][f.witness];
    leaf = bump(leaf);
    const Outcome v = verify_certificate(cert);
    CHECK(v.exit_code == 1);
    CHECK(v.output["verified"] == false);
  }
}

TEST_CASE("older tool version with the same schema still verifies") {
  Json cert = run_command("mult-rel", Json::parse(R"({"tuple":["6","1/2","1/3"]})"), Params{}).output;
  cert["tool_version"] = "0.0.1";
  CHECK(verify_certificate(cert).exit_code == 0);
  cert["schema_version"] = kSchemaVersion + 1;
  CHECK(verify_certificate(cert).exit_code == 2);
}

TEST_CASE("malformed input maps to exit 2 with a pointer") {
  auto err = run_command("structural-rank",
                         Json::parse(R"({"symbols":["x"],"rows":1,"cols":1,"entries":[[{"q":"1"}]]})"), Params{});
  CHECK(err.exit_code == 2);
  CHECK(err.output["error"]["pointer"] == "/entries/0/0/q");
  err = run_command("mult-rel", Json::parse(R"({"tuple":["2","0"]})"), Params{});
  CHECK(err.exit_code == 2);
  CHECK(err.output["error"]["pointer"] == "/tuple/1");
  err = run_command("theta", Json::parse(R"({"r":"x","d":2})"), Params{});
  CHECK(err.output["error"]["pointer"] == "/r");
  CHECK(run_command("siegel", Json::parse(R"({"A":[[1,2],[3,4]]})"), Params{}).exit_code == 2);
  CHECK(run_command("padic-exp", Json::parse(R"({"prime":2,"value":"2"})"), Params{}).exit_code == 2);
  CHECK(run_command("padic-log", Json::parse(R"({"prime":6,"value":"2"})"), Params{}).exit_code == 2);
  CHECK(run_command("nope", Json::object(), Params{}).exit_code == 2);
  Params bad;
  bad.strategy = "random";
  CHECK(run_command("wm-decompose", Json::parse(kExampleMatrix), bad).exit_code == 2);
}

TEST_CASE("not found is exit 1") {
  const Json generic = Json::parse(R"({"symbols":["a","b","c","d"],"rows":2,"cols":2,
    "entries":[[{"a":"1"},{"b":"1"}],[{"c":"1"},{"d":"1"}]]})");
  CHECK(run_command("wm-decompose", generic, Params{}).exit_code == 1);
  CHECK(run_command("mcc", generic, Params{}).exit_code == 1);
  const Json ind = Json::parse(R"({"op":"product-exp","series":[{"order":5,"coeffs":["0","1"]}],"ms":[1]})");
  CHECK(run_command("series", ind, Params{}).exit_code == 0);
}

TEST_CASE("binary: exit codes, determinism and separate-process verify") {
  const std::string cli = TRANSCERT_CLI_PATH;
  proc::TempDir dir("transcert-cli-test");
  const std::string example = dir.write("example.json", kExampleMatrix);

  auto r = proc::run({cli, "--result-only", "structural-rank", example});
  CHECK(r.exit_code == 0);
  CHECK(Json::parse(r.out)["structural_rank"] == 2);

  CHECK(proc::run({cli, "siegel", "--json", R"({"A":[[1,2],[3,4]]})"}).exit_code == 2);
  CHECK(proc::run({cli, "no-such-command"}).exit_code == 2);
  CHECK(proc::run({cli, "structural-rank", "--json", "{oops"}).exit_code == 2);

  for (const auto& f : fixtures()) {
    CAPTURE(f.command);
    const std::vector<std::string> argv = {cli, "--seed", "7", f.command, "--json", f.input.dump()};
    const auto a = proc::run(argv), b = proc::run(argv);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    const std::string path = dir.write("cert.json", a.out);
    CHECK(proc::run({cli, "verify", path}).exit_code == 0);
    Json tampered = Json::parse(a.out);
    tampered["result"][f.witness] = bump(tampered["result"][f.witness]);
    CHECK(proc::run({cli, "verify", dir.write("bad.json", tampered.dump())}).exit_code == 1);
  }
}
