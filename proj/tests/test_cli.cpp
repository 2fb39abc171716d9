#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "brauerlab/commands.hpp"
#include "json.hpp"

using namespace brauerlab;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// stdout of the real binary; stderr discarded
Run run(const std::string& args) {
  std::string cmd = std::string(BRAUERLAB_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json parse(const Run& r) { return nlohmann::json::parse(r.out); }

std::string check_status(const nlohmann::json& j, const std::string& needle) {
  for (const auto& c : j["checks"])
    if (c["name"].get<std::string>().find(needle) != std::string::npos) return c["status"];
  return "missing";
}

}  // namespace

TEST_CASE("bounds") {
  auto r = run("bounds --n 4");
  CHECK(r.code == 0);
  auto j = parse(r);
  CHECK(j["status"] == "pass");
  CHECK(j["result"]["lower"]["value"] == 5);
  CHECK(j["result"]["upper"]["value"] == 5);
  CHECK(j["schema_version"] == kEnvelopeSchemaVersion);
  CHECK(j["version"] == kToolVersion);

  auto r15 = parse(run("bounds --n 15 --assume-roots-of-unity"));
  CHECK(r15["result"]["upper"]["value"] == 8);
}

TEST_CASE("invalid input exits 2") {
  CHECK(run("bounds --n 1").code == 2);
  CHECK(run("bounds").code == 2);
  CHECK(run("nonsense").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("udn-factorset --n 4 --check normalized").code == 2);
  CHECK(run("udn-factorset --n 5 --check bogus").code == 2);
  CHECK(run("lattice --group XX").code == 2);
  CHECK(run("lattice --group C3 --subgroup 1 --sequence freepres --r 0").code == 2);
  CHECK(run("crossed-decompose --params a1=2").code == 2);
  CHECK(run("crossed-decompose --params \"a1=2,a2=3,f1=(,f2=1,u=1\"").code == 2);
  CHECK(run("traceform --m 3").code == 2);
  CHECK(run("selftest --criterion 11").code == 2);
  CHECK(run("bounds --n 4 --jobs 0").code == 2);
  CHECK(run("bounds --n 4").out.find("error") == std::string::npos);
}

TEST_CASE("udn-factorset") {
  auto r = run("udn-factorset --n 5 --check all");
  CHECK(r.code == 0);
  auto j = parse(r);
  CHECK(j["status"] == "pass");
  CHECK(j["result"].contains("normalized_factor_set"));
  CHECK(check_status(j, "c'_ijh: cocycle") == "pass");
  auto four = parse(run("udn-factorset --n 4 --check cocycle"));
  CHECK(four["status"] == "pass");
  CHECK_FALSE(four["result"].contains("normalized_factor_set"));
}

TEST_CASE("lattice") {
  auto j = parse(run("lattice --group S3 --subgroup 1 --sequence freepres --r 2"));
  CHECK(j["status"] == "pass");
  CHECK(j["result"]["kernel_rank"] == 7);
  CHECK(j["result"]["faithful"] == true);
  auto c3 = parse(run("lattice --group C3 --subgroup 1 --sequence freepres --r 1"));
  CHECK(c3["status"] == "pass");
  CHECK(c3["result"]["faithful"] == false);
  CHECK(parse(run("lattice --group S4 --subgroup 1 --sequence seq2"))["status"] == "pass");
  auto f = parse(run("lattice --sequence formanek --n 3"));
  CHECK(f["status"] == "pass");
  CHECK(f["result"]["kernel_rank"] == 10);
}

TEST_CASE("crossed-decompose") {
  auto j = parse(run("crossed-decompose --params a1=2,a2=3,f1=5,f2=0,u=1,b2=7"));
  CHECK(j["status"] == "pass");
  auto z = parse(run("crossed-decompose --params a1=2,a2=3,f1=0,f2=1,u=zeta,b2=alpha1"));
  CHECK(z["status"] == "pass");
  auto bad = run("crossed-decompose --params a1=2,a2=3,f1=1,f2=1,u=1+alpha1");
  CHECK(bad.code == 2);

  auto r = run("crossed-decompose --random 3 --seed 7");
  CHECK(r.code == 0);
  auto rj = parse(r);
  CHECK(rj["seed"] == 7);
  CHECK(rj["result"]["instances"].size() == 3);
  CHECK(run("crossed-decompose --random 3 --seed 7 --jobs 3").out == r.out);
  CHECK(run("crossed-decompose --random 3 --seed 8").out != r.out);
}

TEST_CASE("traceform") {
  auto r = run("traceform --random 2 --seed 3");
  CHECK(r.code == 1);
  auto j = parse(r);
  CHECK(j["status"] == "fail");
  CHECK(check_status(j, "instance 0: t1 = f1") == "pass");
  CHECK(check_status(j, "instance 0: t1^2 - n1 = f2^2 a2") == "pass");
  CHECK(check_status(j, "instance 0: n1 - t1^2 = f2^2 a2") == "fail");
  CHECK(check_status(j, "instance 0: Witt certificate: serre_form -> equiv_form") == "pass");
  CHECK(check_status(j, "instance 1: trace form isometric to equiv_form over Q(i)") == "pass");
  CHECK(j["result"]["move_certificate"]["moves"].size() == 18);
  CHECK(j["result"]["instances"][0]["equiv_form"]["entries"].size() == 16);
}

TEST_CASE("envelope round trip and --out") {
  auto r = run("udn-factorset --n 3");
  auto env = envelope_from_json(parse(r));
  CHECK(serialize(env) == r.out);

  auto path = std::filesystem::temp_directory_path() / "brauerlab_cli_out.json";
  std::filesystem::remove(path);
  auto w = run("bounds --n 6 --out " + path.string());
  CHECK(w.code == 0);
  CHECK(w.out.empty());
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str() == run("bounds --n 6").out);
  std::filesystem::remove(path);

  auto t = parse(run("bounds --n 6 --timing"));
  CHECK(t.contains("timing"));
  CHECK_FALSE(parse(run("bounds --n 6")).contains("timing"));
}

TEST_CASE("selftest single criterion") {
  auto j = parse(run("selftest --criterion 5 --seed 1"));
  CHECK(j["status"] == "pass");
  CHECK(j["input"]["criteria"] == nlohmann::json::array({5}));
  CHECK(j["seed"] == 1);
}
