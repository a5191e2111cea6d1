#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "springerkit/cli/cli.hpp"

using springerkit::cli::run;
using Json = nlohmann::ordered_json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& s, const std::string& what) { return s.find(what) != std::string::npos; }

std::vector<std::vector<std::string>> fixture_invocations() {
  std::vector<std::vector<std::string>> all;
  const std::vector<std::vector<std::string>> sl2_fields = {{}, {"--field", "4"}, {"--field", "3"}, {"--field", "9"}};
  for (const auto& f : sl2_fields)
    for (const char* cmd : {"irreps", "series", "partition", "gamma"}) {
      std::vector<std::string> a{cmd, "--datum", "sl2_s3.json"};
      a.insert(a.end(), f.begin(), f.end());
      all.push_back(a);
    }
  for (const std::vector<std::string> f : {std::vector<std::string>{}, {"--field", "3"}})
    for (const char* cmd : {"irreps", "series", "partition", "gamma"}) {
      std::vector<std::string> a{cmd, "--datum", "q8_sl10.json"};
      a.insert(a.end(), f.begin(), f.end());
      all.push_back(a);
    }
  all.push_back({"series", "--datum", "weyl_example.json"});
  all.push_back({"endalg", "--datum", "q8_sl10.json", "--triple", "sign"});
  all.push_back({"induce", "--datum", "q8_sl10.json", "--subgroup", "Z", "--module", "Z_sign"});
  all.push_back({"clifford", "--datum", "sl2_s3.json", "--subgroup", "A3_L", "--module", "L_chi"});
  all.push_back({"clifford", "--datum", "sl2_s3.json", "--subgroup", "A3", "--module", "S3_refl"});
  all.push_back({"mackey", "--datum", "sl2_s3.json", "--left", "A3_L", "--right", "Z2xA3", "--module", "Z2xA3_triv"});
  return all;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("run examples") {
    auto irreps = invoke({"irreps", "--datum", "sl2_s3.json", "--group", "S3"});
    CHECK(irreps.code == 0);
    CHECK(contains(irreps.out, "3 simple modules, dims 1 1 2"));
    CHECK(contains(irreps.out, "field: GF(7)"));
    CHECK(contains(irreps.out, "seed: 0"));

    auto series = invoke({"series", "--datum", "q8_sl10.json", "--format", "json"});
    CHECK(series.code == 0);
    auto doc = Json::parse(series.out);
    REQUIRE(doc["result"]["series"].size() == 1);
    CHECK(doc["result"]["series"][0]["size"] == 1);
    CHECK(doc["result"]["series"][0]["cocycle"]["status"] == "Nontrivial");

    for (const char* f : {"4,2", "2,2", "4"}) {
      auto part = invoke({"partition", "--datum", "sl2_s3.json", "--field", f, "--format", "json"});
      CHECK(part.code == 0);
      auto p = Json::parse(part.out);
      CHECK(p["field"]["order"] == 4);
      CHECK(p["field"]["modulus"] == Json::array({1, 1, 1}));
      CHECK(p["result"]["total_pairs"] == 4);
      CHECK(p["result"]["sum"] == 4);
      CHECK(p["result"]["covered"] == true);
    }
  }

  TEST_CASE("surrogate disclaimer only away from the group orders") {
    CHECK(contains(invoke({"partition", "--datum", "sl2_s3.json"}).out, "surrogate for characteristic 0"));
    CHECK(!contains(invoke({"partition", "--datum", "sl2_s3.json", "--field", "3"}).out, "surrogate"));
    CHECK(contains(invoke({"series", "--datum", "q8_sl10.json"}).out, "Fourier partner"));
  }

  TEST_CASE("exit codes") {
    CHECK(invoke({"series", "--datum", "sl2_s3.json", "--bogus"}).code == 64);
    CHECK(invoke({"frobnicate", "--datum", "sl2_s3.json"}).code == 64);
    CHECK(invoke({"series"}).code == 64);
    CHECK(invoke({"series", "--datum", "sl2_s3.json", "--format", "xml"}).code == 64);
    CHECK(invoke({"series", "--datum", "sl2_s3.json", "--field", "x"}).code == 64);
    CHECK(invoke({"endalg", "--datum", "sl2_s3.json"}).code == 64);
    CHECK(invoke({"--help"}).code == 0);

    auto missing = invoke({"series", "--datum", "no_such_datum.json"});
    CHECK(missing.code == 1);
    CHECK(missing.out.empty());
    CHECK(contains(missing.err, "ParseError"));
    auto bad_field = invoke({"series", "--datum", "sl2_s3.json", "--field", "5"});
    CHECK(bad_field.code == 1);
    CHECK(contains(bad_field.err, "ValidationError"));
    CHECK(invoke({"irreps", "--datum", "sl2_s3.json", "--group", "S5"}).code == 1);

    // Only one orbit of pairs is recorded for Q8.
    auto part = invoke({"partition", "--datum", "q8_sl10.json"});
    CHECK(part.code == 2);
    CHECK(contains(part.out, "not covered"));
  }

  TEST_CASE("expectation mismatch exits with 2") {
    const auto dir = std::filesystem::temp_directory_path() / "springerkit_cli_test";
    std::filesystem::create_directories(dir);
    std::ifstream in(std::filesystem::path(SPRINGERKIT_DATA_DIR) / "weyl_example.json");
    auto doc = Json::parse(in);
    doc["cuspidal_triples"][0]["W_expected"]["order"] = 4;
    const auto path = dir / "wrong_weyl.json";
    std::ofstream(path) << doc.dump();
    auto r = invoke({"series", "--datum", path.string()});
    CHECK(r.code == 2);
    CHECK(contains(r.err, "ExpectationMismatch"));

    doc = Json::parse(std::ifstream(std::filesystem::path(SPRINGERKIT_DATA_DIR) / "sl2_s3.json"));
    doc["gamma"][0]["modules"][0]["targets"] = Json::array({"IC1", "IC3"});
    std::ofstream(path) << doc.dump();
    auto g = invoke({"gamma", "--datum", path.string()});
    CHECK(g.code == 2);
    CHECK(contains(g.out, "MISMATCH"));
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("fixture invocations are deterministic and seed independent") {
    for (const auto& args : fixture_invocations()) {
      CAPTURE(args[0]);
      CAPTURE(args[2]);
      auto a = invoke(args);
      auto b = invoke(args);
      CHECK(a.out == b.out);
      CHECK(a.code == b.code);

      auto json_args = args;
      json_args.insert(json_args.end(), {"--format", "json"});
      auto s0 = json_args, s1 = json_args;
      s0.insert(s0.end(), {"--seed", "0"});
      s1.insert(s1.end(), {"--seed", "1"});
      auto j0 = invoke(s0), j1 = invoke(s1);
      CHECK(j0.code == j1.code);
      auto d0 = Json::parse(j0.out), d1 = Json::parse(j1.out);
      CHECK(d0["seed"] == 0);
      CHECK(d1["seed"] == 1);
      CHECK(d0["result"] == d1["result"]);
      CHECK(d0["status"] == d1["status"]);
    }
  }

  TEST_CASE("json output round-trips") {
    for (const auto& args : fixture_invocations()) {
      auto a = args;
      a.insert(a.end(), {"--format", "json"});
      auto r = invoke(a);
      auto doc = Json::parse(r.out);
      CHECK(Json::parse(doc.dump()) == doc);
      CHECK(doc.dump(2) + "\n" == r.out);
      for (const char* key : {"command", "datum", "field", "seed", "notes", "result", "status"})
        CHECK(doc.contains(key));
      CHECK(doc["command"] == args[0]);
    }
  }
}
