// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// End-to-end checks of the command-line binary: documents, exit codes, and
// the byte-stable round trip of the checked-in fixture.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

#include <json.hpp>

#include "laminar_match/json_io.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(LAMINAR_MATCH_CLI_PATH) + " " + args +
                          " 2>/dev/null";
  std::array<char, 4096> buffer{};
  RunResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.out.append(buffer.data(), got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string fixture(const std::string& name) {
  return (fs::path(LAMINAR_MATCH_FIXTURE_DIR) / name).string();
}

fs::path temp_file(const std::string& name) {
  return fs::temp_directory_path() / ("laminar_match_test_" + name);
}

}  // namespace

TEST_CASE("solve emits the result document") {
  const RunResult r = run("solve --algo three-halves " + fixture("t2.json"));
  REQUIRE(r.exit_code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["algorithm"] == "three-halves");
  CHECK(doc["cardinality"] == 2);
  CHECK(doc["stable"] == true);
  CHECK(doc["matching"] == json::array({"e2", "e3"}));
  CHECK(doc["iterations"].is_number_integer());
  CHECK(doc["elapsed_ms"].is_number());
}

TEST_CASE("solve with tie-breaking shows the cardinality gap on the fixture") {
  const RunResult r = run("solve --algo tiebreak " + fixture("t2.json"));
  REQUIRE(r.exit_code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["cardinality"] == 1);
  CHECK(doc["matching"] == json::array({"e1"}));
  CHECK(doc["stable"] == true);
}

TEST_CASE("solve: missing file exits 2, bad usage exits 1") {
  CHECK(run("solve /nonexistent/missing.json").exit_code == 2);
  CHECK(run("solve --algo bogus " + fixture("t2.json")).exit_code == 1);
  CHECK(run("frobnicate").exit_code == 1);
}

TEST_CASE("check judges a result document") {
  const fs::path result = temp_file("result.json");
  laminar_match::write_text_file(result, R"({"matching": ["e2", "e3"]})");
  const RunResult good =
      run("check " + fixture("t2.json") + " " + result.string());
  REQUIRE(good.exit_code == 0);
  CHECK(json::parse(good.out)["stable"] == true);

  laminar_match::write_text_file(result, R"({"matching": ["e3"]})");
  const RunResult bad =
      run("check " + fixture("t2.json") + " " + result.string());
  REQUIRE(bad.exit_code == 0);
  const json doc = json::parse(bad.out);
  CHECK(doc["stable"] == false);
  CHECK(doc["blocking"] == json::array({"e2"}));

  laminar_match::write_text_file(result, R"({"matching": ["e9"]})");
  CHECK(run("check " + fixture("t2.json") + " " + result.string()).exit_code ==
        2);
}

TEST_CASE("transform emits the tripled instance and a copy map") {
  const fs::path aux_path = temp_file("aux.json");
  const fs::path map_path = temp_file("copymap.json");
  const RunResult r =
      run("transform " + fixture("t2.json") + " --json-out " +
          aux_path.string() + " --copy-map-out " + map_path.string());
  REQUIRE(r.exit_code == 0);
  const laminar_match::Instance aux = laminar_match::load_instance(aux_path);
  CHECK(aux.num_contracts() == 9);
  CHECK(laminar_match::validate(aux).empty());
  const json map = json::parse(laminar_match::read_text_file(map_path));
  CHECK(map["e1"]["x"] == "e1.x");
  CHECK(map["e1"]["y"] == "e1.y");
  CHECK(map["e1"]["z"] == "e1.z");
  CHECK(map.size() == 3);
}

TEST_CASE("transform output matches the golden files") {
  const RunResult r = run("transform " + fixture("t2.json"));
  REQUIRE(r.exit_code == 0);
  CHECK(r.out == laminar_match::read_text_file(fixture("t2.aux.json")));
  const fs::path map_path = temp_file("golden_map.json");
  const RunResult with_map = run("transform " + fixture("t2.json") +
                                 " --copy-map-out " + map_path.string());
  REQUIRE(with_map.exit_code == 0);
  CHECK(laminar_match::read_text_file(map_path) ==
        laminar_match::read_text_file(fixture("t2.copymap.json")));
}

TEST_CASE("oracle reports counts, the optimum, and verdicts") {
  const RunResult r = run("oracle --emit-all " + fixture("t2.json"));
  REQUIRE(r.exit_code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["stable_count"] == 2);
  CHECK(doc["opt"] == 2);
  CHECK(doc["stable_matchings"].size() == 2);
  bool three_ok = false, two_ok = false;
  for (const json& v : doc["verdicts"]) {
    if (v["algorithm"] == "three-halves") three_ok = v["ok"];
    if (v["algorithm"] == "tiebreak") two_ok = v["ok"];
  }
  CHECK(three_ok);
  CHECK(two_ok);
}

TEST_CASE("gen emits a parseable canonical document") {
  const RunResult r =
      run("gen --workers 2 --firms 2 --contracts 6 --tie-prob 0.5 --depth 2 "
          "--seed 9");
  REQUIRE(r.exit_code == 0);
  const laminar_match::Instance inst = laminar_match::parse_instance(r.out);
  CHECK(inst.num_contracts() == 6);
  CHECK(laminar_match::serialize_instance(inst) == r.out);
  // Same seed, same bytes.
  CHECK(run("gen --workers 2 --firms 2 --contracts 6 --tie-prob 0.5 "
            "--depth 2 --seed 9")
            .out == r.out);
}

TEST_CASE("the checked-in fixture is in canonical form") {
  const std::string text =
      laminar_match::read_text_file(fixture("t2.json"));
  const laminar_match::Instance inst = laminar_match::parse_instance(text);
  CHECK(laminar_match::serialize_instance(inst) == text);
}

TEST_CASE("bench smoke run emits rows") {
  const RunResult r = run("bench --sizes 24 --seeds-per-size 2 --depth 2");
  REQUIRE(r.exit_code == 0);
  const json doc = json::parse(r.out);
  REQUIRE(doc["rows"].size() == 1);
  CHECK(doc["rows"][0]["size"] == 24);
}
