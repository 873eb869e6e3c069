// Copyright 2026 The Kissing Polynomials Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "doctest.h"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "kissing/real.hpp"

using Json = nlohmann::ordered_json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = kp::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::istringstream is(text);
  for (std::string s; std::getline(is, s);) v.push_back(s);
  return v;
}

std::vector<std::string> split(const std::string& row) {
  std::vector<std::string> v;
  std::istringstream is(row);
  for (std::string s; std::getline(is, s, ',');) v.push_back(s);
  return v;
}

}  // namespace

TEST_CASE("hankel at omega = 0") {
  const auto r = run({"hankel", "--n", "1", "--omega", "0"});
  REQUIRE(r.code == 0);
  const Json doc = Json::parse(r.out);
  kp::WorkingPrecision wp(256);
  const kp::Real h(std::string_view(doc["result"]["h"].get<std::string>()));
  CHECK(abs(h - kp::Real(4) / 3) < kp::Real(1e-70));
}

TEST_CASE("provenance records the effective flags") {
  const auto r = run({"--bits", "128", "moments", "--n", "3", "--omega", "2.5"});
  REQUIRE(r.code == 0);
  const Json doc = Json::parse(r.out);
  const Json& prov = doc["provenance"];
  CHECK(prov["program"] == "kissing");
  CHECK(prov["command"] == "moments");
  CHECK(prov["bits"] == 128);
  CHECK(prov["flags"]["--n"] == "3");
  CHECK(prov["flags"]["--omega"] == "2.5");
  CHECK(prov["flags"]["--format"] == "auto");
  CHECK(doc["result"]["moments"].size() == 4);

  // Replaying the recorded flags reproduces the output byte for byte.
  std::vector<std::string> replay;
  for (const auto& [name, value] : prov["flags"].items()) {
    if (name == "--n" || name == "--omega") continue;
    replay.push_back(name);
    replay.push_back(value.get<std::string>());
  }
  replay.insert(replay.end(), {"moments", "--n", "3", "--omega", "2.5"});
  CHECK(run(replay).out == r.out);
}

TEST_CASE("output is deterministic across thread counts") {
  const auto a = run({"--threads", "1", "scan", "--n", "2", "--range", "1:12", "--grid", "300"});
  const auto b = run({"--threads", "4", "scan", "--n", "2", "--range", "1:12", "--grid", "300"});
  REQUIRE(a.code == 0);
  REQUIRE(b.code == 0);
  auto strip = [](const std::string& s) {
    std::string kept;
    for (const auto& l : lines(s)) {
      if (l.rfind("# flags", 0) != 0) kept += l + "\n";
    }
    return kept;
  };
  CHECK(strip(a.out) == strip(b.out));
  CHECK(run({"--threads", "4", "scan", "--n", "2", "--range", "1:12", "--grid", "300"}).out == b.out);
}

TEST_CASE("scan finds the zeros of h_0") {
  const auto r = run({"scan", "--n", "0", "--range", "1:10", "--grid", "1000"});
  REQUIRE(r.code == 0);
  std::vector<std::string> data;
  for (const auto& l : lines(r.out)) {
    if (!l.empty() && l[0] != '#') data.push_back(l);
  }
  REQUIRE(data.size() == 4);
  CHECK(data[0] == "n,re,im,kind,residual,suspected_double");
  kp::WorkingPrecision wp(256);
  for (int k = 1; k <= 3; ++k) {
    const auto f = split(data[static_cast<size_t>(k)]);
    REQUIRE(f.size() == 6);
    CHECK(abs(kp::Real(std::string_view(f[1])) - kp::pi() * k) < kp::Real(1e-20));
    CHECK(f[3] == "real");
  }
}

TEST_CASE("trajectory csv schema") {
  const auto r = run({"trajectory", "--n", "3", "--omega-range", "0:2", "--steps", "4"});
  REQUIRE(r.code == 0);
  std::vector<std::string> data;
  for (const auto& l : lines(r.out)) {
    if (!l.empty() && l[0] != '#') data.push_back(l);
  }
  REQUIRE(data.size() == 1 + 5 * 3);
  CHECK(data[0] == "omega,root_index,re,im,exists_flag");
  for (size_t i = 1; i < data.size(); ++i) {
    const auto f = split(data[i]);
    REQUIRE(f.size() == 5);
    CHECK(f[1] == std::to_string((i - 1) % 3));
    CHECK(f[4] == "1");
  }
}

TEST_CASE("verify toda") {
  const auto r = run({"--format", "json", "verify", "--suite", "toda", "--tol", "1e-20"});
  CHECK(r.code == 0);
  const Json doc = Json::parse(r.out);
  CHECK(doc["result"]["pass"] == true);
  CHECK(doc["result"]["results"][0]["id"] == 2);
}

TEST_CASE("usage and numeric errors") {
  CHECK(run({}).code == 1);
  CHECK(run({"hankel", "--n", "1"}).code == 1);
  CHECK(run({"hankel", "--n", "1", "--omega", "abc"}).code == 1);
  CHECK(run({"scan", "--n", "1", "--range", "5:1"}).code == 1);
  CHECK(run({"--bits", "32", "hankel", "--n", "1", "--omega", "1"}).code == 1);
  CHECK(run({"verify", "--suite", "nonsense"}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);

  // p_1 does not exist where h_0 vanishes.
  const auto singular = run({"poly", "--n", "1", "--omega", "3.14159265358979323846264338327950288419716939937510582097494459"});
  CHECK(singular.code == 1);
  CHECK(singular.err.rfind("error: ", 0) == 0);
  CHECK(singular.out.empty());
}

TEST_CASE("output file") {
  const std::string path = "test_cli_output.json";
  const auto r = run({"--out", path, "recurrence", "--m", "3", "--omega", "1"});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  const Json doc = Json::parse(in);
  CHECK(doc["result"]["alpha"].size() == 3);
  CHECK(doc["result"]["beta"].size() == 2);
  std::remove(path.c_str());
}
