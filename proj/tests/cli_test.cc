// Copyright 2026 The autoplex Authors
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

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "autoplex/cache.h"
#include "autoplex/cli.h"

namespace autoplex {
namespace {

namespace fs = std::filesystem;

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result Run(std::initializer_list<std::string> args) {
  std::vector<std::string> storage = {"autoplex"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : storage) argv.push_back(s.c_str());
  std::ostringstream out, err;
  const int status = Dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

fs::path TempDir() {
  const fs::path dir = fs::path(AUTOPLEX_TEST_TMPDIR);
  fs::create_directories(dir);
  return dir;
}

std::string Write(const std::string& name, const std::string& text) {
  const fs::path p = TempDir() / name;
  std::ofstream(p) << text;
  return p.string();
}

std::string Slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> Lines(const std::string& path) {
  std::vector<std::string> lines;
  std::ifstream in(path);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

TEST_CASE("bound") {
  const Result r = Run({"bound", "7"});
  CHECK(r.status == 0);
  CHECK(r.out == "4\n");
  CHECK(Run({"bound", "0"}).out == "1\n");
}

TEST_CASE("squarefree") {
  const Result r = Run({"squarefree", "0101"});
  CHECK(r.status == 0);
  CHECK(r.out == "false\n");
  CHECK(Run({"squarefree", "012021"}).out == "true\n");
}

TEST_CASE("complexity json") {
  const Result r = Run({"--no-cache", "complexity", "011", "--nfa", "--json"});
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["measure"] == "AN");
  CHECK(j["value"] == 2);
  CHECK(j["word"] == "011");
  CHECK(j["verified"] == true);
  CHECK(j["automaton"]["kind"] == "nfa");
}

TEST_CASE("complexity text and dot") {
  CHECK(Run({"--no-cache", "complexity", "0"}).out == "AN(0) = 1\n");
  CHECK(Run({"--no-cache", "complexity", "0", "--dfa"}).out == "A(0) = 2\n");
  CHECK(Run({"--no-cache", "complexity", "0011", "--dfa", "--partial"}).out ==
        "A(0011) = 3 (partial DFA)\n");
  CHECK(Run({"--no-cache", "complexity", "01", "--alphabet", "3"}).out == "AN(01) = 2\n");
  const std::string dot = (TempDir() / "w.dot").string();
  CHECK(Run({"--no-cache", "complexity", "010", "--dot", dot}).status == 0);
  CHECK(Slurp(dot).rfind("digraph nfa {", 0) == 0);
}

TEST_CASE("usage and domain errors") {
  CHECK(Run({}).status == kExitUsage);
  CHECK(Run({"frobnicate"}).status == kExitUsage);
  CHECK(Run({"complexity", "01", "--bogus"}).status == kExitUsage);
  CHECK(Run({"complexity", "01", "--nfa", "--dfa"}).status == kExitUsage);
  CHECK(Run({"complexity"}).status == kExitUsage);
  CHECK(Run({"--no-cache", "complexity", "01x"}).status == kExitDomainError);
  CHECK(Run({"--no-cache", "complexity", "012", "--alphabet", "2"}).status == kExitDomainError);
  CHECK(Run({"eqrel", "solve", "/nonexistent/e.json"}).status == kExitDomainError);
  CHECK(Run({"--help"}).status == kExitOk);
}

TEST_CASE("thue and survey") {
  CHECK(Run({"thue", "--length", "12"}).out == "012021012102\n");
  CHECK(Run({"survey", "--length", "2", "--alphabet", "2"}).out ==
        "00\t1\tfalse\n01\t2\ttrue\n10\t2\ttrue\n11\t1\tfalse\n");
  CHECK(Run({"survey", "--length", "2", "--json"}).out ==
        "{\"n\":2,\"k\":2,\"histogram\":{\"1\":2,\"2\":2},\"maximal\":[\"01\",\"10\"]}\n");
  CHECK(Run({"survey", "--length", "30", "--alphabet", "3"}).status == kExitDomainError);
}

TEST_CASE("simple") {
  CHECK(Run({"simple", "0000", "--eps", "1/4"}).out == "false\n");
  CHECK(Run({"simple", "0000", "--eps", "1/2"}).status == kExitDomainError);
  CHECK(Run({"simple", "0000", "--eps", "x"}).status == kExitUsage);
}

TEST_CASE("pump") {
  CHECK(Run({"pump", "word", "--v", "01", "--y", "1", "--n", "3"}).out == "0101011\n");
  CHECK(Run({"pump", "solve", "3", "4", "10"}).out == "2 1\n");
  const Result c1 = Run({"pump", "certify", "--v", "0", "--case1", "6"});
  CHECK(c1.status == 0);
  CHECK(c1.out == "word = 000000\nAN <= 1\n");
  const Result c2 = Run({"pump", "certify", "--v", "0", "--x", "1", "--case2", "2,3,1", "--json"});
  REQUIRE(c2.status == 0);
  const auto j = nlohmann::json::parse(c2.out);
  CHECK(j["word"] == "000111");
  CHECK(j["value"] == 5);
  CHECK(j["bounds_deterministic"] == false);
  CHECK(Run({"pump", "certify", "--v", "0", "--x", "1", "--case2", "3,5,1"}).status ==
        kExitDomainError);
  CHECK(Run({"pump", "certify", "--v", "0"}).status == kExitUsage);
}

TEST_CASE("reduce, solve and check") {
  const std::string cnf = Write("sat.cnf", "p cnf 1 1\n1 1 1 0\n");
  const std::string rel = (TempDir() / "sat.json").string();
  CHECK(Run({"reduce", cnf, "-o", rel}).status == 0);
  const Result solved = Run({"--no-cache", "eqrel", "solve", rel});
  CHECK(solved.status == 0);
  CHECK(solved.out == "AE = 9\nclasses = 9\nextra = 0\n");
  const Result by_sat = Run({"--no-cache", "eqrel", "solve", rel, "--engine", "sat", "--json"});
  REQUIRE(by_sat.status == 0);
  CHECK(nlohmann::json::parse(by_sat.out)["value"] == 9);

  const std::string good = (TempDir() / "good.json").string();
  const std::string bad = (TempDir() / "bad.json").string();
  CHECK(Run({"reduce", cnf, "--gadget", "benevolent", "--assign", "1", "-o", good}).status == 0);
  CHECK(Run({"reduce", cnf, "--gadget", "benevolent", "--assign", "0", "-o", bad}).status == 0);
  CHECK(Run({"eqrel", "check", rel, "--dfa", good}).out == "true\n");
  CHECK(Run({"eqrel", "check", rel, "--dfa", bad}).out.rfind("false\n", 0) == 0);
  CHECK(Run({"reduce", cnf, "--gadget", "benevolent"}).status == kExitUsage);
  CHECK(Run({"reduce", cnf, "--gadget", "sideways"}).status == kExitUsage);

  const std::string sample = Run({"reduce", cnf, "--sample"}).out;
  CHECK(nlohmann::json::parse(sample)["pairs"].size() == 20);
  const std::string two = Write("short.cnf", "p cnf 1 1\n1 0\n");
  CHECK(Run({"reduce", two}).status == kExitDomainError);
  CHECK(Run({"reduce", two, "--pad"}).status == 0);
}

TEST_CASE("malevolent gadget coheres with an unsatisfiable instance") {
  const std::string cnf = Write("unsat.cnf", "p cnf 2 2\n1 1 1 0\n-1 -1 -1 0\n");
  const std::string rel = (TempDir() / "unsat.json").string();
  const std::string mal = (TempDir() / "mal.json").string();
  CHECK(Run({"reduce", cnf, "-o", rel}).status == 0);
  CHECK(Run({"reduce", cnf, "--gadget", "malevolent", "-o", mal}).status == 0);
  CHECK(Run({"eqrel", "check", rel, "--dfa", mal}).out == "true\n");
  CHECK(Run({"--no-cache", "eqrel", "solve", rel}).out == "AE = 11\nclasses = 10\nextra = 1\n");
}

TEST_CASE("compose") {
  const std::string sat = Write("c_sat.cnf", "p cnf 1 1\n1 1 1 0\n");
  const std::string unsat = Write("c_unsat.cnf", "p cnf 2 2\n1 1 1 0\n-1 -1 -1 0\n");
  const Result r = Run({"compose", sat, unsat, "--k", "2", "--l", "1", "--report"});
  CHECK(r.status == 0);
  CHECK(r.out ==
        "phi1 satisfiable = true\nphi2 satisfiable = false\nclasses = 33\n"
        "predicted extra = 2\nconstructed states = 35\nconstructed coheres = true\n");
  const Result j = Run({"compose", sat, sat, "--k", "2", "--l", "1"});
  CHECK(nlohmann::json::parse(j.out)["classes"].size() == 31);
  CHECK(Run({"compose", sat, sat, "--k", "1", "--l", "1"}).status == kExitDomainError);
  CHECK(Run({"compose", sat, sat, "--k", "0", "--l", "1"}).status == kExitUsage);
}

TEST_CASE("cache reuse is byte-identical") {
  const std::string cache = (TempDir() / "reuse.jsonl").string();
  fs::remove(cache);
  const Result first = Run({"--cache", cache, "complexity", "0110", "--json"});
  const Result second = Run({"--cache", cache, "complexity", "0110", "--json"});
  const Result uncached = Run({"--no-cache", "complexity", "0110", "--json"});
  CHECK(first.status == 0);
  CHECK(first.out == second.out);
  CHECK(first.out == uncached.out);
  CHECK(Lines(cache).size() == 1);  // the hit does not append

  const std::string det = Run({"--cache", cache, "complexity", "0110", "--dfa"}).out;
  Run({"--cache", cache, "complexity", "0110", "--dfa", "--partial"});
  CHECK(Lines(cache).size() == 3);
  CHECK(Run({"--cache", cache, "complexity", "0110", "--dfa"}).out == det);
  CHECK(det == "A(0110) = 4\n");
  CHECK(Lines(cache).size() == 3);
}

TEST_CASE("cache path from the environment") {
  const std::string cache = (TempDir() / "env.jsonl").string();
  fs::remove(cache);
  ::setenv(kCacheEnvironmentVariable, cache.c_str(), 1);
  Run({"complexity", "011"});
  ::unsetenv(kCacheEnvironmentVariable);
  CHECK(Lines(cache).size() == 1);
}

TEST_CASE("corrupted cache lines are skipped") {
  const std::string cache = (TempDir() / "corrupt.jsonl").string();
  fs::remove(cache);
  const std::string expected = Run({"--cache", cache, "complexity", "0101", "--json"}).out;
  std::string line = Lines(cache).at(0);
  {
    std::ofstream out(cache, std::ios::trunc);
    out << "{not json\n" << line.substr(0, line.size() / 2) << "\n";
  }
  const Result r = Run({"--cache", cache, "complexity", "0101", "--json"});
  CHECK(r.status == 0);
  CHECK(r.out == expected);
  CHECK(r.err.find("warning: cache") != std::string::npos);
}

TEST_CASE("tampered witnesses are recomputed") {
  const std::string cache = (TempDir() / "tamper.jsonl").string();
  fs::remove(cache);
  const std::string expected = Run({"--cache", cache, "complexity", "0101", "--json"}).out;
  nlohmann::ordered_json entry = nlohmann::ordered_json::parse(Lines(cache).at(0));
  // A one-state witness with a matching digest still fails re-verification.
  auto& w = entry["witness"];
  w["value"] = 1;
  w["automaton"]["states"] = 1;
  w["automaton"]["accepting"] = {0};
  w["automaton"]["edges"] = {{0, 0, 0}, {0, 1, 0}};
  entry["value"] = 1;
  entry["witness_digest"] = Sha256Hex(w.dump());
  {
    std::ofstream out(cache, std::ios::trunc);
    out << entry.dump() << "\n";
  }
  const Result r = Run({"--cache", cache, "complexity", "0101", "--json"});
  CHECK(r.out == expected);
  CHECK(r.err.find("does not verify") != std::string::npos);
}

TEST_CASE("entries from another version are ignored") {
  const std::string cache = (TempDir() / "version.jsonl").string();
  fs::remove(cache);
  Run({"--cache", cache, "complexity", "00"});
  nlohmann::ordered_json entry = nlohmann::ordered_json::parse(Lines(cache).at(0));
  entry["version"] = "0.0.0";
  {
    std::ofstream out(cache, std::ios::trunc);
    out << entry.dump() << "\n";
  }
  CHECK(Run({"--cache", cache, "complexity", "00"}).out == "AN(00) = 1\n");
  const auto lines = Lines(cache);
  REQUIRE(lines.size() == 2);
  CHECK(nlohmann::json::parse(lines[1])["version"] == kToolkitVersion);
}

TEST_CASE("an unusable cache only warns") {
  const std::string dir = (TempDir() / "a_directory").string();
  fs::create_directories(dir);
  const Result r = Run({"--cache", dir, "complexity", "011"});
  CHECK(r.status == 0);
  CHECK(r.out == "AN(011) = 2\n");
  CHECK(r.err.find("warning: cache") != std::string::npos);
}

TEST_CASE("relation results are cached") {
  const std::string cnf = Write("cache_sat.cnf", "p cnf 1 1\n1 1 1 0\n");
  const std::string rel = (TempDir() / "cache_sat.json").string();
  Run({"reduce", cnf, "-o", rel});
  const std::string cache = (TempDir() / "rel.jsonl").string();
  fs::remove(cache);
  const std::string first = Run({"--cache", cache, "eqrel", "solve", rel, "--json"}).out;
  CHECK(Run({"--cache", cache, "eqrel", "solve", rel, "--json"}).out == first);
  CHECK(Lines(cache).size() == 1);
}

TEST_CASE("sha-256") {
  CHECK(Sha256Hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(Sha256Hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

}  // namespace
}  // namespace autoplex
