#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "doctest.h"
#include "germcalc/cli.hpp"
#include "json.hpp"

using namespace germcalc;
namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string corpus_file(const std::string& stem) { return (default_corpus_dir() / "germs" / (stem + ".json")).string(); }
std::string data_file(const std::string& stem) { return (fs::path(GERMCALC_TEST_DATA) / (stem + ".json")).string(); }

// key -> value text from the table rendering.
std::map<std::string, std::string> parse_table(const std::string& text) {
  std::map<std::string, std::string> rows;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    const auto gap = line.find(' ');
    if (gap == std::string::npos) continue;
    const auto start = line.find_first_not_of(' ', gap);
    rows[line.substr(0, gap)] = start == std::string::npos ? "" : line.substr(start);
  }
  return rows;
}

}  // namespace

TEST_CASE("compute emits a JSON report") {
  const Result r = cli({"compute", corpus_file("s2"), "--format", "json"});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["muI"] == 2);
  CHECK(j["name"] == "s2");
  for (const char* field : {"r", "sigma", "coranks", "C", "T", "T_routes", "muD_per_point", "muD", "muSigma", "muI",
                            "chiF", "b0", "b1", "b2", "muD2", "muD2modS2", "smale", "cMinus3T", "regular", "consistency",
                            "assumptions", "provenance"}) {
    CHECK_MESSAGE(j.contains(field), field);
  }
}

TEST_CASE("compute with checks") {
  const Result r = cli({"compute", corpus_file("crosscap"), "--check"});
  CHECK(r.code == 0);
  CHECK(r.err.find("FAIL") == std::string::npos);
  CHECK(r.err.find("check parity_ok: pass") != std::string::npos);
  CHECK(r.err.find("check invariance") != std::string::npos);
}

TEST_CASE("exit codes") {
  const Result corank2 = cli({"compute", data_file("corank2")});
  CHECK(corank2.code == 4);
  CHECK(corank2.err.find("branch 'a'") != std::string::npos);
  CHECK(cli({"compute", data_file("not_finite")}).code == 3);
  CHECK(cli({"compute", data_file("bad_syntax")}).code == 2);
  CHECK(cli({"compute", data_file("missing_file")}).code == 2);
  CHECK(cli({"compute", corpus_file("s1"), "--format", "xml"}).code == 2);
  CHECK(cli({"compute", corpus_file("s1"), "--jet-bound", "70"}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("several files produce a JSON array in input order") {
  const Result r = cli({"compute", corpus_file("s1"), corpus_file("crosscap")});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  REQUIRE(j.is_array());
  CHECK(j[0]["name"] == "s1");
  CHECK(j[1]["name"] == "crosscap");
}

TEST_CASE("table and JSON carry the same numbers") {
  for (const char* stem : {"crosscap", "triple_planes", "crosscap_plane", "h2", "embedding"}) {
    const json j = json::parse(cli({"compute", corpus_file(stem)}).out);
    const auto t = parse_table(cli({"compute", corpus_file(stem), "--format", "table"}).out);
    for (const char* field : {"r", "sigma", "C", "T", "muD", "muSigma", "muI", "chiF", "b0", "b1", "b2", "muD2",
                              "muD2modS2", "cMinus3T"}) {
      if (!j.contains(field)) {
        CHECK(t.count(field) == 0);
        continue;
      }
      REQUIRE(t.count(field) == 1);
      CHECK_MESSAGE(std::stol(t.at(field)) == j[field].get<long>(), stem << " " << field);
    }
    std::string points;
    for (const auto& p : j["muD_per_point"]) {
      points += (points.empty() ? "" : " ") + p["point"].get<std::string>() + "=" + std::to_string(p["mu"].get<long>());
    }
    CHECK(t.at("muD_per_point") == points);
    CHECK(t.at("regular") == (j["regular"].get<bool>() ? "true" : "false"));
  }
}

TEST_CASE("output is identical across runs") {
  const std::vector<std::string> args{"compute", corpus_file("b2"), corpus_file("triple_planes"), "--check", "--seed", "9"};
  const Result a = cli(args);
  const Result b = cli(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.err == b.err);
}

TEST_CASE("corpus detects a corrupted golden file") {
  const fs::path tmp = fs::temp_directory_path() / "germcalc_corpus_test";
  fs::remove_all(tmp);
  fs::create_directories(tmp / "germs");
  fs::create_directories(tmp / "golden");
  for (const char* stem : {"crosscap", "transverse_planes"}) {
    fs::copy_file(default_corpus_dir() / "germs" / (std::string(stem) + ".json"), tmp / "germs" / (std::string(stem) + ".json"));
    fs::copy_file(default_corpus_dir() / "golden" / (std::string(stem) + ".json"),
                  tmp / "golden" / (std::string(stem) + ".json"));
  }
  CHECK(cli({"corpus", "--corpus-dir", tmp.string(), "--changes", "1"}).code == 0);

  std::ifstream in(tmp / "golden" / "crosscap.json");
  std::stringstream ss;
  ss << in.rdbuf();
  in.close();
  std::string text = ss.str();
  const auto pos = text.find("\"C\": 1");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 6, "\"C\": 2");
  std::ofstream(tmp / "golden" / "crosscap.json") << text;

  const Result r = cli({"corpus", "--corpus-dir", tmp.string(), "--changes", "1"});
  CHECK(r.code != 0);
  CHECK(r.out.find("golden MISMATCH") != std::string::npos);
  CHECK(r.out.find("-   \"C\": 2,") != std::string::npos);
  CHECK(r.out.find("+   \"C\": 1,") != std::string::npos);
  CHECK(r.out.find("ok   transverse_planes") != std::string::npos);
  fs::remove_all(tmp);
}
