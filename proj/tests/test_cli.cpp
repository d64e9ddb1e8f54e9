// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "kazhdan/cli.hpp"

namespace fs = std::filesystem;
using kazhdan::cli::run;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
  json result() const { return json::parse(out).at("result"); }
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("kazhdan-cli-" + std::to_string(::getpid()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name, const std::string& contents = {}) const {
    const fs::path p = path_ / name;
    if (!contents.empty()) std::ofstream(p) << contents;
    return p.string();
  }

 private:
  fs::path path_;
};

const char* kZ5 = R"({
  "vertices": ["1", "2", "3", "4"],
  "inverse": {"1": "4", "2": "3", "3": "2", "4": "1"},
  "products": [["1","2","1"],["2","1","4"],["1","3","2"],["3","1","3"],["1","4","3"],["4","1","2"],
               ["2","3","1"],["3","2","4"],["2","4","2"],["4","2","3"],["3","4","1"],["4","3","4"]]
})";

}  // namespace

TEST_CASE("a2 reports the headline numbers") {
  const Outcome o = invoke({"a2", "--q", "13"});
  REQUIRE(o.code == 0);
  const json r = o.result();
  CHECK(r["p_max"].get<double>() == doctest::Approx(2.10609207).epsilon(1e-8));
  CHECK(r["kappa2"].get<double>() == doctest::Approx(1.16054848).epsilon(1e-8));
  CHECK(r["alpha_threshold"].get<double>() == doctest::Approx(0.474813).epsilon(1e-5));
  CHECK(json::parse(o.out)["config"]["q"] == "13");
  CHECK(json::parse(o.out)["config"]["restarts"] == 32);

  const Outcome big = invoke({"a2", "--q", "2^100"});
  REQUIRE(big.code == 0);
  CHECK(big.result()["p_max"].get<double>() < 2.01);
}

TEST_CASE("exit codes") {
  CHECK(invoke({"a2", "--q", "6"}).code == 2);
  CHECK(invoke({"a2", "--q", "abc"}).code != 0);
  CHECK(invoke({}).code == 64);
  CHECK(invoke({"frobnicate"}).code == 64);
  CHECK(invoke({"a2"}).code == 64);
  CHECK(invoke({"--help"}).code == 0);
  CHECK(invoke({"certify", "/nonexistent/graph.json"}).code == 1);

  TempDir dir;
  CHECK(invoke({"certify", dir.file("bad.json", "{\"vertices\": [")}).code == 1);
  const std::string split = dir.file(
      "split.json", R"({"vertices": ["a","b","c","d"], "edges": [{"u":"a","v":"b","w":1},{"u":"c","v":"d","w":1}]})");
  CHECK(invoke({"certify", split}).code == 2);
  CHECK(invoke({"plaplacian", split}).code == 2);
  const Outcome no_inverse = invoke({"link-graph", split});
  CHECK(no_inverse.code == 2);
  CHECK_FALSE(no_inverse.err.empty());
}

TEST_CASE("reports are byte-identical across repeated runs") {
  TempDir dir;
  const std::string fano = dir.file("fano.json");
  REQUIRE(invoke({"a2", "--q", "2", "--emit-graph", fano}).code == 0);
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"kappa", fano, "--p", "3", "--method", "optimize", "--restarts", "4", "--seed", "9"},
        std::vector<std::string>{"plaplacian", fano, "--p", "3", "--restarts", "4"},
        std::vector<std::string>{"scan-a2", "--q-max", "200"}}) {
    const Outcome a = invoke(args);
    const Outcome b = invoke(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("certify, confdim and kappa on the Fano graph") {
  TempDir dir;
  const std::string fano = dir.file("fano.json");
  REQUIRE(invoke({"a2", "--q", "2", "--emit-graph", fano}).code == 0);

  const json c = invoke({"certify", fano, "--p", "2"}).result();
  CHECK(c["verdict"] == "pass");
  CHECK(c["kappa_p_method"] == "eigen");
  CHECK(c["condition_p"].get<double>() == doctest::Approx(0.9725754).epsilon(1e-7));

  // The interpolation certificate passes inside the range and not beyond it.
  CHECK(invoke({"certify", fano, "--p", "2.03"}).result()["verdict"] == "pass");
  CHECK(invoke({"certify", fano, "--p", "2.2"}).result()["verdict"] == "inconclusive");
  // Optimizer values never certify a pass; at p = 2 the eigen upper bound is used instead.
  CHECK(invoke({"certify", fano, "--p", "2.03", "--kappa-method", "optimize", "--restarts", "4"})
            .result()["verdict"] != "pass");
  CHECK(invoke({"certify", fano, "--p", "2", "--kappa-method", "optimize", "--restarts", "4"})
            .result()["kappa_p_method"] == "eigen");

  const json d = invoke({"confdim", fano}).result();
  CHECK(d["confdim_lower_bound"].get<double>() == doctest::Approx(2.0372145).epsilon(1e-7));

  const json k = invoke({"kappa", fano, "--p", "2"}).result();
  CHECK(k["method"] == "eigen");
  CHECK(k["lower"].get<double>() == doctest::Approx(1.37542932).epsilon(1e-8));
  CHECK(invoke({"kappa", fano, "--p", "2", "--method", "brute"}).code == 2);
}

TEST_CASE("link graph round trip") {
  TempDir dir;
  const std::string spec = dir.file("z5.json", kZ5);
  const std::string link = dir.file("link.json");
  const Outcome built = invoke({"link-graph", spec, "--output", link});
  REQUIRE(built.code == 0);
  CHECK(built.result()["graph"]["edges"] == 6);
  CHECK(built.result()["connected"] == true);
  const Outcome adm = invoke({"check-admissible", link});
  REQUIRE(adm.code == 0);
  CHECK(adm.result()["admissible"] == true);

  const json linkdoc = json::parse(std::ifstream(link));
  CHECK(linkdoc["edges"].size() == 6);

  const std::string group = dir.file("z5group.json", R"({
    "elements": ["0","1","2","3","4"],
    "table": [[0,1,2,3,4],[1,2,3,4,0],[2,3,4,0,1],[3,4,0,1,2],[4,0,1,2,3]],
    "images": {"1": 1, "2": 2, "3": 3, "4": 4}
  })");
  const Outcome cay = invoke({"cayley", group, "--link", link, "--check-bound", "--p", "2"});
  REQUIRE(cay.code == 0);
  const json r = cay.result();
  CHECK(r["quotient_bound"]["claimed"] == true);
  CHECK(r["quotient_bound"]["holds_stated"] == true);
}

TEST_CASE("human format") {
  const Outcome o = invoke({"a2", "--q", "13", "--format", "human"});
  REQUIRE(o.code == 0);
  CHECK(o.out.find("2.10609") != std::string::npos);
  CHECK_FALSE(json::accept(o.out));
  CHECK(invoke({"--format", "human", "a2", "--q", "13"}).out == o.out);
}
