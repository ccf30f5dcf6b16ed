#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "tropgr/cli.hpp"
#include "tropgr/extrat.hpp"
#include "tropgr/newick.hpp"
#include "tropgr/pairs.hpp"
#include "tropgr/tree.hpp"
#include "tropgr/trop_point.hpp"

using namespace tropgr;

namespace {

struct RunResult {
  int code = 0;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  RunResult r;
  r.code = cli_run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string temp_file(const std::string& name, const std::string& text) {
  const std::filesystem::path p = std::filesystem::temp_directory_path() / name;
  std::ofstream f(p, std::ios::binary | std::ios::trunc);
  f << text;
  return p.string();
}

TropPoint quartet_point(const Pair& c1, const Pair& c2,
                        const std::set<Pair>& J = {}) {
  std::map<Pair, ExtRat> e;
  for (const Pair& kl : all_pairs(4)) {
    if (J.count(kl)) {
      e.emplace(kl, ExtRat::neg_inf());
      continue;
    }
    e.emplace(kl, ExtRat(Rat(kl == c1 || kl == c2 ? 0 : 1)));
  }
  return TropPoint(4, e);
}

TropPoint invalid_point() {
  std::map<Pair, ExtRat> e;
  for (const Pair& kl : all_pairs(4))
    e.emplace(kl, ExtRat(Rat(kl == Pair{2, 4} ? 1 : 0)));
  return TropPoint(4, e);
}

// Caterpillar with cherries {1,2} and {4,5}, leaf 3 in the middle.
PhyloTree caterpillar5() {
  PhyloTree t;
  t.n = 5;
  t.vertex_count = 8;
  t.edges.push_back({0, 5, Rat(1)});
  t.edges.push_back({1, 5, Rat(1, 2)});
  t.edges.push_back({5, 6, Rat(1)});
  t.edges.push_back({2, 6, Rat(0)});
  t.edges.push_back({6, 7, Rat(2)});
  t.edges.push_back({3, 7, Rat(3)});
  t.edges.push_back({4, 7, Rat(1)});
  return t;
}

std::string good4_path() {
  static const std::string p = temp_file(
      "tropgr_cli_q1234.json", metric_to_json(quartet_point(Pair{1, 2}, Pair{3, 4})));
  return p;
}

std::string bad4_path() {
  static const std::string p =
      temp_file("tropgr_cli_bad.json", metric_to_json(invalid_point()));
  return p;
}

}  // namespace

TEST_CASE("check-metric verdicts and errors") {
  RunResult r = run({"check-metric", good4_path()});
  CHECK(r.code == 0);
  CHECK(r.out == "ok\n");
  CHECK(r.err.empty());

  r = run({"check-metric", good4_path(), "--json"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out) == nlohmann::json::parse("{\"ok\": true}"));

  r = run({"check-metric", bad4_path()});
  CHECK(r.code == 1);
  CHECK(r.out == "violation at quartet 1,2,3,4\n");

  r = run({"check-metric", bad4_path(), "--json"});
  CHECK(r.code == 1);
  nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc["ok"] == false);
  CHECK(doc["witness"] == nlohmann::json::parse("[1,2,3,4]"));

  const std::string broken = temp_file("tropgr_cli_broken.json", "{\"n\": 4");
  r = run({"check-metric", broken});
  CHECK(r.code == 2);
  CHECK(r.err.find("at byte") != std::string::npos);

  r = run({"check-metric", "/nonexistent/input.json"});
  CHECK(r.code == 2);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("tree infer") {
  RunResult r = run({"tree", "infer", good4_path()});
  CHECK(r.code == 0);
  CHECK(r.out == "topology: (2,(3,4))\ntrivalent: true\nvanishing: -\n");

  r = run({"tree", "infer", good4_path(), "--json"});
  CHECK(r.code == 0);
  nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc["topology"] == "(2,(3,4))");
  CHECK(doc["trivalent"] == true);
  CHECK(doc["vanishing"].is_array());
  CHECK(doc["vanishing"].empty());

  const std::string boundary = temp_file(
      "tropgr_cli_boundary.json",
      metric_to_json(quartet_point(Pair{1, 2}, Pair{3, 4}, {Pair{3, 4}})));
  r = run({"tree", "infer", boundary});
  CHECK(r.code == 0);
  CHECK(r.out.find("vanishing: 3,4\n") != std::string::npos);

  r = run({"tree", "infer", bad4_path()});
  CHECK(r.code == 1);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("metric from-tree") {
  const PhyloTree t = caterpillar5();
  const std::string nwk = newick_print(t);
  const std::string expect = metric_to_json(metric_from_tree(t)) + "\n";

  const std::string path = temp_file("tropgr_cli_tree.nwk", nwk);
  RunResult r = run({"metric", "from-tree", path});
  CHECK(r.code == 0);
  CHECK(r.out == expect);

  r = run({"metric", "from-tree", path, "--json"});
  CHECK(r.out == expect);

  // "-" reads the tree from stdin.
  std::istringstream fake(nwk);
  std::streambuf* old = std::cin.rdbuf(fake.rdbuf());
  r = run({"metric", "from-tree", "-"});
  std::cin.rdbuf(old);
  CHECK(r.code == 0);
  CHECK(r.out == expect);

  const std::string garbage = temp_file("tropgr_cli_garbage.nwk", "((1,2,);");
  r = run({"metric", "from-tree", garbage});
  CHECK(r.code == 2);
  CHECK(r.err.find("at byte") != std::string::npos);
}

TEST_CASE("section eval") {
  RunResult r = run({"section", "eval", good4_path(), "-f", "u_2_4"});
  CHECK(r.code == 0);
  CHECK(r.out == "1\n");

  r = run({"section", "eval", good4_path(), "-f", "u_2_4", "--json"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["value"] == "1");

  r = run({"section", "eval", good4_path(), "-f", "u_2_4", "--ij", "1,3"});
  CHECK(r.code == 0);
  CHECK(r.out == "0\n");

  // The quadratic collapses to the anchored u_3_4, an exact cancellation the
  // naive monomial maximum (value 2) would miss.
  r = run({"section", "eval", good4_path(), "-f",
           "u_1_3*u_2_4 - u_1_4*u_2_3"});
  CHECK(r.code == 0);
  CHECK(r.out == "0\n");

  const std::string boundary = temp_file(
      "tropgr_cli_boundary2.json",
      metric_to_json(quartet_point(Pair{1, 2}, Pair{3, 4}, {Pair{3, 4}})));
  r = run({"section", "eval", boundary, "-f", "u_3_4^-1"});
  CHECK(r.code == 2);
  CHECK_FALSE(r.err.empty());

  r = run({"section", "eval", bad4_path(), "-f", "u_2_4"});
  CHECK(r.code == 2);

  r = run({"section", "eval", good4_path(), "-f", "u_1_"});
  CHECK(r.code == 2);
  CHECK(r.err.find("at byte") != std::string::npos);

  r = run({"section", "eval", good4_path(), "-f", "u_2_4", "--ij", "1;3"});
  CHECK(r.code == 2);
}

TEST_CASE("section verify and glue") {
  RunResult r = run({"section", "verify", good4_path()});
  CHECK(r.code == 0);
  CHECK(r.out == "ok\n");

  r = run({"section", "verify", good4_path(), "--json"});
  nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc["ok"] == true);
  CHECK(doc["detail"] == "");

  r = run({"section", "verify", bad4_path()});
  CHECK(r.code == 2);

  r = run({"section", "glue", good4_path(), "--ij", "1,2", "--pq", "1,3"});
  CHECK(r.code == 0);
  CHECK(r.out == "ok\n");

  r = run({"section", "glue", good4_path(), "--ij", "1,2", "--pq", "1,3",
           "--json"});
  CHECK(nlohmann::json::parse(r.out)["ok"] == true);

  r = run({"section", "glue", good4_path(), "--ij", "1,2"});
  CHECK(r.code == 2);  // missing --pq
}

TEST_CASE("initial-ideal") {
  const std::string interior = temp_file(
      "tropgr_cli_interior.json",
      metric_to_json(quartet_point(Pair{1, 4}, Pair{2, 3})));
  RunResult r = run({"initial-ideal", interior});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "anchor: 1,2\n"
        "J: -\n"
        "I: 1,3 1,4 2,3 2,4\n"
        "generators: 1\n"
        "u_3_4 - u_1_3*u_2_4\n");

  r = run({"initial-ideal", interior, "--json"});
  CHECK(r.code == 0);
  nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc["verdict"] == "multiplicity_one");
  CHECK(doc["ij"] == "1,2");
  CHECK(doc["J"].empty());
  CHECK(doc["I"] == nlohmann::json::parse("[\"1,3\",\"1,4\",\"2,3\",\"2,4\"]"));
  CHECK(doc["generators"] ==
        nlohmann::json::parse("[\"u_3_4 - u_1_3*u_2_4\"]"));

  r = run({"initial-ideal", bad4_path()});
  CHECK(r.code == 1);
  CHECK(r.out == "unit ideal\n");

  r = run({"initial-ideal", bad4_path(), "--json"});
  CHECK(r.code == 1);
  CHECK(nlohmann::json::parse(r.out)["verdict"] == "unit_ideal");
}

TEST_CASE("multiplicity") {
  RunResult r = run({"multiplicity", good4_path()});
  CHECK(r.code == 0);
  CHECK(r.out == "multiplicity: 1\n");

  r = run({"multiplicity", good4_path(), "--json"});
  nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc["verdict"] == "multiplicity_one");
  CHECK(doc["multiplicity"] == 1);

  r = run({"multiplicity", bad4_path()});
  CHECK(r.code == 1);
  CHECK(r.out == "unit ideal (multiplicity 0)\n");

  r = run({"multiplicity", bad4_path(), "--json"});
  CHECK(r.code == 1);
  doc = nlohmann::json::parse(r.out);
  CHECK(doc["verdict"] == "unit_ideal");
  CHECK(doc["multiplicity"] == 0);
}

TEST_CASE("gr24-catalog") {
  RunResult r = run({"gr24-catalog"});
  CHECK(r.code == 0);
  std::vector<std::string> lines;
  std::istringstream in(r.out);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  REQUIRE(lines.size() == 28);
  CHECK(lines[0] ==
        "interior-14|23 | J: - | I: 1,3 1,4 2,3 2,4 | "
        "gens: u_3_4 - u_1_3*u_2_4");

  // Byte-identical reruns.
  CHECK(run({"gr24-catalog"}).out == r.out);
  const RunResult rj = run({"gr24-catalog", "--json"});
  CHECK(rj.code == 0);
  CHECK(run({"gr24-catalog", "--json"}).out == rj.out);

  nlohmann::json doc = nlohmann::json::parse(rj.out);
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == 28);
  CHECK(doc[0] == nlohmann::json::parse(
                      R"({"case":"interior-14|23","J":[],"ij":"1,2",)"
                      R"("I":["1,3","1,4","2,3","2,4"],)"
                      R"("generators":["u_3_4 - u_1_3*u_2_4"]})"));

  bool saw_star = false, saw_cherry2 = false;
  for (const auto& entry : doc) {
    if (entry["case"] == "star") {
      saw_star = true;
      CHECK(entry["J"].empty());
      CHECK(entry["I"] ==
            nlohmann::json::parse("[\"1,3\",\"1,4\",\"2,3\",\"3,4\"]"));
      CHECK(entry["generators"] ==
            nlohmann::json::parse(
                "[\"u_2_4 - u_1_3^-1*u_3_4 - u_1_3^-1*u_1_4*u_2_3\"]"));
    }
    if (entry["case"] == "cherry-J2") {
      saw_cherry2 = true;
      CHECK(entry["J"] ==
            nlohmann::json::parse("[\"1,4\",\"2,4\",\"3,4\"]"));
      CHECK(entry["generators"].empty());
    }
  }
  CHECK(saw_star);
  CHECK(saw_cherry2);
}

TEST_CASE("fan") {
  RunResult r = run({"fan", "--n", "5"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "vertices: 10\n"
        "edges: 15\n"
        "regular: true\n"
        "girth: 5\n"
        "petersen: true\n");
  CHECK(run({"fan"}).out == r.out);

  r = run({"fan", "--n", "4"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "vertices: 6\n"
        "edges: 0\n"
        "regular: true\n"
        "girth: 0\n"
        "petersen: false\n");

  r = run({"fan", "--n", "5", "--json"});
  CHECK(r.code == 0);
  nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc["vertices"].size() == 10);
  CHECK(doc["edges"].size() == 15);
  CHECK(doc["checks"]["petersen"] == true);

  r = run({"fan", "--n", "8"});
  CHECK(r.code == 2);
}

TEST_CASE("fiber-check") {
  RunResult r = run({"fiber-check", "--n", "4", "--seed", "7", "--count", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("rounds: 2\nmatrices: 6\n") == 0);
  CHECK(r.out.find("ok: true\n") != std::string::npos);
  CHECK(run({"fiber-check", "--n", "4", "--seed", "7", "--count", "2"}).out ==
        r.out);

  r = run({"fiber-check", "--n", "4", "--seed", "7", "--count", "2",
           "--json"});
  CHECK(r.code == 0);
  nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc["rounds"] == 2);
  CHECK(doc["matrices"] == 6);
  CHECK(doc["checks"] > 0);
  CHECK(doc["ok"] == true);
  CHECK(doc["failures"].empty());

  r = run({"fiber-check", "--n", "9"});
  CHECK(r.code == 2);
}

TEST_CASE("descent-check") {
  RunResult r =
      run({"descent-check", good4_path(), "--lambda", "1,-2,1/2,3"});
  CHECK(r.code == 0);
  CHECK(r.out == "descends: true\n");

  r = run({"descent-check", good4_path(), "--lambda", "1,-2,1/2,3",
           "--json"});
  CHECK(nlohmann::json::parse(r.out)["ok"] == true);

  r = run({"descent-check", good4_path(), "--lambda", "1,2"});
  CHECK(r.code == 2);

  r = run({"descent-check", good4_path(), "--lambda", "a,b,c,d"});
  CHECK(r.code == 2);
}

TEST_CASE("usage errors and help") {
  RunResult r = run({});
  CHECK(r.code == 2);
  CHECK_FALSE(r.err.empty());

  r = run({"bogus-subcommand"});
  CHECK(r.code == 2);

  r = run({"check-metric"});
  CHECK(r.code == 2);

  r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("tropgr") != std::string::npos);
  CHECK(r.out.find("gr24-catalog") != std::string::npos);
}
