#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"

using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "zfort");
  std::ostringstream out, err;
  const int code = zfort::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) {
    if (l == line) return true;
  }
  return false;
}

void check_report_schema(const json& r) {
  for (const char* key : {"bound", "citation", "relation", "left", "right", "holds", "sharp", "inputs"}) {
    CHECK_MESSAGE(r.contains(key), key);
  }
  CHECK(r["left"].is_string());
  CHECK(r["right"].is_string());
  CHECK(r["holds"].is_boolean());
  CHECK(r["inputs"].is_array());
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("compute") {
    const Outcome pet = run({"compute", "--family", "petersen", "--all"});
    CHECK(pet.code == 0);
    CHECK(has_line(pet.out, "z=5"));
    CHECK(has_line(pet.out, "ft=2"));
    CHECK(has_line(pet.out, "zstar=5/2"));
    CHECK(has_line(pet.out, "forts=20"));

    const Outcome c5 = run({"compute", "--family", "cycle", "--n", "5", "--which", "zstar"});
    CHECK(c5.code == 0);
    CHECK(has_line(c5.out, "zstar=5/3"));

    const std::string path = "cli_test_p3.el";
    {
      std::ofstream f(path);
      f << "n 3\n0 1\n1 2\n";
    }
    const Outcome p3 = run({"compute", "--file", path, "--which", "z"});
    CHECK(p3.code == 0);
    CHECK(has_line(p3.out, "z=1"));
    std::remove(path.c_str());
  }

  TEST_CASE("compute json") {
    const Outcome r = run({"--format", "json", "compute", "--family", "petersen", "--all"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["z"] == 5);
    CHECK(j["ft"] == 2);
    CHECK(j["zstar"] == "5/2");
    CHECK(j["forts"].size() == 20);
    CHECK(j["forts"][0] == json::array({0, 1, 3, 8}));
    CHECK(j["invariants"]["uniform_k"] == 4);
    CHECK(j["invariants"]["regular_d"] == 8);
  }

  TEST_CASE("product battery") {
    const Outcome kp = run({"product", "--family", "complete", "--n", "3", "--family2", "path", "--n2", "4", "--battery"});
    CHECK(kp.code == 0);
    CHECK(kp.out.find("[PASS] g: ") != std::string::npos);
    CHECK(kp.out.find("| 3 >= 3 (sharp)") != std::string::npos);

    const Outcome pp = run({"--format", "json", "product", "--family", "path", "--n", "4", "--family2", "path", "--n2",
                            "4", "--battery"});
    CHECK(pp.code == 0);
    const json arr = json::parse(pp.out);
    for (const auto& r : arr) {
      check_report_schema(r);
      if (r["bound"] == "c") {
        CHECK(r["holds"] == true);
        CHECK(r["sharp"] == false);
        CHECK(r["left"] == "4");
        CHECK(r["right"] == "2");
      }
    }

    const Outcome plain = run({"product", "--family", "path", "--n", "2", "--family2", "cycle", "--n2", "3"});
    CHECK(plain.code == 0);
    CHECK(has_line(plain.out, "z=3"));
  }

  TEST_CASE("verify suites") {
    const Outcome diag = run({"verify", "diagonals", "--m", "5"});
    CHECK(diag.code == 0);
    CHECK(diag.out.find("| 5 > 1") != std::string::npos);

    const Outcome conv = run({"--format", "json", "verify", "converse", "--max-order", "5"});
    CHECK(conv.code == 0);
    const json arr = json::parse(conv.out);
    CHECK(arr.size() > 0);
    for (const auto& r : arr) {
      check_report_schema(r);
      CHECK(r["holds"] == true);
    }

    const Outcome star = run({"verify", "starclique", "--spec", "clique3,clique3", "--r", "2"});
    CHECK(star.code == 0);
    CHECK(star.out.find("summary: 2 checks, 0 failed") != std::string::npos);

    const std::string census = "cli_test_census.g6";
    {
      std::ofstream f(census);
      f << "Ch\nC~\n";
    }
    const Outcome from_file = run({"verify", "converse", "--census", census});
    CHECK(from_file.code == 0);
    std::remove(census.c_str());

    const Outcome oracle = run({"verify", "oracle", "--max-order", "4", "--random", "5"});
    CHECK(oracle.code == 0);
  }

  TEST_CASE("witness") {
    const Outcome c4 = run({"witness", "--family", "cycle", "--n", "4"});
    CHECK(c4.code == 0);
    CHECK(has_line(c4.out, "nullity=2 >= ft=2"));

    const Outcome p3 = run({"witness", "--family", "path", "--n", "3"});
    CHECK(p3.code == 0);
    CHECK(p3.out.find(">= ft=1") != std::string::npos);

    const Outcome pet = run({"--format", "json", "witness", "--family", "petersen"});
    CHECK(pet.code == 0);
    const json j = json::parse(pet.out);
    CHECK(j["ft"] == 2);
    CHECK(j["nullity"].get<int>() >= 2);
    CHECK(j["matrix"].size() == 10);
    CHECK(j["matrix"][0][0].is_string());
    CHECK(j["certified"] == true);
  }

  TEST_CASE("exit codes") {
    CHECK(run({"compute", "--family", "cycle", "--n", "2"}).code == 2);
    CHECK(run({"compute", "--family", "bogus"}).code == 2);
    CHECK(run({"compute"}).code == 2);
    CHECK(run({"compute", "--family", "path", "--n", "3", "--file", "x"}).code == 2);
    CHECK(run({"compute", "--file", "/nonexistent/graph"}).code == 2);
    CHECK(run({"compute", "--family", "path", "--n", "3", "--which", "nope"}).code == 2);
    CHECK(run({"--bogus"}).code == 2);
    CHECK(run({"--cap-enum", "30", "compute", "--family", "path", "--n", "3"}).code == 2);
    CHECK(run({"--workers", "0", "compute", "--family", "path", "--n", "3"}).code == 2);
    CHECK(run({"verify", "diagonals", "--m", "4"}).code == 2);
    CHECK(run({"--help"}).code == 0);

    const Outcome cap = run({"compute", "--family", "path", "--n", "25", "--which", "ft"});
    CHECK(cap.code == 3);
    CHECK(cap.err.find("cap") != std::string::npos);
    CHECK(run({"--cap-search", "8", "compute", "--family", "path", "--n", "9", "--which", "z"}).code == 3);
    CHECK(run({"product", "--family", "path", "--n", "5", "--family2", "path", "--n2", "5", "--battery"}).code == 3);
  }

  TEST_CASE("output does not depend on the worker count") {
    for (const auto& cmd : std::vector<std::vector<std::string>>{
             {"compute", "--family", "petersen", "--all"},
             {"product", "--family", "cycle", "--n", "4", "--family2", "path", "--n2", "3", "--battery"},
             {"witness", "--family", "petersen"}}) {
      auto one = cmd, four = cmd;
      one.insert(one.begin(), {"--workers", "1"});
      four.insert(four.begin(), {"--workers", "4"});
      CHECK(run(one).out == run(four).out);
    }
  }
}
