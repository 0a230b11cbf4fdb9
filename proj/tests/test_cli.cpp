#include <sl2w/cli.hpp>

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = sl2w::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("eval-cd") {
  RunResult r = run({"eval-cd", "1 1"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"var\":\"c\",\"coeffs\":[\"0/1\",\"1/1\"]}\n");

  RunResult empty = run({"eval-cd", ""});
  CHECK(empty.code == 0);
  CHECK(empty.out == "{\"var\":\"c\",\"coeffs\":[\"1/1\"]}\n");

  SUBCASE("byte identical across invocations") {
    CHECK(run({"eval-cd", "1 2 3 1 2 3"}).out == run({"eval-cd", "1 2 3 1 2 3"}).out);
  }
}

TEST_CASE("exit codes") {
  CHECK(run({"eval-cd", "1 2 1"}).code == 2);     // label count
  CHECK(run({"enumerate", "12"}).code == 3);      // budget
  CHECK(run({"no-such-command"}).code == 2);
  CHECK(run({"eval-share", "1 2 1 2"}).code == 2);  // missing '|'
  CHECK(run({"verify-duality", "5: 1-2,2-3,3-4,4-5,1-5"}).code == 2);  // C5 unrealizable
}

TEST_CASE("kcomplete") {
  RunResult r = run({"kcomplete", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"var\":\"c\",\"coeffs\":[\"0/1\",\"2/1\",\"-3/1\",\"1/1\"]}\n");
}

TEST_CASE("normal-form and eval-share") {
  RunResult nf = run({"normal-form", "1 2 | 2 1"});
  CHECK(nf.code == 0);
  CHECK(nf.out ==
        "[{\"c1\":0,\"c2\":0,\"x\":1,\"q\":\"1/1\"},{\"c1\":0,\"c2\":0,\"x\":2,\"q\":\"1/1\"}]\n");

  RunResult es = run({"eval-share", "1 2 | 2 1"});
  CHECK(es.code == 0);
  CHECK(es.out.find("\"var\":\"x\"") != std::string::npos);
}

TEST_CASE("basis-convert with compact input") {
  RunResult r = run({"basis-convert", "--from", "y", "--to", "e", "0; 0; 1"});
  CHECK(r.code == 0);
  // y^2 = e_2 + 1/2 e_1 + c^2/3 e_0
  CHECK(r.out ==
        "{\"var\":\"e\",\"coeffs\":[{\"var\":\"c\",\"coeffs\":[\"0/1\",\"0/1\",\"1/3\"]},"
        "{\"var\":\"c\",\"coeffs\":[\"1/2\"]},{\"var\":\"c\",\"coeffs\":[\"1/1\"]}]}\n");
}

TEST_CASE("op-matrix") {
  RunResult r = run({"op-matrix", "U", "e", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"op\":\"U\"") != std::string::npos);
  CHECK(r.out.find("\"basis\":\"e\"") != std::string::npos);
}

TEST_CASE("graph commands") {
  RunResult r = run({"graph-r", "3:"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"k\":0") != std::string::npos);

  RunResult rz = run({"realize", "5: 1-2,2-3,3-4,4-5,1-5"});
  CHECK(rz.code == 0);
  CHECK(rz.out.find("\"share\":null") != std::string::npos);
  CHECK(rz.out.find("\"diagram\":\"") != std::string::npos);

  RunResult b = run({"bouchet", "3: 1-2,2-3"});
  CHECK(b.code == 0);
  CHECK(b.out.find("\"verdict\":\"CLEAR\"") != std::string::npos);
}

TEST_CASE("rseries and reconstruct round trip through files") {
  RunResult r = run({"rseries", "1 2 3 | 3 2 1"});
  CHECK(r.code == 0);

  std::string path = "cli_rseries_test.json";
  {
    std::ofstream f(path);
    f << r.out;
  }
  RunResult back = run({"reconstruct", path});
  CHECK(back.code == 0);
  // the all-crossing share is y^3
  CHECK(back.out ==
        "{\"var\":\"y\",\"coeffs\":[{\"var\":\"c\",\"coeffs\":[]},{\"var\":\"c\",\"coeffs\":[]},"
        "{\"var\":\"c\",\"coeffs\":[]},{\"var\":\"c\",\"coeffs\":[\"1/1\"]}]}\n");
  std::remove(path.c_str());
}

TEST_CASE("config file controls output mode") {
  std::string path = "cli_config_test.json";
  {
    std::ofstream f(path);
    f << "{\"output\":\"text\",\"max_chords_oracle\":4,\"max_vertices\":8}";
  }
  RunResult r = run({"--config", path, "eval-cd", "1 2 3 1 2 3"});
  CHECK(r.code == 0);
  CHECK(r.out == "c^3 - 3*c^2 + 2*c\n");
  std::remove(path.c_str());

  CHECK(run({"--config", "no_such_config.json", "eval-cd", "1 1"}).code == 2);
}

TEST_CASE("oracle-check at a small budget") {
  RunResult r = run({"oracle-check", "--max-chords", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"ok\":true") != std::string::npos);
}
