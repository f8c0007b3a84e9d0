#include <doctest.h>

#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = akizuki::cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("nf") {
  const auto square = run({"nf", "w*w", "--prec", "14"});
  CHECK(square.code == 0);
  CHECK(square.out == "X = -t^6 - 2*t^10\nY = 2*t^3 + 2*t^7\nlevel = 14\n");

  CHECK(run({"nf", "t^2 + 3*w", "--prec", "5"}).out == "X = t^2\nY = 3\nlevel = 5\n");
  CHECK(run({"nf", "1/(1-t*w)", "--level", "6"}).out == "X = 1\nY = t + 2*t^5\nlevel = 6\n");

  const auto bad = run({"nf", "1/t", "--prec", "4"});
  CHECK(bad.code == akizuki::cli::kDomainError);
  CHECK(bad.err.find("not in C_M") != std::string::npos);

  CHECK(run({"nf", "w*"}).code == akizuki::cli::kParseError);
  CHECK(run({"nf", "g4"}).code == akizuki::cli::kDomainError);
  CHECK(run({"nf", "w", "--level", "70"}).code == akizuki::cli::kDomainError);
}

TEST_CASE("res and duality") {
  CHECK(run({"res", "pair(0;1)", "gf(0;1;3)"}).out == "t^-3\n");
  CHECK(run({"res", "pair(1;0)", "gf(t;0;2)"}).out == "t^-1\n");
  CHECK(run({"res", "pair(1;1+t)", "gf(t;1;2)"}).out == "t^-2 + 2*t^-1\n");
  CHECK(run({"res", "pair(1;1)", "gf(t;0;1)"}).out == "0\n");

  CHECK(run({"duality", "inverse", "pair(0;1)", "hom(3;1;t)"}).out == "gf(t;1;3)\n");
  CHECK(run({"duality", "forward", "pair(0;1)", "gf(1;0;1)"}).out == "hom(1;0;1)\n");
  const auto singular = run({"duality", "inverse", "pair(0;t)", "hom(3;1;t)"});
  CHECK(singular.code == akizuki::cli::kDomainError);
  CHECK(singular.err.find("rho not invertible") != std::string::npos);
  CHECK(run({"duality", "sideways", "pair(0;1)", "gf(1;0;1)"}).code == akizuki::cli::kParseError);
  CHECK(run({"duality", "forward", "pair(0;1)", "gf(1;0)"}).code == akizuki::cli::kParseError);
}

TEST_CASE("hom-eval, h1, complete and extract") {
  CHECK(run({"hom-eval", "hom(3;1;t)", "w"}).out == "t^-2\n");
  CHECK(run({"h1", "act", "w", "gf(0;1;6)"}).out == "gf(0;2;3)\n");
  CHECK(run({"--field", "fp:2", "h1", "act", "w", "gf(0;1;6)"}).out == "gf(0;0;1)\n");
  CHECK(run({"h1", "eq", "gf(1;0;1)", "gf(t;0;2)"}).out == "true\n");
  CHECK(run({"h1", "zero", "gf(0;1;1)"}).out == "false\n");
  CHECK(run({"h1", "zero", "gf(t;0;1)"}).out == "true\n");

  CHECK(run({"complete", "add", "comp(1;t)", "comp(t;1)"}).out == "comp(1 + t;1 + t)\n");
  CHECK(run({"complete", "mul", "comp(t^3+t^7+t^15;1)", "comp(t^3+t^7+t^15;1)"}).out == "comp(0;0)\n");
  CHECK(run({"complete", "mul", "comp(1+t;2)", "comp(3;t)", "--unit", "comp(1;0)"}).out ==
        run({"complete", "mul", "comp(1+t;2)", "comp(3;t)"}).out);
  CHECK(run({"complete", "mul", "comp(1;0)", "comp(1;0)", "--unit", "comp(t;1)"}).code ==
        akizuki::cli::kDomainError);
  CHECK(run({"complete", "embed", "w"}).out == "comp(t^3 + t^7 + t^15;0)\n");

  CHECK(run({"extract", "pair(t;1+t)", "--level", "5"}).out == "pair(t;1 + t)\n");
  CHECK(run({"extract", "pair(0;1)", "--twist", "w", "--level", "8"}).out == "pair(1;2*t^3 + 2*t^7)\n");
}

TEST_CASE("machine output") {
  const std::vector<std::string> args{"--output", "machine", "duality", "inverse", "pair(0;1)", "hom(6;1;0)"};
  const auto first = run(args);
  CHECK(first.code == 0);
  CHECK(first.out ==
        "field = q\nprecision = 31\nresult = gf(-2*t^3;1;6)\nx = -2*t^3\ny = 1\nexponent = 6\nzero = false\n");
  CHECK(run(args).out == first.out);

  const auto st1 = run({"--output", "machine", "selftest", "all", "--seed", "5", "--count", "4"});
  const auto st2 = run({"--output", "machine", "selftest", "all", "--seed", "5", "--count", "4"});
  CHECK(st1.code == 0);
  CHECK(st1.out == st2.out);
  CHECK(st1.out.find("status = pass") != std::string::npos);
  CHECK(st1.out.find("completion.nilpotent_witness = pass") != std::string::npos);
}

TEST_CASE("selftest and instance options") {
  const auto ok = run({"selftest", "duality", "--seed", "7", "--count", "20"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("FAIL") == std::string::npos);
  CHECK(run({"selftest", "bogus"}).code == akizuki::cli::kParseError);
  CHECK(run({"--field", "fp:101", "selftest", "completion", "--count", "5"}).code == 0);

  const std::string path = "akizuki_cli_test.cfg";
  {
    std::ofstream out(path);
    out << "field = fp:101\nprecision = 14\n";
  }
  CHECK(run({"--config", path, "nf", "w*w"}).out == "X = 100*t^6 + 99*t^10\nY = 2*t^3 + 2*t^7\nlevel = 14\n");
  CHECK(run({"--config", path, "--field", "q", "nf", "w*w"}).out ==
        "X = -t^6 - 2*t^10\nY = 2*t^3 + 2*t^7\nlevel = 14\n");
  std::remove(path.c_str());
  CHECK(run({"--config", "/nonexistent.cfg", "nf", "w"}).code == akizuki::cli::kParseError);
  CHECK(run({"--output", "json", "nf", "w"}).code == akizuki::cli::kParseError);
  CHECK(run({}).code == akizuki::cli::kParseError);
  CHECK(run({"--help"}).code == 0);
}
