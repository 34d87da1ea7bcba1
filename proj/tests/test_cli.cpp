#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "rcl/cli.hpp"
#include "rcl/json_io.hpp"
#include "test_support.hpp"

using namespace rcl;
using namespace rcltest;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  RunResult r;
  r.code = run_command(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

std::string temp_path(const std::string& name) { return "/tmp/rcl_cli_test_" + name; }

void write_file(const std::string& path, const std::string& body) {
  std::ofstream f(path);
  f << body;
}

}  // namespace

TEST_CASE("json wire format round trips") {
  const DataSet ds = ds3();
  const DataSet back = dataset_from_json(dataset_to_json(ds));
  CHECK(dist(ds.A, back.A) == 0.0);
  CHECK(dist(ds.Q, back.Q) == 0.0);

  Rng rng(7);
  TaylorFn t = TaylorFn::zero(2, 3, 4);
  for (int n = 0; n <= 4; ++n) t.coeffs[n] = rng.gaussian(2, 3);
  const TaylorFn tback = taylor_from_json(taylor_to_json(t));
  CHECK(max_coeff_dist(t, tback, 4) == 0.0);

  const GammaOp g = theta_ds3();
  const GammaOp gback = gamma_from_json(gamma_to_json(g));
  CHECK(max_coeff_dist(g.theta, gback.theta, 1) == 0.0);

  CHECK_THROWS_AS(load_json_file("/nonexistent/rcl.json"), Error);
}

TEST_CASE("validate reports exact zeros for the point mass data") {
  const RunResult r = run({"validate", data_path("ds3.json")});
  CHECK(r.code == 0);
  CHECK(r.err.empty());
  const Json j = r.json();
  CHECK(j["command"] == "validate");
  CHECK(j["pass"] == true);
  CHECK(j["intertwining_residual"].get<double>() == 0.0);
}

TEST_CASE("validate fails with a report on inconsistent data") {
  DataSet ds;
  ds.A = ComplexMatrix::Constant(1, 1, 0.5);
  ds.Tprime = ComplexMatrix::Constant(1, 1, 0.5);
  ds.R = ComplexMatrix::Identity(1, 1);
  ds.Q = ComplexMatrix::Identity(1, 1);
  const std::string path = temp_path("broken.json");
  write_file(path, dataset_to_json(ds).dump());

  const RunResult r = run({"validate", path});
  CHECK(r.code == 1);
  const Json j = r.json();
  CHECK(j["pass"] == false);
  CHECK(j["intertwining_residual"].get<double>() == doctest::Approx(0.25));

  // downstream construction refuses the same data but still emits a report
  const RunResult o = run({"omega", path});
  CHECK(o.code == 1);
  CHECK(o.json()["pass"] == false);
  CHECK(o.json().contains("error"));
  std::remove(path.c_str());
}

TEST_CASE("omega reports the coupling dimensions") {
  const RunResult r = run({"omega", data_path("ds3.json")});
  CHECK(r.code == 0);
  const Json j = r.json();
  CHECK(j["t"] == 1);
  CHECK(j["a"] == 2);
  CHECK(j["f"] == 1);
  CHECK(j["g"] == 1);
  CHECK(j["isometric"] == true);
}

TEST_CASE("solve produces the shifted unit symbol from the unit parameter") {
  const RunResult r =
      run({"solve", data_path("ds3.json"), "--param", data_path("h_ds3.json"), "--degree", "6"});
  CHECK(r.code == 0);
  const Json j = r.json();
  CHECK(j["pass"] == true);
  CHECK(j["solution"]["margin"].get<double>() == doctest::Approx(0.0));
  CHECK(j["solution"]["max_residual"].get<double>() == 0.0);
  const Json coeffs = j["gamma"]["theta"]["coeffs"];
  REQUIRE(coeffs.size() == 7);
  CHECK(coeffs[0][0][1][0].get<double>() == doctest::Approx(1.0));  // theta_0 = [0 1]
  CHECK(coeffs[1][0][0][0].get<double>() == doctest::Approx(1.0));  // theta_1 = [1 0]
  CHECK(coeffs[2][0][0][0].get<double>() == doctest::Approx(0.0));
}

TEST_CASE("solve with the default parameter yields the zero symbol here") {
  const RunResult r = run({"solve", data_path("ds3.json"), "--degree", "4"});
  CHECK(r.code == 0);
  const Json j = r.json();
  CHECK(j["pass"] == true);
  for (const auto& c : j["gamma"]["theta"]["coeffs"])
    for (const auto& row : c)
      for (const auto& entry : row) {
        CHECK(entry[0].get<double>() == 0.0);
        CHECK(entry[1].get<double>() == 0.0);
      }
}

TEST_CASE("verify accepts a stored symbol") {
  const RunResult r =
      run({"verify", data_path("ds3.json"), "--gamma", data_path("theta_ds3.json")});
  CHECK(r.code == 0);
  const Json j = r.json();
  CHECK(j["pass"] == true);
  CHECK(j["solution"]["max_residual"].get<double>() == 0.0);
}

TEST_CASE("uniqueness verdicts across the corpus") {
  CHECK(run({"unique", data_path("ds3.json")}).json()["verdict"] == "non_unique");
  CHECK(run({"unique", data_path("ds1.json")}).json()["verdict"] == "unique");
  CHECK(run({"unique", data_path("generic_1.json")}).json()["verdict"] == "not_applicable");
  CHECK(run({"unique", data_path("classical_1.json")}).json()["verdict"] == "unique");
  CHECK(run({"unique", data_path("ds3.json")}).code == 0);
}

TEST_CASE("jmap closes the loop on the isometric hand solution") {
  const RunResult r =
      run({"jmap", data_path("ds3.json"), "--gamma", data_path("theta_ds3.json")});
  CHECK(r.code == 0);
  const Json j = r.json();
  CHECK(j["pass"] == true);
  CHECK(j["big_omega"]["dgamma_rank"] == 0);
  CHECK(j["bias_deviation"].get<double>() == 0.0);
  CHECK(j["theta_residual"].get<double>() < 1e-12);
  CHECK(j["pair_check"]["pass"] == true);
}

TEST_CASE("majorant certifies the flat extension of the hand solution") {
  const RunResult r = run({"majorant", "--gamma", data_path("theta_ds3.json"), "--degree", "8"});
  CHECK(r.code == 0);
  const Json j = r.json();
  CHECK(j["pass"] == true);
  CHECK(j["dgamma_rank"] == 0);
  CHECK(j["gap_v"].get<double>() >= -1e-12);
  CHECK(j["positive_real_margin_v"].get<double>() >= -1e-12);
  CHECK(j["factor_residual"].get<double>() == 0.0);
}

TEST_CASE("roundtrip passes on generated corpus data") {
  for (const char* name : {"generic_1.json", "exact_5.json", "classical_2.json"}) {
    const RunResult r = run({"roundtrip", data_path(name)});
    CHECK(r.code == 0);
    const Json j = r.json();
    CHECK(j["pass"] == true);
    CHECK(j["solution"]["pass"] == true);
    CHECK(j["theta_residual"].get<double>() < 1e-8);
  }
}

TEST_CASE("generation is reproducible byte for byte") {
  const std::string a = temp_path("gen_a.json");
  const std::string b = temp_path("gen_b.json");
  const RunResult ra =
      run({"gen", "--seed", "7", "--dims", "2", "4", "3", "--out", a});
  const RunResult rb =
      run({"gen", "--seed", "7", "--dims", "2", "4", "3", "--out", b});
  CHECK(ra.code == 0);
  CHECK(rb.code == 0);
  const std::string body_a = slurp(a);
  CHECK(body_a == slurp(b));
  CHECK(!body_a.empty());

  // written file loads and validates through the CLI
  CHECK(run({"validate", a}).code == 0);
  std::remove(a.c_str());
  std::remove(b.c_str());

  // without --out the data set is embedded in the report
  const RunResult inline_run = run({"gen", "--seed", "7", "--dims", "2", "4", "3"});
  CHECK(inline_run.code == 0);
  CHECK(inline_run.json().contains("dataset"));
}

TEST_CASE("repeated runs emit identical reports") {
  const std::vector<std::string> cmd = {"solve", data_path("ds3.json"), "--degree", "5"};
  CHECK(run(cmd).out == run(cmd).out);
}

TEST_CASE("usage problems exit with code 2 and a message") {
  CHECK(run({"validate", "/nonexistent/data.json"}).code == 2);
  CHECK_FALSE(run({"validate", "/nonexistent/data.json"}).err.empty());

  const std::string garbage = temp_path("garbage.json");
  write_file(garbage, "not json at all {");
  CHECK(run({"validate", garbage}).code == 2);
  std::remove(garbage.c_str());

  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"verify", data_path("ds3.json")}).code == 2);  // --gamma required
  CHECK(run({}).code == 2);                                 // subcommand required
  CHECK(run({"gen", "--dims", "2", "4"}).code == 2);        // three dims needed
  CHECK(run({"solve", data_path("ds3.json"), "--degree", "-3"}).code == 2);
}

TEST_CASE("help and version exit cleanly") {
  const RunResult h = run({"--help"});
  CHECK(h.code == 0);
  CHECK(h.out.find("solve") != std::string::npos);
  const RunResult hs = run({"solve", "--help"});
  CHECK(hs.code == 0);
  CHECK(hs.out.find("--param") != std::string::npos);
  const RunResult v = run({"--version"});
  CHECK(v.code == 0);
  CHECK_FALSE(v.out.empty());
}
