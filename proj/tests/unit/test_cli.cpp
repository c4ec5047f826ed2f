#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "report_json.hpp"

using namespace frobtrace;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

template <typename T>
void round_trip(const T& value) {
  const json j = value;
  const T back = j.get<T>();
  CHECK(back == value);
  CHECK(json(back).dump() == j.dump());
}

}  // namespace

TEST_CASE("trace-seq csv") {
  const auto r = run({"trace-seq", "--curve", "1,1", "-p", "13", "-N", "1000", "--format", "csv"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "n,alpha_n");
  std::getline(in, line);
  CHECK(line == "1,-0.5547001962252291");
  int rows = 1;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 1000);
  CHECK(r.err.empty());
}

TEST_CASE("weyl json") {
  const auto r = run({"weyl", "--curve", "1,1", "-p", "13", "-N", "1000000", "-k", "1", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto rep = json::parse(r.out).get<equidist::WeylSumReport>();
  CHECK(rep.n == 1000000);
  CHECK(rep.modulus == doctest::Approx(0.22).epsilon(0.01));
}

TEST_CASE("density svg") {
  const auto r = run({"density", "--model", "gen-arcsine", "--d", "12", "--format", "svg"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("<svg") != std::string::npos);
  CHECK(r.out.find("width=\"900\"") != std::string::npos);
  CHECK(r.out.find("height=\"360\"") != std::string::npos);
  CHECK(r.out.find("<polyline") != std::string::npos);
  const auto csv = run({"density", "--model", "gen-arcsine", "--d", "12", "--format", "csv"});
  CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 513);
}

TEST_CASE("sweep csv and json") {
  const auto csv = run({"sweep", "--curve", "1,1", "-X", "40"});
  REQUIRE(csv.code == 0);
  CHECK(csv.out.rfind("p,a1,alpha1,supersingular\n", 0) == 0);
  CHECK(csv.out.find("\n13,-4,") != std::string::npos);
  CHECK(csv.out.find("\n31,") == std::string::npos);

  const auto js = run({"sweep", "--curve", "1,1", "-X", "40", "--format", "json"});
  const auto rep = json::parse(js.out).get<experiments::PrimeSweepReport>();
  CHECK(rep.records.size() == 10);  // 5..37, including the bad prime 31
  CHECK(rep == experiments::prime_sweep(ec::CurveSpec(1, 1), 40));
}

TEST_CASE("discrepancy csv header") {
  const auto r = run({"discrepancy", "--source", "golden", "--ladder", "100,1000"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("N,d_star,et_bound\n", 0) == 0);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == cli::kArgumentError);
  CHECK(run({"no-such-command"}).code == cli::kArgumentError);
  CHECK(run({"trace-seq", "--bogus"}).code == cli::kArgumentError);
  CHECK(run({"trace-seq", "--curve", "1,1", "-p", "13", "-N", "5", "--format", "xml"}).code == cli::kArgumentError);
  CHECK(run({"fixed-prime", "--curve", "1,1", "-p", "13", "-N", "5", "--format", "csv"}).code == cli::kArgumentError);
  CHECK(run({"trace-seq", "--curve", "1,x", "-p", "13", "-N", "5"}).code == cli::kArgumentError);

  const auto singular = run({"point-count", "--curve", "0,0", "-p", "13"});
  CHECK(singular.code == cli::kPreconditionViolation);
  const auto err = json::parse(singular.err);
  CHECK(err["error"] == "precondition");
  CHECK(err["exit_code"] == 3);
  CHECK(singular.out.empty());

  CHECK(run({"point-count", "--curve", "1,1", "-p", "31"}).code == cli::kPreconditionViolation);
  CHECK(run({"point-count", "--curve", "1,1", "-p", "12"}).code == cli::kPreconditionViolation);
  CHECK(run({"weyl", "--curve", "1,1", "-p", "13", "-N", "10", "-k", "0"}).code == cli::kPreconditionViolation);
  CHECK(run({"trace-seq", "--curve", "1,1", "-p", "13", "-N", "200000000"}).code == cli::kResourceCeiling);
  CHECK(run({"sweep", "--curve", "1,1", "-X", "2000000"}).code == cli::kResourceCeiling);
  CHECK(run({"power-sums", "--poly", "2,1", "-N", "3"}).code == cli::kPreconditionViolation);
}

TEST_CASE("unwritable output path") {
  const auto r = run({"-o", "/nonexistent-dir/out.csv", "sweep", "--curve", "1,1", "-X", "20"});
  CHECK(r.code == cli::kArgumentError);
}

TEST_CASE("output file") {
  const auto path = std::filesystem::temp_directory_path() / "frobtrace_cli_test.csv";
  const auto r = run({"point-count", "--curve", "1,1", "-p", "13", "-o", path.string(), "--format", "csv"});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == "p,count,trace,character_sum\n13,18,-4,4\n");
  std::filesystem::remove(path);
}

TEST_CASE("progress goes to the diagnostic stream") {
  const auto quiet = run({"sweep", "--curve", "1,1", "-X", "500"});
  const auto loud = run({"sweep", "--curve", "1,1", "-X", "500", "--progress"});
  CHECK(quiet.out == loud.out);
  CHECK_FALSE(loud.err.empty());
}

TEST_CASE("salem and power-sums") {
  const auto r = run({"salem", "--poly", "1,-1,-1,-1,1", "-N", "1000"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["verdict"]["is_salem"] == true);
  CHECK(j["mod1"]["certified_length"] == 1000);
  const auto ps = run({"power-sums", "--poly", "1,-3,2", "-N", "5"});
  CHECK(ps.out == "n,s_n\n0,2\n1,3\n2,5\n3,9\n4,17\n5,33\n");
  CHECK(run({"salem", "--cyclotomic", "5", "--shift", "-3"}).code == 0);
}

TEST_CASE("JSON round trips") {
  round_trip(ec::count_points(ec::CurveSpec(1, 1), 13));
  const auto seq = ec::normalized_trace_sequence(ec::FrobeniusAngle(-4, 13), 100);
  round_trip(seq);
  round_trip(equidist::weyl_sum(seq, 3));
  round_trip(equidist::discrepancy_report(equidist::map_to_unit(seq), 5));
  round_trip(equidist::histogram(seq, 7, -1, 1));
  const auto sweep = experiments::prime_sweep(ec::CurveSpec(1, 1), 300);
  round_trip(sweep);
  round_trip(sweep.records.front());
  round_trip(experiments::sato_tate_test(sweep, -0.5, 0.5, density::DistributionModel::semicircle()));
  round_trip(experiments::lang_trotter_counts(sweep, 2));
  round_trip(experiments::fixed_prime_distribution(ec::CurveSpec(1, 1), 13, 500, 10));
  round_trip(experiments::summatory_check(ec::FrobeniusAngle(-4, 13), 1, {10, 100}).back());
  round_trip(poly::salem_classify(poly::IntPolynomial::from_descending({1, -1, -1, -1, 1})));
  round_trip(poly::salem_classify(poly::shift_constant(poly::cyclotomic(5), -3)));
}

TEST_CASE("repeated runs are byte-identical") {
  const std::vector<std::string> args{"sato-tate", "--curve", "1,1", "-X", "3000", "--a", "-0.5", "--b", "0.25"};
  auto with_threads = [&](const char* t) {
    std::vector<std::string> a{"--threads", t};
    a.insert(a.end(), args.begin(), args.end());
    return run(a).out;
  };
  const auto base = run(args).out;
  CHECK(with_threads("1") == base);
  CHECK(with_threads("8") == base);
}
