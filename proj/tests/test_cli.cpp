#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>

#include "cli/commands.hpp"
#include "cli/sweep_result.hpp"
#include "lsob/errors.hpp"
#include "lsob/logsobolev.hpp"

using namespace lsob;
using namespace lsob::cli;
using doctest::Approx;

namespace {

std::string temp_file(const std::string& name, const std::string& contents) {
  const std::string path = (std::filesystem::temp_directory_path() / ("lsob_test_" + name)).string();
  std::ofstream(path) << contents;
  return path;
}

std::string csv_of(const SweepResult& r) {
  std::ostringstream os;
  r.write_csv(os);
  return os.str();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("reals print round-trip") {
  CHECK(format_real(0.1) == "0.10000000000000001");
  CHECK(std::stod(format_real(1.0 / 3)) == 1.0 / 3);
  CHECK(format_real(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(format_real(std::nan("")) == "nan");
}

TEST_CASE("sweep result tables") {
  SweepResult r("demo", {"a", "b"});
  r.add_metadata("seed", "3");
  r.add_row({Cell{0.5}, Cell{std::int64_t{2}}});
  r.add_row({Cell{std::string("inf")}, Cell{std::int64_t{-1}}});
  CHECK_THROWS_AS(r.add_row({Cell{1.0}}), std::invalid_argument);

  const std::string csv = csv_of(r);
  CHECK(csv.find("# seed: 3\n") != std::string::npos);
  CHECK(csv.find("a,b\n0.5,2\ninf,-1\n") != std::string::npos);

  const auto j = r.to_json();
  CHECK(j["command"] == "demo");
  CHECK(j["schema_version"] == kSchemaVersion);
  CHECK(j["metadata"]["seed"] == "3");
  CHECK(j["rows"][0]["a"] == 0.5);
  CHECK(j["rows"][1]["a"] == "inf");
}

TEST_CASE("spectrum files") {
  const std::string ok = temp_file("ok.txt", "0.5\n\n0.25\n0.25\n");
  const auto v = read_spectrum_file(ok);
  CHECK(v.size() == 3);
  CHECK(v[0] == Approx(0.5));

  CHECK_THROWS_AS(read_spectrum_file(temp_file("sum.txt", "0.5\n0.4\n")), ArgumentError);
  CHECK_THROWS_AS(read_spectrum_file(temp_file("neg.txt", "1.5\n-0.5\n")), ArgumentError);
  CHECK_THROWS_AS(read_spectrum_file(temp_file("word.txt", "0.5\nhalf\n")), ArgumentError);
  CHECK_THROWS_AS(read_spectrum_file(temp_file("empty.txt", "")), ArgumentError);
  CHECK_THROWS_AS(read_spectrum_file("lsob_test_missing/none.txt"), IoError);
}

TEST_CASE("alpha1 report") {
  Alpha1Args args;
  args.smin = 0.25;
  const SweepResult r = alpha1_report(args);
  REQUIRE(r.rows().size() == 1);
  CHECK(std::get<double>(r.rows()[0][1]) == Approx(alpha1_depolarizing(0.25).alpha1).epsilon(1e-15));

  Alpha1Args neither;
  CHECK_THROWS_AS(alpha1_report(neither), ArgumentError);
  Alpha1Args both = args;
  both.spectrum_file = temp_file("s.txt", "0.5\n0.5\n");
  CHECK_THROWS_AS(alpha1_report(both), ArgumentError);
}

TEST_CASE("sweep grid") {
  const SweepResult r = sweep_alpha1(SweepArgs{4});
  REQUIRE(r.rows().size() == 3);
  CHECK(std::get<double>(r.rows()[0][0]) == 0.25);
  CHECK(std::get<double>(r.rows()[2][0]) == 0.75);
  CHECK_THROWS_AS(sweep_alpha1(SweepArgs{1}), ArgumentError);
}

TEST_CASE("concavity comparison is reproducible") {
  CompareArgs args;
  args.dim = 3;
  args.grid = 5;
  const std::string first = csv_of(concavity_compare(args));
  CHECK(first == csv_of(concavity_compare(args)));
  const SweepResult r = concavity_compare(args);
  CHECK(r.rows().size() == 10);
  // The q = 1/2 row cannot evaluate the relative-entropy bound.
  CHECK(std::get<std::string>(r.rows()[2][7]) == "indeterminate");
}

TEST_CASE("pinsker summary") {
  PinskerArgs args;
  args.smax = 0.99;
  args.dim = 5;
  args.tightness = true;
  const SweepResult r = pinsker_summary(args);
  CHECK(std::get<std::string>(r.rows()[0][0]) == "summary");
  CHECK(std::get<double>(r.rows()[0][1]) == Approx(0.01));
  CHECK(r.rows().size() > 1);
}

TEST_CASE("exit codes") {
  std::ostringstream out, err;
  Alpha1Args none;
  CHECK(cmd_alpha1(none, Output{}, out, err) == kUsageError);

  Alpha1Args args;
  args.smin = 0.3;
  Output bad{"lsob_test_missing/out.csv", Format::csv, ""};
  CHECK(cmd_alpha1(args, bad, out, err) == kIoError);
  CHECK(cmd_alpha1(args, Output{}, out, err) == kOk);

  VerifyArgs v;
  v.suite = "bogus";
  CHECK(cmd_verify(v, Output{}, out, err) == kUsageError);
}

}
