#include <doctest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "contractions/table_io.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = contractions::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t line_count(const std::string& text) {
  std::size_t lines = 0;
  for (char c : text) lines += c == '\n';
  return lines;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("enumerate") {
  const Result odci2 = run_cli({"enumerate", "--n", "2", "--family", "odci"});
  CHECK(odci2.code == 0);
  CHECK(line_count(odci2.out) == 5);
  CHECK(odci2.out.find("dom: | im:\n") != std::string::npos);
  CHECK(odci2.out.find("dom: 1 2 | im: 1 2\n") != std::string::npos);

  const Result i1 = run_cli({"enumerate", "--n", "1", "--family", "i"});
  CHECK(i1.code == 0);
  CHECK(line_count(i1.out) == 2);

  // guard violation without the override
  const Result large = run_cli({"enumerate", "--n", "12", "--family", "i"});
  CHECK(large.code == 1);
  CHECK(large.out.empty());

  // argument errors
  CHECK(run_cli({"enumerate", "--family", "odci"}).code == 2);
  CHECK(run_cli({"enumerate", "--n", "2", "--family", "bogus"}).code == 2);
  CHECK(run_cli({"enumerate", "--n", "0", "--family", "i"}).code == 2);
}

TEST_CASE("count by height") {
  const Result r = run_cli(
      {"count", "--n", "3", "--family", "oci", "--by", "height"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "p  count\n"
        "0  1\n"
        "1  9\n"
        "2  7\n"
        "3  1\n");

  const Result csv = run_cli({"count", "--n", "3", "--family", "oci", "--by",
                              "height", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out == "p,count\n0,1\n1,9\n2,7\n3,1\n");
}

TEST_CASE("count height-fix with a height filter") {
  const Result r = run_cli({"count", "--n", "3", "--family", "odci", "--by",
                            "height-fix", "--p", "2", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out == "m,count\n0,1\n1,1\n2,3\n");
}

TEST_CASE("count with an image tuple") {
  const Result r =
      run_cli({"count", "--n", "6", "--family", "oci", "--image", "1,3,5"});
  CHECK(r.code == 0);
  CHECK(r.out == "4\n");
  // image counting is an OCI notion
  CHECK(run_cli({"count", "--n", "6", "--family", "odci", "--image", "1,3,5"})
            .code == 2);
  CHECK(run_cli({"count", "--n", "6", "--family", "oci", "--image", "5,3"})
            .code == 2);
}

TEST_CASE("count with a profile key") {
  const Result r = run_cli({"count", "--n", "3", "--family", "odci",
                            "--profile", "1:2:3:2"});
  CHECK(r.code == 0);
  CHECK(r.out == "2\n");
  const Result fix = run_cli({"count", "--n", "3", "--family", "odci",
                              "--profile", "1:2:3:2", "--m", "1"});
  CHECK(fix.code == 0);
  CHECK(fix.out == "1\n");
  CHECK(run_cli({"count", "--n", "3", "--family", "odci", "--profile", "1:2:3"})
            .code == 2);
}

TEST_CASE("count json round-trips through the library reader") {
  const Result r = run_cli({"count", "--n", "4", "--family", "orci", "--by",
                            "height-fix", "--format", "json"});
  CHECK(r.code == 0);
  std::istringstream in(r.out);
  const contractions::CountTable table = contractions::read_json_table(in);
  CHECK(table.n == 4);
  CHECK(table.family == contractions::Family::ORCI);
  CHECK(table.at_or_zero({2, 1}) == 14);
  CHECK(table.total() == 89);
}

TEST_CASE("workers do not change the table") {
  const Result serial = run_cli({"count", "--n", "6", "--family", "orci",
                                 "--by", "height-fix", "--format", "csv"});
  const Result parallel =
      run_cli({"count", "--n", "6", "--family", "orci", "--by", "height-fix",
               "--format", "csv", "--workers", "3"});
  CHECK(serial.code == 0);
  CHECK(parallel.code == 0);
  CHECK(serial.out == parallel.out);
}

TEST_CASE("formula") {
  const Result all = run_cli({"formula", "order-oci", "--n", "5",
                              "--all-methods"});
  CHECK(all.code == 0);
  CHECK(all.out == "closed 154\nrecurrence 154\nsummation 154\n");

  CHECK(run_cli({"formula", "order-odci", "--n", "3"}).out == "13\n");
  CHECK(run_cli({"formula", "order-orci", "--n", "2"}).out == "7\n");
  CHECK(run_cli({"formula", "oci-height", "--n", "3", "--p", "2"}).out == "7\n");
  CHECK(run_cli({"formula", "fibonacci", "--n", "7"}).out == "13\n");
  CHECK(run_cli({"formula", "oci-image-class", "--n", "6", "--p", "3", "--q",
                 "4"}).out == "4\n");
  CHECK(run_cli({"formula", "odci-profile", "--n", "3", "--profile",
                 "1:2:3:2"}).out == "2\n");

  CHECK(run_cli({"formula", "no-such-formula", "--n", "3"}).code == 2);
  CHECK(run_cli({"formula", "oci-height", "--n", "3"}).code == 2);  // missing --p
  CHECK(run_cli({"formula", "oci-height", "--n", "3", "--p", "9"}).code == 2);
}

TEST_CASE("verify smoke run and bound checks") {
  const Result smoke = run_cli({"verify", "--max-n-filtered", "2",
                                "--max-n-direct", "2"});
  CHECK(smoke.code == 0);
  CHECK(smoke.out.rfind("contraction-verify-report schema=1", 0) == 0);
  CHECK(smoke.out.find(" fail=0 ") != std::string::npos);
  CHECK(smoke.out.find("documented_mismatch") != std::string::npos);

  CHECK(run_cli({"verify", "--max-n-filtered", "9", "--max-n-direct", "10"})
            .code == 2);
  CHECK(run_cli({"verify", "--max-n-filtered", "4", "--max-n-direct", "3"})
            .code == 2);
}

TEST_CASE("sequence") {
  const Result r = run_cli({"sequence", "A094864", "--n", "6"});
  CHECK(r.code == 0);
  CHECK(r.out.find("sequence-A094864 n=4 53 53 pass") != std::string::npos);
  CHECK(run_cli({"sequence", "A000042", "--n", "6"}).code == 2);
  CHECK(run_cli({"sequence"}).code == 2);
}

TEST_CASE("environment variable lowers guards and binds under --allow-large") {
  setenv("CONTRACTION_SEMIGROUPS_MAX_N", "3", 1);
  CHECK(run_cli({"enumerate", "--n", "4", "--family", "odci"}).code == 1);
  CHECK(run_cli({"enumerate", "--n", "4", "--family", "odci", "--allow-large"})
            .code == 1);
  CHECK(run_cli({"enumerate", "--n", "3", "--family", "odci"}).code == 0);
  // it can only lower, never raise
  setenv("CONTRACTION_SEMIGROUPS_MAX_N", "99", 1);
  CHECK(run_cli({"enumerate", "--n", "12", "--family", "i"}).code == 1);
  unsetenv("CONTRACTION_SEMIGROUPS_MAX_N");
}

TEST_CASE("missing subcommand is a usage error") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
}

}  // TEST_SUITE
