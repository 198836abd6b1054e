#define DOCTEST_CONFIG_IMPLEMENT
#include <cmath>
#include <cstdio>
#include <string>

#include "doctest.h"
#include "procutil.hpp"

namespace {
std::string g_cli;
}

using testutil::doc_field;
using testutil::run_cmd;
using testutil::write_file;

TEST_CASE("transform") {
  const auto r = run_cmd(g_cli + " transform", "1,2,3,7\n");
  CHECK(r.exit_code == 0);
  CHECK(doc_field(r.out, "param n") == "4");
  CHECK(doc_field(r.out, "coeff 0") == "3.25");
  CHECK(doc_field(r.out, "coeff 1") == "-1.75");
  CHECK(doc_field(r.out, "coeff 2") == "-0.5");
  CHECK(doc_field(r.out, "coeff 3") == "-2");

  const auto constant = run_cmd(g_cli + " transform", "4,4,4,4\n");
  CHECK(doc_field(constant.out, "coeff 0") == "4");
  CHECK(doc_field(constant.out, "coeff 3") == "0");
}

TEST_CASE("exit codes") {
  CHECK(run_cmd(g_cli + " transform", "1,2,3\n").exit_code == 3);   // bad length
  CHECK(run_cmd(g_cli + " transform", "1,two,3,4\n").exit_code == 2);  // bad token
  CHECK(run_cmd(g_cli + " synopsis -B 1 -m l0", "1,2,3,7\n").exit_code == 3);
  CHECK(run_cmd(g_cli + " synopsis", "1,2,3,7\n").exit_code == 3);  // missing budget
  CHECK(run_cmd(g_cli + " synopsis -B 1 --mode unrestricted --grid-cap 3", "1,2,3,7\n")
            .exit_code == 4);
  CHECK(run_cmd(g_cli + " transform -i /nonexistent.txt").exit_code == 2);
  CHECK(run_cmd(g_cli + " --help").exit_code == 0);
}

TEST_CASE("restricted synopsis document") {
  const std::string data = write_file("data.txt", "1\n2\n3\n7\n");
  const std::string weights = write_file("w.txt", "0.5,0.5,1.5,1.5\n");
  const auto r = run_cmd(g_cli + " synopsis -i " + data + " --weights " + weights +
                         " -m l2 -B 1 --stats");
  CHECK(r.exit_code == 0);
  CHECK(doc_field(r.out, "param mode") == "restricted");
  CHECK(doc_field(r.out, "param budget") == "1");
  const double err = std::stod(doc_field(r.out, "error"));
  CHECK(err == doctest::Approx(5.78).epsilon(2e-3));
  CHECK(!doc_field(r.out, "stat node_visits").empty());
  CHECK(!doc_field(r.out, "stat peak_live_entries").empty());

  // byte-identical on a rerun
  const auto again = run_cmd(g_cli + " synopsis -i " + data + " --weights " + weights +
                             " -m l2 -B 1 --stats");
  CHECK(again.out == r.out);
}

TEST_CASE("unrestricted synopsis document") {
  const auto r = run_cmd(g_cli + " synopsis --mode unrestricted -m l1 -B 1 -e 0.1",
                         "1,2,3,7\n");
  CHECK(r.exit_code == 0);
  CHECK(std::stod(doc_field(r.out, "param epsilon")) == 0.1);
  CHECK(std::stod(doc_field(r.out, "error")) <= 7.7);
}

TEST_CASE("synopsis round-trips through evaluate") {
  const std::string data = write_file("rt.txt", "3,-1,4,1,5,-9,2,6\n");
  for (const std::string mode : {"restricted", "unrestricted"}) {
    const auto syn = run_cmd(g_cli + " synopsis -i " + data + " --mode " + mode +
                             " -m l2 -B 3 -e 0.2");
    REQUIRE(syn.exit_code == 0);
    const auto ev = run_cmd(g_cli + " evaluate -i " + data + " -m l2", syn.out);
    REQUIRE(ev.exit_code == 0);
    CHECK(std::stod(doc_field(ev.out, "error")) ==
          doctest::Approx(std::stod(doc_field(syn.out, "error"))).epsilon(1e-9));
  }
}

TEST_CASE("evaluate the hand-written synopsis") {
  const std::string data = write_file("ev.txt", "1,2,3,7\n");
  const std::string weights = write_file("evw.txt", "0.5,0.5,1.5,1.5\n");
  const std::string doc = write_file("ev.doc", "pick 0 4.65\n");
  const auto r = run_cmd(g_cli + " evaluate -i " + data + " --weights " + weights +
                         " -m l2 --synopsis " + doc);
  CHECK(r.exit_code == 0);
  CHECK(std::stod(doc_field(r.out, "error")) == doctest::Approx(4.87).epsilon(2e-3));

  const auto empty = run_cmd(g_cli + " evaluate -i " + data + " -m l2", "param only\n");
  CHECK(std::stod(doc_field(empty.out, "error")) ==
        doctest::Approx(std::sqrt(1 + 4 + 9 + 49)).epsilon(1e-9));
}

TEST_CASE("histogram document") {
  const auto r = run_cmd(g_cli + " histogram -B 2 --stats", "1,2,3,4\n");
  CHECK(r.exit_code == 0);
  CHECK(std::stod(doc_field(r.out, "sse")) == doctest::Approx(1.0));
  CHECK(doc_field(r.out, "bucket 0") == "2 1.5");
  CHECK(doc_field(r.out, "bucket 2") == "4 3.5");
  CHECK(!doc_field(r.out, "stat cell_evals").empty());

  CHECK(std::stod(doc_field(run_cmd(g_cli + " histogram -B 1", "1,2,3,4\n").out, "sse")) ==
        doctest::Approx(5.0));
  CHECK(std::stod(doc_field(run_cmd(g_cli + " histogram -B 4", "1,2,3,4\n").out, "sse")) ==
        doctest::Approx(0.0));
}

TEST_CASE("extended document") {
  const auto r = run_cmd(g_cli + " extended -B 4 --header-cost 1",
                         "2,1\n1,3\n2,0\n1,1\n");
  CHECK(r.exit_code == 0);
  CHECK(doc_field(r.out, "param dims") == "2");
  CHECK(!doc_field(r.out, "profit").empty());
  CHECK(std::stoul(doc_field(r.out, "cost")) <= 4);

  CHECK(run_cmd(g_cli + " extended -B 4", "1,2\n3\n").exit_code == 2);  // ragged
}

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: cli_tests <path-to-cli>\n");
    return 1;
  }
  g_cli = argv[1];
  doctest::Context ctx;
  return ctx.run();
}
