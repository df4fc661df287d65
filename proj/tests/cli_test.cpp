#include "doctest.h"

#include <cstdlib>
#include <sstream>

#include "colmah/cli.hpp"

#include "json.hpp"

using namespace colmah;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("stat") {
  auto r = run({"stat", "--perm", "3[1] 2 1[2] 4[1]", "--c", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "perm,c,inv,maj,col,cross_term,inv_c,tilde_inv_c\n3[1] 2 1[2] 4[1],3,3,3,4,3,16,13\n");
  r = run({"stat", "--perm", "1 2 3", "--c", "1", "--format", "json"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  for (const char* key : {"inv", "maj", "col", "cross_term", "inv_c", "tilde_inv_c"}) CHECK(doc[key] == "0");
  r = run({"--format", "json", "stat", "--perm", "3[1] 2[1] 1[1]", "--c", "2"});
  CHECK(nlohmann::json::parse(r.out)["tilde_inv_c"] == "9");
  CHECK(run({"stat", "--perm", "1 1", "--c", "2"}).code == 2);
  CHECK(run({"stat", "--perm", "1[2]", "--c", "2"}).code == 2);
  CHECK(run({"stat", "--c", "2"}).code == 2);
}

TEST_CASE("seq") {
  auto r = run({"seq", "--name", "t", "--c", "2", "--n-max", "7"});
  CHECK(r.code == 0);
  CHECK(r.out == "n,value\n1,1\n2,12\n3,149\n4,2048\n5,31345\n6,534524\n7,10091893\n");
  CHECK(run({"seq", "--name", "I", "--c", "1", "--n-max", "1"}).out == "n,value\n1,0\n");
  CHECK(run({"seq", "--name", "iinv", "--c", "3", "--n-max", "3"}).out == "n,value\n1,0\n2,9\n3,45\n");
  CHECK(run({"seq", "--name", "d", "--c", "2", "--n-min", "0", "--n-max", "2"}).out == "n,value\n0,1\n1,1\n2,5\n");
  CHECK(run({"seq", "--name", "r", "--c", "1", "--n-max", "4"}).out == "n,value\n1,1\n2,2\n3,4\n4,10\n");
  CHECK(run({"seq", "--name", "ic", "--c", "3", "--n-min", "4", "--n-max", "4", "--k", "2"}).out ==
        "n,k,value\n4,2,10\n");
  CHECK(run({"seq", "--name", "ic", "--c", "2", "--n-min", "2", "--n-max", "2", "--method", "lattice_path"}).out ==
        "n,k,value\n2,0,1\n2,1,2\n2,2,2\n2,3,2\n2,4,1\n");
  r = run({"seq", "--name", "ic", "--c", "2", "--n-min", "4", "--n-max", "4", "--method", "knuth_netto"});
  CHECK(r.code == 0);
  CHECK(r.out == "n,k,value\n4,0,1\n4,1,4\n4,2,9\n4,3,16\n4,4,24\n");
  CHECK(run({"seq", "--name", "ic", "--c", "2", "--n-max", "4", "--k", "5", "--method", "knuth_netto"}).code == 3);
  CHECK(run({"seq", "--name", "x", "--c", "2", "--n-max", "4"}).code == 2);
  CHECK(run({"seq", "--name", "ic", "--c", "2", "--n-max", "4", "--method", "nope"}).code == 2);
  CHECK(run({"seq", "--name", "t", "--c", "2", "--n-max", "4", "--k", "1"}).code == 2);
  CHECK(run({"seq", "--name", "t", "--c", "0", "--n-max", "4"}).code == 2);
  CHECK(run({"seq", "--name", "t", "--c", "2", "--n-min", "5", "--n-max", "4"}).code == 2);
}

TEST_CASE("dist") {
  auto r = run({"dist", "--c", "2", "--n", "3", "--class", "all", "--statistic", "inv_c"});
  CHECK(r.code == 0);
  CHECK(r.out == "k,count\n0,1\n1,3\n2,5\n3,7\n4,8\n5,8\n6,7\n7,5\n8,3\n9,1\n");
  CHECK(run({"dist", "--c", "1", "--n", "0"}).out == "k,count\n0,1\n");
  r = run({"dist", "--c", "2", "--n", "2", "--class", "derangements", "--statistic", "inv_c"});
  CHECK(r.out == "k,count\n0,0\n1,1\n2,2\n3,1\n4,1\n");
  r = run({"dist", "--c", "3", "--n", "3", "--statistic", "tilde_inv_c", "--check"});
  CHECK(r.code == 0);
  CHECK(r.out.substr(0, 13) == "k,count,gf\n0,");
  CHECK(run({"dist", "--c", "3", "--n", "3", "--class", "involutions", "--check"}).code == 2);
  CHECK(run({"dist", "--c", "9", "--n", "9"}).code == 3);
  CHECK(run({"dist", "--c", "2", "--n", "4", "--cap", "383"}).code == 3);
  CHECK(run({"dist", "--c", "2", "--n", "4", "--cap", "384"}).code == 0);
  CHECK(run({"dist", "--c", "2", "--n", "3", "--statistic", "bogus"}).code == 2);
  // Threads never change the bytes.
  CHECK(run({"dist", "--c", "2", "--n", "5", "--threads", "4"}).out == run({"dist", "--c", "2", "--n", "5"}).out);
}

TEST_CASE("environment cap") {
  ::setenv("MAHONIAN_CAP", "100", 1);
  CHECK(run({"dist", "--c", "2", "--n", "4"}).code == 3);
  CHECK(run({"dist", "--c", "2", "--n", "4", "--cap", "1000"}).code == 0);
  ::unsetenv("MAHONIAN_CAP");
  CHECK(run({"dist", "--c", "2", "--n", "4"}).code == 0);
}

TEST_CASE("json and csv carry the same data") {
  const auto csv = run({"dist", "--c", "2", "--n", "3"}).out;
  const auto doc = nlohmann::json::parse(run({"dist", "--c", "2", "--n", "3", "--format", "json"}).out);
  std::string rebuilt = "k,count\n";
  for (const auto& row : doc) rebuilt += row["k"].get<std::string>() + "," + row["count"].get<std::string>() + "\n";
  CHECK(rebuilt == csv);
  CHECK(run({"dist", "--c", "2", "--n", "3", "--format", "xml"}).code == 2);
}

TEST_CASE("table") {
  auto r = run({"table", "--which", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("summary,,,,63 cells,0 mismatches,pass") != std::string::npos);
  r = run({"table", "--which", "4", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["cells"] == 72);
  r = run({"table", "--which", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("row_fit,4,,,r_{n}^(4),r_{n-1}^(3),shifted") != std::string::npos);
  CHECK(run({"table", "--which", "1"}).code == 0);
  CHECK(run({"table", "--which", "0"}).code == 2);
}

TEST_CASE("verify and usage") {
  auto r = run({"verify", "--budget", "0"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out).back()["detail"] == "empty coverage: budget admits no group");
  r = run({"verify", "--budget", "2000", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("identity,params,status,detail\n", 0) == 0);
  CHECK(run({}).code == 2);
  CHECK(run({"stat", "dist"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"verify", "--budget", "-1"}).code == 2);
  // Deterministic output.
  CHECK(run({"table", "--which", "3"}).out == run({"table", "--which", "3"}).out);
}
