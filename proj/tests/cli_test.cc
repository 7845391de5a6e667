// Copyright 2026 The spdlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "gtest/gtest.h"
#include "spdlab/io.h"

namespace spdlab {
namespace {

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  CliRun r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() /
          ("spdlab_cli_test_" + std::to_string(::getpid()) + "_" + name))
      .string();
}

size_t count_lines(const std::string& s, const std::string& needle) {
  size_t n = 0;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) n += line.find(needle) != std::string::npos;
  return n;
}

// The elapsed_ms column is the only run-dependent field.
std::string strip_elapsed(const std::string& csv) {
  std::string out;
  std::istringstream in(csv);
  for (std::string line; std::getline(in, line);) out += line.substr(0, line.rfind(',')) + "\n";
  return out;
}

TEST(Cli, GenNwT) {
  const CliRun r = run({"gen", "nw_t", "--n", "3", "--t", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(parse_polynomial(r.out).poly.sparsity(), 3u);
  EXPECT_NE(r.out.find("layout=nw n=3"), std::string::npos);
  EXPECT_NE(r.err.find("terms=3"), std::string::npos);
}

TEST(Cli, GenPExpanded) {
  const std::string path = temp_path("p.poly");
  const CliRun r = run({"gen", "P", "--n", "4", "--t", "2", "--p", "1", "--expand", "--out", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("terms=256"), std::string::npos);
  EXPECT_EQ(parse_polynomial(read_text_file(path)).poly.sparsity(), 256u);
  std::filesystem::remove(path);
}

TEST(Cli, GenRejectsNonPrimePower) {
  const CliRun r = run({"gen", "nw_t", "--n", "6", "--t", "1"});
  EXPECT_EQ(r.code, kExitBadInput);
  EXPECT_NE(r.err.find("NotPrimePower"), std::string::npos);
}

TEST(Cli, GenCapIsResourceExit) {
  const CliRun r = run({"gen", "nw_t", "--n", "9", "--t", "1", "--term-cap", "100"});
  EXPECT_EQ(r.code, kExitResourceCap);
}

TEST(Cli, BadFlagsExitTwo) {
  EXPECT_EQ(run({"gen", "bogus", "--n", "3"}).code, kExitBadInput);
  EXPECT_EQ(run({"measure"}).code, kExitBadInput);
  EXPECT_EQ(run({}).code, kExitBadInput);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(Cli, Measure) {
  const std::string path = temp_path("x.poly");
  write_text_file(path, "poly q=7^1 nvars=4\n1 0:1 1:1\n1 2:1 3:1\nend\n");
  const CliRun a = run({"measure", path, "--k", "1", "--ell", "0"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(strip_elapsed(a.out),
            "file,k,ell,dim,num_derivatives,rows,cols\n" + path + ",1,0,4,4,4,4\n");
  const CliRun zero = run({"measure", path, "--k", "3", "--ell", "1"});
  EXPECT_NE(zero.out.find(path + ",3,1,0,"), std::string::npos);
  const CliRun b = run({"measure", path, "--k", "1", "--ell", "0"});
  EXPECT_EQ(strip_elapsed(a.out), strip_elapsed(b.out));
  const CliRun capped = run({"measure", path, "--k", "1", "--ell", "3", "--matrix-cap", "10"});
  EXPECT_EQ(capped.code, kExitResourceCap);
  std::filesystem::remove(path);
}

TEST(Cli, VerifyDerivative) {
  const CliRun r = run({"verify", "derivative", "--n", "8", "--t", "4", "--p", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(count_lines(r.out, "\"pass\":true"), 4096u);
}

TEST(Cli, VerifyDerivativeFaultInjection) {
  const CliRun r = run({"verify", "derivative", "--n", "8", "--t", "4", "--p", "1", "--drop-term", "7"});
  EXPECT_EQ(r.code, kExitVerifyFailed);
  EXPECT_EQ(count_lines(r.out, "\"pass\":false"), 1u);
  EXPECT_EQ(count_lines(r.out, "\"witness\""), 1u);
}

TEST(Cli, VerifyNiceSet) {
  const CliRun r = run({"verify", "nice-set", "--n", "4", "--p", "1", "--ttilde", "4", "--alpha", "0.5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"codewords\":256"), std::string::npos);
  EXPECT_NE(r.out.find("\"min_distance\":3"), std::string::npos);
}

TEST(Cli, VerifyReduction) {
  const CliRun r = run({"verify", "reduction", "--seed", "7", "--trials", "50"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(count_lines(r.out, "\"check\":\"reduction\""), 50u);
  EXPECT_EQ(count_lines(r.out, "\"pass\":true"), 50u);
  EXPECT_NE(r.out.find("\"seed\":7"), std::string::npos);
}

TEST(Cli, VerifySubadditivity) {
  const CliRun r = run({"verify", "subadditivity", "--seed", "1", "--trials", "20", "--k", "1", "--ell", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"failures\":0"), std::string::npos);
}

TEST(Cli, BoundsEmptyGridIsHeaderOnly) {
  const CliRun r = run({"bounds", "--n", "", "--t", "64"});
  EXPECT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string comment, header, extra;
  std::getline(in, comment);
  std::getline(in, header);
  EXPECT_EQ(comment.rfind("# spdlab bounds", 0), 0u);
  EXPECT_EQ(header.rfind("name,n,N,t,", 0), 0u);
  EXPECT_FALSE(std::getline(in, extra));
}

TEST(Cli, BoundsGridRowsInOrder) {
  const CliRun r = run({"bounds", "--n", "4096,16384", "--t", "64,256"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(count_lines(r.out, "mainthm0_cm_topfanin,"), 4u);
  EXPECT_EQ(count_lines(r.out, "tavenas_topfanin,"), 4u);
  EXPECT_LT(r.out.find("mainthm0_cm_topfanin,4096"), r.out.find("mainthm0_cm_topfanin,16384"));
}

TEST(Cli, BoundsManualLowdeg) {
  const CliRun r = run({"bounds", "--bound", "lowdeg", "--d", "4", "--k", "2", "--N", "4", "--D", "2",
                     "--ell", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find(",exact,50,"), std::string::npos);
}

TEST(Cli, Reduce) {
  const std::string in = temp_path("c.spsp");
  const std::string out = temp_path("c_out.spsp");
  write_text_file(in,
                  "spsp q=7^1 nvars=3\ngate\npoly q=7^1 nvars=3\n1 0:1\n1 1:1\nend\n"
                  "poly q=7^1 nvars=3\n1 0:2\n1 1:1 2:1\nend\npoly q=7^1 nvars=3\n1 2:1\nend\n"
                  "endgate\nendspsp\n");
  const CliRun r = run({"reduce", in, "--t", "2", "--out", out});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"blowup\":2.0"), std::string::npos);
  EXPECT_NE(r.out.find("\"verdict\":\"Equal\""), std::string::npos);
  EXPECT_EQ(parse_circuit(read_text_file(out)).circuit.top_fanin(), 2u);
  std::filesystem::remove(in);
  std::filesystem::remove(out);
}

TEST(Cli, RepeatedRunsAreByteIdentical) {
  const std::vector<std::vector<std::string>> commands = {
      {"gen", "Q", "--n", "16", "--base", "2", "--top", "3"},
      {"verify", "distance", "--n", "8", "--t", "4", "--p", "1", "--alpha", "0.5"},
      {"verify", "reduction", "--seed", "11", "--trials", "10"},
      {"bounds"},
  };
  for (const auto& cmd : commands) {
    const CliRun a = run(cmd), b = run(cmd);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out) << cmd[0];
  }
}

}  // namespace
}  // namespace spdlab
