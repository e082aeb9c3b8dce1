//  Copyright 2026 The primlat Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "primlat_cli.hpp"

namespace primlat {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
  args.insert(args.begin(), "primlat");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  std::istringstream in(stdin_text);
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err, in);
  return {code, out.str(), err.str()};
}

bool has(const std::string& text, const std::string& piece) { return text.find(piece) != std::string::npos; }

TEST(Cli, Classify) {
  auto r = run({"classify", testing::data_path("n5.lat")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has(r.out, "modular: false\n"));
  EXPECT_TRUE(has(r.out, "pentagon: 0 a b c 1\n"));
  EXPECT_TRUE(has(r.out, "chain-partition: 0<a<b<1 | c\n"));
  auto m3 = run({"classify", testing::data_path("m3.lat")});
  EXPECT_TRUE(has(m3.out, "modular: true\n"));
  EXPECT_TRUE(has(m3.out, "diamond: 0 p q r 1\n")) << m3.out;
  auto crown = run({"classify", testing::data_path("crown.lat")});
  EXPECT_EQ(crown.code, 0);
  EXPECT_TRUE(has(crown.out, "lattice: false\n"));
}

TEST(Cli, ReadsStdin) {
  auto r = run({"classify"}, "elements 0 1\ncovers 0<1\n");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has(r.out, "boolean: true\n"));
  auto bad = run({"classify", "-"}, "elements 0 1\ncovers 0<2\n");
  EXPECT_EQ(bad.code, 1);
  EXPECT_TRUE(has(bad.err, "<stdin>")) << bad.err;
  EXPECT_TRUE(has(bad.err, "line 2")) << bad.err;
}

TEST(Cli, OrthoAndNegation) {
  auto r = run({"ortho", testing::data_path("hexagon.lat")});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has(r.out, "orthomodular: false\n"));
  EXPECT_TRUE(has(r.out, "center: 0 p q 1\n"));
  EXPECT_TRUE(has(r.out, "orthogonal-pairs: 9\n"));
  auto search = run({"ortho", testing::data_path("m3.lat")});
  EXPECT_EQ(search.code, 0);
  auto n = run({"negation", testing::data_path("hexagon.lat")});
  EXPECT_EQ(n.code, 0);
  EXPECT_TRUE(has(n.out, "ortho: true\n"));
  auto none = run({"negation", testing::data_path("n5.lat")});
  EXPECT_EQ(none.code, 1);
}

TEST(Cli, Metric) {
  auto r = run({"metric", testing::data_path("boolean3.lat"), "--ball", "a", "--radius", "1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "closed-ball: 0 a ab ac\nopen-ball: a\n");
  auto table = run({"metric", testing::data_path("boolean3.lat")});
  EXPECT_TRUE(has(table.out, "d\t0\ta\tb\tc\tab\tac\tbc\t1\n"));
  auto hex = run({"metric", testing::data_path("hexagon.lat")});
  EXPECT_EQ(hex.code, 1);
}

TEST(Cli, ReduceAndPrimorial) {
  auto r = run({"reduce", "--n", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has(r.out, "count: 10"));
  EXPECT_EQ(run({"reduce", "--n", "6"}).code, 1);
  EXPECT_EQ(run({"reduce", "--n", "1"}).code, 2);
  EXPECT_EQ(run({"reduce", "--n", "9"}).code, 2);
  EXPECT_EQ(run({"reduce"}).code, 2);

  auto p = run({"primorial", "--n", "3"});
  EXPECT_EQ(p.code, 0);
  EXPECT_EQ(p.out, generate_primorial(3).serialize() +
                       "family: L2^1<L2^2 L2^1<D3 L2^2<L2^3 D3<L2^3\n");
  auto d = run({"dposet", "--n", "4"});
  EXPECT_EQ(d.out, "members: L2^1 L2^2 L2^3 L2^4\ndposet: pass\n");
}

TEST(Cli, PrimorialChoices) {
  auto path = std::filesystem::temp_directory_path() / "primlat_choices.txt";
  {
    std::ofstream f(path);
    f << "2 {} {1,2} {3,4} {1,2,3,4}\n";
  }
  auto r = run({"primorial", "--n", "4", "--choices", path.string()});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has(r.out, "L2^2: {} {1,2} {3,4} {1,2,3,4}\n")) << r.out;
  {
    std::ofstream f(path);
    f << "2 {} {1} {2} {1,2,3,4}\n";
  }
  auto bad = run({"primorial", "--n", "4", "--choices", path.string()});
  EXPECT_EQ(bad.code, 1);
  std::filesystem::remove(path);
  EXPECT_EQ(run({"primorial", "--n", "4", "--choices", "/nonexistent/choices"}).code, 1);
}

TEST(Cli, Project) {
  auto r = run({"project", "--n", "3", "--level", "D3", "-m", "sasaki", "-m", "zero",
                testing::data_path("sequence.txt")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has(r.out, "position\tinput\tD3/sasaki\tD3/zero\n"));
  EXPECT_TRUE(has(r.out, "0\t{1}\t{}\t{}\n"));
  EXPECT_TRUE(has(r.out, "4\t{2,3}\t{1,2,3}\t{}\n"));
  auto ceil = run({"project", "--n", "3", "--level", "L2^2", "-m", "ceiling"}, "{2}\n");
  EXPECT_EQ(ceil.out, "position\tinput\tL2^2/ceiling\n0\t{2}\t{2,3}\n");
  EXPECT_EQ(run({"project", "--n", "3", "--level", "Q2", "-m", "zero"}, "{2}\n").code, 2);
  EXPECT_EQ(run({"project", "--n", "3", "--level", "D3", "-m", "fourier"}, "{2}\n").code, 2);
  EXPECT_EQ(run({"project", "--n", "3", "--level", "D3"}, "{2}\n").code, 2);
  EXPECT_EQ(run({"project", "--n", "3", "--level", "D3", "-m", "zero"}, "{4}\n").code, 1);
}

TEST(Cli, Probability) {
  auto r = run({"probability", testing::data_path("hexagon_prob.lat")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has(r.out, "quantum: violated (additive on orthogonal pairs at p q: 1 != 5/6)\n"));
  EXPECT_TRUE(has(r.out, "distributivity-gated: satisfied\n"));
  auto rnd = run({"probability", "--random-boolean", "3", "--trials", "50", "--seed", "9"});
  EXPECT_EQ(rnd.out, "trials: 50\nvalid: 50\ninclusion-exclusion: 50\nsubadditive: 50\n");
  auto bad = run({"probability"}, "elements 0 1\ncovers 0<1\nnegation 0->1 1->0\nprob 0=0 1=1/2\n");
  EXPECT_EQ(bad.code, 1);
  EXPECT_TRUE(has(bad.out + bad.err, "p(1) = 1")) << bad.out << bad.err;
  EXPECT_EQ(run({"probability", "--trials", "5"}, "").code, 2);
}

TEST(Cli, Analyze) {
  auto r = run({"analyze", "--fasta", testing::data_path("sample.fasta")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has(r.out + r.err, "coarse L2^2 ceiling A|T: 8 C|G: 8"));
  EXPECT_TRUE(has(r.out, "0\tA\t1\tA|T\t"));
  auto bad = run({"analyze", "--fasta", "-"}, ">x\nACZT\n");
  EXPECT_EQ(bad.code, 1);
  EXPECT_TRUE(has(bad.err, "position 3, symbol Z")) << bad.err;
  EXPECT_EQ(run({"analyze", "--fasta", "-", "--window", "0"}, ">x\nA\n").code, 2);
  EXPECT_EQ(run({"analyze", "--fasta", "-", "--preset", "rna"}, ">x\nA\n").code, 2);
  auto plus = run({"analyze", "--fasta", "-", "--preset", "acgt-plus-x"}, ">x\nACGTX\n");
  EXPECT_EQ(plus.code, 0) << plus.err;
}

TEST(Cli, EnumerateAndHasse) {
  auto e = run({"enumerate", "--n", "6"});
  EXPECT_TRUE(has(e.out, "lattices: 15 modular: 8 distributive: 5"));
  auto listed = run({"enumerate", "--n", "5", "--list"});
  std::size_t count = 0;
  for (std::size_t i = listed.out.find("lattice L5_"); i != std::string::npos;
       i = listed.out.find("lattice L5_", i + 1))
    ++count;
  EXPECT_EQ(count, 5u);
  auto h = run({"hasse", testing::data_path("m3.lat"), "--name", "diamond"});
  EXPECT_TRUE(has(h.out, "digraph \"diamond\" {\n"));
  EXPECT_TRUE(has(h.out, "\"0\" -> \"p\";\n"));
}

TEST(Cli, UsageAndOutputFile) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"classify", "--bogus"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"classify", "/nonexistent/file.lat"}).code, 1);
  auto path = std::filesystem::temp_directory_path() / "primlat_out.txt";
  auto r = run({"-o", path.string(), "reduce", "--n", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  EXPECT_TRUE(has(ss.str(), "count: 3"));
  std::filesystem::remove(path);
}

TEST(Cli, Deterministic) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"reduce", "--n", "5"}, {"primorial", "--n", "5"}, {"enumerate", "--n", "5", "--list"}}) {
    EXPECT_EQ(run(args).out, run(args).out);
  }
}

}  // namespace
}  // namespace primlat
