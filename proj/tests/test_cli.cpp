// Copyright 2026 The yhk Authors.
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

#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "yhk/errors.hpp"
#include "yhk_cli/commands.hpp"
#include "yhk_cli/expr.hpp"
#include "yhk_cli/json_io.hpp"

namespace yhk::cli {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Expr, ParsesProductsAndCoefficients) {
  AlgebraSpec s{2, 2};
  const Scalar qq = Scalar::q() - Scalar::q(-1);
  EXPECT_EQ(parse_expression(s, "g1 X1"), mult(gen_g(s, 1), gen_X(s, 1)));
  EXPECT_EQ(parse_expression(s, "g1*X1"), mult(gen_g(s, 1), gen_X(s, 1)));
  EXPECT_EQ(parse_expression(s, "X2 g1 - (q - q^-1) e1 X2"), mult(gen_X(s, 2), gen_g(s, 1)) - qq * mult(gen_e(s, 1), gen_X(s, 2)));
  EXPECT_EQ(parse_expression(s, "3 t1^2 - 2"), Scalar(3L) * gen_t(s, 1, 2) - scalar_element(s, Scalar(2L)));
  EXPECT_EQ(parse_expression(s, "Xi1 X1"), one(s));
  EXPECT_EQ(parse_expression(s, "gi1 g1"), one(s));
  EXPECT_EQ(parse_expression(s, "X1^-2"), gen_X(s, 1, -2));
  EXPECT_EQ(parse_expression(s, "Th1"), gen_theta(s, 1));
  EXPECT_THROW(parse_expression(s, "X3"), InvalidArgument);
  EXPECT_THROW(parse_expression(s, "Y1"), InvalidArgument);
  EXPECT_THROW(parse_expression(s, "(X1"), InvalidArgument);
  EXPECT_THROW(parse_expression(s, "e1^-1"), InvalidArgument);
}

TEST(JsonIo, ScalarRoundTrip) {
  for (const Scalar& x : {Scalar(0L), Scalar(1L), Scalar::rational(-3, 7), Scalar::q(-2) + Scalar(5L),
                          Scalar(1L) / (Scalar::q() - Scalar(1L)),
                          Scalar(CycloNum::root_of_unity(3, 1)) * Scalar::q() + Scalar(CycloNum::root_of_unity(2, 1))}) {
    json j = to_json(x);
    EXPECT_EQ(scalar_from_json(j), x) << j.dump();
  }
  json zeta = to_json(Scalar(CycloNum::root_of_unity(4, 1)));
  EXPECT_EQ(zeta.at("order"), 4);
  EXPECT_FALSE(to_json(Scalar(2L)).contains("order"));
  EXPECT_EQ(to_json(Scalar::rational(1, 2)).dump(), R"({"den":[[0,["1"]]],"num":[[0,["1/2"]]]})");
}

TEST(JsonIo, ElementRoundTrip) {
  AlgebraSpec s{3, 3};
  PbwElement a = parse_expression(s, "g2 X1 t3 - (q + 2) e1 Th2");
  EXPECT_EQ(element_from_json(s, to_json(a)), a);
  EXPECT_EQ(to_json(a).dump(), to_json(parse_expression(s, "g2 X1 t3 - (q + 2) e1 Th2")).dump());
}

TEST(JsonIo, WeightDatum) {
  WeightDatum lam = WeightDatum::parse_charges("0,1,1");
  json j = to_json(lam);
  EXPECT_EQ(j.dump(), R"({"lambda":{"0":1,"1":2}})");
  EXPECT_EQ(weight_from_json(j), lam);
  EXPECT_THROW(weight_from_json(json::parse(R"({"lambda":{"x":1}})")), InvalidArgument);
}

TEST(Cli, RelationsSummary) {
  CliRun r = run_cli({"relations", "--r", "2", "--n", "2"});
  EXPECT_EQ(r.code, kPass);
  EXPECT_NE(r.out.find("all 14 identity families PASS"), std::string::npos) << r.out;
}

TEST(Cli, MultExample) {
  CliRun r = run_cli({"mult", "--r", "2", "--n", "2", "--expr", "g1 X1", "--json"});
  ASSERT_EQ(r.code, kPass) << r.err;
  AlgebraSpec s{2, 2};
  PbwElement expect = mult(gen_X(s, 2), gen_g(s, 1)) - (Scalar::q() - Scalar::q(-1)) * mult(gen_e(s, 1), gen_X(s, 2));
  EXPECT_EQ(json::parse(r.out), to_json(expect));
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({}).code, kUsage);
  EXPECT_EQ(run_cli({"mult", "--r", "2"}).code, kUsage);
  EXPECT_EQ(run_cli({"mult", "--r", "2", "--n", "2", "--expr", "Q1"}).code, kUsage);
  EXPECT_EQ(run_cli({"reduce", "--r", "2", "--n", "3", "--regular", "--max-dim", "10"}).code, kResourceGuard);
  EXPECT_EQ(run_cli({"mult", "--r", "2", "--n", "3", "--expr", "(X1 + X2)^3", "--max-support", "2"}).code,
            kResourceGuard);
  EXPECT_EQ(run_cli({"center", "--r", "2", "--n", "2", "--alpha", "1,0"}).code, kPass);
  EXPECT_EQ(run_cli({"--help"}).code, kPass);
}

TEST(Cli, ReportsAreDeterministic) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"relations", "--r", "2", "--n", "2", "--seed", "9", "--json"},
           {"morita", "--r", "2", "--n", "2", "--seed", "4", "--json"},
           {"crystal", "--r", "2", "--e", "3", "--n-max", "3", "--json"},
           {"compare", "--r", "2", "--n-max", "2", "--json"}}) {
    CliRun a = run_cli(args), b = run_cli(args);
    EXPECT_EQ(a.code, kPass) << a.err;
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, SeedFallsBackToEnvironment) {
  ::setenv("YHK_SEED", "17", 1);
  EXPECT_EQ(resolve_seed(""), 17u);
  EXPECT_EQ(resolve_seed("5"), 5u);
  ::unsetenv("YHK_SEED");
  EXPECT_EQ(resolve_seed(""), 1u);
  EXPECT_THROW(resolve_seed("x"), InvalidArgument);
}

TEST(Cli, ParseShapes) {
  EXPECT_EQ(parse_shapes("2,1|1|"), (std::vector<Partition>{{2, 1}, {1}, {}}));
  EXPECT_EQ(parse_shapes("3"), (std::vector<Partition>{{3}}));
  EXPECT_THROW(parse_shapes("1,2"), InvalidArgument);
}

TEST(Cli, BranchReport) {
  CliRun r = run_cli({"branch", "--shapes", "1|1", "--json"});
  ASSERT_EQ(r.code, kPass) << r.err;
  json j = json::parse(r.out);
  ASSERT_EQ(j["summands"].size(), 2u);
  EXPECT_EQ(j["summands"][0]["k"], 1);
  EXPECT_EQ(j["summands"][0]["a"], 0);
  EXPECT_EQ(j["summands"][0]["label"], "(()|(1))");
}

}  // namespace
}  // namespace yhk::cli
