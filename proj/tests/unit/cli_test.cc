// Copyright 2026 The cqsearch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "cli/commands.h"
#include "cli/document.h"
#include "cli/run_config.h"
#include "cqsearch/errors.h"
#include "gtest/gtest.h"

namespace cqsearch::cli {
namespace {

struct Invocation {
  int status = -1;
  std::string out;
};

Invocation run_binary(const std::string& args) {
  const std::string command = std::string("'") + CQSEARCH_CLI_PATH + "' " + args + " 2>/dev/null";
  Invocation inv;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return inv;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) inv.out.append(buf, n);
  const int raw = pclose(pipe);
  inv.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return inv;
}

RunConfig config_for(Subcommand sub, std::size_t n) {
  RunConfig c;
  c.subcommand = sub;
  c.n_items = n;
  return c;
}

TEST(RunConfigTest, Validation) {
  auto c = config_for(Subcommand::kSimulate, 4);
  c.eta = 2;
  c.schedule_c = 1.0;
  EXPECT_THROW(validate(c), DomainError);
  c.schedule_c.reset();
  c.marks = "1";
  c.mask = "1";
  EXPECT_THROW(validate(c), DomainError);
  c.mask.reset();
  EXPECT_NO_THROW(validate(c));
  c.eta = 0;
  EXPECT_THROW(validate(c), DomainError);
  c.eta = 1;
  c.n_items = 6;
  EXPECT_THROW(validate(c), DomainError);
}

TEST(RunConfigTest, Resolution) {
  auto c = config_for(Subcommand::kAnalytic, 16);
  EXPECT_EQ(resolve_eta(c), 256u);
  c.schedule_c = 0.5;
  EXPECT_EQ(resolve_eta(c), 128u);
  c.schedule_c.reset();
  c.eta = 5;
  EXPECT_EQ(resolve_eta(c), 5u);

  EXPECT_EQ(resolve_predicate(c).marked_count(), 0u);
  c.t = 3;
  EXPECT_EQ(resolve_predicate(c).marks(), (std::vector<Item>{1, 2, 3}));
  c.t.reset();
  c.mask = "0x8001";
  EXPECT_EQ(resolve_predicate(c).marks(), (std::vector<Item>{1, 16}));
  c.mask.reset();
  c.marks = "4,2";
  EXPECT_EQ(resolve_predicate(c).marks(), (std::vector<Item>{2, 4}));
  c.marks = "17";
  EXPECT_THROW(resolve_predicate(c), DomainError);
}

TEST(SimulateCommandTest, Examples) {
  auto c = config_for(Subcommand::kSimulate, 4);
  c.marks = "3";
  c.eta = 3;
  c.seed = 1;
  auto doc = cmd_simulate(c);
  EXPECT_EQ(doc["result"]["winner"], 3);
  EXPECT_EQ(doc["result"]["winner_satisfies"], 1);
  EXPECT_EQ(doc["params"]["total_qubits"], 11);
  EXPECT_EQ(doc["checks"]["oracle_blocks"], 1);
  EXPECT_FALSE(doc["checks"].contains("factorization_fidelity"));

  c.capture = true;
  doc = cmd_simulate(c);
  EXPECT_TRUE(doc["checks"]["disentanglement_pass"].get<bool>());
  EXPECT_TRUE(doc["checks"]["phase_kickback_pass"].get<bool>());
  EXPECT_TRUE(doc["checks"]["factorization_pass"].get<bool>());

  auto none = config_for(Subcommand::kSimulate, 2);
  none.marks = "";
  none.eta = 5;
  none.seed = 9;
  EXPECT_EQ(cmd_simulate(none)["result"]["winner_satisfies"], 0);

  auto big = config_for(Subcommand::kSimulate, 32);
  big.eta = 4;
  try {
    cmd_simulate(big);
    FAIL() << "expected a capacity error";
  } catch (const CapacityError& e) {
    EXPECT_NE(std::string(e.what()).find("53"), std::string::npos) << e.what();
  }
  big.max_qubits = 53;
  EXPECT_THROW(cmd_simulate(big), CapacityError);  // above the hard bound
}

TEST(AnalyticCommandTest, Examples) {
  auto c = config_for(Subcommand::kAnalytic, 4);
  c.t = 1;
  c.eta = 1;
  EXPECT_EQ(cmd_analytic(c)["result"]["exact_success_probability"], 1.0);

  c = config_for(Subcommand::kAnalytic, 16);
  c.t = 1;
  c.eta = 64;
  c.trials = 10000;
  c.seed = 5;
  auto doc = cmd_analytic(c);
  EXPECT_GE(doc["result"]["monte_carlo"]["estimate"].get<double>(), 0.99);
  EXPECT_TRUE(doc["checks"]["monte_carlo_within_4se"].get<bool>());

  c = config_for(Subcommand::kAnalytic, 2);
  c.t = 0;
  c.eta = 3;
  EXPECT_EQ(cmd_analytic(c)["result"]["exact_success_probability"], 0.0);

  c = config_for(Subcommand::kAnalytic, 1024);
  c.t = 1;
  try {
    cmd_analytic(c);
    FAIL() << "expected a capacity error";
  } catch (const CapacityError& e) {
    EXPECT_NE(std::string(e.what()).find("--trials"), std::string::npos);
  }
  c.trials = 200;
  doc = cmd_analytic(c);
  EXPECT_TRUE(doc["result"]["exact_success_probability"].is_null());
  EXPECT_EQ(doc["params"]["eta"], 102400);
  EXPECT_EQ(doc["params"]["eta_source"], "schedule");
}

TEST(GatesCommandTest, Examples) {
  auto c = config_for(Subcommand::kGates, 2);
  c.eta = 2;
  c.marks = "1";
  auto doc = cmd_gates(c);
  EXPECT_EQ(doc["result"]["tally"]["multi_controlled_flips"], 9);
  EXPECT_EQ(doc["result"]["tally"]["hadamards"], 7);
  EXPECT_EQ(doc["checks"]["cross_check"], "pass");
  EXPECT_EQ(doc["result"]["query_comparison"]["complex_queries"], 1);

  c = config_for(Subcommand::kGates, 64);
  c.t = 1;
  EXPECT_EQ(cmd_gates(c)["result"]["query_comparison"]["elementary_queries"], 8);

  c = config_for(Subcommand::kGates, 1024);
  c.schedule_c = 1.0;
  doc = cmd_gates(c);
  EXPECT_EQ(doc["result"]["asymptotic"]["eta"], 102400);
  EXPECT_FALSE(doc["result"].contains("query_comparison"));
  EXPECT_EQ(doc["checks"]["cross_check"], "skipped");

  c = config_for(Subcommand::kGates, 4);
  c.eta = 2;
  c.cost_model = CostModelKind::kNaiveDecoder;
  EXPECT_EQ(cmd_gates(c)["params"]["cost_model"], "naive");
}

TEST(RenderTest, JsonNumbersAndCsvFlattening) {
  Document doc;
  doc["params"]["n"] = 4;
  doc["result"]["x"] = 0.1;
  doc["result"]["list"] = {3, 1};
  doc["result"]["nested"]["flag"] = true;
  doc["result"]["nothing"] = nullptr;
  doc["checks"]["ok"] = "pass";
  const std::string json = render_json(doc);
  EXPECT_NE(json.find("0.10000000000000001"), std::string::npos) << json;
  EXPECT_EQ(Document::parse(json), doc);
  EXPECT_EQ(render_csv(doc),
            "key,value\nx,0.10000000000000001\nlist.0,3\nlist.1,1\nnested.flag,true\nnothing,null\n");
  EXPECT_EQ(render(doc, OutputFormat::kCsv), render_csv(doc));
}

TEST(RenderTest, RepeatedCommandsAreByteIdentical) {
  auto c = config_for(Subcommand::kSimulate, 4);
  c.t = 2;
  c.eta = 3;
  c.seed = 11;
  c.tie_break = TieBreakPolicy::kRandom;
  c.capture = true;
  EXPECT_EQ(render_json(run_command(c)), render_json(run_command(c)));
  c.subcommand = Subcommand::kAnalytic;
  c.trials = 3000;
  c.threads = 1;
  const std::string one = render_json(run_command(c));
  c.threads = 4;
  EXPECT_EQ(render_json(run_command(c)), one);
}

TEST(BinaryTest, ExitCodes) {
  EXPECT_EQ(run_binary("simulate --n 4 --marks 3 --eta 3 --seed 1").status, 0);
  EXPECT_EQ(run_binary("gates --n 3").status, 2);
  EXPECT_EQ(run_binary("simulate --n 4 --marks 9 --eta 1").status, 2);
  EXPECT_EQ(run_binary("simulate --n 32 --eta 4").status, 3);
  EXPECT_EQ(run_binary("analytic --n 1024 --schedule-c 1").status, 3);
  EXPECT_EQ(run_binary("--n 4").status, 64);
  EXPECT_EQ(run_binary("simulate --n 4 --tie-break sideways").status, 64);
  EXPECT_EQ(run_binary("simulate --n 4 --eta 1 --schedule-c 1").status, 64);
}

TEST(BinaryTest, QubitCapFromEnvironment) {
  EXPECT_EQ(run_binary("simulate --n 4 --eta 3").status, 0);
  EXPECT_EQ(run_binary("simulate --n 4 --eta 3 --max-qubits 10").status, 3);
  ::setenv(kQubitCapEnv, "10", 1);
  EXPECT_EQ(run_binary("simulate --n 4 --eta 3").status, 3);
  ::unsetenv(kQubitCapEnv);
}

TEST(BinaryTest, ConfigFileWithFlagOverride) {
  const auto path = std::filesystem::temp_directory_path() / "cqsearch_cli_test.toml";
  {
    std::ofstream out(path);
    out << "n = 4\neta = 3\nmarks = \"3\"\nseed = 7\n";
  }
  const auto from_file = run_binary("--config '" + path.string() + "' simulate");
  ASSERT_EQ(from_file.status, 0);
  const auto doc = Document::parse(from_file.out);
  EXPECT_EQ(doc["params"]["eta"], 3);
  EXPECT_EQ(doc["params"]["seed"], 7);
  EXPECT_EQ(doc["result"]["winner"], 3);
  const auto overridden = run_binary("--config '" + path.string() + "' simulate --eta 2");
  EXPECT_EQ(Document::parse(overridden.out)["params"]["eta"], 2);
  std::filesystem::remove(path);
}

TEST(BinaryTest, ByteIdenticalAcrossRuns) {
  for (const std::string args :
       {"simulate --n 4 --t 2 --eta 3 --seed 3 --tie-break random --capture",
        "analytic --n 8 --t 2 --eta 5 --trials 2000 --seed 4", "gates --n 4 --eta 3 --marks 1,4 --format csv"}) {
    const auto a = run_binary(args);
    const auto b = run_binary(args);
    EXPECT_EQ(a.status, 0) << args;
    EXPECT_FALSE(a.out.empty());
    EXPECT_EQ(a.out, b.out) << args;
  }
}

TEST(BinaryTest, OutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "cqsearch_cli_test.json";
  const auto inv = run_binary("gates --n 4 --eta 1 --output '" + path.string() + "'");
  EXPECT_EQ(inv.status, 0);
  EXPECT_TRUE(inv.out.empty());
  std::ifstream in(path);
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_EQ(text, run_binary("gates --n 4 --eta 1").out);
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace cqsearch::cli
