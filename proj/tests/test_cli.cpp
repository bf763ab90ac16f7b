// Copyright 2026 The bosonq Authors
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

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

const std::string kCli = BOSONQ_CLI_PATH;
const std::string kSpecs = BOSONQ_SPECS_DIR;

int run(const std::string& args, const std::string& out = "/dev/null") {
  const std::string cmd = kCli + " " + args + " > " + out + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("bosonq_cli_" + name)).string();
}

}  // namespace

TEST(Cli, SuccessExitCodes) {
  EXPECT_EQ(run("table1 --max-q 6"), 0);
  EXPECT_EQ(run("count " + kSpecs + "/quartic_coordinate.json --q-min 2 --q-max 4"), 0);
  EXPECT_EQ(run("blockenc " + kSpecs + "/toy_x_plus_z.json --verify"), 0);
  EXPECT_EQ(run("trotter " + kSpecs + "/anharmonic_q3.json --time 1 --steps 16 --verify"), 0);
}

TEST(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(run("count /nonexistent.json"), 2);
  EXPECT_EQ(run("frobnicate"), 2);
  EXPECT_EQ(run("table1 --format xml"), 2);
  const auto bad = temp_path("bad.json");
  std::ofstream(bad) << "{\n  \"bosons\": 1,\n  \"qubits_per_boson\": \"x\"\n}\n";
  EXPECT_EQ(run("count " + bad), 2);
  std::filesystem::remove(bad);
}

TEST(Cli, CapExceededExitsThree) {
  EXPECT_EQ(run("count " + kSpecs + "/double_well_fock.json --q-min 15"), 3);
}

TEST(Cli, VerificationFailureExitsFour) {
  // At 4 steps the error has not reached the first-order regime yet, so the
  // halving ratio falls outside [0.4, 0.6].
  EXPECT_EQ(run("trotter " + kSpecs + "/anharmonic_q3.json --time 1 --steps 4 --verify"), 4);
}

TEST(Cli, CsvOutputIsDeterministic) {
  const auto a = temp_path("a.csv");
  const auto b = temp_path("b.csv");
  const std::string args = "count " + kSpecs + "/double_well_fock.json --q-min 2 --q-max 6";
  ASSERT_EQ(run(args + " --out " + a), 0);
  ASSERT_EQ(run(args + " --out " + b), 0);
  EXPECT_FALSE(slurp(a).empty());
  EXPECT_EQ(slurp(a), slurp(b));
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST(Cli, FitReadsSeries) {
  const auto series = temp_path("series.csv");
  std::ofstream out(series);
  out << "Q,n_pauli\n";
  for (int q = 6; q <= 14; ++q) out << q << "," << (static_cast<unsigned long long>(q) << (q - 1)) << "\n";
  out.close();
  const auto report = temp_path("fit.json");
  EXPECT_EQ(run("fit " + series + " --format json --out " + report), 0);
  EXPECT_NE(slurp(report).find("\"a\""), std::string::npos);
  std::filesystem::remove(series);
  std::filesystem::remove(report);
}
