// Copyright 2026 The bitensemble Authors
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

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bitensemble/cli.h"
#include "bitensemble/rng.h"
#include "json.hpp"

using bitensemble::run_cli;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, ChshAcceptanceExample) {
    CliRun r = run({"chsh", "--n", "1000", "--seed", "42", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["seed"], 42);
    EXPECT_LE(std::fabs(j["statistics"]["S"]["approx"].get<double>() - 2 * std::sqrt(2.0)), 5e-3);
}

TEST(Cli, NivenExamples) {
    auto a = nlohmann::json::parse(run({"niven", "1/5"}).out);
    EXPECT_EQ(a["verdicts"]["niven"]["status"], "IRRATIONAL");
    CliRun b = run({"niven", "1/6"});
    EXPECT_EQ(b.code, 0);
    auto j = nlohmann::json::parse(b.out);
    EXPECT_EQ(j["verdicts"]["niven"]["status"], "RATIONAL");
    EXPECT_EQ(j["verdicts"]["niven"]["value"], "1/2");
}

TEST(Cli, ByteIdenticalReruns) {
    std::vector<std::string> args{"si-census", "--seed", "11", "--max-candidates", "500"};
    EXPECT_EQ(run(args).out, run(args).out);
    std::vector<std::string> meas{"measure", "--n", "6", "--m", "3", "--seed", "5"};
    EXPECT_EQ(run(meas).out, run(meas).out);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({}).code, bitensemble::kExitUsage);
    EXPECT_EQ(run({"teleport"}).code, bitensemble::kExitUsage);
    CliRun unknown = run({"qubit", "--bogus", "1"});
    EXPECT_EQ(unknown.code, bitensemble::kExitUsage);
    EXPECT_NE(unknown.err.find("Usage"), std::string::npos);
    EXPECT_EQ(run({"qubit", "--n", "2", "--m", "9"}).code, bitensemble::kExitUsage);
    EXPECT_EQ(run({"chsh", "--n", "4"}).code, bitensemble::kExitVerdict);
    EXPECT_EQ(run({"mz", "--n", "3", "--exact-phi", "1/6"}).code, bitensemble::kExitVerdict);
    EXPECT_EQ(run({"qubit", "--format", "yaml"}).code, bitensemble::kExitUsage);
}

TEST(Cli, FormatsAgreeOnSeed) {
    CliRun csv = run({"bell", "--n", "3", "--ma", "1", "--mb", "4", "--seed", "8", "--format", "csv"});
    ASSERT_EQ(csv.code, 0);
    EXPECT_NE(csv.out.find("seed"), std::string::npos);
    CliRun text = run({"bell", "--n", "3", "--ma", "1", "--mb", "4", "--seed", "8", "--format", "text"});
    EXPECT_NE(text.out.find("seed: 8"), std::string::npos);
    EXPECT_NE(text.out.find("verdicts.correlation_law: true"), std::string::npos);
}

TEST(Cli, OutRelativeToEnvironmentDirectory) {
    auto dir = std::filesystem::temp_directory_path() / "bitensemble_cli_test";
    std::filesystem::create_directories(dir);
    ::setenv(bitensemble::kOutDirEnv, dir.c_str(), 1);
    CliRun r = run({"niven", "2/7", "--out", "niven.json"});
    ::unsetenv(bitensemble::kOutDirEnv);
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.out.empty());
    std::ifstream f(dir / "niven.json");
    auto j = nlohmann::json::parse(f);
    EXPECT_EQ(j["config"]["phi"], "2/7");
}

TEST(Cli, SweepRowsOrderedWithDerivedSeeds) {
    CliRun r = run({"sweep", "chsh", "--ns", "8,16,32", "--seed", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream lines(r.out);
    std::string header, line;
    std::getline(lines, header);
    EXPECT_EQ(header.rfind("N,seed,S", 0), 0u);
    std::vector<std::string> rows;
    while (std::getline(lines, line)) {
        rows.push_back(line);
    }
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(rows[0].rfind("8,", 0), 0u);
    EXPECT_EQ(rows[2].rfind("32,", 0), 0u);
}

TEST(Cli, SingleElementSweepMatchesDirectRun) {
    CliRun sweep = run({"sweep", "chsh", "--ns", "64", "--seed", "5"});
    ASSERT_EQ(sweep.code, 0);
    std::uint64_t seed = bitensemble::derive_seed(5, 0);
    auto direct = nlohmann::json::parse(run({"chsh", "--n", "64", "--seed", std::to_string(seed)}).out);
    EXPECT_NE(sweep.out.find("64," + std::to_string(seed) + "," + direct["statistics"]["S"]["exact"].get<std::string>()),
              std::string::npos);
}

TEST(Cli, SweepRangeErrors) {
    EXPECT_EQ(run({"sweep", "chsh"}).code, bitensemble::kExitUsage);
    EXPECT_EQ(run({"sweep", "chsh", "--ns", "16,8"}).code, bitensemble::kExitUsage);
    EXPECT_EQ(run({"sweep", "warp", "--ns", "8"}).code, bitensemble::kExitUsage);
}

TEST(Cli, SweepFailingRowFlushesPartialOutput) {
    CliRun r = run({"sweep", "chsh", "--ns", "8,16,32", "--", "--alpha1", "1/4001"});
    // N = 8 puts both Alice settings on lattice point 0, so the first row already fails.
    EXPECT_EQ(r.code, bitensemble::kExitVerdict);
    // 1/6 turn has cosine 1/2, on the grid at N = 4 but not at N = 5.
    CliRun later = run({"sweep", "mz", "--ns", "4,5", "--", "--exact-phi", "1/6"});
    EXPECT_EQ(later.code, bitensemble::kExitVerdict);
    EXPECT_EQ(later.out.rfind("N,seed", 0), 0u);
    EXPECT_NE(later.out.find("\n4,"), std::string::npos);
    EXPECT_EQ(later.out.find("\n5,"), std::string::npos);
}
