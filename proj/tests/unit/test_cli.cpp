#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "test_helpers.hpp"
#include "tripart/cli.hpp"

using namespace tripart;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::ordered_json machine(const std::vector<std::string>& args) {
    std::vector<std::string> full = args;
    full.insert(full.end(), {"--format", "machine"});
    const Outcome o = run_cli(full);
    EXPECT_EQ(o.code, kExitOk) << o.err;
    return nlohmann::ordered_json::parse(o.out);
}

} // namespace

TEST(Cli, CountF5FreeAtFour) {
    const auto j = machine({"count", "--n", "4", "--predicate", "f5free", "--verify"});
    EXPECT_EQ(j["command"], "count");
    EXPECT_EQ(j["passed"], true);
    bool found = false;
    for (const auto& t : j["tables"]) {
        if (t["name"] != "totals") continue;
        EXPECT_EQ(t["rows"][0][2], "16");
        EXPECT_EQ(t["rows"][0][3], "5");
        found = true;
    }
    EXPECT_TRUE(found);
}

TEST(Cli, TextOutputEndsWithResult) {
    const Outcome o = run_cli({"extremal", "--n", "5", "--predicate", "cancellative"});
    EXPECT_EQ(o.code, kExitOk) << o.err;
    EXPECT_NE(o.out.find("result:"), std::string::npos);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run_cli({}).code, kExitUsage);
    EXPECT_EQ(run_cli({"bogus"}).code, kExitUsage);
    EXPECT_EQ(run_cli({"count"}).code, kExitUsage);
    EXPECT_EQ(run_cli({"count", "--n", "4", "--predicate", "nope"}).code, kExitUsage);
    EXPECT_EQ(run_cli({"count", "--n", "4", "--format", "xml"}).code, kExitUsage);
    EXPECT_EQ(run_cli({"count", "--n", "4", "--workers", "0"}).code, kExitUsage);
    EXPECT_EQ(run_cli({"count", "--n", "7", "--mode", "brute"}).code, kExitUsage);
    EXPECT_EQ(run_cli({"check", "--file", "/nonexistent/system.txt"}).code, kExitUsage);
    EXPECT_EQ(run_cli({"experiment", "nope"}).code, kExitUsage);
    EXPECT_EQ(run_cli({"experiment", "chernoff", "--trials", "10"}).code, kExitUsage);
}

TEST(Cli, HelpExitsCleanly) { EXPECT_EQ(run_cli({"--help"}).code, kExitOk); }

TEST(Cli, ParseErrorReportsLine) {
    const fs::path file = fs::path(::testing::TempDir()) / "bad-system.txt";
    std::ofstream(file) << "3 1\n1 2 2\n";
    const Outcome o = run_cli({"check", "--file", file.string()});
    EXPECT_EQ(o.code, kExitUsage);
    EXPECT_NE(o.err.find("line 2"), std::string::npos);
}

TEST(Cli, CheckAndPartitionOnF5) {
    const fs::path file = fs::path(::testing::TempDir()) / "f5-system.txt";
    write_system_file(file.string(), testing_support::f5());
    EXPECT_EQ(run_cli({"check", "--file", file.string()}).code, kExitOk);
    const auto j = machine({"partition", "--file", file.string()});
    EXPECT_NE(j.dump().find("\"1\""), std::string::npos);
}

TEST(Cli, SampleWritesFile) {
    const fs::path file = fs::path(::testing::TempDir()) / "planted.txt";
    fs::remove(file);
    EXPECT_EQ(run_cli({"sample", "--n", "9", "--p", "1", "--file", file.string()}).code, kExitOk);
    EXPECT_EQ(read_system_file(file.string()).size(), 27U);
}

TEST(Cli, StabilityNeedsCache) {
    const fs::path dir = fs::path(::testing::TempDir()) / "cli-cache";
    fs::remove_all(dir);
    fs::create_directories(dir);
    const Outcome missing = run_cli({"experiment", "stability", "--n", "5", "--fraction", "1", "--cache-dir", dir.string()});
    EXPECT_EQ(missing.code, kExitUsage);
    EXPECT_NE(missing.err.find("enumerate"), std::string::npos);
    EXPECT_EQ(run_cli({"enumerate", "--n", "5", "--predicate", "f5free", "--cache-dir", dir.string()}).code, kExitOk);
    EXPECT_EQ(run_cli({"experiment", "stability", "--n", "5", "--fraction", "1", "--cache-dir", dir.string()}).code, kExitOk);
    EXPECT_EQ(run_cli({"cache", "verify", "--n", "5", "--cache-dir", dir.string()}).code, kExitOk);
    EXPECT_EQ(run_cli({"cache", "list", "--cache-dir", dir.string()}).code, kExitOk);
}

TEST(Cli, EnvironmentSuppliesFlags) {
    ::setenv("TRIPART_N", "3", 1);
    const auto j = machine({"count", "--predicate", "all"});
    ::unsetenv("TRIPART_N");
    EXPECT_EQ(j["parameters"]["n"], "3");
}

TEST(Cli, MachineOutputIndependentOfWorkers) {
    const std::vector<std::string> cmd{"experiment", "triangle", "--m", "30", "--trials", "8", "--format", "machine"};
    auto with_workers = [&](const char* w) {
        auto args = cmd;
        args.insert(args.end(), {"--workers", w});
        auto j = nlohmann::ordered_json::parse(run_cli(args).out);
        j.erase("execution");
        return j.dump();
    };
    EXPECT_EQ(with_workers("1"), with_workers("4"));
}
