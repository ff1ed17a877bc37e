#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = hw::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST(Cli, IrrepsJsonListsLabelObjects) {
    const auto r = run({"irreps", "--s", "2", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = json::parse(r.out);
    ASSERT_EQ(j.size(), 22u);
    EXPECT_EQ(j[0], json::parse(R"({"s":2,"p":1,"q":0,"r":0,"t":0,"dim":4,"faithful":true})"));
}

TEST(Cli, FuseFaithfulPairGivesSixteenCharacters) {
    const auto r = run({"fuse", "--s", "2", "--left", "1,0,0", "--right", "3,0,0", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = json::parse(r.out);
    ASSERT_EQ(j["terms"].size(), 16u);
    for (const auto& t : j["terms"]) {
        EXPECT_EQ(t["mult"], 1);
        EXPECT_EQ(t["label"]["dim"], 1);
    }
}

TEST(Cli, FuseWithoutLabelsEmitsTable) {
    const auto r = run({"fuse", "--s", "1"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 15);
    EXPECT_EQ(run({"fuse", "--s", "1", "--left", "1,0,0"}).code, 2);
    EXPECT_EQ(run({"fuse", "--s", "5"}).code, 2);
}

TEST(Cli, VerifyExitCodes) {
    EXPECT_EQ(run({"verify", "--s", "1", "--verify-level", "full"}).code, 0);
    const auto s2 = run({"verify", "--s", "2", "--format", "json"});
    EXPECT_EQ(s2.code, 1);
    EXPECT_FALSE(json::parse(s2.out)["passed"].get<bool>());
    const auto big = run({"verify", "--s", "5", "--verify-level", "full"});
    EXPECT_EQ(big.code, 2);
    EXPECT_NE(big.err.find("sampled"), std::string::npos);
    const auto s10 = run({"verify", "--s", "10", "--verify-level", "sampled", "--format", "json"});
    EXPECT_EQ(s10.code, 0);
    EXPECT_EQ(json::parse(s10.out)["checks"].size(), 5u);
}

TEST(Cli, InvalidInputExitsTwoWithUsage) {
    const auto unknown = run({"bogus"});
    EXPECT_EQ(unknown.code, 2);
    EXPECT_NE(unknown.err.find("Usage"), std::string::npos);
    const auto flag = run({"irreps", "--s", "2", "--colour"});
    EXPECT_EQ(flag.code, 2);
    EXPECT_NE(flag.err.find("Usage"), std::string::npos);
    EXPECT_EQ(run({"irreps"}).code, 2);
    EXPECT_EQ(run({"irreps", "--s", "0"}).code, 2);
    EXPECT_EQ(run({"irreps", "--s", "2", "--format", "xml"}).code, 2);
    EXPECT_EQ(run({"matrix", "--s", "2", "--label", "1,0,0", "--element", "4,0,0"}).code, 2);
    EXPECT_EQ(run({"fourier", "--s", "2", "--label", "0,1,1"}).code, 2);
}

TEST(Cli, NonCanonicalLabelNamesCanonicalForm) {
    const auto r = run({"matrix", "--s", "2", "--label", "2,3,1", "--element", "0,0,1"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("(2,1,1)"), std::string::npos) << r.err;
}

TEST(Cli, MatrixFormats) {
    const auto j = run({"matrix", "--s", "2", "--label", "2,1,1", "--element", "0,0,1", "--format", "json"});
    ASSERT_EQ(j.code, 0);
    EXPECT_EQ(json::parse(j.out)["entries"][1]["exp"], 2);
    const auto csv = run({"matrix", "--s", "2", "--label", "2,1,1", "--element", "0,0,1", "--format", "csv"});
    EXPECT_EQ(csv.out, "row,col,exp\n0,1,0\n1,0,2\n");
}

TEST(Cli, ChartableCsvHeader) {
    const auto r = run({"chartable", "--s", "1", "--format", "csv"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "class,\"0,0,1\",\"0,1,0\",\"0,1,1\",\"0,0,0\",\"1,0,0\"");
    EXPECT_EQ(run({"chartable", "--s", "7"}).code, 2);
}

TEST(Cli, FourierReportsAndExitCodes) {
    const auto ok = run({"fourier", "--s", "1", "--label", "1,0,0", "--format", "json"});
    EXPECT_EQ(ok.code, 0);
    const json j = json::parse(ok.out);
    EXPECT_EQ(j["fourier_matrix"]["dim"], 2);
    EXPECT_TRUE(j["passed"].get<bool>());
    EXPECT_EQ(run({"fourier", "--s", "2", "--label", "2,1,1"}).code, 1);
    const auto all = run({"fourier", "--s", "2", "--format", "csv"});
    EXPECT_EQ(all.code, 1);
    EXPECT_EQ(std::count(all.out.begin(), all.out.end(), '\n'), 7);
}

TEST(Cli, OutputFilesAreByteIdentical) {
    const auto dir = std::filesystem::temp_directory_path();
    const auto a = dir / "hw_cli_test_a.json";
    const auto b = dir / "hw_cli_test_b.json";
    for (const auto& path : {a, b}) {
        const auto r = run({"verify", "--s", "3", "--verify-level", "sampled", "--seed", "7", "--format", "json",
                            "--out", path.string()});
        EXPECT_EQ(r.code, 1);
        EXPECT_TRUE(r.out.empty());
    }
    EXPECT_FALSE(read_file(a).empty());
    EXPECT_EQ(read_file(a), read_file(b));
    std::filesystem::remove(a);
    std::filesystem::remove(b);
    EXPECT_EQ(run({"irreps", "--s", "1", "--out", "/nonexistent-dir/x.txt"}).code, 2);
}

TEST(Cli, HelpExitsZero) {
    const auto r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("verify"), std::string::npos);
}
