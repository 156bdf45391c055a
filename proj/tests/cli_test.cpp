#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dold/cli.hpp"

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "dold");
    std::ostringstream out, err;
    const int code = dold::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

}  // namespace

TEST(Cli, ConvertSpectrum) {
    const auto r = run({"convert", "--spectrum", "{3,4}"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(has(r.out, "dold: (3,1,-1,-1)\n"));
    EXPECT_TRUE(has(r.out, "genus: 2\n"));
    EXPECT_TRUE(has(r.out, "ap: {1,2,3,4}\n"));
    EXPECT_TRUE(has(r.out, "mper: {1,3}\n"));
}

TEST(Cli, ConvertDold) {
    const auto r = run({"convert", "--dold", "15:-2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(has(r.out, "spectrum: {1,1,1,1,3,3,5,5,15,15}\n"));
    EXPECT_TRUE(has(r.out, "genus: 16\n"));
    const auto empty = run({"convert", "--dold", ""});
    EXPECT_EQ(empty.code, 0);
    EXPECT_TRUE(has(empty.out, "spectrum: {1,1}\n"));
    EXPECT_TRUE(has(empty.out, "genus: 1\n"));
}

TEST(Cli, ConvertRoundTrip) {
    for (const char* input : {"{3,4}", "{1,1,6}", "2:-1,3:1", "{1}"}) {
        const auto first = run({"convert", "--spectrum", input});
        ASSERT_EQ(first.code, 0);
        const std::string dold_line = first.out.substr(first.out.find("dold: ") + 6);
        const std::string tuple = dold_line.substr(0, dold_line.find('\n'));
        const auto second = run({"convert", "--dold", tuple});
        ASSERT_EQ(second.out, first.out) << input;
    }
}

TEST(Cli, ConvertRealizabilityGate) {
    const auto r = run({"convert", "--spectrum", "{1}", "--require-realizable"});
    EXPECT_EQ(r.code, 1);
    EXPECT_TRUE(has(r.out, "realizable: no (r_1 = 1 odd)"));
    EXPECT_EQ(run({"convert", "--spectrum", "{1}"}).code, 0);
}

TEST(Cli, ConvertJson) {
    const auto r = run({"convert", "--spectrum", "{6,6}", "--format", "json"});
    EXPECT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["ap"], nlohmann::json({2, 3, 6}));
    EXPECT_EQ(j["mper"], nlohmann::json({3}));
    EXPECT_EQ(j["genus"], 2);
    EXPECT_EQ(j["realizable"], true);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"convert"}).code, 2);
    EXPECT_EQ(run({"convert", "--spectrum", "{1}", "--dold", "()"}).code, 2);
    const auto parse = run({"convert", "--spectrum", "{3,x}"});
    EXPECT_EQ(parse.code, 2);
    EXPECT_TRUE(has(parse.err, "position 3"));
    EXPECT_EQ(run({"catalog", "0"}).code, 2);
    EXPECT_EQ(run({"min-genus", "{}"}).code, 2);
    EXPECT_EQ(run({"min-genus", "{2}", "--odd"}).code, 2);
    EXPECT_EQ(run({"bounds", "(1,"}).code, 2);
    EXPECT_EQ(run({"summary", "3", "2"}).code, 2);
    EXPECT_EQ(run({"nonsense"}).code, 2);
}

TEST(Cli, Catalog) {
    const auto r = run({"catalog", "1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 5);
    EXPECT_TRUE(has(r.err, "5 spectra, 5 AP sets, 3 odd AP sets"));
    const auto csv = run({"catalog", "2", "--format", "csv", "--threads", "2"});
    EXPECT_EQ(csv.code, 0);
    EXPECT_EQ(std::count(csv.out.begin(), csv.out.end(), '\n'), 20);
}

TEST(Cli, CatalogToFile) {
    const auto path = std::filesystem::temp_directory_path() / "dold_cli_catalog_test.jsonl";
    const auto r = run({"catalog", "2", "--output", path.string()});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    std::string line;
    int n = 0;
    while (std::getline(in, line)) ++n;
    EXPECT_EQ(n, 19);
    std::filesystem::remove(path);
    EXPECT_EQ(run({"catalog", "1", "--output", "/nonexistent-dir/x.jsonl"}).code, 3);
}

TEST(Cli, MinGenus) {
    auto r = run({"min-genus", "{1,2}"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(has(r.out, "genus: 1\n"));
    EXPECT_TRUE(has(r.out, "spectrum: {2,2}\n"));
    EXPECT_TRUE(has(run({"min-genus", "{15}"}).out, "genus: 16\n"));
    r = run({"min-genus", "{15}", "--odd"});
    EXPECT_TRUE(has(r.out, "genus: 14\n"));
    EXPECT_TRUE(has(r.out, "ap: {2,15,30}\n"));
}

TEST(Cli, Realize) {
    auto r = run({"realize", "--spectrum", "{3}"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(has(r.out, "-1 -1\n 1  0\n"));
    EXPECT_TRUE(has(r.out, "char_poly: x^2 + x + 1\n"));
    EXPECT_TRUE(has(r.out, "check lefschetz: pass"));
    r = run({"realize", "--spectrum", "{1,1}", "--format", "json"});
    EXPECT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["matrix"].dump(), R"([["1","0"],["0","1"]])");
    r = run({"realize", "--dold", "1:1"});
    EXPECT_EQ(r.code, 1);
    EXPECT_TRUE(has(r.err, "r_1 = 1 odd"));
    EXPECT_EQ(run({"realize", "--spectrum", "{7,9}", "--horizon-cap", "10"}).code, 2);
}

TEST(Cli, Bounds) {
    auto r = run({"bounds", "15:-2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(has(r.out, "15\todd-exact\t>= 2"));
    r = run({"bounds", ""});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "n\tkind\tbound\n");
    r = run({"bounds", "2:-2"});
    EXPECT_TRUE(has(r.out, "2\teven-pair\t>= 2 (minimal period 2 or 1)"));
}

TEST(Cli, Summary) {
    const auto r = run({"summary", "1", "3", "--format", "csv"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "genus,spectra,ap_sets,mper_sets\n1,5,5,3\n2,19,15,5\n3,59,40,9\n");
}

TEST(Cli, DeterministicUnderThreads) {
    EXPECT_EQ(run({"catalog", "5", "--threads", "1"}).out, run({"catalog", "5", "--threads", "3"}).out);
}
