#include "cycpart_cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

using cycpart::cli::run;
using nlohmann::json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

json invoke_json(std::vector<std::string> args) {
    args.push_back("--format");
    args.push_back("json");
    const auto o = invoke(args);
    EXPECT_EQ(o.code, 0) << o.err;
    return json::parse(o.out);
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream is(text);
    for (std::string line; std::getline(is, line);) out.push_back(line);
    return out;
}

}  // namespace

TEST(CliQtable, Tsv) {
    const auto o = invoke({"qtable", "6", "2"});
    ASSERT_EQ(o.code, 0);
    EXPECT_EQ(o.out, "n\tcount\n0\t2\n1\t3\n2\t2\n3\t3\n4\t2\n5\t3\ntotal\t15\n");
    EXPECT_EQ(lines(invoke({"qtable", "5", "0"}).out)[1], "0\t1");
    EXPECT_EQ(lines(invoke({"qtable", "5", "0"}).out)[2], "1\t0");
    EXPECT_EQ(lines(invoke({"qtable", "8", "4"}).out)[3], "2\t10");
}

TEST(CliQtable, JsonEnvelope) {
    const auto j = invoke_json({"qtable", "8", "4"});
    EXPECT_EQ(j["command"], "qtable");
    EXPECT_EQ(j["format"], "json");
    EXPECT_EQ(j["params"]["m"], 8);
    EXPECT_EQ(j["payload"]["rows"][2]["count"], "10");
    EXPECT_EQ(j["payload"]["total"], "70");
}

TEST(CliQtable, UsageErrors) {
    EXPECT_EQ(invoke({"qtable", "0", "1"}).code, 1);
    EXPECT_EQ(invoke({"qtable", "6"}).code, 1);
    EXPECT_EQ(invoke({"qtable", "6", "2", "--format", "xml"}).code, 1);
    EXPECT_EQ(invoke({"bogus"}).code, 1);
    EXPECT_EQ(invoke({}).code, 1);
}

TEST(CliProb, Distributions) {
    auto o = invoke({"prob", "6", "2"});
    ASSERT_EQ(o.code, 0);
    auto l = lines(o.out);
    EXPECT_EQ(l[2], "1\t3/15\t1/5");
    EXPECT_EQ(l[4], "3\t3/15\t1/5");
    EXPECT_EQ(l[6], "5\t3/15\t1/5");
    EXPECT_EQ(l.back(), "best_guess\t1,3,5");

    const auto j = invoke_json({"prob", "5", "2"});
    for (const auto& row : j["payload"]["rows"]) EXPECT_EQ(row["reduced"], "1/5");
    EXPECT_EQ(j["payload"]["best_guess"], json({0, 1, 2, 3, 4}));

    l = lines(invoke({"prob", "1", "0"}).out);
    EXPECT_EQ(l[1], "0\t1/1\t1/1");
    EXPECT_EQ(invoke({"prob", "4", "5"}).code, 1);
}

TEST(CliMax, Cases) {
    auto j = invoke_json({"max", "6", "2"});
    EXPECT_EQ(j["payload"]["case"], 3);
    EXPECT_EQ(j["payload"]["residues"], json({1, 3, 5}));
    j = invoke_json({"max", "6", "3"});
    EXPECT_EQ(j["payload"]["case"], 1);
    EXPECT_EQ(j["payload"]["residues"], json({0, 3}));
    j = invoke_json({"max", "5", "2"});
    EXPECT_EQ(j["payload"]["case"], 1);
    EXPECT_EQ(j["payload"]["residues"], json({0, 1, 2, 3, 4}));
    EXPECT_EQ(invoke({"max", "5", "-1"}).code, 1);
}

TEST(CliNecklaces, Modes) {
    EXPECT_EQ(invoke({"necklaces", "8", "2", "--divides", "1"}).out, "count\t3\n");
    EXPECT_EQ(invoke({"necklaces", "8", "0", "--divides", "8"}).out, "count\t1\n");
    EXPECT_EQ(invoke({"necklaces", "4", "2", "--list"}).out, "necklace\tfrequency\n0011\t1\n0101\t2\ntotal\t2\n");
    EXPECT_EQ(invoke({"necklaces", "8", "4"}).out, "frequency\tcount\n1\t8\n2\t1\n4\t1\ntotal\t10\n");
}

TEST(CliNecklaces, Errors) {
    EXPECT_EQ(invoke({"necklaces", "25", "2", "--list"}).code, 1);
    EXPECT_EQ(invoke({"necklaces", "8", "2", "--list", "--divides", "2"}).code, 1);
    EXPECT_EQ(invoke({"necklaces", "8", "2", "--divides", "0"}).code, 1);
}

TEST(CliAudit, Totals) {
    auto j = invoke_json({"audit", "8"});
    EXPECT_EQ(j["payload"]["partition_total"], "32");
    EXPECT_EQ(j["payload"]["necklace_total"], "36");
    EXPECT_EQ(j["payload"]["excluded"].size(), 4u);
    EXPECT_EQ(j["payload"]["balanced"], true);
    j = invoke_json({"audit", "5"});
    EXPECT_EQ(j["payload"]["partition_total"], j["payload"]["necklace_total"]);
    j = invoke_json({"audit", "2"});
    EXPECT_EQ(j["payload"]["partition_total"], "2");
    EXPECT_EQ(j["payload"]["necklace_total"], "3");
}

TEST(CliVerify, SuitesPass) {
    auto o = invoke({"verify", "--max-m", "12", "--suite", "oracle"});
    EXPECT_EQ(o.code, 0) << o.out;
    EXPECT_EQ(lines(o.out).back(), "result\tpass");
    o = invoke({"verify", "--suite", "dft"});
    EXPECT_EQ(o.code, 0) << o.out;
    o = invoke({"verify", "--suite", "all", "--max-m", "12"});
    EXPECT_EQ(o.code, 0) << o.out;
    EXPECT_EQ(o.out.find("FAIL"), std::string::npos);
}

TEST(CliVerify, Bounds) {
    EXPECT_EQ(invoke({"verify", "--max-m", "0"}).code, 1);
    EXPECT_EQ(invoke({"verify", "--max-m", "17", "--suite", "oracle"}).code, 1);
    EXPECT_EQ(invoke({"verify", "--max-m", "11", "--suite", "dft"}).code, 1);
    EXPECT_EQ(invoke({"verify", "--suite", "everything"}).code, 1);
    ::setenv("CYCPART_MAX_ORACLE_M", "6", 1);
    EXPECT_EQ(invoke({"verify", "--max-m", "7", "--suite", "oracle"}).code, 1);
    EXPECT_EQ(invoke({"verify", "--max-m", "6", "--suite", "oracle"}).code, 0);
    ::unsetenv("CYCPART_MAX_ORACLE_M");
}

TEST(CliDiagram, Ascii) {
    EXPECT_EQ(invoke({"diagram", "6", "2"}).out, ".#.#.#\n######\n######\n");
    EXPECT_EQ(invoke({"diagram", "6", "0"}).out, "#.....\n");
}

TEST(CliDiagram, SvgToFile) {
    const auto path = std::filesystem::temp_directory_path() / "cycpart_cli_test_w.svg";
    std::filesystem::remove(path);
    const auto o = invoke({"diagram", "6", "3", "--format", "svg", "--out", path.string()});
    ASSERT_EQ(o.code, 0) << o.err;
    EXPECT_TRUE(o.out.empty());
    std::ifstream in(path);
    const std::string svg((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
    EXPECT_NE(svg.find("version=\"1.1\""), std::string::npos);
    const std::regex rect("<rect ");
    EXPECT_EQ(std::distance(std::sregex_iterator(svg.begin(), svg.end(), rect), std::sregex_iterator()), 20);
    EXPECT_EQ(svg.find("href"), std::string::npos);
    std::filesystem::remove(path);
}

TEST(CliDiagram, UnwritablePathIsIoError) {
    const auto o = invoke({"diagram", "6", "3", "--format", "svg", "--out", "/nonexistent-dir/w.svg"});
    EXPECT_EQ(o.code, 3);
    EXPECT_NE(o.err.find("/nonexistent-dir/w.svg"), std::string::npos);
}

TEST(CliFpoly, Coefficients) {
    EXPECT_EQ(lines(invoke({"fpoly", "6", "2"}).out).back(), "coefficients\t1\t-1\t1\t1\t-1\t1");
    EXPECT_EQ(lines(invoke({"fpoly", "5", "5"}).out).back(), "coefficients\t1\t4\t6\t4\t1");
    EXPECT_EQ(lines(invoke({"fpoly", "5", "1"}).out).back(), "coefficients\t1\t-1\t1\t-1\t1");
    const auto j = invoke_json({"fpoly", "6", "2"});
    EXPECT_EQ(j["payload"]["coefficients"], json({"1", "-1", "1", "1", "-1", "1"}));
    EXPECT_EQ(invoke({"fpoly", "5", "0"}).code, 1);
}

TEST(CliDftCheck, Passes) {
    const auto o = invoke({"dft-check", "8", "3"});
    EXPECT_EQ(o.code, 0);
    EXPECT_EQ(lines(o.out).back(), "result\tpass");
}

TEST(CliJson, RoundTripsByteIdentically) {
    const std::vector<std::vector<std::string>> commands{
        {"qtable", "6", "2"},        {"qtable", "30", "15"},          {"prob", "6", "2"},
        {"max", "12", "4"},          {"necklaces", "4", "2", "--list"}, {"necklaces", "8", "2", "--divides", "1"},
        {"necklaces", "12", "6"},    {"audit", "8"},                  {"verify", "--max-m", "6"},
        {"diagram", "6", "2"},       {"fpoly", "12", "8"},            {"dft-check", "6", "2"}};
    for (auto args : commands) {
        args.push_back("--format");
        args.push_back("json");
        const auto o = invoke(args);
        ASSERT_EQ(o.code, 0) << args[0] << ' ' << o.err;
        const auto parsed = json::parse(o.out);
        EXPECT_EQ(parsed.dump(2) + "\n", o.out) << args[0];
        EXPECT_EQ(parsed["command"], args[0]);
        EXPECT_TRUE(parsed.contains("params"));
        EXPECT_TRUE(parsed.contains("payload"));
    }
}

TEST(CliJson, LargeCountsAreStrings) {
    const auto j = invoke_json({"qtable", "200", "100"});
    const auto& total = j["payload"]["total"];
    ASSERT_TRUE(total.is_string());
    EXPECT_EQ(total.get<std::string>(), cycpart::binomial(200, 100).str());
}

TEST(CliHelp, ExitsZero) {
    const auto o = invoke({"--help"});
    EXPECT_EQ(o.code, 0);
    EXPECT_NE(o.out.find("qtable"), std::string::npos);
}
