#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "tamejl/cli.hpp"
#include "tamejl/error.hpp"

using namespace tamejl;

namespace {

struct Outcome {
    int code = -1;
    std::string out;
    std::string err;
};

Outcome run_cli(std::vector<std::string> args)
{
    args.insert(args.begin(), "tamejl");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    Outcome o;
    o.code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    o.out = out.str();
    o.err = err.str();
    return o;
}

std::vector<std::string> lines_of(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream is(text);
    for (std::string line; std::getline(is, line);) out.push_back(line);
    return out;
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

std::string write_config(const std::string& name, const std::string& body)
{
    const std::string path = ::testing::TempDir() + name;
    std::ofstream(path) << body;
    return path;
}

// Tokenizes the replay flags of a failure row, dropping the single quotes.
std::vector<std::string> replay_args(const std::string& flags)
{
    std::vector<std::string> out{"verify"};
    for (auto token : split(flags, ' ')) {
        if (token.size() >= 2 && token.front() == '\'' && token.back() == '\'') {
            token = token.substr(1, token.size() - 2);
        }
        out.push_back(token);
    }
    return out;
}

std::vector<std::string> failing_orbits(const std::string& report)
{
    std::vector<std::string> out;
    for (const auto& line : lines_of(report)) {
        const auto cols = split(line, '\t');
        if (cols.size() > 10 && cols[0] == "orbit" && cols[10] == "FAIL") out.push_back(cols[1]);
    }
    return out;
}

const char* kSmallGrid = "# small grid\nq_list = 3,5\nn_max = 4\nw_samples = 0\nt_max = 1\na_max = 4\n";

}  // namespace

TEST(Classify, SpecExamples)
{
    const Outcome o = run_cli({"classify", "--q", "5", "--e", "2", "--f", "2"});
    EXPECT_EQ(o.code, 0);
    const auto rows = lines_of(o.out);
    ASSERT_EQ(rows.size(), 4U);
    EXPECT_EQ(rows[1], "0\t1\tsym-unram\t25\t5\t2");
    EXPECT_EQ(rows[2], "1\t0\tsym-ram\t25\t25\t2");
    EXPECT_EQ(rows[3], "1\t1\tsym-unram\t25\t5\t2");

    const Outcome bad = run_cli({"classify", "--q", "3", "--e", "3"});
    EXPECT_EQ(bad.code, 2);
    EXPECT_NE(bad.err.find("TameViolation"), std::string::npos);

    const Outcome empty = run_cli({"classify", "--q", "3", "--e", "1", "--f", "1"});
    EXPECT_EQ(empty.code, 0);
    EXPECT_EQ(lines_of(empty.out).size(), 1U);
}

TEST(Classify, JsonRows)
{
    const Outcome o = run_cli({"classify", "--q", "5", "--e", "4", "--format", "json"});
    EXPECT_EQ(o.code, 0);
    const auto rows = lines_of(o.out);
    ASSERT_EQ(rows.size(), 3U);
    std::vector<std::string> classes;
    for (const auto& row : rows) classes.push_back(nlohmann::json::parse(row).at("class"));
    EXPECT_EQ(classes, (std::vector<std::string>{"asym", "sym-ram", "asym"}));
}

TEST(Verify, SpecExamples)
{
    const Outcome a = run_cli({"verify", "--q", "3", "--e", "1", "--f", "2", "--m", "1", "--d", "2",
                               "--h", "1", "--tower", "E", "--levels", "1"});
    EXPECT_EQ(a.code, 0);
    const auto rows = lines_of(a.out);
    ASSERT_EQ(rows.size(), 3U);
    EXPECT_EQ(rows.back(), "aggregate\t-\t-\t-\t-\t-\t-\t-\t(-1,+1)\t(-1,+1)\tPASS\t-");

    const Outcome b = run_cli({"verify", "--q", "3", "--e", "2", "--f", "1", "--m", "1", "--d", "2",
                               "--h", "1", "--tower", "E", "--levels", "1"});
    EXPECT_EQ(b.code, 0);

    const Outcome c = run_cli({"verify", "--q", "3", "--e", "2", "--f", "1", "--m", "1", "--d", "2",
                               "--h", "1", "--tower", "F", "--levels", "1"});
    EXPECT_EQ(c.code, 2);
    EXPECT_NE(c.err.find("UnramifiedViolation"), std::string::npos);
}

TEST(Verify, JsonAggregate)
{
    const Outcome o = run_cli({"verify", "--q", "3", "--e", "1", "--f", "2", "--m", "1", "--d", "2",
                               "--h", "1", "--tower", "E", "--levels", "1", "--format", "json"});
    EXPECT_EQ(o.code, 0);
    const auto agg = nlohmann::json::parse(lines_of(o.out).back());
    EXPECT_EQ(agg.at("row"), "aggregate");
    EXPECT_EQ(agg.at("lhs"), nlohmann::json::array({-1, 1}));
    EXPECT_EQ(agg.at("rhs"), nlohmann::json::array({-1, 1}));
    EXPECT_TRUE(agg.at("pass").get<bool>());
}

TEST(Verify, IdentityFailureExitsOne)
{
    const Outcome o = run_cli({"verify", "--q", "3", "--e", "2", "--f", "2", "--m", "1", "--d", "4",
                               "--h", "1", "--tower", "mask:9", "--levels", "1"});
    EXPECT_EQ(o.code, 1);
    EXPECT_EQ(failing_orbits(o.out), std::vector<std::string>{"(1,1)"});
}

TEST(Verify, BadInput)
{
    EXPECT_EQ(run_cli({"verify", "--q", "3"}).code, 2);
    EXPECT_EQ(run_cli({"verify", "--q", "3", "--e", "1", "--f", "2", "--m", "1", "--d", "2", "--h",
                       "1", "--tower", "E,F", "--levels", "1"})
                  .code,
              2);
    EXPECT_EQ(run_cli({"verify", "--q", "3", "--e", "1", "--f", "2", "--m", "1", "--d", "2", "--h",
                       "1", "--tower", "mask:zz", "--levels", "1"})
                  .code,
              2);
    EXPECT_EQ(run_cli({"bogus"}).code, 2);
    EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(Config, Parsing)
{
    std::istringstream in("q_list=3, 5\nn_max=4 # comment\nstrict=true\nmutation=flip-iota\n");
    const GridSpec grid = cli::parse_config(in);
    EXPECT_EQ(grid.q_list, (std::vector<std::int64_t>{3, 5}));
    EXPECT_EQ(grid.n_max, 4);
    EXPECT_TRUE(grid.strict);
    EXPECT_EQ(grid.mutation, Mutation::FlipIota);

    std::istringstream unknown("colour=blue\n");
    EXPECT_THROW(cli::parse_config(unknown), Error);
    std::istringstream garbage("n_max=four\n");
    EXPECT_THROW(cli::parse_config(garbage), Error);
}

TEST(Sweep, SpecExamples)
{
    const Outcome empty = run_cli({"sweep", "--config", write_config("empty.cfg", "")});
    EXPECT_EQ(empty.code, 0);
    EXPECT_NE(empty.out.find("instances\t0\n"), std::string::npos);
    EXPECT_NE(empty.out.find("failures\t0\n"), std::string::npos);

    const Outcome even = run_cli({"sweep", "--config", write_config("even.cfg", "q_list=4\n")});
    EXPECT_EQ(even.code, 2);

    const Outcome n1 = run_cli(
        {"sweep", "--config", write_config("n1.cfg", "q_list=3,5,7,9,11\nn_max=1\nt_max=2\na_max=6\n")});
    EXPECT_EQ(n1.code, 0);
    EXPECT_NE(n1.out.find("instances\t5\n"), std::string::npos);
}

TEST(Sweep, DeterministicAcrossJobs)
{
    const std::string path = write_config("small.cfg", kSmallGrid);
    const Outcome one = run_cli({"sweep", "--config", path, "--jobs", "1"});
    const Outcome four = run_cli({"sweep", "--config", path, "--jobs", "4"});
    EXPECT_EQ(one.out, four.out);
    EXPECT_EQ(one.code, four.code);
    const Outcome json = run_cli({"sweep", "--config", path, "--format", "json"});
    EXPECT_EQ(json.code, one.code);
    EXPECT_NO_THROW(nlohmann::json::parse(lines_of(json.out).front()));
}

TEST(Sweep, FailureRowsReplay)
{
    const Outcome o = run_cli({"sweep", "--config", write_config("small.cfg", kSmallGrid)});
    std::int64_t replayed = 0;
    for (const auto& line : lines_of(o.out)) {
        const auto cols = split(line, '\t');
        if (cols[0] != "failure") continue;
        const Outcome again = run_cli(replay_args(cols[1]));
        EXPECT_EQ(again.code, 1) << cols[1];
        EXPECT_FALSE(failing_orbits(again.out).empty());
        EXPECT_NE(again.out.find(cols[2]), std::string::npos);
        ++replayed;
    }
    EXPECT_EQ(o.code, replayed > 0 ? 1 : 0);
}
