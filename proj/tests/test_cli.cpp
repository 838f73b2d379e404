#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "antiflip/cli.hpp"

using antiflip::run_cli;

namespace {

struct Run {
    int status;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int status = run_cli(args, out, err);
    return {status, out.str(), err.str()};
}

std::vector<std::string> split(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string w; in >> w;) out.push_back(w);
    return out;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "missing fixture " << path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST_CASE("text, JSON and DOT output match the fixtures byte for byte") {
    std::ifstream cases(std::string(GOLDEN_DIR) + "/cases.txt");
    REQUIRE(cases.good());
    std::size_t n = 0;
    for (std::string line; std::getline(cases, line);) {
        if (line.empty() || line[0] == '#') continue;
        auto bar = line.find('|');
        std::string name = line.substr(0, bar);
        CAPTURE(name);
        Run r = run(split(line.substr(bar + 1)));
        CHECK(r.status == 0);
        CHECK(r.err.empty());
        CHECK(r.out == slurp(std::string(GOLDEN_DIR) + "/" + name + ".out"));
        ++n;
    }
    CHECK(n >= 30);
}

TEST_CASE("bad input exits 2 with a one-line diagnostic and no output") {
    for (const char* args : {"hj expand 6 4", "hj expand 3 5", "hj expand 1x 2", "hj eval 3,1", "hj eval 3,,2",
                             "hj eval 3,", "wahl chain 1 1", "wahl chain 4 2", "mori seq 5 2 14 9",
                             "mori seq 1 1 5 3 --count 0", "mori flip 2 1 4 3", "mori flip 5 1 7 1",
                             "mori initials --wahl 2 1 --curve 1", "embed milnor --wahl 1 1 --curve 2",
                             "embed blowup 1 1", "--format dot hj eval 4", "--format xml hj expand 5 2",
                             "frobnicate", "hj", "mori seq 1 1 5"}) {
        std::string line = args;
        CAPTURE(line);
        Run r = run(split(line));
        CHECK(r.status == 2);
        CHECK(r.out.empty());
        CHECK(r.err.rfind("error: ", 0) == 0);
        CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
    }
}

TEST_CASE("a bare -2 curve is rejected for its delta") {
    Run r = run(split("embed milnor --wahl 1 1 --curve 2"));
    CHECK(r.status == 2);
    CHECK(r.err.find("delta = 0") != std::string::npos);
}

TEST_CASE("help exits 0") {
    Run r = run({"--help"});
    CHECK(r.status == 0);
    CHECK(r.out.find("mori") != std::string::npos);
}

TEST_CASE("the all-(-2) report is a successful run") {
    Run r = run(split("embed linear 2,2 --count 1"));
    CHECK(r.status == 0);
    CHECK(r.out.find("no embeddings") != std::string::npos);
    Run j = run(split("--format json embed linear 2,2,2 --count 1"));
    CHECK(j.status == 0);
    auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["steps"].empty());
    CHECK(doc["delta"].is_null());
    CHECK(doc["reason"].get<std::string>().find("(-2)-curves") != std::string::npos);
}

TEST_CASE("big integers appear as strings in JSON") {
    Run r = run(split("--format json mori seq 1 1 5 3 --count 50"));
    REQUIRE(r.status == 0);
    auto doc = nlohmann::json::parse(r.out);
    const auto& last = doc["members"].back()["pairs"][1][0];
    CHECK(last.is_string());
    CHECK(last.get<std::string>().size() > 19);
    CHECK(doc["members"][0]["pairs"][1][0] == 5);
}
