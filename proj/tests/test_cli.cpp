#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"

namespace fs = std::filesystem;
using gspmixdom::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

/// Writes `content` to a fresh file in the test scratch directory.
std::string scratch(const std::string& name, const std::string& content) {
    const fs::path dir = fs::temp_directory_path() / "gspmixdom_cli_tests";
    fs::create_directories(dir);
    const fs::path p = dir / name;
    std::ofstream(p) << content;
    return p.string();
}

}  // namespace

TEST_CASE("solve") {
    const auto k2 = invoke({"solve", scratch("k2.gsp", "e(a,b)\n"), "--count"});
    CHECK(k2.code == 0);
    CHECK(k2.out == "gamma_m: 1\ncount: 3\n");

    const auto tri = invoke({"solve", scratch("tri.gsp", "p(s(e(a,b),e(b,c)),e(a,c))"), "--json"});
    REQUIRE(tri.code == 0);
    const auto doc = nlohmann::json::parse(tri.out);
    CHECK(doc.at("gamma_m") == 2);
    CHECK(doc.at("count") == "15");
    CHECK(doc.at("witness").at("vertices").size() + doc.at("witness").at("edges").size() == 2);

    const auto bad = invoke({"solve", scratch("bad.gsp", "s(e(a,b),\ne(c,d))")});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("TerminalMismatch") != std::string::npos);
    CHECK(bad.err.find(":1:1:") != std::string::npos);

    const auto syntax = invoke({"solve", scratch("syntax.gsp", "s(e(a,b),\n  e(b,c)")});
    CHECK(syntax.code == 1);
    CHECK(syntax.err.find(":2:") != std::string::npos);

    CHECK(invoke({"solve", "/nonexistent/file.gsp"}).code == 1);
}

TEST_CASE("oracle") {
    const auto k2 = invoke({"oracle", scratch("k2o.gsp", "e(a,b)"), "--json"});
    REQUIRE(k2.code == 0);
    const auto doc = nlohmann::json::parse(k2.out);
    CHECK(doc.at("gamma_m") == 1);
    CHECK(doc.at("count") == "3");

    const auto edges = invoke({"oracle", scratch("k2.txt", "x y\n")});
    CHECK(edges.code == 0);
    CHECK(edges.out.find("gamma_m: 1") == 0);

    std::string big;
    for (int i = 0; i < 15; ++i) big += "u" + std::to_string(i) + " u" + std::to_string(i + 1) + "\n";
    CHECK(invoke({"oracle", scratch("big.txt", big)}).code == 2);
}

TEST_CASE("check") {
    const std::string k2 = scratch("k2c.gsp", "e(a,b)");
    CHECK(invoke({"check", k2, "--set", "v:a"}).out == "true\n");
    const std::string p3 = scratch("p3.gsp", "s(e(a,b),e(b,c))");
    const auto r = invoke({"check", p3, "--set", "e:0"});
    CHECK(r.code == 0);
    CHECK(r.out == "false\nundominated: c\n");
    CHECK(invoke({"check", p3, "--set", ""}).out.rfind("false", 0) == 0);
    CHECK(invoke({"check", p3, "--set", "v:zz"}).code == 1);
}

TEST_CASE("gen") {
    CHECK(invoke({"gen", "--leaves", "1"}).out == "e(v0,v1)\n");
    const auto a = invoke({"gen", "--leaves", "40", "--seed", "9", "--weights", "1,2,3"});
    const auto b = invoke({"gen", "--leaves", "40", "--seed", "9", "--weights", "1,2,3"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const auto solved = invoke({"solve", scratch("gen.gsp", a.out), "--count", "--witness"});
    CHECK(solved.code == 0);
    CHECK(invoke({"gen", "--leaves", "0"}).code == 1);
    CHECK(invoke({"gen", "--leaves", "5", "--weights", "0,0,0"}).code == 1);
}

TEST_CASE("decompose") {
    const std::string path = scratch("path.txt", "a b\nb c\n");
    const auto r = invoke({"decompose", path, "--terminals", "a,c"});
    CHECK(r.code == 0);
    CHECK(r.out == "s(e(a,b),e(b,c))\n");
    CHECK(invoke({"decompose", scratch("k4.txt", "a b\na c\na d\nb c\nb d\nc d\n")}).code == 3);
    CHECK(invoke({"decompose", path, "--terminals", "a,zz"}).code == 1);
}

TEST_CASE("bench and realize") {
    const auto one = invoke({"bench", "--sizes", "200"});
    CHECK(one.code == 0);
    CHECK(std::count(one.out.begin(), one.out.end(), '\n') == 2);
    const auto three = invoke({"bench", "--sizes", "100,200,400"});
    CHECK(std::count(three.out.begin(), three.out.end(), '\n') == 4);

    const std::string tri = scratch("tri2.gsp", "p(s(e(a,b),e(b,c)),e(a,c))");
    CHECK(invoke({"realize", tri}).out.find("a b") != std::string::npos);
    CHECK(invoke({"realize", tri, "--format", "dot"}).out.find("graph") != std::string::npos);
}

TEST_CASE("usage errors exit 1") {
    CHECK(invoke({}).code == 1);
    CHECK(invoke({"frobnicate"}).code == 1);
    CHECK(invoke({"--help"}).code == 0);
}
