// Copyright (c) Boxicity toolkit contributors.
// SPDX-License-Identifier: Apache-2.0
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

#ifndef BOXI_PATH
#error "BOXI_PATH must name the boxi executable"
#endif

namespace fs = std::filesystem;
using Json = nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
};

class Workspace {
public:
    Workspace() {
        dir_ = fs::temp_directory_path() / ("boxi_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(dir_);
    }
    ~Workspace() {
        std::error_code ec;
        fs::remove_all(dir_, ec);
    }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    // Runs boxi with args; stderr is discarded.
    Run boxi(const std::string& args) const {
        const std::string cmd = std::string("\"") + BOXI_PATH + "\" " + args + " 2>/dev/null";
        FILE* pipe = ::popen(cmd.c_str(), "r");
        REQUIRE(pipe != nullptr);
        std::string out;
        char buffer[4096];
        std::size_t got;
        while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) out.append(buffer, got);
        const int status = ::pclose(pipe);
        return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
    }

    std::string read(const std::string& name) const {
        std::ifstream in(path(name));
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    void write(const std::string& name, const std::string& text) const {
        std::ofstream(path(name)) << text;
    }

private:
    fs::path dir_;
};

}  // namespace

TEST_CASE("gen roberts then exact prints the boxicity") {
    Workspace ws;
    REQUIRE(ws.boxi("gen roberts 3 -o " + ws.path("r3.json")).code == 0);
    const Run r = ws.boxi("exact " + ws.path("r3.json"));
    CHECK(r.code == 0);
    CHECK(r.out == "3\n");
}

TEST_CASE("girth4 construction verifies") {
    Workspace ws;
    REQUIRE(ws.boxi("gen cycle 7 -o " + ws.path("c7.json")).code == 0);
    REQUIRE(ws.boxi("construct girth4 " + ws.path("c7.json") + " -o " + ws.path("rep.json")).code == 0);
    CHECK(Json::parse(ws.read("rep.json"))["d"] == 4);
    const Run v = ws.boxi("verify " + ws.path("c7.json") + " " + ws.path("rep.json"));
    CHECK(v.code == 0);
    CHECK(v.out.rfind("equal", 0) == 0);
}

TEST_CASE("verify reports a wrong representation") {
    Workspace ws;
    REQUIRE(ws.boxi("gen cycle 6 -o " + ws.path("c6.json")).code == 0);
    REQUIRE(ws.boxi("gen path 6 -o " + ws.path("p6.json")).code == 0);
    REQUIRE(ws.boxi("construct forest " + ws.path("p6.json") + " -o " + ws.path("rep.json")).code == 0);
    const Run v = ws.boxi("verify " + ws.path("c6.json") + " " + ws.path("rep.json") + " --report " +
                          ws.path("report.json"));
    CHECK(v.code == 1);
    CHECK(v.out.find("missing 0 5") != std::string::npos);
    CHECK(Json::parse(ws.read("report.json"))["equal"] == false);
}

TEST_CASE("exit codes") {
    Workspace ws;
    ws.write("broken.json", "{\"n\": 3, \"edges\": [[0,");
    CHECK(ws.boxi("verify " + ws.path("broken.json") + " " + ws.path("broken.json")).code == 2);
    CHECK(ws.boxi("exact " + ws.path("missing.json")).code == 2);
    CHECK(ws.boxi("gen random 6").code == 2);
    CHECK(ws.boxi("gen nonsense 6").code == 2);
    CHECK(ws.boxi("construct bogus x").code == 2);
    CHECK(ws.boxi("").code == 2);

    REQUIRE(ws.boxi("gen roberts 3 -o " + ws.path("r3.json")).code == 0);
    CHECK(ws.boxi("exact " + ws.path("r3.json") + " --max-d 2").code == 3);
    CHECK(ws.boxi("exact " + ws.path("r3.json") + " --max-nodes 1").code == 3);
}

TEST_CASE("outputs are deterministic") {
    Workspace ws;
    const Run a = ws.boxi("gen random 9 --p 0.4 --seed 17");
    const Run b = ws.boxi("gen random 9 --p 0.4 --seed 17");
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    ws.write("g.json", a.out);
    CHECK(ws.boxi("exact " + ws.path("g.json") + " -o " + ws.path("r1.json") + " --witness " + ws.path("w1.json"))
              .code == 0);
    CHECK(ws.boxi("exact " + ws.path("g.json") + " -o " + ws.path("r2.json") + " --witness " + ws.path("w2.json"))
              .code == 0);
    Json r1 = Json::parse(ws.read("r1.json"));
    Json r2 = Json::parse(ws.read("r2.json"));
    CHECK(r1 == r2);
    CHECK(ws.read("w1.json") == ws.read("w2.json"));
    CHECK(ws.boxi("verify " + ws.path("g.json") + " " + ws.path("w1.json")).code == 0);
}

TEST_CASE("graph documents round trip through gen") {
    Workspace ws;
    const Run a = ws.boxi("gen torus 3 --m 4 -o " + ws.path("t.json"));
    REQUIRE(a.code == 0);
    const Json doc = Json::parse(ws.read("t.json"));
    CHECK(doc["n"] == 12);
    CHECK(doc["edges"].size() == 24);
    ws.write("copy.json", doc.dump());
    REQUIRE(ws.boxi("construct acyclic " + ws.path("copy.json") + " -o " + ws.path("rep.json")).code == 0);
    CHECK(ws.boxi("verify " + ws.path("t.json") + " " + ws.path("rep.json")).code == 0);
}

TEST_CASE("derive, poset and bounds") {
    Workspace ws;
    REQUIRE(ws.boxi("gen cycle 7 -o " + ws.path("c7.json")).code == 0);
    ws.write("script.json", R"({"rule": "girth4", "partition": {"forest": [0,1,2,3,4,5], "stable": [6]}})");
    const Run d = ws.boxi("derive " + ws.path("c7.json") + " " + ws.path("script.json") + " -o " +
                          ws.path("rep.json") + " --report " + ws.path("report.json"));
    CHECK(d.code == 0);
    CHECK(Json::parse(ws.read("report.json"))["total_dimension"] == 4);

    ws.write("bad.json", R"({"rule": "girth4", "partition": {"forest": [0,1,2,3,4,5,6], "stable": []}})");
    CHECK(ws.boxi("derive " + ws.path("c7.json") + " " + ws.path("bad.json")).code != 0);

    const Run p = ws.boxi("poset " + ws.path("c7.json") + " --realizer");
    CHECK(p.code == 0);
    CHECK(Json::parse(p.out)["starred_intersection_equals_poset"] == true);

    const Run b = ws.boxi("bounds --genus 1 --orientable");
    CHECK(b.code == 0);
    CHECK(Json::parse(b.out)["poset_dimension_bound"]["floor"] == 27);
    CHECK(ws.boxi("bounds --genus 1").code == 2);
}
