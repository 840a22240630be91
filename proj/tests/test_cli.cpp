#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
};

std::string quote(const std::string& s) {
    std::string q = "'";
    for (char c : s) {
        if (c == '\'') q += "'\\''";
        else q += c;
    }
    return q + "'";
}

// stdout only; stderr goes to a side channel merged on request
Run run(const std::string& args, bool merge_err = false) {
    std::string cmd = std::string(MIXSING_CLI_PATH) + " " + args + (merge_err ? " 2>&1" : " 2>/dev/null");
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    int st = pclose(p);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

json run_json(const std::string& args, int expect = 0) {
    auto r = run(args);
    CHECK(r.code == expect);
    return json::parse(r.out);
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("exit codes") {
    CHECK(run("newton " + quote("z2^2 - z1^3")).code == 0);
    auto pe = run("newton " + quote("z1 + $"), true);
    CHECK(pe.code == 1);
    CHECK(pe.out.find("position 5") != std::string::npos);
    CHECK(run("newton " + quote("z1+z2+z3")).code == 2);
    CHECK(run("newton " + quote("z1+z2+z3") + " --weight 1,2,3").code == 0);
    CHECK(run("lkn " + quote("z2^2 - z1^3") + " --steps 2").code == 2);
    CHECK(run("probe " + quote("z2^2 - z1^3") + " --mode bogus").code != 0);
}

TEST_CASE("zero polynomial is refused") {
    for (const char* cmd : {"newton", "analyze"}) {
        auto r = run(std::string(cmd) + " " + quote("z1 - z1"), true);
        CHECK(r.code == 2);
        CHECK(r.out.find("empty Newton boundary") != std::string::npos);
    }
}

TEST_CASE("newton report") {
    auto j = run_json("newton " + quote("z1^3*zb1^2 + z1^2*z2^2 + z2^3*zb2"));
    CHECK(j["schema"] == 1);
    const auto& e = j["newton"]["edges"];
    REQUIRE(e.size() == 2);
    CHECK(e[0]["weight"] == json::array({2, 3}));
    CHECK(e[0]["d"] == 10);
    CHECK(e[1]["weight"] == json::array({1, 1}));
    CHECK(e[1]["d"] == 4);
    CHECK(j["newton"]["convenient"] == true);
    CHECK(j["newton"]["polar_sections"]["a1"] == 1);
    CHECK(j["newton"]["polar_sections"]["a2"] == 2);
    CHECK(j["newton"]["lattice_points"] == 4);
}

TEST_CASE("analyze invariants") {
    auto j = run_json("analyze " + quote("-2z1^2*zb1 + z2^2*zb2 + 3z1^2*zb2"));
    CHECK(j["invariants"]["lkn"] == 3);
    CHECK(j["invariants"]["chi_F"] == -1);
    CHECK(j["invariants"]["mu"] == 2);
    CHECK(j["invariants"]["zeta"]["text"] == "(1-t)");

    auto c = run_json("analyze " + quote("z2^2 - z1^3"));
    CHECK(c["invariants"]["mu"] == 2);
    CHECK(c["invariants"]["lkn"] == 1);
    CHECK(c["invariants"]["zeta"]["text"] == "(1-t^2)^-1(1-t^3)^-1(1-t^6)");
    CHECK(c["invariants"]["zeta"]["char_poly"] == "t^2 - t + 1");
}

TEST_CASE("multiple vertex is refused") {
    auto r = run("analyze " + quote("z1^3 + 0.5z1^2*zb1 + z2^2"));
    CHECK(r.code == 2);
    auto j = json::parse(r.out);
    CHECK(j["error"]["stage"] == "invariants");
    CHECK(j["error"]["message"].get<std::string>().find("multiple vertex") != std::string::npos);
    // with a torus zero on the axis face the prober stops it first
    auto d = run("analyze " + quote("z1^3 + z1^2*zb1 + z2^2"));
    CHECK(d.code == 2);
    CHECK(json::parse(d.out)["error"]["stage"] == "nondegen");
}

TEST_CASE("probe finds a degenerate witness") {
    auto j = run_json("probe " + quote("z1^2 + 2z1*zb2 + zb2^2"));
    CHECK(j["verdict"] == "DegenerateWitness");
    CHECK(j["clean"] == false);
    CHECK(j["witness"]["point"].size() == 2);
    CHECK(j["witness"]["alpha"].size() == 2);
    CHECK(j["witness"]["residual"].get<double>() < 1e-8);
}

TEST_CASE("lkn through the tracker") {
    auto j = run_json("lkn " + quote("z1^3 + 0.5z1*zb1^2 - z2^3") + " --steps 4096");
    CHECK(j["lkn"] == 3);
    CHECK(j["route"] == "tracker");
    CHECK(j["tracker"]["cycles"] == 3);
}

TEST_CASE("fan of the cusp") {
    auto j = run_json("fan " + quote("z2^2 - z1^3"));
    CHECK(j["vertices"] == json::parse("[[1,0],[1,1],[2,3],[1,2],[0,1]]"));
    CHECK(j["multiplicities"] == json::parse("[null,2,6,3,null]"));
    CHECK(j["gamma"] == json::parse("[null,3,1,2,null]"));
}

TEST_CASE("canonical form round trip and determinism") {
    for (const char* s : {"z2^2 - z1^3", "-2z1^2*zb1 + z2^2*zb2 + 3z1^2*zb2", "z1^3*zb1^2 + z1^2*z2^2 + z2^3*zb2"}) {
        auto a = run("analyze " + quote(s));
        auto b = run("analyze " + quote(s));
        CHECK(a.out == b.out);
        auto ja = json::parse(a.out);
        auto jc = run_json("analyze " + quote(ja["canonical"].get<std::string>()));
        CHECK(jc["canonical"] == ja["canonical"]);
        ja.erase("input");
        jc.erase("input");
        CHECK(ja == jc);
    }
}

TEST_CASE("pretty output") {
    auto r = run("--pretty zeta " + quote("z2^2 - z1^3"));
    CHECK(r.code == 0);
    CHECK(r.out.find("(1-t^2)^-1(1-t^3)^-1(1-t^6)") != std::string::npos);
}

}
