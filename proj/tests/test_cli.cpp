#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(GZCL_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const std::string& name) {
    std::ifstream in(std::string(GZCL_GOLDEN_DIR) + "/" + name);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("simple commands") {
    CHECK(run("g 6").out == "w2^3 + w3^2\n");
    CHECK(run("g 13").out == "0\n");
    CHECK(run("zcl 21").out == "zcl(W_21) = 21\n");
    CHECK(run("nf 21 9 2").out == "w2^3*w3^6\n");
    CHECK(run("nf 22 12 1").out == "0\n");
    CHECK(run("height 30").out == "height(w2) = 25\nheight(w3) = 13\n");
    CHECK(run("height 30 --closed").out == "height(w2) = 25\nheight(w3) = 13\n");
}

TEST_CASE("tables reproduce the golden files") {
    CHECK(run("table g --range 0..26 --format csv").out == slurp("table_g.csv"));
    CHECK(run("table small-n --format csv").out == slurp("table_small_n.csv"));
    CHECK(run("table heights --range 7..64 --format csv").out == slurp("table_heights.csv"));
    CHECK(run("table tc --t 4..6 --format csv").out == slurp("table_tc.csv"));
    CHECK(run("zcl-range 6 62 --format csv --jobs 3").out == slurp("zcl_range.csv"));
}

TEST_CASE("json outputs parse") {
    const auto gb = nlohmann::json::parse(run("groebner 21 --format json").out);
    CHECK(gb.at("alpha") == nlohmann::json({0, 1, 1, 0}));
    const auto z = nlohmann::json::parse(run("zcl 22 --format json --closed-form-check").out);
    CHECK(z.at("zcl") == 22);
    CHECK(z.at("closed_form_agrees") == true);
    const auto b = nlohmann::json::parse(run("bounds 22 --format json").out);
    CHECK(b.at("zcl_oriented_lo") == 23);
    CHECK(b.at("zcl_oriented_exact").is_null());
    const auto basis = nlohmann::json::parse(run("basis 21 --degree 24 --format json").out);
    CHECK(basis.at("basis").size() == 1);
    CHECK(basis.at("dimension") == 50);
    const auto v = nlohmann::json::parse(run("verify bounds --format json").out);
    CHECK(v.at("passed") == true);
}

TEST_CASE("exit codes") {
    CHECK(run("verify g-series").code == 0);
    CHECK(run("zcl 30 --closed-form-check").code == 0);
    CHECK(run("--help").code == 0);
    CHECK(run("").code == 2);
    CHECK(run("zcl").code == 2);
    CHECK(run("zcl 21 --bogus").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("zcl 3").code == 2);
    CHECK(run("table nope").code == 2);
    CHECK(run("table g --range 5..2").code == 2);
    CHECK(run("verify everything").code == 2);
    CHECK(run("g 5 --format csv").code == 2);
    CHECK(run("height 20 --brute --closed").code == 2);
}

TEST_CASE("verify output is independent of the worker count") {
    const Run one = run("verify zcl --jobs 1");
    const Run four = run("verify zcl --jobs 4");
    CHECK(one.code == 0);
    CHECK(one.out == four.out);
}

}  // TEST_SUITE
