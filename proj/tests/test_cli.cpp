#include "doctest.h"

#include <json.hpp>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hct/cli.hpp"
#include "hct/literal.hpp"

using namespace hct;
using json = nlohmann::json;

namespace {

struct Run {
    int code = -1;
    std::string out;
    std::vector<json> lines;
};

Run run(const std::string& args) {
    Run r;
    const std::string cmd = std::string(HCT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* f = popen(cmd.c_str(), "r");
    REQUIRE(f);
    char buf[4096];
    while (std::fgets(buf, sizeof buf, f)) r.out += buf;
    const int status = pclose(f);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::istringstream is(r.out);
    for (std::string line; std::getline(is, line);) r.lines.push_back(json::parse(line));
    return r;
}

std::string write_temp(const std::string& name, const std::string& text) {
    const std::string path = "/tmp/hct_cli_test_" + name + ".json";
    std::ofstream(path) << text;
    return path;
}

double comp(const json& arr, std::size_t j) { return arr.at(j).get<double>(); }

}  // namespace

TEST_CASE("transform of the sine pair at 1 + i1") {
    const Run r = run("transform --pair sin --omega 1 --p \"1+1i1\"");
    CHECK(r.code == 0);
    REQUIRE(r.lines.size() == 1);
    const json& v = r.lines[0]["value"];
    REQUIRE(v.size() == 4);
    CHECK(std::abs(comp(v, 0) - 0.2) < 1e-9);
    CHECK(std::abs(comp(v, 1) + 0.4) < 1e-9);
    CHECK(std::abs(comp(v, 2)) < 1e-12);
    CHECK(std::abs(comp(v, 3)) < 1e-12);
    CHECK(r.lines[0].contains("err_estimate"));
    CHECK(r.lines[0]["meta"]["kernel"] == "linear");
    CHECK(r.lines[0]["meta"]["domain"] == "one_sided");
}

TEST_CASE("residue inversion of 1/(p (p^3 + 1))") {
    const Run r = run("invert --method residue --num \"1\" --den \"0 1 0 0 1\" --t 1");
    CHECK(r.code == 0);
    REQUIRE(r.lines.size() == 1);
    // x(1) of x''' + x = 1 with zero data, from an independent Runge-Kutta integration
    CHECK(std::abs(comp(r.lines[0]["value"], 0) - 0.16528053142276886) < 1e-9);
    CHECK(r.lines[0].contains("err_estimate"));

    const Run b = run("invert --method bromwich --num \"1\" --den \"0 1 0 0 1\" --t 0.5 1 2 --tol 1e-7");
    const Run s = run("invert --method series --num \"1\" --den \"0 1 0 0 1\" --t 0.5 1 2");
    const Run q = run("invert --method residue --num \"1\" --den \"0 1 0 0 1\" --t 0.5 1 2");
    REQUIRE(b.lines.size() == 3);
    REQUIRE(s.lines.size() == 3);
    REQUIRE(q.lines.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(std::abs(comp(b.lines[i]["value"], 0) - comp(q.lines[i]["value"], 0)) < 1e-3);
        CHECK(std::abs(comp(s.lines[i]["value"], 0) - comp(q.lines[i]["value"], 0)) < 1e-9);
    }
}

TEST_CASE("inversion of a catalog image reports the original") {
    const Run r = run("invert --pair sin --omega 2 --method bromwich --t 1 --tol 1e-6");
    CHECK(r.code == 0);
    REQUIRE(r.lines.size() == 1);
    CHECK(std::abs(comp(r.lines[0]["value"], 0) - std::sin(2.0)) < 1e-3);
    CHECK(r.lines[0]["dev"].get<double>() < 1e-3);
    const Run m = run("invert --pair mellin_exp --t 2");
    REQUIRE(m.lines.size() == 1);
    CHECK(std::abs(comp(m.lines[0]["value"], 0) - std::exp(-2.0)) < 1e-3);
}

TEST_CASE("algebra suite") {
    const Run r = run("verify --suite algebra --seed 1");
    CHECK(r.code == 0);
    CHECK(r.lines.size() >= 10);
    for (const json& j : r.lines) {
        CHECK(j.contains("name"));
        CHECK(j.contains("probe"));
        CHECK(j.contains("dev"));
        CHECK(j["pass"] == true);
    }
}

TEST_CASE("reruns are bit-identical") {
    const Run a = run("verify --suite catalog --seed 5");
    const Run b = run("verify --suite catalog --seed 5");
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
    const Run c = run("verify --suite catalog --seed 6");
    CHECK(a.out != c.out);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run("").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("verify --suite nope").code == 2);
    CHECK(run("transform --pair step --p \"2i9\" --level 3").code == 2);
    CHECK(run("transform --pair sin --bogus 1 --p 1").code == 2);
    CHECK(run("transform --pair no_such_pair --p 1").code == 2);
    CHECK(run("invert --method residue --num 1 --den \"1 1\"").code == 2);
    CHECK(run("invert --method euler --num 1 --den \"1 1\" --t 1").code == 2);
    CHECK(run("ode --config /nonexistent/config.json").code == 2);
}

TEST_CASE("ode command") {
    const std::string cfg = R"({
        "order": 3,
        "coeffs": ["1", "0", "0", "1"],
        "ics": [0, 0, 0],
        "forcing": {"builtin": "step"},
        "t": {"start": 0, "stop": 2, "step": 0.05},
        "method": "residue"
    })";
    const Run r = run("ode --config " + write_temp("third_order", cfg));
    CHECK(r.code == 0);
    REQUIRE(r.lines.size() == 42);
    CHECK(std::abs(r.lines[20]["t"].get<double>() - 1.0) < 1e-12);
    CHECK(std::abs(comp(r.lines[20]["x"], 0) - 0.16528053142276886) < 1e-9);
    CHECK(std::abs(comp(r.lines[0]["x"], 0)) < 1e-9);
    const json& s = r.lines.back();
    CHECK(s["name"] == "ode:defect");
    CHECK(s["pass"] == true);
    CHECK(s["dev"].get<double>() <= 1e-4);
    CHECK(s["method"] == "residue");

    const std::string quat = R"({
        "coeffs": ["1", "0", "4"],
        "ics": ["1", "0"],
        "domain": "quaternion",
        "forcing": {"pair": "sin", "params": {"omega": 2}, "coeff": "i2"},
        "t": {"start": 0, "stop": 1, "step": 0.1}
    })";
    const Run q = run("ode --config " + write_temp("quaternion_forcing", quat));
    CHECK(q.code == 0);
    REQUIRE(q.lines.size() == 12);
    // (x1 + b/(2a)) sin(at)/a + (x0 - b t/(2a)) cos(at) at t = 1, a = 2, b = i2
    const double t = 1, a = 2;
    CHECK(std::abs(comp(q.lines[10]["x"], 0) - std::cos(a * t)) < 1e-9);
    CHECK(std::abs(comp(q.lines[10]["x"], 2) - (std::sin(a * t) / (2 * a * a) - t * std::cos(a * t) / (2 * a))) < 1e-9);
}

TEST_CASE("ode configs are parsed strictly") {
    const std::string base = R"("coeffs": ["1", "1"], "ics": [1], "t": {"start": 0, "stop": 1, "step": 0.5})";
    CHECK_NOTHROW(parse_ode_config("{" + base + "}"));
    const ODEJob job = parse_ode_config("{" + base + "}");
    CHECK(job.grid == std::vector<double>{0, 0.5, 1});
    CHECK(job.problem.forcing.is_zero());
    CHECK_THROWS_AS(parse_ode_config("{" + base + ", \"colour\": 1}"), Error);
    CHECK_THROWS_AS(parse_ode_config("{" + base + ", \"order\": 2}"), Error);
    CHECK_THROWS_AS(parse_ode_config("{" + base + ", \"forcing\": {\"builtin\": \"cos\"}}"), Error);
    CHECK_THROWS_AS(parse_ode_config("{" + base + ", \"forcing\": {\"builtin\": \"step\", \"extra\": 1}}"), Error);
    CHECK_THROWS_AS(parse_ode_config("{" + base + ", \"forcing\": {\"pair\": \"sin\", \"builtin\": \"step\"}}"), Error);
    CHECK_THROWS_AS(parse_ode_config("{" + base + ", \"method\": \"euler\"}"), Error);
    CHECK_THROWS_AS(parse_ode_config("{\"coeffs\": [1, 1], \"ics\": [1]}"), Error);
    CHECK_THROWS_AS(parse_ode_config("not json"), Error);
    const ODEJob sinjob = parse_ode_config("{" + base + ", \"forcing\": {\"builtin\": \"sin\", \"omega\": 3}}");
    REQUIRE(sinjob.problem.forcing.pair);
    CHECK(sinjob.problem.forcing.pair->params.at("omega") == 3.0);

    const Run r = run("ode --config " + write_temp("bad_key", "{" + base + ", \"colour\": 1}"));
    CHECK(r.code == 2);
}

TEST_CASE("table lists every pair with provenance") {
    const Run r = run("table");
    CHECK(r.code == 0);
    CHECK(r.lines.size() >= 18);
    for (const json& j : r.lines) {
        CHECK(!j["provenance"].get<std::string>().empty());
        CHECK(j.contains("strip"));
    }
    const Run rr = run("table --rules");
    CHECK(rr.lines.size() >= r.lines.size() + 40);
}

TEST_CASE("laurent tail of 1/(p+1)") {
    RationalImage R;
    R.numerator = {CDNumber::real(1, 2)};
    R.denominator = {1, 1};
    const LaurentTail tail = laurent_tail(R, 10);
    REQUIRE(tail.coeffs.size() == 10);
    for (std::size_t l = 0; l < 10; ++l) CHECK(tail.coeffs[l][0] == (l % 2 ? -1.0 : 1.0));
    CHECK(tail.radius > 1.0);
}
