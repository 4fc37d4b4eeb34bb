#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

using nlohmann::json;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
    std::string cmd = env + (env.empty() ? "" : " ") + "'" + GERM_CLI_PATH + "' " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    Run r;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        r.out.append(buf.data(), n);
    }
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string rat(const json& j) {
    std::string den = j.at("den").get<std::string>();
    return j.at("num").get<std::string>() + (den == "1" ? "" : "/" + den);
}

std::string fixture(const std::string& name) { return std::string(GERM_FIXTURE_DIR) + "/fibrations/" + name; }

} // namespace

TEST_CASE("mld subcommand") {
    Run a = run("mld --divisor '3/4*(x^2+y^3)'");
    REQUIRE(a.code == 0);
    json j = json::parse(a.out);
    CHECK(rat(j["value"]) == "1/2");
    CHECK(j["witness"] == json::array({3, 2}));
    CHECK(j["attained"] == true);

    CHECK(rat(json::parse(run("mld --divisor '1*(x)'").out)["value"]) == "1");
    CHECK(rat(json::parse(run("mld --divisor '2*(x+y)'").out)["value"]) == "0");

    CHECK(run("mld --divisor '1*(x + 1)'").code == 1);
    CHECK(run("mld --divisor '1*(x +'").code == 1);
    CHECK(run("mld").code == 1);
}

TEST_CASE("lct subcommand") {
    Run a = run("lct --divisor '3/4*(x^2+y^3)' --curve y");
    REQUIRE(a.code == 0);
    json j = json::parse(a.out);
    CHECK(rat(j["value"]) == "1/4");
    CHECK(j["exact"] == true);
    CHECK(j.contains("membership_sup"));
    CHECK(j.contains("coefficient_cap"));

    CHECK(rat(json::parse(run("lct --divisor '1/2*(x^2+y^2)' --curve y").out)["value"]) == "1");
    CHECK(run("lct --divisor '2*(x)' --curve y").code == 2);
    CHECK(run("lct --divisor '1/2*(x)' --curve 'x^2+y^3'").code == 1);
}

TEST_CASE("bound and dirichlet subcommands") {
    json b = json::parse(run("bound --epsilon 1").out);
    CHECK(rat(b["delta"]) == "1/2");
    CHECK(b["witness_n"] == 2);
    CHECK(b["floor_check"] == true);
    CHECK(run("bound --epsilon 0").code == 1);
    CHECK(run("bound --epsilon abc").code == 1);

    json d = json::parse(run("dirichlet --q 3/7 --delta 1/3").out);
    CHECK(d["k"] == 2);
    CHECK(run("dirichlet --q 3/7 --delta 1").code == 1);
}

TEST_CASE("newton and surface subcommands") {
    json n = json::parse(run("newton --divisor '1*(x^4+x*y+y^3)'").out);
    CHECK(n["faces"].size() == 4);
    CHECK(n["nondegeneracy"]["nondegenerate"] == true);

    Run s = run("surface --divisor '5/9*(x^3+y^4)' --curve y --epsilon 1/3 --n-max 10");
    REQUIRE(s.code == 0);
    json j = json::parse(s.out);
    CHECK(j["applicable"] == true);
    CHECK(j["pass"] == true);
    CHECK(rat(j["bound"]) == "1/30");
}

TEST_CASE("family subcommand writes the sweep as CSV") {
    auto path = std::filesystem::temp_directory_path() / "germ_cli_family.csv";
    std::filesystem::remove(path);
    Run r = run("family --m-min 1 --m-max 10 --csv '" + path.string() + "'");
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["rows"].size() == 10);

    std::ifstream in(path);
    REQUIRE(in.good());
    std::string line;
    std::getline(in, line);
    CHECK(line == "m,epsilon,b_D,delta,ratio,coefficient");
    std::getline(in, line);
    CHECK(line == "1,1,1,1/2,1,0");
    std::getline(in, line);
    CHECK(line == "2,1/2,1/4,1/12,1,3/4");
    int rows = 2;
    while (std::getline(in, line)) {
        ++rows;
        if (rows == 10) {
            CHECK(line == "10,1/10,1/100,1/380,1,99/100");
        }
    }
    CHECK(rows == 10);
    std::filesystem::remove(path);

    CHECK(run("family --m-min 3 --m-max 2").code == 1);
}

TEST_CASE("fiber subcommand exit codes") {
    Run ok = run("fiber --config '" + fixture("family_m2.json") + "'");
    REQUIRE(ok.code == 0);
    json j = json::parse(ok.out);
    CHECK(j["special_points"] == json::array({"[0:1]", "[1:0]"}));
    CHECK(rat(j["discriminant"]["b_D"]) == "1/4");
    CHECK(rat(j["relative_mld"]) == "1/2");

    CHECK(run("fiber --config '" + fixture("irrational.json") + "'").code == 3);
    CHECK(run("fiber --config '" + fixture("not_lc_trivial.json") + "'").code == 1);
    CHECK(run("fiber --config '" + fixture("degree_mismatch.json") + "'").code == 1);
    CHECK(run("fiber --config /nonexistent/config.json").code == 1);
}

TEST_CASE("verify subcommand") {
    Run a = run("verify --suite hilbert --cases 25");
    REQUIRE(a.code == 0);
    json j = json::parse(a.out);
    CHECK(j["ok"] == true);
    CHECK(j["seed"] == 20230917);
    CHECK(j["suites"][0]["cases"] == 25);

    json e = json::parse(run("verify --suite dirichlet --cases 5", "GERM_SEED=99").out);
    CHECK(e["seed"] == 99);
    CHECK(json::parse(run("verify --suite dirichlet --cases 5 --seed 0x10", "GERM_SEED=99").out)["seed"] == 16);

    CHECK(run("verify --suite nope").code == 1);
    CHECK(run("verify --suite hilbert --seed banana").code == 1);
    CHECK(run("verify --suite lemma34 --case-seed 0x1234").code == 0);
}

TEST_CASE("output is byte-identical across runs") {
    for (const std::string& args : {std::string("verify --suite lemma33 --cases 40"),
                                    std::string("family --m-min 1 --m-max 6"),
                                    std::string("fiber --config '") + fixture("shifted_cusp.json") + "'"}) {
        CAPTURE(args);
        Run a = run(args);
        Run b = run(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}
