#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

using json = nlohmann::json;

namespace {

struct CliResult {
    int status = -1;
    std::string out;
};

CliResult run_cli(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + (env.empty() ? "" : " ") + DYCKBIJ_CLI_PATH + " " + args +
                            " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult res;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) res.out.append(buf, got);
    const int rc = pclose(pipe);
    res.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return res;
}

std::string golden(const std::string& name) {
    std::ifstream in(std::string(DYCKBIJ_GOLDEN_DIR) + "/" + name, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("map") {
    CliResult r = run_cli("map '6 2 3 1 7 5 4'");
    CHECK(r.status == 0);
    CHECK(r.out == "UUDUUUUDDUDDDD\nUUUUDUDUUDDDDD\n");
    r = run_cli("map '6 2 3 1 7 5 4' --code");
    CHECK(r.out == "n=7;A=2,6;D=1,3\nn=7;A=4,5;D=1,2\n");
    r = run_cli("map '6 2 3 1 7 5 4' --json");
    CHECK(r.status == 0);
    CHECK(r.out == golden("map_6231754.json"));
    const json j = json::parse(r.out);
    CHECK(j["perm"] == "6 2 3 1 7 5 4");
    CHECK(j["profiles"]["vmin"] == json({6, 2, 1}));
}

TEST_CASE("unmap") {
    CliResult r = run_cli("unmap 'n=9;A=6,8;D=3,5' 'n=9;A=6,8;D=2,6'");
    CHECK(r.status == 0);
    CHECK(r.out == "4 7 9 2 5 1 8 3 6\n");
    r = run_cli("unmap 'n=9;A=6,8;D=3,5' 'n=9;A=6,8;D=2,6' --json");
    CHECK(r.status == 0);
    CHECK(r.out == golden("unmap_section5.json"));
    const json j = json::parse(r.out);
    CHECK(j["sigma"] == "4 9 8 2 7 1 6 5 3");
    CHECK(j["tau"] == "7 5 9 4 3 2 8 1 6");
}

TEST_CASE("unmap rejections") {
    CliResult r = run_cli("unmap UDUD UUDD");
    CHECK(r.status == 2);
    CHECK(r.out.empty());
    r = run_cli("unmap UD UUDD");
    CHECK(r.status == 2);
    r = run_cli("unmap UDX UUDD");
    CHECK(r.status == 1);
}

TEST_CASE("malformed input exits 1") {
    CHECK(run_cli("map '1 1 2'").status == 1);
    CHECK(run_cli("map '1 3'").status == 1);
    CHECK(run_cli("lprime DUDU").status == 1);
    CHECK(run_cli("leq UUDD 'n=3;A='").status == 1);
}

TEST_CASE("admissible") {
    CliResult r = run_cli("admissible 'n=9;A=6,8;D=3,5' 'n=9;A=6,8;D=2,6'");
    CHECK(r.status == 0);
    CHECK(r.out == "yes\n");
    r = run_cli("admissible UDUD UUDD --json");
    CHECK(r.status == 2);
    CHECK(json::parse(r.out)["admissible"] == false);
}

TEST_CASE("canon") {
    CliResult r = run_cli("canon '1 2 3 4'");
    CHECK(r.status == 0);
    CHECK(r.out == "1 3 2 4\n");
    r = run_cli("canon '5 3 4 8 2 1 6 7'");
    CHECK(r.out == "5 3 6 8 2 1 4 7\n");
}

TEST_CASE("involutions") {
    CliResult r = run_cli("lprime 'n=9;A=6,8;D=3,5' --code");
    CHECK(r.status == 0);
    CHECK(r.out == "n=9;A=3,5,6,7,8;D=1,2,4,6,7\n");
    r = run_cli("kreweras UUDD");
    CHECK(r.out == "UDUD\n");
    r = run_cli("kreweras UDUD --json");
    CHECK(json::parse(r.out)["path"] == "UUDD");
}

TEST_CASE("leq and covers") {
    CHECK(run_cli("leq UDUD UUDD").out == "yes\n");
    CliResult r = run_cli("leq UUDD UDUD");
    CHECK(r.status == 2);
    CHECK(r.out == "no\n");
    r = run_cli("covers UDUD");
    CHECK(r.status == 0);
    CHECK(r.out == "UUDD\n");
    r = run_cli("covers --dot 2");
    CHECK(r.status == 0);
    CHECK(r.out.find("digraph hasse") != std::string::npos);
    CHECK(run_cli("covers").status == 1);
}

TEST_CASE("enumerate and count") {
    CliResult r = run_cli("enumerate --n 3 --avoid 123");
    CHECK(r.status == 0);
    int lines = 0;
    for (char c : r.out) lines += c == '\n';
    CHECK(lines == 5);
    CHECK(run_cli("count --n 8 --avoid 1234").out == "15767\n");
    CHECK(run_cli("count --n 5").out == "120\n");
    r = run_cli("count --n 4 --paths --json");
    CHECK(json::parse(r.out)["count"] == 14);
    r = run_cli("enumerate --n 2 --paths --json");
    CHECK(r.out == "{\"path\":\"UDUD\"}\n{\"path\":\"UUDD\"}\n");
}

TEST_CASE("render") {
    const CliResult r = run_cli("render UUUDDD");
    CHECK(r.status == 0);
    CHECK(r.out == golden("render_pyramid3.txt"));
}

TEST_CASE("verify") {
    const CliResult r = run_cli("verify --n 3 --suite counts");
    CHECK(r.status == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
    const CliResult rj = run_cli("verify --n 3 --suite roundtrip --jobs 2 --json");
    CHECK(rj.status == 0);
    for (const json& entry : json::parse(rj.out)) CHECK(entry["pass"] == true);
}

TEST_CASE("size cap honors DYCKBIJ_MAX_N") {
    CHECK(run_cli("count --n 4", "DYCKBIJ_MAX_N=3").status == 1);
    CHECK(run_cli("count --n 4", "DYCKBIJ_MAX_N=4").out == "24\n");
}
