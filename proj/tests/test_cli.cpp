#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quadbraid/io.hpp"

#include <array>
#include <cstdio>
#include <fstream>

using namespace quadbraid;

// Runs the installed binary and captures stdout plus the exit code.
struct CliResult {
    int exit_code = -1;
    std::string out;

    std::string last_line() const {
        std::size_t end = out.find_last_not_of('\n');
        if (end == std::string::npos) return "";
        std::size_t start = out.find_last_of('\n', end);
        return out.substr(start == std::string::npos ? 0 : start + 1, end - (start == std::string::npos ? 0 : start + 1) + 1);
    }
};

static CliResult run_cli(const std::string& args) {
    CliResult r;
    std::string cmd = std::string(QUADBRAID_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

TEST_CASE("classify counts and torsion split") {
    CliResult r = run_cli("classify --group 2,2 --split-torsion");
    CHECK(r.exit_code == 0);
    Json j = Json::parse(r.last_line());
    CHECK(j["total"] == 32);
    CHECK(j["split"]["denominator_le_2"] == 8);
    CHECK(j["split"]["denominator_gt_2"] == 24);

    CHECK(Json::parse(run_cli("classify --group 2").last_line())["total"] == 4);
    CHECK(Json::parse(run_cli("classify --group 1").last_line())["total"] == 1);
}

TEST_CASE("cocycle emission matches the library tables") {
    CliResult r = run_cli("cocycle --group 2 --p 1 --method quinn");
    CHECK(r.exit_code == 0);
    Json j = Json::parse(r.last_line());
    CHECK(j["c"][3] == "1/4");
    CHECK(j["h"][7] == "1/2");

    Group g = make_group({2});
    QuadraticForm q = form_from_params(g, TargetGroup::qmodz(),
                                       {Coeff::make(TargetGroup::qmodz(), 1, 4)}, {});
    CHECK(pointwise_equal(cocycle_from_json(j), quinn_cocycle(q)));
}

TEST_CASE("the two closed-form methods emit byte-identical tables") {
    for (const char* fmt : {"json", "csv"}) {
        std::string base = std::string("cocycle --group 2,4 --p 1,1 --q 0,1=1 --format ") + fmt;
        CliResult a = run_cli(base + " --method quinn");
        CliResult b = run_cli(base + " --method exp");
        CHECK(a.exit_code == 0);
        CHECK(b.exit_code == 0);
        CHECK(a.last_line() == b.last_line());
        if (std::string(fmt) == "csv") CHECK(a.out == b.out);
    }
}

TEST_CASE("csv output carries both table blocks") {
    CliResult r = run_cli("cocycle --group 2 --p 1 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("x,y,z,value\n", 0) == 0);
    CHECK(r.out.find("x,y,value\n") != std::string::npos);
    CHECK(r.out.find("1,1,1,1/2\n") != std::string::npos);
    CHECK(r.out.find("1,1,1/4\n") != std::string::npos);
}

TEST_CASE("free factors report a closed-form record with zero associator") {
    CliResult r = run_cli("cocycle --group 0 --p 1/4 --method quinn");
    CHECK(r.exit_code == 0);
    Json j = Json::parse(r.last_line());
    CHECK(j["h_identically_zero"] == true);
    CHECK(j["closed_form"]["sigma"][0][0] == "1/4");
    CHECK(run_cli("cocycle --group 0 --format csv").exit_code == 2);
}

TEST_CASE("verify round trip and failure detection") {
    CliResult emit = run_cli("cocycle --group 2,4 --p 1,1 --q 0,1=1");
    {
        std::ofstream out("cli_table.json");
        out << emit.last_line() << "\n";
    }
    CliResult good = run_cli("verify --input cli_table.json");
    CHECK(good.exit_code == 0);
    CHECK(Json::parse(good.last_line())["passed"] == true);

    Json j = Json::parse(emit.last_line());
    j["h"][7] = "1/8";
    {
        std::ofstream out("cli_table.json");
        out << j.dump() << "\n";
    }
    CliResult bad = run_cli("verify --input cli_table.json");
    CHECK(bad.exit_code == 1);
    Json report = Json::parse(bad.last_line());
    CHECK(report["passed"] == false);
    CHECK(report["total_failures"].get<long long>() > 0);
    CHECK(bad.out.find("!=") != std::string::npos);  // failing tuples are listed
    std::remove("cli_table.json");
}

TEST_CASE("trace of a table file recovers the form") {
    CliResult emit = run_cli("cocycle --group 2,4 --p 1,3 --q 0,1=1");
    {
        std::ofstream out("cli_trace.json");
        out << emit.last_line() << "\n";
    }
    CliResult r = run_cli("trace --input cli_trace.json");
    CHECK(r.exit_code == 0);
    Json j = Json::parse(r.last_line());
    CHECK(j["diag"][0] == "1/4");
    CHECK(j["diag"][1] == "3/8");
    CHECK(j["offdiag"]["0,1"] == "1/2");
    std::remove("cli_trace.json");
}

TEST_CASE("normal-form passes on emitted tables") {
    CliResult emit = run_cli("cocycle --group 3,3 --p 1,2");
    {
        std::ofstream out("cli_nf.json");
        out << emit.last_line() << "\n";
    }
    CliResult r = run_cli("normal-form --input cli_nf.json");
    CHECK(r.exit_code == 0);
    Json j = Json::parse(r.last_line());
    CHECK(j["applicable"] == true);
    CHECK(j["passed"] == true);
    std::remove("cli_nf.json");
}

TEST_CASE("strictify decisions") {
    CliResult yes = run_cli("strictify --group 2 --p 2");
    CHECK(yes.exit_code == 0);
    Json jy = Json::parse(yes.last_line());
    CHECK(jy["strictifiable"] == true);
    CHECK(jy["witness"][0][0] == "1/2");

    CliResult no = run_cli("strictify --group 2 --p 1");
    CHECK(no.exit_code == 0);
    Json jn = Json::parse(no.last_line());
    CHECK(jn["strictifiable"] == false);
    CHECK(jn["exhausted"] == true);
}

TEST_CASE("optimize reads the embedded form and reports flag changes") {
    // half-integer form on Z/2 whose presentation starts with C = 0: not
    // optimal before, optimal after
    Json file;
    file["group"] = {{"moduli", Json::array({2})}};
    file["target"] = "Z/2";
    file["C"] = Json::array({Json::array({"0/1"})});
    file["form"] = {{"diag", Json::array({"1/1"})}, {"offdiag", Json::object()}};
    {
        std::ofstream out("cli_opt.json");
        out << file.dump() << "\n";
    }
    CliResult r = run_cli("optimize --presentation cli_opt.json");
    CHECK(r.exit_code == 0);
    Json j = Json::parse(r.last_line());
    CHECK(j["before"]["optimal"] == false);
    CHECK(j["after"]["optimal"] == true);
    CHECK(j["presentation"]["C"][0][0] == "1/1");

    // the same file without the form block is a usage error
    file.erase("form");
    {
        std::ofstream out("cli_opt.json");
        out << file.dump() << "\n";
    }
    CHECK(run_cli("optimize --presentation cli_opt.json").exit_code == 2);
    std::remove("cli_opt.json");
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli("classify").exit_code == 2);
    CHECK(run_cli("classify --group 0").exit_code == 2);  // infinite group
    CHECK(run_cli("cocycle --group 2 --p 1,1").exit_code == 2);
    CHECK(run_cli("cocycle --group 2 --p 1 --method nope").exit_code == 2);
    CHECK(run_cli("verify --input missing_file.json").exit_code == 2);
    CHECK(run_cli("bogus-subcommand").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("identical invocations produce identical bytes") {
    std::string cmd = "cocycle --group 2,4 --p 1,1 --q 0,1=1";
    CHECK(run_cli(cmd).out == run_cli(cmd).out);
    std::string cls = "classify --group 2,2 --split-torsion";
    CHECK(run_cli(cls).out == run_cli(cls).out);
}
