#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args)
{
    const std::string cmd = std::string(HITCALC_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe))
        r.out.append(buf.data(), got);
    const int status = ::pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

// Every run shares one scratch cache directory.
const bool cache_set = [] {
    const auto dir = std::filesystem::temp_directory_path() / "hitcalc-cli-test-cache";
    std::filesystem::remove_all(dir);
    ::setenv("HITCALC_CACHE", dir.c_str(), 1);
    return true;
}();

}  // namespace

TEST_CASE("arithmetic")
{
    CHECK(run("mu 50").out == "4\n");
    CHECK(run("alpha 7").out == "3\n");
    CHECK(run("mu 50").code == 0);
}

TEST_CASE("dimensions")
{
    const Run r = run("--json cohit -n 2 -d 3");
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("dimension") == 3);
    CHECK(nlohmann::json::parse(run("--json invariants -n 2 -d 3").out).at("dimension") == 1);
    CHECK(nlohmann::json::parse(run("--json coinvariants -n 2 -d 3").out).at("dimension") == 1);
}

TEST_CASE("lambda commands")
{
    CHECK(run("lambda-nf 2,0").out == "1,1\n");
    CHECK(run("lambda-d 2").out == "0,1\n");
    CHECK(run("lambda-nf 1,-1").code == 2);
    CHECK(run("ext -s 1 -w 7").code == 0);
}

TEST_CASE("verification verdicts and exit codes")
{
    const Run first = run("--json verify thm21 -t 1 -s 2 -u 1");
    CHECK(first.code == 0);
    const auto j = nlohmann::json::parse(first.out);
    REQUIRE(j.is_array());
    for (const auto& v : j)
        CHECK(v.at("pass") == true);
    // A warm cache gives the same report apart from timings.
    auto strip = [](nlohmann::json v) {
        for (auto& x : v)
            x.erase("timing_ms");
        return v;
    };
    CHECK(strip(nlohmann::json::parse(run("--json verify thm21 -t 1 -s 2 -u 1").out)) == strip(j));
    CHECK(run("verify thm23 -t 0").code == 3);
}

TEST_CASE("invalid input")
{
    CHECK(run("cohit -n 9 -d 3").code == 2);
    CHECK(run("cohit -n 2").code == 2);
    CHECK(run("no-such-command").code == 2);
    CHECK(run("--help").code == 0);
}
