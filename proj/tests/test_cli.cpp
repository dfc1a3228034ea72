#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

using json = nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string binary() {
    const char* p = std::getenv("PMSKIT_BIN");
    REQUIRE_MESSAGE(p != nullptr, "PMSKIT_BIN must point at the built pmskit binary");
    return p;
}

RunResult run(const std::string& args) {
    RunResult r;
    std::string cmd = binary() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

} // namespace

TEST_CASE("product subcommand emits the schema-stable JSON") {
    RunResult r = run("product --type stuffle 1 1");
    REQUIRE(r.exit_code == 0);
    json out = json::parse(r.out);
    CHECK(out["tool"] == "pmskit");
    auto terms = out["result"]["terms"];
    REQUIRE(terms.size() == 2);
    bool saw_merge = false, saw_pair = false;
    for (const auto& t : terms) {
        if (t["word"] == json::array({2}))
            saw_merge = t["coef"] == "1";
        if (t["word"] == json::array({1, 1}))
            saw_pair = t["coef"] == "2";
    }
    CHECK(saw_merge);
    CHECK(saw_pair);
}

TEST_CASE("eval pms hits the classical anchor") {
    RunResult r = run("eval pms --index 2 --alpha 0 --trunc-n 200000");
    REQUIRE(r.exit_code == 0);
    json out = json::parse(r.out);
    double re = out["result"]["re"].get<double>();
    CHECK(std::abs(re - 1.6449340668482264) < 1e-8);
    CHECK(out["result"]["err"].get<double>() < 1e-6);
}

TEST_CASE("verification subcommands gate the exit code") {
    RunResult r = run("verify kernel-equality --max-weight 4");
    CHECK(r.exit_code == 0);
    json out = json::parse(r.out);
    CHECK(out["passed"] == true);
    CHECK(out["result"]["name"] == "kernel-equality");
    CHECK(out["result"]["cases"].size() == 3);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run("verify no-such-suite").exit_code == 2);
    CHECK(run("--frobnicate").exit_code == 2);
    CHECK(run("eval pms --index 2,1 --alpha 0").exit_code == 2); // divergent index
}

TEST_CASE("dims emits csv") {
    RunResult r = run("dims --max-weight 3 --format csv");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.rfind("weight,dim_slice,dim_kernel,dim_span,equal\n", 0) == 0);
    CHECK(r.out.find("3,4,2,2,true") != std::string::npos);
}

TEST_CASE("decompose replays its certificate") {
    RunResult r = run("decompose \"2*(1,1)+(2)\"");
    REQUIRE(r.exit_code == 0);
    json out = json::parse(r.out);
    CHECK(out["result"]["replay_matches"] == true);
    REQUIRE(out["result"]["levels"].size() == 1);
    CHECK(out["result"]["levels"][0][0]["left"] == json::array({1}));
}

TEST_CASE("output is byte-identical across runs once the timestamp is dropped") {
    const std::string cmd = "verify lemma7 --max-weight 5 --seed 42 --deterministic-sum --threads 2";
    RunResult a = run(cmd);
    RunResult b = run(cmd);
    REQUIRE(a.exit_code == 0);
    REQUIRE(b.exit_code == 0);
    json ja = json::parse(a.out);
    json jb = json::parse(b.out);
    ja.erase("timestamp");
    jb.erase("timestamp");
    CHECK(ja.dump() == jb.dump());
}

TEST_CASE("map subcommand applies psi") {
    RunResult r = run("map --name psi \"1,1\"");
    REQUIRE(r.exit_code == 0);
    json out = json::parse(r.out);
    CHECK(out["result"]["terms"] == json::parse(R"([{"coef":"1","word":[3]}])"));
}
