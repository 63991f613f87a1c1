#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "commands.hpp"
#include "k3count/cremona.hpp"

using nlohmann::json;

namespace {

struct CliResult {
    int status = 0;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args)
{
    std::ostringstream out;
    std::ostringstream err;
    CliResult result;
    result.status = k3count::cli::run_cli(args, out, err);
    result.out = out.str();
    result.err = err.str();
    return result;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

const std::string golden_dir = K3COUNT_GOLDEN_DIR;

} // namespace

TEST_CASE("series text output")
{
    const CliResult r = run({"series", "--surface", "k3", "--genus", "0", "--order", "3"});
    CHECK(r.status == 0);
    CHECK(r.out == "0: 1\n1: 24\n2: 324\n3: 3200\n");
    CHECK(r.err.empty());
}

TEST_CASE("series json output")
{
    const CliResult r = run({"series", "--surface", "k3", "--genus", "2", "--order", "3", "--json"});
    CHECK(r.status == 0);
    const json document = json::parse(r.out);
    CHECK(document["surface"] == "k3");
    CHECK(document["genus"] == 2);
    CHECK(document["order"] == 3);
    CHECK(document["coefficients"] == json::array({"1", "36", "672", "8728"}));
}

TEST_CASE("series text and json encode identical numbers")
{
    const CliResult text = run({"series", "--surface", "re", "--genus", "1", "--order", "5"});
    const CliResult structured =
        run({"series", "--surface", "re", "--genus", "1", "--order", "5", "--json"});
    REQUIRE(text.status == 0);
    REQUIRE(structured.status == 0);
    const json document = json::parse(structured.out);
    std::istringstream lines(text.out);
    std::string line;
    int n = 0;
    while (std::getline(lines, line)) {
        const std::string expected =
            std::to_string(n) + ": " + document["coefficients"][n].get<std::string>();
        CHECK(line == expected);
        ++n;
    }
    CHECK(n == 6);
}

TEST_CASE("count commands")
{
    CHECK(run({"count", "--surface", "k3", "--genus", "1", "--nodes", "1", "--method", "convolution"}).out
          == "30\n");
    CHECK(run({"count", "--surface", "k3", "--genus", "0", "--nodes", "0", "--method", "components"}).out
          == "1\n");
    CHECK(run({"count", "--surface", "re", "--genus", "0", "--nodes", "3", "--method", "closed"}).out
          == "520\n");

    const CliResult structured = run({"count", "--surface", "k3", "--genus", "1", "--nodes", "1",
                                      "--method", "convolution", "--json"});
    const json document = json::parse(structured.out);
    CHECK(document["count"] == "30");
    CHECK(document["method"] == "convolution");
}

TEST_CASE("count guard failures explain themselves and env overrides lift them")
{
    unsetenv("K3COUNT_CONVOLUTION_MAX");
    const std::vector<std::string> args = {"count", "--surface", "k3", "--genus", "3",
                                           "--nodes", "6", "--method", "convolution"};
    const CliResult blocked = run(args);
    CHECK(blocked.status != 0);
    CHECK(blocked.err.find("guard") != std::string::npos);

    setenv("K3COUNT_CONVOLUTION_MAX", "9", 1);
    const CliResult allowed = run(args);
    CHECK(allowed.status == 0);
    CHECK(allowed.out == "11436560\n");

    setenv("K3COUNT_CONVOLUTION_MAX", "many", 1);
    const CliResult garbage = run(args);
    CHECK(garbage.status != 0);
    CHECK(garbage.err.find("K3COUNT_CONVOLUTION_MAX") != std::string::npos);
    unsetenv("K3COUNT_CONVOLUTION_MAX");

    unsetenv("K3COUNT_COMPONENTS_MAX");
    const std::vector<std::string> components = {"count", "--surface", "k3", "--genus", "2",
                                                 "--nodes", "4", "--method", "components"};
    CHECK(run(components).status != 0);
    setenv("K3COUNT_COMPONENTS_MAX", "6", 1);
    CHECK(run(components).out == "88830\n");
    unsetenv("K3COUNT_COMPONENTS_MAX");
}

TEST_CASE("reduce prints the transcript and the section form")
{
    const CliResult direct = run({"reduce", "3;1,1,1,1,1,1,1,1,0"});
    CHECK(direct.status == 0);
    CHECK(direct.out == "start: 3;1,1,1,1,1,1,1,1,0\ne9 + 1 F\n");

    std::mt19937 rng(41u);
    const k3count::BlowupClass scrambled =
        k3count::scramble_class(k3count::section_class(3), 8, rng);
    const CliResult recovered = run({"reduce", scrambled.to_string(), "--json"});
    CHECK(recovered.status == 0);
    const json document = json::parse(recovered.out);
    CHECK(document["i"] == 3);
    CHECK(document["input"] == scrambled.to_string());
    CHECK(!document["steps"].empty());

    const CliResult bad_pairing = run({"reduce", "1;1,1,1,0,0,0,0,0,0"});
    CHECK(bad_pairing.status != 0);
    CHECK(bad_pairing.err.find("3d - sum(alphas) = 1") != std::string::npos);

    CHECK(run({"reduce", "not-a-class"}).status != 0);
}

TEST_CASE("admissible listings")
{
    const CliResult one = run({"admissible", "--size", "1"});
    CHECK(one.status == 0);
    CHECK(one.out == "0..0: 1\ncount: 1\n");

    const CliResult four = run({"admissible", "--size", "4", "--one-admissible"});
    CHECK(four.status == 0);
    CHECK(four.out.find("count: 5") != std::string::npos);

    const CliResult eight = run({"admissible", "--size", "8", "--one-admissible", "--json"});
    const json document = json::parse(eight.out);
    CHECK(document["count"] == 22);
    CHECK(document["sequences"].size() == 22);

    CHECK(run({"admissible", "--size", "0"}).status != 0);
}

TEST_CASE("selftest passes clean and fails under an injected fault")
{
    const CliResult clean = run({"selftest", "--quick"});
    CHECK(clean.status == 0);
    CHECK(clean.out.find("selftest: all checks passed") != std::string::npos);

    const CliResult faulty = run({"selftest", "--quick", "--inject-fault"});
    CHECK(faulty.status == 1);
    CHECK(faulty.out.find("FAIL") != std::string::npos);
}

TEST_CASE("argument errors exit nonzero")
{
    CHECK(run({}).status != 0);
    CHECK(run({"series", "--surface", "torus", "--genus", "0", "--order", "0"}).status != 0);
    CHECK(run({"series", "--surface", "k3", "--genus", "-1", "--order", "0"}).status != 0);
    CHECK(run({"count", "--surface", "k3", "--genus", "0", "--nodes", "0", "--method", "guess"}).status != 0);
    CHECK(run({"--help"}).status == 0);
}

TEST_CASE("structured outputs match their golden files")
{
    CHECK(run({"series", "--surface", "k3", "--genus", "2", "--order", "3", "--json"}).out
          == read_file(golden_dir + "/series_k3_g2_order3.json"));
    CHECK(run({"count", "--surface", "k3", "--genus", "1", "--nodes", "1", "--method", "convolution",
               "--json"}).out
          == read_file(golden_dir + "/count_k3_g1_n1_convolution.json"));
    CHECK(run({"admissible", "--size", "4", "--one-admissible", "--json"}).out
          == read_file(golden_dir + "/admissible_size4_one.json"));
    CHECK(run({"reduce", "7;3,3,2,2,2,2,2,2,2", "--json"}).out
          == read_file(golden_dir + "/reduce_i2.json"));
}
