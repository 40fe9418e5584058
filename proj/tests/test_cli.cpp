#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "twodist/cli.hpp"
#include "twodist/generators.hpp"

using namespace twodist;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
    args.insert(args.begin(), "twodist");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), in, out, err);
    return {code, out.str(), err.str()};
}

std::string text_of(const char* name) { return std::string(named_text(name)); }

}  // namespace

TEST_CASE("chi2 of c5") {
    const auto r = run({"chi2", "--format", "text"}, text_of("c5"));
    CHECK(r.code == kExitOk);
    CHECK(r.out == "5\n");
    const auto j = nlohmann::json::parse(run({"chi2"}, text_of("c5")).out);
    CHECK(j["chi2"] == 5);
}

TEST_CASE("chi2 reports unknown when the budget runs out") {
    const auto r = run({"chi2", "--format", "text", "--budget", "3"}, text_of("dodecahedron"));
    CHECK(r.out == "unknown\n");
}

TEST_CASE("discharge of the cube") {
    const auto r = run({"discharge"}, text_of("cube"));
    CHECK(r.code == kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["conservation"] == "-8");
    CHECK(j["falsification"] == false);
    CHECK(j["negatives"].size() == 8);
}

TEST_CASE("color the icosahedron from a file") {
    const auto path = std::filesystem::temp_directory_path() / "twodist_cli_icosa.rot";
    {
        std::ofstream f(path);
        f << text_of("icosahedron");
    }
    const auto r = run({"color", "--in", path.string(), "--base", "1"});
    CHECK(r.code == kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["colors"].size() == 12);
    std::vector<int> colors(12);
    for (const auto& [v, c] : j["colors"].items()) colors.at(std::stoul(v)) = c.get<int>();
    const auto g = named("icosahedron");
    CHECK(oracle::is_valid_2distance(oracle::adjacency(g.rotations()), colors, 16));

    // the printed coloring passes `validate --coloring`
    const auto cpath = std::filesystem::temp_directory_path() / "twodist_cli_icosa.json";
    {
        std::ofstream f(cpath);
        f << r.out;
    }
    CHECK(run({"validate", "--in", path.string(), "--coloring", cpath.string()}).code == kExitOk);

    // and a broken one fails with 1
    {
        std::ofstream f(cpath);
        auto bad = j;
        bad["colors"]["0"] = bad["colors"]["1"];
        f << bad.dump();
    }
    CHECK(run({"validate", "--in", path.string(), "--coloring", cpath.string()}).code == kExitCheckFailed);
    std::filesystem::remove(path);
    std::filesystem::remove(cpath);
}

TEST_CASE("detect prints the first configuration") {
    const auto r = run({"detect"}, text_of("c5"));
    CHECK(r.code == kExitOk);
    CHECK(nlohmann::json::parse(r.out)["rule"] == "R-δ2");
}

TEST_CASE("usage and input errors exit 2") {
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({"color", "--format", "xml"}, text_of("c5")).code == kExitUsage);
    CHECK(run({"color"}, "3 3\n0: 1\n").code == kExitUsage);
    CHECK(run({"color", "--in", "/nonexistent/graph.rot"}).code == kExitUsage);
    CHECK(run({"gen", "--name", "k9"}).code == kExitUsage);
    const auto r = run({"validate"}, "2 1\n0: 1\n1: 1\n");
    CHECK(r.code == kExitUsage);
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("gen writes parseable graphs") {
    const auto r = run({"gen", "--n", "40", "--seed", "9", "--format", "text"});
    CHECK(r.code == kExitOk);
    CHECK(from_rotation_text(r.out).vertex_count() <= 40);
    const auto cube = run({"gen", "--name", "cube", "--format", "text"}).out;
    CHECK(from_rotation_text(cube).rotations() == named("cube").rotations());
}

TEST_CASE("batch over a small sample") {
    const auto r = run({"batch", "--n", "30", "--count", "20", "--seed", "5"});
    CHECK(r.code == kExitOk);
    std::istringstream lines(r.out);
    std::string line;
    std::size_t count = 0;
    while (std::getline(lines, line)) {
        CHECK_NOTHROW(nlohmann::json::parse(line));
        ++count;
    }
    CHECK(count == named_graphs().size() + 20 + 1);
}

TEST_CASE("output is deterministic") {
    for (const char* cmd : {"color", "detect", "discharge"}) {
        const auto a = run({cmd}, text_of("pentagonal_prism"));
        const auto b = run({cmd}, text_of("pentagonal_prism"));
        CHECK(a.out == b.out);
    }
}
