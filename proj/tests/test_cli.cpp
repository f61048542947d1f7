#include "commands.hpp"
#include "corpus.hpp"
#include "io.hpp"

#include "hypercox/diagram.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace hypercox;
using namespace hypercox::testing;
using hypercox::cli::json;
namespace fs = std::filesystem;

namespace {

struct Invocation {
    int code;
    std::string out;
    std::string err;
    json parsed() const { return json::parse(out); }
};

Invocation hypercox_cli(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

/// Writes text to a fresh file in the temporary directory.
std::string scratch(const std::string& name, const std::string& text) {
    const fs::path dir = fs::temp_directory_path() / "hypercox-cli-tests";
    fs::create_directories(dir);
    const fs::path p = dir / name;
    std::ofstream(p) << text;
    return p.string();
}

/// Polytope JSON of the Vinberg run on a lattice fixture.
std::string lattice_polytope(const std::string& name) {
    return scratch(name + "-polytope.json", cli::gram_to_json(fixture_gram(name)).dump());
}

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("classify verdicts") {
        const std::vector<std::pair<std::string, std::string>> expected = {
            {"prism-fig1", "not_quasi_arithmetic"},
            {"hexagon-p2-1", "properly_quasi_arithmetic"},
            {"pentagon-p2-2", "arithmetic"},
            {"p6-face1", "arithmetic"},
            {"p6-face2", "properly_quasi_arithmetic"},
        };
        for (const auto& [name, verdict] : expected) {
            const auto r = hypercox_cli({"classify", fixture_path(name)});
            CAPTURE(name);
            REQUIRE(r.code == cli::kOk);
            CHECK(r.parsed()["verdict"] == verdict);
        }
        const auto prism = hypercox_cli({"classify", fixture_path("prism-fig1")}).parsed();
        CHECK(prism["witness"]["condition"] == "V1");
        CHECK(prism["ground_field"]["degree"] == 4);

        const auto text = hypercox_cli({"classify", fixture_path("pentagon-p2-2"), "--format", "text"});
        CHECK(text.code == cli::kOk);
        CHECK(text.out.find("verdict: arithmetic") != std::string::npos);
    }

    TEST_CASE("faces") {
        const auto root = hypercox_cli({"faces", fixture_path("prism-fig1"), "--codim", "0"});
        REQUIRE(root.code == cli::kOk);
        CHECK(root.parsed().size() == 1);
        const auto facets = hypercox_cli({"faces", fixture_path("prism-fig1")}).parsed();
        REQUIRE(facets.size() == 5);
        for (const auto& f : facets) {
            CHECK(f["dim"] == 2);
            CHECK(f["subset"].size() == 1);
            CHECK(f["coxeter"] == !f["classification"].is_null());
        }
        CHECK(hypercox_cli({"faces", fixture_path("prism-fig1"), "--codim", "-1"}).code == cli::kBadInput);
        CHECK(hypercox_cli({"faces", fixture_path("prism-fig1"), "--format", "dot"}).code == cli::kBadInput);
    }

    TEST_CASE("tree in every format") {
        const auto j = hypercox_cli({"tree", fixture_path("prism-fig1")});
        REQUIRE(j.code == cli::kOk);
        const auto t = j.parsed();
        CHECK(t["dimension"] == 3);
        CHECK(t["nodes"].size() == 6);
        CHECK(t["nodes"][0]["parent"].is_null());
        CHECK(t["dedup"] == "global_non_coxeter");

        const auto dot = hypercox_cli({"tree", fixture_path("prism-fig1"), "--format", "dot"});
        CHECK(dot.code == cli::kOk);
        CHECK(dot.out.rfind("digraph", 0) == 0);
        CHECK(dot.out.find("not_quasi_arithmetic") != std::string::npos);

        const std::string l15 = lattice_polytope("lattice-15");
        const auto shallow = hypercox_cli({"tree", l15, "--max-depth", "0"}).parsed();
        CHECK(shallow["nodes"].size() == 1);

        const auto jobs = hypercox_cli({"tree", l15, "--jobs", "3"});
        REQUIRE(jobs.code == cli::kOk);
        CHECK(jobs.out == hypercox_cli({"tree", l15}).out);
    }

    TEST_CASE("vinberg") {
        const auto r = hypercox_cli({"vinberg", fixture_path("bugaenko-lattice")});
        REQUIRE(r.code == cli::kOk);
        const auto j = r.parsed();
        CHECK(j["partial"] == false);
        CHECK(j["finite_volume"] == true);
        CHECK(j["roots"].size() == 11);
        CHECK(j["polytope"]["dim"] == 7);
        CHECK(j["polytope"].contains("diagram"));

        // The polytope section feeds straight back into classify.
        const auto path = scratch("bugaenko-polytope.json", j["polytope"].dump());
        CHECK(hypercox_cli({"classify", path}).parsed()["verdict"] == "arithmetic");

        const auto dot = hypercox_cli({"vinberg", fixture_path("lattice-15"), "--format", "dot"});
        CHECK(dot.code == cli::kOk);
        CHECK(dot.out.find("graph") != std::string::npos);
    }

    TEST_CASE("iteration limit prints the partial run") {
        const auto r = hypercox_cli({"vinberg", fixture_path("lattice-15"), "--max-roots", "5"});
        CHECK(r.code == cli::kIterationLimit);
        const auto j = r.parsed();
        CHECK(j["partial"] == true);
        CHECK(j["finite_volume"] == false);
        CHECK(j["roots"].size() == 5);
    }

    TEST_CASE("convert reaches a fixed point after one pass") {
        for (const auto& name : gram_fixtures()) {
            const auto first = hypercox_cli({"convert", fixture_path(name)});
            REQUIRE(first.code == cli::kOk);
            const auto second = hypercox_cli({"convert", scratch(name + "-1.json", first.out)});
            const auto third = hypercox_cli({"convert", scratch(name + "-2.json", second.out)});
            CAPTURE(name);
            CHECK(third.code == cli::kOk);
            CHECK(third.out == second.out);
            const auto a = cli::diagram_from_json(first.parsed()["diagram"]);
            const auto b = cli::diagram_from_json(second.parsed()["diagram"]);
            CHECK(diagram_isomorphism(a, b, true).has_value());
        }
        const auto dot = hypercox_cli({"convert", fixture_path("prism-fig1"), "--format", "dot"});
        CHECK(dot.out.find("d=") != std::string::npos);
    }

    TEST_CASE("output file and precision") {
        const fs::path out = fs::temp_directory_path() / "hypercox-cli-tests" / "classify-out.json";
        fs::create_directories(out.parent_path());
        fs::remove(out);
        const auto r = hypercox_cli({"classify", fixture_path("hexagon-p2-1"), "--output", out.string()});
        CHECK(r.code == cli::kOk);
        CHECK(r.out.empty());
        std::ifstream in(out);
        CHECK(json::parse(in)["verdict"] == "properly_quasi_arithmetic");

        const auto low = hypercox_cli({"classify", fixture_path("hexagon-p2-1"), "--precision", "16"});
        CHECK(low.parsed()["verdict"] == "properly_quasi_arithmetic");
        hypercox_cli({"classify", fixture_path("hexagon-p2-1"), "--precision", "128"});
    }

    TEST_CASE("bad input exits with 2") {
        CHECK(hypercox_cli({}).code == cli::kBadInput);
        CHECK(hypercox_cli({"classify"}).code == cli::kBadInput);
        CHECK(hypercox_cli({"classify", "/nonexistent/input.json"}).code == cli::kBadInput);
        CHECK(hypercox_cli({"frobnicate"}).code == cli::kBadInput);

        const std::vector<std::pair<std::string, std::string>> cases = {
            {"not-json", "{"},
            {"empty-object", "{}"},
            {"syntax", R"j({"gram": [["1", "-1/2+"], ["-1/2", "1"]]})j"},
            {"negative-radicand", R"j({"gram": [["1", "-sqrt(-2)"], ["-sqrt(-2)", "1"]]})j"},
            {"positive-entry", R"j({"gram": [["1", "1/2"], ["1/2", "1"]]})j"},
            {"asymmetric", R"j({"gram": [["1", "-1/2"], ["-1/3", "1"]]})j"},
            {"unsupported-angle",
             R"j({"diagram": {"vertices": ["a", "b"], "edges": [{"u": "a", "v": "b", "label": 7}]}})j"},
            {"weightless-divergent",
             R"j({"diagram": {"vertices": ["a", "b"], "edges": [{"u": "a", "v": "b", "label": "divergent"}]}})j"},
        };
        for (const auto& [name, text] : cases) {
            const auto r = hypercox_cli({"classify", scratch(name + ".json", text)});
            CAPTURE(name);
            CHECK(r.code == cli::kBadInput);
            CHECK(r.err.find("error") != std::string::npos);
        }

        const auto lattice = scratch("bad-lattice.json", R"j({"field": "Q", "diag": ["1", "1", "1"]})j");
        CHECK(hypercox_cli({"vinberg", lattice}).code == cli::kBadInput);
    }

    TEST_CASE("caps exit with 3") {
        const auto r = hypercox_cli({"classify", lattice_polytope("bugaenko-lattice"), "--cycle-cap", "1"});
        CHECK(r.code == cli::kInconclusive);
        CHECK(r.parsed()["verdict"] == "inconclusive");
    }

    TEST_CASE("installed binary") {
        const std::string cmd = std::string(HYPERCOX_CLI_PATH) + " classify " + fixture_path("pentagon-p2-2") +
                                " > " + scratch("binary-out.json", "");
        CHECK(std::system(cmd.c_str()) == 0);
        const std::string bad = std::string(HYPERCOX_CLI_PATH) + " classify /nonexistent 2> /dev/null";
        const int status = std::system(bad.c_str());
        CHECK(WEXITSTATUS(status) == cli::kBadInput);
    }
}
