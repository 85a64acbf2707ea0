#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>

#include "cli.hpp"

using sincov::cli::run;

namespace
{

std::string golden(std::string const& name)
{
    return std::string(SINCOV_GOLDEN_DIR) + "/" + name;
}

std::string slurp(std::string const& path)
{
    std::ifstream file(path);
    std::stringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

struct Outcome
{
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> const& args, std::string const& stdin_text = {})
{
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    int const code = run(args, in, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("check")
{
    auto ok = invoke({"check", golden("swap.system.json")});
    CHECK(ok.code == 0);
    CHECK(ok.out == "{\"violations\":[]}\n");

    auto broken = invoke({"check", golden("check_symmetry.system.json")});
    CHECK(broken.code == 1);
    CHECK(broken.out == slurp(golden("check_symmetry.violations.json")));

    auto filtered = invoke({"check", "--laws", "transitivity,identity", golden("check_symmetry.system.json")});
    CHECK(filtered.code == 0);

    CHECK(invoke({"check", "--laws", "bogus", golden("swap.system.json")}).code == 2);
    CHECK(invoke({"check", "-"}, "{not json").code == 2);
    CHECK(invoke({"check", "/nonexistent/file.json"}).code == 2);
}

TEST_CASE("solve golden files")
{
    for (auto name : {"solve_one_class", "solve_empty", "solve_two_classes"}) {
        auto const result = invoke({"solve", golden(std::string(name) + ".system.json")});
        CHECK(result.code == 0);
        CHECK(result.out == slurp(golden(std::string(name) + ".atlas.json")));
    }

    auto violating = invoke({"solve", golden("check_symmetry.system.json")});
    CHECK(violating.code == 1);
    auto const payload = nlohmann::json::parse(violating.out);
    CHECK(payload["error"] == "PreconditionViolated");
    CHECK(payload["violations"].size() == 1);
    CHECK_FALSE(violating.err.empty());
}

TEST_CASE("solve with a fixed index")
{
    auto const result = invoke({"solve", "--gamma", "alpha", golden("swap.system.json")});
    CHECK(result.code == 0);
    CHECK(result.out ==
          "{\"charts\":{\"alpha\":[[\"0\",\"0\"],[\"1\",\"1\"]],\"beta\":[[\"0\",\"1\"],[\"1\",\"0\"]]}}\n");

    auto strict = invoke({"solve", "--gamma", "beta", golden("solve_two_classes.system.json")});
    CHECK(strict.code == 1);
    CHECK(nlohmann::json::parse(strict.out)["error"] == "EqualityCaseViolated");

    CHECK(invoke({"solve", "--gamma", "nowhere", golden("swap.system.json")}).code == 2);
}

TEST_CASE("reconstruct, iso and axioms")
{
    auto const atlas_file = golden("solve_one_class.atlas.json");

    auto rebuilt = invoke({"reconstruct", atlas_file});
    CHECK(rebuilt.code == 0);
    CHECK(nlohmann::json::parse(rebuilt.out) ==
          sincov::io::to_json(sincov::io::system_from_json(
              nlohmann::json::parse(slurp(golden("solve_one_class.system.json"))))));

    auto self = invoke({"iso", atlas_file, atlas_file});
    CHECK(self.code == 0);
    CHECK(self.out == "{\"omega\":[[\"cls:alpha:0\",\"cls:alpha:0\"]]}\n");

    auto different = invoke({"iso", atlas_file, golden("solve_two_classes.atlas.json")});
    CHECK(different.code == 1);
    CHECK(nlohmann::json::parse(different.out)["error"] == "NotIsomorphic");

    auto mismatch = invoke({"iso", atlas_file, golden("solve_empty.atlas.json")});
    CHECK(mismatch.code == 1);
    CHECK(nlohmann::json::parse(mismatch.out)["error"] == "IndexMismatch");

    auto axioms = invoke({"axioms", atlas_file});
    CHECK(axioms.code == 0);
    auto const report = nlohmann::json::parse(axioms.out);
    for (auto key : {"at1", "at2", "at3"})
        CHECK(report[key]["pass"] == true);

    auto bad = invoke({"axioms", "-"}, R"({"charts":{"a":[["z","0"],["z","1"]]}})");
    CHECK(bad.code == 1);
    CHECK(nlohmann::json::parse(bad.out)["at2"]["pass"] == false);

    auto invalid = invoke({"reconstruct", "-"}, R"({"charts":{"a":[["z","0"],["z","1"]]}})");
    CHECK(invalid.code == 1);
    CHECK(nlohmann::json::parse(invalid.out)["error"] == "InvalidAtlas");
}

TEST_CASE("flow-gen")
{
    auto const result = invoke({"flow-gen", golden("flow_blowup.flow.json")});
    CHECK(result.code == 0);
    CHECK(result.out == slurp(golden("flow_blowup.system.json")));
    auto const doc = nlohmann::json::parse(result.out);
    CHECK_FALSE(doc["relations"].contains("1|0"));

    CHECK(invoke({"flow-gen", "-"}, R"({"kind":"doubling","grid":["1/2"],"seeds":[]})").code == 2);
    CHECK(invoke({"flow-gen", "-"}, R"({"kind":"blowup","grid":["0"],"seeds":[{"t":"1","x":"0"}]})")
              .code == 2);
}

TEST_CASE("pipeline through standard input")
{
    for (auto name : {"flow_blowup", "flow_translation", "flow_doubling", "flow_permutation"}) {
        auto const generated = invoke({"flow-gen", golden(std::string(name) + ".flow.json")});
        REQUIRE(generated.code == 0);
        auto const solved = invoke({"solve", "-"}, generated.out);
        REQUIRE(solved.code == 0);
        auto const rebuilt = invoke({"reconstruct", "-"}, solved.out);
        REQUIRE(rebuilt.code == 0);
        CHECK(rebuilt.out == generated.out);
    }
}

TEST_CASE("usage errors")
{
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"frobnicate"}).code == 2);
    CHECK(invoke({"iso", "-", "-"}, "{}").code == 2);
    CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("pretty output is still valid JSON")
{
    auto const result = invoke({"--pretty", "solve", golden("solve_one_class.system.json")});
    CHECK(result.code == 0);
    CHECK(result.out.find('\n') < result.out.size() - 1);
    CHECK(nlohmann::json::parse(result.out) ==
          nlohmann::json::parse(slurp(golden("solve_one_class.atlas.json"))));
}
