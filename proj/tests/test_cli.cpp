#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "diffposet/cli.hpp"

using diffposet::run;
using Json = nlohmann::json;

namespace {

struct Invocation {
    int exit_code;
    std::string out;
    std::string err;
};

Invocation invoke(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("/tmp/diffposet_test_" + name) {}
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("gaps prints the Young table") {
    const auto r = invoke({"gaps", "--poset", "young", "--max-rank", "5"});
    CHECK(r.exit_code == diffposet::kExitOk);
    CHECK(r.out.find("5      7      2") != std::string::npos);
    CHECK(r.out.find("weakly increasing: yes") != std::string::npos);
}

TEST_CASE("verify reports success and failure through the exit status") {
    const auto good = invoke({"verify", "--poset", "fibonacci:2", "--max-rank", "6", "--r", "2"});
    CHECK(good.exit_code == diffposet::kExitOk);
    CHECK(good.out.find("differential axiom verified through rank 5") != std::string::npos);

    const auto bad = invoke({"verify", "--poset", "young", "--max-rank", "4", "--r", "2"});
    CHECK(bad.exit_code == diffposet::kExitCheckFailed);
    CHECK(bad.out.find("FAILED") != std::string::npos);
}

TEST_CASE("certify emits the canonical Young certificate") {
    const auto r = invoke({"certify", "--poset", "young", "--rank", "4", "--witness", "threads",
                           "--format", "json"});
    CHECK(r.exit_code == diffposet::kExitOk);
    const Json report = Json::parse(r.out);
    CHECK(report["command"] == "certify");
    CHECK(report["results"]["certificate"]["bound"] == 2);
    CHECK(report["results"]["certificate"]["method"] == "gershgorin");
    CHECK(report["results"]["certificate"]["margin"] == "1/4");
    CHECK(report["results"]["certificate"]["valid"] == true);
    CHECK(report["results"]["observed_gap"] == 2);
    CHECK(report["inputs"]["poset"]["kind"] == "young");
}

TEST_CASE("certify with an uncertifiable witness exits 1") {
    const auto r = invoke({"certify", "--poset", "young", "--rank", "3", "--witness", "list:0,2"});
    CHECK(r.exit_code == diffposet::kExitCheckFailed);
    CHECK(r.out.find("valid: no") != std::string::npos);

    // the whole rank always meets the image of U, so witness=all never certifies
    const auto whole = invoke({"certify", "--poset", "young", "--rank", "2", "--witness", "all"});
    CHECK(whole.exit_code == diffposet::kExitCheckFailed);
}

TEST_CASE("build prints rank sizes and validation") {
    const auto r = invoke({"build", "--poset", "fibonacci:2", "--max-rank", "3"});
    CHECK(r.exit_code == diffposet::kExitOk);
    CHECK(r.out.find("rank sizes: 1 2 5 12") != std::string::npos);
    CHECK(r.out.find("validation: ok") != std::string::npos);
}

TEST_CASE("replay exits by overall status") {
    const auto r = invoke({"replay", "--poset", "young", "--max-rank", "6"});
    CHECK(r.exit_code == diffposet::kExitOk);
    CHECK(r.out.find("delta p_n >= 2 for n >= 4") != std::string::npos);
}

TEST_CASE("project reports the matrix and its laws") {
    const auto r = invoke({"project", "--poset", "young", "--rank", "2", "--format", "json"});
    CHECK(r.exit_code == diffposet::kExitOk);
    const Json report = Json::parse(r.out);
    CHECK(report["results"]["matrix"][0][0] == "1/2");
    CHECK(report["results"]["matrix"][0][1] == "1/2");
    CHECK(report["results"]["trace"] == "1/1");
    CHECK(report["results"]["laws"]["idempotent"] == true);
    CHECK(report["results"]["laws"]["symmetric"] == true);
}

TEST_CASE("threads prints the census") {
    const auto r = invoke({"threads", "--poset", "fibonacci:2", "--max-rank", "3"});
    CHECK(r.exit_code == diffposet::kExitOk);
    CHECK(r.out.find("rank-1 cover check") != std::string::npos);
}

TEST_CASE("input errors exit 2") {
    CHECK(invoke({"gaps", "--poset", "klein", "--max-rank", "3"}).exit_code ==
          diffposet::kExitInputError);
    CHECK(invoke({"gaps", "--poset", "young"}).exit_code == diffposet::kExitInputError);
    CHECK(invoke({"certify", "--poset", "young"}).exit_code == diffposet::kExitInputError);
    CHECK(invoke({"gaps", "--poset", "file:/nonexistent/x.poset", "--max-rank", "3"}).exit_code ==
          diffposet::kExitInputError);
    CHECK(invoke({"nonsense"}).exit_code == diffposet::kExitInputError);
    CHECK(invoke({"certify", "--poset", "young", "--rank", "4", "--witness", "list:9999"})
              .exit_code == diffposet::kExitInputError);
    CHECK(invoke({"certify", "--poset", "young", "--rank", "4", "--method", "psychic"}).exit_code ==
          diffposet::kExitInputError);
    CHECK(invoke({"gaps", "--poset", "young", "--max-rank", "5", "--format", "yaml"}).exit_code ==
          diffposet::kExitInputError);
}

TEST_CASE("rank caps apply unless --force") {
    const auto capped = invoke({"gaps", "--poset", "young", "--max-rank", "13"});
    CHECK(capped.exit_code == diffposet::kExitInputError);
    CHECK(capped.err.find("--force") != std::string::npos);
    const auto forced = invoke({"gaps", "--poset", "young", "--max-rank", "13", "--force"});
    CHECK(forced.exit_code == diffposet::kExitOk);

    CHECK(invoke({"gaps", "--poset", "fibonacci:2", "--max-rank", "10"}).exit_code ==
          diffposet::kExitInputError);
    CHECK(invoke({"gaps", "--poset", "young-power:2", "--max-rank", "9"}).exit_code ==
          diffposet::kExitInputError);
}

TEST_CASE("json reports are byte-identical across identical invocations") {
    const std::vector<std::string> args = {"replay", "--poset", "young-power:2", "--max-rank",
                                           "4",      "--format", "json"};
    const auto first = invoke(args);
    const auto second = invoke(args);
    CHECK(first.exit_code == second.exit_code);
    CHECK(first.out == second.out);
    CHECK(!first.out.empty());
}

TEST_CASE("build --out writes a document the file kind can read back") {
    TempFile file("young6.poset");
    const auto saved = invoke({"build", "--poset", "young", "--max-rank", "6", "--out", file.path});
    CHECK(saved.exit_code == diffposet::kExitOk);

    const auto loaded = invoke({"gaps", "--poset", "file:" + file.path});
    CHECK(loaded.exit_code == diffposet::kExitOk);
    CHECK(loaded.out.find("6      11     4") != std::string::npos);

    // the file kind honors --max-rank as a truncation and refuses to extend
    const auto truncated = invoke({"verify", "--poset", "file:" + file.path, "--max-rank", "4",
                                   "--r", "1", "--format", "json"});
    CHECK(truncated.exit_code == diffposet::kExitOk);
    CHECK(Json::parse(truncated.out)["results"]["verified_through"] == 3);
    const auto extended = invoke({"gaps", "--poset", "file:" + file.path, "--max-rank", "9"});
    CHECK(extended.exit_code == diffposet::kExitInputError);
    CHECK(extended.err.find("cannot extend") != std::string::npos);
}

TEST_CASE("verify on a file poset requires --r") {
    TempFile file("z2.poset");
    REQUIRE(invoke({"build", "--poset", "fibonacci:2", "--max-rank", "4", "--out", file.path})
                .exit_code == diffposet::kExitOk);
    const auto missing = invoke({"verify", "--poset", "file:" + file.path});
    CHECK(missing.exit_code == diffposet::kExitInputError);
    CHECK(invoke({"verify", "--poset", "file:" + file.path, "--r", "2"}).exit_code ==
          diffposet::kExitOk);
}

TEST_CASE("export writes dot, to stdout or --out") {
    const auto direct = invoke({"export", "--poset", "young", "--max-rank", "3"});
    CHECK(direct.exit_code == diffposet::kExitOk);
    CHECK(direct.out.find("digraph poset {") != std::string::npos);
    CHECK(direct.out.find("fillcolor=white") != std::string::npos);

    const auto plain = invoke({"export", "--poset", "young", "--max-rank", "3", "--highlight",
                               "none"});
    CHECK(plain.out.find("fillcolor=white") == std::string::npos);

    TempFile file("y3.dot");
    const auto saved = invoke({"export", "--poset", "young", "--max-rank", "3", "--out", file.path});
    CHECK(saved.exit_code == diffposet::kExitOk);
    CHECK(saved.out.empty());
    std::ifstream in(file.path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    CHECK(buffer.str() == direct.out);
}

TEST_CASE("export wraps the dot text when json is requested") {
    const auto r = invoke({"export", "--poset", "young", "--max-rank", "2", "--format", "json"});
    CHECK(r.exit_code == diffposet::kExitOk);
    const Json report = Json::parse(r.out);
    const std::string dot = report["results"]["dot"];
    CHECK(dot.find("digraph poset {") != std::string::npos);
    CHECK(report["inputs"]["highlight"] == "threads");
}

TEST_CASE("malformed poset files exit 2 with the line number") {
    TempFile file("broken.poset");
    {
        std::ofstream out(file.path);
        out << "ranks 1 1\nedge 0 0 7\n";
    }
    const auto r = invoke({"gaps", "--poset", "file:" + file.path});
    CHECK(r.exit_code == diffposet::kExitInputError);
    CHECK(r.err.find("line 2") != std::string::npos);
}

TEST_CASE("help is not an error") {
    CHECK(invoke({"--help"}).exit_code == diffposet::kExitOk);
}

}  // TEST_SUITE
