#include <doctest.h>

#include "parayam/builtin.hpp"
#include "parayam/cli.hpp"
#include "parayam/manifold_file.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace parayam;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    RunResult r;
    r.code = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("curvature renders the frozen tables") {
    const RunResult r = run({"curvature", "builtin:example_5_2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("Gamma^z_{x x} = -3*z^2*exp(2*z^3)") != std::string::npos);
    CHECK(r.out.find("r = -18*z^4") != std::string::npos);
    CHECK(r.out.find("result: pass") != std::string::npos);

    const RunResult tuned = run({"curvature", "builtin:example_5_1?u=1"});
    CHECK(tuned.code == 0);
    CHECK(tuned.out.find("r = -6") != std::string::npos);
}

TEST_CASE("structure reports axioms and classification") {
    const RunResult good = run({"structure", "builtin:example_5_1"});
    CHECK(good.code == 0);
    CHECK(good.out.find("para-Sasakian: yes") != std::string::npos);
    CHECK(good.out.find("K-paracontact: yes") != std::string::npos);
    CHECK(good.out.find("k = -1") != std::string::npos);

    const RunResult bad = run({"structure", "builtin:example_5_2"});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("check structure axioms: fail") != std::string::npos);
    CHECK(bad.out.find("result: fail") != std::string::npos);
}

TEST_CASE("soliton verify classifies and checks the equation") {
    const RunResult r = run({"soliton", "verify", "builtin:example_5_1?u=0", "--Z", "xi",
                             "--lambda=-2", "--delta", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("delta-Yamabe soliton") != std::string::npos);
    CHECK(r.out.find("kind: shrinking") != std::string::npos);
    CHECK(r.out.find("result: pass") != std::string::npos);

    const RunResult wrong = run({"soliton", "verify", "builtin:example_5_1?u=0", "--Z", "xi",
                                 "--lambda", "7", "--delta", "3"});
    CHECK(wrong.code == 1);
    CHECK(wrong.out.find("result: fail") != std::string::npos);
}

TEST_CASE("soliton solve-lambda reports the witness on failure") {
    const RunResult ok = run({"soliton", "solve-lambda", "builtin:example_5_1?u=0", "--Z", "xi",
                              "--delta", "3"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("lambda = -2") != std::string::npos);
    CHECK(ok.out.find("shrinking") != std::string::npos);

    const RunResult no = run({"soliton", "solve-lambda", "builtin:example_5_1", "--Z", "e1"});
    CHECK(no.code == 1);
    CHECK(no.out.find("(2, 3)") != std::string::npos);
}

TEST_CASE("identity runs one id or the whole suite") {
    const RunResult one = run({"identity", "T2", "builtin:example_5_1?u=0", "--Z", "xi",
                               "--lambda=-2", "--delta", "3"});
    CHECK(one.code == 0);
    CHECK(one.out.find("check T2: pass") != std::string::npos);

    const RunResult all = run({"identity", "all", "builtin:example_5_1?u=0", "--Z", "xi",
                               "--lambda=-2", "--delta", "3"});
    CHECK(all.code == 0);
    for (const char* id : {"L1a", "L1b", "L1c", "T2", "T3", "T4", "T5"}) {
        CAPTURE(id);
        CHECK(all.out.find(std::string("check ") + id + ": pass") != std::string::npos);
    }
    CHECK(all.out.find("check T9: hypothesis-not-satisfied") != std::string::npos);
    CHECK(all.out.find("warnings:") != std::string::npos);

    const RunResult unknown = run({"identity", "T99", "builtin:example_5_1", "--Z", "xi",
                                   "--lambda", "0"});
    CHECK(unknown.code == 2);
    CHECK(unknown.err.find("unknown identity") != std::string::npos);
}

TEST_CASE("gradient potentials resolve through grad: and imply u") {
    const RunResult r = run({"identity", "GL1", "builtin:flat_para_cosymplectic", "--Z",
                             "grad:(x^2 - y^2 + z^2)/2", "--lambda=-delta", "--delta", "delta"});
    CHECK(r.code == 0);
    CHECK(r.out.find("check GL1: pass") != std::string::npos);
}

TEST_CASE("the jacobi flag turns T4 consequence checking on") {
    // K is not a declared field of the builtin, so splice it into the text form.
    const std::string path =
        (std::filesystem::temp_directory_path() / "parayam_cli_jacobi.pam").string();
    {
        std::string text = write_model_text(make_builtin("builtin:flat_para_cosymplectic"));
        const std::string needle = "vector euler : x, y, z\n";
        const auto at = text.find(needle);
        REQUIRE(at != std::string::npos);
        text.insert(at + needle.size(), "  vector K : 2*z*x, 2*z*y, z^2 - x^2 + y^2\n");
        std::ofstream file(path, std::ios::binary);
        file << text;
    }

    std::vector<std::string> args = {"identity", "T4", path, "--Z", "K",
                                     "--lambda=-2*z*delta", "--delta", "delta"};
    const RunResult without = run(args);
    CHECK(without.code == 0);
    CHECK(without.out.find("check T4: pass") != std::string::npos);

    args.push_back("--jacobi");
    const RunResult with = run(args);
    CHECK(with.code == 1);
    CHECK(with.out.find("check T4: fail") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("workload files feed every command") {
    const std::string path =
        (std::filesystem::temp_directory_path() / "parayam_cli_model.pam").string();
    {
        ModelBundle b = make_builtin("builtin:example_5_1?u=0");
        std::string text = write_model_text(b);
        text +=
            "soliton {\n"
            "  potential xi\n"
            "  lambda -2\n"
            "  delta 3\n"
            "}\n";
        std::ofstream out(path, std::ios::binary);
        out << text;
    }
    // The soliton section supplies Z, lambda and delta without flags.
    const RunResult r = run({"soliton", "verify", path});
    CHECK(r.code == 0);
    CHECK(r.out.find("result: pass") != std::string::npos);

    // Command-line values override the file.
    const RunResult overridden = run({"soliton", "verify", path, "--lambda", "12"});
    CHECK(overridden.code == 1);
    std::remove(path.c_str());
}

TEST_CASE("json output is well formed and carries the same verdict") {
    const RunResult r = run({"--format", "json", "soliton", "verify", "builtin:example_5_1?u=0",
                             "--Z", "xi", "--lambda=-2", "--delta", "3"});
    CHECK(r.code == 0);
    const nlohmann::json doc = nlohmann::json::parse(r.out);
    CHECK(doc["ok"] == true);
    CHECK(doc["command"] == "soliton verify");
    CHECK(doc["sections"].is_array());
    CHECK(doc["sections"][0]["checks"].size() >= 2);

    // The flag may also follow the subcommand.
    const RunResult trailing = run({"reproduce-paper", "--format", "json"});
    CHECK(trailing.code == 0);
    const nlohmann::json battery = nlohmann::json::parse(trailing.out);
    CHECK(battery["ok"] == true);
    CHECK(battery["sections"].size() == 10);
    CHECK(battery["warnings"].size() >= 9);
}

TEST_CASE("output is deterministic across runs") {
    const std::vector<std::string> args = {"reproduce-paper"};
    const RunResult a = run(args);
    const RunResult b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    const std::vector<std::string> id_args = {"identity", "all", "builtin:example_5_2",
                                              "--Z", "Z", "--lambda", "lambda",
                                              "--delta", "delta"};
    const RunResult c = run(id_args);
    const RunResult d = run(id_args);
    CHECK(c.out == d.out);
}

TEST_CASE("usage and load failures exit with code 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"curvature"}).code == 2);   // missing input
    CHECK(run({"soliton", "verify", "builtin:example_5_1"}).code == 2); // no Z/lambda

    const RunResult missing = run({"curvature", "/no/such/file.pam"});
    CHECK(missing.code == 2);
    CHECK(missing.err.find("error:") != std::string::npos);

    const RunResult help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("reproduce-paper") != std::string::npos);
}

TEST_CASE("reproduce-paper passes end to end") {
    const RunResult r = run({"reproduce-paper"});
    CHECK(r.code == 0);
    for (int i = 1; i <= 10; ++i) {
        CAPTURE(i);
        CHECK(r.out.find("criterion " + std::to_string(i)) != std::string::npos);
    }
    CHECK(r.out.find("result: pass") != std::string::npos);
    CHECK(r.out.find("warnings:") != std::string::npos);
}

} // TEST_SUITE
