#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <string>

#include "json.hpp"

#include "artifact/artifact.h"
#include "artifact/runner.hpp"

using namespace artifact;
using nlohmann::json;

namespace {

const std::string kTheories = ARTIFACT_THEORY_DIR;

struct Proc {
    int status = -1;
    std::string out;
};

Proc cli(const std::string& args) {
    Proc p;
    std::string cmd = std::string(ARTIFACT_CLI) + " " + args + " 2>&1";
    FILE* f = popen(cmd.c_str(), "r");
    REQUIRE(f);
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, f)) > 0) p.out.append(buf, n);
    int st = pclose(f);
    p.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return p;
}

std::string schema_message(const std::string& text) {
    try {
        parse_theory_text(text, "t");
    } catch (const SchemaError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("built-in theories load") {
    Theory t;
    REQUIRE(builtin_theory("su2", t));
    CHECK(t.spec.n == 3);
    CHECK(t.spec.variant == Variant::GradedExtended);
    REQUIRE(builtin_theory("yang-mills", t));
    CHECK(t.spec.n == 4);
    CHECK_FALSE(builtin_theory("qed", t));
}

TEST_CASE("schema diagnostics name the offending path") {
    const std::string head = R"({"schema": "artifact-theory/1", "n": 2, )";
    CHECK(schema_message(R"({"n": 2})").find("schema") != std::string::npos);
    CHECK(schema_message(head + R"("fields": [{"name": "u", "momentum": "p", "ranges": [1], "colour": 1}]})")
              .find("/fields/0/colour") != std::string::npos);
    CHECK(schema_message(head + R"("lie": {"builtin": "e8"}})").find("/lie/builtin") != std::string::npos);
    CHECK(schema_message(head + R"("lie": {"dim": 1, "constants": [[1, 1, 1, "x"]]}})").find("/lie/constants/0") !=
          std::string::npos);
    CHECK(schema_message(head + R"("variant": "symplectic"})").find("/variant") != std::string::npos);
    CHECK(schema_message(head + R"("hamiltonian": "u[1] u[1]"})").find("hamiltonian") != std::string::npos);
    CHECK(schema_message(head + R"("extensions": {"multipliers": true, "antighosts": true}})") != "");
    CHECK(schema_message(R"({"schema": "artifact-theory/1", "n": 2,)").find("line 1") != std::string::npos);
}

TEST_CASE("default variant follows the extensions") {
    const std::string head = R"({"schema": "artifact-theory/1", "n": 2, "lie": {"builtin": "abelian", "dim": 1}, )";
    CHECK(parse_theory_text(head + R"("extensions": {}})", "t").spec.variant == Variant::Plain);
    CHECK(parse_theory_text(head + R"("extensions": {"ghosts": true}})", "t").spec.variant == Variant::Graded);
    CHECK(parse_theory_text(head + R"("extensions": {"multipliers": true}})", "t").spec.variant ==
          Variant::MultiplierExtended);
    CHECK(parse_theory_text(head + R"("extensions": {"multipliers": true, "ghosts": true, "antighosts": true}})",
                            "t")
              .spec.variant == Variant::GradedExtended);
}

TEST_CASE("structure-constant problems are warnings") {
    Theory t = parse_theory_file(kTheories + "/bad_antisym.theory");
    REQUIRE_FALSE(t.warnings.empty());
    CHECK(t.warnings[0] == "structure constants not antisymmetric: C^1_{12} = 1, C^1_{21} = 1");
}

TEST_CASE("C interface statuses") {
    CHECK(std::string(art_version()) == "0.1.0");
    art_theory* t = nullptr;
    CHECK(art_theory_load("no-such-theory", &t) == ART_INPUT_ERROR);
    CHECK(t == nullptr);
    CHECK(std::string(art_last_error()).find("no-such-theory") != std::string::npos);
    CHECK(art_theory_load((kTheories + "/malformed.theory").c_str(), &t) == ART_INPUT_ERROR);
    CHECK(std::string(art_last_error()).find("line 4, column 36") != std::string::npos);

    REQUIRE(art_theory_load((kTheories + "/bad_antisym.theory").c_str(), &t) == ART_OK);
    json w = json::parse(art_theory_warnings(t));
    CHECK(w.size() == 2);
    art_theory_free(t);

    art_report* r = nullptr;
    CHECK(art_run("koszul", nullptr, R"({"dim": 2})", &r) == ART_OK);
    CHECK(art_report_passed(r));
    art_report_free(r);
    CHECK(art_run("koszul", nullptr, R"({"dim": 2, "truncation_cap": 1})", &r) == ART_CAP_EXCEEDED);
    CHECK(art_report_status(r) == ART_CAP_EXCEEDED);
    art_report_free(r);
    CHECK(art_run("eom", nullptr, "{}", &r) == ART_INPUT_ERROR);
    art_report_free(r);
    r = nullptr;
    CHECK(art_run("teleport", nullptr, "{}", &r) == ART_INPUT_ERROR);
    art_report_free(r);
    r = nullptr;
    CHECK(art_run("koszul", nullptr, "{not json", &r) == ART_INPUT_ERROR);
    art_report_free(r);
}

TEST_CASE("report JSON is canonical and deterministic") {
    art_report* a = nullptr;
    art_report* b = nullptr;
    const char* opts = R"({"seed": 3, "count": 4})";
    REQUIRE(art_run("property-suite", nullptr, opts, &a) == ART_OK);
    REQUIRE(art_run("property-suite", nullptr, opts, &b) == ART_OK);
    std::string ja = art_report_json(a), jb = art_report_json(b);
    CHECK(ja == jb);
    json j = json::parse(ja);
    CHECK(j.dump(2) + "\n" == ja);
    CHECK(j["schema"] == "artifact-report/1");
    CHECK(j["seed"] == 3);
    CHECK(j["passed"] == true);
    art_report_free(a);
    art_report_free(b);
}

TEST_CASE("subcommands on theory files") {
    art_theory* t = nullptr;
    REQUIRE(art_theory_load((kTheories + "/scalar.theory").c_str(), &t) == ART_OK);
    art_report* r = nullptr;
    for (const char* sub : {"build", "eom"}) {
        CHECK(art_run(sub, t, "{}", &r) == ART_OK);
        art_report_free(r);
    }
    CHECK(art_run("bracket", t, R"j({"F": "u[1]*vol1(0)", "G": "p[1,0]*vol1(0) + p[1,1]*vol1(1)"})j", &r) == ART_OK);
    art_report_free(r);
    CHECK(art_run("bracket", t, R"j({"F": "u[1]*vol1(0)", "G": "p[1,0]*vol1(0)", "expect": "7"})j", &r) ==
          ART_CHECK_FAILED);
    art_report_free(r);
    art_theory_free(t);

    REQUIRE(art_theory_load((kTheories + "/obstruction.theory").c_str(), &t) == ART_OK);
    CHECK(art_run("structural", t, R"({"F": "upsilon", "expect": "obstruction"})", &r) == ART_OK);
    json j = json::parse(art_report_json(r));
    CHECK(j["data"]["witness"].get<std::string>().find("dη") != std::string::npos);
    art_report_free(r);
    CHECK(art_run("structural", t, R"({"F": "upsilon", "expect": "hamiltonian"})", &r) == ART_CHECK_FAILED);
    art_report_free(r);
    art_theory_free(t);
}

TEST_CASE("CLI exit codes") {
    CHECK(cli("koszul --dim 1").status == 0);
    CHECK(cli("koszul --dim 2 --cap 1").status == 3);
    CHECK(cli("build -i " + kTheories + "/malformed.theory").status == 2);
    CHECK(cli("build").status == 2);
    CHECK(cli("frobnicate").status == 2);
    CHECK(cli("nilpotency -i su2").status == 0);
    CHECK(cli("lda -i " + kTheories + "/translation_lda.theory").status == 0);
    Proc p = cli("build -i " + kTheories + "/bad_antisym.theory");
    CHECK(p.status == 0);
    CHECK(p.out.find("warning: structure constants not antisymmetric") != std::string::npos);
}

TEST_CASE("CLI JSON output matches the C interface") {
    Proc p = cli("koszul --dim 2 --format json");
    REQUIRE(p.status == 0);
    art_report* r = nullptr;
    REQUIRE(art_run("koszul", nullptr, R"({"dim": 2})", &r) == ART_OK);
    CHECK(p.out == art_report_json(r));
    art_report_free(r);
}
