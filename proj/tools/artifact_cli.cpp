// Command-line front end over the C interface.
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "artifact/artifact.h"

#ifndef ARTIFACT_GOLDEN_DIR_DEFAULT
#define ARTIFACT_GOLDEN_DIR_DEFAULT "tests/golden"
#endif

namespace {

struct Opts {
    std::string input, format = "text", F, G, expect, golden_dir = ARTIFACT_GOLDEN_DIR_DEFAULT;
    uint64_t seed = 1;
    int degree_cap = 4, truncation_cap = -1, count = 100, dim = 1;
    bool write_goldens = false;
};

bool needs_input(const std::string& s) {
    return s != "koszul" && s != "property-suite" && s != "ym-suite";
}

int execute(const std::string& sub, const Opts& o) {
    art_theory* t = nullptr;
    if (!o.input.empty() || needs_input(sub)) {
        if (o.input.empty()) {
            std::cerr << "error: " << sub << " needs --input\n";
            return ART_INPUT_ERROR;
        }
        int st = art_theory_load(o.input.c_str(), &t);
        if (st != ART_OK) {
            std::cerr << "error: " << art_last_error() << "\n";
            return st;
        }
    }
    nlohmann::json opt = {{"seed", o.seed},       {"degree_cap", o.degree_cap}, {"truncation_cap", o.truncation_cap},
                          {"count", o.count},     {"dim", o.dim},               {"F", o.F},
                          {"G", o.G},             {"expect", o.expect},         {"write_goldens", o.write_goldens},
                          {"golden_dir", o.golden_dir}, {"input", o.input}};
    art_report* r = nullptr;
    int st = art_run(sub.c_str(), t, opt.dump().c_str(), &r);
    if (!r) {
        std::cerr << "error: " << art_last_error() << "\n";
        art_theory_free(t);
        return st;
    }
    std::fputs(o.format == "json" ? art_report_json(r) : art_report_text(r), stdout);
    if (o.format == "json" && st != ART_OK && st != ART_CHECK_FAILED) std::cerr << "error: " << art_last_error() << "\n";
    art_report_free(r);
    art_theory_free(t);
    return st;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Covariant BRST check suites"};
    app.set_version_flag("--version", std::string(art_version()));
    app.require_subcommand(1);
    Opts o;
    struct Sub {
        const char* name;
        const char* help;
    };
    const Sub subs[] = {
        {"build", "build the phase space and its Cartan forms"},
        {"bracket", "bracket {F,G} of two forms"},
        {"structural", "solve X -| Omega = dF"},
        {"nilpotency", "BRST charge nilpotency and generator actions"},
        {"eom", "covariant Hamilton equations"},
        {"lda", "Lagrange-d'Alembert-Hamilton equations"},
        {"koszul", "Koszul homology of the multiplier/antighost complex"},
        {"ym-suite", "Yang-Mills tables against golden files"},
        {"property-suite", "seeded random instances of the algebraic laws"},
    };
    for (auto& s : subs) {
        CLI::App* c = app.add_subcommand(s.name, s.help);
        c->add_option("--input,-i", o.input, "theory file or built-in (yang-mills, su2)");
        c->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));
        c->add_option("--seed", o.seed, "seed for randomized suites");
        c->add_option("--degree-cap", o.degree_cap, "ansatz degree cap");
        c->add_option("--truncation-cap", o.truncation_cap, "Koszul weight cap");
        std::string n = s.name;
        if (n == "bracket" || n == "structural") {
            c->add_option("--F", o.F, "form text, or upsilon for the BRST charge");
            c->add_option("--expect", o.expect,
                          n == "bracket" ? "expected bracket value" : "hamiltonian or obstruction");
        }
        if (n == "bracket") c->add_option("--G", o.G, "form text");
        if (n == "koszul") {
            c->add_option("--dim", o.dim, "algebra dimension");
            c->add_option("--cap", o.truncation_cap, "alias of --truncation-cap");
        }
        if (n == "property-suite") c->add_option("--count", o.count, "instances per law");
        if (n == "ym-suite") {
            c->add_flag("--write-goldens", o.write_goldens, "regenerate the golden files first");
            c->add_option("--golden-dir", o.golden_dir, "golden directory (ARTIFACT_GOLDEN_DIR overrides)");
        }
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : ART_INPUT_ERROR;
    }
    return execute(app.get_subcommands().front()->get_name(), o);
}
