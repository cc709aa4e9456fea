#include "artifact/artifact.h"

#include "artifact/runner.hpp"

using namespace artifact;

struct art_theory {
    Theory t;
    std::string warnings;
};

struct art_report {
    Report r;
    std::string json, text;
};

namespace {

thread_local std::string g_error;

int fail(int status, const std::string& msg) {
    g_error = msg;
    return status;
}

}  // namespace

extern "C" {

const char* art_version(void) { return "0.1.0"; }

const char* art_last_error(void) { return g_error.c_str(); }

int art_theory_load(const char* input, art_theory** out) {
    if (!input || !out) return fail(ART_INPUT_ERROR, "art_theory_load: null argument");
    *out = nullptr;
    try {
        auto* h = new art_theory{load_theory(input), {}};
        h->warnings = nlohmann::json(h->t.warnings).dump();
        *out = h;
        g_error.clear();
        return ART_OK;
    } catch (const SchemaError& e) {
        return fail(ART_INPUT_ERROR, e.what());
    } catch (const std::exception& e) {
        return fail(ART_INTERNAL, std::string("internal error: ") + e.what());
    }
}

const char* art_theory_warnings(const art_theory* t) { return t ? t->warnings.c_str() : "[]"; }

void art_theory_free(art_theory* t) { delete t; }

int art_run(const char* subcommand, const art_theory* theory, const char* options_json, art_report** out) {
    if (!subcommand || !out) return fail(ART_INPUT_ERROR, "art_run: null argument");
    *out = nullptr;
    RunConfig cfg;
    cfg.subcommand = subcommand;
    try {
        nlohmann::json o = options_json && *options_json ? nlohmann::json::parse(options_json)
                                                         : nlohmann::json::object();
        if (!o.is_object()) return fail(ART_INPUT_ERROR, "art_run: options must be a JSON object");
        cfg.input = o.value("input", std::string());
        cfg.seed = o.value("seed", (uint64_t)1);
        cfg.degree_cap = o.value("degree_cap", 4);
        cfg.truncation_cap = o.value("truncation_cap", -1);
        cfg.count = o.value("count", 100);
        cfg.dim = o.value("dim", 1);
        cfg.F = o.value("F", std::string());
        cfg.G = o.value("G", std::string());
        cfg.expect = o.value("expect", std::string());
        cfg.write_goldens = o.value("write_goldens", false);
        cfg.golden_dir = o.value("golden_dir", std::string());
    } catch (const std::exception& e) {
        return fail(ART_INPUT_ERROR, std::string("art_run: bad options: ") + e.what());
    }
    try {
        auto* h = new art_report{run(cfg, theory ? &theory->t : nullptr), {}, {}};
        h->json = report_json(h->r);
        h->text = report_text(h->r);
        *out = h;
        if (h->r.error.empty()) g_error.clear();
        else g_error = h->r.error;
        return h->r.status;
    } catch (const std::exception& e) {
        return fail(ART_INTERNAL, std::string("internal error: ") + e.what());
    }
}

const char* art_report_json(const art_report* r) { return r ? r->json.c_str() : ""; }
const char* art_report_text(const art_report* r) { return r ? r->text.c_str() : ""; }
int art_report_status(const art_report* r) { return r ? r->r.status : ART_INTERNAL; }
int art_report_passed(const art_report* r) { return r && r->r.passed(); }
void art_report_free(art_report* r) { delete r; }

}
