#pragma once
// Check-suite orchestration behind the CLI: theory files, subcommands, reports.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "artifact/phase.hpp"

namespace artifact {

// Exit statuses.
enum RunStatus { kPass = 0, kCheckFailed = 1, kInputError = 2, kCapExceeded = 3, kInternal = 4 };

// Schema violation in a theory file; message carries the field path and, for
// malformed JSON, line and column.
struct SchemaError : Error {
    using Error::Error;
};

struct Theory {
    TheorySpec spec;
    std::string source;  // file path or built-in name
    std::vector<std::string> warnings;
};

// Built-ins: "yang-mills", "su2".
bool builtin_theory(const std::string& name, Theory& out);
Theory parse_theory_text(const std::string& text, const std::string& origin);
Theory parse_theory_file(const std::string& path);
// file if it exists, otherwise a built-in name
Theory load_theory(const std::string& input);

struct RunConfig {
    std::string subcommand;  // build bracket structural nilpotency eom lda koszul ym-suite property-suite
    std::string input;
    std::string format = "text";
    uint64_t seed = 1;
    int degree_cap = 4;
    int truncation_cap = -1;
    int count = 100;        // property-suite instances per law
    int dim = 1;            // koszul
    std::string F, G;       // bracket / structural operands; structural accepts "upsilon"
    std::string expect;     // bracket: expected value; structural: hamiltonian | obstruction
    bool write_goldens = false;
    std::string golden_dir;  // fallback when ARTIFACT_GOLDEN_DIR is unset
};

struct CheckRow {
    std::string name;
    bool pass = false;
    std::string detail;
    std::string offending;  // normalized term on failure
};

struct Report {
    std::string subcommand, input;
    uint64_t seed = 0;
    int status = kPass;
    std::vector<CheckRow> checks;
    std::vector<std::string> warnings;
    std::string error;
    nlohmann::json data = nlohmann::json::object();
    bool passed() const { return status == kPass; }
};

// theory may be null for suites without an input (koszul, property-suite, ym-suite).
Report run(const RunConfig& cfg, const Theory* theory);

// "artifact-report/1": sorted keys, two-space indent, trailing newline.
nlohmann::json report_to_json(const Report& r);
std::string report_json(const Report& r);
std::string report_text(const Report& r);

const std::vector<std::string>& subcommands();

}  // namespace artifact
