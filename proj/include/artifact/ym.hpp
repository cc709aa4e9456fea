#pragma once
// Yang-Mills scenario: Legendre transform, constraints, field equations and the
// canonical tables on the vertical extended graded space.

#include <string>
#include <vector>

#include "artifact/phase.hpp"

namespace artifact {

struct YmOptions {
    // f^c_ab stored as at(c, a, b); must be totally antisymmetric with lowered c
    StructureConstants f = levi_civita3();
};

struct YmCheck {
    std::string id;     // golden file stem, e.g. "bracket.lambda-B"
    std::string title;
    bool pass = false;
    // one line per index combination: "key: normal form", the golden content
    std::vector<std::string> lines;
    std::string mismatch;  // first failing row, computed vs displayed
    std::string note;
};

struct YmReport {
    int dim = 0;
    std::vector<YmCheck> checks;
    bool all_pass() const {
        for (auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    const YmCheck* find(const std::string& id) const {
        for (auto& c : checks)
            if (c.id == id) return &c;
        return nullptr;
    }
};

// n = 4, one field family A^a_mu with momenta F_a^{mu nu}, Lie constants C = -f,
// adjoint action.  Extensions follow the variant.
TheorySpec yang_mills_spec(const StructureConstants& f, Variant v = Variant::Vertical, bool extended = true);

YmReport yang_mills_suite(const YmOptions& opt = {});

// Golden files: <dir>/ym/<check id>.txt, one row per line.
// ARTIFACT_GOLDEN_DIR overrides the directory passed in.
std::string golden_dir(const std::string& fallback);

struct GoldenDiff {
    std::string id;
    bool present = false;
    bool match = false;
    std::string first_diff;  // "line k: golden ... ; computed ..."
};
std::vector<GoldenDiff> compare_goldens(const YmReport& rep, const std::string& dir);
void write_goldens(const YmReport& rep, const std::string& dir);

}  // namespace artifact
