#ifndef ARTIFACT_H
#define ARTIFACT_H
/* C interface to the check suites.  Handles are opaque; every call that can fail
   returns a status and leaves a message in art_last_error(). */

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define ART_API __declspec(dllexport)
#else
#define ART_API __attribute__((visibility("default")))
#endif

typedef struct art_theory art_theory;
typedef struct art_report art_report;

/* statuses, equal to the CLI exit codes */
enum {
    ART_OK = 0,
    ART_CHECK_FAILED = 1,
    ART_INPUT_ERROR = 2, /* parse, schema or build error */
    ART_CAP_EXCEEDED = 3,
    ART_INTERNAL = 4
};

ART_API const char* art_version(void);
/* message of the last failing call on this thread, "" if none */
ART_API const char* art_last_error(void);

/* path to a theory file, or a built-in name ("yang-mills", "su2") */
ART_API int art_theory_load(const char* input, art_theory** out);
/* JSON array of load warnings (structure-constant diagnostics) */
ART_API const char* art_theory_warnings(const art_theory* t);
ART_API void art_theory_free(art_theory* t);

/* options_json: object with optional keys seed, degree_cap, truncation_cap, count,
   dim, F, G, expect, write_goldens, golden_dir, input.  theory may be NULL for
   koszul, property-suite and ym-suite.  On return *out holds a report even when the
   status is not ART_OK, except for invalid arguments. */
ART_API int art_run(const char* subcommand, const art_theory* theory, const char* options_json,
                    art_report** out);

ART_API const char* art_report_json(const art_report* r);
ART_API const char* art_report_text(const art_report* r);
ART_API int art_report_status(const art_report* r);
ART_API int art_report_passed(const art_report* r);
ART_API void art_report_free(art_report* r);

#ifdef __cplusplus
}
#endif

#endif
