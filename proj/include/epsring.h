/*
 * epsring C API.
 *
 * Opaque handles wrap graded rings and twisted partial actions; every
 * operation returns a status code and, where noted, a JSON report string.
 * Strings returned through char** are heap-allocated and must be released
 * with epsr_string_free. Handles are released with the matching *_free.
 *
 * Status codes (shared with the CLI exit codes):
 *   0  ok
 *   1  internal or usage error
 *   2  malformed input document
 *   3  invalid algebra or grading
 *   4  not epsilon-strong
 *   5  theorem violation (a library bug, never an input property)
 *   6  twisted-partial-action axiom failure
 *   7  search exhausted or inconclusive
 */
#ifndef EPSRING_H
#define EPSRING_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct epsr_ring epsr_ring;
typedef struct epsr_action epsr_action;

enum {
    EPSR_OK = 0,
    EPSR_ERR_INTERNAL = 1,
    EPSR_ERR_PARSE = 2,
    EPSR_ERR_INVALID = 3,
    EPSR_ERR_NOT_EPSILON_STRONG = 4,
    EPSR_ERR_THEOREM = 5,
    EPSR_ERR_ACTION_AXIOM = 6,
    EPSR_ERR_EXHAUSTED = 7
};

const char* epsr_version(void);
void epsr_string_free(char* s);

/* Parsing and serialization. On failure *out stays NULL and *error receives
 * a JSON object {"error": ..., "status": ...}. */
int epsr_ring_parse(const char* json_text, epsr_ring** out, char** error);
int epsr_ring_to_json(const epsr_ring* ring, char** out);
void epsr_ring_free(epsr_ring* ring);

int epsr_action_parse(const char* json_text, epsr_action** out, char** error);
int epsr_action_to_json(const epsr_action* action, char** out);
void epsr_action_free(epsr_action* action);

/* Reports. Each fills *report with a JSON document (also on most failures)
 * and returns the status code. */
int epsr_ring_validate(const epsr_ring* ring, char** report);
int epsr_ring_classify(const epsr_ring* ring, char** report);
int epsr_ring_separability(const epsr_ring* ring, char** report);
int epsr_ring_frobenius(const epsr_ring* ring, char** report);

int epsr_action_validate(const epsr_action* action, char** report);
int epsr_crossed_product(const epsr_action* action, epsr_ring** out, char** report);

/* sections_json: optional {"<degree label>": ["coord", ...], ...} or NULL to
 * search for epsilon-invertible sections with the given seed and budget.  */
int epsr_extract_action(const epsr_ring* ring, const char* sections_json, uint64_t seed,
                        uint64_t budget, int verify_roundtrip, epsr_action** out,
                        char** report);

/* Named example instances. Exactly one of *out_ring / *out_action is set,
 * matching *is_action. field is "q" or "gf:p". */
int epsr_example(const char* name, const char* field, uint64_t seed, epsr_ring** out_ring,
                 epsr_action** out_action, int* is_action, char** report);

/* Generates a corpus of the given size and runs every law suite over it. */
int epsr_corpus_run(uint64_t seed, size_t count, uint64_t budget, char** report);

/* Renders a JSON report as indented plain text. */
int epsr_render_text(const char* report_json, char** out);

#ifdef __cplusplus
}
#endif

#endif /* EPSRING_H */
