/*
 * liftreg C API.
 *
 * Exact analysis of lifting regions of maximal lattice-free simplicial
 * polytopes behind a plain C interface: opaque body handles, integer
 * status codes, and JSON/SVG payloads exchanged as strings.
 *
 * Every function returning LR_OK fills its output pointer with a
 * NUL-terminated string owned by the library; release it with
 * lr_string_free(). On failure the optional err output (when non-NULL)
 * receives a JSON object {"error":{"code":...,"message":...}}.
 */

#ifndef LIFTREG_H
#define LIFTREG_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct lr_body lr_body; /* opaque */

typedef enum lr_status {
  LR_OK = 0,
  LR_E_VALIDATION = 1, /* bad input, hypothesis violation, parse error */
  LR_E_CAP = 2,        /* enumeration or box cap exceeded */
  LR_E_INTERNAL = 3
} lr_status;

const char* lr_version(void);

/* Overrides the lattice-point/translate enumeration cap; 0 = default. */
void lr_set_enum_cap(uint64_t cap);

/* Frees any string returned by this API. NULL is fine. */
void lr_string_free(char* s);

/* Parses a body from its JSON description. */
lr_status lr_body_parse(const char* json, lr_body** out, char** err);
void lr_body_free(lr_body* body);

/* Canonical JSON of the body (vertices plus derived facet data). */
lr_status lr_body_to_json(const lr_body* body, char** out);

/* Full analysis at a point f ("p/q,p/q,..."): maximality report, exact
 * torus volume, unique-lifting verdict, uncovered witness if any. */
lr_status lr_analyze(const lr_body* body, const char* f, char** report, char** err);

/* Affine volume function fitted from the vertex volumes, verified at the
 * given number of interior probe points, plus the body dichotomy. */
lr_status lr_sweep(const lr_body* body, int32_t probes, char** report, char** err);

/* Grid covering oracle at the given resolution. */
lr_status lr_oracle(const lr_body* body, const char* f, int32_t resolution,
                    char** report, char** err);

/* Structural classification (one-point-per-facet criterion, 2-partition
 * slice criterion) cross-checked against the exact volume verdict. */
lr_status lr_classify(const lr_body* body, char** report, char** err);

/* SVG figure of a planar body's region at f. */
lr_status lr_render(const lr_body* body, const char* f, char** svg, char** err);

/* Generates a body from a named family; params is a JSON object.
 *   family "standard": {"n": int, "scale": optional int}
 *   family "delta":    {"n": int, "delta": ["p/q", ...]}
 *   family "type3cone":{"blowup": "p/q", "triangle": optional body JSON}
 *   family "search":   {"q": int, "box_lo": int, "box_hi": int,
 *                       "index": optional int, "type": optional name}
 * For "search" the result is the selected triangle's body JSON plus tags.
 */
lr_status lr_generate(const char* family, const char* params_json, char** out,
                      char** err);

#ifdef __cplusplus
}
#endif

#endif /* LIFTREG_H */
