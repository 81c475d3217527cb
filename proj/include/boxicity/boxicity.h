/* Copyright (c) Boxicity toolkit contributors.
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the boxicity toolkit. Every exchange of structured data
 * uses the toolkit's JSON documents. Strings returned through char** are
 * heap-allocated and must be released with bx_string_free; handles with
 * their matching *_free. On failure the returned status is non-zero and
 * bx_last_error() describes the problem (thread-local).
 */
#ifndef BOXICITY_BOXICITY_H
#define BOXICITY_BOXICITY_H

#include <stdint.h>

#if defined(_WIN32)
#define BX_API __declspec(dllexport)
#else
#define BX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct bx_graph bx_graph;
typedef struct bx_boxrep bx_boxrep;

typedef enum bx_status {
    BX_OK = 0,
    BX_VERIFICATION_FAILED = 1,
    BX_INVALID_INPUT = 2,
    BX_BUDGET_EXHAUSTED = 3,
    BX_PARSE_ERROR = 4,
    BX_PRECONDITION = 5,
    BX_INTERNAL = 6
} bx_status;

BX_API const char* bx_version(void);
BX_API const char* bx_last_error(void);
BX_API const char* bx_status_name(bx_status status);
BX_API void bx_string_free(char* text);

/* Graphs: {"n": int, "edges": [[u, v], ...]} */
BX_API bx_status bx_graph_from_json(const char* text, bx_graph** out);
BX_API bx_status bx_graph_to_json(const bx_graph* graph, char** out);
BX_API int bx_graph_order(const bx_graph* graph);
BX_API void bx_graph_free(bx_graph* graph);

/* family: complete, cycle, path, empty, roberts, subdivided_complete,
 * random (uses p and seed), forest (uses seed), torus (n x m). */
BX_API bx_status bx_graph_generate(const char* family, int n, int m, double p, uint64_t seed, bx_graph** out);

/* Box representations: {"d": int, "vertices": {"v": [[[n,d],[n,d]], ...]}} */
BX_API bx_status bx_boxrep_from_json(const char* text, bx_boxrep** out);
BX_API bx_status bx_boxrep_to_json(const bx_boxrep* rep, char** out);
BX_API int bx_boxrep_dimension(const bx_boxrep* rep);
BX_API void bx_boxrep_free(bx_boxrep* rep);

/* Writes a verification report. BX_OK when the representation matches the
 * graph exactly, BX_VERIFICATION_FAILED when it does not (report lists the
 * missing and extra edges). */
BX_API bx_status bx_verify(const bx_graph* graph, const bx_boxrep* rep, char** report);

/* Exact boxicity up to d_max. max_nodes = 0 or time_limit <= 0 disable the
 * respective limit. BX_OK when the value was determined; BX_BUDGET_EXHAUSTED
 * when the budget ran out or every d <= d_max was refuted. result always
 * receives the result document; witness (nullable) receives the witness when
 * one exists. */
BX_API bx_status bx_exact(const bx_graph* graph, int d_max, uint64_t max_nodes, double time_limit,
                          int symmetry_pruning, char** result, bx_boxrep** witness);

/* method: acyclic, roberts, girth4, forest, figure1. certificate (nullable)
 * is the method's certificate document: a colouring for acyclic, a
 * forest/stable partition for girth4, a cycle classification for figure1
 * (required). Missing certificates for acyclic and girth4 are searched for.
 * Every output is verified before it is returned; the figure1 gadget covers
 * the cycle and its classified neighbours only. */
BX_API bx_status bx_construct(const bx_graph* graph, const char* method, const char* certificate, bx_boxrep** out);

/* Replays a derivation script. On success out receives the verified
 * representation; report receives the step report whenever the script parsed
 * (on failure it carries the error). */
BX_API bx_status bx_derive(const bx_graph* graph, const char* script, bx_boxrep** out, char** report);

/* Realizer extensions of the adjacency poset from a proper colouring
 * (nullable: an optimal colouring is computed), with their checks. */
BX_API bx_status bx_poset_realizer(const bx_graph* graph, const char* coloring, char** out);

/* Surface bounds for genus >= 1. box and chi < 0 mean "not given". */
BX_API bx_status bx_bounds(int genus, int orientable, int box, int chi, char** out);

#ifdef __cplusplus
}
#endif

#endif /* BOXICITY_BOXICITY_H */
