/*
 * C interface to the identifying-code library.
 *
 * Graphs and vertex sets are opaque handles. Every call returns an
 * idc_status; on failure idc_last_error() holds a message for the calling
 * thread. Strings returned through char** are owned by the caller and must be
 * released with idc_string_free. Reports are JSON documents.
 */
#ifndef IDCODE_IDCODE_H
#define IDCODE_IDCODE_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct idc_graph idc_graph;
typedef struct idc_set idc_set;

typedef enum idc_status {
  IDC_OK = 0,
  IDC_BAD_PARAMS = 1,
  IDC_NOT_PRIME = 2,
  IDC_DEGREE_TOO_LARGE = 3,
  IDC_NO_IRREDUCIBLE_FOUND = 4,
  IDC_SPEC_MISMATCH = 5,
  IDC_DIVISION_BY_ZERO = 6,
  IDC_EVEN_CHARACTERISTIC = 7,
  IDC_ODD_CHARACTERISTIC = 8,
  IDC_ORDER_MISMATCH = 9,
  IDC_SIZE_GUARD = 10,
  IDC_EQUAL_POINTS = 11,
  IDC_NOT_ON_VARIETY = 12,
  IDC_BAD_VERTEX = 13,
  IDC_DISCONNECTED = 14,
  IDC_TWINS_PRESENT = 15,
  IDC_PROPERTY_VIOLATED = 16,
  IDC_INFEASIBLE = 17,
  IDC_BUDGET_EXCEEDED = 18,
  IDC_NOT_REGULAR = 19,
  IDC_NOT_CLAIMED_TRANSITIVE = 20,
  IDC_SRG_IDENTITY_VIOLATED = 21,
  IDC_CONSTRUCTION_FAILED = 22,
  IDC_PARSE = 23,
  IDC_IO = 24,
  IDC_INTERNAL = 25
} idc_status;

typedef enum idc_property {
  IDC_DOMINATING = 0,
  IDC_SEPARATING = 1,
  IDC_IDENTIFYING = 2,
  IDC_LOCATING_DOMINATING = 3,
  IDC_RESOLVING = 4
} idc_property;

const char* idc_status_name(idc_status s);
/* Message of the last failed call on this thread; "" if none. */
const char* idc_last_error(void);
void idc_string_free(char* s);

/* Worker threads for pairwise graph scans (results do not depend on it). */
void idc_set_threads(size_t n);

/* ---- graphs ---- */

/*
 * Families and their integer parameters:
 *   complete n | path n | cycle n r | hypercube l r | paley q | kneser m |
 *   johnson m | petersen | clique-cartesian p q | clique-direct p q |
 *   gq-t2star q | gq-parabolic q | gq-elliptic q | gq-hermitian q
 */
idc_status idc_graph_generate(const char* family, const long* params, size_t nparams, idc_graph** out);
/* kind: "cartesian", "direct" or "lexicographic". */
idc_status idc_graph_product(const char* kind, const idc_graph* g, const idc_graph* h, idc_graph** out);
/* edges holds m pairs (u, v) as 2m entries. */
idc_status idc_graph_from_edges(size_t n, const size_t* edges, size_t m, idc_graph** out);
/* Reads the graph text format; metadata from "<path>.json" is restored when present. */
idc_status idc_graph_read(const char* path, idc_graph** out);
idc_status idc_graph_parse(const char* text, idc_graph** out);
/* Writes the graph and, if with_metadata, the "<path>.json" sidecar. */
idc_status idc_graph_write(const idc_graph* g, const char* path, int with_metadata);
idc_status idc_graph_to_string(const idc_graph* g, char** out);
idc_status idc_graph_metadata_json(const idc_graph* g, char** out);
size_t idc_graph_num_vertices(const idc_graph* g);
size_t idc_graph_num_edges(const idc_graph* g);
int idc_graph_adjacent(const idc_graph* g, size_t u, size_t v);
idc_status idc_graph_min_symdiff(const idc_graph* g, size_t* out);
void idc_graph_free(idc_graph* g);

/* ---- vertex sets ---- */

idc_status idc_set_create(size_t n, const size_t* members, size_t count, idc_set** out);
/* First line of a set file (sorted ids separated by whitespace). */
idc_status idc_set_read(const char* path, size_t n, idc_set** out);
idc_status idc_set_write(const idc_set* s, const char* path);
size_t idc_set_size(const idc_set* s);
size_t idc_set_universe(const idc_set* s);
/* Copies up to cap sorted members into buf; *count receives the set size. */
idc_status idc_set_members(const idc_set* s, size_t* buf, size_t cap, size_t* count);
void idc_set_free(idc_set* s);

/* ---- codes ---- */

idc_status idc_property_parse(const char* name, idc_property* out);
/* *holds is 1 or 0. When it is 0 and witness is non-null, *witness receives
 * the lexicographically smallest failure as text ("undominated vertex 0",
 * "twins 0,1", "unseparated pair 2,5"). */
idc_status idc_verify(const idc_graph* g, const idc_set* s, idc_property p, int* holds, char** witness);
idc_status idc_prune(const idc_graph* g, const idc_set* s, idc_property p, idc_set** out);

/* Builds one of the quadrangle codes ("t2star", "parabolic", "elliptic",
 * "hermitian"). Any of the outputs may be null. */
idc_status idc_construct(const char* family, unsigned q, idc_graph** graph, idc_set** code, char** report_json);

/* ---- bounds and solvers ---- */

idc_status idc_bounds(const idc_graph* g, char** json);
/* Closed form (when it applies) and exact LP value. */
idc_status idc_frac(const idc_graph* g, char** json);
/* node_budget 0: library default (IDCODE_NODE_BUDGET or 10^8);
 * max_vertices 0: default guard of 64. */
idc_status idc_solve(const idc_graph* g, idc_property p, unsigned long long node_budget, size_t max_vertices,
                     idc_set** witness, char** json);
idc_status idc_table2(char** json);

#ifdef __cplusplus
}
#endif

#endif
