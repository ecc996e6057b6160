/* lorpath C API: robust path search over scenario-valued graphs.
 *
 * All functions return LORPATH_OK (0) on success or a nonzero status; a
 * human-readable message for the calling thread's last failure is available
 * via lorpath_last_error(). Handles are opaque; free them with the matching
 * *_free function. A graph handle is immutable after creation and may be
 * shared across threads; reports and error messages are per call/thread.
 */
#ifndef LORPATH_H
#define LORPATH_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct lorpath_graph lorpath_graph;
typedef struct lorpath_report lorpath_report;

/* Status values double as CLI exit codes. */
typedef enum {
  LORPATH_OK = 0,
  LORPATH_ERR_ARGUMENT = 2, /* bad parameter / flag combination */
  LORPATH_ERR_GRAPH = 3,    /* malformed or structurally invalid graph */
  LORPATH_ERR_WEIGHTS = 4,  /* ordered-weight validation failure */
  LORPATH_ERR_LIMIT = 5,    /* enumeration cap exceeded */
  LORPATH_ERR_IO = 6,       /* file not readable/writable */
  LORPATH_ERR_INTERNAL = 10
} lorpath_status;

const char* lorpath_status_name(lorpath_status status);
const char* lorpath_last_error(void);

/* ---- graph lifecycle ---------------------------------------------------- */

/* Parses the JSON graph schema (see README). Parsing is syntactic; structural
 * problems surface from lorpath_graph_validate or from the run functions. */
lorpath_status lorpath_graph_from_json(const char* json_text, lorpath_graph** out);
lorpath_status lorpath_graph_from_file(const char* path, lorpath_graph** out);

/* Canonical serialization; free the string with lorpath_string_free. */
lorpath_status lorpath_graph_to_json(const lorpath_graph* graph, char** json_out);

/* Report: {"ok":..,"violations":[..],"strictly_positive":..,"is_dag":..} */
lorpath_status lorpath_graph_validate(const lorpath_graph* graph, lorpath_report** out);

int lorpath_graph_scenarios(const lorpath_graph* graph);
size_t lorpath_graph_nodes(const lorpath_graph* graph);
size_t lorpath_graph_arcs(const lorpath_graph* graph);
void lorpath_graph_free(lorpath_graph* graph);

/* ---- instance generators ------------------------------------------------ */

lorpath_status lorpath_generate_figure1(lorpath_graph** out);
lorpath_status lorpath_generate_hansen(int p, lorpath_graph** out);
lorpath_status lorpath_generate_antilorenz(int p, lorpath_graph** out);

/* target_out (length 2) receives the half-sum target; sizes are doubled
 * internally when their sum is odd. */
lorpath_status lorpath_generate_partition(const int64_t* sizes, size_t count, int64_t target_out[2],
                                          lorpath_graph** out);

lorpath_status lorpath_generate_random(int nodes, double density, int cost_min, int cost_max,
                                       int scenarios, uint64_t seed, lorpath_graph** out);

/* ---- runs --------------------------------------------------------------- */

/* mode: "lorenz" | "owa" | "pareto"; heuristic: "zero" | "arc" | "ideal".
 * For mode "owa" exactly one of phi_csv / weights_csv must be non-NULL
 * (comma-separated decimals, e.g. "0.9,1.0"); for other modes both must be
 * NULL. trace != 0 adds the expanded-label rows and the prune log. */
lorpath_status lorpath_search(const lorpath_graph* graph, const char* mode, const char* heuristic,
                              const char* phi_csv, const char* weights_csv, int trace,
                              lorpath_report** out);

/* mode: "paths" | "pareto" | "lorenz" | "owa" | "decide". target_csv is
 * required for "decide" unless the graph metadata carries a target.
 * max_paths = 0 selects the default cap (1,000,000). */
lorpath_status lorpath_oracle(const lorpath_graph* graph, const char* mode, const char* target_csv,
                              const char* phi_csv, const char* weights_csv, uint64_t max_paths,
                              lorpath_report** out);

/* mode: "lorenz" | "owa". *agree_out becomes 1 when the search frontier (or
 * OWA value) matches the exhaustive oracle. */
lorpath_status lorpath_compare(const lorpath_graph* graph, const char* mode, const char* heuristic,
                               const char* phi_csv, const char* weights_csv, uint64_t max_paths,
                               int* agree_out, lorpath_report** out);

/* target may be NULL/0-length to use the graph metadata target. */
lorpath_status lorpath_decide(const lorpath_graph* graph, const int64_t* target, size_t target_len,
                              uint64_t max_paths, int* exists_out, lorpath_report** out);

/* Verdicts for x relative to y. lex: -1 x precedes, 0 equal, 1 y precedes. */
typedef struct {
  int weak_pareto;
  int pareto;
  int weak_lorenz;
  int strict_lorenz;
  int lex;
  int sum_bound;
} lorpath_dominance_result;

lorpath_status lorpath_dominance(const int64_t* x, size_t x_len, const int64_t* y, size_t y_len,
                                 lorpath_dominance_result* out);

/* ---- reports ------------------------------------------------------------ */

const char* lorpath_report_json(const lorpath_report* report);
void lorpath_report_free(lorpath_report* report);
void lorpath_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* LORPATH_H */
