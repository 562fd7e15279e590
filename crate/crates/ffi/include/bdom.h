#ifndef BDOM_H
#define BDOM_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes. Zero is success.
 */
typedef enum BdomStatus {
  BDOM_STATUS_OK = 0,
  BDOM_STATUS_NULL_POINTER = 1,
  BDOM_STATUS_INVALID_UTF8 = 2,
  BDOM_STATUS_INVALID_JSON = 3,
  BDOM_STATUS_INVALID_ARGUMENT = 4,
  BDOM_STATUS_HYPOTHESIS_VIOLATED = 5,
  BDOM_STATUS_UNSUPPORTED = 6,
  BDOM_STATUS_BUDGET_EXHAUSTED = 7,
  BDOM_STATUS_INFEASIBLE = 8,
  BDOM_STATUS_TOO_LARGE = 9,
  BDOM_STATUS_PANIC = 10,
} BdomStatus;

/**
 * Opaque graph handle.
 */
typedef struct BdomGraph BdomGraph;

/**
 * Opaque solver result handle.
 */
typedef struct BdomSolution BdomSolution;

/**
 * Summary of a verification run.
 */
typedef struct BdomReport {
  bool dominated;
  bool efficient;
  uint32_t min_reception;
  size_t deficient_count;
  size_t overlap_count;
  uint64_t wasted_signal;
  uint64_t total_excess;
} BdomReport;

/**
 * Message for the last failed call on this thread, or null. Owned by the
 * library and valid until the next call on the same thread.
 */
const char *bdom_last_error(void);

/**
 * Releases a string returned by this library. Null is ignored.
 */
void bdom_string_free(char *s);

/**
 * Builds a graph from JSON such as `{"family":"grid","m":3,"n":5}`.
 */
enum BdomStatus bdom_graph_from_json(const char *json, struct BdomGraph **out);

void bdom_graph_free(struct BdomGraph *g);

enum BdomStatus bdom_graph_vertex_count(const struct BdomGraph *g, size_t *out);

/**
 * Vertex label as JSON: a bare integer for index-labelled families, an array otherwise.
 */
enum BdomStatus bdom_graph_vertex_json(const struct BdomGraph *g, size_t index, char **out);

enum BdomStatus bdom_graph_distance(const struct BdomGraph *g, size_t u, size_t v, uint32_t *out);

/**
 * Reception check for `len` towers given by dense index.
 */
enum BdomStatus bdom_verify(const struct BdomGraph *g,
                            uint32_t t,
                            uint32_t r,
                            const size_t *towers,
                            size_t len,
                            struct BdomReport *out);

/**
 * Verifies a placement plan (as printed by `bdom construct --json`) and
 * writes the full report as JSON.
 */
enum BdomStatus bdom_verify_plan_json(const char *plan, char **out);

/**
 * Exact solver. `node_budget` of 0 means unlimited. On
 * `BudgetExhausted` the handle still holds the best set found, with
 * `proven_minimal` false.
 */
enum BdomStatus bdom_solve(const struct BdomGraph *g,
                           uint32_t t,
                           uint32_t r,
                           uint64_t node_budget,
                           size_t threads,
                           struct BdomSolution **out);

/**
 * Plain subset enumeration, for graphs of at most 16 vertices.
 */
enum BdomStatus bdom_solve_naive(const struct BdomGraph *g,
                                 uint32_t t,
                                 uint32_t r,
                                 struct BdomSolution **out);

void bdom_solution_free(struct BdomSolution *s);

enum BdomStatus bdom_solution_gamma(const struct BdomSolution *s, uint32_t *out);

enum BdomStatus bdom_solution_proven(const struct BdomSolution *s, bool *out);

/**
 * Copies up to `cap` witness tower indices (w.r.t. `g`) into `buf` and
 * writes the full witness size to `len`. Pass `cap` 0 to query the size.
 */
enum BdomStatus bdom_solution_witness(const struct BdomSolution *s,
                                      const struct BdomGraph *g,
                                      size_t *buf,
                                      size_t cap,
                                      size_t *len);

enum BdomStatus bdom_solution_json(const struct BdomSolution *s, char **out);

enum BdomStatus bdom_path_gamma(uint32_t n, uint32_t t, uint32_t r, uint64_t *out);

enum BdomStatus bdom_cycle_upper_bound(uint32_t n, uint32_t t, uint32_t r, uint64_t *out);

enum BdomStatus bdom_grid_gamma(uint32_t m, uint32_t n, uint32_t t, uint32_t r, uint64_t *out);

enum BdomStatus bdom_grid3d_2_2_k_gamma(uint32_t k, uint32_t t, uint32_t r, uint64_t *out);

enum BdomStatus bdom_king_gamma(uint32_t m, uint32_t n, uint32_t t, uint32_t r, uint64_t *out);

enum BdomStatus bdom_slant_gamma_2xn(uint32_t n, uint32_t t, uint32_t r, uint64_t *out);

enum BdomStatus bdom_slant_upper_bound(uint32_t m,
                                       uint32_t n,
                                       uint32_t t,
                                       uint32_t r,
                                       uint64_t *out);

#endif  /* BDOM_H */
