/* C interface to the partition-function library.
 *
 * Every function returns a pf_status; results come back through out
 * parameters.  Strings returned through char** are NUL-terminated JSON or
 * CSV documents owned by the caller; release them with pf_string_free.
 * Graph handles are opaque; release with pf_graph_free.  On any status
 * other than PF_OK, pf_last_error() describes the failure for the calling
 * thread.  Exception: pf_verify writes its verdict document even when it
 * returns PF_THEOREM_FAIL.
 *
 * Numbers that must stay exact are passed as strings: "3/4", "2", "0.25".
 */

#ifndef PARTFN_H
#define PARTFN_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  PF_OK = 0,
  PF_THEOREM_FAIL = 1, /* a theorem-backed verification found a violation */
  PF_USAGE = 2,        /* bad arguments or preconditions */
  PF_CAPACITY = 3,     /* instance beyond the built-in size guards */
  PF_INTERNAL = 4
} pf_status;

typedef struct pf_graph pf_graph;

pf_status pf_graph_named(const char* name, pf_graph** out);
pf_status pf_graph_from_graph6(const char* g6, pf_graph** out);
pf_status pf_graph_from_json(const char* text, pf_graph** out);
pf_status pf_graph_to_json(const pf_graph* g, char** out);
void pf_graph_free(pf_graph* g);

void pf_string_free(char* s);
const char* pf_last_error(void);

/* coefficient vector of the partition function; kind is "match", "ind" or
 * "potts" (potts needs q >= 2) */
pf_status pf_coeffs(const pf_graph* g, const char* kind, int q, char** out);

/* mean size, occupancy fraction, size distribution, free volumes and the
 * lambda/(1+lambda) bound check at one fugacity */
pf_status pf_observables(const pf_graph* g, const char* kind, int q,
                         const char* lambda, int with_float, char** out);

/* distribution of local views around a uniformly random edge / vertex */
pf_status pf_local_views(const pf_graph* g, const char* kind, int q,
                         const char* lambda, int with_float, char** out);

/* fugacity bracketing the requested mean configuration size */
pf_status pf_tune(const pf_graph* g, const char* kind, int q,
                  const char* target_mean, char** out);

/* truncated neighborhood-sampling distance with certified tail */
pf_status pf_sampling_distance(const pf_graph* g, const pf_graph* h, int r_max,
                               int with_float, char** out);

/* fraction of vertices outside complete-bipartite K_{d,d} components */
pf_status pf_fraction_outside(const pf_graph* g, int d, char** out);

/* occupancy linear program over local views: primal, dual certificate,
 * tightness against K_{d,d}, optional stability constants */
pf_status pf_lp(int d, const char* kind, const char* lambda,
                int with_stability, int with_float, char** out);
pf_status pf_lp_text(int d, const char* kind, const char* lambda, char** out);

/* occupancy gap inequality for one graph; holds gets 0 or 1 */
pf_status pf_stability_check(const pf_graph* g, int d, const char* kind,
                             const char* lambda, int* holds);

/* dominance report between two coefficient vectors given as JSON
 * {"coeffs": ["1", "5", "2"]}; includes the implication-lattice check and
 * the difference-polynomial coefficients */
pf_status pf_dominance(const char* zg_json, const char* zh_json, char** out);

/* independent-set count minimality against disjoint (d+1)-cliques */
pf_status pf_cutler_radcliffe(const pf_graph* g, int d, int* holds);

/* exact distribution of a sum of K independent copies of the size
 * distribution of g at the given fugacity */
pf_status pf_convolution(const pf_graph* g, const char* kind, int q,
                         const char* lambda, int K, int with_float,
                         char** out);

/* comparison of the convolved distribution against the matching Gaussian;
 * csv_out may be NULL */
pf_status pf_gnedenko(const pf_graph* g, const char* kind, int q,
                      const char* lambda, int K, char** json_out,
                      char** csv_out);

/* sandwich (1-delta) a_{k-r} <= lambda^r a_k <= (1+delta) a_{k-r} on the
 * disjoint-block graph H_{d,n} with lambda tuned to mean k */
pf_status pf_ratio_check(int d, int n, int k, int r_max, const char* delta,
                         const char* kind, int q, char** out);

/* finite-parameter evaluation of one case of the coefficient transfer
 * argument; audit_case is "small1", "small2" or "large"; n1_threshold < 0
 * uses the size of gprime */
pf_status pf_audit(const pf_graph* gprime, int d, int n, int k,
                   const char* audit_case, const char* kind, int q,
                   const char* delta, const char* delta_prime,
                   int n1_threshold, int with_float, char** out);

/* exhaustive verification harness; statement is "coefficient",
 * "partition", "girth5" or "bregman".  k_max < 0 means the full range,
 * grid_csv NULL means the default fugacity grid, only may pin a single
 * graph6 string, jobs <= 0 uses all cores. */
pf_status pf_verify(const char* statement, int d, int n, const char* kind,
                    int q, int k_max, const char* grid_csv, const char* only,
                    int jobs, char** out);

#ifdef __cplusplus
}
#endif

#endif /* PARTFN_H */
