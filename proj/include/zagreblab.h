/* zagreblab.h - C API for the zagreb-lab shared library.
 *
 * The library generates random non-plane and plane recursive trees, computes
 * generalized Zagreb indices, solves the exact moment recurrences, evaluates
 * the limit constants and limit moment tables, and runs Monte Carlo
 * verification of the limit laws.
 *
 * All objects are opaque handles created by zg_*_compute/new functions and
 * released by the matching zg_*_free. Functions return zg_status; on error a
 * human-readable message is available via zg_last_error(). Arbitrary-precision
 * values cross the boundary as decimal strings owned by the caller (release
 * with zg_string_free).
 */
#ifndef ZAGREBLAB_H
#define ZAGREBLAB_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define ZAGREBLAB_VERSION "1.0.0"

typedef enum {
  ZG_OK = 0,
  ZG_ERR_INVALID = 1,  /* bad argument / contract violation */
  ZG_ERR_RESOURCE = 2, /* size or support limit exceeded */
  ZG_ERR_IO = 3,       /* file read/write failure */
  ZG_ERR_INTERNAL = 4
} zg_status;

typedef enum { ZG_NONPLANE = 0, ZG_PLANE = 1 } zg_model;

/* Thread-local message for the most recent failing call in this thread. */
const char* zg_last_error(void);
void zg_string_free(char* s);
const char* zg_version(void);

/* ---------------- trees ---------------- */

typedef struct zg_tree zg_tree;

zg_status zg_tree_generate(zg_model model, int64_t n, uint64_t seed,
                           zg_tree** out);
void zg_tree_free(zg_tree* t);
int64_t zg_tree_size(const zg_tree* t);
int64_t zg_tree_parent(const zg_tree* t, int64_t v); /* v in 2..n */
int64_t zg_tree_degree(const zg_tree* t, int64_t v); /* total degree */
int64_t zg_tree_root_degree(const zg_tree* t);
zg_status zg_tree_leftmost_subtree_size(const zg_tree* t, int64_t* out);
/* Sum of k-th powers of the degrees, as a decimal string. form: 0 = vertex
 * sum, 1 = edge sum (must agree). */
zg_status zg_tree_zagreb(const zg_tree* t, int k, int form, char** out);
/* One line per node v = 2..n: "v<TAB>parent<TAB>child-rank" (1-based rank). */
zg_status zg_tree_write_dump(const zg_tree* t, const char* path);
zg_status zg_tree_read_dump(const char* path, zg_model model, zg_tree** out);

/* (n-1)! non-plane, (2n-3)!! plane trees of size n, as a decimal string. */
zg_status zg_count_trees(zg_model model, int64_t n, char** out);

/* ---------------- exact engine ---------------- */

typedef struct zg_split_law zg_split_law;

zg_status zg_split_law_compute(zg_model model, int64_t n, zg_split_law** out);
void zg_split_law_free(zg_split_law* s);
int64_t zg_split_law_size(const zg_split_law* s); /* n */
/* weight pi_{n,j}, 1 <= j <= n-1, as numerator/denominator strings */
zg_status zg_split_law_weight(const zg_split_law* s, int64_t j, char** num,
                              char** den);
zg_status zg_split_law_write_csv(const zg_split_law* s, const char* path);

typedef struct zg_joint_pmf zg_joint_pmf;

zg_status zg_joint_pmf_compute(zg_model model, int k, int64_t n,
                               zg_joint_pmf** out);
void zg_joint_pmf_free(zg_joint_pmf* p);
int64_t zg_joint_pmf_entries(const zg_joint_pmf* p);
zg_status zg_joint_pmf_entry(const zg_joint_pmf* p, int64_t index, int64_t* z,
                             int64_t* d, char** num, char** den);
/* exact mixed moment E(Z^i R^l) */
zg_status zg_joint_pmf_moment(const zg_joint_pmf* p, int i, int l, char** num,
                              char** den);
zg_status zg_joint_pmf_write_csv(const zg_joint_pmf* p, const char* path);

typedef struct zg_moment_table zg_moment_table;

/* E(Z_n^i R_n^l) for 1 <= n <= N and k*i + l <= W. kind: 0 exact rational,
 * 1 extended-precision float. */
zg_status zg_moment_table_compute(zg_model model, int k, int64_t N, int W,
                                  int kind, zg_moment_table** out);
void zg_moment_table_free(zg_moment_table* m);
zg_status zg_moment_table_get(const zg_moment_table* m, int64_t n, int i,
                              int l, char** num, char** den);
zg_status zg_moment_table_get_d(const zg_moment_table* m, int64_t n, int i,
                                int l, double* out);
/* E((Z_n - E Z_n)^r) */
zg_status zg_moment_table_central(const zg_moment_table* m, int64_t n, int r,
                                  char** num, char** den);
zg_status zg_moment_table_write_csv(const zg_moment_table* m,
                                    const char* path);

typedef struct zg_enumeration zg_enumeration;

/* Exhaustive enumeration of attachment histories, n <= 9. */
zg_status zg_enumeration_compute(zg_model model, int k, int64_t n,
                                 zg_enumeration** out);
void zg_enumeration_free(zg_enumeration* e);
zg_status zg_enumeration_histories(const zg_enumeration* e, char** out);
zg_status zg_enumeration_pmf(const zg_enumeration* e, zg_joint_pmf** out);

/* closed forms (exact rationals as strings) */
zg_status zg_harmonic(int64_t n, char** num, char** den);
zg_status zg_catalan(int64_t n, char** out);
zg_status zg_plane_mean_rootdeg(int64_t n, char** num, char** den);
zg_status zg_plane_mean_z2(int64_t n, char** num, char** den);

/* ---------------- asymptotics ---------------- */

double zg_log_gamma(double x);
double zg_digamma(double x);

typedef struct zg_gtable zg_gtable;

zg_status zg_gtable_compute(int k, int r_max, int s_max, zg_gtable** out);
void zg_gtable_free(zg_gtable* g);
zg_status zg_gtable_log_get(const zg_gtable* g, int r, int s, double* out);
zg_status zg_gtable_write_csv(const zg_gtable* g, const char* path);

typedef struct zg_constants zg_constants;

/* mu_k and var_k = lim Var(Z_n)/n by series evaluation truncated at J,
 * with Richardson-style error estimates. */
zg_status zg_constants_compute(int k, int64_t J, zg_constants** out);
void zg_constants_free(zg_constants* c);
double zg_constants_mu(const zg_constants* c);
double zg_constants_mu_err(const zg_constants* c);
double zg_constants_var(const zg_constants* c);
double zg_constants_var_err(const zg_constants* c);
double zg_constants_min_toll(const zg_constants* c);
zg_status zg_constants_write_json(const zg_constants* c, const char* path);

/* NonPlane: mu_k n; Plane k=2: 2n log n + (4 log 2 + 2 gamma - 2) n;
 * Plane k>=3: 2 k! sqrt(pi) / ((k-2) Gamma((k-1)/2)) n^{k/2}. */
zg_status zg_predicted_mean(zg_model model, int k, int64_t n,
                            const zg_constants* c_or_null, double* out);

typedef enum {
  ZG_TR_NP_ONE_SIDED = 0,
  ZG_TR_NP_TWO_SIDED_I = 1,
  ZG_TR_NP_TWO_SIDED_II = 2,
  ZG_TR_P_ONE_SIDED = 3,
  ZG_TR_P_TWO_SIDED_I = 4,
  ZG_TR_P_TWO_SIDED_II = 5
} zg_transfer_lemma;

typedef struct {
  double a_n;       /* numeric solution at N */
  double predicted; /* predicted asymptotic at N (0 if no constant is known) */
  double ratio;     /* a_n / predicted, or a_n / (c n^alpha) when predicted=0 */
  double rel_gap;   /* |ratio - 1| when predicted != 0 */
} zg_transfer_result;

zg_status zg_transfer_check(zg_transfer_lemma lemma, double c, double alpha,
                            int64_t N, zg_transfer_result* out);

/* ---------------- generic check reports ---------------- */

typedef struct zg_report zg_report;

void zg_report_free(zg_report* r);
int64_t zg_report_size(const zg_report* r);
const char* zg_report_name(const zg_report* r, int64_t i);
int zg_report_passed(const zg_report* r, int64_t i); /* 1/0 */
const char* zg_report_detail(const zg_report* r, int64_t i);
int zg_report_all_passed(const zg_report* r);
zg_status zg_report_write_json(const zg_report* r, const char* path);

zg_status zg_gtable_consistency_check(const zg_gtable* g, zg_report** out);
zg_status zg_gtable_carleman(const zg_gtable* g, int R, zg_report** out);
/* Smallest A in [1+step, A_max] grid with
 * log g_{r,s} <= (kr+s) log A + 0.5 log (kr+s)! for all entries. */
zg_status zg_gtable_appendix_bound(const zg_gtable* g, double A_max,
                                   double step, double* A_out,
                                   zg_report** out);

/* ---------------- monte carlo ---------------- */

typedef struct {
  zg_model model;
  int k;
  const int64_t* sizes;
  int n_sizes;
  int64_t replicates;
  uint64_t seed;
  int workers;         /* <= 0: hardware default */
  int z_order;         /* raw moment orders of Z/n^{k/2}; <=0 -> 4, max 4 */
  int r_order;         /* raw moment orders of R/sqrt(n); <=0 -> 4, max 4 */
  double hist_lo, hist_hi;
  int hist_bins;       /* 0: no histogram (of Z/n^{k/2}) */
} zg_sim_spec;

typedef struct zg_sim_summary zg_sim_summary;

zg_status zg_simulate(const zg_sim_spec* spec, zg_sim_summary** out);
void zg_sim_summary_free(zg_sim_summary* s);
int zg_sim_summary_sizes(const zg_sim_summary* s);
int64_t zg_sim_summary_n(const zg_sim_summary* s, int i);
/* stat: "z_mean","z_var","z_skew","z_kurt","r_mean","r_var",
 * "zn_moment" (order 1..z_order), "rn_moment" (order 1..r_order). */
zg_status zg_sim_summary_stat(const zg_sim_summary* s, int i, const char* stat,
                              int order, double* value, double* stderr_out);
zg_status zg_sim_summary_write_json(const zg_sim_summary* s, const char* path);
zg_status zg_sim_summary_write_csv(const zg_sim_summary* s, const char* path);
zg_status zg_sim_summary_write_hist_csv(const zg_sim_summary* s, int i,
                                        const char* path);

zg_status zg_clt_check(const zg_sim_summary* s, const zg_constants* c,
                       zg_report** out);
zg_status zg_plane_limit_check(const zg_sim_summary* s, const zg_gtable* g,
                               zg_report** out);
zg_status zg_empirical_split_check(zg_model model, int64_t n,
                                   int64_t replicates, uint64_t seed,
                                   double* chi2, double* pvalue,
                                   zg_report** out);

/* ---------------- verification suites ---------------- */

/* suite: "oracle" | "transfer" | "clt" | "plane-limit" | "closed-forms" |
 * "appendix". n_max only applies to "oracle" (default 7). */
zg_status zg_verify(const char* suite, int64_t n_max, uint64_t seed,
                    int workers, zg_report** out);

/* FNV-1a 64-bit content digest of a file, as 16 hex chars. */
zg_status zg_file_digest(const char* path, char** hex_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* ZAGREBLAB_H */
