/* cdkit: coordinate descent toolkit with accelerated greedy, random and
 * semi-greedy variants, synthetic least squares instances with controlled
 * conditioning, convergence traces and diagnostic envelopes.
 *
 * All entry points return CDKIT_OK (0) on success or a CDKIT_ERR_* code;
 * cdkit_last_error() gives a human readable message for the most recent
 * failure on the calling thread.  Objects come back as opaque handles that
 * must be released with the matching *_free function.  Count/size getters
 * return -1 when the handle is NULL.  Handles are not synchronized;
 * sharing one across threads is only safe for concurrent reads (cdkit_run
 * does not mutate the problem handle).
 */
#ifndef CDKIT_H
#define CDKIT_H

#ifdef __cplusplus
extern "C" {
#endif

#define CDKIT_OK 0
#define CDKIT_ERR_INVALID 1    /* bad argument or argument combination */
#define CDKIT_ERR_DIMENSION 2  /* mismatched sizes */
#define CDKIT_ERR_PARSE 3      /* malformed input text */
#define CDKIT_ERR_IO 4         /* file system failure */
#define CDKIT_ERR_NUMERIC 5    /* NaN/Inf or a diverging run */
#define CDKIT_ERR_DEGENERATE 6 /* zero norm design column or similar */
#define CDKIT_ERR_VERSION 7    /* container version not supported */
#define CDKIT_ERR_INTERNAL 8   /* unexpected failure */

#define CDKIT_KIND_REGRESSION 0
#define CDKIT_KIND_CLASSIFICATION 1

#define CDKIT_ALGO_AGCD 0 /* greedy x-step and greedy z-step */
#define CDKIT_ALGO_ASCD 1 /* greedy x-step, one random z coordinate */
#define CDKIT_ALGO_ARCD 2 /* one random draw drives both steps */
#define CDKIT_ALGO_GCD 3  /* unaccelerated greedy baseline */

#define CDKIT_MODE_PLAIN 0  /* decaying theta schedule */
#define CDKIT_MODE_STRONG 1 /* constant parameters from an explicit mu */

typedef struct cdkit_dataset cdkit_dataset;
typedef struct cdkit_problem cdkit_problem;
typedef struct cdkit_trace cdkit_trace;
typedef struct cdkit_gamma cdkit_gamma;

const char* cdkit_version(void);

/* Message for the last failing call on this thread; never NULL. */
const char* cdkit_last_error(void);

/* ---- datasets ---------------------------------------------------- */

/* Synthetic least squares data: X is n_samples x dim with singular values
 * rescaled so cond(X^T X) = kappa exactly; pass INFINITY for a rank
 * deficient design (one zero singular value, the rest spread as for
 * kappa = 1e4).  y = X beta_star + sigma * noise.  Deterministic in seed. */
int cdkit_generate_regression(long long n_samples, long long dim,
                              double kappa, double sigma,
                              unsigned long long seed, cdkit_dataset** out);

/* LIBSVM classification text: "<label> <index>:<value> ...", 1-based
 * strictly increasing indices, '#' comment lines skipped.  Labels must be
 * -1/+1 (kept) or 0/1 (0 becomes -1).  Parse errors carry line numbers in
 * the error message. */
int cdkit_dataset_parse_libsvm(const char* path, cdkit_dataset** out);

/* Plain text container (header "cdkit-dataset v1 ...").  Save/load round
 * trips are bit exact. */
int cdkit_dataset_save(const cdkit_dataset* d, const char* path);
int cdkit_dataset_load(const char* path, cdkit_dataset** out);

void cdkit_dataset_free(cdkit_dataset* d);

long long cdkit_dataset_samples(const cdkit_dataset* d);
long long cdkit_dataset_dim(const cdkit_dataset* d);
int cdkit_dataset_kind(const cdkit_dataset* d);
int cdkit_dataset_is_sparse(const cdkit_dataset* d);

/* Extremal eigenvalues of X^T X; min_positive ignores eigenvalues below
 * 1e-10 * max. */
int cdkit_dataset_spectrum(const cdkit_dataset* d, double* min_eig,
                           double* max_eig, double* min_positive_eig);

/* ---- objectives --------------------------------------------------- */

/* f(beta) = ||y - X beta||^2.  Precomputes the Gram matrix. */
int cdkit_problem_least_squares(const cdkit_dataset* d, cdkit_problem** out);

/* f(beta) = (1/n) sum log(1 + exp(-y_i x_i^T beta)), labels in {-1,+1}. */
int cdkit_problem_logistic(const cdkit_dataset* d, cdkit_problem** out);

void cdkit_problem_free(cdkit_problem* p);

long long cdkit_problem_dim(const cdkit_problem* p);
long long cdkit_problem_samples(const cdkit_problem* p);
int cdkit_problem_value(const cdkit_problem* p, const double* beta,
                        double* out);
/* out must hold dim doubles. */
int cdkit_problem_gradient(const cdkit_problem* p, const double* beta,
                           double* out);
int cdkit_problem_smoothness(const cdkit_problem* p, double* out);

/* Strong convexity in the smoothness-weighted norm (least squares only).
 * smallest_positive = 1 skips the near-null eigenvalues of a rank
 * deficient design. */
int cdkit_problem_strong_convexity(const cdkit_problem* p,
                                   int smallest_positive, double* out);

/* sum_i L_i v_i^2 for a vector of length dim. */
int cdkit_problem_weighted_norm_sq(const cdkit_problem* p, const double* v,
                                   double* out);

/* High accuracy optimum: conjugate gradients on the Gram system for least
 * squares (minimum norm solution when rank deficient), a tiny-mu greedy
 * strongly convex run for logistic.  x_ref must hold dim doubles.
 * *low_confidence is set when the iteration cap was hit before the
 * residual target, or when the logistic data turned out linearly
 * separable (the optimum then sits at infinity). */
int cdkit_reference_solve(const cdkit_problem* p, double* f_ref,
                          double* x_ref, int* low_confidence);

/* ---- solver runs -------------------------------------------------- */

typedef struct cdkit_run_config {
  int algorithm; /* CDKIT_ALGO_* */
  int mode;      /* CDKIT_MODE_*; ignored for CDKIT_ALGO_GCD */
  double mu;     /* required in (0, 1] for strong mode */
  long long iters;
  unsigned long long seed;
  long long record_period;        /* >= 1 */
  int check_descent;              /* verify per-step sufficient decrease */
  long long cache_refresh_period; /* 0 means the default of 1000 */
} cdkit_run_config;

typedef struct cdkit_trace_record {
  long long k;
  double elapsed_s; /* cumulative step-loop wall clock */
  double f;
  double gap; /* f - f_ref, NaN without a reference */
  long long j1;
  long long j2;      /* -1 when there is no second sequence */
  double theta_or_a; /* step size parameter used by iteration k-1 */
  double gamma_num;  /* ratio summands of iteration k-1, NaN without x_ref */
  double gamma_den;
  double energy; /* potential at state k, NaN without a full reference */
} cdkit_trace_record;

/* Runs iters iterations from x0 (NULL means the origin).  Pass f_ref = NaN
 * and x_ref = NULL when no reference optimum is available; gaps, energies
 * and ratio summands then stay NaN.  State 0, every record_period-th state
 * and the final state are recorded. */
int cdkit_run(const cdkit_problem* p, const cdkit_run_config* cfg,
              const double* x0, double f_ref, const double* x_ref,
              cdkit_trace** out);

void cdkit_trace_free(cdkit_trace* t);
long long cdkit_trace_size(const cdkit_trace* t);
int cdkit_trace_record_at(const cdkit_trace* t, long long idx,
                          cdkit_trace_record* out);
long long cdkit_trace_descent_violations(const cdkit_trace* t);
/* Ratio summands accumulated over every iteration of the run. */
int cdkit_trace_gamma_totals(const cdkit_trace* t, double* num, double* den);
/* Header k,elapsed_s,f,gap,j1,j2,theta_or_a,gamma_num,gamma_den,energy;
 * %.17g floats, "nan" for missing values, LF line endings. */
int cdkit_trace_write_csv(const cdkit_trace* t, const char* path);

/* ---- diagnostics --------------------------------------------------- */

/* Ratio of the cumulative sums tested by the greedy guarantee, computed
 * from a dense trace (record_period 1) produced with a reference point.
 * gamma is the largest ratio at or beyond the burn-in k_bar;
 * sign_violations counts states there whose cumulative denominator is not
 * positive. */
int cdkit_gamma_estimate(const cdkit_trace* t, long long k_bar,
                         cdkit_gamma** out);
void cdkit_gamma_free(cdkit_gamma* g);
double cdkit_gamma_value(const cdkit_gamma* g);
long long cdkit_gamma_sign_violations(const cdkit_gamma* g);
long long cdkit_gamma_size(const cdkit_gamma* g);
int cdkit_gamma_point(const cdkit_gamma* g, long long idx, long long* k,
                      double* num_cum, double* den_cum, double* ratio);

/* Gap envelopes; r_sq is ||x* - x0||^2 in the smoothness-weighted norm. */
int cdkit_bound_plain(long long k, long long dim, double r_sq, double* out);
/* gamma must lie in (0, 1]; larger values are outside the guarantee and
 * are rejected with CDKIT_ERR_INVALID. */
int cdkit_bound_agcd(long long k, long long dim, double gamma, double r_sq,
                     double* out);
int cdkit_bound_strong(long long k, double a, double initial_energy,
                       double* out);

/* Constants of the strongly convex mode: a = sqrt(mu)/(dim + sqrt(mu)),
 * b = mu a / dim^2. */
int cdkit_strong_params(double mu, long long dim, double* a, double* b);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CDKIT_H */
