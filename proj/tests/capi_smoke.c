/* Compiled as C99: proves the public header needs nothing from C++. */
#include <cdkit.h>

#include <math.h>
#include <stddef.h>

int capi_smoke(void) {
  cdkit_dataset* ds = NULL;
  cdkit_problem* p = NULL;
  cdkit_trace* t = NULL;
  int rc = cdkit_generate_regression(30, 10, 50.0, 0.5, 7, &ds);
  if (rc != CDKIT_OK) return 1;
  rc = cdkit_problem_least_squares(ds, &p);
  if (rc != CDKIT_OK) return 2;

  cdkit_run_config cfg;
  cfg.algorithm = CDKIT_ALGO_ARCD;
  cfg.mode = CDKIT_MODE_PLAIN;
  cfg.mu = 0.0;
  cfg.iters = 50;
  cfg.seed = 3;
  cfg.record_period = 10;
  cfg.check_descent = 1;
  cfg.cache_refresh_period = 0;
  rc = cdkit_run(p, &cfg, NULL, NAN, NULL, &t);
  if (rc != CDKIT_OK) return 3;
  if (cdkit_trace_size(t) != 6) return 4;

  cdkit_trace_record first, last;
  if (cdkit_trace_record_at(t, 0, &first) != CDKIT_OK) return 5;
  if (cdkit_trace_record_at(t, 5, &last) != CDKIT_OK) return 6;
  if (!(last.f < first.f)) return 7;
  if (cdkit_trace_descent_violations(t) != 0) return 8;

  cdkit_trace_free(t);
  cdkit_problem_free(p);
  cdkit_dataset_free(ds);
  return 0;
}
