#include "cdkit.h"

#include <cmath>
#include <cstring>
#include <memory>
#include <string>

#include "dataset.hpp"
#include "diagnostics.hpp"
#include "errors.hpp"
#include "least_squares.hpp"
#include "logistic.hpp"
#include "numerics.hpp"
#include "solver.hpp"
#include "trace.hpp"

struct cdkit_dataset {
  cdkit::Dataset d;
};

struct cdkit_problem {
  std::unique_ptr<cdkit::Problem> p;
};

struct cdkit_trace {
  cdkit::Trace t;
};

struct cdkit_gamma {
  cdkit::GammaEstimate g;
};

namespace {

thread_local std::string g_last_error;

int map_errc(cdkit::Errc c) {
  switch (c) {
    case cdkit::Errc::invalid_argument:
      return CDKIT_ERR_INVALID;
    case cdkit::Errc::dimension_mismatch:
      return CDKIT_ERR_DIMENSION;
    case cdkit::Errc::parse:
      return CDKIT_ERR_PARSE;
    case cdkit::Errc::io:
      return CDKIT_ERR_IO;
    case cdkit::Errc::numeric:
      return CDKIT_ERR_NUMERIC;
    case cdkit::Errc::degenerate:
      return CDKIT_ERR_DEGENERATE;
    case cdkit::Errc::version:
      return CDKIT_ERR_VERSION;
  }
  return CDKIT_ERR_INTERNAL;
}

template <typename F>
int guarded(F&& f) {
  try {
    f();
    return CDKIT_OK;
  } catch (const cdkit::Error& e) {
    g_last_error = e.what();
    return map_errc(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CDKIT_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return CDKIT_ERR_INTERNAL;
  }
}

int bad_arg(const char* msg) {
  g_last_error = msg;
  return CDKIT_ERR_INVALID;
}

}  // namespace

extern "C" {

const char* cdkit_version(void) { return "1.0.0"; }

const char* cdkit_last_error(void) { return g_last_error.c_str(); }

/* ---- datasets ---------------------------------------------------- */

int cdkit_generate_regression(long long n_samples, long long dim,
                              double kappa, double sigma,
                              unsigned long long seed, cdkit_dataset** out) {
  if (!out) return bad_arg("out is NULL");
  return guarded([&] {
    cdkit::SyntheticSpec spec;
    spec.n_samples = static_cast<long>(n_samples);
    spec.dim = static_cast<long>(dim);
    spec.kappa = kappa;
    spec.sigma = sigma;
    spec.seed = seed;
    *out = new cdkit_dataset{cdkit::generate_linear_regression(spec)};
  });
}

int cdkit_dataset_parse_libsvm(const char* path, cdkit_dataset** out) {
  if (!out || !path) return bad_arg("path/out is NULL");
  return guarded([&] { *out = new cdkit_dataset{cdkit::parse_libsvm_file(path)}; });
}

int cdkit_dataset_save(const cdkit_dataset* d, const char* path) {
  if (!d || !path) return bad_arg("dataset/path is NULL");
  return guarded([&] { cdkit::save_dataset_file(d->d, path); });
}

int cdkit_dataset_load(const char* path, cdkit_dataset** out) {
  if (!out || !path) return bad_arg("path/out is NULL");
  return guarded([&] { *out = new cdkit_dataset{cdkit::load_dataset_file(path)}; });
}

void cdkit_dataset_free(cdkit_dataset* d) { delete d; }

long long cdkit_dataset_samples(const cdkit_dataset* d) {
  return d ? d->d.samples() : -1;
}

long long cdkit_dataset_dim(const cdkit_dataset* d) {
  return d ? d->d.dim() : -1;
}

int cdkit_dataset_kind(const cdkit_dataset* d) {
  if (!d) return -1;
  return d->d.kind == cdkit::DatasetKind::Regression ? CDKIT_KIND_REGRESSION
                                                     : CDKIT_KIND_CLASSIFICATION;
}

int cdkit_dataset_is_sparse(const cdkit_dataset* d) {
  return d ? (d->d.sparse ? 1 : 0) : -1;
}

int cdkit_dataset_spectrum(const cdkit_dataset* d, double* min_eig,
                           double* max_eig, double* min_positive_eig) {
  if (!d || !min_eig || !max_eig || !min_positive_eig)
    return bad_arg("NULL argument");
  return guarded([&] {
    cdkit::GramSpectrum s = cdkit::gram_spectrum(d->d);
    *min_eig = s.min_eig;
    *max_eig = s.max_eig;
    *min_positive_eig = s.min_positive_eig;
  });
}

/* ---- objectives --------------------------------------------------- */

int cdkit_problem_least_squares(const cdkit_dataset* d, cdkit_problem** out) {
  if (!d || !out) return bad_arg("dataset/out is NULL");
  return guarded([&] {
    *out = new cdkit_problem{std::make_unique<cdkit::LeastSquaresProblem>(
        cdkit::LeastSquaresProblem::from_dataset(d->d))};
  });
}

int cdkit_problem_logistic(const cdkit_dataset* d, cdkit_problem** out) {
  if (!d || !out) return bad_arg("dataset/out is NULL");
  return guarded([&] {
    *out = new cdkit_problem{std::make_unique<cdkit::LogisticProblem>(
        cdkit::LogisticProblem::from_dataset(d->d))};
  });
}

void cdkit_problem_free(cdkit_problem* p) { delete p; }

long long cdkit_problem_dim(const cdkit_problem* p) {
  return p ? p->p->dim() : -1;
}

long long cdkit_problem_samples(const cdkit_problem* p) {
  return p ? p->p->samples() : -1;
}

int cdkit_problem_value(const cdkit_problem* p, const double* beta,
                        double* out) {
  if (!p || !beta || !out) return bad_arg("NULL argument");
  return guarded([&] {
    Eigen::Map<const Eigen::VectorXd> b(beta, p->p->dim());
    *out = p->p->value(b);
  });
}

int cdkit_problem_gradient(const cdkit_problem* p, const double* beta,
                           double* out) {
  if (!p || !beta || !out) return bad_arg("NULL argument");
  return guarded([&] {
    Eigen::Map<const Eigen::VectorXd> b(beta, p->p->dim());
    Eigen::VectorXd g = p->p->gradient(b);
    std::memcpy(out, g.data(), sizeof(double) * g.size());
  });
}

int cdkit_problem_smoothness(const cdkit_problem* p, double* out) {
  if (!p || !out) return bad_arg("NULL argument");
  return guarded([&] {
    const Eigen::VectorXd& l = p->p->smoothness().values();
    std::memcpy(out, l.data(), sizeof(double) * l.size());
  });
}

int cdkit_problem_strong_convexity(const cdkit_problem* p,
                                   int smallest_positive, double* out) {
  if (!p || !out) return bad_arg("NULL argument");
  return guarded([&] {
    *out = p->p->strong_convexity(smallest_positive
                                      ? cdkit::StrongMode::SmallestPositive
                                      : cdkit::StrongMode::Exact);
  });
}

int cdkit_problem_weighted_norm_sq(const cdkit_problem* p, const double* v,
                                   double* out) {
  if (!p || !v || !out) return bad_arg("NULL argument");
  return guarded([&] {
    Eigen::Map<const Eigen::VectorXd> vec(v, p->p->dim());
    *out = cdkit::weighted_norm_sq(vec, p->p->smoothness());
  });
}

int cdkit_reference_solve(const cdkit_problem* p, double* f_ref,
                          double* x_ref, int* low_confidence) {
  if (!p || !f_ref || !x_ref || !low_confidence)
    return bad_arg("NULL argument");
  return guarded([&] {
    cdkit::Reference ref = cdkit::reference_solve(*p->p);
    *f_ref = ref.f_ref;
    std::memcpy(x_ref, ref.x_ref.data(), sizeof(double) * ref.x_ref.size());
    *low_confidence = ref.low_confidence ? 1 : 0;
  });
}

/* ---- solver runs -------------------------------------------------- */

int cdkit_run(const cdkit_problem* p, const cdkit_run_config* cfg,
              const double* x0, double f_ref, const double* x_ref,
              cdkit_trace** out) {
  if (!p || !cfg || !out) return bad_arg("NULL argument");
  cdkit::Variant variant;
  switch (cfg->algorithm) {
    case CDKIT_ALGO_AGCD:
      variant = cdkit::Variant::Agcd;
      break;
    case CDKIT_ALGO_ASCD:
      variant = cdkit::Variant::Ascd;
      break;
    case CDKIT_ALGO_ARCD:
      variant = cdkit::Variant::Arcd;
      break;
    case CDKIT_ALGO_GCD:
      variant = cdkit::Variant::Gcd;
      break;
    default:
      return bad_arg("unknown algorithm");
  }
  if (cfg->mode != CDKIT_MODE_PLAIN && cfg->mode != CDKIT_MODE_STRONG)
    return bad_arg("unknown mode");
  return guarded([&] {
    cdkit::RunOptions opts;
    opts.iters = static_cast<long>(cfg->iters);
    opts.seed = cfg->seed;
    opts.record_period = static_cast<long>(cfg->record_period);
    opts.check_descent = cfg->check_descent != 0;
    if (cfg->cache_refresh_period > 0)
      opts.cache_refresh_period = static_cast<long>(cfg->cache_refresh_period);
    if (!std::isnan(f_ref)) opts.f_ref = f_ref;
    if (x_ref)
      opts.x_ref = Eigen::Map<const Eigen::VectorXd>(x_ref, p->p->dim());
    Eigen::VectorXd start =
        x0 ? Eigen::Map<const Eigen::VectorXd>(x0, p->p->dim()).eval()
           : Eigen::VectorXd::Zero(p->p->dim()).eval();
    cdkit::Mode mode = cfg->mode == CDKIT_MODE_PLAIN ? cdkit::Mode::Plain
                                                     : cdkit::Mode::Strong;
    *out = new cdkit_trace{
        cdkit::run(*p->p, variant, mode, cfg->mu, start, opts)};
  });
}

void cdkit_trace_free(cdkit_trace* t) { delete t; }

long long cdkit_trace_size(const cdkit_trace* t) {
  return t ? static_cast<long long>(t->t.records.size()) : -1;
}

int cdkit_trace_record_at(const cdkit_trace* t, long long idx,
                          cdkit_trace_record* out) {
  if (!t || !out) return bad_arg("NULL argument");
  if (idx < 0 || idx >= static_cast<long long>(t->t.records.size()))
    return bad_arg("record index out of range");
  const cdkit::TraceRecord& r = t->t.records[static_cast<size_t>(idx)];
  out->k = r.k;
  out->elapsed_s = r.elapsed_s;
  out->f = r.f;
  out->gap = r.gap;
  out->j1 = r.j1;
  out->j2 = r.j2;
  out->theta_or_a = r.theta_or_a;
  out->gamma_num = r.gamma_num;
  out->gamma_den = r.gamma_den;
  out->energy = r.energy;
  return CDKIT_OK;
}

long long cdkit_trace_descent_violations(const cdkit_trace* t) {
  return t ? t->t.descent_violations : -1;
}

int cdkit_trace_gamma_totals(const cdkit_trace* t, double* num, double* den) {
  if (!t || !num || !den) return bad_arg("NULL argument");
  *num = t->t.gamma_num_total;
  *den = t->t.gamma_den_total;
  return CDKIT_OK;
}

int cdkit_trace_write_csv(const cdkit_trace* t, const char* path) {
  if (!t || !path) return bad_arg("NULL argument");
  return guarded([&] { cdkit::write_trace_csv_file(t->t, path); });
}

/* ---- diagnostics --------------------------------------------------- */

int cdkit_gamma_estimate(const cdkit_trace* t, long long k_bar,
                         cdkit_gamma** out) {
  if (!t || !out) return bad_arg("NULL argument");
  return guarded([&] {
    *out = new cdkit_gamma{
        cdkit::estimate_gamma(t->t, static_cast<long>(k_bar))};
  });
}

void cdkit_gamma_free(cdkit_gamma* g) { delete g; }

double cdkit_gamma_value(const cdkit_gamma* g) {
  return g ? g->g.gamma : std::numeric_limits<double>::quiet_NaN();
}

long long cdkit_gamma_sign_violations(const cdkit_gamma* g) {
  return g ? g->g.sign_violations : -1;
}

long long cdkit_gamma_size(const cdkit_gamma* g) {
  return g ? static_cast<long long>(g->g.ks.size()) : -1;
}

int cdkit_gamma_point(const cdkit_gamma* g, long long idx, long long* k,
                      double* num_cum, double* den_cum, double* ratio) {
  if (!g || !k || !num_cum || !den_cum || !ratio)
    return bad_arg("NULL argument");
  if (idx < 0 || idx >= static_cast<long long>(g->g.ks.size()))
    return bad_arg("point index out of range");
  size_t i = static_cast<size_t>(idx);
  *k = g->g.ks[i];
  *num_cum = g->g.num_cum[i];
  *den_cum = g->g.den_cum[i];
  *ratio = g->g.ratio[i];
  return CDKIT_OK;
}

int cdkit_bound_plain(long long k, long long dim, double r_sq, double* out) {
  if (!out) return bad_arg("out is NULL");
  return guarded([&] {
    *out = cdkit::bound_plain(static_cast<long>(k), static_cast<long>(dim),
                              r_sq);
  });
}

int cdkit_bound_agcd(long long k, long long dim, double gamma, double r_sq,
                     double* out) {
  if (!out) return bad_arg("out is NULL");
  return guarded([&] {
    *out = cdkit::bound_agcd(static_cast<long>(k), static_cast<long>(dim),
                             gamma, r_sq);
  });
}

int cdkit_bound_strong(long long k, double a, double initial_energy,
                       double* out) {
  if (!out) return bad_arg("out is NULL");
  return guarded([&] {
    *out = cdkit::bound_strong(static_cast<long>(k), a, initial_energy);
  });
}

int cdkit_strong_params(double mu, long long dim, double* a, double* b) {
  if (!a || !b) return bad_arg("NULL argument");
  return guarded([&] {
    cdkit::StrongParams sp = cdkit::strong_params(mu, static_cast<long>(dim));
    *a = sp.a;
    *b = sp.b;
  });
}

} /* extern "C" */
