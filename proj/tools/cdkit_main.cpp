// Command line front end.  Everything numerical goes through the public C
// API in cdkit.h; this file only parses flags, schedules runs and formats
// text.  Exit codes: 0 success, 1 runtime failure, 2 usage error.

#include <CLI11.hpp>
#include <algorithm>
#include <cdkit.h>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <string>
#include <thread>
#include <vector>

namespace {

template <typename T, void (*Free)(T*)>
struct Handle {
  T* h = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() {
    if (h) Free(h);
  }
  T** out() { return &h; }
  operator T*() const { return h; }
};

using DatasetH = Handle<cdkit_dataset, cdkit_dataset_free>;
using ProblemH = Handle<cdkit_problem, cdkit_problem_free>;
using TraceH = Handle<cdkit_trace, cdkit_trace_free>;
using GammaH = Handle<cdkit_gamma, cdkit_gamma_free>;

void check(int rc) {
  if (rc != CDKIT_OK) {
    std::cerr << "error: " << cdkit_last_error() << "\n";
    std::exit(1);
  }
}

[[noreturn]] void usage_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  std::exit(2);
}

std::string g17(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string sci(double v) {
  if (std::isnan(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6e", v);
  return buf;
}

// Flags shared by every subcommand that needs data: either an existing
// file (--data container, --libsvm raw text) or an inline synthetic
// instance described by --samples/--dim/--kappa/--sigma/--gen-seed.
struct DataFlags {
  std::string data;
  std::string libsvm;
  long long samples = 200;
  long long dim = 100;
  std::string kappa = "100";
  double sigma = 1.0;
  unsigned long long gen_seed = 0;
};

void add_data_flags(CLI::App* cmd, DataFlags& f) {
  cmd->add_option("--data", f.data, "dataset container file");
  cmd->add_option("--libsvm", f.libsvm, "LIBSVM classification file");
  cmd->add_option("--samples", f.samples, "synthetic: number of samples");
  cmd->add_option("--dim", f.dim, "synthetic: number of features");
  cmd->add_option("--kappa", f.kappa,
                  "synthetic: condition number of X^T X (>= 1 or 'inf')");
  cmd->add_option("--sigma", f.sigma, "synthetic: response noise scale");
  cmd->add_option("--gen-seed", f.gen_seed, "synthetic: generator seed");
}

double parse_kappa(const std::string& s) {
  if (s == "inf" || s == "Inf" || s == "INF") {
    return std::numeric_limits<double>::infinity();
  }
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0' || !(v >= 1.0))
    usage_error("--kappa must be a number >= 1 or 'inf'");
  return v;
}

void generate_into(const DataFlags& f, DatasetH& d) {
  double kappa = parse_kappa(f.kappa);
  if (f.samples < 1 || f.dim < 1)
    usage_error("--samples and --dim must be >= 1");
  if (!(f.sigma >= 0.0)) usage_error("--sigma must be >= 0");
  if (f.samples < f.dim)
    std::cerr << "warning: fewer samples than features; the design cannot "
                 "reach the requested conditioning\n";
  check(cdkit_generate_regression(f.samples, f.dim, kappa, f.sigma,
                                  f.gen_seed, d.out()));
}

void acquire_dataset(const DataFlags& f, DatasetH& d) {
  if (!f.data.empty() && !f.libsvm.empty())
    usage_error("--data and --libsvm are mutually exclusive");
  if (!f.data.empty()) {
    check(cdkit_dataset_load(f.data.c_str(), d.out()));
  } else if (!f.libsvm.empty()) {
    check(cdkit_dataset_parse_libsvm(f.libsvm.c_str(), d.out()));
  } else {
    generate_into(f, d);
  }
}

// objective: auto | ls | logistic
void make_problem(const DatasetH& d, const std::string& objective,
                  ProblemH& p) {
  std::string choice = objective;
  if (choice == "auto")
    choice = cdkit_dataset_kind(d) == CDKIT_KIND_REGRESSION ? "ls" : "logistic";
  if (choice == "ls") {
    check(cdkit_problem_least_squares(d, p.out()));
  } else if (choice == "logistic") {
    check(cdkit_problem_logistic(d, p.out()));
  } else {
    usage_error("--objective must be auto, ls or logistic");
  }
}

int parse_algo(const std::string& s) {
  if (s == "agcd") return CDKIT_ALGO_AGCD;
  if (s == "ascd") return CDKIT_ALGO_ASCD;
  if (s == "arcd") return CDKIT_ALGO_ARCD;
  if (s == "gcd") return CDKIT_ALGO_GCD;
  usage_error("unknown algorithm '" + s + "' (agcd|ascd|arcd|gcd)");
}

// Resolves --mu for strong mode: a number in (0, 1], or "exact" /
// "smallest-positive" computed from the objective.
double resolve_mu(const std::string& mu, int mode, const ProblemH& p) {
  if (mode == CDKIT_MODE_PLAIN) return 0.0;
  if (mu == "none" || mu.empty())
    usage_error("strong mode needs --mu (a value, 'exact' or "
                "'smallest-positive'); use --mode plain otherwise");
  if (mu == "exact" || mu == "smallest-positive") {
    double v = 0.0;
    check(cdkit_problem_strong_convexity(p, mu == "smallest-positive", &v));
    if (!(v > 0.0))
      usage_error("computed strong convexity is 0; the problem is rank "
                  "deficient, try --mu smallest-positive or an explicit "
                  "value");
    return v;
  }
  char* end = nullptr;
  double v = std::strtod(mu.c_str(), &end);
  if (end == mu.c_str() || *end != '\0')
    usage_error("--mu must be a number, 'exact' or 'smallest-positive'");
  if (!(v > 0.0) || v > 1.0) usage_error("--mu must lie in (0, 1]");
  return v;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  size_t n = v.size();
  if (n == 0) return std::numeric_limits<double>::quiet_NaN();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

unsigned thread_budget() {
  if (const char* env = std::getenv("CDKIT_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

// ---- generate ------------------------------------------------------

struct GenerateArgs {
  DataFlags data;
  std::string out;
};

void cmd_generate(const GenerateArgs& a) {
  DatasetH d;
  generate_into(a.data, d);
  check(cdkit_dataset_save(d, a.out.c_str()));
  std::cout << "wrote " << a.out << ": regression n=" << cdkit_dataset_samples(d)
            << " dim=" << cdkit_dataset_dim(d) << " dense\n";
  double mn = 0, mx = 0, mp = 0;
  check(cdkit_dataset_spectrum(d, &mn, &mx, &mp));
  std::cout << "gram eigenvalues: min=" << sci(mn) << " max=" << sci(mx)
            << " min_positive=" << sci(mp) << "\n";
  if (mn <= 1e-12 * mx) {
    std::cout << "rank deficient; cond over the positive spectrum = "
              << sci(mx / mp) << "\n";
  } else {
    std::cout << "cond(X^T X) = " << sci(mx / mn) << "\n";
  }
}

// ---- run -----------------------------------------------------------

struct RunArgs {
  DataFlags data;
  std::string objective = "auto";
  std::string algo = "arcd";
  std::string mode = "plain";
  std::string mu = "none";
  long long iters = 1000;
  unsigned long long seed = 0;
  long long record_period = 1;
  bool check_descent = false;
  bool no_reference = false;
  std::string trace_path;
};

void run_one(const ProblemH& p, int algo, int mode, double mu,
             const RunArgs& a, unsigned long long seed, double f_ref,
             const double* x_ref, TraceH& t) {
  cdkit_run_config cfg{};
  cfg.algorithm = algo;
  cfg.mode = mode;
  cfg.mu = mu;
  cfg.iters = a.iters;
  cfg.seed = seed;
  cfg.record_period = a.record_period;
  cfg.check_descent = a.check_descent ? 1 : 0;
  cfg.cache_refresh_period = 0;
  check(cdkit_run(p, &cfg, nullptr, f_ref, x_ref, t.out()));
}

void cmd_run(const RunArgs& a) {
  if (a.iters < 0) usage_error("--iters must be >= 0");
  if (a.record_period < 1) usage_error("--record-period must be >= 1");
  int mode;
  if (a.mode == "plain") {
    mode = CDKIT_MODE_PLAIN;
  } else if (a.mode == "strong") {
    mode = CDKIT_MODE_STRONG;
  } else {
    usage_error("--mode must be plain or strong");
  }
  int algo = parse_algo(a.algo);

  DatasetH d;
  acquire_dataset(a.data, d);
  ProblemH p;
  make_problem(d, a.objective, p);
  long long dim = cdkit_problem_dim(p);
  std::cout << "dataset: n=" << cdkit_dataset_samples(d) << " dim="
            << cdkit_dataset_dim(d)
            << (cdkit_dataset_kind(d) == CDKIT_KIND_REGRESSION
                    ? " (regression)"
                    : " (classification)")
            << "\n";

  double mu = resolve_mu(a.mu, mode, p);

  double f_ref = std::numeric_limits<double>::quiet_NaN();
  std::vector<double> x_ref;
  if (!a.no_reference) {
    x_ref.resize(static_cast<size_t>(dim));
    int low = 0;
    check(cdkit_reference_solve(p, &f_ref, x_ref.data(), &low));
    std::cout << "reference: f_ref=" << g17(f_ref)
              << (low ? " (low confidence)" : "") << "\n";
  }

  TraceH t;
  run_one(p, algo, mode, mu, a, a.seed, f_ref,
          x_ref.empty() ? nullptr : x_ref.data(), t);

  long long nrec = cdkit_trace_size(t);
  cdkit_trace_record last{};
  check(cdkit_trace_record_at(t, nrec - 1, &last));
  std::cout << "run: algo=" << a.algo << " mode=" << a.mode
            << " iters=" << a.iters << " seed=" << a.seed << "\n";
  std::cout << "final: k=" << last.k << " f=" << g17(last.f)
            << " gap=" << g17(last.gap) << " elapsed_s=" << sci(last.elapsed_s)
            << "\n";
  if (a.check_descent)
    std::cout << "descent violations: " << cdkit_trace_descent_violations(t)
              << "\n";

  if (!a.no_reference && algo != CDKIT_ALGO_GCD && a.iters > 0) {
    // Envelope at the final k for context.
    if (mode == CDKIT_MODE_PLAIN) {
      double r_sq = 0.0;
      check(cdkit_problem_weighted_norm_sq(p, x_ref.data(), &r_sq));
      double env = 0.0;
      check(cdkit_bound_plain(last.k, dim, r_sq, &env));
      std::cout << "plain envelope at k=" << last.k << ": " << sci(env)
                << "\n";
    } else {
      cdkit_trace_record first{};
      check(cdkit_trace_record_at(t, 0, &first));
      double aa = 0, bb = 0;
      check(cdkit_strong_params(mu, dim, &aa, &bb));
      double env = 0.0;
      check(cdkit_bound_strong(last.k, aa, first.energy, &env));
      std::cout << "strong envelope at k=" << last.k << ": " << sci(env)
                << "\n";
    }
  }

  if (!a.trace_path.empty()) {
    check(cdkit_trace_write_csv(t, a.trace_path.c_str()));
    std::cout << "trace written to " << a.trace_path << "\n";
  }
}

// ---- compare ---------------------------------------------------------

struct CompareArgs {
  DataFlags data;
  std::string objective = "auto";
  std::string algos = "agcd,ascd,arcd,gcd";
  std::string seeds = "1,2,3,4,5,6,7,8,9,10";
  std::string mode = "plain";
  std::string mu = "none";
  long long iters = 1000;
  long long record_period = 1;
  std::string out_dir;
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

void cmd_compare(const CompareArgs& a) {
  if (a.iters < 1) usage_error("--iters must be >= 1");
  if (a.record_period < 1) usage_error("--record-period must be >= 1");
  int mode;
  if (a.mode == "plain") {
    mode = CDKIT_MODE_PLAIN;
  } else if (a.mode == "strong") {
    mode = CDKIT_MODE_STRONG;
  } else {
    usage_error("--mode must be plain or strong");
  }
  std::vector<std::string> algo_names = split_list(a.algos);
  if (algo_names.empty()) usage_error("--algos is empty");
  std::vector<int> algos;
  for (const std::string& s : algo_names) algos.push_back(parse_algo(s));
  std::vector<unsigned long long> seeds;
  for (const std::string& s : split_list(a.seeds)) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s.c_str(), &end, 10);
    if (end == s.c_str() || *end != '\0')
      usage_error("--seeds must be a comma separated list of integers");
    seeds.push_back(v);
  }
  if (seeds.empty()) usage_error("--seeds is empty");

  DatasetH d;
  acquire_dataset(a.data, d);
  ProblemH p;
  make_problem(d, a.objective, p);
  long long dim = cdkit_problem_dim(p);
  double mu = resolve_mu(a.mu, mode, p);

  double f_ref = std::numeric_limits<double>::quiet_NaN();
  std::vector<double> x_ref(static_cast<size_t>(dim));
  int low = 0;
  check(cdkit_reference_solve(p, &f_ref, x_ref.data(), &low));
  std::cout << "reference: f_ref=" << g17(f_ref)
            << (low ? " (low confidence)" : "") << "\n";

  struct Cell {
    size_t algo_idx;
    size_t seed_idx;
    std::vector<long long> ks;
    std::vector<double> gaps;
    std::vector<double> elapsed;
    int rc = CDKIT_OK;
    std::string err;
  };
  std::vector<Cell> cells;
  for (size_t ai = 0; ai < algos.size(); ++ai)
    for (size_t si = 0; si < seeds.size(); ++si)
      cells.push_back(Cell{ai, si, {}, {}, {}, CDKIT_OK, {}});

  auto work = [&](size_t start, size_t stride) {
    for (size_t c = start; c < cells.size(); c += stride) {
      Cell& cell = cells[c];
      cdkit_run_config cfg{};
      cfg.algorithm = algos[cell.algo_idx];
      cfg.mode = mode;
      cfg.mu = mu;
      cfg.iters = a.iters;
      cfg.seed = seeds[cell.seed_idx];
      cfg.record_period = a.record_period;
      cfg.check_descent = 0;
      cfg.cache_refresh_period = 0;
      TraceH t;
      cell.rc = cdkit_run(p, &cfg, nullptr, f_ref, x_ref.data(), t.out());
      if (cell.rc != CDKIT_OK) {
        cell.err = cdkit_last_error();
        continue;
      }
      long long n = cdkit_trace_size(t);
      for (long long i = 0; i < n; ++i) {
        cdkit_trace_record r{};
        cdkit_trace_record_at(t, i, &r);
        cell.ks.push_back(r.k);
        cell.gaps.push_back(r.gap);
        cell.elapsed.push_back(r.elapsed_s);
      }
    }
  };
  unsigned threads = std::min<size_t>(thread_budget(), cells.size());
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < threads; ++w) pool.emplace_back(work, w, threads);
  work(0, threads);
  for (std::thread& th : pool) th.join();
  for (const Cell& c : cells) {
    if (c.rc != CDKIT_OK) {
      std::cerr << "error: " << c.err << "\n";
      std::exit(1);
    }
  }

  // Per algorithm: one CSV with gap statistics across seeds at each
  // recorded k (identical record grids by construction).
  size_t per = seeds.size();
  std::vector<long long> summary_ks;
  std::error_code dir_ec;
  std::filesystem::create_directories(a.out_dir, dir_ec);

  std::vector<std::vector<double>> summary_medians(algos.size());
  for (size_t ai = 0; ai < algos.size(); ++ai) {
    const std::vector<long long>& ks = cells[ai * per].ks;
    std::string path = a.out_dir + "/" + algo_names[ai] + ".csv";
    std::ofstream out(path);
    if (!out) {
      std::cerr << "error: cannot open " << path << " for writing\n";
      std::exit(1);
    }
    out << "k,gap_mean,gap_median,gap_min,gap_max,elapsed_mean_s\n";
    std::vector<double> medians;
    for (size_t i = 0; i < ks.size(); ++i) {
      std::vector<double> gaps;
      double mean = 0.0, emean = 0.0;
      double lo = std::numeric_limits<double>::infinity();
      double hi = -std::numeric_limits<double>::infinity();
      for (size_t si = 0; si < per; ++si) {
        const Cell& cell = cells[ai * per + si];
        double gp = cell.gaps[i];
        gaps.push_back(gp);
        mean += gp;
        emean += cell.elapsed[i];
        lo = std::min(lo, gp);
        hi = std::max(hi, gp);
      }
      mean /= static_cast<double>(per);
      emean /= static_cast<double>(per);
      double med = median(gaps);
      medians.push_back(med);
      out << ks[i] << ',' << g17(mean) << ',' << g17(med) << ',' << g17(lo)
          << ',' << g17(hi) << ',' << g17(emean) << '\n';
    }
    std::cout << "wrote " << path << "\n";
    if (ai == 0) summary_ks = ks;
    summary_medians[ai] = std::move(medians);
  }

  // Median gap at decade iteration counts plus the final state.
  std::vector<size_t> picks;
  for (long long decade = 1; decade <= a.iters; decade *= 10)
    for (size_t i = 0; i < summary_ks.size(); ++i)
      if (summary_ks[i] == decade) picks.push_back(i);
  if (picks.empty() || summary_ks[picks.back()] != a.iters)
    for (size_t i = 0; i < summary_ks.size(); ++i)
      if (summary_ks[i] == a.iters) picks.push_back(i);
  std::cout << "median gap across seeds:\n";
  std::cout << "algo";
  for (size_t i : picks) std::cout << "\tk=" << summary_ks[i];
  std::cout << "\n";
  for (size_t ai = 0; ai < algos.size(); ++ai) {
    std::cout << algo_names[ai];
    for (size_t i : picks) std::cout << '\t' << sci(summary_medians[ai][i]);
    std::cout << "\n";
  }
}

// ---- gamma -----------------------------------------------------------

struct GammaArgs {
  DataFlags data;
  std::string objective = "auto";
  long long iters = 10000;
  long long k_bar = 5000;
  unsigned long long seed = 0;
  std::string out_csv;
};

void cmd_gamma(const GammaArgs& a) {
  if (a.iters < 1) usage_error("--iters must be >= 1");
  if (a.k_bar < 0) usage_error("--kbar must be >= 0");
  if (a.k_bar >= a.iters)
    usage_error("--kbar must be smaller than --iters so the burn-in leaves "
                "states to estimate from");

  DatasetH d;
  acquire_dataset(a.data, d);
  ProblemH p;
  make_problem(d, a.objective, p);
  long long dim = cdkit_problem_dim(p);

  double f_ref = std::numeric_limits<double>::quiet_NaN();
  std::vector<double> x_ref(static_cast<size_t>(dim));
  int low = 0;
  check(cdkit_reference_solve(p, &f_ref, x_ref.data(), &low));
  if (low)
    std::cerr << "warning: reference solve hit its iteration cap; the "
                 "estimate may be biased\n";

  cdkit_run_config cfg{};
  cfg.algorithm = CDKIT_ALGO_AGCD;
  cfg.mode = CDKIT_MODE_PLAIN;
  cfg.mu = 0.0;
  cfg.iters = a.iters;
  cfg.seed = a.seed;
  cfg.record_period = 1;
  cfg.check_descent = 0;
  cfg.cache_refresh_period = 0;
  TraceH t;
  check(cdkit_run(p, &cfg, nullptr, f_ref, x_ref.data(), t.out()));

  GammaH g;
  check(cdkit_gamma_estimate(t, a.k_bar, g.out()));
  std::cout << "gamma=" << g17(cdkit_gamma_value(g)) << " k_bar=" << a.k_bar
            << " sign_violations=" << cdkit_gamma_sign_violations(g) << "\n";

  if (!a.out_csv.empty()) {
    std::ofstream out(a.out_csv);
    if (!out) {
      std::cerr << "error: cannot open " << a.out_csv << " for writing\n";
      std::exit(1);
    }
    out << "k,num_cum,den_cum,ratio\n";
    long long n = cdkit_gamma_size(g);
    for (long long i = 0; i < n; ++i) {
      long long k = 0;
      double num = 0, den = 0, ratio = 0;
      check(cdkit_gamma_point(g, i, &k, &num, &den, &ratio));
      out << k << ',' << g17(num) << ',' << g17(den) << ',' << g17(ratio)
          << '\n';
    }
    std::cout << "ratio series written to " << a.out_csv << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cdkit: accelerated coordinate descent toolkit"};
  app.require_subcommand(1);

  GenerateArgs gen;
  CLI::App* cgen = app.add_subcommand(
      "generate", "write a synthetic least squares dataset");
  cgen->add_option("--samples", gen.data.samples, "number of samples");
  cgen->add_option("--dim", gen.data.dim, "number of features");
  cgen->add_option("--kappa", gen.data.kappa,
                   "condition number of X^T X (>= 1 or 'inf')");
  cgen->add_option("--sigma", gen.data.sigma, "response noise scale");
  cgen->add_option("--seed", gen.data.gen_seed, "generator seed");
  cgen->add_option("--out", gen.out, "output container path")->required();

  RunArgs run;
  CLI::App* crun = app.add_subcommand("run", "run one solver configuration");
  add_data_flags(crun, run.data);
  crun->add_option("--objective", run.objective, "auto|ls|logistic");
  crun->add_option("--algo", run.algo, "agcd|ascd|arcd|gcd");
  crun->add_option("--mode", run.mode, "plain|strong");
  crun->add_option("--mu", run.mu,
                   "strong mode parameter: value, 'exact' or "
                   "'smallest-positive'");
  crun->add_option("--iters", run.iters, "iteration count");
  crun->add_option("--seed", run.seed, "solver seed");
  crun->add_option("--record-period", run.record_period,
                   "record every this many iterations");
  crun->add_flag("--check-descent", run.check_descent,
                 "verify per-step sufficient decrease");
  crun->add_flag("--no-reference", run.no_reference,
                 "skip the reference solve (gaps become nan)");
  crun->add_option("--trace", run.trace_path, "write the trace CSV here");

  CompareArgs cmp;
  CLI::App* ccmp = app.add_subcommand(
      "compare", "run several algorithms over several seeds");
  add_data_flags(ccmp, cmp.data);
  ccmp->add_option("--objective", cmp.objective, "auto|ls|logistic");
  ccmp->add_option("--algos", cmp.algos, "comma separated algorithm list");
  ccmp->add_option("--seeds", cmp.seeds, "comma separated seed list");
  ccmp->add_option("--mode", cmp.mode, "plain|strong");
  ccmp->add_option("--mu", cmp.mu, "strong mode parameter");
  ccmp->add_option("--iters", cmp.iters, "iteration count");
  ccmp->add_option("--record-period", cmp.record_period,
                   "record every this many iterations");
  ccmp->add_option("--out-dir", cmp.out_dir, "directory for per-algorithm CSVs")
      ->required();

  GammaArgs gam;
  CLI::App* cgam = app.add_subcommand(
      "gamma", "estimate the greedy guarantee ratio on a dense trace");
  add_data_flags(cgam, gam.data);
  cgam->add_option("--objective", gam.objective, "auto|ls|logistic");
  cgam->add_option("--iters", gam.iters, "iteration count");
  cgam->add_option("--kbar", gam.k_bar, "burn-in state index");
  cgam->add_option("--seed", gam.seed, "solver seed");
  cgam->add_option("--out", gam.out_csv, "write the ratio series CSV here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (cgen->parsed()) {
    cmd_generate(gen);
  } else if (crun->parsed()) {
    cmd_run(run);
  } else if (ccmp->parsed()) {
    cmd_compare(cmp);
  } else if (cgam->parsed()) {
    cmd_gamma(gam);
  }
  return 0;
}
