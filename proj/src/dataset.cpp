#include "dataset.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

#include "errors.hpp"
#include "rng.hpp"

namespace cdkit {

namespace {

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

const char* skip_ws(const char* p) {
  while (*p == ' ' || *p == '\t') ++p;
  return p;
}

bool blank_or_comment(const std::string& line) {
  const char* p = skip_ws(line.c_str());
  return *p == '\0' || *p == '#';
}

std::string trimmed(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const char*& p, long lineno, const char* what) {
  char* end = nullptr;
  errno = 0;
  double v = std::strtod(p, &end);
  if (end == p) throw ParseError(lineno, std::string("malformed ") + what);
  if (!std::isfinite(v))
    throw ParseError(lineno, std::string(what) + " is not finite");
  p = end;
  return v;
}

// Splits a whitespace-separated line of exactly n doubles.
Eigen::VectorXd parse_values(const std::string& line, long n, long lineno,
                             const char* what) {
  Eigen::VectorXd out(n);
  const char* p = line.c_str();
  for (long i = 0; i < n; ++i) {
    p = skip_ws(p);
    if (*p == '\0')
      throw ParseError(lineno, std::string("expected ") + std::to_string(n) +
                                   " " + what + " values, got " +
                                   std::to_string(i));
    out[i] = parse_double(p, lineno, what);
  }
  p = skip_ws(p);
  if (*p != '\0')
    throw ParseError(lineno, std::string("trailing content after ") +
                                 std::to_string(n) + " " + what + " values");
  return out;
}

}  // namespace

Dataset generate_linear_regression(const SyntheticSpec& spec) {
  if (spec.n_samples < 1 || spec.dim < 1)
    fail(Errc::invalid_argument, "generator needs n_samples >= 1 and dim >= 1");
  bool rank_deficient = std::isinf(spec.kappa);
  if (!rank_deficient && !(spec.kappa >= 1.0))
    fail(Errc::invalid_argument, "kappa must be >= 1 (or +inf)");
  if (!(spec.sigma >= 0.0) || !std::isfinite(spec.sigma))
    fail(Errc::invalid_argument, "sigma must be finite and >= 0");

  Rng rng(spec.seed);
  long n = spec.n_samples, p = spec.dim;

  Eigen::MatrixXd g(n, p);
  for (long r = 0; r < n; ++r)
    for (long c = 0; c < p; ++c) g(r, c) = rng.normal();

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(
      g, Eigen::ComputeThinU | Eigen::ComputeThinV);
  Eigen::VectorXd s = svd.singularValues();  // descending
  long m = s.size();

  // Affine map of the singular values onto [lo, 1].  With a rank deficient
  // request the smallest one is zeroed and the rest are conditioned as if
  // kappa were 1e4, so X^T X gets exactly one zero eigenvalue.
  Eigen::VectorXd d(m);
  long m_scaled = rank_deficient ? m - 1 : m;
  double kappa_eff = rank_deficient ? 1e4 : spec.kappa;
  double lo = 1.0 / std::sqrt(kappa_eff);
  if (m_scaled > 0) {
    double smax = s(0), smin = s(m_scaled - 1);
    if (smax == smin) {
      d.head(m_scaled).setOnes();
    } else {
      double slope = (1.0 - lo) / (smax - smin);
      for (long i = 0; i < m_scaled; ++i) d(i) = lo + slope * (s(i) - smin);
    }
  }
  if (rank_deficient) d(m - 1) = 0.0;

  Dataset out;
  out.kind = DatasetKind::Regression;
  out.sparse = false;
  out.dense = svd.matrixU() * d.asDiagonal() * svd.matrixV().transpose();

  Eigen::VectorXd beta(p);
  for (long i = 0; i < p; ++i) beta[i] = rng.normal();
  Eigen::VectorXd noise(n);
  for (long i = 0; i < n; ++i) noise[i] = rng.normal();
  out.target = out.dense * beta + spec.sigma * noise;
  out.beta_star = std::move(beta);
  return out;
}

Dataset parse_libsvm(std::istream& in) {
  std::vector<Eigen::Triplet<double>> trips;
  std::vector<double> labels;
  long max_idx = 0;
  bool has_zero = false, has_neg = false;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (blank_or_comment(line)) continue;

    const char* p = line.c_str();
    double label = parse_double(p, lineno, "label");
    if (label != 1.0 && label != -1.0 && label != 0.0)
      throw ParseError(lineno, "unsupported label value " + g17(label));
    if (label == 0.0) has_zero = true;
    if (label == -1.0) has_neg = true;
    labels.push_back(label);
    long row = static_cast<long>(labels.size()) - 1;

    long prev_idx = 0;
    while (true) {
      p = skip_ws(p);
      if (*p == '\0') break;
      char* end = nullptr;
      errno = 0;
      long idx = std::strtol(p, &end, 10);
      if (end == p || idx < 1)
        throw ParseError(lineno, "malformed feature index");
      if (idx <= prev_idx)
        throw ParseError(lineno, "feature indices must be strictly increasing");
      if (*end != ':')
        throw ParseError(lineno, "expected ':' after feature index");
      p = end + 1;
      double val = parse_double(p, lineno, "feature value");
      if (*p != '\0' && *p != ' ' && *p != '\t')
        throw ParseError(lineno, "unexpected character after feature value");
      trips.emplace_back(row, idx - 1, val);
      prev_idx = idx;
      if (idx > max_idx) max_idx = idx;
    }
  }
  if (labels.empty()) fail(Errc::parse, "no samples in input");
  if (has_zero && has_neg)
    fail(Errc::parse, "unsupported label set: mixes 0/1 with -1/+1");

  Dataset out;
  out.kind = DatasetKind::Classification;
  out.sparse = true;
  out.sp.resize(static_cast<long>(labels.size()), max_idx);
  out.sp.setFromTriplets(trips.begin(), trips.end());
  out.sp.makeCompressed();
  out.target.resize(static_cast<long>(labels.size()));
  for (size_t i = 0; i < labels.size(); ++i)
    out.target[static_cast<long>(i)] = labels[i] == 0.0 ? -1.0 : labels[i];
  return out;
}

Dataset parse_libsvm_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::io, "cannot open " + path);
  return parse_libsvm(in);
}

void save_dataset(const Dataset& d, std::ostream& out) {
  long n = d.samples(), p = d.dim();
  out << "cdkit-dataset v1 "
      << (d.kind == DatasetKind::Regression ? "regression" : "classification")
      << ' ' << n << ' ' << p << ' ' << (d.sparse ? "sparse" : "dense")
      << '\n';
  for (long i = 0; i < n; ++i) out << (i ? " " : "") << g17(d.target[i]);
  out << '\n';
  if (d.sparse) {
    Eigen::SparseMatrix<double, Eigen::RowMajor> rm = d.sp;
    for (long r = 0; r < n; ++r) {
      bool first = true;
      for (Eigen::SparseMatrix<double, Eigen::RowMajor>::InnerIterator it(rm,
                                                                          r);
           it; ++it) {
        out << (first ? "" : " ") << (it.col() + 1) << ':' << g17(it.value());
        first = false;
      }
      out << '\n';
    }
  } else {
    for (long r = 0; r < n; ++r) {
      for (long c = 0; c < p; ++c) out << (c ? " " : "") << g17(d.dense(r, c));
      out << '\n';
    }
  }
  if (d.beta_star) {
    out << "# beta_star\n";
    for (long i = 0; i < p; ++i) out << (i ? " " : "") << g17((*d.beta_star)[i]);
    out << '\n';
  }
  if (!out) fail(Errc::io, "write failed");
}

void save_dataset_file(const Dataset& d, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(Errc::io, "cannot open " + path + " for writing");
  save_dataset(d, out);
}

Dataset load_dataset(std::istream& in) {
  std::string line;
  long lineno = 0;
  if (!std::getline(in, line)) fail(Errc::parse, "empty input");
  ++lineno;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::istringstream hdr(line);
  std::string magic, version, kind, storage;
  long n = 0, p = 0;
  if (!(hdr >> magic)) throw ParseError(1, "missing header");
  if (magic != "cdkit-dataset")
    throw ParseError(1, "not a cdkit-dataset file");
  if (!(hdr >> version)) throw ParseError(1, "missing container version");
  if (version != "v1")
    fail(Errc::version, "unsupported container version '" + version + "'");
  if (!(hdr >> kind >> n >> p >> storage))
    throw ParseError(1, "malformed header");
  std::string extra;
  if (hdr >> extra) throw ParseError(1, "trailing content in header");
  if (kind != "regression" && kind != "classification")
    throw ParseError(1, "unknown dataset kind '" + kind + "'");
  if (storage != "dense" && storage != "sparse")
    throw ParseError(1, "unknown storage flavor '" + storage + "'");
  if (n < 1 || p < 1) throw ParseError(1, "sample and feature counts must be positive");

  Dataset out;
  out.kind = kind == "regression" ? DatasetKind::Regression
                                  : DatasetKind::Classification;
  out.sparse = storage == "sparse";

  if (!std::getline(in, line)) throw ParseError(lineno + 1, "missing target line");
  ++lineno;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  out.target = parse_values(line, n, lineno, "target");

  if (out.sparse) {
    std::vector<Eigen::Triplet<double>> trips;
    for (long r = 0; r < n; ++r) {
      if (!std::getline(in, line))
        throw ParseError(lineno + 1, "missing matrix row");
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      const char* q = line.c_str();
      long prev_idx = 0;
      while (true) {
        q = skip_ws(q);
        if (*q == '\0') break;
        char* end = nullptr;
        long idx = std::strtol(q, &end, 10);
        if (end == q || idx < 1)
          throw ParseError(lineno, "malformed feature index");
        if (idx <= prev_idx)
          throw ParseError(lineno,
                           "feature indices must be strictly increasing");
        if (idx > p) throw ParseError(lineno, "feature index exceeds dim");
        if (*end != ':')
          throw ParseError(lineno, "expected ':' after feature index");
        q = end + 1;
        double val = parse_double(q, lineno, "feature value");
        trips.emplace_back(r, idx - 1, val);
        prev_idx = idx;
      }
    }
    out.sp.resize(n, p);
    out.sp.setFromTriplets(trips.begin(), trips.end());
    out.sp.makeCompressed();
  } else {
    out.dense.resize(n, p);
    for (long r = 0; r < n; ++r) {
      if (!std::getline(in, line))
        throw ParseError(lineno + 1, "missing matrix row");
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      out.dense.row(r) = parse_values(line, p, lineno, "matrix").transpose();
    }
  }

  // Optional ground-truth section, then only blank lines may follow.
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trimmed(line);
    if (t.empty()) continue;
    if (t == "# beta_star") {
      if (!std::getline(in, line))
        throw ParseError(lineno + 1, "missing beta_star line");
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      out.beta_star = parse_values(line, p, lineno, "beta_star");
      continue;
    }
    throw ParseError(lineno, "unexpected trailing content");
  }

  if (out.kind == DatasetKind::Classification) {
    for (long i = 0; i < n; ++i)
      if (out.target[i] != 1.0 && out.target[i] != -1.0)
        fail(Errc::parse, "classification targets must be +1 or -1");
  }
  return out;
}

Dataset load_dataset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::io, "cannot open " + path);
  return load_dataset(in);
}

GramSpectrum gram_spectrum(const Dataset& d) {
  Eigen::MatrixXd gram =
      d.sparse ? Eigen::MatrixXd(d.sp.transpose() * d.sp)
               : Eigen::MatrixXd(d.dense.transpose() * d.dense);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram,
                                                    Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = es.eigenvalues();  // ascending
  GramSpectrum s;
  s.min_eig = ev(0);
  s.max_eig = ev(ev.size() - 1);
  s.min_positive_eig = 0.0;
  double cutoff = 1e-10 * s.max_eig;
  for (long i = 0; i < ev.size(); ++i) {
    if (ev(i) > cutoff) {
      s.min_positive_eig = ev(i);
      break;
    }
  }
  return s;
}

}  // namespace cdkit
