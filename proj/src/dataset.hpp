#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace cdkit {

enum class DatasetKind { Regression, Classification };

// In-memory dataset: one row per sample.  Exactly one of `dense` / `sp`
// holds the design matrix, selected by `sparse`.  Classification targets
// are +/-1 after parsing; regression targets are arbitrary reals.
struct Dataset {
  DatasetKind kind = DatasetKind::Regression;
  bool sparse = false;
  Eigen::MatrixXd dense;
  Eigen::SparseMatrix<double> sp;  // column-major
  Eigen::VectorXd target;
  std::optional<Eigen::VectorXd> beta_star;  // synthetic ground truth

  long samples() const { return target.size(); }
  long dim() const { return sparse ? sp.cols() : dense.cols(); }
};

// Synthetic least-squares instance with controlled conditioning.
// kappa is the target condition number of X^T X; +inf requests a rank
// deficient design (exactly one zero singular value, the rest conditioned
// as if kappa were 1e4).  sigma scales the Gaussian response noise.
struct SyntheticSpec {
  long n_samples = 200;
  long dim = 100;
  double kappa = 100.0;
  double sigma = 1.0;
  std::uint64_t seed = 0;
};

// Draws G with iid standard normal entries (row-major order), takes its
// SVD, rescales the singular values affinely onto [1/sqrt(kappa), 1], and
// rebuilds X = U D V^T.  The response is y = X beta_star + sigma * noise
// with beta_star and noise standard normal (drawn in that order).
Dataset generate_linear_regression(const SyntheticSpec& spec);

// LIBSVM classification format: "<label> <idx>:<val> ...", indices 1-based
// and strictly increasing within a line, '#' lines and blank lines skipped.
// Labels must form a subset of {-1,+1} (kept) or {0,1} (0 remapped to -1).
// The matrix dimension is the largest index seen.  Errors carry 1-based
// line numbers.
Dataset parse_libsvm(std::istream& in);
Dataset parse_libsvm_file(const std::string& path);

// Plain-text container with header
//   cdkit-dataset v1 <kind> <n_samples> <dim> <dense|sparse>
// followed by the target line, the matrix rows, and an optional
// "# beta_star" section.  Values are printed with %.17g so that a
// save/load round trip is bit exact.
void save_dataset(const Dataset& d, std::ostream& out);
void save_dataset_file(const Dataset& d, const std::string& path);
Dataset load_dataset(std::istream& in);
Dataset load_dataset_file(const std::string& path);

// Eigenvalue summary of X^T X, used to report conditioning.
struct GramSpectrum {
  double min_eig = 0.0;
  double max_eig = 0.0;
  double min_positive_eig = 0.0;  // smallest above 1e-10 * max_eig
};

GramSpectrum gram_spectrum(const Dataset& d);

}  // namespace cdkit
