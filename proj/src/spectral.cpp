#include "specnet/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "specnet/error.hpp"

namespace specnet {

namespace {

// Rows centred and scaled to unit norm; a correlation entry is then a dot product.
Eigen::MatrixXd standardize_rows(const ReturnPanel& panel) {
  const Eigen::Index n = panel.returns.rows();
  const Eigen::Index t = panel.returns.cols();
  Eigen::MatrixXd z(n, t);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double mean = panel.returns.row(i).mean();
    z.row(i) = panel.returns.row(i).array() - mean;
    const double norm = z.row(i).norm();
    const double scale = panel.returns.row(i).cwiseAbs().maxCoeff();
    if (!(norm > 1e-14 * std::max(1.0, scale) * std::sqrt(static_cast<double>(t))))
      throw ValidationError("zero-variance return series for stock " +
                            panel.tickers[static_cast<std::size_t>(i)]);
    z.row(i) /= norm;
  }
  return z;
}

double row_dot(const Eigen::MatrixXd& z, Eigen::Index i, Eigen::Index j) {
  double s = 0.0;
  for (Eigen::Index t = 0; t < z.cols(); ++t) s += z(i, t) * z(j, t);
  return s;
}

}  // namespace

CorrelationMatrix correlation_matrix(const ReturnPanel& panel, Exec exec) {
  const Eigen::Index n = panel.returns.rows();
  if (n < 2) throw ValidationError("correlation needs at least two stocks");
  if (panel.returns.cols() < 2) throw ValidationError("correlation needs at least two samples");
  const Eigen::MatrixXd z = standardize_rows(panel);
  CorrelationMatrix c;
  c.labels = panel.tickers;
  c.values.resize(n, n);
  // Row-major over the upper triangle; each entry is written by exactly one
  // iteration so the two kernels agree bit for bit.
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 4)
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = i + 1; j < n; ++j) {
        const double v = std::clamp(row_dot(z, i, j), -1.0, 1.0);
        c.values(i, j) = v;
        c.values(j, i) = v;
      }
  } else {
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = i + 1; j < n; ++j) {
        const double v = std::clamp(row_dot(z, i, j), -1.0, 1.0);
        c.values(i, j) = v;
        c.values(j, i) = v;
      }
  }
  c.values.diagonal().setOnes();
  return c;
}

std::string to_string(MpVariant v) {
  return v == MpVariant::standard ? "standard" : "paper_literal";
}

MpVariant mp_variant_from_string(const std::string& s) {
  if (s == "standard") return MpVariant::standard;
  if (s == "paper_literal") return MpVariant::paper_literal;
  throw ValidationError("unknown MP variant '" + s + "'");
}

MPBounds mp_bounds(std::size_t n, std::size_t t, MpVariant variant) {
  if (n < 2) throw ValidationError("MP bounds need n >= 2");
  if (t < n) throw ValidationError("MP bounds need t >= n (Q >= 1)");
  MPBounds b;
  b.variant = variant;
  b.q = static_cast<double>(t) / static_cast<double>(n);
  const double r = variant == MpVariant::standard ? std::sqrt(1.0 / b.q) : std::sqrt(b.q / 2.0);
  b.lambda_min = (1.0 - r) * (1.0 - r);
  b.lambda_max = (1.0 + r) * (1.0 + r);
  return b;
}

double mp_density(double lambda, const MPBounds& bounds) {
  if (lambda < bounds.lambda_min || lambda > bounds.lambda_max) return 0.0;
  if (lambda <= 0.0) throw ValidationError("MP density undefined at non-positive eigenvalue");
  const double radicand = (bounds.lambda_max - lambda) * (lambda - bounds.lambda_min);
  return bounds.q * std::sqrt(std::max(0.0, radicand)) / (2.0 * std::numbers::pi * lambda);
}

EigenDecomposition eigendecompose(const CorrelationMatrix& c) { return eigendecompose(c.values); }

EigenDecomposition eigendecompose(const Eigen::MatrixXd& c) {
  if (c.rows() != c.cols() || c.rows() == 0) throw ValidationError("matrix must be square");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(c);
  if (solver.info() != Eigen::Success) throw NumericError("eigendecomposition did not converge");
  const Eigen::Index n = c.rows();
  // Eigen returns ascending order; stable reversal keeps ties in index order.
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    return solver.eigenvalues()[a] > solver.eigenvalues()[b];
  });
  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::Index src = order[static_cast<std::size_t>(k)];
    out.eigenvalues[k] = solver.eigenvalues()[src];
    Eigen::VectorXd v = solver.eigenvectors().col(src);
    Eigen::Index arg = 0;
    for (Eigen::Index i = 1; i < n; ++i)
      if (std::abs(v[i]) > std::abs(v[arg]) + 1e-12) arg = i;
    if (v[arg] < 0.0) v = -v;
    out.eigenvectors.col(k) = v;
  }
  return out;
}

std::size_t select_sector_count(const EigenDecomposition& eig, const MPBounds& bounds,
                                std::optional<std::size_t> override_count) {
  const auto n = static_cast<std::size_t>(eig.eigenvalues.size());
  if (override_count) {
    if (*override_count >= n)
      throw ValidationError("sector count override must be below the number of stocks");
    return *override_count;
  }
  std::size_t k = 0;
  for (std::size_t a = 1; a < n; ++a)
    if (eig.eigenvalues[static_cast<Eigen::Index>(a)] > bounds.lambda_max) ++k;
  return k;
}

ModeDecomposition decompose_modes(const EigenDecomposition& eig, std::size_t k_sector) {
  const Eigen::Index n = eig.eigenvalues.size();
  if (n == 0) throw ValidationError("empty eigendecomposition");
  if (static_cast<Eigen::Index>(k_sector) > n - 1)
    throw ValidationError("k_sector must be at most N-1");
  auto outer = [&](Eigen::Index a) {
    const Eigen::VectorXd& u = eig.eigenvectors.col(a);
    return Eigen::MatrixXd(eig.eigenvalues[a] * u * u.transpose());
  };
  ModeDecomposition m;
  m.k_sector = k_sector;
  m.market = outer(0);
  m.sector = Eigen::MatrixXd::Zero(n, n);
  m.random = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index a = 1; a < n; ++a) {
    if (a <= static_cast<Eigen::Index>(k_sector))
      m.sector += outer(a);
    else
      m.random += outer(a);
  }
  return m;
}

}  // namespace specnet
