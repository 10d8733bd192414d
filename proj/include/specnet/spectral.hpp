#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "specnet/market_data.hpp"

namespace specnet {

/// Selects the serial reference kernel or the OpenMP one. Both produce
/// bit-identical output.
enum class Exec { serial, parallel };

struct CorrelationMatrix {
  std::vector<std::string> labels;
  Eigen::MatrixXd values;

  std::size_t size() const { return labels.size(); }
};

/// Pearson correlation of every pair of rows.
CorrelationMatrix correlation_matrix(const ReturnPanel& panel, Exec exec = Exec::parallel);

enum class MpVariant {
  standard,      ///< (1 +- sqrt(1/Q))^2
  paper_literal  ///< (1 +- sqrt(Q/2))^2
};

std::string to_string(MpVariant v);
MpVariant mp_variant_from_string(const std::string& s);

/// Marchenko-Pastur support for Q = T/N.
struct MPBounds {
  double q = 1.0;
  double lambda_min = 0.0;
  double lambda_max = 0.0;
  MpVariant variant = MpVariant::standard;
};

MPBounds mp_bounds(std::size_t n, std::size_t t, MpVariant variant = MpVariant::standard);

/// Eigenvalue density of a random correlation matrix; zero off-support.
double mp_density(double lambda, const MPBounds& bounds);

struct EigenDecomposition {
  Eigen::VectorXd eigenvalues;   ///< descending
  Eigen::MatrixXd eigenvectors;  ///< column a pairs with eigenvalues[a]
};

/// Symmetric eigendecomposition, sorted descending. Each eigenvector is signed so
/// that its largest-magnitude component (lowest index on ties) is nonnegative.
EigenDecomposition eigendecompose(const CorrelationMatrix& c);
EigenDecomposition eigendecompose(const Eigen::MatrixXd& c);

/// Number of eigenvalues after the largest that exceed lambda_max, unless
/// `override_count` is given.
std::size_t select_sector_count(const EigenDecomposition& eig, const MPBounds& bounds,
                                std::optional<std::size_t> override_count = std::nullopt);

/// Market (rank one, largest mode), sector (next k modes) and random (rest).
struct ModeDecomposition {
  Eigen::MatrixXd market;
  Eigen::MatrixXd sector;
  Eigen::MatrixXd random;
  std::size_t k_sector = 0;
};

ModeDecomposition decompose_modes(const EigenDecomposition& eig, std::size_t k_sector);

}  // namespace specnet
