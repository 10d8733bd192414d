#include <doctest.h>

#include <cmath>

#include "specnet/error.hpp"
#include "specnet/spectral.hpp"
#include "specnet/synthetic.hpp"
#include "support.hpp"

using namespace specnet;

namespace {

/// Simpson's rule on lambda = a + (b - a)(1 - cos phi)/2, which removes the
/// square-root behaviour at both edges.
double mp_mass(const MPBounds& b, int steps = 4000) {
  const double a = b.lambda_min, c = b.lambda_max;
  auto f = [&](double phi) {
    const double lambda = a + (c - a) * (1.0 - std::cos(phi)) / 2.0;
    const double jac = (c - a) * std::sin(phi) / 2.0;
    return lambda > 0.0 ? mp_density(lambda, b) * jac : 0.0;
  };
  const double h = M_PI / steps;
  double s = f(0.0) + f(M_PI);
  for (int k = 1; k < steps; ++k) s += (k % 2 ? 4.0 : 2.0) * f(k * h);
  return s * h / 3.0;
}

}  // namespace

TEST_CASE("correlation of hand-built pairs") {
  auto c = correlation_matrix(testkit::panel_of({{1, -1, 1, -1}, {-1, 1, -1, 1}}));
  CHECK(c.values(0, 1) == doctest::Approx(-1.0));
  c = correlation_matrix(testkit::panel_of({{1, 2, 3}, {1, 2, 3}}));
  CHECK(c.values(0, 1) == doctest::Approx(1.0));
  c = correlation_matrix(testkit::panel_of({{1, 2, 3}, {1, 3, 2}}));
  CHECK(c.values(0, 1) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(c.values(0, 0) == 1.0);
  CHECK(c.labels == std::vector<std::string>{"A", "B"});
}

TEST_CASE("zero-variance series is named in the error") {
  CHECK_THROWS_WITH_AS(correlation_matrix(testkit::panel_of({{1, 2, 3}, {4, 4, 4}})),
                       doctest::Contains("B"), ValidationError);
}

TEST_CASE("property: correlation matrices are valid") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    testkit::Gen g(seed);
    const int n = 3 + g.below(20), t = n + 5 + g.below(50);
    std::vector<std::vector<double>> rows(static_cast<std::size_t>(n));
    const double common = g.unit();
    std::vector<double> f(static_cast<std::size_t>(t));
    for (auto& x : f) x = g.normal();
    for (auto& r : rows)
      for (int k = 0; k < t; ++k) r.push_back(common * f[static_cast<std::size_t>(k)] + g.normal());
    const auto c = correlation_matrix(testkit::panel_of(rows)).values;
    CHECK((c - c.transpose()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(c.diagonal().isOnes());
    CHECK(c.cwiseAbs().maxCoeff() <= 1.0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(c);
    CHECK(es.eigenvalues().minCoeff() > -1e-10);
  }
}

TEST_CASE("mp bounds for both variants") {
  auto b = mp_bounds(100, 400);
  CHECK(b.q == 4.0);
  CHECK(b.lambda_min == doctest::Approx(0.25));
  CHECK(b.lambda_max == doctest::Approx(2.25));
  b = mp_bounds(100, 200, MpVariant::paper_literal);
  CHECK(b.lambda_min == doctest::Approx(0.0));
  CHECK(b.lambda_max == doctest::Approx(4.0));
  b = mp_bounds(50, 50);
  CHECK(b.lambda_min == doctest::Approx(0.0));
  CHECK(b.lambda_max == doctest::Approx(4.0));
  CHECK_THROWS_AS(mp_bounds(100, 99), ValidationError);
  CHECK(mp_variant_from_string(to_string(MpVariant::paper_literal)) == MpVariant::paper_literal);
}

TEST_CASE("mp density values and normalisation") {
  const auto b = mp_bounds(100, 400);
  CHECK(mp_density(b.lambda_max, b) == 0.0);
  CHECK(mp_density(b.lambda_max + 1.0, b) == 0.0);
  CHECK(mp_density(1.0, b) == doctest::Approx(4.0 * std::sqrt(0.9375) / (2.0 * M_PI)));
  CHECK(mp_density(1.0, b) == doctest::Approx(0.61640).epsilon(1e-4));
  for (std::size_t t : {100, 150, 400, 1000, 5000}) CHECK(std::abs(mp_mass(mp_bounds(100, t)) - 1.0) < 1e-3);
  // Q = 1 puts the lower edge at 0, inside the support
  CHECK_THROWS_AS(mp_density(0.0, mp_bounds(10, 10)), ValidationError);
}

TEST_CASE("2x2 eigensystem matches the analytic one") {
  for (double c : {0.5, -0.3, 0.9}) {
    Eigen::Matrix2d m;
    m << 1, c, c, 1;
    const auto e = eigendecompose(Eigen::MatrixXd(m));
    const double hi = 1 + std::abs(c), lo = 1 - std::abs(c);
    CHECK(e.eigenvalues(0) == doctest::Approx(hi));
    CHECK(e.eigenvalues(1) == doctest::Approx(lo));
    const double r = 1.0 / std::sqrt(2.0);
    const Eigen::Vector2d top = c > 0 ? Eigen::Vector2d(r, r) : Eigen::Vector2d(r, -r);
    CHECK(std::abs(std::abs(e.eigenvectors.col(0).dot(top)) - 1.0) < 1e-12);
    // sign convention: largest-magnitude component is nonnegative
    for (int a = 0; a < 2; ++a) {
      Eigen::Index idx;
      e.eigenvectors.col(a).cwiseAbs().maxCoeff(&idx);
      CHECK(e.eigenvectors(idx, a) >= 0.0);
    }
  }
  const auto id = eigendecompose(Eigen::MatrixXd(Eigen::MatrixXd::Identity(5, 5)));
  CHECK((id.eigenvalues.array() - 1.0).abs().maxCoeff() < 1e-14);
}

TEST_CASE("property: eigendecomposition reconstructs and is orthonormal") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    testkit::Gen g(seed);
    const auto panel = gaussian_panel(5 + g.below(30), 80, seed);
    const auto c = correlation_matrix(panel);
    const auto e = eigendecompose(c);
    for (long a = 1; a < e.eigenvalues.size(); ++a) CHECK(e.eigenvalues(a) <= e.eigenvalues(a - 1));
    const Eigen::MatrixXd rec = e.eigenvectors * e.eigenvalues.asDiagonal() * e.eigenvectors.transpose();
    CHECK((rec - c.values).cwiseAbs().maxCoeff() < 1e-8);
    const long n = e.eigenvectors.cols();
    CHECK((e.eigenvectors.transpose() * e.eigenvectors - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-8);
  }
}

TEST_CASE("sector count by threshold or override") {
  EigenDecomposition e;
  e.eigenvalues.resize(5);
  e.eigenvalues << 10, 3, 2.5, 1, 0.5;
  e.eigenvectors = Eigen::MatrixXd::Identity(5, 5);
  MPBounds b;
  b.lambda_max = 2.25;
  CHECK(select_sector_count(e, b) == 2);
  b.lambda_max = 5.0;
  CHECK(select_sector_count(e, b) == 0);
  CHECK(select_sector_count(e, b, 3) == 3);
  CHECK_THROWS_AS(select_sector_count(e, b, 5), ValidationError);
}

TEST_CASE("mode decomposition of the 2x2 case") {
  Eigen::Matrix2d m;
  m << 1, 0.5, 0.5, 1;
  const auto e = eigendecompose(Eigen::MatrixXd(m));
  const auto d = decompose_modes(e, 0);
  CHECK((d.market.array() - 0.75).abs().maxCoeff() < 1e-12);
  CHECK(d.sector.isZero());
  CHECK(((d.random - (Eigen::MatrixXd(m) - d.market))).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("property: mode matrices are symmetric and complete") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    SyntheticMarketSpec s;
    s.n = 20;
    s.t = 120;
    s.seed = seed;
    const auto c = correlation_matrix(synthetic_market(s));
    const auto e = eigendecompose(c);
    const auto k = select_sector_count(e, mp_bounds(20, 120));
    const auto d = decompose_modes(e, k);
    CHECK(d.k_sector == k);
    CHECK((d.market + d.sector + d.random - c.values).cwiseAbs().maxCoeff() < 1e-8);
    CHECK(d.market.trace() + d.sector.trace() + d.random.trace() == doctest::Approx(20.0).epsilon(1e-10));
    for (const auto* x : {&d.market, &d.sector, &d.random}) CHECK((*x - x->transpose()).cwiseAbs().maxCoeff() < 1e-12);
    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(d.market);
    CHECK(svd.singularValues()(1) < 1e-8 * svd.singularValues()(0));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(d.market);
    CHECK(es.eigenvalues().minCoeff() > -1e-10);
  }
}
