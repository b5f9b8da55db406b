#include "k3ball/eigen_ball.hpp"
#include "k3ball/models.hpp"

#include <doctest.h>

#include <Eigen/Dense>

#include <numbers>

using namespace k3ball;

namespace {

Eigen::MatrixXcd to_complex(const CycMatrix& m) {
  Eigen::MatrixXcd out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j).embed();
  return out;
}

}  // namespace

TEST_CASE("eigenspaces agree with a floating eigensolver") {
  IntLattice t = model("T");
  Eigen::MatrixXd r(12, 12);
  const Isometry rho_iso = rho();
  const IntMatrix& rm = rho_iso.matrix();
  for (int i = 0; i < 12; ++i)
    for (int j = 0; j < 12; ++j) r(i, j) = rm(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).convert_to<double>();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(r.cast<std::complex<double>>());
  for (int k = 1; k <= 4; ++k) {
    CAPTURE(k);
    std::complex<double> lambda = std::polar(1.0, 4 * std::numbers::pi * k / 5);
    int mult = 0;
    for (int i = 0; i < 12; ++i) mult += std::abs(es.eigenvalues()(i) - lambda) < 1e-8;
    EigenBasis b = eigenspace(k);
    CHECK(static_cast<int>(b.basis.size()) == mult);
    // Signature from floating eigenvalues of the embedded hermitian matrix.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> hs(to_complex(eigen_form(b).matrix));
    int pos = 0, neg = 0;
    for (int i = 0; i < hs.eigenvalues().size(); ++i) {
      pos += hs.eigenvalues()(i) > 1e-9;
      neg += hs.eigenvalues()(i) < -1e-9;
    }
    Signature s = eigen_signature(eigen_form(b));
    CHECK(s.positive == pos);
    CHECK(s.negative == neg);
  }
  CHECK_THROWS_AS(eigenspace(0), std::invalid_argument);
  CHECK_THROWS_AS(eigenspace(5), std::invalid_argument);
}

TEST_CASE("signature handles zero diagonals and rejects non-hermitian input") {
  CycMatrix hyp(2, 2);
  hyp(0, 1) = Cyclotomic::zeta();
  hyp(1, 0) = Cyclotomic::zeta().conj();
  Signature s = eigen_signature(EigenForm{hyp});
  CHECK(s.positive == 1);
  CHECK(s.negative == 1);
  CycMatrix bad(2, 2);
  bad(0, 1) = Cyclotomic::zeta();
  bad(1, 0) = Cyclotomic::zeta();
  CHECK_THROWS_AS(eigen_signature(EigenForm{bad}), std::invalid_argument);
  CycMatrix degenerate(2, 2);
  degenerate(0, 0) = Cyclotomic(1);
  CHECK(eigen_signature(EigenForm{degenerate}).zero == 1);
}

TEST_CASE("diagonal eigenbasis") {
  auto b = diagonal_eigenbasis();
  REQUIRE(b.size() == 3);
  EigenForm f = eigen_form(b);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j) CHECK(f.matrix(i, j).is_zero());
  CHECK(std::abs(f.matrix(0, 0).embed() - std::complex<double>((std::sqrt(5.0) - 1) / 2)) < 1e-12);
  CHECK_THROWS_AS(xi_vector(2), std::invalid_argument);
}

TEST_CASE("ball membership") {
  CHECK(ball_contains(BallPoint::exact({Cyclotomic(1), Cyclotomic(0), Cyclotomic(0)})));
  CHECK_FALSE(ball_contains(BallPoint::exact({Cyclotomic(0), Cyclotomic(1), Cyclotomic(1)})));
  // |mu|^2 g - |xi|^2 with g = 0.618...: (1, 1/2, 0) inside, (1, 1, 0) outside.
  CHECK(ball_contains(BallPoint::exact({Cyclotomic(1), Cyclotomic(Rational(1, 2)), Cyclotomic(0)})));
  CHECK_FALSE(ball_contains(BallPoint::exact({Cyclotomic(1), Cyclotomic(1), Cyclotomic(0)})));
  CHECK_THROWS_AS(ball_contains(BallPoint::exact({Cyclotomic(0), Cyclotomic(0), Cyclotomic(0)})), std::invalid_argument);
  CHECK_THROWS_AS(BallPoint::exact({Cyclotomic(1)}), std::invalid_argument);
  // Boundary point |z0|^2 g = |z1|^2 in numeric mode is indeterminate.
  double g = (std::sqrt(5.0) - 1) / 2;
  CHECK_THROWS_AS(ball_contains(BallPoint::numeric({1.0, std::sqrt(g), 0.0})), IndeterminateError);
  CHECK(ball_contains(BallPoint::numeric({1.0, 0.1, 0.2})));
}

TEST_CASE("hyperplanes") {
  IntLattice t = model("T");
  LatticeVec r = t.unit(tbasis::a4(0, 1));
  CHECK(hyperplane_contains(r, BallPoint::exact({Cyclotomic(1), Cyclotomic(0), Cyclotomic(3)})));
  CHECK_FALSE(hyperplane_contains(r, BallPoint::exact({Cyclotomic(1), Cyclotomic(1), Cyclotomic(0)})));
  CHECK(hyperplane_contains(r, BallPoint::numeric({1.0, 0.0, 2.0})));
  CHECK_THROWS_AS(hyperplane_contains(t.unit(tbasis::e), BallPoint::exact({Cyclotomic(1), Cyclotomic(0), Cyclotomic(0)})),
                  std::invalid_argument);
}
