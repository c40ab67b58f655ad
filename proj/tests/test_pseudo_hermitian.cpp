#include <catch_amalgamated.hpp>

#include <unsupported/Eigen/MatrixFunctions>

#include "qhd/pseudo_hermitian.hpp"

using namespace qhd;
using Catch::Approx;

namespace {

FockOperator g_exponent(cplx mu, double z, const TruncationConfig& cfg) {
  const FockOperator ad = creation(cfg);
  FockOperator e = FockOperator::Zero(cfg.dim, cfg.dim), p = ad * ad;
  double c = 1;
  for (int k = 0; k + 2 < cfg.dim; ++k) {
    if (k > 0) c *= -z / k;
    e += -mu * c / double(k + 2) * p;
    p = ad * p;
  }
  return e;
}

}  // namespace

TEST_CASE("G against the general matrix exponential") {
  TruncationConfig cfg = TruncationConfig::with_dim(32);
  for (auto [mu, z] : {std::pair<cplx, double>{0.2, 0.02}, {cplx(0.1, -0.25), -0.08}, {0.3, 0.0}}) {
    const FockOperator g = build_G(mu, z, cfg);
    CHECK((g - g_exponent(mu, z, cfg).exp()).norm() / g.norm() < 1e-12);
    CHECK((g * build_G_inverse(mu, z, cfg) - identity(cfg)).norm() < 1e-12);
    for (int i = 0; i < cfg.dim; ++i) {
      CHECK(g(i, i) == cplx(1));
      for (int j = i + 1; j < cfg.dim; ++j) CHECK(g(i, j) == cplx(0));
    }
  }
  const FockOperator ad = creation(cfg);
  CHECK((build_G(0.3, 0, cfg) - (-0.15 * ad * ad).exp()).norm() < 1e-12);
}

TEST_CASE("H structure and spectrum") {
  TruncationConfig cfg = TruncationConfig::with_dim(48);
  CHECK(build_H(0.0, 0.05, cfg) == number_operator(cfg));
  const FockOperator ad = creation(cfg);
  CHECK((build_H(0.2, 0, cfg) - number_operator(cfg) - 0.2 * ad * ad).norm() < 1e-15);
  for (auto [mu, z] : {std::pair<cplx, double>{0.2, 0.02}, {cplx(0.2, 0.2), 0.1}, {0.3, -0.1}}) {
    const FockOperator h = build_H(mu, z, cfg);
    for (int i = 0; i < cfg.dim; ++i)
      for (int j = i + 1; j < cfg.dim; ++j) CHECK(h(i, j) == cplx(0));
    SpectrumReport sp = spectrum(h);
    REQUIRE(sp.eigenvalues.size() == 48);
    CHECK(sp.max_deviation_from_integers == 0);
    CHECK((h - creation(cfg) * build_A(mu, z, cfg)).norm() < 1e-13);
  }
  SpectrumReport gen = spectrum(number_operator(cfg) + annihilation(cfg) * 1e-3 + creation(cfg) * 1e-3);
  CHECK(gen.max_deviation_from_integers > 0);
  CHECK(gen.max_deviation_from_integers < 1e-4);
}

TEST_CASE("intertwining and conjugation") {
  TruncationConfig cfg = TruncationConfig::with_dim(48);
  for (auto [mu, z] : {std::pair<cplx, double>{0, 0}, {0.2, 0.02}, {0.3, 0.05}, {cplx(0, 0.3), -0.1}}) {
    PseudoHermitianSystem s = build_system(mu, z, cfg);
    CHECK(intertwining_residual(s) < 1e-9);
    CHECK(similarity_residual(s) < 1e-9);
    auto [r_ad, r_a] = conjugation_residuals(s);
    CHECK(r_ad < 1e-10);
    CHECK(r_a < 1e-10);
    CommutatorResiduals c = commutator_checks(s);
    CHECK(c.h_a < 1e-8);
    CHECK(c.h_adag < 1e-8);
    CHECK(c.a_adag < 1e-10);
  }
}

TEST_CASE("metric and pseudo-Hermiticity") {
  TruncationConfig cfg = TruncationConfig::with_dim(48);
  PseudoHermitianSystem s0 = build_system(0.0, 0.0, cfg);
  CHECK(pseudo_hermiticity_residual(s0) == 0);
  CHECK(s0.eta == identity(cfg));
  CHECK(s0.rho_hat == identity(cfg));

  PseudoHermitianSystem s = build_system(0.3, 0.05, cfg);
  CHECK(pseudo_hermiticity_residual(s) < 1e-7);
  CHECK((s.eta - s.eta.adjoint()).norm() == 0);
  const int b = cfg.block();
  const FockOperator rb = s.rho_hat.topLeftCorner(b, b);
  const FockOperator oracle = FockOperator(s.eta.topLeftCorner(b, b)).sqrt();
  CHECK((rb - oracle).norm() / rb.norm() < 1e-8);
  CHECK((rb * rb - s.eta.topLeftCorner(b, b)).norm() / s.eta.norm() < 1e-12);
  CHECK((rb * s.rho_hat_inv.topLeftCorner(b, b) - FockOperator::Identity(b, b)).norm() < 1e-6);

  for (double mr : {-0.3, 0.1, 0.3})
    for (double mi : {-0.2, 0.0, 0.2})
      for (double z : {-0.1, 0.0, 0.1}) {
        PseudoHermitianSystem t = build_system(cplx(mr, mi), z, cfg);
        Eigen::SelfAdjointEigenSolver<FockOperator> es(t.eta.topLeftCorner(b, b));
        CHECK(es.eigenvalues().minCoeff() > 0);
        CHECK(t.eta_condition < 1e10);
      }

  CHECK_THROWS_AS(build_system(0.3, 0.05, cfg, 10.0), Error);
}

TEST_CASE("Hermitian image and unitarity") {
  TruncationConfig cfg = TruncationConfig::with_dim(48);
  PseudoHermitianSystem s0 = build_system(0.0, 0.0, cfg);
  CHECK(hermitian_hamiltonian(s0) == number_operator(cfg));

  PseudoHermitianSystem s = build_system(0.2, 0.02, cfg);
  const FockOperator ht = hermitian_hamiltonian(s);
  CHECK(guarded_norm(ht - ht.adjoint(), cfg) < 1e-7);
  CHECK(unitarity_check(s) < 1e-6);
  SpectrumReport sp = hermitian_block_spectrum(s);
  CHECK(sp.eigenvalues.size() == std::size_t(cfg.block()));
  CHECK(sp.max_deviation_from_integers < 1e-5);

  // z = 0: similarity image of a+ a + mu (a+)^2 and the Gaussian-product square root
  PseudoHermitianSystem z0 = build_system(0.2, 0.0, cfg);
  const FockOperator ad = creation(cfg);
  const int b = cfg.block();
  const FockOperator two_photon = (number_operator(cfg) + 0.2 * ad * ad).topLeftCorner(b, b);
  const FockOperator image = z0.rho_hat.topLeftCorner(b, b) * two_photon * z0.rho_hat_inv.topLeftCorner(b, b);
  CHECK((image - hermitian_hamiltonian(z0).topLeftCorner(b, b)).norm() < 1e-8);
  CHECK((rho_hat_gaussian_product(0.2, cfg) - z0.rho_hat).norm() < 1e-10);
}

TEST_CASE("ground state and coherent states") {
  TruncationConfig cfg = TruncationConfig::with_dim(48);
  CHECK(ground_state(build_system(0.0, 0.0, cfg)) == basis_state(0, cfg));
  PseudoHermitianSystem s = build_system(0.2, 0.02, cfg);
  FockVector e0 = ground_state(s);
  CHECK(guarded_vec_norm(s.H * e0, cfg) < 1e-9);
  CHECK(guarded_vec_norm(s.A_op * e0, cfg) < 1e-9);
  DeformationParams d;
  d.mu = 0.2;
  d.z = 0.02;
  CHECK((e0 - deformed_squeezed_state(d, cfg)).norm() < 1e-12);

  FockVector g = generalized_coherent_state(0.5, s);
  const FockOperator at = s.rho_hat * s.A_op * s.rho_hat_inv;
  CHECK(guarded_vec_norm(at * g - 0.5 * g, cfg) < 1e-7);
  CHECK(std::abs(g.norm() - 1) < 1e-14);

  PseudoHermitianSystem s0 = build_system(0.0, 0.0, cfg);
  CHECK(generalized_coherent_state(0.0, s0).isApprox(basis_state(0, cfg)));
  const cplx nu(0.4, -0.3);
  CHECK((generalized_coherent_state(nu, s0) - normalize(coherent_state(nu, cfg))).norm() < 1e-12);

  for (cplx n : {cplx(0.4, 0.2), cplx(-1.0, 0.5)}) {
    FockVector l = lambda_zero_eigenstate(n, s);
    CHECK(guarded_vec_norm(s.A_op * l + n * l, cfg) < 1e-9);
  }
}
