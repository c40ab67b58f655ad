#pragma once

#include <algorithm>
#include <complex>
#include <vector>

#include <Eigen/Eigenvalues>

#include "aes_series.hpp"
#include "errors.hpp"
#include "fock.hpp"

namespace qhd {

// G = exp(-mu sum_k (-z a+)^k/k! (a+)^2/(k+2)), lower triangular
inline FockOperator build_G(cplx mu, double z, const TruncationConfig& cfg) {
  return deformed_squeeze_operator(0.0, mu, z, cfg);
}

inline FockOperator build_G_inverse(cplx mu, double z, const TruncationConfig& cfg) {
  return deformed_squeeze_operator(0.0, -mu, z, cfg);
}

// A = a + mu a+ e^{-z a+}
inline FockOperator build_A(cplx mu, double z, const TruncationConfig& cfg) {
  std::vector<cplx> e(std::size_t(cfg.dim), cplx(0));
  double c = 1.0;
  for (int k = 0; k + 1 < cfg.dim; ++k) {
    if (k > 0) c *= -z / double(k);
    e[k + 1] = mu * c;
  }
  return annihilation(cfg) + creation_polynomial(e, cfg);
}

// H = a+ a + mu e^{-z a+} (a+)^2
inline FockOperator build_H(cplx mu, double z, const TruncationConfig& cfg) {
  std::vector<cplx> e(std::size_t(cfg.dim), cplx(0));
  double c = 1.0;
  for (int k = 0; k + 2 < cfg.dim; ++k) {
    if (k > 0) c *= -z / double(k);
    e[k + 2] = mu * c;
  }
  return number_operator(cfg) + creation_polynomial(e, cfg);
}

struct PseudoHermitianSystem {
  FockOperator G, G_inv, H, A_op, eta, rho_hat, rho_hat_inv;
  cplx mu;
  double z = 0;
  TruncationConfig cfg;
  double eta_condition = 1;
};

struct SpectrumReport {
  std::vector<cplx> eigenvalues;
  double max_deviation_from_integers = 0;
};

namespace detail {

inline FockOperator embed_block(const FockOperator& b, int dim) {
  FockOperator m = FockOperator::Identity(dim, dim);
  m.topLeftCorner(b.rows(), b.cols()) = b;
  return m;
}

}  // namespace detail

// eta and rho_hat live on the guarded block and are embedded with the identity
// on the guard levels
inline PseudoHermitianSystem build_system(cplx mu, double z, const TruncationConfig& cfg,
                                          double max_condition = 1e12) {
  cfg.validate();
  PseudoHermitianSystem s;
  s.mu = mu;
  s.z = z;
  s.cfg = cfg;
  s.G = build_G(mu, z, cfg);
  s.G_inv = build_G_inverse(mu, z, cfg);
  s.H = build_H(mu, z, cfg);
  s.A_op = build_A(mu, z, cfg);

  const int b = cfg.block();
  const FockOperator gi = s.G_inv.topLeftCorner(b, b);
  FockOperator eta_b = gi.adjoint() * gi;
  eta_b = (eta_b + eta_b.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<FockOperator> es(eta_b);
  const Eigen::VectorXd w = es.eigenvalues();
  if (!(w.minCoeff() > 0)) throw Error(ErrorKind::NotPositiveDefinite, "eta has a non-positive eigenvalue");
  s.eta_condition = w.maxCoeff() / w.minCoeff();
  if (!(s.eta_condition <= max_condition))
    throw Error(ErrorKind::IllConditioned, "eta condition number " + std::to_string(s.eta_condition));
  const FockOperator u = es.eigenvectors();
  const FockOperator rho_b = u * w.cwiseSqrt().cast<cplx>().asDiagonal() * u.adjoint();
  const FockOperator rho_inv_b = u * w.cwiseSqrt().cwiseInverse().cast<cplx>().asDiagonal() * u.adjoint();
  s.eta = detail::embed_block(eta_b, cfg.dim);
  s.rho_hat = detail::embed_block(rho_b, cfg.dim);
  s.rho_hat_inv = detail::embed_block(rho_inv_b, cfg.dim);
  return s;
}

inline double intertwining_residual(const PseudoHermitianSystem& s) {
  return guarded_norm(s.H * s.G - s.G * number_operator(s.cfg), s.cfg);
}

inline double similarity_residual(const PseudoHermitianSystem& s) {
  return guarded_norm(s.H - s.G * number_operator(s.cfg) * s.G_inv, s.cfg);
}

// G a+ G^-1 - a+ and G a G^-1 - A
inline std::pair<double, double> conjugation_residuals(const PseudoHermitianSystem& s) {
  const FockOperator ad = creation(s.cfg), a = annihilation(s.cfg);
  return {guarded_norm(s.G * ad * s.G_inv - ad, s.cfg), guarded_norm(s.G * a * s.G_inv - s.A_op, s.cfg)};
}

inline double pseudo_hermiticity_residual(const PseudoHermitianSystem& s) {
  const int b = s.cfg.block();
  const FockOperator eta_inv = detail::embed_block(
      s.rho_hat_inv.topLeftCorner(b, b) * s.rho_hat_inv.topLeftCorner(b, b), s.cfg.dim);
  return guarded_norm(s.H.adjoint() - s.eta * s.H * eta_inv, s.cfg);
}

struct CommutatorResiduals {
  double h_a = 0, h_adag = 0, a_adag = 0;
};

// [H, A] + A, [H, a+] - a+, [A, a+] - I
inline CommutatorResiduals commutator_checks(const PseudoHermitianSystem& s) {
  const FockOperator ad = creation(s.cfg);
  CommutatorResiduals r;
  r.h_a = guarded_norm(commutator(s.H, s.A_op) + s.A_op, s.cfg);
  r.h_adag = guarded_norm(commutator(s.H, ad) - ad, s.cfg);
  r.a_adag = guarded_norm(commutator(s.A_op, ad) - identity(s.cfg), s.cfg);
  return r;
}

inline FockVector ground_state(const PseudoHermitianSystem& s) {
  FockVector v = s.G.col(0);
  check_tail(v, s.cfg, "ground_state");
  return normalize(v);
}

inline FockOperator rho_hat(const PseudoHermitianSystem& s) { return s.rho_hat; }

inline FockOperator hermitian_hamiltonian(const PseudoHermitianSystem& s) {
  return s.rho_hat * s.H * s.rho_hat_inv;
}

// (rho G)^+ (rho G) - I restricted to the guarded block
inline double unitarity_check(const PseudoHermitianSystem& s) {
  const int b = s.cfg.block();
  const FockOperator u = s.rho_hat.topLeftCorner(b, b) * s.G.topLeftCorner(b, b);
  return (u.adjoint() * u - FockOperator::Identity(b, b)).jacobiSvd().singularValues()(0);
}

// eigenstate of rho A rho^-1 with eigenvalue nu
inline FockVector generalized_coherent_state(cplx nu, const PseudoHermitianSystem& s) {
  FockVector v = s.rho_hat * (s.G * (displacement_operator(nu, s.cfg) * basis_state(0, s.cfg)));
  check_tail(v, s.cfg, "generalized_coherent_state");
  return normalize(v);
}

// A|psi> = -nu |psi> through G e^{-nu a+}|0>
inline FockVector lambda_zero_eigenstate(cplx nu, const PseudoHermitianSystem& s) {
  FockVector seed = FockVector::Zero(s.cfg.dim);
  seed(0) = 1.0;
  for (int n = 1; n < s.cfg.dim; ++n) seed(n) = seed(n - 1) * (-nu) / std::sqrt(double(n));
  FockVector v = s.G * seed;
  check_tail(v, s.cfg, "lambda_zero_eigenstate");
  return normalize(v);
}

// triangular input: the diagonal is the spectrum; otherwise a general eigensolve
inline SpectrumReport spectrum(const FockOperator& m) {
  SpectrumReport r;
  bool lower = true, upper = true;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      if (j > i && m(i, j) != cplx(0)) lower = false;
      if (j < i && m(i, j) != cplx(0)) upper = false;
    }
  if (lower || upper) {
    for (int i = 0; i < m.rows(); ++i) r.eigenvalues.push_back(m(i, i));
  } else {
    Eigen::ComplexEigenSolver<FockOperator> es(m, false);
    for (int i = 0; i < m.rows(); ++i) r.eigenvalues.push_back(es.eigenvalues()(i));
  }
  std::sort(r.eigenvalues.begin(), r.eigenvalues.end(),
            [](cplx x, cplx y) { return x.real() < y.real() || (x.real() == y.real() && x.imag() < y.imag()); });
  for (std::size_t i = 0; i < r.eigenvalues.size(); ++i)
    r.max_deviation_from_integers = std::max(r.max_deviation_from_integers, std::abs(r.eigenvalues[i] - double(i)));
  return r;
}

inline SpectrumReport hermitian_block_spectrum(const PseudoHermitianSystem& s) {
  const int b = s.cfg.block();
  FockOperator h = hermitian_hamiltonian(s).topLeftCorner(b, b);
  if (FockOperator(h.triangularView<Eigen::StrictlyLower>()).isZero(0) ||
      FockOperator(h.triangularView<Eigen::StrictlyUpper>()).isZero(0))
    return spectrum(h);
  h = (h + h.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<FockOperator> es(h, Eigen::EigenvaluesOnly);
  SpectrumReport r;
  for (int i = 0; i < b; ++i) {
    r.eigenvalues.push_back(es.eigenvalues()(i));
    r.max_deviation_from_integers = std::max(r.max_deviation_from_integers, std::abs(es.eigenvalues()(i) - i));
  }
  return r;
}

// z = 0: principal square root of exp(conj(mu) a^2/2) exp(mu (a+)^2/2) on the guarded block
inline FockOperator rho_hat_gaussian_product(cplx mu, const TruncationConfig& cfg) {
  const FockOperator a2 = annihilation(cfg) * annihilation(cfg);
  const FockOperator ad2 = creation(cfg) * creation(cfg);
  const int b = cfg.block();
  FockOperator pb = nilpotent_exp(std::conj(mu) / 2.0 * a2, cfg).topLeftCorner(b, b) *
                    nilpotent_exp(mu / 2.0 * ad2, cfg).topLeftCorner(b, b);
  pb = (pb + pb.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<FockOperator> es(pb);
  if (!(es.eigenvalues().minCoeff() > 0))
    throw Error(ErrorKind::NotPositiveDefinite, "Gaussian product is not positive definite");
  const FockOperator u = es.eigenvectors();
  return detail::embed_block(u * es.eigenvalues().cwiseSqrt().cast<cplx>().asDiagonal() * u.adjoint(), cfg.dim);
}

}  // namespace qhd
