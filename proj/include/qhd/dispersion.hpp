#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "aes_series.hpp"
#include "fock.hpp"
#include "gaussian_moments.hpp"

namespace qhd {

struct QuadratureStats {
  double mean_x = 0, mean_p = 0;
  double var_x = 0, var_p = 0;
  double corr_f = 0;
  double srur_bound = 0.25;
  double product = 0;

  void finish() {
    srur_bound = (1 + corr_f * corr_f) / 4;
    product = var_x * var_p;
  }
};

inline FockOperator position_operator(const TruncationConfig& cfg) {
  return (annihilation(cfg) + creation(cfg)) / std::sqrt(2.0);
}

inline FockOperator momentum_operator(const TruncationConfig& cfg) {
  return cplx(0, 1) * (creation(cfg) - annihilation(cfg)) / std::sqrt(2.0);
}

inline QuadratureStats quadrature_stats(const FockVector& state, const TruncationConfig& cfg) {
  check_tail(state, cfg, "quadrature_stats");
  const FockVector v = normalize(state);
  const FockOperator x = position_operator(cfg), p = momentum_operator(cfg);
  const FockVector xv = x * v, pv = p * v;
  QuadratureStats s;
  s.mean_x = v.dot(xv).real();
  s.mean_p = v.dot(pv).real();
  s.var_x = xv.squaredNorm() - s.mean_x * s.mean_x;
  s.var_p = pv.squaredNorm() - s.mean_p * s.mean_p;
  // <XP + PX> = 2 Re <Xv, Pv>
  s.corr_f = 2 * xv.dot(pv).real() - 2 * s.mean_x * s.mean_p;
  s.finish();
  return s;
}

// dispersions of the standard squeezed states, independent of lambda
inline std::pair<double, double> mus_dispersions(double delta, double phi) {
  if (!(delta >= 0 && delta < 1)) throw Error(ErrorKind::BadParams, "delta must lie in [0,1)");
  const double d2 = delta * delta, den = 2 * (1 - d2);
  return {(1 - 2 * delta * std::cos(phi) + d2) / den, (1 + 2 * delta * std::cos(phi) + d2) / den};
}

// ---------------------------------------------------------------------------
// first-order moments of Omega (1 + K) S D|0> at gamma = 0

struct PerturbedMoments {
  double mean_x_sq = 0, x2_mean = 0;
  double mean_p_sq = 0, p2_mean = 0;
  double var_x = 0, var_p = 0;
};

// transcription of the closed first-order formulas
inline PerturbedMoments perturbed_moments(double delta, double phi, double beta, double theta, double z, double p,
                                          OmegaForm form = OmegaForm::Derived) {
  const MatrixElementTable t = matrix_element_table(5, delta, phi, beta, theta);
  const auto& G = t.gamma;
  const auto& L = t.lambda_elem;
  const double eps = omega_tilde(delta, phi, beta, theta, 0, 0, z, p, form) - 1;
  const cplx md = std::polar(delta, -phi), mu = std::polar(delta, phi);
  const cplx lb = std::polar(beta, -theta), lam = std::polar(beta, theta);
  const double p2 = p * p;

  const cplx mean_core = (1 + 4 * eps) * G[0][1] +
                         2 * z * (md / 3.0 * G[0][4] - lb / 2.0 * G[0][3] + mu / 3.0 * L[1][3] - lam / 2.0 * L[1][2]) +
                         p2 / 2 * (md / 4.0 * G[0][3] - lb / 2.0 * G[0][2] + mu / 4.0 * L[1][2] - lam / 2.0 * L[1][1]);

  const cplx sq_z = md / 3.0 * G[0][5] - lb / 2.0 * G[0][4] + mu / 3.0 * L[2][3] - lam / 2.0 * L[2][2];
  const cplx sq_p = md / 4.0 * G[0][4] - lb / 2.0 * G[0][3] + mu / 4.0 * L[2][2] - lam / 2.0 * L[2][1];
  const cplx num_z = md / 3.0 * (L[4][1] - G[0][3]) - lb / 2.0 * (L[3][1] - G[0][2]) +
                     mu / 3.0 * (L[1][4] - L[0][3]) - lam / 2.0 * (L[1][3] - L[0][2]);
  const cplx num_p = md / 4.0 * (L[3][1] - G[0][2]) - lb / 2.0 * (L[2][1] - G[0][1]) +
                     mu / 4.0 * (L[1][3] - L[0][2]) - lam / 2.0 * (L[1][2] - L[0][1]);

  PerturbedMoments m;
  m.mean_x_sq = 2 * G[0][1].real() * mean_core.real();
  m.mean_p_sq = 2 * G[0][1].imag() * mean_core.imag();
  const double common = (z * num_z + p2 / 4 * num_p).real();
  const double re_part = (1 + 2 * eps) * G[0][2].real() + z * sq_z.real() + p2 / 4 * sq_p.real();
  m.x2_mean = 0.5 + (1 + 2 * eps) * G[1][1].real() + re_part + common;
  m.p2_mean = 0.5 + (1 + 2 * eps) * G[1][1].real() - re_part + common;
  m.var_x = m.x2_mean - m.mean_x_sq;
  m.var_p = m.p2_mean - m.mean_p_sq;
  return m;
}

namespace detail {

// <O> in Omega (1 + K) psi_0 to first order: (1 + 2 eps) <O> + <O K> + conj <O+ K>
struct FirstOrderMoments {
  cplx a0, da;        // <a> and its first-order shift
  cplx a2_0, da2;     // <a^2>
  double n0, dn;      // <a+ a>
};

inline FirstOrderMoments first_order_moments(double delta, double phi, double beta, double theta, double gamma,
                                             double eta, double z, double p, OmegaForm form) {
  const TiltedDisplacement td = tilted_displacement(beta, theta, gamma, eta);
  const MatrixElementTable t = matrix_element_table(6, delta, phi, td.beta, td.theta);
  const auto& L = t.lambda_elem;
  const std::vector<cplx> k = first_order_kernel(delta, phi, beta, theta, gamma, eta, z, p);
  const double eps = omega_tilde(delta, phi, beta, theta, gamma, eta, z, p, form) - 1;
  FirstOrderMoments f;
  f.a0 = t.gamma[0][1];
  f.a2_0 = t.gamma[0][2];
  f.n0 = t.gamma[1][1].real();
  cplx ak = 0, adk = 0, a2k = 0, ad2k = 0, nk = 0;
  for (int m = 1; m <= 3; ++m) {
    ak += k[m] * L[1][m];
    adk += k[m] * L[0][m + 1];
    a2k += k[m] * L[2][m];
    ad2k += k[m] * L[0][m + 2];
    nk += k[m] * (L[1][m + 1] - L[0][m]);
  }
  f.da = 2 * eps * f.a0 + ak + std::conj(adk);
  f.da2 = 2 * eps * f.a2_0 + a2k + std::conj(ad2k);
  f.dn = 2 * eps * f.n0 + 2 * nk.real();
  return f;
}

}  // namespace detail

// same first-order expansion from normal-ordered moments, with <F>; any gamma
inline QuadratureStats perturbed_stats(double delta, double phi, double beta, double theta, double gamma, double eta,
                                       double z, double p, OmegaForm form = OmegaForm::Derived) {
  const detail::FirstOrderMoments f = detail::first_order_moments(delta, phi, beta, theta, gamma, eta, z, p, form);
  const double ra = f.a0.real(), ia = f.a0.imag();
  const double x_sq = 2 * (ra * ra + 2 * ra * f.da.real());
  const double p_sq = 2 * (ia * ia + 2 * ia * f.da.imag());
  const double x2 = 0.5 + f.n0 + f.dn + (f.a2_0 + f.da2).real();
  const double pp2 = 0.5 + f.n0 + f.dn - (f.a2_0 + f.da2).real();
  QuadratureStats s;
  s.mean_x = std::sqrt(2.0) * (f.a0 + f.da).real();
  s.mean_p = std::sqrt(2.0) * (f.a0 + f.da).imag();
  s.var_x = x2 - x_sq;
  s.var_p = pp2 - p_sq;
  // <XP + PX> = 2 Im <a^2>, <X><P> = 2 Re<a> Im<a>
  const double xp = 2 * (ra * ia + ra * f.da.imag() + ia * f.da.real());
  s.corr_f = 2 * (f.a2_0 + f.da2).imag() - 2 * xp;
  s.finish();
  return s;
}

// |‖Omega (1 + K) psi_0‖ - 1| from Gaussian moments, no truncation
inline double first_order_norm_error(double delta, double phi, double beta, double theta, double gamma, double eta,
                                     double z, double p, OmegaForm form = OmegaForm::Derived) {
  const TiltedDisplacement td = tilted_displacement(beta, theta, gamma, eta);
  const MatrixElementTable t = matrix_element_table(3, delta, phi, td.beta, td.theta);
  const std::vector<cplx> k = first_order_kernel(delta, phi, beta, theta, gamma, eta, z, p);
  const double omega = omega_tilde(delta, phi, beta, theta, gamma, eta, z, p, form);
  cplx mean = 0, kk = 0;
  for (int m = 1; m <= 3; ++m) {
    mean += k[m] * t.gamma[m][0];
    for (int n = 1; n <= 3; ++n) kk += std::conj(k[m]) * k[n] * t.lambda_elem[m][n];
  }
  return std::abs(omega * std::sqrt(1 + 2 * mean.real() + kk.real()) - 1);
}

// ---------------------------------------------------------------------------
// all-order dispersions from the coefficients of e^{tau a+/sqrt2}|phi~>

inline cplx general_cn_tau(const std::vector<cplx>& c, int n, cplx tau) {
  cplx acc = 0, tp = 1.0;
  double rfact = 1, falling = 1;  // r!, n!/(n-r)!
  for (int r = 0; r <= n; ++r) {
    if (r > 0) {
      tp *= tau / std::sqrt(2.0);
      rfact *= r;
      falling *= n - r + 1;
    }
    acc += tp / rfact * std::sqrt(falling) * c[std::size_t(n - r)];
  }
  return acc;
}

inline cplx general_cn_tau(const DeformationParams& params, int n, cplx tau) {
  return general_cn_tau(unnormalized_coefficients(params, n), n, tau);
}

inline cplx cnp0(const std::vector<cplx>& c, int n) {
  return n >= 1 ? std::sqrt(n / 2.0) * c[std::size_t(n - 1)] : cplx(0);
}

inline cplx cnpp0(const std::vector<cplx>& c, int n) {
  return n >= 2 ? 0.5 * std::sqrt(double(n) * (n - 1)) * c[std::size_t(n - 2)] : cplx(0);
}

inline QuadratureStats general_dispersion(const DeformationParams& params, int n_max, double tol) {
  normalization_c0(params, n_max, tol);  // throws NotConverged
  const std::vector<cplx> c = unnormalized_coefficients(params, n_max);
  double norm = 0, x2 = 0, p2 = 0;
  cplx first = 0, a2 = 0;
  for (int n = 0; n <= n_max; ++n) {
    const cplx cn = c[n], d1 = cnp0(c, n), d2 = cnpp0(c, n);
    norm += std::norm(cn);
    const double cross = 2 * (std::conj(cn) * d2).real();
    x2 += cross + 2 * std::norm(d1);
    p2 += -cross + 2 * std::norm(d1);
    first += std::conj(cn) * d1;
    if (n + 2 <= n_max) a2 += std::conj(cn) * std::sqrt(double(n + 1) * (n + 2)) * c[n + 2];
  }
  QuadratureStats s;
  s.mean_x = 2 * first.real() / norm;
  s.mean_p = -2 * first.imag() / norm;
  s.var_x = -0.5 + x2 / norm - s.mean_x * s.mean_x;
  s.var_p = -0.5 + p2 / norm - s.mean_p * s.mean_p;
  s.corr_f = 2 * (a2 / norm).imag() - 2 * s.mean_x * s.mean_p;
  s.finish();
  return s;
}

// ---------------------------------------------------------------------------
// figure tables

enum class SweepVariable { Phi, Delta };

struct SweepSettings {
  double delta = 0.5, phi = 0, beta = 2.0, theta = 0.8 * M_PI;
  SweepVariable varying = SweepVariable::Phi;
  std::vector<double> grid, zs, ps;
  double validity_threshold = 0.05;  // first-order norm error
  OmegaForm form = OmegaForm::Derived;
};

struct SweepRow {
  double x = 0, z = 0, p = 0;
  double mus_var_x = 0, mus_var_p = 0, mus_product = 0;
  double var_x = 0, var_p = 0, product = 0, corr_f = 0, srur_bound = 0.25;
  double norm_error = 0;
  bool valid = true;
};

inline std::vector<double> linear_grid(double a, double b, int n) {
  std::vector<double> g;
  for (int i = 0; i < n; ++i) g.push_back(n == 1 ? a : a + (b - a) * i / (n - 1));
  return g;
}

inline SweepSettings figure1_settings(int points = 73) {
  SweepSettings s;
  s.grid = linear_grid(-M_PI / 2, 3 * M_PI / 2, points);
  s.zs = {0.001, 0.0015, 0.002};
  s.ps = {0.0};
  return s;
}

inline SweepSettings figure2_settings(int points = 73) {
  SweepSettings s;
  s.grid = linear_grid(-M_PI / 2, 3 * M_PI / 2, points);
  s.zs = {0.003};
  s.ps = {0.0, 0.06, 0.11};
  return s;
}

inline SweepSettings figure3_settings(int points = 96) {
  SweepSettings s;
  s.varying = SweepVariable::Delta;
  s.phi = M_PI / 6;
  s.grid = linear_grid(0.0, 0.95, points);
  s.zs = {0.0025};
  s.ps = {0.01};
  return s;
}

// rows ordered by (z, p, grid point)
inline std::vector<SweepRow> figure_sweep(const SweepSettings& s) {
  if (s.grid.empty() || s.zs.empty() || s.ps.empty()) throw Error(ErrorKind::BadParams, "empty sweep grid");
  std::vector<SweepRow> rows;
  for (double z : s.zs)
    for (double p : s.ps)
      for (double x : s.grid) {
        const double delta = s.varying == SweepVariable::Delta ? x : s.delta;
        const double phi = s.varying == SweepVariable::Phi ? x : s.phi;
        SweepRow r;
        r.x = x;
        r.z = z;
        r.p = p;
        std::tie(r.mus_var_x, r.mus_var_p) = mus_dispersions(delta, phi);
        r.mus_product = r.mus_var_x * r.mus_var_p;
        const QuadratureStats q = perturbed_stats(delta, phi, s.beta, s.theta, 0, 0, z, p, s.form);
        r.var_x = q.var_x;
        r.var_p = q.var_p;
        r.product = q.product;
        r.corr_f = q.corr_f;
        r.srur_bound = q.srur_bound;
        r.norm_error = first_order_norm_error(delta, phi, s.beta, s.theta, 0, 0, z, p, s.form);
        r.valid = r.norm_error <= s.validity_threshold;
        rows.push_back(r);
      }
  return rows;
}

}  // namespace qhd
