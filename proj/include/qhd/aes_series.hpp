#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <map>
#include <mutex>
#include <vector>

#include "deformed_algebra.hpp"
#include "gaussian_moments.hpp"

namespace qhd {

using boost::multiprecision::cpp_int;

// ---------------------------------------------------------------------------
// upsilon table: k^{n-m}/(k-m)! = sum_j v_{mj}/(k-m-j)!  for all k >= m

struct UpsilonTable {
  int n = 0;
  std::vector<std::vector<cpp_int>> v;  // v[m][j], j <= n-m
  const cpp_int& at(int m, int j) const { return v[m][j]; }
};

namespace detail {

// solve (t+m)^s = sum_{j<=t} v_j t!/(t-j)!  for t = 0..s
inline std::vector<cpp_int> upsilon_row(int m, int s) {
  std::vector<cpp_int> v(std::size_t(s) + 1);
  for (int t = 0; t <= s; ++t) {
    cpp_int rhs = boost::multiprecision::pow(cpp_int(t + m), unsigned(s));
    cpp_int falling = 1;  // t!/(t-j)!
    for (int j = 0; j < t; ++j) {
      rhs -= v[j] * falling;
      falling *= (t - j);
    }
    // falling == t!
    v[t] = rhs / falling;
  }
  return v;
}

inline cpp_int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  cpp_int r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace detail

inline UpsilonTable upsilon_table(int n) {
  if (n < 0) throw Error(ErrorKind::BadParams, "upsilon_table: n < 0");
  UpsilonTable t;
  t.n = n;
  for (int m = 0; m <= n; ++m) t.v.push_back(detail::upsilon_row(m, n - m));
  return t;
}

// ---------------------------------------------------------------------------
// c_n / C_0 = (1/sqrt(n!)) sum_{a,b} K_ab mu^a lambda^b z^{n-2a-b}

struct CnTerm {
  int a, b;
  cpp_int exact;
  double coef;  // exact / sqrt(n!)
};

struct CnPolynomial {
  int n = 0;
  std::vector<CnTerm> terms;
  int z_degree() const {
    int d = -1;
    for (const auto& t : terms) d = std::max(d, n - 2 * t.a - t.b);
    return d;
  }
};

namespace detail {

inline CnPolynomial build_cn_polynomial(int n) {
  CnPolynomial poly;
  poly.n = n;
  if (n == 0) {
    poly.terms.push_back({0, 0, 1, 1.0});
    return poly;
  }
  std::vector<std::vector<cpp_int>> ups(std::size_t(n) + 1);
  for (int m = 0; m <= n; ++m) ups[m] = upsilon_row(m, n - m);
  std::vector<std::vector<cpp_int>> pascal(std::size_t(n) + 1);
  for (int j = 0; j <= n; ++j) {
    pascal[j].assign(std::size_t(j) + 1, 1);
    for (int b = 1; b < j; ++b) pascal[j][b] = pascal[j - 1][b - 1] + pascal[j - 1][b];
  }
  const std::vector<cpp_int>& binom_n = pascal[n];
  double lfact = std::lgamma(double(n) + 1);
  const double inv_sqrt_fact = std::exp(-0.5 * lfact);
  for (int r = 0; r <= n; ++r) {  // r = a + b = m + j
    for (int b = 0; b <= r; ++b) {
      const int a = r - b;
      cpp_int k = 0;
      for (int m = 0; m <= std::min(r, n); ++m) {
        const int j = r - m;
        if (j > n - m || b > j) continue;
        cpp_int term = binom_n[m] * ups[m][j] * pascal[j][b];
        if ((n - m) % 2) term = -term;
        k += term;
      }
      if (b % 2) k = -k;
      if (k == 0) continue;
      if (n - 2 * a - b < 0)
        throw std::logic_error("c_n expansion produced a negative power of z");
      poly.terms.push_back({a, b, k, k.convert_to<double>() * inv_sqrt_fact});
    }
  }
  return poly;
}

}  // namespace detail

inline const CnPolynomial& cn_polynomial(int n) {
  static std::mutex mtx;
  static std::map<int, CnPolynomial> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, detail::build_cn_polynomial(n)).first;
  return it->second;
}

// ---------------------------------------------------------------------------

struct CoefficientVector {
  std::vector<cplx> c;
  DeformationParams params;
  cplx c0_fixed = 1.0;
};

struct SeriesDiagnostics {
  int terms_used = 0;
  double tail_estimate = 0;
  bool converged = true;
  bool cross_checked = false;
  double max_deviation = 0;
  bool phase_window_warning = false;
};

struct FockCoefficients {
  CoefficientVector coeffs;
  SeriesDiagnostics diag;
};

inline cplx evaluate_cn(int n, cplx lambda, cplx mu, double z) {
  const CnPolynomial& poly = cn_polynomial(n);
  cplx acc = 0;
  for (const auto& t : poly.terms)
    acc += t.coef * std::pow(mu, t.a) * std::pow(lambda, t.b) * std::pow(z, n - 2 * t.a - t.b);
  return acc;
}

namespace detail {

struct KSumResult {
  std::vector<std::vector<cplx>> moments;  // [m][s]
  std::vector<std::vector<double>> scale;  // sum of |terms|
  int terms_used = 0;
  double tail = 0;
  bool converged = false;
};

// e^{-w} sum_K (K+m)^s w^K / K!  for m + s <= n_check, stopping after three
// successive terms below tol * |partial sum|
inline KSumResult ksum_moments(cplx w, int n_check, long k_cutoff, double tol) {
  KSumResult r;
  r.moments.assign(std::size_t(n_check) + 1, std::vector<cplx>(std::size_t(n_check) + 1, cplx(0)));
  r.scale.assign(std::size_t(n_check) + 1, std::vector<double>(std::size_t(n_check) + 1, 0.0));
  const double aw = std::abs(w);
  if (aw == 0) {
    for (int m = 0; m <= n_check; ++m)
      for (int s = 0; m + s <= n_check; ++s) {
        r.moments[m][s] = std::pow(double(m), s);
        r.scale[m][s] = std::abs(r.moments[m][s]);
      }
    r.terms_used = 1;
    r.converged = true;
    return r;
  }
  const cplx lw = std::log(w);
  int small_run = 0;
  long k = 0;
  for (; k < k_cutoff; ++k) {
    const cplx lp = -w + double(k) * lw - std::lgamma(double(k) + 1);
    double worst = 0;
    for (int m = 0; m <= n_check; ++m) {
      for (int s = 0; m + s <= n_check; ++s) {
        cplx term;
        if (k + m == 0) term = s == 0 ? std::exp(lp) : cplx(0);
        else term = std::exp(lp + double(s) * std::log(double(k + m)));
        r.moments[m][s] += term;
        r.scale[m][s] += std::abs(term);
        const double sum = std::abs(r.moments[m][s]);
        worst = std::max(worst, sum > 0 ? std::abs(term) / sum : (term == cplx(0) ? 0.0 : 1.0));
      }
    }
    if (double(k) > aw && worst < tol) {
      if (++small_run >= 3) {
        r.tail = worst;
        r.converged = true;
        ++k;
        break;
      }
    } else {
      small_run = 0;
    }
    r.tail = worst;
  }
  r.terms_used = int(k);
  return r;
}

}  // namespace detail

// Coefficients of the eigenstate of e^{z a+} a + mu a+ with eigenvalue lambda,
// C_0 = 1. Each c_n comes from the finite exact polynomial form; the Poisson
// k-sums behind it are re-summed directly for n <= n_check as a cross-check.
inline FockCoefficients fock_coefficients(const DeformationParams& params, int n_max, long k_cutoff = 200000,
                                          double tol = 1e-12, int n_check = 10) {
  if (params.z == 0) throw Error(ErrorKind::BadParams, "fock_coefficients needs z != 0");
  FockCoefficients out;
  out.coeffs.params = params;
  out.coeffs.c.resize(std::size_t(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) out.coeffs.c[n] = evaluate_cn(n, params.lambda, params.mu, params.z);

  const double z = params.z;
  if (params.mu == cplx(0)) {
    const double c = std::cos(params.theta());
    out.diag.phase_window_warning = (z > 0 && c < 0) || (z < 0 && c > 0);
  }

  n_check = std::min(n_check, n_max);
  if (n_check >= 1) {
    const cplx w = (params.mu - params.lambda * z) / (z * z);
    detail::KSumResult ks = detail::ksum_moments(w, n_check, k_cutoff, tol);
    out.diag.terms_used = ks.terms_used;
    out.diag.tail_estimate = ks.tail;
    out.diag.converged = ks.converged;
    if (!ks.converged)
      throw Error(ErrorKind::NotConverged, "k-sum did not settle within k_cutoff = " + std::to_string(k_cutoff));
    double dev = 0;
    for (int n = 1; n <= n_check; ++n) {
      for (int m = 0; m <= n; ++m) {
        const int s = n - m;
        std::vector<cpp_int> ups = detail::upsilon_row(m, s);
        cplx closed = 0, wp = 1.0;
        for (int j = 0; j <= s; ++j) {
          closed += ups[j].convert_to<double>() * wp;
          wp *= w;
        }
        const double sc = ks.scale[m][s];
        if (sc > 0) dev = std::max(dev, std::abs(ks.moments[m][s] - closed) / sc);
      }
    }
    out.diag.cross_checked = true;
    out.diag.max_deviation = dev;
  }
  return out;
}

// Taylor coefficients of exp(lambda xi - mu xi^2/2) mapped to Fock amplitudes, C_0 = 1
inline CoefficientVector squeezed_symbol_coefficients(cplx lambda, cplx mu, int n_max) {
  if (!(std::abs(mu) < 1)) throw Error(ErrorKind::NonNormalizable, "|mu| >= 1");
  CoefficientVector v;
  v.params.lambda = lambda;
  v.params.mu = mu;
  v.c.resize(std::size_t(n_max) + 1);
  v.c[0] = 1.0;
  for (int n = 0; n < n_max; ++n) {
    cplx next = lambda * v.c[n];
    if (n >= 1) next -= mu * std::sqrt(double(n)) * v.c[n - 1];
    v.c[n + 1] = next / std::sqrt(double(n + 1));
  }
  return v;
}

inline std::vector<cplx> unnormalized_coefficients(const DeformationParams& params, int n_max) {
  if (params.z == 0) return squeezed_symbol_coefficients(params.lambda, params.mu, n_max).c;
  std::vector<cplx> c(std::size_t(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) c[n] = evaluate_cn(n, params.lambda, params.mu, params.z);
  return c;
}

// C_0 real positive with sum |c_n|^2 = 1; the tail estimate is the weight of
// the last four orders
inline std::pair<double, SeriesDiagnostics> normalization_c0(const DeformationParams& params, int n_max,
                                                            double tol) {
  std::vector<cplx> c = unnormalized_coefficients(params, n_max);
  double total = 0, tail = 0;
  for (int n = 0; n <= n_max; ++n) {
    total += std::norm(c[n]);
    if (n > n_max - 4) tail += std::norm(c[n]);
  }
  SeriesDiagnostics d;
  d.terms_used = n_max + 1;
  d.tail_estimate = total > 0 ? tail / total : 1.0;
  d.converged = std::isfinite(total) && d.tail_estimate < tol;
  if (!d.converged) throw Error(ErrorKind::NotConverged, "normalization series has not settled");
  return {1.0 / std::sqrt(total), d};
}

// ---------------------------------------------------------------------------
// Fock-space states

inline double eigen_residual(const FockOperator& op, const FockVector& v, cplx eigenvalue,
                             const TruncationConfig& cfg) {
  return guarded_vec_norm(op * v - eigenvalue * v, cfg) / v.norm();
}

// polynomial sum_m e_m (a+)^m as a matrix
inline FockOperator creation_polynomial(const std::vector<cplx>& e, const TruncationConfig& cfg) {
  Series c(std::size_t(cfg.dim), cplx(0));
  for (std::size_t m = 0; m < e.size() && m < c.size(); ++m) c[m] = e[m];
  return triangular_matrix_function(c, c[0], creation(cfg), cfg);
}

// exponent sum_k (-z a+)^k/(k+1)! (lambda a+ - (k+1)/(k+2) mu (a+)^2)
inline std::vector<cplx> deformed_squeeze_exponent(cplx lambda, cplx mu, double z, int dim) {
  std::vector<cplx> e(std::size_t(dim), cplx(0));
  double zk_over = 1.0;  // (-z)^k / k!
  for (int k = 0; k + 1 < dim; ++k) {
    if (k > 0) zk_over *= -z / double(k);
    e[k + 1] += lambda * zk_over / double(k + 1);
    if (k + 2 < dim) e[k + 2] -= mu * zk_over / double(k + 2);
    if (zk_over == 0) break;
  }
  return e;
}

inline FockOperator deformed_squeeze_operator(cplx lambda, cplx mu, double z, const TruncationConfig& cfg) {
  return nilpotent_exp(creation_polynomial(deformed_squeeze_exponent(lambda, mu, z, cfg.dim), cfg), cfg);
}

inline FockVector deformed_squeezed_state(const DeformationParams& params, const TruncationConfig& cfg) {
  FockVector v = deformed_squeeze_operator(params.lambda, params.mu, params.z, cfg).col(0);
  check_tail(v, cfg, "deformed_squeezed_state");
  return normalize(v);
}

inline FockVector deformed_coherent_state(const DeformationParams& params, const TruncationConfig& cfg) {
  FockVector seed = FockVector::Zero(cfg.dim);
  seed(0) = 1.0;
  for (int n = 1; n < cfg.dim; ++n) seed(n) = seed(n - 1) * (-params.nu) / std::sqrt(double(n));
  FockVector v = deformed_squeeze_operator(params.lambda, params.mu, params.z, cfg) * seed;
  check_tail(v, cfg, "deformed_coherent_state");
  return normalize(v);
}

// Series assembly: C_0 times the exact coefficients
inline FockVector series_state(const DeformationParams& params, const TruncationConfig& cfg) {
  const int n_max = cfg.dim - 1;
  std::vector<cplx> c = unnormalized_coefficients(params, n_max);
  double total = 0;
  for (const auto& x : c) total += std::norm(x);
  FockVector v(cfg.dim);
  for (int n = 0; n < cfg.dim; ++n) v(n) = c[n] / std::sqrt(total);
  check_tail(v, cfg, "series_state");
  return v;
}

// Solves (F a + G) psi = lambda psi with F, G lower triangular (functions of a+),
// psi_0 = 1. Row n fixes psi_{n+1}, so the amplitudes are exact in the truncation.
inline FockVector lowering_eigenstate(const FockOperator& f, const FockOperator& g, cplx lambda,
                                      const TruncationConfig& cfg) {
  const int n_dim = cfg.dim;
  FockVector psi = FockVector::Zero(n_dim);
  psi(0) = 1.0;
  for (int n = 0; n + 1 < n_dim; ++n) {
    cplx rhs = lambda * psi(n);
    for (int k = 0; k <= n; ++k) rhs -= g(n, k) * psi(k);
    for (int k = 0; k < n; ++k) rhs -= f(n, k) * std::sqrt(double(k + 1)) * psi(k + 1);
    if (f(n, n) == cplx(0)) throw Error(ErrorKind::BadParams, "lowering_eigenstate: singular diagonal");
    psi(n + 1) = rhs / (f(n, n) * std::sqrt(double(n + 1)));
  }
  return psi;
}

// Operator of the two-parameter eigenproblem:
// e^{z a+} sqrt(1 + (p e^{z a+}/2)^2) a + mu a+ + (2 nu/p) asinh(p e^{z a+}/2)
struct LoweringForm {
  FockOperator f, g;
  FockOperator full(const TruncationConfig& cfg) const { return f * annihilation(cfg) + g; }
};

inline LoweringForm two_param_operator(const DeformationParams& params, const TruncationConfig& cfg) {
  const FockOperator ad = creation(cfg);
  const FockOperator e = nilpotent_exp(params.z * ad, cfg);
  LoweringForm lf;
  if (params.p == 0) {
    lf.f = e;
    lf.g = params.mu * ad + params.nu * e;
  } else {
    lf.f = matrix_function(e, detail::u_sqrt_one_plus(params.p), cfg);
    lf.g = params.mu * ad + params.nu * matrix_function(e, detail::asinh_scaled(params.p), cfg);
  }
  return lf;
}

inline FockVector two_param_exact_state(const DeformationParams& params, const TruncationConfig& cfg) {
  LoweringForm lf = two_param_operator(params, cfg);
  FockVector v = lowering_eigenstate(lf.f, lf.g, params.lambda, cfg);
  check_tail(v, cfg, "two_param_exact_state");
  return normalize(v);
}

// ---------------------------------------------------------------------------
// first-order states

struct PerturbedState {
  FockVector raw;         // Omega (1 + K) S D |0>
  FockVector normalized;  // raw / |raw|
  double omega = 1;
};

inline double omega_first_order(double delta, double phi, double beta, double theta, double z) {
  const double d2 = delta * delta, b2 = beta * beta, q = 1 - d2;
  return 1 + z * beta / (2 * q * q) *
                 ((2 * d2 + b2 * (1 + d2) / q) * std::cos(theta) -
                  delta * (1 + d2 + 2 * b2 / q) * std::cos(phi - theta) +
                  d2 * b2 * (1 + 2 * d2 / (3 * q)) * std::cos(2 * phi - 3 * theta) -
                  2 * delta * b2 / (3 * q) * std::cos(phi - 3 * theta));
}

// coefficients kappa_m of K = sum_m kappa_m (a+)^m for the two-parameter state
inline std::vector<cplx> first_order_kernel(double delta, double phi, double beta, double theta, double gamma,
                                            double eta, double z, double p) {
  const cplx mu = std::polar(delta, phi), lam = std::polar(beta, theta), g = std::polar(gamma, eta);
  std::vector<cplx> k(4, cplx(0));
  k[3] = z * mu / 3.0;
  k[2] = -z * lam / 2.0 + p * p / 4 * mu / 4.0;
  k[1] = -p * p / 4 * (lam / 2.0 + 2.0 * g / 3.0);
  return k;
}

struct TiltedDisplacement {
  double beta, theta;
};

inline TiltedDisplacement tilted_displacement(double beta, double theta, double gamma, double eta) {
  const cplx s = std::polar(beta, theta) + std::polar(gamma, eta);
  return {std::abs(s), std::arg(s)};
}

enum class OmegaForm { Derived, Printed };

// 1 - Re<K> in the Gaussian state, the first-order normalization factor
inline double omega_tilde_derived(double delta, double phi, double beta, double theta, double gamma, double eta,
                                  double z, double p) {
  TiltedDisplacement td = tilted_displacement(beta, theta, gamma, eta);
  MatrixElementTable t = matrix_element_table(3, delta, phi, td.beta, td.theta);
  std::vector<cplx> k = first_order_kernel(delta, phi, beta, theta, gamma, eta, z, p);
  cplx mean = 0;
  for (int m = 1; m <= 3; ++m) mean += k[m] * t.gamma[m][0];
  return 1 - mean.real();
}

// literal transcription; the unbalanced "(3" is read as 3 cos(phi - 2 theta~)
inline double omega_tilde_printed(double delta, double phi, double beta, double theta, double gamma, double eta,
                                  double z, double p) {
  TiltedDisplacement td = tilted_displacement(beta, theta, gamma, eta);
  const double bt = td.beta, tt = td.theta;
  const double d2 = delta * delta, b2 = bt * bt, q = 1 - d2;
  const double zpart =
      bt * ((2 * d2 + b2 * (1 + d2) / q) * std::cos(tt) - delta * (1 + d2 + 2 * b2 / q) * std::cos(phi - tt) +
            d2 * b2 * (1 + 2 * d2 / (3 * q)) * std::cos(2 * phi - 3 * tt) -
            2 * delta * b2 / (3 * q) * std::cos(phi - 3 * tt)) -
      gamma * (b2 * std::cos(eta - 2 * tt) - delta * (2 * b2 + 1 - d2) * std::cos(eta - tt) +
               d2 * b2 * std::cos(2 * phi - eta - 2 * tt));
  const double ppart = delta * b2 * 3 * std::cos(phi - 2 * tt) +
                       2 * gamma / 3 * bt * q * (std::cos(eta - tt) + delta * std::cos(phi - eta - tt)) - 2 * b2 - d2 +
                       d2 * d2;
  return 1 + z / (2 * q * q) * zpart - p * p / (16 * q * q) * ppart;
}

inline double omega_tilde(double delta, double phi, double beta, double theta, double gamma, double eta, double z,
                          double p, OmegaForm form = OmegaForm::Derived) {
  return form == OmegaForm::Derived ? omega_tilde_derived(delta, phi, beta, theta, gamma, eta, z, p)
                                    : omega_tilde_printed(delta, phi, beta, theta, gamma, eta, z, p);
}

inline FockVector squeezed_displaced_vacuum(double delta, double phi, double beta, double theta,
                                            const TruncationConfig& cfg) {
  const double c = std::sqrt(1 - delta * delta);
  FockVector v = squeeze_operator(squeeze_argument(delta, phi), cfg) *
                 (displacement_operator(std::polar(beta, theta) / c, cfg) * basis_state(0, cfg));
  return v;
}

inline PerturbedState two_param_perturbed_state(double delta, double phi, double beta, double theta, double gamma,
                                                double eta, double z, double p, const TruncationConfig& cfg,
                                                OmegaForm form = OmegaForm::Derived) {
  if (!(delta >= 0 && delta < 1)) throw Error(ErrorKind::BadParams, "delta must lie in [0,1)");
  TiltedDisplacement td = tilted_displacement(beta, theta, gamma, eta);
  FockVector base = squeezed_displaced_vacuum(delta, phi, td.beta, td.theta, cfg);
  check_tail(base, cfg, "two_param_perturbed_state");
  std::vector<cplx> k = first_order_kernel(delta, phi, beta, theta, gamma, eta, z, p);
  FockOperator kop = creation_polynomial(k, cfg);
  PerturbedState out;
  out.omega = omega_tilde(delta, phi, beta, theta, gamma, eta, z, p, form);
  out.raw = out.omega * (base + kop * base);
  out.normalized = normalize(out.raw);
  return out;
}

inline PerturbedState perturbed_state_first_order(double delta, double phi, double beta, double theta, double z,
                                                  const TruncationConfig& cfg) {
  if (!(delta >= 0 && delta < 1)) throw Error(ErrorKind::BadParams, "delta must lie in [0,1)");
  FockVector base = squeezed_displaced_vacuum(delta, phi, beta, theta, cfg);
  check_tail(base, cfg, "perturbed_state_first_order");
  std::vector<cplx> k = first_order_kernel(delta, phi, beta, theta, 0, 0, z, 0);
  FockOperator kop = creation_polynomial(k, cfg);
  PerturbedState out;
  out.omega = omega_first_order(delta, phi, beta, theta, z);
  out.raw = out.omega * (base + kop * base);
  out.normalized = normalize(out.raw);
  return out;
}

// ---------------------------------------------------------------------------
// Bargmann symbols of the two-parameter problem

struct SymbolValue {
  cplx value;
  cplx exponent;
  bool near_branch_cut = false;
};

// psi(zeta) with the ζ-independent constant set to 1, so psi(1) = exp(exponent at 1)
inline SymbolValue two_param_symbol(const DeformationParams& params, cplx zeta) {
  const double z = params.z, p = params.p;
  if (z == 0 || p == 0) throw Error(ErrorKind::BadParams, "two_param_symbol needs z, p != 0");
  if (zeta == cplx(0)) throw Error(ErrorKind::BadParams, "zeta = 0");
  const cplx u = p * zeta / 2.0;
  const cplx as = std::asinh(u);
  const cplx root = std::sqrt(1.0 + u * u);
  const cplx lz = std::log(zeta);
  SymbolValue s;
  s.exponent = root / (z * z * zeta) * ((1.0 + lz) * params.mu - params.lambda * z + 2.0 * params.nu * z / p * as) -
               params.mu * p / (2 * z * z) * as - params.nu / z * lz;
  s.value = std::exp(s.exponent);
  const double eps = 1e-6;
  const bool log_cut = zeta.real() < 0 && std::abs(zeta.imag()) < eps * std::abs(zeta);
  const bool asinh_cut = std::abs(u.real()) < eps && std::abs(u.imag()) >= 1 - eps;
  s.near_branch_cut = log_cut || asinh_cut;
  return s;
}

// z = 0 symbol of the Celeghini realization; the printed form omits the
// 1/sqrt(1+p^2/4) scaling that the eigenvalue equation requires
inline cplx standard_squeezed_symbol_zero_z(double p, cplx lambda, cplx mu, cplx nu, cplx xi, cplx c0 = 1.0,
                                            bool printed = false) {
  if (p == 0) throw Error(ErrorKind::BadParams, "p = 0");
  const double b = 2 / p * std::asinh(p / 2);
  const double s = printed ? 1.0 : std::sqrt(1 + p * p / 4);
  return c0 * std::exp(((lambda - nu * b) * xi - mu * xi * xi / 2.0) / s);
}

}  // namespace qhd
