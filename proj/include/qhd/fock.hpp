#pragma once

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <complex>
#include <vector>

#include "errors.hpp"
#include "series.hpp"

namespace qhd {

using FockVector = Eigen::VectorXcd;
using FockOperator = Eigen::MatrixXcd;

struct TruncationConfig {
  int dim = 64;
  int guard = 16;
  double tail_tol = 1e-10;

  static TruncationConfig with_dim(int n, double tail_tol = 1e-10) {
    return TruncationConfig{n, n / 4, tail_tol};
  }
  int block() const { return dim - guard; }
  void validate() const {
    if (dim <= 0 || guard < 0 || guard >= dim || !(tail_tol >= 0))
      throw Error(ErrorKind::BadParams, "invalid truncation config");
  }
};

inline FockOperator identity(const TruncationConfig& cfg) {
  cfg.validate();
  return FockOperator::Identity(cfg.dim, cfg.dim);
}

inline FockOperator annihilation(const TruncationConfig& cfg) {
  cfg.validate();
  FockOperator a = FockOperator::Zero(cfg.dim, cfg.dim);
  for (int n = 1; n < cfg.dim; ++n) a(n - 1, n) = std::sqrt(double(n));
  return a;
}

inline FockOperator creation(const TruncationConfig& cfg) {
  cfg.validate();
  FockOperator ad = FockOperator::Zero(cfg.dim, cfg.dim);
  for (int n = 1; n < cfg.dim; ++n) ad(n, n - 1) = std::sqrt(double(n));
  return ad;
}

inline FockOperator number_operator(const TruncationConfig& cfg) {
  cfg.validate();
  FockOperator nn = FockOperator::Zero(cfg.dim, cfg.dim);
  for (int n = 0; n < cfg.dim; ++n) nn(n, n) = double(n);
  return nn;
}

inline FockVector basis_state(int n, const TruncationConfig& cfg) {
  cfg.validate();
  FockVector v = FockVector::Zero(cfg.dim);
  v(n) = 1.0;
  return v;
}

// relative weight of the top `guard` levels
inline double tail_fraction(const FockVector& v, const TruncationConfig& cfg) {
  const double total = v.squaredNorm();
  if (total == 0) return 0;
  const int g = cfg.guard;
  if (g == 0) return 0;
  return v.tail(g).squaredNorm() / total;
}

inline void check_tail(const FockVector& v, const TruncationConfig& cfg, const char* what) {
  const double t = tail_fraction(v, cfg);
  if (!(t <= cfg.tail_tol))
    throw Error(ErrorKind::TailTooHeavy,
                std::string(what) + ": top-level weight " + std::to_string(t) + " exceeds tail_tol");
}

inline FockVector coherent_state(cplx xi_bar, const TruncationConfig& cfg) {
  cfg.validate();
  FockVector v(cfg.dim);
  v(0) = 1.0;
  for (int n = 1; n < cfg.dim; ++n) v(n) = v(n - 1) * xi_bar / std::sqrt(double(n));
  check_tail(v, cfg, "coherent_state");
  return v;
}

inline bool is_strictly_lower(const FockOperator& k) {
  for (Eigen::Index j = 0; j < k.cols(); ++j)
    for (Eigen::Index i = 0; i <= j && i < k.rows(); ++i)
      if (k(i, j) != cplx(0)) return false;
  return true;
}

inline bool is_strictly_upper(const FockOperator& k) {
  for (Eigen::Index j = 0; j < k.cols(); ++j)
    for (Eigen::Index i = j; i < k.rows(); ++i)
      if (k(i, j) != cplx(0)) return false;
  return true;
}

inline FockOperator triangular_matrix_function(const Series& coeffs, cplx /*alpha*/,
                                               const FockOperator& k,
                                               const TruncationConfig& cfg) {
  cfg.validate();
  if (k.rows() != cfg.dim || k.cols() != cfg.dim)
    throw Error(ErrorKind::BadParams, "triangular_matrix_function: size mismatch");
  if (!is_strictly_lower(k) && !is_strictly_upper(k))
    throw Error(ErrorKind::NotNilpotent, "argument is not strictly triangular");
  const int terms = std::min<int>(int(coeffs.size()), cfg.dim);
  FockOperator r = FockOperator::Zero(cfg.dim, cfg.dim);
  for (int m = terms - 1; m >= 0; --m) {
    r = r * k;
    r.diagonal().array() += coeffs[m];
  }
  return r;
}

// Splits M = alpha I + K with K strictly triangular.
struct NilpotentSplit {
  cplx alpha;
  FockOperator k;
};

inline NilpotentSplit nilpotent_split(const FockOperator& m) {
  const cplx alpha = m(0, 0);
  const double tol = 1e-12 * std::max(1.0, std::abs(alpha));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    if (std::abs(m(i, i) - alpha) > tol)
      throw Error(ErrorKind::NotNilpotent, "diagonal is not constant");
  FockOperator k = m;
  k.diagonal().setZero();
  if (!is_strictly_lower(k) && !is_strictly_upper(k))
    throw Error(ErrorKind::NotNilpotent, "matrix is not triangular");
  return {alpha, k};
}

// f(M) for M = alpha I + nilpotent, given a series builder f(variable_at(alpha)).
template <class F>
FockOperator matrix_function(const FockOperator& m, F&& f, const TruncationConfig& cfg) {
  NilpotentSplit s = nilpotent_split(m);
  Series coeffs = f(series::variable_at(s.alpha, std::size_t(cfg.dim)));
  return triangular_matrix_function(coeffs, s.alpha, s.k, cfg);
}

// exp of a strictly triangular matrix, exact in the truncation
inline FockOperator nilpotent_exp(const FockOperator& k, const TruncationConfig& cfg) {
  Series c(std::size_t(cfg.dim));
  double f = 1.0;
  for (int m = 0; m < cfg.dim; ++m) {
    if (m > 0) f /= double(m);
    c[m] = f;
  }
  return triangular_matrix_function(c, 0.0, k, cfg);
}

inline FockOperator matrix_exponential(const FockOperator& m) { return m.exp(); }

inline FockOperator displacement_operator(cplx lambda, const TruncationConfig& cfg) {
  FockOperator ad = creation(cfg), a = annihilation(cfg);
  return matrix_exponential(lambda * ad - std::conj(lambda) * a);
}

// S(chi) = exp(-(chi a†²/2 - conj(chi) a²/2))
inline FockOperator squeeze_operator(cplx chi, const TruncationConfig& cfg) {
  FockOperator ad = creation(cfg), a = annihilation(cfg);
  return matrix_exponential(-(chi * (ad * ad) * 0.5 - std::conj(chi) * (a * a) * 0.5));
}

// squeeze argument whose vacuum image has Bargmann symbol exp(-delta e^{i phi} xi^2/2)
inline cplx squeeze_argument(double delta, double phi) {
  return std::atanh(delta) * std::polar(1.0, phi);
}

inline cplx inner_product(const FockVector& u, const FockVector& v) { return u.dot(v); }

inline double norm(const FockVector& v) { return v.norm(); }

inline FockVector normalize(const FockVector& v) {
  const double n = v.norm();
  if (n == 0) throw Error(ErrorKind::ZeroNorm, "cannot normalize the zero vector");
  return v / n;
}

inline cplx expectation(const FockOperator& op, const FockVector& v) { return v.dot(op * v); }

// largest singular value of the block on levels 0..N-g-1
inline double guarded_norm(const FockOperator& m, const TruncationConfig& cfg) {
  const int b = cfg.block();
  if (b <= 0) return 0;
  Eigen::JacobiSVD<FockOperator> svd(m.topLeftCorner(b, b));
  return svd.singularValues()(0);
}

inline double guarded_vec_norm(const FockVector& v, const TruncationConfig& cfg) {
  return v.head(cfg.block()).norm();
}

inline FockOperator commutator(const FockOperator& x, const FockOperator& y) {
  return x * y - y * x;
}

}  // namespace qhd
