#pragma once

#include <array>
#include <cmath>

#include "fock.hpp"

namespace qhd {

struct DeformationParams {
  double z = 0;
  double p = 0;
  cplx lambda = 0;
  cplx mu = 0;
  cplx nu = 0;

  // nu = -gamma e^{i eta}
  static DeformationParams polar(double delta, double phi, double beta, double theta,
                                 double gamma = 0, double eta_phase = 0, double z = 0,
                                 double p = 0) {
    DeformationParams d;
    d.z = z;
    d.p = p;
    d.mu = std::polar(delta, phi);
    d.lambda = std::polar(beta, theta);
    d.nu = -std::polar(gamma, eta_phase);
    return d;
  }

  double delta() const { return std::abs(mu); }
  double phi() const { return std::arg(mu); }
  double beta() const { return std::abs(lambda); }
  double theta() const { return std::arg(lambda); }
  double gamma() const { return std::abs(nu); }
  double eta_phase() const { return std::arg(-nu); }
};

enum class RealizationKind { TildeZ0_Cas1, TildeZ0_Cas2, Uzp_One, Uzp_Two, Celeghini_One, Celeghini_Two };

inline bool is_tilde(RealizationKind k) {
  return k == RealizationKind::TildeZ0_Cas1 || k == RealizationKind::TildeZ0_Cas2;
}

inline bool is_celeghini(RealizationKind k) {
  return k == RealizationKind::Celeghini_One || k == RealizationKind::Celeghini_Two;
}

struct AlgebraTriple {
  FockOperator A, B, C;
  RealizationKind kind;
};

namespace detail {

// (2/p) asinh((p/2) u)
inline auto asinh_scaled(double p) {
  return [p](const Series& u) { return series::scale(series::asinh(series::scale(u, p / 2)), 2 / p); };
}

// u sqrt(1 + (p u/2)^2)
inline auto u_sqrt_one_plus(double p) {
  return [p](const Series& u) {
    const std::size_t n = u.size();
    Series q = series::mul(u, u);
    Series s = series::sqrt(series::add(series::constant(1.0, n), series::scale(q, p * p / 4)));
    return series::mul(u, s);
  };
}

}  // namespace detail

inline AlgebraTriple build_realization(RealizationKind kind, const DeformationParams& params,
                                       const TruncationConfig& cfg) {
  cfg.validate();
  const double z = params.z, p = params.p;
  if (!std::isfinite(z) || !std::isfinite(p)) throw Error(ErrorKind::BadParams, "non-finite deformation");
  if (!is_tilde(kind) && p == 0) throw Error(ErrorKind::BadParams, "p = 0 for a p-dependent realization");
  const FockOperator a = annihilation(cfg), ad = creation(cfg), id = identity(cfg);
  switch (kind) {
    case RealizationKind::TildeZ0_Cas1: {
      FockOperator e = nilpotent_exp(z * ad, cfg);
      return {-ad, e, e * a, kind};
    }
    case RealizationKind::TildeZ0_Cas2: {
      FockOperator e = nilpotent_exp(-z * a, cfg);
      return {a, e, ad * e, kind};
    }
    case RealizationKind::Uzp_One: {
      FockOperator e = nilpotent_exp(z * ad, cfg);
      FockOperator b = matrix_function(e, detail::asinh_scaled(p), cfg);
      FockOperator c = matrix_function(e, detail::u_sqrt_one_plus(p), cfg) * a;
      return {-ad, b, c, kind};
    }
    case RealizationKind::Uzp_Two: {
      FockOperator e = nilpotent_exp(-z * a, cfg);
      FockOperator b = matrix_function(e, detail::asinh_scaled(p), cfg);
      FockOperator c = ad * matrix_function(e, detail::u_sqrt_one_plus(p), cfg);
      return {a, b, c, kind};
    }
    case RealizationKind::Celeghini_One: {
      const double s = std::sqrt(1 + p * p / 4);
      return {-ad, (2 / p) * std::asinh(p / 2) * id, s * a, kind};
    }
    case RealizationKind::Celeghini_Two: {
      const double s = std::sqrt(1 + p * p / 4);
      return {a, (2 / p) * std::asinh(p / 2) * id, s * ad, kind};
    }
  }
  throw Error(ErrorKind::BadParams, "unknown realization");
}

// [A,B], [B,C] + (2z/p^2)(cosh(pB) - I), [A,C] - sinh(pB)/p
inline std::array<double, 3> commutator_residual_uzp(const AlgebraTriple& t, const DeformationParams& params,
                                                      const TruncationConfig& cfg) {
  if (is_tilde(t.kind)) throw Error(ErrorKind::BadParams, "not a U_{z,p} triple");
  const double p = params.p;
  const double z = is_celeghini(t.kind) ? 0.0 : params.z;
  const FockOperator id = identity(cfg);
  const FockOperator coshpb = matrix_function(t.B, [p](const Series& u) { return series::cosh(series::scale(u, p)); }, cfg);
  const FockOperator sinhpb = matrix_function(t.B, [p](const Series& u) { return series::sinh(series::scale(u, p)); }, cfg);
  return {guarded_norm(commutator(t.A, t.B), cfg),
          guarded_norm(commutator(t.B, t.C) + (2 * z / (p * p)) * (coshpb - id), cfg),
          guarded_norm(commutator(t.A, t.C) - sinhpb / p, cfg)};
}

// [A,B], [B,C] + z B^2, [A,C] - B
inline std::array<double, 3> commutator_residual_tilde(const AlgebraTriple& t, const DeformationParams& params,
                                                        const TruncationConfig& cfg) {
  const double z = params.z;
  return {guarded_norm(commutator(t.A, t.B), cfg),
          guarded_norm(commutator(t.B, t.C) + z * (t.B * t.B), cfg),
          guarded_norm(commutator(t.A, t.C) - t.B, cfg)};
}

inline AlgebraTriple tilde_basis_change(const AlgebraTriple& t, double p, const TruncationConfig& cfg) {
  if (is_tilde(t.kind)) throw Error(ErrorKind::BadParams, "expects a U_{z,p} triple");
  if (p == 0) throw Error(ErrorKind::BadParams, "p = 0");
  NilpotentSplit s = nilpotent_split(t.B);
  const cplx ch = std::cosh(p * s.alpha / 2.0);
  if (std::abs(ch) < 1e-12) throw Error(ErrorKind::SingularCosh, "cosh(pB/2) is singular");
  FockOperator bt = matrix_function(t.B, [p](const Series& u) {
    return series::scale(series::sinh(series::scale(u, p / 2)), 2 / p);
  }, cfg);
  FockOperator inv_cosh = matrix_function(t.B, [p](const Series& u) {
    return series::inverse(series::cosh(series::scale(u, p / 2)));
  }, cfg);
  RealizationKind k = (t.kind == RealizationKind::Uzp_One || t.kind == RealizationKind::Celeghini_One)
                          ? RealizationKind::TildeZ0_Cas1
                          : RealizationKind::TildeZ0_Cas2;
  return {t.A, bt, inv_cosh * t.C, k};
}

// inverse map B = (2/p) asinh(p B~/2)
inline FockOperator untilde_B(const FockOperator& bt, double p, const TruncationConfig& cfg) {
  return matrix_function(bt, detail::asinh_scaled(p), cfg);
}

}  // namespace qhd
