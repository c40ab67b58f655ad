#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "qhd/deformed_algebra.hpp"
#include "qhd/dispersion.hpp"
#include "qhd/paragrassmann.hpp"
#include "qhd/pseudo_hermitian.hpp"

namespace qhd::verify {

struct CheckResult {
  std::string suite, name;
  double value = 0, bound = 0;
  bool passed = false;
  std::string error;
};

struct Check {
  std::string suite, name;
  double bound;
  std::function<double(const TruncationConfig&)> run;
};

inline double max3(const std::array<double, 3>& r) { return std::max({r[0], r[1], r[2]}); }

inline std::vector<Check> all_checks() {
  std::vector<Check> c;

  c.push_back({"fock", "canonical_commutator", 1e-12, [](const TruncationConfig& cfg) {
                 return guarded_norm(commutator(annihilation(cfg), creation(cfg)) - identity(cfg), cfg);
               }});
  c.push_back({"fock", "coherent_eigen_residual", 1e-10, [](const TruncationConfig& cfg) {
                 const cplx a(1.2, 0.5);
                 return eigen_residual(annihilation(cfg), coherent_state(a, cfg), a, cfg);
               }});
  c.push_back({"fock", "displacement_unitarity", 1e-8, [](const TruncationConfig& cfg) {
                 const FockOperator d = displacement_operator(cplx(0.8, -0.3), cfg);
                 return guarded_norm(d.adjoint() * d - identity(cfg), cfg);
               }});
  c.push_back({"fock", "squeezed_vacuum_variance", 1e-6, [](const TruncationConfig& cfg) {
                 const FockVector v = squeezed_displaced_vacuum(0.5, M_PI / 2, 0, 0, cfg);
                 return std::abs(quadrature_stats(v, cfg).var_x - 5.0 / 6);
               }});

  c.push_back({"algebra", "uzp_relations", 1e-7, [](const TruncationConfig& cfg) {
                 double worst = 0;
                 for (double z : {0.0, 0.01, -0.01, 0.05, -0.05})
                   for (double p : {0.1, 0.3, 0.5}) {
                     DeformationParams d;
                     d.z = z;
                     d.p = p;
                     for (auto kind : {RealizationKind::Uzp_One, RealizationKind::Uzp_Two}) {
                       AlgebraTriple t = build_realization(kind, d, cfg);
                       worst = std::max(worst, max3(commutator_residual_uzp(t, d, cfg)));
                       worst = std::max(worst, max3(commutator_residual_tilde(tilde_basis_change(t, p, cfg), d, cfg)));
                     }
                   }
                 return worst;
               }});
  c.push_back({"algebra", "tilde_z0_relations", 1e-9, [](const TruncationConfig& cfg) {
                 double worst = 0;
                 for (double z : {0.0, 0.01, -0.05}) {
                   DeformationParams d;
                   d.z = z;
                   for (auto kind : {RealizationKind::TildeZ0_Cas1, RealizationKind::TildeZ0_Cas2})
                     worst = std::max(worst, max3(commutator_residual_tilde(build_realization(kind, d, cfg), d, cfg)));
                 }
                 return worst;
               }});

  c.push_back({"aes", "eigen_residual", 1e-7, [](const TruncationConfig& cfg) {
                 double worst = 0;
                 for (double z : {0.0, 0.01, 0.02})
                   for (double delta : {0.0, 0.3, 0.6})
                     for (double beta : {0.0, 1.0, 2.0}) {
                       DeformationParams d = DeformationParams::polar(delta, 0, beta, 0, 0, 0, z, 0);
                       const FockVector v = deformed_squeezed_state(d, cfg);
                       const FockOperator op = nilpotent_exp(z * creation(cfg), cfg) * annihilation(cfg) + d.mu * creation(cfg);
                       worst = std::max(worst, eigen_residual(op, v, d.lambda, cfg));
                     }
                 return worst;
               }});
  c.push_back({"aes", "dual_path", 1e-9, [](const TruncationConfig& cfg) {
                 double worst = 0;
                 for (double z : {0.0, 0.01, 0.02})
                   for (double delta : {0.0, 0.3, 0.6})
                     for (double beta : {0.0, 1.0, 2.0}) {
                       DeformationParams d = DeformationParams::polar(delta, 0, beta, 0, 0, 0, z, 0);
                       worst = std::max(worst, (deformed_squeezed_state(d, cfg) - series_state(d, cfg)).cwiseAbs().maxCoeff());
                     }
                 return worst;
               }});
  c.push_back({"aes", "first_coefficient", 1e-12, [](const TruncationConfig&) {
                 double worst = 0;
                 for (double z : {0.0, 0.01, 0.3}) {
                   DeformationParams d = DeformationParams::polar(0.4, 0.3, 1.5, -0.7, 0, 0, z, 0);
                   const std::vector<cplx> c = unnormalized_coefficients(d, 2);
                   worst = std::max(worst, std::abs(c[1] / c[0] - d.lambda));
                 }
                 return worst;
               }});

  c.push_back({"paragrassmann", "exact_residuals_nonzero", 0.5, [](const TruncationConfig&) {
                 using boost::multiprecision::cpp_rational;
                 std::mt19937_64 rng(7);
                 std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
                 auto r = [&] { return ExactComplex{cpp_rational(num(rng), den(rng)), cpp_rational(num(rng), den(rng))}; };
                 int bad = 0;
                 for (int k0 = 1; k0 <= 5; ++k0)
                   for (int trial = 0; trial < 3; ++trial) {
                     GrassmannODESpec<ExactComplex> spec{r(), r(), r(), k0};
                     for (const auto& s : solve_appendix_a(spec))
                       if (!residual_check(s, spec).is_zero()) ++bad;
                   }
                 return double(bad);
               }});

  c.push_back({"dispersion", "mus_point", 1e-6, [](const TruncationConfig& cfg) {
                 DeformationParams d;
                 d.mu = std::polar(0.5, M_PI / 2);
                 const QuadratureStats q = quadrature_stats(series_state(d, cfg), cfg);
                 return std::max(std::abs(q.var_x - 5.0 / 6), std::abs(q.var_p - 5.0 / 6));
               }});
  c.push_back({"dispersion", "srur_violation", 1e-9, [](const TruncationConfig& cfg) {
                 std::mt19937_64 rng(11);
                 std::normal_distribution<double> g;
                 double worst = 0;
                 const int span = std::max(1, cfg.block() / 2);
                 for (int trial = 0; trial < 100; ++trial) {
                   FockVector v = FockVector::Zero(cfg.dim);
                   for (int n = 0; n < span; ++n) v[n] = cplx(g(rng), g(rng));
                   const QuadratureStats s = quadrature_stats(normalize(v), cfg);
                   worst = std::max(worst, s.srur_bound - s.product);
                 }
                 return worst;
               }});
  c.push_back({"dispersion", "matrix_elements", 1e-8, [](const TruncationConfig& cfg) {
                 const double delta = 0.3, phi = 0.7, beta = 1.0, theta = 2.1;
                 const FockVector psi = squeezed_displaced_vacuum(delta, phi, beta, theta, cfg);
                 check_tail(psi, cfg, "matrix_elements");
                 const MatrixElementTable t = matrix_element_table(4, delta, phi, beta, theta);
                 const FockOperator a = annihilation(cfg), ad = creation(cfg);
                 double worst = 0;
                 for (int k = 0; k <= 4; ++k)
                   for (int l = 0; k + l <= 4; ++l) {
                     FockVector u = psi, w = psi, x = psi, y = psi;
                     for (int i = 0; i < k; ++i) u = a * u, x = ad * x;
                     for (int i = 0; i < l; ++i) w = a * w, y = ad * y;
                     worst = std::max(worst, std::abs(u.dot(w) - t.gamma[k][l]));
                     worst = std::max(worst, std::abs(x.dot(y) - t.lambda_elem[k][l]));
                   }
                 return worst;
               }});

  c.push_back({"pseudo_hermitian", "commutators", 1e-8, [](const TruncationConfig& cfg) {
                 const CommutatorResiduals r = commutator_checks(build_system(0.2, 0.02, cfg));
                 return std::max({r.h_a, r.h_adag, r.a_adag});
               }});
  c.push_back({"pseudo_hermitian", "pseudo_hermiticity", 1e-7, [](const TruncationConfig& cfg) {
                 return pseudo_hermiticity_residual(build_system(0.2, 0.02, cfg));
               }});
  c.push_back({"pseudo_hermitian", "unitarity", 1e-6, [](const TruncationConfig& cfg) {
                 return unitarity_check(build_system(0.2, 0.02, cfg));
               }});
  c.push_back({"pseudo_hermitian", "hermitian_spectrum", 1e-5, [](const TruncationConfig& cfg) {
                 return hermitian_block_spectrum(build_system(0.2, 0.02, cfg)).max_deviation_from_integers;
               }});
  c.push_back({"pseudo_hermitian", "ground_state", 1e-9, [](const TruncationConfig& cfg) {
                 const PseudoHermitianSystem s = build_system(0.2, 0.02, cfg);
                 return guarded_vec_norm(s.H * ground_state(s), cfg);
               }});
  return c;
}

inline std::vector<std::string> suite_names() {
  return {"fock", "algebra", "aes", "paragrassmann", "dispersion", "pseudo_hermitian"};
}

inline std::vector<CheckResult> run(const std::string& suite, const TruncationConfig& cfg) {
  std::vector<CheckResult> out;
  for (const Check& c : all_checks()) {
    if (!suite.empty() && suite != "all" && c.suite != suite) continue;
    CheckResult r{c.suite, c.name, 0, c.bound, false, ""};
    try {
      r.value = c.run(cfg);
      r.passed = r.value < c.bound;
    } catch (const std::exception& e) {
      r.error = e.what();
    }
    out.push_back(r);
  }
  return out;
}

}  // namespace qhd::verify
