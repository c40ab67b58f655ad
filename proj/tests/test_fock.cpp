#include <catch_amalgamated.hpp>

#include <random>

#include "qhd/fock.hpp"

using namespace qhd;
using Catch::Approx;

TEST_CASE("ladder operators on small spaces") {
  TruncationConfig c3{3, 0};
  FockOperator a = annihilation(c3);
  CHECK(a(0, 1) == cplx(1));
  CHECK(std::abs(a(1, 2) - std::sqrt(2.0)) < 1e-15);
  CHECK(a.cwiseAbs().sum() == Approx(1 + std::sqrt(2.0)));
  FockOperator ad = creation(c3);
  CHECK(ad(1, 0) == cplx(1));
  CHECK(std::abs(ad(2, 1) - std::sqrt(2.0)) < 1e-15);

  TruncationConfig c1{1, 0};
  CHECK(annihilation(c1).norm() == 0);
}

TEST_CASE("creation is nilpotent and [a,a+] = I below the top level") {
  TruncationConfig cfg = TruncationConfig::with_dim(16);
  FockOperator ad = creation(cfg), a = annihilation(cfg);
  FockOperator pw = FockOperator::Identity(16, 16);
  for (int i = 0; i < 16; ++i) pw = pw * ad;
  CHECK(pw.norm() == 0);
  FockOperator r = commutator(a, ad) - identity(cfg);
  CHECK(r.topLeftCorner(15, 15).norm() < 1e-13);
  CHECK(std::abs(r(15, 15)) > 1);
}

TEST_CASE("coherent states") {
  TruncationConfig c4{4, 0};
  FockVector v = coherent_state(1.0, c4);
  CHECK(std::abs(v(2) - 1 / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(v(3) - 1 / std::sqrt(6.0)) < 1e-15);
  CHECK(coherent_state(0.0, c4).isApprox(basis_state(0, c4)));

  TruncationConfig cfg;
  for (cplx xi : {cplx(2, 0), cplx(1.2, -1.5), cplx(-0.3, 0.4)}) {
    FockVector s = coherent_state(xi, cfg);
    FockVector r = annihilation(cfg) * s - xi * s;
    CHECK(guarded_vec_norm(r, cfg) < 1e-10);
    FockVector sn = normalize(s);
    CHECK(std::abs(expectation(number_operator(cfg), sn) - std::norm(xi)) < 1e-8);
    CHECK(std::abs(expectation(identity(cfg), sn) - 1.0) < 1e-12);
  }
  CHECK_THROWS_AS(coherent_state(4.0, TruncationConfig{16, 4}), Error);
}

TEST_CASE("triangular matrix functions") {
  TruncationConfig c4{4, 0};
  const double z = 0.3;
  FockOperator ad = creation(c4);
  FockOperator e = nilpotent_exp(z * ad, c4);
  CHECK(std::abs(e(1, 0) - z) < 1e-15);
  CHECK(std::abs(e(2, 0) - z * z * std::sqrt(2.0) / 2) < 1e-15);

  Series ident = {cplx(0.7, 0.1), 1.0, 0.0, 0.0};
  FockOperator f = triangular_matrix_function(ident, ident[0], z * ad, c4);
  CHECK(f.isApprox(ident[0] * identity(c4) + z * ad));

  TruncationConfig cfg;
  FockOperator ez = nilpotent_exp(0.0 * creation(cfg), cfg);
  const double p = 0.4;
  FockOperator b = matrix_function(ez, [p](const Series& u) {
    return series::scale(series::asinh(series::scale(u, p / 2)), 2 / p);
  }, cfg);
  CHECK((b - (2 / p) * std::asinh(p / 2) * identity(cfg)).norm() < 1e-14);

  CHECK_THROWS_AS(triangular_matrix_function(ident, 0.0, identity(c4), c4), Error);
}

TEST_CASE("nilpotent exponential agrees with the general matrix exponential") {
  TruncationConfig cfg;
  for (double z : {0.05, -0.2, 0.5}) {
    FockOperator k = z * creation(cfg);
    FockOperator e1 = nilpotent_exp(k, cfg), e2 = matrix_exponential(k);
    CHECK((e1 - e2).norm() < 1e-12 * e1.norm());
  }
  CHECK(matrix_exponential(FockOperator::Zero(5, 5)).isApprox(FockOperator::Identity(5, 5)));
}

TEST_CASE("matrix exponential inverse property") {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 5; ++trial) {
    FockOperator m(12, 12);
    for (int i = 0; i < 12; ++i)
      for (int j = 0; j < 12; ++j) m(i, j) = cplx(g(rng), g(rng));
    m *= 5.0 / m.operatorNorm();
    FockOperator r = matrix_exponential(m) * matrix_exponential(-m) - FockOperator::Identity(12, 12);
    CHECK(r.norm() < 1e-10);
  }
}

TEST_CASE("displacement operator") {
  TruncationConfig cfg;
  CHECK((displacement_operator(0.0, cfg) - identity(cfg)).norm() < 1e-14);
  const cplx lam(0.8, -0.6);
  FockOperator d = displacement_operator(lam, cfg);
  FockVector v = d * basis_state(0, cfg);
  FockVector ref = std::exp(-std::norm(lam) / 2) * coherent_state(lam, cfg);
  CHECK((v - ref).norm() < 1e-12);
  // conjugation spreads high levels, so the check uses a wide guard
  TruncationConfig wide{96, 48};
  FockOperator dw = displacement_operator(lam, wide), a = annihilation(wide);
  CHECK(guarded_norm(dw.adjoint() * a * dw - a - lam * identity(wide), wide) < 1e-9);
  CHECK(guarded_norm(d.adjoint() * d - identity(cfg), cfg) < 1e-9);
}

TEST_CASE("squeeze operator") {
  TruncationConfig cfg{160, 136};
  CHECK((squeeze_operator(0.0, cfg) - identity(cfg)).norm() < 1e-14);
  const double delta = 0.5, phi = 0.7;
  FockOperator s = squeeze_operator(squeeze_argument(delta, phi), cfg);
  FockOperator a = annihilation(cfg), ad = creation(cfg);
  FockOperator target = (a - delta * std::polar(1.0, phi) * ad) / std::sqrt(1 - delta * delta);
  CHECK(guarded_norm(s.adjoint() * a * s - target, cfg) < 1e-9);
  CHECK(guarded_norm(s.adjoint() * s - identity(cfg), cfg) < 1e-9);

  // the vacuum image has symbol proportional to exp(-mu xi^2/2)
  FockVector v = s * basis_state(0, cfg);
  const cplx mu = std::polar(delta, phi);
  CHECK(std::abs(v(2) / v(0) - (-mu / 2.0) * std::sqrt(2.0)) < 1e-12);

  // variance of X on S|0>, phi = 0
  FockOperator s0 = squeeze_operator(squeeze_argument(delta, 0), cfg);
  FockVector w = s0 * basis_state(0, cfg);
  FockOperator x = (a + ad) / std::sqrt(2.0);
  const double vx = expectation(x * x, w).real() - std::pow(expectation(x, w).real(), 2);
  CHECK(vx == Approx((1 - 2 * delta + delta * delta) / (2 * (1 - delta * delta))).epsilon(1e-12));
}

TEST_CASE("inner products and normalization") {
  TruncationConfig cfg{8, 2};
  for (int n = 0; n < 8; ++n)
    for (int m = 0; m < 8; ++m)
      CHECK(inner_product(basis_state(n, cfg), basis_state(m, cfg)) == cplx(n == m ? 1 : 0));
  CHECK_THROWS_AS(normalize(FockVector::Zero(8)), Error);
  FockVector v = FockVector::Random(8);
  FockVector nv = normalize(v);
  FockOperator h = creation(cfg) + annihilation(cfg);
  CHECK(std::abs(expectation(h, nv).imag()) < 1e-12);
  CHECK(norm(nv) == Approx(1).epsilon(1e-14));
}
