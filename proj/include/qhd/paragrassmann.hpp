#pragma once

// Exact calculus over C[xi] (x) C[z]/(z^k0) and the solver for
//   [d/dxi + (mu xi + nu) sum_{l<k0} (-z)^l/l! d^l/dxi^l] phi = lambda phi.
// Solutions are phi = sum_k z^k (C_k + A_k(xi)) exp((lambda-nu) xi - mu xi^2/2).

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <vector>

#include "aes_series.hpp"
#include "errors.hpp"
#include "fock.hpp"
#include "gaussian_moments.hpp"

namespace qhd {

using boost::multiprecision::cpp_rational;

// complex rational
struct ExactComplex {
  cpp_rational re = 0, im = 0;

  ExactComplex() = default;
  ExactComplex(int r) : re(r) {}
  ExactComplex(cpp_rational r, cpp_rational i = 0) : re(std::move(r)), im(std::move(i)) {}

  friend ExactComplex operator+(const ExactComplex& a, const ExactComplex& b) { return {a.re + b.re, a.im + b.im}; }
  friend ExactComplex operator-(const ExactComplex& a, const ExactComplex& b) { return {a.re - b.re, a.im - b.im}; }
  friend ExactComplex operator-(const ExactComplex& a) { return {-a.re, -a.im}; }
  friend ExactComplex operator*(const ExactComplex& a, const ExactComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ExactComplex operator/(const ExactComplex& a, const ExactComplex& b) {
    const cpp_rational d = b.re * b.re + b.im * b.im;
    if (d == 0) throw Error(ErrorKind::BadParams, "division by zero");
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  ExactComplex& operator+=(const ExactComplex& b) { return *this = *this + b; }
  ExactComplex& operator-=(const ExactComplex& b) { return *this = *this - b; }
  friend bool operator==(const ExactComplex& a, const ExactComplex& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const ExactComplex& a, const ExactComplex& b) { return !(a == b); }

  cplx to_complex() const { return {re.convert_to<double>(), im.convert_to<double>()}; }
};

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<ExactComplex> {
  static ExactComplex from_rational(const cpp_rational& r) { return ExactComplex(r); }
  static bool is_zero(const ExactComplex& x) { return x.re == 0 && x.im == 0; }
  static cplx to_complex(const ExactComplex& x) { return x.to_complex(); }
};

template <>
struct ScalarTraits<cplx> {
  static cplx from_rational(const cpp_rational& r) { return r.convert_to<double>(); }
  static bool is_zero(const cplx& x) { return x == cplx(0); }
  static cplx to_complex(const cplx& x) { return x; }
};

// polynomial in xi, coefficient i multiplies xi^i
template <class S>
using Poly = std::vector<S>;

namespace poly {

template <class S>
Poly<S> trim(Poly<S> p) {
  while (!p.empty() && ScalarTraits<S>::is_zero(p.back())) p.pop_back();
  return p;
}

template <class S>
Poly<S> add(const Poly<S>& a, const Poly<S>& b) {
  Poly<S> r(std::max(a.size(), b.size()), S(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return trim(std::move(r));
}

template <class S>
Poly<S> scale(const Poly<S>& a, const S& s) {
  Poly<S> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return trim(std::move(r));
}

template <class S>
Poly<S> sub(const Poly<S>& a, const Poly<S>& b) {
  return add(a, scale(b, S(-1)));
}

template <class S>
Poly<S> mul(const Poly<S>& a, const Poly<S>& b) {
  if (a.empty() || b.empty()) return {};
  Poly<S> r(a.size() + b.size() - 1, S(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return trim(std::move(r));
}

template <class S>
Poly<S> derivative(const Poly<S>& a) {
  Poly<S> r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * S(int(i)));
  return trim(std::move(r));
}

// antiderivative vanishing at 0
template <class S>
Poly<S> integrate(const Poly<S>& a) {
  if (a.empty()) return {};
  Poly<S> r(a.size() + 1, S(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i + 1] = a[i] / S(int(i + 1));
  return trim(std::move(r));
}

template <class S>
bool is_zero(const Poly<S>& a) {
  return trim(a).empty();
}

template <class S>
S coeff(const Poly<S>& a, std::size_t i) {
  return i < a.size() ? a[i] : S(0);
}

template <class S>
cplx evaluate(const Poly<S>& a, cplx x) {
  cplx acc = 0;
  for (std::size_t i = a.size(); i-- > 0;) acc = acc * x + ScalarTraits<S>::to_complex(a[i]);
  return acc;
}

}  // namespace poly

// sum_k z^k coeffs[k](xi) with z^k0 = 0
template <class S>
struct NilpotentPoly {
  int k0 = 1;
  std::vector<Poly<S>> coeffs;

  explicit NilpotentPoly(int k = 1) : k0(k), coeffs(std::size_t(k)) {
    if (k < 1) throw Error(ErrorKind::BadParams, "k0 must be >= 1");
  }

  bool is_zero() const {
    for (const auto& c : coeffs)
      if (!poly::is_zero(c)) return false;
    return true;
  }

  friend NilpotentPoly operator+(const NilpotentPoly& a, const NilpotentPoly& b) {
    check_same(a, b);
    NilpotentPoly r(a.k0);
    for (int k = 0; k < a.k0; ++k) r.coeffs[k] = poly::add(a.coeffs[k], b.coeffs[k]);
    return r;
  }
  friend NilpotentPoly operator-(const NilpotentPoly& a, const NilpotentPoly& b) {
    check_same(a, b);
    NilpotentPoly r(a.k0);
    for (int k = 0; k < a.k0; ++k) r.coeffs[k] = poly::sub(a.coeffs[k], b.coeffs[k]);
    return r;
  }
  // products of z^i and z^j with i + j >= k0 vanish
  friend NilpotentPoly operator*(const NilpotentPoly& a, const NilpotentPoly& b) {
    check_same(a, b);
    NilpotentPoly r(a.k0);
    for (int i = 0; i < a.k0; ++i)
      for (int j = 0; i + j < a.k0; ++j) r.coeffs[i + j] = poly::add(r.coeffs[i + j], poly::mul(a.coeffs[i], b.coeffs[j]));
    return r;
  }
  friend NilpotentPoly operator*(const S& s, const NilpotentPoly& a) {
    NilpotentPoly r(a.k0);
    for (int k = 0; k < a.k0; ++k) r.coeffs[k] = poly::scale(a.coeffs[k], s);
    return r;
  }

  // value for a numeric z, truncated at z^{k0-1}
  cplx evaluate(cplx z, cplx xi) const {
    cplx acc = 0, zk = 1.0;
    for (int k = 0; k < k0; ++k) {
      acc += zk * poly::evaluate(coeffs[k], xi);
      zk *= z;
    }
    return acc;
  }

 private:
  static void check_same(const NilpotentPoly& a, const NilpotentPoly& b) {
    if (a.k0 != b.k0) throw Error(ErrorKind::BadParams, "nilpotency orders differ");
  }
};

// log(1 + X) for X = sum_{k>=1} z^k X_k
template <class S>
NilpotentPoly<S> nilpotent_log(const NilpotentPoly<S>& p) {
  if (poly::trim(p.coeffs[0]) != Poly<S>{S(1)})
    throw Error(ErrorKind::BadParams, "nilpotent_log needs unit constant part");
  NilpotentPoly<S> x = p;
  x.coeffs[0].clear();
  NilpotentPoly<S> result(p.k0), power = x;
  for (int j = 1; j < p.k0; ++j) {
    const cpp_rational c = cpp_rational((j % 2) ? 1 : -1) / j;
    result = result + ScalarTraits<S>::from_rational(c) * power;
    power = power * x;
  }
  return result;
}

// H_m(x) = e^{x^2} d^m/dx^m e^{-x^2}; H_1 = -2x
inline std::vector<cpp_int> hermite_polynomial(int m) {
  if (m < 0) throw Error(ErrorKind::BadParams, "hermite_polynomial: m < 0");
  std::vector<cpp_int> h{1};
  for (int k = 0; k < m; ++k) {
    // H_{k+1} = H_k' - 2x H_k
    std::vector<cpp_int> next(h.size() + 1, 0);
    for (std::size_t i = 1; i < h.size(); ++i) next[i - 1] += h[i] * int(i);
    for (std::size_t i = 0; i < h.size(); ++i) next[i + 1] -= 2 * h[i];
    h = std::move(next);
  }
  return h;
}

template <class S>
struct GrassmannODESpec {
  S lambda, mu, nu;
  int k0 = 1;
  void validate() const {
    if (k0 < 1) throw Error(ErrorKind::BadParams, "k0 must be >= 1");
  }
};

template <class S>
struct ParagrassmannSolution {
  int k0 = 1;
  int free_index = 0;        // the C_j set to 1
  std::vector<Poly<S>> Ak;   // A_0 = 0
  std::vector<S> C;
  S lambda_minus_nu, mu;     // exponent (lambda-nu) xi - mu xi^2/2
  bool normalizable = true;

  // sum_k z^k (C_k + A_k)
  NilpotentPoly<S> prefactor() const {
    NilpotentPoly<S> p(k0);
    for (int k = 0; k < k0; ++k) p.coeffs[k] = poly::add(Ak[k], Poly<S>{C[k]});
    return p;
  }

  cplx evaluate(cplx z, cplx xi) const {
    const cplx g = ScalarTraits<S>::to_complex(lambda_minus_nu) * xi -
                   ScalarTraits<S>::to_complex(mu) * xi * xi / 2.0;
    return prefactor().evaluate(z, xi) * std::exp(g);
  }
};

namespace detail {

// D_g P = P' + g' P, so that d/dxi (P e^g) = (D_g P) e^g
template <class S>
Poly<S> gauss_derivative(const Poly<S>& p, const S& lambda_minus_nu, const S& mu) {
  return poly::add(poly::derivative(p), poly::mul(Poly<S>{lambda_minus_nu, S(0) - mu}, p));
}

template <class S>
S inv_factorial(int l) {
  cpp_rational f = 1;
  for (int i = 2; i <= l; ++i) f *= i;
  return ScalarTraits<S>::from_rational(1 / f);
}

}  // namespace detail

// e^{-g} d^l/dxi^l e^{g} by the Hermite expansion; the printed form carries an
// extra (-1)^m, selectable for comparison
template <class S>
Poly<S> hermite_gauss_factor(int l, const S& lambda_minus_nu, const S& mu, bool printed_sign = false) {
  Poly<S> r;
  const S half_mu = mu / S(2);
  for (int m = 0; m <= l; ++m) {
    const std::vector<cpp_int> h = hermite_polynomial(m);
    S pre = ScalarTraits<S>::from_rational(cpp_rational(detail::binomial(l, m)));
    for (int i = 0; i < l - m; ++i) pre = pre * lambda_minus_nu;
    if (printed_sign && (m % 2)) pre = S(0) - pre;
    // (mu/2)^{m/2} H_m(sqrt(mu/2) xi): the xi^j term carries (mu/2)^{(m+j)/2}
    Poly<S> term(std::size_t(m) + 1, S(0));
    for (int j = 0; j <= m; ++j) {
      if (h[j] == 0) continue;
      S c = ScalarTraits<S>::from_rational(cpp_rational(h[j]));
      for (int i = 0; i < (m + j) / 2; ++i) c = c * half_mu;
      term[j] = c;
    }
    r = poly::add(r, poly::scale(term, pre));
  }
  return r;
}

// general solution for given constants C_0..C_{k0-1}
template <class S>
ParagrassmannSolution<S> solve_with_constants(const GrassmannODESpec<S>& spec, const std::vector<S>& constants) {
  spec.validate();
  if (int(constants.size()) != spec.k0) throw Error(ErrorKind::BadParams, "need k0 constants");
  ParagrassmannSolution<S> sol;
  sol.k0 = spec.k0;
  sol.C = constants;
  sol.lambda_minus_nu = spec.lambda - spec.nu;
  sol.mu = spec.mu;
  sol.Ak.assign(std::size_t(spec.k0), Poly<S>{});
  const Poly<S> weight{spec.nu, spec.mu};  // mu xi + nu
  // derivs[j][l] = D_g^l (C_j + A_j)
  std::vector<std::vector<Poly<S>>> derivs(std::size_t(spec.k0));
  auto fill = [&](int j) {
    Poly<S> p = poly::add(sol.Ak[j], Poly<S>{sol.C[j]});
    derivs[j].push_back(p);
    for (int l = 1; l + j < spec.k0; ++l)
      derivs[j].push_back(detail::gauss_derivative(derivs[j].back(), sol.lambda_minus_nu, sol.mu));
  };
  fill(0);
  for (int k = 1; k < spec.k0; ++k) {
    Poly<S> rhs;
    for (int l = 1; l <= k; ++l) {
      S c = detail::inv_factorial<S>(l);
      if (l % 2 == 0) c = S(0) - c;
      rhs = poly::add(rhs, poly::scale(derivs[k - l][l], c));
    }
    sol.Ak[k] = poly::integrate(poly::mul(weight, rhs));
    fill(k);
  }
  sol.free_index = -1;
  for (int k = 0; k < spec.k0; ++k)
    if (!ScalarTraits<S>::is_zero(constants[k])) {
      sol.free_index = k;
      break;
    }
  sol.normalizable = sol.free_index == 0;
  return sol;
}

// one solution per free constant C_j = 1
template <class S>
std::vector<ParagrassmannSolution<S>> solve_appendix_a(const GrassmannODESpec<S>& spec) {
  spec.validate();
  std::vector<ParagrassmannSolution<S>> out;
  for (int j = 0; j < spec.k0; ++j) {
    std::vector<S> c(std::size_t(spec.k0), S(0));
    c[j] = S(1);
    out.push_back(solve_with_constants(spec, c));
  }
  return out;
}

// residual of the full equation after dividing out e^g, order by order in z
template <class S>
NilpotentPoly<S> residual_check(const ParagrassmannSolution<S>& sol, const GrassmannODESpec<S>& spec) {
  if (sol.k0 != spec.k0) throw Error(ErrorKind::BadParams, "k0 mismatch");
  const NilpotentPoly<S> pre = sol.prefactor();
  const Poly<S> weight{spec.nu, spec.mu};
  std::vector<std::vector<Poly<S>>> derivs(std::size_t(spec.k0));
  for (int j = 0; j < spec.k0; ++j) {
    derivs[j].push_back(pre.coeffs[j]);
    for (int l = 1; l + j < spec.k0 || l == 1; ++l)
      derivs[j].push_back(detail::gauss_derivative(derivs[j].back(), sol.lambda_minus_nu, sol.mu));
  }
  NilpotentPoly<S> r(spec.k0);
  for (int k = 0; k < spec.k0; ++k) {
    Poly<S> acc = poly::sub(derivs[k][1], poly::scale(pre.coeffs[k], spec.lambda));
    Poly<S> sum;
    for (int l = 0; l <= k; ++l) {
      S c = detail::inv_factorial<S>(l);
      if (l % 2) c = S(0) - c;
      sum = poly::add(sum, poly::scale(derivs[k - l][l], c));
    }
    r.coeffs[k] = poly::add(acc, poly::mul(weight, sum));
  }
  return r;
}

// closed forms as printed

template <class S>
Poly<S> printed_A1(const S& lambda, const S& mu, const S& nu) {
  const S lmn = lambda - nu;
  return poly::trim(Poly<S>{S(0), lmn * nu, mu * (lambda - S(2) * nu) / S(2), S(0) - mu * mu / S(3)});
}

template <class S>
Poly<S> printed_A2(const S& l, const S& m, const S& n) {
  auto q = [](int a, int b) { return ScalarTraits<S>::from_rational(cpp_rational(a, b)); };
  Poly<S> p(7, S(0));
  p[1] = q(1, 2) * l * l * n + q(1, 2) * m * n + S(2) * l * n * n - q(3, 2) * n * n * n;
  p[2] = S(0) - (q(1, 4) * l * l * m - q(1, 4) * m * m - S(2) * l * m * n - q(1, 2) * l * l * n * n +
                 q(9, 4) * m * n * n + l * n * n * n - q(1, 2) * n * n * n * n);
  p[3] = q(2, 3) * l * m * m + q(1, 2) * l * l * m * n - q(3, 2) * m * m * n - q(3, 2) * l * m * n * n + m * n * n * n;
  p[4] = q(1, 8) * l * l * m * m - q(3, 8) * m * m * m - q(5, 6) * l * m * m * n + q(5, 6) * m * m * n * n;
  p[5] = S(0) - (q(1, 6) * l * m * m * m - q(1, 3) * m * m * m * n);
  p[6] = q(1, 18) * m * m * m * m;
  return poly::trim(p);
}

// phi^(1..3) of the mu = 0 problem; k0 > 3 goes through the general solver.
// printed = true keeps the printed +lambda^2 nu/2 in the z^2 xi coefficient.
template <class S>
ParagrassmannSolution<S> deformed_coherent_symbols_mu0(const S& nu, const S& lambda, int k0, bool printed = false) {
  GrassmannODESpec<S> spec{lambda, S(0), nu, k0};
  spec.validate();
  if (k0 > 3) return solve_appendix_a(spec)[0];
  auto q = [](int a, int b) { return ScalarTraits<S>::from_rational(cpp_rational(a, b)); };
  ParagrassmannSolution<S> sol;
  sol.k0 = k0;
  sol.C.assign(std::size_t(k0), S(0));
  sol.C[0] = S(1);
  sol.lambda_minus_nu = lambda - nu;
  sol.mu = S(0);
  sol.Ak.assign(std::size_t(k0), Poly<S>{});
  const S lmn = lambda - nu;
  if (k0 >= 2) sol.Ak[1] = poly::trim(Poly<S>{S(0), lmn * nu});
  if (k0 >= 3) {
    const S first = (printed ? q(1, 2) : q(-1, 2)) * lambda * lambda * nu + S(2) * lambda * nu * nu - q(3, 2) * nu * nu * nu;
    const S second = q(1, 2) * lambda * lambda * nu * nu - lambda * nu * nu * nu + q(1, 2) * nu * nu * nu * nu;
    sol.Ak[2] = poly::trim(Poly<S>{S(0), first, second});
  }
  return sol;
}

template <class S>
struct GrassmannSqueezed {
  ParagrassmannSolution<S> normalizable;      // C_0 = 1
  ParagrassmannSolution<S> non_normalizable;  // proportional to z
};

// k0 = 2: [1 + z mu(lambda xi^2/2 - mu xi^3/3)] e^{lambda xi - mu xi^2/2}
template <class S>
GrassmannSqueezed<S> grassmann_squeezed_symbol(const S& lambda, const S& mu) {
  if (!(std::abs(ScalarTraits<S>::to_complex(mu)) < 1))
    throw Error(ErrorKind::NonNormalizable, "|mu| >= 1");
  std::vector<ParagrassmannSolution<S>> sols = solve_appendix_a(GrassmannODESpec<S>{lambda, mu, S(0), 2});
  return {sols[0], sols[1]};
}

// f in phi = C_0 exp(z A_1 + z^2 f + ...) e^g
template <class S>
NilpotentPoly<S> exponent_form(const ParagrassmannSolution<S>& sol) {
  NilpotentPoly<S> p = sol.prefactor();
  const S c0 = sol.C[0];
  if (ScalarTraits<S>::is_zero(c0)) throw Error(ErrorKind::NonNormalizable, "C_0 = 0");
  return nilpotent_log((S(1) / c0) * p);
}

template <class S>
NilpotentPoly<cplx> to_double(const NilpotentPoly<S>& p) {
  NilpotentPoly<cplx> r(p.k0);
  for (int k = 0; k < p.k0; ++k)
    for (const auto& c : p.coeffs[k]) r.coeffs[k].push_back(ScalarTraits<S>::to_complex(c));
  return r;
}

// Fock amplitudes of sum_k z^k P_k(a+) applied to the Gaussian symbol, numeric z
template <class S>
FockVector grassmann_fock_state(const ParagrassmannSolution<S>& sol, double z, const TruncationConfig& cfg) {
  const cplx lmn = ScalarTraits<S>::to_complex(sol.lambda_minus_nu), mu = ScalarTraits<S>::to_complex(sol.mu);
  CoefficientVector g = squeezed_symbol_coefficients(lmn, mu, cfg.dim - 1);
  FockVector base(cfg.dim);
  for (int n = 0; n < cfg.dim; ++n) base(n) = g.c[n];
  const NilpotentPoly<cplx> pre = to_double(sol.prefactor());
  std::vector<cplx> e;
  double zk = 1;
  for (int k = 0; k < pre.k0; ++k, zk *= z)
    for (std::size_t i = 0; i < pre.coeffs[k].size(); ++i) {
      if (e.size() <= i) e.resize(i + 1, cplx(0));
      e[i] += zk * pre.coeffs[k][i];
    }
  FockVector v = creation_polynomial(e, cfg) * base;
  check_tail(v, cfg, "grassmann_fock_state");
  return v;
}

// Omega (1 + z A_1(a+)) S D|0> for k0 = 2, lambda = beta e^{i theta}, mu = delta e^{i phi};
// Omega = 1 - Re<z A_1(a+)> makes the norm 1 up to z^2
struct GrassmannFockState {
  FockVector state;
  double omega = 1;
};

inline double grassmann_omega_derived(double delta, double phi, double beta, double theta, double z) {
  const cplx mu = std::polar(delta, phi), lam = std::polar(beta, theta);
  MatrixElementTable t = matrix_element_table(3, delta, phi, beta, theta);
  const cplx mean = z * mu * (lam / 2.0 * t.gamma[2][0] - mu / 3.0 * t.gamma[3][0]);
  return 1 - mean.real();
}

inline double grassmann_omega_printed(double delta, double phi, double beta, double theta, double z) {
  const double d2 = delta * delta, b2 = beta * beta, q = 1 - d2;
  return 1 - z * delta * beta / (2 * q * q) *
                 ((2 * d2 + b2 * (1 + d2) / q) * std::cos(theta - phi) -
                  delta * (1 + d2 + 2 * b2 / q) * std::cos(theta) +
                  d2 * b2 * (1 + 2 * d2 / (3 * q)) * std::cos(phi - 3 * theta) -
                  2 * delta * b2 / (3 * q) * std::cos(2 * phi - 3 * theta));
}

// printed = true uses the printed kernel z mu (mu a+^3/3 - lambda a+^2/2) and printed Omega
inline GrassmannFockState grassmann_squeezed_fock_state(double delta, double phi, double beta, double theta, double z,
                                                        const TruncationConfig& cfg, bool printed = false) {
  if (!(delta >= 0 && delta < 1)) throw Error(ErrorKind::BadParams, "delta must lie in [0,1)");
  const cplx mu = std::polar(delta, phi), lam = std::polar(beta, theta);
  FockVector base = squeezed_displaced_vacuum(delta, phi, beta, theta, cfg);
  check_tail(base, cfg, "grassmann_squeezed_fock_state");
  const double sign = printed ? -1 : 1;
  std::vector<cplx> k{0.0, 0.0, sign * z * mu * lam / 2.0, -sign * z * mu * mu / 3.0};
  GrassmannFockState out;
  out.omega = printed ? grassmann_omega_printed(delta, phi, beta, theta, z)
                      : grassmann_omega_derived(delta, phi, beta, theta, z);
  out.state = out.omega * (base + creation_polynomial(k, cfg) * base);
  return out;
}

}  // namespace qhd
