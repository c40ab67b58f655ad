#pragma once

// Matrix elements of ladder monomials in the squeezed-displaced state
// S D(beta e^{i theta}/sqrt(1-delta^2))|0>:
//   gamma[k][l]  = <(a+)^k a^l>,   lambda[k][l] = <a^k (a+)^l>.
// Both come from <0|exp(s P) exp(t R)|0> with P, R linear in a and a+,
// whose logarithm is a quadratic polynomial in (s, t).

#include <cmath>
#include <complex>
#include <vector>

#include "errors.hpp"

namespace qhd {

using cplx = std::complex<double>;

struct MatrixElementTable {
  int k_max = 0;
  std::vector<std::vector<cplx>> gamma, lambda_elem;
};

namespace detail {

// linear form c0 + c1 a + c2 a+
struct LinearForm {
  cplx c0, c1, c2;
};

// Taylor coefficients of exp(c1 s + c2 s^2) up to s^n
inline std::vector<cplx> gauss_1d(cplx c1, cplx c2, int n) {
  std::vector<cplx> r(std::size_t(n) + 1, cplx(0));
  r[0] = 1.0;
  // (k+1) r_{k+1} = c1 r_k + 2 c2 r_{k-1}
  for (int k = 0; k < n; ++k) {
    cplx acc = c1 * r[k];
    if (k >= 1) acc += 2.0 * c2 * r[k - 1];
    r[k + 1] = acc / double(k + 1);
  }
  return r;
}

// k! l! [s^k t^l] <0|exp(sP) exp(tR)|0> for all k, l <= n
inline std::vector<std::vector<cplx>> bilinear_moments(const LinearForm& P, const LinearForm& R, int n) {
  const std::vector<cplx> s = gauss_1d(P.c0, P.c1 * P.c2 / 2.0, n);
  const std::vector<cplx> t = gauss_1d(R.c0, R.c1 * R.c2 / 2.0, n);
  const cplx cross = P.c1 * R.c2;
  std::vector<double> fact(std::size_t(n) + 1, 1.0);
  for (int i = 1; i <= n; ++i) fact[i] = fact[i - 1] * i;
  std::vector<std::vector<cplx>> out(std::size_t(n) + 1, std::vector<cplx>(std::size_t(n) + 1));
  for (int k = 0; k <= n; ++k)
    for (int l = 0; l <= n; ++l) {
      cplx acc = 0;
      cplx cj = 1.0;
      for (int j = 0; j <= std::min(k, l); ++j) {
        acc += cj / fact[j] * (s[k - j] * t[l - j]);
        cj *= cross;
      }
      out[k][l] = acc * (fact[k] * fact[l]);
    }
  return out;
}

struct SqueezedFrame {
  LinearForm ad, a;  // images of a+ and a under the state's Gaussian map
};

// S^+ a S = (a - mu a+)/c, then displaced by alpha = lambda/c, c = sqrt(1-delta^2)
inline SqueezedFrame squeezed_frame(double delta, double phi, double beta, double theta) {
  if (!(delta >= 0 && delta < 1)) throw Error(ErrorKind::BadParams, "delta must lie in [0,1)");
  const double c = std::sqrt(1 - delta * delta);
  const cplx mu = std::polar(delta, phi);
  const cplx alpha = std::polar(beta, theta) / c;
  LinearForm a{(alpha - mu * std::conj(alpha)) / c, 1.0 / c, -mu / c};
  LinearForm ad{std::conj(a.c0), std::conj(a.c2), std::conj(a.c1)};
  return {ad, a};
}

}  // namespace detail

inline MatrixElementTable matrix_element_table(int k_max, double delta, double phi, double beta, double theta) {
  detail::SqueezedFrame f = detail::squeezed_frame(delta, phi, beta, theta);
  MatrixElementTable t;
  t.k_max = k_max;
  t.gamma = detail::bilinear_moments(f.ad, f.a, k_max);
  t.lambda_elem = detail::bilinear_moments(f.a, f.ad, k_max);
  return t;
}

inline cplx gamma_element(int k, int l, double delta, double phi, double beta, double theta) {
  return matrix_element_table(std::max(k, l), delta, phi, beta, theta).gamma[k][l];
}

inline cplx lambda_element(int k, int l, double delta, double phi, double beta, double theta) {
  return matrix_element_table(std::max(k, l), delta, phi, beta, theta).lambda_elem[k][l];
}

}  // namespace qhd
