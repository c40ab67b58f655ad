#pragma once

// Truncated power series in one variable. Used to get Taylor data of scalar
// functions at a point before composing them with a nilpotent matrix.

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace qhd {

using cplx = std::complex<double>;
using Series = std::vector<cplx>;

namespace series {

inline Series variable_at(cplx alpha, std::size_t n) {
  Series s(n, cplx(0));
  if (n > 0) s[0] = alpha;
  if (n > 1) s[1] = 1.0;
  return s;
}

inline Series constant(cplx c, std::size_t n) {
  Series s(n, cplx(0));
  if (n > 0) s[0] = c;
  return s;
}

inline Series add(const Series& a, const Series& b) {
  Series r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Series scale(const Series& a, cplx c) {
  Series r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
  return r;
}

inline Series mul(const Series& a, const Series& b) {
  const std::size_t n = a.size();
  Series r(n, cplx(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == cplx(0)) continue;
    for (std::size_t j = 0; i + j < n; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

inline Series inverse(const Series& a) {
  const std::size_t n = a.size();
  if (n == 0) return {};
  if (a[0] == cplx(0)) throw std::domain_error("series inverse: zero constant term");
  Series r(n, cplx(0));
  r[0] = 1.0 / a[0];
  for (std::size_t k = 1; k < n; ++k) {
    cplx acc = 0;
    for (std::size_t j = 1; j <= k; ++j) acc += a[j] * r[k - j];
    r[k] = -acc * r[0];
  }
  return r;
}

// principal branch for the constant term
inline Series sqrt(const Series& a) {
  const std::size_t n = a.size();
  if (n == 0) return {};
  if (a[0] == cplx(0)) throw std::domain_error("series sqrt: zero constant term");
  Series r(n, cplx(0));
  r[0] = std::sqrt(a[0]);
  for (std::size_t k = 1; k < n; ++k) {
    cplx acc = a[k];
    for (std::size_t j = 1; j < k; ++j) acc -= r[j] * r[k - j];
    r[k] = acc / (2.0 * r[0]);
  }
  return r;
}

inline Series derivative(const Series& a) {
  const std::size_t n = a.size();
  Series r(n, cplx(0));
  for (std::size_t k = 1; k < n; ++k) r[k - 1] = double(k) * a[k];
  return r;
}

inline Series integrate(const Series& a, cplx c0) {
  const std::size_t n = a.size();
  Series r(n, cplx(0));
  if (n == 0) return r;
  r[0] = c0;
  for (std::size_t k = 1; k < n; ++k) r[k] = a[k - 1] / double(k);
  return r;
}

// exp(a) via a' exp(a) = (exp a)'
inline Series exp(const Series& a) {
  const std::size_t n = a.size();
  if (n == 0) return {};
  Series r(n, cplx(0));
  r[0] = std::exp(a[0]);
  for (std::size_t k = 1; k < n; ++k) {
    cplx acc = 0;
    for (std::size_t j = 1; j <= k; ++j) acc += double(j) * a[j] * r[k - j];
    r[k] = acc / double(k);
  }
  return r;
}

inline Series asinh(const Series& u) {
  const std::size_t n = u.size();
  if (n == 0) return {};
  Series one_plus_u2 = add(constant(1.0, n), mul(u, u));
  Series d = mul(derivative(u), inverse(sqrt(one_plus_u2)));
  return integrate(d, std::asinh(u[0]));
}

inline Series sinh(const Series& u) {
  Series e = exp(u), em = exp(scale(u, -1.0));
  return scale(add(e, scale(em, -1.0)), 0.5);
}

inline Series cosh(const Series& u) {
  Series e = exp(u), em = exp(scale(u, -1.0));
  return scale(add(e, em), 0.5);
}

}  // namespace series
}  // namespace qhd
