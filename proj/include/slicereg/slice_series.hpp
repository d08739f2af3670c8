#pragma once

/**
 * @file slice_series.hpp
 * @brief Slice regular functions on the unit ball as truncated power series.
 *
 * A SliceSeries holds right coefficients a_0..a_N of f(q) = sum q^n a_n.  The
 * *-product is the Cauchy convolution of coefficient sequences; with it the
 * series form an algebra with regular conjugate f^c, symmetrization
 * f^s = f * f^c (real coefficients) and *-inverse f^{-*} = (1/f^s) * f^c.
 *
 * On a slice C(i) every f splits as F + G j with F, G holomorphic
 * C(i)-valued (j orthogonal to i); off the slice values are recovered from
 * the pair f(x + iy), f(x - iy) by the representation formula.
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "slicereg/errors.hpp"
#include "slicereg/quaternion.hpp"

namespace slicereg {

/// Floor below which a quaternion is treated as zero for inversions.
inline constexpr double kZeroFloor = 1e-9;

class SliceSeries {
 public:
  /// Throws ValidationError for an empty list or a non-finite coefficient.
  explicit SliceSeries(std::vector<Quat> coefficients) : coeffs_(std::move(coefficients)) {
    if (coeffs_.empty()) {
      throw ValidationError("a series needs at least one coefficient");
    }
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
      if (!is_finite(coeffs_[n])) {
        throw ValidationError("coefficient " + std::to_string(n) + " is not finite");
      }
    }
  }

  SliceSeries(std::initializer_list<Quat> coefficients)
      : SliceSeries(std::vector<Quat>(coefficients)) {}

  static SliceSeries constant(const Quat& c) { return SliceSeries({c}); }
  static SliceSeries zero() { return constant(Quat{}); }

  std::size_t degree() const { return coeffs_.size() - 1; }
  std::span<const Quat> coefficients() const { return coeffs_; }
  const Quat& operator[](std::size_t n) const { return coeffs_[n]; }
  /// Coefficient n, zero past the degree.
  Quat coefficient(std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : Quat{}; }

  bool operator==(const SliceSeries&) const = default;

 private:
  std::vector<Quat> coeffs_;
};

using PointwiseFunction = std::function<Quat(const Quat&)>;

/// Horner evaluation a_0 + q(a_1 + q(a_2 + ...)).  Powers of q commute with q,
/// so left powers with right coefficients are preserved.
inline Quat evaluate(const SliceSeries& f, const Quat& q) {
  const auto a = f.coefficients();
  Quat acc = a.back();
  for (std::size_t n = a.size() - 1; n-- > 0;) acc = q * acc + a[n];
  return acc;
}

inline SliceSeries operator+(const SliceSeries& f, const SliceSeries& g) {
  std::vector<Quat> c(std::max(f.degree(), g.degree()) + 1);
  for (std::size_t n = 0; n < c.size(); ++n) c[n] = f.coefficient(n) + g.coefficient(n);
  return SliceSeries(std::move(c));
}

/// The function q -> f(q) a (right scalar multiplication).
inline SliceSeries right_multiply(const SliceSeries& f, const Quat& a) {
  std::vector<Quat> c(f.coefficients().begin(), f.coefficients().end());
  for (auto& x : c) x = x * a;
  return SliceSeries(std::move(c));
}

/// Keep coefficients 0..degree (padding with zeros if shorter).
inline SliceSeries truncate(const SliceSeries& f, std::size_t degree) {
  std::vector<Quat> c(degree + 1);
  for (std::size_t n = 0; n <= degree; ++n) c[n] = f.coefficient(n);
  return SliceSeries(std::move(c));
}

inline SliceSeries cullen_derivative(const SliceSeries& f) {
  if (f.degree() == 0) return SliceSeries::zero();
  std::vector<Quat> c(f.degree());
  for (std::size_t n = 1; n <= f.degree(); ++n) c[n - 1] = f[n] * static_cast<double>(n);
  return SliceSeries(std::move(c));
}

/// Coefficient n of f*g is sum_{k<=n} a_k b_{n-k}.
inline SliceSeries star_product(const SliceSeries& f, const SliceSeries& g) {
  std::vector<Quat> c(f.degree() + g.degree() + 1);
  for (std::size_t k = 0; k <= f.degree(); ++k) {
    for (std::size_t m = 0; m <= g.degree(); ++m) c[k + m] += f[k] * g[m];
  }
  return SliceSeries(std::move(c));
}

/// f*g(q) = f(q) g(f(q)^{-1} q f(q)).  Throws ZeroBase if ||f(q)|| < floor.
inline Quat star_pointwise(const SliceSeries& f, const SliceSeries& g, const Quat& q,
                           double floor = kZeroFloor) {
  const Quat fq = evaluate(f, q);
  if (norm(fq) < floor) {
    throw ZeroBase("star_pointwise: ||f(q)|| = " + std::to_string(norm(fq)) +
                   " is below the floor");
  }
  return fq * evaluate(g, inverse(fq) * q * fq);
}

inline SliceSeries regular_conjugate(const SliceSeries& f) {
  std::vector<Quat> c(f.coefficients().begin(), f.coefficients().end());
  for (auto& x : c) x = conjugate(x);
  return SliceSeries(std::move(c));
}

/// f^s = f * f^c, checked against f^c * f.  Coefficients are real up to
/// roundoff; their vector parts are verified and zeroed.
inline SliceSeries symmetrization(const SliceSeries& f) {
  const SliceSeries fc = regular_conjugate(f);
  const SliceSeries left = star_product(f, fc);
  const SliceSeries right = star_product(fc, f);
  std::vector<Quat> c(left.degree() + 1);
  for (std::size_t n = 0; n <= left.degree(); ++n) {
    double scale = 1.0;
    for (std::size_t k = 0; k <= n; ++k) scale += norm(f.coefficient(k)) * norm(f.coefficient(n - k));
    if (norm(left[n] - right[n]) > 1e-10 * scale) {
      throw AsymmetryDetected("f*f^c and f^c*f differ at coefficient " + std::to_string(n));
    }
    if (norm(left[n].vector_part()) > 1e-12 * scale) {
      throw AsymmetryDetected("f^s coefficient " + std::to_string(n) + " is not real");
    }
    c[n] = Quat{left[n].x0};
  }
  return SliceSeries(std::move(c));
}

/// Reciprocal of a real-coefficient series through degree `degree`, by the
/// recursion r_0 = 1/s_0, r_n = -(1/s_0) sum_{k=1}^{n} s_k r_{n-k}.
inline std::vector<double> real_series_reciprocal(std::span<const double> s, std::size_t degree) {
  std::vector<double> r(degree + 1, 0.0);
  r[0] = 1.0 / s[0];
  for (std::size_t n = 1; n <= degree; ++n) {
    double acc = 0.0;
    for (std::size_t k = 1; k <= n && k < s.size(); ++k) acc += s[k] * r[n - k];
    r[n] = -acc / s[0];
  }
  return r;
}

/// f^{-*} = (1/f^s) * f^c truncated to degree M.
inline SliceSeries star_inverse(const SliceSeries& f, std::size_t M) {
  const SliceSeries fs = symmetrization(f);
  if (std::abs(fs[0].x0) < kZeroFloor) {
    throw NotInvertibleAtOrigin("constant term of f^s is below the floor");
  }
  std::vector<double> s(fs.degree() + 1);
  for (std::size_t n = 0; n <= fs.degree(); ++n) s[n] = fs[n].x0;
  const std::vector<double> r = real_series_reciprocal(s, M);
  const SliceSeries fc = regular_conjugate(f);
  std::vector<Quat> c(M + 1);
  for (std::size_t n = 0; n <= M; ++n) {
    for (std::size_t k = 0; k <= n; ++k) c[n] += r[k] * fc.coefficient(n - k);
  }
  return SliceSeries(std::move(c));
}

/// (f^{-*})' = -f^{-*} * f' * f^{-*} truncated to degree M.
inline SliceSeries star_inverse_derivative(const SliceSeries& f, std::size_t M) {
  const SliceSeries inv = star_inverse(f, M);
  const SliceSeries product =
      star_product(star_product(inv, cullen_derivative(f)), inv);
  std::vector<Quat> c(M + 1);
  for (std::size_t n = 0; n <= M; ++n) c[n] = -product.coefficient(n);
  return SliceSeries(std::move(c));
}

/// Power series with coefficients in a slice C(i), stored as std::complex
/// (real part, component along i).
struct ComplexSeries {
  std::vector<std::complex<double>> coefficients;

  std::complex<double> operator()(std::complex<double> z) const {
    std::complex<double> acc = coefficients.back();
    for (std::size_t n = coefficients.size() - 1; n-- > 0;) acc = z * acc + coefficients[n];
    return acc;
  }

  ComplexSeries derivative() const {
    if (coefficients.size() <= 1) return {{0.0}};
    ComplexSeries d;
    for (std::size_t n = 1; n < coefficients.size(); ++n) {
      d.coefficients.push_back(coefficients[n] * static_cast<double>(n));
    }
    return d;
  }

  bool is_zero() const {
    return std::all_of(coefficients.begin(), coefficients.end(),
                       [](std::complex<double> c) { return c == 0.0; });
  }
};

/// f restricted to C(i) written as F + G j.
struct Splitting {
  ComplexSeries F;
  ComplexSeries G;
  ImaginaryUnit i;
  ImaginaryUnit j;

  /// F(z) + G(z) j as a quaternion, z a coordinate in C(i).
  Quat recombine(std::complex<double> z) const {
    return in_slice(F(z), i) + in_slice(G(z), i) * j.as_quaternion();
  }
};

/// Decomposes a = alpha + beta j with alpha, beta in C(i), using
/// 2 alpha = a - i a i and 2 beta j = a + i a i.
inline std::pair<std::complex<double>, std::complex<double>> split_quaternion(
    const Quat& a, const ImaginaryUnit& i, const ImaginaryUnit& j) {
  const Quat alpha = i_sandwich(a, i, -1) * 0.5;
  const Quat beta = (i_sandwich(a, i, +1) * 0.5) * (-j.as_quaternion());  // w j^{-1}
  return {slice_coordinate(alpha, i), slice_coordinate(beta, i)};
}

inline Splitting split(const SliceSeries& f, const ImaginaryUnit& i) {
  const ImaginaryUnit j = orthogonal_unit(i);
  Splitting s{{}, {}, i, j};
  for (const Quat& a : f.coefficients()) {
    const auto [alpha, beta] = split_quaternion(a, i, j);
    s.F.coefficients.push_back(alpha);
    s.G.coefficients.push_back(beta);
  }
  return s;
}

/// f(x + Iq y) = 1/2 [f(x+iy) + f(x-iy)] + 1/2 Iq i [f(x-iy) - f(x+iy)].
inline Quat representation_extend(const Quat& fplus, const Quat& fminus, const ImaginaryUnit& i,
                                  const ImaginaryUnit& Iq) {
  return (fplus + fminus) * 0.5 +
         Iq.as_quaternion() * i.as_quaternion() * (fminus - fplus) * 0.5;
}

/// Value of f at an arbitrary q from its values on the slice C(i).
inline Quat evaluate_via_slice(const SliceSeries& f, const Quat& q, const ImaginaryUnit& i) {
  const SliceCoordinates c = slice_decompose(q);
  if (c.is_real()) return evaluate(f, q);
  return representation_extend(evaluate(f, in_slice(c.x, c.y, i)),
                               evaluate(f, in_slice(c.x, -c.y, i)), i, *c.unit);
}

inline bool is_intrinsic(const SliceSeries& f, double tol = 1e-12) {
  return std::all_of(f.coefficients().begin(), f.coefficients().end(),
                     [tol](const Quat& a) { return norm(a.vector_part()) <= tol; });
}

/// ||1/2 (D_x + i D_y) f(z)|| with centered differences of step h.
inline double slice_cr_residual(const PointwiseFunction& f, const Quat& z, const ImaginaryUnit& i,
                                double h) {
  const Quat dx{h};
  const Quat dy = i.as_quaternion() * h;
  for (const Quat& p : {z + dx, z - dx, z + dy, z - dy}) {
    if (norm(p) > 1.0) throw StepOutOfDomain("finite-difference stencil leaves the closed ball");
  }
  const Quat ddx = (f(z + dx) - f(z - dx)) / (2.0 * h);
  const Quat ddy = (f(z + dy) - f(z - dy)) / (2.0 * h);
  return norm((ddx + i.as_quaternion() * ddy) * 0.5);
}

inline PointwiseFunction as_pointwise(SliceSeries f) {
  return [g = std::move(f)](const Quat& q) { return evaluate(g, q); };
}

}  // namespace slicereg
