#pragma once

/**
 * @file poisson.hpp
 * @brief Slice Poisson integrals P_i[u](q) by the periodic trapezoid rule.
 *
 *   P_i[u](q) = 1/(2 pi) int_0^{2pi} u(e^{it}) (1 - |q|^2) / |q - e^{it}|^2 dt
 *
 * The kernel uses the quaternionic norm, so q may be any point of the ball.
 * For smooth u the trapezoid rule converges geometrically with rate |q|.
 */

#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "slicereg/errors.hpp"
#include "slicereg/quaternion.hpp"
#include "slicereg/slice_series.hpp"

namespace slicereg {

inline constexpr int kDefaultNodes = 4096;

/// u(e^{it}) as a function of the angle t, for a fixed slice.
using BoundaryFunction = std::function<double(double)>;
/// A real function of boundary points of the ball, independent of the slice.
using SurfaceFunction = std::function<double(const Quat&)>;

/// e^{it} = cos t + i sin t.
inline Quat slice_exp(double t, const ImaginaryUnit& i) {
  return in_slice(std::cos(t), std::sin(t), i);
}

inline void check_poisson_point(const Quat& q, int nodes) {
  if (nodes < 16) throw DomainError("Poisson quadrature needs at least 16 nodes");
  const double r = norm(q);
  if (!(r < 1.0)) throw BoundaryTooClose("Poisson point must lie in the open ball");
  if (1.0 - r < 10.0 / nodes) {
    throw BoundaryTooClose("1 - |q| = " + std::to_string(1.0 - r) + " is below 10/nodes");
  }
}

/// Boundary samples of u cached once; evaluates the trapezoid rule at many
/// interior points.
class PoissonQuadrature {
 public:
  PoissonQuadrature(const BoundaryFunction& u, const ImaginaryUnit& i, int nodes = kDefaultNodes)
      : i_(i), nodes_(nodes) {
    if (nodes < 16) throw DomainError("Poisson quadrature needs at least 16 nodes");
    points_.reserve(std::size_t(nodes));
    values_.reserve(std::size_t(nodes));
    for (int k = 0; k < nodes; ++k) {
      const double t = 2.0 * std::numbers::pi * double(k) / double(nodes);
      points_.push_back(slice_exp(t, i));
      values_.push_back(u(t));
    }
  }

  double operator()(const Quat& q) const {
    check_poisson_point(q, nodes_);
    const double num = 1.0 - norm_squared(q);
    double total = 0.0;
    for (std::size_t k = 0; k < points_.size(); ++k) {
      total += values_[k] * num / norm_squared(q - points_[k]);
    }
    return total / double(nodes_);
  }

  const ImaginaryUnit& slice() const { return i_; }
  int nodes() const { return nodes_; }

 private:
  ImaginaryUnit i_;
  int nodes_;
  std::vector<Quat> points_;
  std::vector<double> values_;
};

inline double poisson_integral(const BoundaryFunction& u, const Quat& q, const ImaginaryUnit& i,
                               int nodes = kDefaultNodes) {
  check_poisson_point(q, nodes);
  return PoissonQuadrature(u, i, nodes)(q);
}

enum class DefectMode { plus, minus, modulus, modulus_squared_component };

/// The real function g(v) whose harmonic defect is taken:
///   plus:  ||v + i v i||      minus: ||v - i v i||      modulus: ||v||
///   modulus_squared_component k: ||v_k||^2 with v_1 = (v - i v i)/2,
///   ||v_2|| = ||v + i v i|| / 2.
inline double defect_integrand(const Quat& v, const ImaginaryUnit& i, DefectMode mode,
                               int component = 1) {
  switch (mode) {
    case DefectMode::plus: return norm(i_sandwich(v, i, +1));
    case DefectMode::minus: return norm(i_sandwich(v, i, -1));
    case DefectMode::modulus: return norm(v);
    case DefectMode::modulus_squared_component: {
      const double c = 0.5 * norm(i_sandwich(v, i, component == 1 ? -1 : +1));
      return c * c;
    }
  }
  return 0.0;
}

inline BoundaryFunction boundary_values(const SliceSeries& f, const ImaginaryUnit& i, DefectMode mode,
                                        int component = 1) {
  return [f, i, mode, component](double t) {
    return defect_integrand(evaluate(f, slice_exp(t, i)), i, mode, component);
  };
}

/// P_i[g](x) - g(x) for g = defect_integrand(f(.)).  Non-negative up to
/// quadrature error when g is the modulus (or squared modulus) of holomorphic
/// components.
inline double harmonic_defect(const SliceSeries& f, const Quat& x, const ImaginaryUnit& i,
                              DefectMode mode, int nodes = kDefaultNodes, int component = 1) {
  const double p = poisson_integral(boundary_values(f, i, mode, component), x, i, nodes);
  return p - defect_integrand(evaluate(f, x), i, mode, component);
}

/// |P_{T_r(i)}[u](q) - P_i[u o T_r](T_r^{-1}(q))| for a function u on the
/// boundary sphere.  The two sides are independent quadratures on different
/// slices.
inline double rotation_equivariance_residual(const SurfaceFunction& u, const Quat& r, const Quat& q,
                                             const ImaginaryUnit& i, int nodes = kDefaultNodes) {
  const ImaginaryUnit ri = rotate(r, i);
  const double lhs = poisson_integral([&](double t) { return u(slice_exp(t, ri)); }, q, ri, nodes);
  const double rhs = poisson_integral([&](double t) { return u(rotate(r, slice_exp(t, i))); },
                                      rotate(conjugate(r), q), i, nodes);
  return std::abs(lhs - rhs);
}

struct KernelBound {
  double lhs = 0.0;
  double rhs = 0.0;
};

/// lhs = 1/(2 pi) int || (x - e^{jt})^{-*2} * f(e^{jt}) || (1 - |x|^2) dt via
///   1/2 [(1 + j i)(x - e^{-it})^{-2} f(e^{-it}) + (1 - j i)(x - e^{it})^{-2} f(e^{it})],
/// rhs = 2 P_i[||f||](x).
inline KernelBound star_kernel_bound(const SliceSeries& f, const Quat& x, const ImaginaryUnit& i,
                                     const ImaginaryUnit& j, int nodes = kDefaultNodes) {
  check_poisson_point(x, nodes);
  const Quat ji = j.as_quaternion() * i.as_quaternion();
  const Quat plus = Quat{1.0} + ji;
  const Quat minus = Quat{1.0} - ji;
  const double weight = 1.0 - norm_squared(x);
  double lhs = 0.0;
  for (int k = 0; k < nodes; ++k) {
    const double t = 2.0 * std::numbers::pi * double(k) / double(nodes);
    const Quat ep = slice_exp(t, i);
    const Quat em = conjugate(ep);
    const Quat inv_p = inverse(x - ep);
    const Quat inv_m = inverse(x - em);
    const Quat integrand =
        (plus * (inv_m * inv_m) * evaluate(f, em) + minus * (inv_p * inv_p) * evaluate(f, ep)) * 0.5;
    lhs += norm(integrand) * weight;
  }
  lhs /= double(nodes);
  const double rhs =
      2.0 * poisson_integral(boundary_values(f, i, DefectMode::modulus), x, i, nodes);
  return {lhs, rhs};
}

}  // namespace slicereg
