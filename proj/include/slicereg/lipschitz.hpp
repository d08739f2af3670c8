#pragma once

/**
 * @file lipschitz.hpp
 * @brief Sampled Lipschitz-type norms, Dyakonov seminorms and derivative
 *        functionals of slice regular functions.
 *
 * Every estimate is a maximum over the sampled pairs or points, i.e. a lower
 * bound for the true supremum.  Slice estimators work in complex
 * coordinates, so the same plan on two slices samples rotated copies of the
 * same points.
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "slicereg/errors.hpp"
#include "slicereg/majorant.hpp"
#include "slicereg/poisson.hpp"
#include "slicereg/quaternion.hpp"
#include "slicereg/sampling.hpp"
#include "slicereg/slice_series.hpp"

namespace slicereg {

struct NormEstimate {
  double value = 0.0;
  std::pair<Quat, Quat> argmax{};
  std::size_t samples_used = 0;
};

namespace detail {

/// Running maximum; ratios that are NaN mark skipped samples.
struct SupAccumulator {
  NormEstimate est;
  bool any = false;

  void add(double ratio, const Quat& x, const Quat& y) {
    if (std::isnan(ratio)) return;
    ++est.samples_used;
    if (!any || ratio > est.value) {
      est.value = ratio;
      est.argmax = {x, y};
    }
    any = true;
  }

  NormEstimate finish(const char* what) {
    if (!any) throw DegeneratePlan(std::string(what) + ": no valid samples");
    return est;
  }
};

inline constexpr double kSkip = std::numeric_limits<double>::quiet_NaN();

/// diff / w(d), skipping coincident points.
inline double increment_ratio(double diff, double d, const Majorant& w) {
  if (!(d > 0.0)) return kSkip;
  const double wd = evaluate_majorant(w, d);
  if (wd > 0.0) return diff / wd;
  return diff > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
}

/// Maximum of `value(angle)` on [0, 2pi): `samples` equispaced angles, then
/// golden-section refinement in the bracket around the best sample.
template <class Fn>
double max_on_circle(Fn&& value, std::size_t samples) {
  const double h = 2.0 * std::numbers::pi / double(samples);
  double best = -std::numeric_limits<double>::infinity();
  double best_t = 0.0;
  for (std::size_t k = 0; k < samples; ++k) {
    const double t = h * double(k);
    const double v = value(t);
    if (v > best) {
      best = v;
      best_t = t;
    }
  }
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = best_t - h, b = best_t + h;
  double c = b - g * (b - a), d = a + g * (b - a);
  double fc = value(c), fd = value(d);
  for (int it = 0; it < 60; ++it) {
    if (fc > fd) {
      b = d; d = c; fd = fc;
      c = b - g * (b - a); fc = value(c);
    } else {
      a = c; c = d; fc = fd;
      d = a + g * (b - a); fd = value(d);
    }
  }
  return std::max({best, fc, fd});
}

}  // namespace detail

/// sup ||f(x) - f(y)|| / w(||x - y||) over sampled pairs of D_i (|z| <= rho).
inline NormEstimate slice_norm(const SliceSeries& f, const Majorant& w, const ImaginaryUnit& i,
                               const SamplePlan& plan) {
  detail::SupAccumulator acc;
  for (const auto& [zx, zy] : slice_pairs(plan, plan.max_radius)) {
    const Quat x = in_slice(zx, i), y = in_slice(zy, i);
    acc.add(detail::increment_ratio(norm(evaluate(f, x) - evaluate(f, y)), std::abs(zx - zy), w), x, y);
  }
  return acc.finish("slice_norm");
}

struct ComponentConstants {
  NormEstimate first;   // sup |F(x)-F(y)| / w1
  NormEstimate second;  // sup |G(x)-G(y)| / w2
};

/// The two one-component constants of f = F + G j on D_i, on the same pairs
/// as component_norm.
inline ComponentConstants component_constants(const SliceSeries& f, const Majorant& w1,
                                              const Majorant& w2, const ImaginaryUnit& i,
                                              const SamplePlan& plan) {
  const Splitting s = split(f, i);
  detail::SupAccumulator a1, a2;
  for (const auto& [zx, zy] : slice_pairs(plan, plan.max_radius)) {
    const double d = std::abs(zx - zy);
    const Quat x = in_slice(zx, i), y = in_slice(zy, i);
    a1.add(detail::increment_ratio(std::abs(s.F(zx) - s.F(zy)), d, w1), x, y);
    a2.add(detail::increment_ratio(std::abs(s.G(zx) - s.G(zy)), d, w2), x, y);
  }
  return {a1.finish("component_constants"), a2.finish("component_constants")};
}

/// sqrt of sup |F(x)-F(y)|^2/w1^2 + |G(x)-G(y)|^2/w2^2.
inline NormEstimate component_norm(const SliceSeries& f, const Majorant& w1, const Majorant& w2,
                                   const ImaginaryUnit& i, const SamplePlan& plan) {
  const Splitting s = split(f, i);
  detail::SupAccumulator acc;
  for (const auto& [zx, zy] : slice_pairs(plan, plan.max_radius)) {
    const double d = std::abs(zx - zy);
    const Quat x = in_slice(zx, i), y = in_slice(zy, i);
    const double r1 = detail::increment_ratio(std::abs(s.F(zx) - s.F(zy)), d, w1);
    const double r2 = detail::increment_ratio(std::abs(s.G(zx) - s.G(zy)), d, w2);
    acc.add(std::isnan(r1) ? r1 : r1 * r1 + r2 * r2, x, y);
  }
  NormEstimate e = acc.finish("component_norm");
  e.value = std::sqrt(e.value);
  return e;
}

/// sup over sampled pairs of the 4-ball |q| <= rho.
inline NormEstimate global_norm(const SliceSeries& f, const Majorant& w, const SamplePlan& plan) {
  detail::SupAccumulator acc;
  for (const auto& [x, y] : ball_pairs(plan)) {
    acc.add(detail::increment_ratio(norm(evaluate(f, x) - evaluate(f, y)), norm(x - y), w), x, y);
  }
  return acc.finish("global_norm");
}

/// sup over sampled pairs of the circle S_i.
inline NormEstimate boundary_norm(const SliceSeries& f, const Majorant& w, const ImaginaryUnit& i,
                                  const SamplePlan& plan) {
  detail::SupAccumulator acc;
  for (const auto& [zx, zy] : circle_pairs(plan)) {
    const Quat x = in_slice(zx, i), y = in_slice(zy, i);
    acc.add(detail::increment_ratio(norm(evaluate(f, x) - evaluate(f, y)), std::abs(zx - zy), w), x, y);
  }
  return acc.finish("boundary_norm");
}

/// Boundary norm of the modulus ||f|| on S_i.
inline NormEstimate boundary_modulus_norm(const SliceSeries& f, const Majorant& w,
                                          const ImaginaryUnit& i, const SamplePlan& plan) {
  detail::SupAccumulator acc;
  for (const auto& [zx, zy] : circle_pairs(plan)) {
    const Quat x = in_slice(zx, i), y = in_slice(zy, i);
    acc.add(detail::increment_ratio(std::abs(norm(evaluate(f, x)) - norm(evaluate(f, y))),
                                    std::abs(zx - zy), w),
            x, y);
  }
  return acc.finish("boundary_modulus_norm");
}

struct Seminorms {
  double N1 = 0.0;
  double N2 = 0.0;
  double N3 = 0.0;
  double boundary = 0.0;  // Lambda_w(S^1) norm of |fk|, shared by N1 and N2
  double defect = 0.0;    // sup (P[|fk|] - |fk|)(x) / w(1 - |x|)
  double radial = 0.0;    // sup ||fk(z)| - |fk(rz)|| / w(1 - r)
};

/// Largest radius at which the Poisson quadrature with `nodes` is accepted.
inline double poisson_radius(const SamplePlan& plan, int nodes) {
  return std::min(plan.max_radius, 1.0 - 10.0 / double(nodes) - 1e-12);
}

/**
 * N1, N2, N3 of a holomorphic component fk:
 *   N1 = || |fk| ||_{S^1} + sup_x (P[|fk|](x) - |fk(x)|) / w(1 - |x|)
 *   N2 = || |fk| ||_{S^1} + sup_{z in S^1, 0 <= r < 1} ||fk(z)| - |fk(rz)|| / w(1 - r)
 *   N3 = || |fk| ||_{closed disc}
 * The radial grid of N2 has 1 - r log-spaced from 1 down to epsilon.
 */
inline Seminorms seminorms_N(const ComplexSeries& fk, const Majorant& w, const ImaginaryUnit& i,
                             const SamplePlan& plan, int nodes = kDefaultNodes) {
  const auto modulus = [&fk](std::complex<double> z) { return std::abs(fk(z)); };
  Seminorms out;

  detail::SupAccumulator b;
  for (const auto& [x, y] : circle_pairs(plan)) {
    b.add(detail::increment_ratio(std::abs(modulus(x) - modulus(y)), std::abs(x - y), w),
          in_slice(x, i), in_slice(y, i));
  }
  out.boundary = b.finish("seminorms_N").value;

  const PoissonQuadrature P([&](double t) { return modulus(std::polar(1.0, t)); }, i, nodes);
  detail::SupAccumulator defect;
  for (const auto& z : disc_points(plan, poisson_radius(plan, nodes))) {
    const Quat x = in_slice(z, i);
    const double gap = 1.0 - std::abs(z);
    defect.add((P(x) - modulus(z)) / evaluate_majorant(w, gap), x, x);
  }
  out.defect = defect.finish("seminorms_N").value;

  constexpr int kRadialLevels = 48;
  detail::SupAccumulator radial;
  for (double t : circle_angles(plan)) {
    const auto zeta = std::polar(1.0, t);
    const double edge = modulus(zeta);
    for (int m = 0; m <= kRadialLevels; ++m) {
      // m = 0 is r = 0; then 1 - r runs geometrically from 1 to epsilon.
      const double gap = m == 0 ? 1.0
                                : std::pow(plan.min_separation, double(m) / double(kRadialLevels));
      const double r = 1.0 - gap;
      radial.add(std::abs(edge - modulus(r * zeta)) / evaluate_majorant(w, gap), in_slice(zeta, i),
                 in_slice(r * zeta, i));
    }
  }
  out.radial = radial.finish("seminorms_N").value;

  detail::SupAccumulator closed;
  for (const auto& [x, y] : slice_pairs(plan, 1.0)) {
    closed.add(detail::increment_ratio(std::abs(modulus(x) - modulus(y)), std::abs(x - y), w),
               in_slice(x, i), in_slice(y, i));
  }
  out.N3 = closed.finish("seminorms_N").value;

  out.N1 = out.boundary + out.defect;
  out.N2 = out.boundary + out.radial;
  return out;
}

enum class DerivativeMode { full, plus, minus };

inline double derivative_modulus(const Quat& d, const ImaginaryUnit& i, DerivativeMode mode) {
  switch (mode) {
    case DerivativeMode::full: return norm(d);
    case DerivativeMode::plus: return norm(i_sandwich(d, i, +1));
    case DerivativeMode::minus: return norm(i_sandwich(d, i, -1));
  }
  return 0.0;
}

/// sup over sampled x in D_i (|x| <= rho) of m(f'(x)) (1 - |x|) / w(1 - |x|),
/// m the norm (full) or the norm of f' +- i f' i.
inline NormEstimate derivative_ratio(const SliceSeries& f, const Majorant& w, const ImaginaryUnit& i,
                                     DerivativeMode mode, const SamplePlan& plan) {
  const SliceSeries df = cullen_derivative(f);
  detail::SupAccumulator acc;
  for (const auto& z : disc_points(plan, plan.max_radius)) {
    const Quat x = in_slice(z, i);
    const double gap = 1.0 - std::abs(z);
    acc.add(derivative_modulus(evaluate(df, x), i, mode) * gap / evaluate_majorant(w, gap), x, x);
  }
  return acc.finish("derivative_ratio");
}

/// sup over sampled q in the 4-ball (|q| <= rho) of ||f'(q)|| (1 - |q|) / w(1 - |q|).
inline NormEstimate global_derivative_ratio(const SliceSeries& f, const Majorant& w,
                                            const SamplePlan& plan) {
  const SliceSeries df = cullen_derivative(f);
  detail::SupAccumulator acc;
  for (const Quat& q : ball_points(plan, plan.max_radius)) {
    const double gap = 1.0 - norm(q);
    acc.add(norm(evaluate(df, q)) * gap / evaluate_majorant(w, gap), q, q);
  }
  return acc.finish("global_derivative_ratio");
}

struct BoundedGrowth {
  double lhs_plus = 0.0;   // 1/2 (1-|x|) ||f' + i f' i|| + ||f + i f i||
  double lhs_minus = 0.0;  // same with minus signs
  double M = 0.0;          // sup ||f(y)||, |y - x| <= 1 - |x|, y in D_i
  double M1 = 0.0;         // same for |F|
  double M2 = 0.0;         // same for |G|
  double fact5_lhs = 0.0;  // 1/4 (1-|x|)^2 ||f'||^2 + ||f||^2
  double fact5_rhs = 0.0;  // (|x|-1)(|F'||F| + |G'||G|) + M1^2 + M2^2

  /// Smallest slack of the three contracts lhs+- <= 2M and fact5_lhs <= fact5_rhs.
  double min_slack() const {
    return std::min({2.0 * M - lhs_plus, 2.0 * M - lhs_minus, fact5_rhs - fact5_lhs});
  }
};

/// Growth bounds at x in D_i.  The suprema over the disc |y - x| <= 1 - |x|
/// are taken on its boundary circle (maximum principle for the subharmonic
/// moduli) with plan.n_points samples plus golden-section refinement.
inline BoundedGrowth bounded_growth_check(const SliceSeries& f, const Quat& x, const ImaginaryUnit& i,
                                          const SamplePlan& plan) {
  const std::complex<double> c = slice_coordinate(x, i);
  const double R = 1.0 - std::abs(c);
  if (!(R > 0.0)) throw DomainError("bounded_growth_check needs |x| < 1");
  const Splitting s = split(f, i);
  const ComplexSeries dF = s.F.derivative(), dG = s.G.derivative();
  const Quat fx = evaluate(f, x);
  const Quat dfx = evaluate(cullen_derivative(f), x);
  const std::size_t n = std::max<std::size_t>(plan.n_points, 16);
  const auto on_circle = [&](double t) { return c + std::polar(R, t); };

  BoundedGrowth g;
  g.lhs_plus = 0.5 * R * norm(i_sandwich(dfx, i, +1)) + norm(i_sandwich(fx, i, +1));
  g.lhs_minus = 0.5 * R * norm(i_sandwich(dfx, i, -1)) + norm(i_sandwich(fx, i, -1));
  g.M = detail::max_on_circle([&](double t) { return norm(evaluate(f, in_slice(on_circle(t), i))); }, n);
  g.M1 = detail::max_on_circle([&](double t) { return std::abs(s.F(on_circle(t))); }, n);
  g.M2 = detail::max_on_circle([&](double t) { return std::abs(s.G(on_circle(t))); }, n);
  g.fact5_lhs = 0.25 * R * R * norm_squared(dfx) + norm_squared(fx);
  g.fact5_rhs = -R * (std::abs(dF(c)) * std::abs(s.F(c)) + std::abs(dG(c)) * std::abs(s.G(c))) +
                g.M1 * g.M1 + g.M2 * g.M2;
  return g;
}

/// Readings of g(x) = 1 - conj(f(x)) * f(x).
enum class SchwarzPickReading { series, pointwise };

inline const char* to_string(SchwarzPickReading r) {
  return r == SchwarzPickReading::series ? "series" : "pointwise";
}

struct SchwarzPickReport {
  SchwarzPickReading reading = SchwarzPickReading::series;
  double M = 0.0;                 // sup ||f|| on the closed slice disc
  double empirical_C = 0.0;       // sup ||M^2 - conj(f(x)) f(x~)|| / ((1+|x|) w(1-|x|))
  double derivative_bound = 0.0;  // sup M ||f'(x)|| (1-|x|) / w(1-|x|)
  bool contract_holds = true;     // derivative_bound <= empirical_C (1 + 1e-6)
  std::size_t evaluated = 0;
  std::size_t skipped = 0;
  Quat witness{};
};

/**
 * Schwarz-Pick type criterion.  For each sampled x in D_i,
 *   x~ = conj(f(x))^{-1} T_g(f'(x)^{-1} x f'(x)) conj(f(x)),
 *   T_g(q) = g^c(q)^{-1} q g^c(q),
 * with g = 1 - f^c * f = 1 - f^s (series reading) or g(q) = 1 - conj(f(q)) f(q)
 * (pointwise reading, g^c taken as g since it is real valued).  Points with
 * ||f'(x)|| < 1e-6, ||f(x)|| or ||g^s|| below the zero floor are skipped.
 */
inline SchwarzPickReport schwarz_pick_criterion(const SliceSeries& f, const Majorant& w,
                                                const ImaginaryUnit& i, const SamplePlan& plan,
                                                SchwarzPickReading reading) {
  SchwarzPickReport rep;
  rep.reading = reading;
  const SliceSeries df = cullen_derivative(f);
  const std::optional<SliceSeries> g_series =
      reading == SchwarzPickReading::series
          ? std::optional<SliceSeries>(SliceSeries::constant(Quat{1.0}) +
                                       right_multiply(symmetrization(f), Quat{-1.0}))
          : std::nullopt;
  const auto g_conj_at = [&](const Quat& q) -> Quat {
    if (g_series) return evaluate(regular_conjugate(*g_series), q);
    const Quat fq = evaluate(f, q);
    return Quat{1.0} - conjugate(fq) * fq;
  };

  rep.M = detail::max_on_circle(
      [&](double t) { return norm(evaluate(f, slice_exp(t, i))); },
      std::max<std::size_t>(plan.n_points, 16));
  const double M2 = rep.M * rep.M;

  for (const auto& z : disc_points(plan, plan.max_radius)) {
    const Quat x = in_slice(z, i);
    const Quat fx = evaluate(f, x);
    const Quat dfx = evaluate(df, x);
    if (norm(dfx) < 1e-6 || norm(fx) < kZeroFloor) {
      ++rep.skipped;
      continue;
    }
    const Quat q = inverse(dfx) * x * dfx;
    const Quat gc = g_conj_at(q);
    if (norm_squared(gc) < kZeroFloor) {  // ||g^s(q)|| = ||g(q)||^2 for real-coefficient g
      ++rep.skipped;
      continue;
    }
    const Quat tg = inverse(gc) * q * gc;
    const Quat cf = conjugate(fx);
    const Quat xt = inverse(cf) * tg * cf;
    const double gap = 1.0 - std::abs(z);
    const double wg = evaluate_majorant(w, gap);
    const double c = norm(Quat{M2} - cf * evaluate(f, xt)) / ((1.0 + std::abs(z)) * wg);
    const double d = rep.M * norm(dfx) * gap / wg;
    if (c > rep.empirical_C) {
      rep.empirical_C = c;
      rep.witness = x;
    }
    rep.derivative_bound = std::max(rep.derivative_bound, d);
    ++rep.evaluated;
  }
  rep.contract_holds = rep.derivative_bound <= rep.empirical_C * (1.0 + 1e-6) + 1e-12;
  return rep;
}

}  // namespace slicereg
