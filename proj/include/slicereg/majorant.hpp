#pragma once

/**
 * @file majorant.hpp
 * @brief Moduli of continuity on [0, 2] and numerical regularity certificates.
 *
 * A regular majorant is a continuous increasing w with w(0) = 0, w(t)/t
 * non-increasing, and
 *
 *     int_0^x w(t)/t dt + x int_x^2 w(t)/t^2 dt <= C w(x),   0 < x < 2.
 *
 * check_regular evaluates the left side by composite Gauss-Legendre
 * quadrature in the variable u = log t (which removes the 1/t singularity of
 * the first integral) and tracks the worst ratio over successively wider
 * log-spaced grids.  A ratio that keeps growing as the grid reaches toward 0
 * (w(t) = t gives 1 + log(2/x)) is reported as not regular.
 */

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>

#include "slicereg/errors.hpp"

namespace slicereg {

inline constexpr double kMajorantDomainEnd = 2.0;

class Majorant {
 public:
  enum class Kind { power, sum, scaled, tabulated };

  struct Power {
    double alpha;
    double scale;
  };
  struct Sum {
    std::shared_ptr<const Majorant> first;
    std::shared_ptr<const Majorant> second;
  };
  struct Scaled {
    double factor;
    std::shared_ptr<const Majorant> base;
  };
  struct Tabulated {
    std::vector<double> grid;
    std::vector<double> values;
  };

  /// w(t) = scale * t^alpha.  Exponents above 1 are representable (and are
  /// rejected by check_regular).
  static Majorant power(double alpha, double scale = 1.0) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("power majorant needs alpha > 0");
    if (!(scale > 0.0) || !std::isfinite(scale)) throw DomainError("power majorant needs scale > 0");
    return Majorant(Power{alpha, scale});
  }

  static Majorant sum(const Majorant& a, const Majorant& b) {
    return Majorant(Sum{std::make_shared<const Majorant>(a), std::make_shared<const Majorant>(b)});
  }

  /// factor * base.  A zero factor gives the zero function, which combine
  /// produces for a zero quaternion.
  static Majorant scaled(double factor, const Majorant& base) {
    if (!(factor >= 0.0) || !std::isfinite(factor)) throw DomainError("scaled majorant needs factor >= 0");
    return Majorant(Scaled{factor, std::make_shared<const Majorant>(base)});
  }

  /// Piecewise-linear interpolation through (grid[k], values[k]).  The grid
  /// must start at 0 with value 0, increase strictly and end at 2.
  static Majorant tabulated(std::vector<double> grid, std::vector<double> values) {
    if (grid.size() < 2 || grid.size() != values.size()) {
      throw DomainError("tabulated majorant needs matching grid/values of size >= 2");
    }
    if (grid.front() != 0.0 || values.front() != 0.0) {
      throw DomainError("tabulated majorant must satisfy w(0) = 0");
    }
    if (std::abs(grid.back() - kMajorantDomainEnd) > 1e-12) {
      throw DomainError("tabulated majorant grid must end at 2");
    }
    for (std::size_t k = 1; k < grid.size(); ++k) {
      if (!(grid[k] > grid[k - 1])) throw DomainError("tabulated grid must increase strictly");
      if (!std::isfinite(values[k]) || values[k] < 0.0) {
        throw DomainError("tabulated values must be finite and non-negative");
      }
    }
    return Majorant(Tabulated{std::move(grid), std::move(values)});
  }

  Kind kind() const { return static_cast<Kind>(node_.index()); }
  const auto& node() const { return node_; }

  /// True when every leaf is a power law (quadrature converges spectrally).
  bool is_smooth() const {
    return std::visit(
        [](const auto& n) -> bool {
          using N = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<N, Power>) return true;
          else if constexpr (std::is_same_v<N, Sum>) return n.first->is_smooth() && n.second->is_smooth();
          else if constexpr (std::is_same_v<N, Scaled>) return n.base->is_smooth();
          else return false;
        },
        node_);
  }

  /// Evaluation without the domain check.
  double value(double t) const {
    return std::visit(
        [t](const auto& n) -> double {
          using N = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<N, Power>) {
            return t <= 0.0 ? 0.0 : n.scale * std::pow(t, n.alpha);
          } else if constexpr (std::is_same_v<N, Sum>) {
            return n.first->value(t) + n.second->value(t);
          } else if constexpr (std::is_same_v<N, Scaled>) {
            return n.factor * n.base->value(t);
          } else {
            if (t <= 0.0) return 0.0;
            const auto it = std::upper_bound(n.grid.begin(), n.grid.end(), t);
            if (it == n.grid.end()) return n.values.back();
            const std::size_t k = static_cast<std::size_t>(it - n.grid.begin());
            const double s = (t - n.grid[k - 1]) / (n.grid[k] - n.grid[k - 1]);
            return n.values[k - 1] + s * (n.values[k] - n.values[k - 1]);
          }
        },
        node_);
  }

  double operator()(double t) const;

  std::string describe() const {
    std::ostringstream os;
    os.precision(17);
    std::visit(
        [&os](const auto& n) {
          using N = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<N, Power>) {
            os << "power:" << n.alpha;
            if (n.scale != 1.0) os << ':' << n.scale;
          } else if constexpr (std::is_same_v<N, Sum>) {
            os << "sum(" << n.first->describe() << ';' << n.second->describe() << ')';
          } else if constexpr (std::is_same_v<N, Scaled>) {
            os << "scaled(" << n.factor << ';' << n.base->describe() << ')';
          } else {
            os << "tabulated[" << n.grid.size() << ']';
          }
        },
        node_);
    return os.str();
  }

 private:
  using Node = std::variant<Power, Sum, Scaled, Tabulated>;
  explicit Majorant(Node node) : node_(std::move(node)) {}

  Node node_;
};

/// Throws DomainError outside [0, 2].  Arguments within 1e-12 of 2 (chords
/// of the closed unit disc computed in floating point) are clamped.
inline double evaluate_majorant(const Majorant& w, double t) {
  if (!(t >= 0.0) || t > kMajorantDomainEnd + 1e-12) {
    throw DomainError("majorant argument " + std::to_string(t) + " outside [0, 2]");
  }
  return w.value(std::min(t, kMajorantDomainEnd));
}

inline double Majorant::operator()(double t) const { return evaluate_majorant(*this, t); }

/// (|a1| w1 + |a2| w2, |a2| w1 + |a1| w2); zero-weight terms are dropped.
inline std::pair<Majorant, Majorant> combine(double a1_norm, double a2_norm, const Majorant& w1,
                                             const Majorant& w2) {
  const auto term = [](double c, const Majorant& w) { return c == 1.0 ? w : Majorant::scaled(c, w); };
  const auto mix = [&](double c1, double c2) {
    if (c2 == 0.0) return term(c1, w1);
    if (c1 == 0.0) return term(c2, w2);
    return Majorant::sum(term(c1, w1), term(c2, w2));
  };
  return {mix(a1_norm, a2_norm), mix(a2_norm, a1_norm)};
}

/// w^2 as a majorant: exact for power and scaled kinds, tabulated otherwise.
inline Majorant squared(const Majorant& w) {
  if (const auto* p = std::get_if<Majorant::Power>(&w.node())) {
    return Majorant::power(2.0 * p->alpha, p->scale * p->scale);
  }
  if (const auto* s = std::get_if<Majorant::Scaled>(&w.node())) {
    return Majorant::scaled(s->factor * s->factor, squared(*s->base));
  }
  constexpr std::size_t kKnots = 4097;
  std::vector<double> grid(kKnots), values(kKnots);
  for (std::size_t k = 0; k < kKnots; ++k) {
    // Geometric toward 0 so the interpolant resolves the small-t behaviour.
    grid[k] = k == 0 ? 0.0 : kMajorantDomainEnd * std::pow(1e-40, 1.0 - double(k) / double(kKnots - 1));
    const double v = w.value(grid[k]);
    values[k] = v * v;
  }
  grid.back() = kMajorantDomainEnd;
  return Majorant::tabulated(std::move(grid), std::move(values));
}

enum class RegularityVerdict { regular, not_monotone, ratio_diverges, vanishes };

struct RegularityCertificate {
  bool is_regular = false;
  double empirical_C = std::numeric_limits<double>::infinity();
  double worst_x = 0.0;
  std::size_t grid_size = 0;
  RegularityVerdict verdict = RegularityVerdict::ratio_diverges;
  /// Worst ratio on each grid level (base grid, then two widenings).
  std::vector<double> level_maxima;
};

inline const char* to_string(RegularityVerdict v) {
  switch (v) {
    case RegularityVerdict::regular: return "regular";
    case RegularityVerdict::not_monotone: return "not_monotone";
    case RegularityVerdict::ratio_diverges: return "ratio_diverges";
    case RegularityVerdict::vanishes: return "vanishes";
  }
  return "unknown";
}

namespace detail {

/// Composite 15-point Gauss-Legendre over [a, b] with at least `panels`
/// panels, each no wider than `max_width`.
template <class F>
double composite_gauss(F&& f, double a, double b, std::size_t panels, double max_width) {
  if (!(b > a)) return 0.0;
  const auto needed = static_cast<std::size_t>(std::ceil((b - a) / max_width));
  const std::size_t n = std::max<std::size_t>({panels, needed, 1});
  const double h = (b - a) / double(n);
  double total = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double lo = a + h * double(k);
    total += boost::math::quadrature::gauss<double, 15>::integrate(f, lo, lo + h);
  }
  return total;
}

// Below this t the integrand of the first integral is dropped (and e^u
// would approach the subnormal range).
inline const double kLogFloor = std::log(1e-300);

/// int_0^x w(t)/t dt = int_{-inf}^{log x} w(e^u) du.
inline double first_integral(const Majorant& w, double x, std::size_t panels) {
  const double hi = std::log(x);
  const double lo = std::max(hi - 600.0, kLogFloor);
  return composite_gauss([&w](double u) { return w.value(std::exp(u)); }, lo, hi, panels, 2.0);
}

/// x * int_x^2 w(t)/t^2 dt with t = e^u.
inline double second_integral(const Majorant& w, double x, std::size_t panels) {
  const double lo = std::log(x);
  const double hi = std::log(kMajorantDomainEnd);
  return x * composite_gauss([&w](double u) { return w.value(std::exp(u)) * std::exp(-u); }, lo,
                             hi, panels, 0.5);
}

inline std::vector<double> log_spaced(double lo, double hi, std::size_t n) {
  std::vector<double> g(n);
  if (n == 1) {
    g[0] = lo;
    return g;
  }
  const double a = std::log(lo), b = std::log(hi);
  for (std::size_t k = 0; k < n; ++k) g[k] = std::exp(a + (b - a) * double(k) / double(n - 1));
  return g;
}

}  // namespace detail

/// 64 log-spaced abscissae in [1e-8, 1.99].
inline std::vector<double> default_regularity_grid() {
  return detail::log_spaced(1e-8, 1.99, 64);
}

/**
 * Certify regularity of w empirically.
 *
 * Level 0 is x_grid itself; each further level doubles the number of
 * log-spaced points and squares the smallest abscissa, so the grid reaches
 * geometrically closer to 0.  w and w(t)/t are checked for monotonicity on
 * the union of all levels (on the knots for tabulated kinds).  The ratio
 * (I1(x) + x I2(x)) / w(x) is maximized per level; w is regular when the
 * monotonicity checks pass and each level maximum exceeds the previous one by
 * less than 5%.  For smooth kinds the quadrature is repeated with doubled
 * panels on level 0 and QuadratureFailure is thrown if the two disagree.
 */
inline RegularityCertificate check_regular(const Majorant& w,
                                           const std::vector<double>& x_grid = default_regularity_grid(),
                                           std::size_t quad_nodes = 64) {
  if (x_grid.empty()) throw DomainError("check_regular needs a nonempty grid");
  for (double x : x_grid) {
    if (!(x > 0.0 && x < kMajorantDomainEnd)) throw DomainError("grid points must lie in (0, 2)");
  }
  constexpr int kLevels = 3;
  constexpr double kStabilityRatio = 1.05;
  const double x_min = *std::min_element(x_grid.begin(), x_grid.end());
  const double x_max = *std::max_element(x_grid.begin(), x_grid.end());

  RegularityCertificate cert;
  std::vector<double> all_points;
  double best = -1.0;
  bool vanishes = false;
  for (int level = 0; level < kLevels; ++level) {
    const std::vector<double> grid =
        level == 0 ? x_grid
                   : detail::log_spaced(std::pow(x_min, double(1 << level)), x_max,
                                        x_grid.size() << level);
    double level_max = 0.0;
    for (double x : grid) {
      const double wx = w.value(x);
      const double i1 = detail::first_integral(w, x, quad_nodes);
      const double i2 = detail::second_integral(w, x, quad_nodes);
      if (level == 0 && w.is_smooth()) {
        const double j1 = detail::first_integral(w, x, 2 * quad_nodes);
        const double j2 = detail::second_integral(w, x, 2 * quad_nodes);
        const double scale = std::max(std::abs(j1 + j2), 1e-300);
        if (std::abs((i1 + i2) - (j1 + j2)) > 1e-8 * scale) {
          throw QuadratureFailure("regularity integrals did not converge at x = " + std::to_string(x));
        }
      }
      double ratio;
      if (wx > 0.0) {
        ratio = (i1 + i2) / wx;
      } else {
        ratio = std::numeric_limits<double>::infinity();
        vanishes = true;
      }
      if (ratio > level_max) level_max = ratio;
      if (ratio > best) {
        best = ratio;
        cert.worst_x = x;
      }
    }
    cert.level_maxima.push_back(level_max);
    cert.grid_size += grid.size();
    all_points.insert(all_points.end(), grid.begin(), grid.end());
  }
  cert.empirical_C = best;

  // Monotonicity of w and w(t)/t.
  std::vector<double> knots;
  if (const auto* tab = std::get_if<Majorant::Tabulated>(&w.node())) {
    knots.assign(tab->grid.begin() + 1, tab->grid.end());
  } else {
    knots = std::move(all_points);
    knots.push_back(kMajorantDomainEnd);
    std::sort(knots.begin(), knots.end());
    const std::size_t n = knots.size();
    for (std::size_t k = 0; k + 1 < n; ++k) knots.push_back(std::sqrt(knots[k] * knots[k + 1]));
    std::sort(knots.begin(), knots.end());
  }
  bool monotone = true;
  for (std::size_t k = 1; k < knots.size(); ++k) {
    const double a = w.value(knots[k - 1]), b = w.value(knots[k]);
    if (b < a * (1.0 - 1e-12)) monotone = false;
    if (b / knots[k] > (a / knots[k - 1]) * (1.0 + 1e-12)) monotone = false;
  }

  bool stable = std::isfinite(best);
  for (std::size_t k = 1; k < cert.level_maxima.size() && stable; ++k) {
    if (!(cert.level_maxima[k] < kStabilityRatio * cert.level_maxima[k - 1])) stable = false;
  }

  if (vanishes) cert.verdict = RegularityVerdict::vanishes;
  else if (!monotone) cert.verdict = RegularityVerdict::not_monotone;
  else if (!stable) cert.verdict = RegularityVerdict::ratio_diverges;
  else cert.verdict = RegularityVerdict::regular;
  cert.is_regular = cert.verdict == RegularityVerdict::regular && cert.empirical_C >= 1.0;
  return cert;
}

}  // namespace slicereg
