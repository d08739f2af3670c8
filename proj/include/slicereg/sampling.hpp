#pragma once

/**
 * @file sampling.hpp
 * @brief Deterministic point and pair streams for sup-norm estimation.
 *
 * Every stream is generated sequentially from a seeded std::mt19937_64
 * (whose output sequence is fixed by the standard) with hand-written
 * uniform/normal transforms, so results are reproducible across standard
 * libraries.  A stream of n items is a prefix of the stream of n' > n items;
 * hence enlarging a plan never lowers a sampled supremum.
 *
 * Pair streams cycle through categories: independent uniform pairs, wide
 * pairs on the outer circle (diameter extremals), near-diagonal pairs with
 * separations geometric down to the plan's epsilon, near-diagonal pairs on
 * the outer circle, and radial pairs sharing an angle (one third of them
 * ending at the origin).
 */

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "slicereg/errors.hpp"
#include "slicereg/quaternion.hpp"

namespace slicereg {

struct SamplePlan {
  std::size_t n_pairs = 10000;
  std::size_t n_points = 1000;
  double min_separation = 1e-4;  // epsilon
  double max_radius = 0.995;     // rho
  std::uint64_t seed = 20240611;

  /// Throws DegeneratePlan unless 0 < eps < 2 rho, 0 < rho < 1 and both
  /// counts are positive.
  void validate() const {
    if (n_pairs == 0 || n_points == 0) throw DegeneratePlan("sample plan has no pairs or points");
    if (!(max_radius > 0.0 && max_radius < 1.0)) throw DegeneratePlan("max_radius must lie in (0, 1)");
    if (!(min_separation > 0.0 && min_separation < 2.0 * max_radius)) {
      throw DegeneratePlan("min_separation must lie in (0, 2 max_radius)");
    }
  }

  bool operator==(const SamplePlan&) const = default;
};

class SampleStream {
 public:
  SampleStream(std::uint64_t seed, std::uint64_t tag) : engine_(mix(seed, tag)) {}

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return double(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double a, double b) { return a + (b - a) * uniform(); }
  /// Log-uniform in [lo, hi].
  double geometric(double lo, double hi) { return lo * std::pow(hi / lo, uniform()); }
  double angle() { return 2.0 * std::numbers::pi * uniform(); }

  /// Standard normal by Box-Muller (one value per call).
  double normal() {
    const double u = 1.0 - uniform();  // (0, 1]
    return std::sqrt(-2.0 * std::log(u)) * std::cos(angle());
  }

  std::complex<double> disc_uniform(double radius) {
    const double r = radius * std::sqrt(uniform());
    return std::polar(r, angle());
  }

  Quat sphere4() {
    for (;;) {
      const Quat g{normal(), normal(), normal(), normal()};
      const double n = norm(g);
      if (n > 1e-12) return g / n;
    }
  }

  Quat ball4(double radius) { return sphere4() * (radius * std::pow(uniform(), 0.25)); }

  ImaginaryUnit unit_imaginary() {
    for (;;) {
      const double a = normal(), b = normal(), c = normal();
      if (a * a + b * b + c * c > 1e-24) return ImaginaryUnit::normalized(a, b, c);
    }
  }

 private:
  static std::uint64_t mix(std::uint64_t seed, std::uint64_t tag) {
    // splitmix64 finalizer
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (tag + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::mt19937_64 engine_;
};

/// Stream tags keep the different samplers of one plan independent.
enum class StreamTag : std::uint64_t {
  slice_pairs = 1,
  ball_pairs,
  circle_pairs,
  disc_points,
  ball_points,
  circle_angles,
  corpus,
  slices,
};

struct SlicePair {
  std::complex<double> x;
  std::complex<double> y;
};

/// Pairs in the closed disc |z| <= radius of C (coordinates in any slice).
inline std::vector<SlicePair> slice_pairs(const SamplePlan& plan, double radius,
                                          StreamTag tag = StreamTag::slice_pairs) {
  plan.validate();
  SampleStream s(plan.seed, std::uint64_t(tag));
  const double eps = std::min(plan.min_separation, radius);
  std::vector<SlicePair> out;
  out.reserve(plan.n_pairs);
  for (std::size_t k = 0; k < plan.n_pairs; ++k) {
    SlicePair p;
    switch (k % 5) {
      case 0:
        p = {s.disc_uniform(radius), s.disc_uniform(radius)};
        break;
      case 1: {
        const double th = s.angle();
        const double phi = std::numbers::pi * (1.0 - s.uniform());
        p = {std::polar(radius, th), std::polar(radius, th + phi)};
        break;
      }
      case 2: {
        const auto x = s.disc_uniform(radius);
        auto y = x + std::polar(s.geometric(eps, 2.0 * radius), s.angle());
        if (std::abs(y) > radius) y *= radius / std::abs(y);
        p = {x, y};
        break;
      }
      case 3: {
        const double th = s.angle();
        const double phi = s.geometric(eps / radius, std::numbers::pi);
        p = {std::polar(radius, th), std::polar(radius, th + phi)};
        break;
      }
      default: {
        const double th = s.angle();
        const double r1 = radius * s.uniform();
        const double d = s.geometric(eps, radius);
        const double side = s.uniform();
        const double r2 = side < 1.0 / 3.0   ? 0.0
                          : side < 2.0 / 3.0 ? std::max(0.0, r1 - d)
                                             : std::min(radius, r1 + d);
        p = {std::polar(r1, th), std::polar(r2, th)};
        break;
      }
    }
    out.push_back(p);
  }
  return out;
}

/// Pairs on the unit circle.
inline std::vector<SlicePair> circle_pairs(const SamplePlan& plan) {
  plan.validate();
  SampleStream s(plan.seed, std::uint64_t(StreamTag::circle_pairs));
  std::vector<SlicePair> out;
  out.reserve(plan.n_pairs);
  for (std::size_t k = 0; k < plan.n_pairs; ++k) {
    const double th = s.angle();
    const double phi = k % 2 == 0 ? std::numbers::pi * (1.0 - s.uniform())
                                  : s.geometric(plan.min_separation, std::numbers::pi);
    out.push_back({std::polar(1.0, th), std::polar(1.0, th + phi)});
  }
  return out;
}

/// Points of the disc |z| <= radius: the origin first, then alternately
/// uniform points and points with 1 - |z|/radius log-uniform in [1e-6, 1].
inline std::vector<std::complex<double>> disc_points(const SamplePlan& plan, double radius) {
  plan.validate();
  SampleStream s(plan.seed, std::uint64_t(StreamTag::disc_points));
  std::vector<std::complex<double>> out;
  out.reserve(plan.n_points);
  out.emplace_back(0.0, 0.0);
  for (std::size_t k = 1; k < plan.n_points; ++k) {
    if (k % 2 == 1) {
      out.push_back(s.disc_uniform(radius));
    } else {
      const double r = radius * (1.0 - s.geometric(1e-6, 1.0));
      out.push_back(std::polar(r, s.angle()));
    }
  }
  return out;
}

/// Angles for sampling the unit circle.
inline std::vector<double> circle_angles(const SamplePlan& plan) {
  plan.validate();
  SampleStream s(plan.seed, std::uint64_t(StreamTag::circle_angles));
  std::vector<double> out(plan.n_points);
  for (auto& t : out) t = s.angle();
  return out;
}

/// Pairs in the closed 4-ball of radius rho.
inline std::vector<std::pair<Quat, Quat>> ball_pairs(const SamplePlan& plan) {
  plan.validate();
  SampleStream s(plan.seed, std::uint64_t(StreamTag::ball_pairs));
  const double radius = plan.max_radius;
  const double eps = plan.min_separation;
  const auto tangent = [&s](const Quat& x) {
    for (;;) {
      Quat w = s.sphere4();
      w -= x * dot(w, x);
      const double n = norm(w);
      if (n > 1e-8) return w / n;
    }
  };
  const auto into_ball = [radius](Quat y) {
    const double n = norm(y);
    return n > radius ? y * (radius / n) : y;
  };
  std::vector<std::pair<Quat, Quat>> out;
  out.reserve(plan.n_pairs);
  for (std::size_t k = 0; k < plan.n_pairs; ++k) {
    switch (k % 5) {
      case 0:
        out.emplace_back(s.ball4(radius), s.ball4(radius));
        break;
      case 1:
      case 3: {
        const Quat x = s.sphere4();
        const Quat w = tangent(x);
        const double phi = k % 5 == 1 ? std::numbers::pi * (1.0 - s.uniform())
                                      : s.geometric(eps / radius, std::numbers::pi);
        out.emplace_back(x * radius, (x * std::cos(phi) + w * std::sin(phi)) * radius);
        break;
      }
      case 2: {
        const Quat x = s.ball4(radius);
        out.emplace_back(x, into_ball(x + s.sphere4() * s.geometric(eps, 2.0 * radius)));
        break;
      }
      default: {
        // A slice pair in a random slice.
        const ImaginaryUnit i = s.unit_imaginary();
        const double th = s.angle();
        if (s.uniform() < 0.5) {
          const double phi = s.geometric(eps / radius, std::numbers::pi);
          out.emplace_back(in_slice(std::polar(radius, th), i),
                           in_slice(std::polar(radius, th + phi), i));
        } else {
          const double phi = std::numbers::pi * (1.0 - s.uniform());
          out.emplace_back(in_slice(std::polar(radius, th), i),
                           in_slice(std::polar(radius, th + phi), i));
        }
        break;
      }
    }
  }
  return out;
}

/// Points of the 4-ball of radius `radius`: the origin, then alternately
/// uniform and near-sphere points.
inline std::vector<Quat> ball_points(const SamplePlan& plan, double radius) {
  plan.validate();
  SampleStream s(plan.seed, std::uint64_t(StreamTag::ball_points));
  std::vector<Quat> out;
  out.reserve(plan.n_points);
  out.emplace_back();
  for (std::size_t k = 1; k < plan.n_points; ++k) {
    if (k % 2 == 1) {
      out.push_back(s.ball4(radius));
    } else {
      out.push_back(s.sphere4() * (radius * (1.0 - s.geometric(1e-6, 1.0))));
    }
  }
  return out;
}

}  // namespace slicereg
