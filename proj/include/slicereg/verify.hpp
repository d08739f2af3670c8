#pragma once

/**
 * @file verify.hpp
 * @brief Property suites over a corpus of slice regular polynomials.
 *
 * Each suite evaluates one family of inequalities or equivalences on every
 * corpus member and returns a VerificationReport.  Explicit constants (the
 * factor 6 C3 of the inclusion chain, the 2/4 slice sandwich, the exact
 * pointwise inequalities) are checked directly; two-sided equivalences with
 * unspecified constants are checked as ratio windows [1/K, K].
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <exception>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "slicereg/errors.hpp"
#include "slicereg/lipschitz.hpp"
#include "slicereg/majorant.hpp"
#include "slicereg/poisson.hpp"
#include "slicereg/quaternion.hpp"
#include "slicereg/sampling.hpp"
#include "slicereg/slice_series.hpp"

namespace slicereg {

// ---------------------------------------------------------------------------
// Corpus

struct CorpusEntry {
  std::string name;
  SliceSeries series;
  std::string family;          // "polynomial", "exp", "log_series", "random", ...
  std::size_t truncation_degree = 0;
};

using Corpus = std::vector<CorpusEntry>;

/// sum_{n<=degree} q^n / n!
inline SliceSeries exp_series(std::size_t degree) {
  std::vector<Quat> c(degree + 1);
  double term = 1.0;
  for (std::size_t n = 0; n <= degree; ++n) {
    if (n > 0) term /= double(n);
    c[n] = Quat{term};
  }
  return SliceSeries(std::move(c));
}

/// sum_{1<=n<=degree} q^n / n
inline SliceSeries log_series(std::size_t degree) {
  std::vector<Quat> c(degree + 1);
  for (std::size_t n = 1; n <= degree; ++n) c[n] = Quat{1.0 / double(n)};
  return SliceSeries(std::move(c));
}

/// Degree-d series with coefficient components uniform in [-1, 1] / (n + 1).
inline SliceSeries random_series(SampleStream& s, std::size_t degree) {
  std::vector<Quat> c(degree + 1);
  for (std::size_t n = 0; n <= degree; ++n) {
    const double w = 1.0 / double(n + 1);
    c[n] = Quat{s.uniform(-1, 1), s.uniform(-1, 1), s.uniform(-1, 1), s.uniform(-1, 1)} * w;
  }
  return SliceSeries(std::move(c));
}

inline Corpus default_corpus(std::uint64_t seed = SamplePlan{}.seed) {
  Corpus c;
  c.push_back({"const_real", SliceSeries{Quat{0.7}}, "constant", 0});
  c.push_back({"const_quat", SliceSeries{Quat{0.2, -0.4, 0.1, 0.5}}, "constant", 0});
  c.push_back({"identity", SliceSeries{Quat{}, Quat{1.0}}, "polynomial", 1});
  c.push_back({"square", SliceSeries{Quat{}, Quat{}, Quat{1.0}}, "polynomial", 2});
  c.push_back({"mixed", SliceSeries{Quat{1.0}, kE1, kE2, kE3}, "polynomial", 3});
  c.push_back({"e1e2", SliceSeries{kE1, kE2}, "polynomial", 1});
  c.push_back({"exp12", exp_series(12), "exp", 12});
  SampleStream s(seed, std::uint64_t(StreamTag::corpus));
  for (int r = 1; r <= 2; ++r) {
    c.push_back({"random_" + std::to_string(r), random_series(s, 8), "random", 8});
  }
  return c;
}

inline Corpus intrinsic_members(const Corpus& corpus) {
  Corpus out;
  std::copy_if(corpus.begin(), corpus.end(), std::back_inserter(out),
               [](const CorpusEntry& e) { return is_intrinsic(e.series); });
  return out;
}

// ---------------------------------------------------------------------------
// Reports

struct FunctionRecord {
  std::string name;
  bool pass = true;
  std::vector<std::pair<std::string, double>> values;
  std::vector<std::pair<std::string, Quat>> witnesses;
  std::size_t samples = 0;
  std::size_t skipped = 0;
  std::vector<std::string> flags;

  void set(const std::string& key, double v) {
    for (auto& [k, x] : values) {
      if (k == key) {
        x = v;
        return;
      }
    }
    values.emplace_back(key, v);
  }

  double get(const std::string& key) const {
    for (const auto& [k, x] : values) {
      if (k == key) return x;
    }
    throw ValidationError("record " + name + " has no value " + key);
  }

  bool has(const std::string& key) const {
    return std::any_of(values.begin(), values.end(), [&](const auto& kv) { return kv.first == key; });
  }

  void witness(const std::string& key, const Quat& q) { witnesses.emplace_back(key, q); }

  void witness_pair(const std::string& key, const std::pair<Quat, Quat>& p) {
    witnesses.emplace_back(key + ".x", p.first);
    witnesses.emplace_back(key + ".y", p.second);
  }

  void require(bool condition, const std::string& failure) {
    if (!condition) {
      pass = false;
      flags.push_back("failed:" + failure);
    }
  }

  bool has_flag(const std::string& f) const {
    return std::find(flags.begin(), flags.end(), f) != flags.end();
  }
};

struct VerificationReport {
  std::string suite;
  std::vector<FunctionRecord> records;
  bool pass = true;
  std::vector<std::pair<std::string, double>> tolerances;
  std::string error;

  void finalize() {
    pass = error.empty() &&
           std::all_of(records.begin(), records.end(), [](const FunctionRecord& r) { return r.pass; });
  }

  const FunctionRecord& record(const std::string& name) const {
    for (const auto& r : records) {
      if (r.name == name) return r;
    }
    throw ValidationError("report " + suite + " has no record " + name);
  }
};

struct SuiteSettings {
  Majorant omega = Majorant::power(0.5);
  Majorant omega1 = Majorant::power(0.5);
  Majorant omega2 = Majorant::power(0.5);
  Quat a{0.3, -0.5, 0.2, 0.7};
  ImaginaryUnit i = ImaginaryUnit::e1();
  ImaginaryUnit k = ImaginaryUnit::e2();
  SamplePlan plan{};
  int nodes = kDefaultNodes;

  double window_K = 20.0;
  double slice_slack = 0.2;        // delta in [1/(2+delta), 2+delta]
  double inclusion_tol = 0.02;     // relative slack on 6 C3
  double exact_tol = 1e-9;         // relative slack on inequalities exact per sample
  double intrinsic_tol = 1e-10;
  double quadrature_tol = 1e-8;
  double growth_slack = 1e-8;
  double zero_floor = 1e-12;       // functionals below this count as zero
  double cone_slack = 2.0;

  std::size_t random_slice_pairs = 5;
  std::size_t growth_points = 100;
  std::size_t configurations = 50;
  std::vector<std::size_t> trend_degrees{8, 16, 32};
};

namespace detail {

inline bool is_zero(double v, double floor) { return std::abs(v) <= floor; }

/// max/min over the nonzero entries; 1 if all are zero, infinity if only
/// some are.
inline double spread(const std::vector<double>& v, double floor) {
  const bool all_zero = std::all_of(v.begin(), v.end(), [&](double x) { return is_zero(x, floor); });
  if (all_zero) return 1.0;
  const bool any_zero = std::any_of(v.begin(), v.end(), [&](double x) { return is_zero(x, floor); });
  if (any_zero) return std::numeric_limits<double>::infinity();
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  return *hi / *lo;
}

inline SamplePlan with_points(SamplePlan plan, std::size_t n) {
  plan.n_points = n;
  return plan;
}

/// Runs `body` per corpus member; an exception fails that member only.
template <class Body>
VerificationReport per_function(const std::string& suite, const Corpus& corpus, Body&& body) {
  VerificationReport rep;
  rep.suite = suite;
  for (const auto& entry : corpus) {
    FunctionRecord rec;
    rec.name = entry.name;
    try {
      body(entry, rec);
    } catch (const std::exception& e) {
      rec.pass = false;
      rec.flags.push_back(std::string("error:") + e.what());
    }
    rep.records.push_back(std::move(rec));
  }
  return rep;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Suites

/// Global ratio against 6 C3 and the orderings
/// ||f||_{i,w1+w2} <= ||f||_{G,w1+w2} and ||f||_{i,w1+w2} <= ||f||_{i,(w1,w2)}.
/// The global estimate samples the 4-ball pairs and the slice pairs.
inline VerificationReport verify_inclusion_chain(const Corpus& corpus, const SuiteSettings& s) {
  const Majorant wsum = Majorant::sum(s.omega1, s.omega2);
  auto rep = detail::per_function("inclusion_chain", corpus, [&](const CorpusEntry& e, FunctionRecord& r) {
    const ComponentConstants cc = component_constants(e.series, s.omega1, s.omega2, s.i, s.plan);
    const double C3 = std::max(cc.first.value, cc.second.value);
    const NormEstimate ball = global_norm(e.series, wsum, s.plan);
    const NormEstimate on_slice = slice_norm(e.series, wsum, s.i, s.plan);
    const NormEstimate two = component_norm(e.series, s.omega1, s.omega2, s.i, s.plan);
    const double global = std::max(ball.value, on_slice.value);
    r.set("C1", cc.first.value);
    r.set("C2", cc.second.value);
    r.set("C3", C3);
    r.set("global_ratio", global);
    r.set("slice_ratio_sum", on_slice.value);
    r.set("component_norm", two.value);
    const double factor = detail::is_zero(global, s.zero_floor) ? 0.0 : global / (6.0 * C3);
    r.set("factor", factor);
    r.samples = ball.samples_used + on_slice.samples_used;
    r.witness_pair("global", ball.value >= on_slice.value ? ball.argmax : on_slice.argmax);
    r.require(global <= 6.0 * C3 * (1.0 + s.inclusion_tol) + s.zero_floor, "global_exceeds_6C3");
    r.require(on_slice.value <= global, "slice_exceeds_global");
    r.require(on_slice.value <= two.value * (1.0 + s.exact_tol) + s.zero_floor,
              "sum_norm_exceeds_component_norm");
  });
  rep.tolerances = {{"inclusion_tol", s.inclusion_tol}, {"exact_tol", s.exact_tol}};
  rep.finalize();
  return rep;
}

/// Right linearity: for h = f a + g (g the next corpus member) every pair
/// obeys ||h(x)-h(y)|| <= (|a| N_f + N_g) w(|x-y|), and f a has component
/// constants at most C3(f) for the majorants combine(|a1|, |a2|, w1, w2).
inline VerificationReport verify_algebraic_closure(const Corpus& corpus, const SuiteSettings& s) {
  const auto [alpha, beta] = split_quaternion(s.a, s.i, orthogonal_unit(s.i));
  const auto [wa, wb] = combine(std::abs(alpha), std::abs(beta), s.omega1, s.omega2);
  const auto pairs = slice_pairs(s.plan, s.plan.max_radius);
  std::size_t index = 0;
  auto rep = detail::per_function("algebraic_closure", corpus, [&](const CorpusEntry& e, FunctionRecord& r) {
    const SliceSeries& f = e.series;
    const CorpusEntry& other = corpus[(index++ + 1) % corpus.size()];
    const SliceSeries& g = other.series;
    const SliceSeries h = right_multiply(f, s.a) + g;
    const double Nf = slice_norm(f, s.omega1, s.i, s.plan).value;
    const double Ng = slice_norm(g, s.omega1, s.i, s.plan).value;
    const double bound = norm(s.a) * Nf + Ng;
    double worst = 0.0;
    for (const auto& [zx, zy] : pairs) {
      const double d = std::abs(zx - zy);
      if (!(d > 0.0)) continue;
      const double diff = norm(evaluate(h, in_slice(zx, s.i)) - evaluate(h, in_slice(zy, s.i)));
      const double allowed = bound * evaluate_majorant(s.omega1, d);
      const double scale = 1.0 + norm(evaluate(h, in_slice(zx, s.i)));
      if (diff > allowed * (1.0 + s.exact_tol) + s.zero_floor * scale) {
        r.require(false, "sum_bound_violated");
        r.witness("violation.x", in_slice(zx, s.i));
        r.witness("violation.y", in_slice(zy, s.i));
        break;
      }
      if (allowed > 0.0) worst = std::max(worst, diff / allowed);
      ++r.samples;
    }
    r.set("partner_index", double(index % corpus.size()));
    r.set("N_f", Nf);
    r.set("N_g", Ng);
    r.set("sum_bound_ratio", worst);

    const ComponentConstants cf = component_constants(f, s.omega1, s.omega2, s.i, s.plan);
    const double C3 = std::max(cf.first.value, cf.second.value);
    const ComponentConstants cfa = component_constants(right_multiply(f, s.a), wa, wb, s.i, s.plan);
    r.set("C3_f", C3);
    r.set("C1_fa", cfa.first.value);
    r.set("C2_fa", cfa.second.value);
    r.require(cfa.first.value <= C3 * (1.0 + s.exact_tol) + s.zero_floor &&
                  cfa.second.value <= C3 * (1.0 + s.exact_tol) + s.zero_floor,
              "component_bound_violated");
  });
  rep.tolerances = {{"exact_tol", s.exact_tol}, {"zero_floor", s.zero_floor}};
  rep.finalize();
  return rep;
}

/// Slice norms of intrinsic members agree on the slices i and k, and the
/// two-majorant norm reduces to the one-majorant norm.  Throws NotIntrinsic.
inline VerificationReport verify_intrinsic_invariance(const Corpus& corpus, const SuiteSettings& s) {
  for (const auto& e : corpus) {
    if (!is_intrinsic(e.series)) throw NotIntrinsic(e.name + " has non-real coefficients");
  }
  auto rep = detail::per_function("intrinsic_invariance", corpus, [&](const CorpusEntry& e, FunctionRecord& r) {
    const NormEstimate ni = slice_norm(e.series, s.omega, s.i, s.plan);
    const NormEstimate nk = slice_norm(e.series, s.omega, s.k, s.plan);
    const NormEstimate n1 = slice_norm(e.series, s.omega1, s.i, s.plan);
    const NormEstimate cn = component_norm(e.series, s.omega1, s.omega2, s.i, s.plan);
    r.set("norm_i", ni.value);
    r.set("norm_k", nk.value);
    r.set("difference", std::abs(ni.value - nk.value));
    r.set("component_norm", cn.value);
    r.set("norm_i_omega1", n1.value);
    r.samples = ni.samples_used;
    r.witness_pair("argmax_i", ni.argmax);
    r.require(std::abs(ni.value - nk.value) <= s.intrinsic_tol * std::max(1.0, ni.value), "slice_norms_differ");
    r.require(std::abs(cn.value - n1.value) <= s.intrinsic_tol * std::max(1.0, n1.value),
              "component_norm_differs");
  });
  rep.tolerances = {{"intrinsic_tol", s.intrinsic_tol}};
  rep.finalize();
  return rep;
}

/// The sandwich ||f||_i <= 2 ||f||_k <= 4 ||f||_i on (i, k) and random slice
/// pairs: every ratio in [1/(2+delta), 2+delta]; ratio 1 for intrinsic f.
inline VerificationReport verify_slice_independence(const Corpus& corpus, const SuiteSettings& s) {
  std::vector<std::pair<ImaginaryUnit, ImaginaryUnit>> slices{{s.i, s.k}};
  SampleStream stream(s.plan.seed, std::uint64_t(StreamTag::slices));
  for (std::size_t n = 0; n < s.random_slice_pairs; ++n) {
    const ImaginaryUnit a = stream.unit_imaginary();
    const ImaginaryUnit b = stream.unit_imaginary();
    slices.emplace_back(a, b);
  }
  const double hi = 2.0 + s.slice_slack;
  auto rep = detail::per_function("slice_independence", corpus, [&](const CorpusEntry& e, FunctionRecord& r) {
    const bool intrinsic = is_intrinsic(e.series);
    double lo_ratio = std::numeric_limits<double>::infinity(), hi_ratio = 0.0, dev = 0.0;
    for (std::size_t n = 0; n < slices.size(); ++n) {
      const double ni = slice_norm(e.series, s.omega, slices[n].first, s.plan).value;
      const double nk = slice_norm(e.series, s.omega, slices[n].second, s.plan).value;
      if (n == 0) {
        r.set("norm_i", ni);
        r.set("norm_k", nk);
      }
      r.samples += 2 * s.plan.n_pairs;
      if (detail::is_zero(ni, s.zero_floor) && detail::is_zero(nk, s.zero_floor)) continue;
      const double ratio = ni / nk;
      lo_ratio = std::min(lo_ratio, ratio);
      hi_ratio = std::max(hi_ratio, ratio);
      dev = std::max(dev, std::abs(ratio - 1.0));
      if (!(ratio >= 1.0 / hi && ratio <= hi)) {
        r.require(false, "sandwich_violated");
        r.witness("slice_a", slices[n].first);
        r.witness("slice_b", slices[n].second);
      }
    }
    r.set("min_ratio", std::isfinite(lo_ratio) ? lo_ratio : 1.0);
    r.set("max_ratio", hi_ratio > 0.0 ? hi_ratio : 1.0);
    r.set("max_deviation_from_1", dev);
    if (intrinsic) {
      r.flags.push_back("intrinsic");
      r.require(dev <= s.intrinsic_tol, "intrinsic_ratio_not_1");
    }
  });
  rep.tolerances = {{"slice_slack", s.slice_slack}, {"intrinsic_tol", s.intrinsic_tol}};
  rep.finalize();
  return rep;
}

/// Per pair: | ||f(x)|| - ||f(y)|| | <= ||f(x)-f(y)|| and the same for the
/// component moduli ||f +- i f i|| / 2.
inline VerificationReport verify_modulus_membership(const Corpus& corpus, const SuiteSettings& s) {
  const auto pairs = slice_pairs(s.plan, s.plan.max_radius);
  constexpr double kRoundoff = 1e-13;
  auto rep = detail::per_function("modulus_membership", corpus, [&](const CorpusEntry& e, FunctionRecord& r) {
    double n_full = 0.0, n_mod = 0.0, n_plus = 0.0, n_minus = 0.0;
    std::size_t violations = 0;
    for (const auto& [zx, zy] : pairs) {
      const double d = std::abs(zx - zy);
      if (!(d > 0.0)) continue;
      const Quat fx = evaluate(e.series, in_slice(zx, s.i));
      const Quat fy = evaluate(e.series, in_slice(zy, s.i));
      const double diff = norm(fx - fy);
      const double m0 = std::abs(norm(fx) - norm(fy));
      const double mp = 0.5 * std::abs(norm(i_sandwich(fx, s.i, +1)) - norm(i_sandwich(fy, s.i, +1)));
      const double mm = 0.5 * std::abs(norm(i_sandwich(fx, s.i, -1)) - norm(i_sandwich(fy, s.i, -1)));
      const double margin = diff + kRoundoff * (1.0 + norm(fx) + norm(fy));
      if (m0 > margin || mp > margin || mm > margin) {
        if (violations == 0) {
          r.witness("violation.x", in_slice(zx, s.i));
          r.witness("violation.y", in_slice(zy, s.i));
        }
        ++violations;
      }
      const double wd = evaluate_majorant(s.omega, d);
      n_full = std::max(n_full, diff / wd);
      n_mod = std::max(n_mod, m0 / wd);
      n_plus = std::max(n_plus, mp / wd);
      n_minus = std::max(n_minus, mm / wd);
      ++r.samples;
    }
    r.set("slice_norm", n_full);
    r.set("modulus_norm", n_mod);
    r.set("plus_component_norm", n_plus);
    r.set("minus_component_norm", n_minus);
    r.set("violations", double(violations));
    r.require(violations == 0, "pointwise_inequality_violated");
  });
  rep.tolerances = {{"roundoff", kRoundoff}};
  rep.finalize();
  return rep;
}

/// Squared slice norm against N1, N2, N3 sums over the components and, when
/// w^2 is regular, the squared-modulus Poisson functional.  Pass if the
/// largest to smallest ratio is at most K.
inline VerificationReport verify_norm_equivalences(const Corpus& corpus, const SuiteSettings& s) {
  const RegularityCertificate sq = check_regular(squared(s.omega));
  const Majorant w2 = squared(s.omega);
  const double radius = poisson_radius(s.plan, s.nodes);
  const auto points = disc_points(s.plan, radius);
  auto rep = detail::per_function("norm_equivalences", corpus, [&](const CorpusEntry& e, FunctionRecord& r) {
    const Splitting sp = split(e.series, s.i);
    const double S = slice_norm(e.series, s.omega, s.i, s.plan).value;
    const Seminorms a = seminorms_N(sp.F, s.omega, s.i, s.plan, s.nodes);
    const Seminorms b = seminorms_N(sp.G, s.omega, s.i, s.plan, s.nodes);
    std::vector<double> functionals{S * S, a.N1 * a.N1 + b.N1 * b.N1, a.N2 * a.N2 + b.N2 * b.N2,
                                    a.N3 * a.N3 + b.N3 * b.N3};
    r.set("slice_norm_sq", functionals[0]);
    r.set("N1_sq", functionals[1]);
    r.set("N2_sq", functionals[2]);
    r.set("N3_sq", functionals[3]);
    if (sq.is_regular) {
      double total = 0.0;
      for (const ComplexSeries* c : {&sp.F, &sp.G}) {
        const PoissonQuadrature P([c](double t) { return std::norm((*c)(std::polar(1.0, t))); }, s.i,
                                  s.nodes);
        double sup = 0.0;
        for (const auto& z : points) {
          const double gap = 1.0 - std::abs(z);
          sup = std::max(sup, (P(in_slice(z, s.i)) - std::norm((*c)(z))) / evaluate_majorant(w2, gap));
        }
        total += sup;
      }
      r.set("poisson_sq", total);
      functionals.push_back(total);
    } else {
      r.flags.push_back("poisson_sq_skipped:omega_squared_not_regular");
    }
    const double spread = detail::spread(functionals, s.zero_floor);
    r.set("spread", spread);
    r.samples = s.plan.n_pairs + points.size();
    r.require(spread <= s.window_K, "outside_window");
  });
  rep.tolerances = {{"window_K", s.window_K}, {"zero_floor", s.zero_floor}};
  rep.finalize();
  return rep;
}

/// Derivative functionals: finiteness of the three slice ratios, the global
/// ratio against twice the slice ratio, the bounded-growth contracts at
/// sampled points, the mixed two-majorant bound and the Schwarz-Pick
/// constants (informational).  Truncations of sum q^n/n are added as
/// trend records.
inline VerificationReport verify_derivative_characterizations(const Corpus& corpus, const SuiteSettings& s) {
  const auto ball = ball_points(s.plan, s.plan.max_radius);
  SamplePlan coarse = s.plan;
  coarse.max_radius = 1.0 - 4.0 * (1.0 - s.plan.max_radius);
  const auto growth_at = disc_points(detail::with_points(s.plan, s.growth_points), s.plan.max_radius);
  const Majorant mixed = Majorant::sum(squared(s.omega1), squared(s.omega2));

  auto rep = detail::per_function("derivative_characterizations", corpus, [&](const CorpusEntry& e, FunctionRecord& r) {
    const SliceSeries& f = e.series;
    const SliceSeries df = cullen_derivative(f);
    const NormEstimate full = derivative_ratio(f, s.omega, s.i, DerivativeMode::full, s.plan);
    const NormEstimate plus = derivative_ratio(f, s.omega, s.i, DerivativeMode::plus, s.plan);
    const NormEstimate minus = derivative_ratio(f, s.omega, s.i, DerivativeMode::minus, s.plan);
    r.set("ratio_full", full.value);
    r.set("ratio_plus", plus.value);
    r.set("ratio_minus", minus.value);
    r.witness("argmax_full", full.argmax.first);
    r.require(std::isfinite(full.value) && std::isfinite(plus.value) && std::isfinite(minus.value),
              "ratio_not_finite");
    const double coarse_full = derivative_ratio(f, s.omega, s.i, DerivativeMode::full, coarse).value;
    r.set("ratio_full_coarse", coarse_full);
    if (full.value > 1.05 * coarse_full + s.zero_floor) r.flags.push_back("radial_growth");

    // Global ratio against the slice ratio over the slice images of the samples.
    double global = 0.0, slice_sup = full.value;
    for (const Quat& q : ball) {
      const double gap = 1.0 - norm(q);
      const double wg = evaluate_majorant(s.omega, gap);
      global = std::max(global, norm(evaluate(df, q)) * gap / wg);
      const double y = norm(q.vector_part());
      for (double sign : {1.0, -1.0}) {
        const Quat x = in_slice(q.x0, sign * y, s.i);
        slice_sup = std::max(slice_sup, norm(evaluate(df, x)) * gap / wg);
      }
    }
    r.set("global_ratio", global);
    r.set("slice_ratio_with_images", slice_sup);
    r.require(global <= 2.0 * slice_sup * (1.0 + s.exact_tol) + s.zero_floor, "global_exceeds_twice_slice");

    double min_slack = std::numeric_limits<double>::infinity();
    for (const auto& z : growth_at) {
      const BoundedGrowth g = bounded_growth_check(f, in_slice(z, s.i), s.i, s.plan);
      if (g.min_slack() < min_slack) {
        min_slack = g.min_slack();
        r.set("growth_worst_lhs_plus", g.lhs_plus);
        r.set("growth_worst_M", g.M);
      }
    }
    r.set("growth_min_slack", min_slack);
    r.require(min_slack >= -s.growth_slack, "bounded_growth_violated");

    double mixed_C = 0.0;
    for (const auto& z : disc_points(s.plan, s.plan.max_radius)) {
      const double gap = 1.0 - std::abs(z);
      mixed_C = std::max(mixed_C, norm(evaluate(df, in_slice(z, s.i))) * gap /
                                      std::sqrt(evaluate_majorant(mixed, gap)));
    }
    const double cn = component_norm(f, s.omega1, s.omega2, s.i, s.plan).value;
    r.set("mixed_constant", mixed_C);
    r.set("component_norm", cn);
    r.require(detail::spread({mixed_C, cn}, s.zero_floor) <= s.window_K, "mixed_bound_outside_window");

    for (SchwarzPickReading reading : {SchwarzPickReading::series, SchwarzPickReading::pointwise}) {
      const std::string p = std::string("schwarz_pick_") + to_string(reading);
      const SchwarzPickReport sp = schwarz_pick_criterion(f, s.omega, s.i, s.plan, reading);
      r.set(p + ".empirical_C", sp.empirical_C);
      r.set(p + ".derivative_bound", sp.derivative_bound);
      r.set(p + ".skipped", double(sp.skipped));
      if (!sp.contract_holds) r.flags.push_back(p + ":contract_not_observed");
      r.skipped += sp.skipped;
    }
    r.samples = full.samples_used + ball.size() + growth_at.size();
  });

  std::vector<double> trend;
  for (std::size_t d : s.trend_degrees) {
    FunctionRecord r;
    r.name = "log_series_" + std::to_string(d);
    const double v = derivative_ratio(log_series(d), s.omega, s.i, DerivativeMode::full, s.plan).value;
    r.set("ratio_full", v);
    r.set("truncation_degree", double(d));
    r.samples = s.plan.n_points;
    trend.push_back(v);
    rep.records.push_back(std::move(r));
  }
  const bool grows = trend.size() >= 2 && std::is_sorted(trend.begin(), trend.end()) &&
                     std::adjacent_find(trend.begin(), trend.end()) == trend.end();
  if (grows) {
    for (auto& r : rep.records) {
      if (r.name.rfind("log_series_", 0) == 0) r.flags.push_back("trend_growth");
    }
  }
  rep.tolerances = {{"exact_tol", s.exact_tol}, {"growth_slack", s.growth_slack}, {"window_K", s.window_K}};
  rep.finalize();
  return rep;
}

/// Rotation equivariance of P_i, the sandwich-modulus inequalities between
/// Poisson integrals, the star-kernel bound and subharmonicity of the
/// component moduli.
inline VerificationReport verify_poisson_properties(const Corpus& corpus, const SuiteSettings& s) {
  const double radius = poisson_radius(s.plan, s.nodes);
  const auto points = disc_points(s.plan, radius);
  auto rep = detail::per_function("poisson_properties", corpus, [&](const CorpusEntry& e, FunctionRecord& r) {
    const SliceSeries& f = e.series;
    SampleStream stream(s.plan.seed, std::uint64_t(StreamTag::slices) + 100);
    double rot = 0.0, kernel_excess = -std::numeric_limits<double>::infinity();
    const SurfaceFunction u = [&f](const Quat& p) { return norm(evaluate(f, p)); };
    for (std::size_t n = 0; n < s.configurations; ++n) {
      const Quat rotor = stream.sphere4();
      const Quat q = stream.ball4(0.9);
      rot = std::max(rot, rotation_equivariance_residual(u, rotor, q, s.i, s.nodes));
      const ImaginaryUnit j = stream.unit_imaginary();
      const Quat x = in_slice(stream.disc_uniform(0.9), s.i);
      const KernelBound kb = star_kernel_bound(f, x, s.i, j, s.nodes);
      kernel_excess = std::max(kernel_excess, kb.lhs - kb.rhs);
    }
    r.set("rotation_residual", rot);
    r.set("kernel_excess", kernel_excess);
    r.require(rot < s.quadrature_tol, "rotation_residual");
    r.require(kernel_excess <= s.quadrature_tol, "star_kernel_bound");

    const PoissonQuadrature Pm(boundary_values(f, s.i, DefectMode::modulus), s.i, s.nodes);
    const PoissonQuadrature Pp(boundary_values(f, s.i, DefectMode::plus), s.i, s.nodes);
    const PoissonQuadrature Pn(boundary_values(f, s.i, DefectMode::minus), s.i, s.nodes);
    double sandwich_excess = -std::numeric_limits<double>::infinity();
    double min_defect = std::numeric_limits<double>::infinity();
    for (const auto& z : points) {
      const Quat x = in_slice(z, s.i);
      const double pm = Pm(x), pp = Pp(x), pn = Pn(x);
      const double scale = 1e-12 * (1.0 + pm);
      sandwich_excess = std::max({sandwich_excess, pp - 2.0 * pm - scale, pn - 2.0 * pm - scale,
                                  2.0 * pm - (pp + pn) - scale});
      const Quat fx = evaluate(f, x);
      min_defect = std::min({min_defect, pp - norm(i_sandwich(fx, s.i, +1)),
                             pn - norm(i_sandwich(fx, s.i, -1))});
    }
    r.set("sandwich_excess", sandwich_excess);
    r.set("min_component_defect", min_defect);
    r.require(sandwich_excess <= 0.0, "modulus_sandwich");
    r.require(min_defect >= -s.quadrature_tol, "subharmonicity");
    r.samples = 2 * s.configurations + points.size();
  });
  rep.tolerances = {{"quadrature_tol", s.quadrature_tol}};
  rep.finalize();
  return rep;
}

/// Harmonic defects D+-(x) = (P_i[||f +- i f i||](x) - ||f(x) +- i f(x) i||) / 2
/// on D_i normalized by w(1 - |x|), against the slice norm.
struct DefectConstants {
  double C_def = 0.0;
  double C_plus = 0.0;
  double C_minus = 0.0;
  double min_defect = 0.0;
  Quat witness{};
};

/// Defects at or below `noise` (the quadrature tolerance) count as zero.
inline DefectConstants defect_constants(const SliceSeries& f, const Majorant& w, const ImaginaryUnit& i,
                                        const SamplePlan& plan, int nodes, double noise = 1e-8) {
  DefectConstants d;
  d.min_defect = std::numeric_limits<double>::infinity();
  const auto points = disc_points(plan, poisson_radius(plan, nodes));
  for (DefectMode mode : {DefectMode::plus, DefectMode::minus}) {
    const PoissonQuadrature P(boundary_values(f, i, mode), i, nodes);
    double sup = 0.0;
    for (const auto& z : points) {
      const Quat x = in_slice(z, i);
      const double D = 0.5 * (P(x) - defect_integrand(evaluate(f, x), i, mode));
      d.min_defect = std::min(d.min_defect, D);
      const double ratio = D > noise ? D / evaluate_majorant(w, 1.0 - std::abs(z)) : 0.0;
      if (ratio > sup) {
        sup = ratio;
        if (ratio > d.C_def) d.witness = x;
      }
    }
    (mode == DefectMode::plus ? d.C_plus : d.C_minus) = sup;
    d.C_def = std::max(d.C_def, sup);
  }
  return d;
}

inline VerificationReport verify_poisson_characterization(const Corpus& corpus, const SuiteSettings& s) {
  auto rep = detail::per_function("poisson_characterization", corpus, [&](const CorpusEntry& e, FunctionRecord& r) {
    const double boundary = boundary_modulus_norm(e.series, s.omega, s.i, s.plan).value;
    const DefectConstants d = defect_constants(e.series, s.omega, s.i, s.plan, s.nodes, s.quadrature_tol);
    const NormEstimate lip = slice_norm(e.series, s.omega, s.i, s.plan);
    r.set("boundary_modulus_norm", boundary);
    r.set("C_def", d.C_def);
    r.set("C_plus", d.C_plus);
    r.set("C_minus", d.C_minus);
    r.set("C_lip", lip.value);
    r.set("min_defect", d.min_defect);
    r.witness("defect_argmax", d.witness);
    r.samples = lip.samples_used + s.plan.n_points;
    r.require(std::isfinite(boundary), "boundary_modulus_not_finite");
    r.require(std::isfinite(d.C_def) && std::isfinite(lip.value), "not_finite");
    r.require(d.min_defect >= -s.quadrature_tol, "negative_defect");
    const double spread = detail::spread({d.C_def, lip.value}, s.zero_floor);
    r.set("spread", spread);
    r.require(spread <= s.window_K, "outside_window");
  });
  rep.tolerances = {{"window_K", s.window_K}, {"quadrature_tol", s.quadrature_tol}, {"zero_floor", s.zero_floor}};
  rep.finalize();
  return rep;
}

/// Cone condition <q, e^{it}> <= q0 cos t +- |q_vec| sin t on a t-grid; for
/// admissible (q, sign) the bound P_i[||f||](q) - 2 ||f(q0 +- i |q_vec|)|| <=
/// slack C_def w(1 - |q|).  Same-sign pairings gate; the cross pairing is
/// reported.  Samples mix points of the 4-ball with points of D_i.
inline VerificationReport verify_cone_corollary(const Corpus& corpus, const SuiteSettings& s) {
  constexpr int kGrid = 256;
  constexpr double kConeTol = 1e-12;
  const double radius = poisson_radius(s.plan, s.nodes);
  std::vector<Quat> samples;
  {
    const auto ball = ball_points(s.plan, radius);
    const auto disc = disc_points(s.plan, radius);
    for (std::size_t n = 0; n < ball.size(); ++n) {
      samples.push_back(ball[n]);
      samples.push_back(in_slice(disc[n], s.i));
    }
  }
  std::vector<double> cos_t(kGrid), sin_t(kGrid);
  for (int n = 0; n < kGrid; ++n) {
    const double t = 2.0 * std::numbers::pi * n / kGrid;
    cos_t[n] = std::cos(t);
    sin_t[n] = std::sin(t);
  }
  const Quat iq = s.i.as_quaternion();
  const auto admissible = [&](const Quat& q, double sign) {
    const double qi = q.x1 * iq.x1 + q.x2 * iq.x2 + q.x3 * iq.x3;
    const double qv = norm(q.vector_part());
    for (int n = 0; n < kGrid; ++n) {
      const double lhs = q.x0 * cos_t[n] + qi * sin_t[n];
      if (lhs > q.x0 * cos_t[n] + sign * qv * sin_t[n] + kConeTol) return false;
    }
    return true;
  };

  auto rep = detail::per_function("cone_corollary", corpus, [&](const CorpusEntry& e, FunctionRecord& r) {
    const DefectConstants d = defect_constants(e.series, s.omega, s.i, s.plan, s.nodes, s.quadrature_tol);
    const PoissonQuadrature P(boundary_values(e.series, s.i, DefectMode::modulus), s.i, s.nodes);
    std::size_t count_plus = 0, count_minus = 0;
    double worst_same = -std::numeric_limits<double>::infinity();
    double worst_cross = -std::numeric_limits<double>::infinity();
    for (const Quat& q : samples) {
      const double qv = norm(q.vector_part());
      for (double sign : {1.0, -1.0}) {
        if (!admissible(q, sign)) continue;
        (sign > 0 ? count_plus : count_minus) += 1;
        const double pq = P(q);
        const double bound = s.cone_slack * d.C_def * evaluate_majorant(s.omega, 1.0 - norm(q));
        const double same = pq - 2.0 * norm(evaluate(e.series, in_slice(q.x0, sign * qv, s.i))) - bound;
        const double cross = pq - 2.0 * norm(evaluate(e.series, in_slice(q.x0, -sign * qv, s.i))) - bound;
        if (same > worst_same) {
          worst_same = same;
          r.witness("worst_same", q);
        }
        worst_cross = std::max(worst_cross, cross);
      }
    }
    r.set("C_def", d.C_def);
    r.set("admissible_plus", double(count_plus));
    r.set("admissible_minus", double(count_minus));
    r.samples = samples.size();
    r.skipped = 2 * samples.size() - count_plus - count_minus;
    if (count_plus + count_minus == 0) {
      r.flags.push_back("no_admissible_samples");
      return;
    }
    r.set("worst_excess_same_sign", worst_same);
    r.set("worst_excess_cross_sign", worst_cross);
    if (worst_cross > s.quadrature_tol) r.flags.push_back("cross_pairing_exceeds_bound");
    r.require(worst_same <= s.quadrature_tol, "cone_bound_violated");
  });
  rep.tolerances = {{"cone_slack", s.cone_slack}, {"quadrature_tol", s.quadrature_tol}, {"cone_tol", kConeTol}};
  rep.finalize();
  return rep;
}

// ---------------------------------------------------------------------------
// Batch

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "inclusion_chain",      "algebraic_closure",
      "intrinsic_invariance", "slice_independence",
      "modulus_membership",   "norm_equivalences",
      "derivative_characterizations", "poisson_properties",
      "poisson_characterization",     "cone_corollary"};
  return names;
}

inline VerificationReport run_one_suite(const std::string& name, const Corpus& corpus, const SuiteSettings& s) {
  if (name == "inclusion_chain") return verify_inclusion_chain(corpus, s);
  if (name == "algebraic_closure") return verify_algebraic_closure(corpus, s);
  if (name == "intrinsic_invariance") return verify_intrinsic_invariance(intrinsic_members(corpus), s);
  if (name == "slice_independence") return verify_slice_independence(corpus, s);
  if (name == "modulus_membership") return verify_modulus_membership(corpus, s);
  if (name == "norm_equivalences") return verify_norm_equivalences(corpus, s);
  if (name == "derivative_characterizations") return verify_derivative_characterizations(corpus, s);
  if (name == "poisson_properties") return verify_poisson_properties(corpus, s);
  if (name == "poisson_characterization") return verify_poisson_characterization(corpus, s);
  if (name == "cone_corollary") return verify_cone_corollary(corpus, s);
  throw ValidationError("unknown suite '" + name + "'");
}

/// Runs the named suites in order; an exception becomes a failed report.
inline std::vector<VerificationReport> run_suites(const std::vector<std::string>& names, const Corpus& corpus,
                                                  const SuiteSettings& s) {
  std::vector<VerificationReport> out;
  for (const auto& name : names) {
    try {
      out.push_back(run_one_suite(name, corpus, s));
    } catch (const std::exception& e) {
      VerificationReport rep;
      rep.suite = name;
      rep.error = e.what();
      rep.finalize();
      out.push_back(std::move(rep));
    }
  }
  return out;
}

inline bool all_pass(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const VerificationReport& r) { return r.pass; });
}

}  // namespace slicereg
