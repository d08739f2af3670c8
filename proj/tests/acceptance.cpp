// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any
// failure.  Tolerances and runtime budgets are pinned below.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "slicereg.hpp"

using namespace slicereg;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

Quat random_ball(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> u(-radius, radius);
  for (;;) {
    const Quat q{u(rng), u(rng), u(rng), u(rng)};
    if (norm(q) <= radius) return q;
  }
}

std::complex<double> random_disc(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> u(-radius, radius);
  for (;;) {
    const std::complex<double> z(u(rng), u(rng));
    if (std::abs(z) <= radius) return z;
  }
}

ImaginaryUnit random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  return ImaginaryUnit::normalized(g(rng), g(rng), g(rng));
}

Quat random_rotor(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  const Quat r{g(rng), g(rng), g(rng), g(rng)};
  return r / norm(r);
}

const SliceSeries kIdentity{Quat{}, Quat{1.0}};
const SliceSeries kSquare{Quat{}, Quat{}, Quat{1.0}};

Outcome algebra() {
  Outcome o;
  const Quat one{1.0};
  const bool table = kE1 * kE2 == kE3 && kE2 * kE1 == -kE3 && kE2 * kE3 == kE1 && kE3 * kE2 == -kE1 &&
                     kE3 * kE1 == kE2 && kE1 * kE3 == -kE2 && kE1 * kE1 == -one && kE2 * kE2 == -one &&
                     kE3 * kE3 == -one;
  o.check(table, "multiplication table");
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  double worst = 0.0;
  for (int n = 0; n < 10000; ++n) {
    const Quat p{u(rng), u(rng), u(rng), u(rng)}, q{u(rng), u(rng), u(rng), u(rng)};
    const double e = norm(p) * norm(q);
    worst = std::max(worst, std::abs(norm(p * q) - e) / std::max(1.0, e));
  }
  o.check(worst < 1e-12, "norm multiplicativity " + fmt(worst));
  o.detail = o.detail.empty() ? "max norm error " + fmt(worst) : o.detail;
  return o;
}

Outcome splitting() {
  Outcome o;
  std::mt19937_64 rng(2);
  double worst = 0.0;
  for (const auto& e : default_corpus()) {
    const ImaginaryUnit i = random_unit(rng);
    const Splitting s = split(e.series, i);
    for (int n = 0; n < 1000; ++n) {
      const auto z = random_disc(rng, 1.0);
      worst = std::max(worst, norm(s.recombine(z) - evaluate(e.series, in_slice(z, i))));
    }
  }
  o.check(worst < 1e-12, "reconstruction error " + fmt(worst));
  if (o.pass) o.detail = "max error " + fmt(worst);
  return o;
}

Outcome representation() {
  Outcome o;
  std::mt19937_64 rng(3);
  double worst = 0.0;
  for (const auto& e : default_corpus()) {
    const ImaginaryUnit i = random_unit(rng);
    for (int n = 0; n < 1000; ++n) {
      const Quat q = random_ball(rng, 1.0);
      worst = std::max(worst, norm(evaluate_via_slice(e.series, q, i) - evaluate(e.series, q)));
    }
  }
  o.check(worst < 1e-10, "extension error " + fmt(worst));
  if (o.pass) o.detail = "max error " + fmt(worst);
  return o;
}

Outcome star_algebra() {
  Outcome o;
  const Corpus corpus = default_corpus();
  std::mt19937_64 rng(4);
  double pointwise = 0.0, imag = 0.0, inverse_res = 0.0, deriv = 0.0;
  constexpr std::size_t M = 16;
  for (std::size_t a = 0; a < corpus.size(); ++a) {
    const SliceSeries& f = corpus[a].series;
    const SliceSeries& g = corpus[(a + 1) % corpus.size()].series;
    const SliceSeries fg = star_product(f, g);
    for (int n = 0; n < 200; ++n) {
      const Quat q = random_ball(rng, 1.0);
      if (norm(evaluate(f, q)) <= 1e-6) continue;
      const Quat series = evaluate(fg, q);
      pointwise = std::max(pointwise, norm(star_pointwise(f, g, q) - series) / std::max(1.0, norm(series)));
    }
    const SliceSeries raw = star_product(f, regular_conjugate(f));
    for (const Quat& c : raw.coefficients()) imag = std::max(imag, norm(c.vector_part()));
    if (norm(f[0]) > 1e-3) {
      const SliceSeries prod = star_product(f, star_inverse(f, M));
      for (std::size_t k = 0; k <= M; ++k) {
        inverse_res = std::max(inverse_res, norm(prod.coefficient(k) - (k == 0 ? Quat{1.0} : Quat{})));
      }
      const SliceSeries direct = cullen_derivative(star_inverse(f, M + 1));
      const SliceSeries formula = star_inverse_derivative(f, M);
      for (std::size_t k = 0; k <= M; ++k) {
        deriv = std::max(deriv, norm(direct.coefficient(k) - formula.coefficient(k)));
      }
    }
  }
  o.check(pointwise < 1e-8, "pointwise product error " + fmt(pointwise));
  o.check(imag < 1e-12, "symmetrization imaginary part " + fmt(imag));
  o.check(inverse_res < 1e-10, "inverse residual " + fmt(inverse_res));
  o.check(deriv < 1e-10, "inverse derivative error " + fmt(deriv));
  if (o.pass) {
    o.detail = "pointwise " + fmt(pointwise) + ", f^s imag " + fmt(imag) + ", inverse " + fmt(inverse_res) +
               ", derivative " + fmt(deriv);
  }
  return o;
}

Outcome poisson() {
  Outcome o;
  std::mt19937_64 rng(5);
  double one_err = 0.0, rot = 0.0, min_defect = 0.0, excess = -1.0;
  const BoundaryFunction one = [](double) { return 1.0; };
  for (int n = 0; n < 50; ++n) {
    const ImaginaryUnit i = random_unit(rng);
    one_err = std::max(one_err, std::abs(poisson_integral(one, in_slice(random_disc(rng, 0.9), i), i) - 1.0));
  }
  const SurfaceFunction u = [](const Quat& p) { return std::exp(p.x1) * std::cos(p.x0 + p.x3) + p.x2 * p.x2; };
  for (int n = 0; n < 20; ++n) {
    rot = std::max(rot, rotation_equivariance_residual(u, random_rotor(rng), random_ball(rng, 0.9), random_unit(rng)));
  }
  const Corpus corpus = default_corpus();
  for (const auto& e : corpus) {
    const ImaginaryUnit i = random_unit(rng);
    const PoissonQuadrature P1(boundary_values(e.series, i, DefectMode::minus), i);
    const PoissonQuadrature P2(boundary_values(e.series, i, DefectMode::plus), i);
    for (int n = 0; n < 20; ++n) {
      const Quat x = in_slice(random_disc(rng, 0.9), i);
      const Quat fx = evaluate(e.series, x);
      min_defect = std::min(min_defect, P1(x) - defect_integrand(fx, i, DefectMode::minus));
      min_defect = std::min(min_defect, P2(x) - defect_integrand(fx, i, DefectMode::plus));
    }
  }
  for (int n = 0; n < 50; ++n) {
    const auto& e = corpus[std::size_t(n) % corpus.size()];
    const ImaginaryUnit i = random_unit(rng), j = random_unit(rng);
    const KernelBound b = star_kernel_bound(e.series, in_slice(random_disc(rng, 0.9), i), i, j);
    excess = std::max(excess, b.lhs - b.rhs);
  }
  o.check(one_err <= 1e-8, "P[1] error " + fmt(one_err));
  o.check(rot < 1e-8, "rotation residual " + fmt(rot));
  o.check(min_defect >= -1e-8, "negative defect " + fmt(min_defect));
  o.check(excess <= 1e-8, "kernel bound excess " + fmt(excess));
  if (o.pass) {
    o.detail = "P[1] " + fmt(one_err) + ", rotation " + fmt(rot) + ", min defect " + fmt(min_defect) +
               ", kernel lhs-rhs " + fmt(excess);
  }
  return o;
}

Outcome majorants() {
  Outcome o;
  const RegularityCertificate sq = check_regular(Majorant::power(0.5));
  const RegularityCertificate lin = check_regular(Majorant::power(1.0));
  const RegularityCertificate quad = check_regular(Majorant::power(2.0));
  o.check(sq.is_regular && sq.empirical_C <= 4.1, "sqrt: C = " + fmt(sq.empirical_C));
  o.check(!lin.is_regular && lin.verdict == RegularityVerdict::ratio_diverges, "t not rejected as divergent");
  o.check(lin.empirical_C >= 0.9 * std::log(2.0 / lin.worst_x), "t: trend " + fmt(lin.empirical_C));
  o.check(!quad.is_regular && quad.verdict == RegularityVerdict::not_monotone, "t^2 not rejected by monotonicity");
  if (o.pass) {
    o.detail = "sqrt C " + fmt(sq.empirical_C) + ", t ratio " + fmt(lin.empirical_C) + " at x " +
               fmt(lin.worst_x) + ", t^2 " + to_string(quad.verdict);
  }
  return o;
}

Outcome norms() {
  Outcome o;
  const SamplePlan plan;  // 10^4 pairs
  const Majorant sq = Majorant::power(0.5), lin = Majorant::power(1.0);
  const double s = slice_norm(kIdentity, sq, ImaginaryUnit::e1(), plan).value;
  const double g = global_norm(kIdentity, sq, plan).value;
  const double t = slice_norm(kSquare, lin, ImaginaryUnit::e1(), plan).value;
  o.check(std::abs(s - std::sqrt(2.0)) <= 0.02 * std::sqrt(2.0), "slice " + fmt(s));
  o.check(std::abs(g - std::sqrt(2.0)) <= 0.02 * std::sqrt(2.0), "global " + fmt(g));
  o.check(std::abs(t - 2.0) <= 0.04, "square " + fmt(t));
  if (o.pass) o.detail = "slice " + fmt(s) + ", global " + fmt(g) + ", q^2 " + fmt(t);
  return o;
}

Outcome inclusion() {
  Outcome o;
  SuiteSettings s;
  s.omega1 = s.omega2 = Majorant::power(0.5);
  const VerificationReport r = verify_inclusion_chain(default_corpus(), s);
  double worst = 0.0;
  for (const auto& rec : r.records) {
    if (!rec.has("factor")) {
      o.check(false, rec.name + " errored");
      continue;
    }
    worst = std::max(worst, rec.get("factor"));
    o.check(rec.get("factor") <= 1.0, rec.name + " factor " + fmt(rec.get("factor")));
  }
  if (o.pass) o.detail = "max global/(6 C3) " + fmt(worst);
  return o;
}

Outcome slice_independence() {
  Outcome o;
  const VerificationReport r = verify_slice_independence(default_corpus(), SuiteSettings{});
  double lo = 1.0, hi = 1.0, dev = 0.0;
  for (const auto& rec : r.records) {
    lo = std::min(lo, rec.get("min_ratio"));
    hi = std::max(hi, rec.get("max_ratio"));
    if (rec.has_flag("intrinsic")) dev = std::max(dev, rec.get("max_deviation_from_1"));
  }
  o.check(lo >= 1.0 / 2.2 && hi <= 2.2, "ratio range [" + fmt(lo) + ", " + fmt(hi) + "]");
  o.check(dev <= 1e-10, "intrinsic deviation " + fmt(dev));
  o.check(r.pass, "suite failed");
  if (o.pass) o.detail = "ratios in [" + fmt(lo) + ", " + fmt(hi) + "], intrinsic deviation " + fmt(dev);
  return o;
}

Outcome derivatives() {
  Outcome o;
  const SamplePlan plan;
  const Majorant lin = Majorant::power(1.0);
  const ImaginaryUnit i = ImaginaryUnit::e1();
  double id_dev = 0.0;
  for (const auto& z : disc_points(plan, plan.max_radius)) {
    const double gap = 1.0 - std::abs(z);
    const double ratio = norm(evaluate(cullen_derivative(kIdentity), in_slice(z, i))) * gap / lin(gap);
    id_dev = std::max(id_dev, std::abs(ratio - 1.0));
  }
  const double sq = derivative_ratio(kSquare, lin, i, DerivativeMode::full, plan).value;
  double slack = std::numeric_limits<double>::infinity();
  SamplePlan growth = plan;
  growth.n_points = 100;
  for (const auto& e : default_corpus()) {
    for (const auto& z : disc_points(growth, plan.max_radius)) {
      slack = std::min(slack, bounded_growth_check(e.series, in_slice(z, i), i, growth).min_slack());
    }
  }
  o.check(id_dev <= 1e-12, "identity ratio deviates by " + fmt(id_dev));
  o.check(std::abs(sq - 2.0) <= 0.04, "q^2 ratio " + fmt(sq));
  o.check(slack >= -1e-8, "growth slack " + fmt(slack));
  if (o.pass) {
    o.detail = "identity deviation " + fmt(id_dev) + ", q^2 " + fmt(sq) + ", min growth slack " + fmt(slack);
  }
  return o;
}

Outcome poisson_characterization() {
  Outcome o;
  const SuiteSettings s;
  const DefectConstants d = defect_constants(kIdentity, s.omega, s.i, s.plan, s.nodes);
  o.check(std::abs(d.C_def - 1.0) <= 0.02, "identity defect ratio " + fmt(d.C_def));
  const VerificationReport r = verify_poisson_characterization(default_corpus(), s);
  double worst = 0.0;
  for (const auto& rec : r.records) {
    if (!rec.has("spread")) {
      o.check(false, rec.name + " errored");
      continue;
    }
    const bool finite = std::isfinite(rec.get("C_def")) && std::isfinite(rec.get("C_lip"));
    o.check(finite, rec.name + " constants not finite");
    o.check(rec.get("spread") <= s.window_K, rec.name + " spread " + fmt(rec.get("spread")));
    worst = std::max(worst, rec.get("spread"));
  }
  if (o.pass) o.detail = "identity C_def " + fmt(d.C_def) + ", max spread " + fmt(worst);
  return o;
}

Outcome determinism() {
  Outcome o;
  RunConfig config;
  config.settings.plan.n_pairs = 1000;
  config.settings.plan.n_points = 200;
  const auto run = [&config] {
    return render_reports(run_suites(config.suites, config.load_corpus(), config.settings), config,
                          ReportFormat::json);
  };
  const std::string a = run();
  const std::string b = run();
  o.check(a == b, "reports differ");
  if (o.pass) o.detail = std::to_string(a.size()) + " identical bytes";
  return o;
}

struct Criterion {
  const char* id;
  const char* name;
  double budget_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "algebra exactness", 1.0, algebra},
      {"AC2", "splitting round-trip", 5.0, splitting},
      {"AC3", "representation formula", 5.0, representation},
      {"AC4", "star algebra", 10.0, star_algebra},
      {"AC5", "Poisson integrals", 30.0, poisson},
      {"AC6", "majorant regularity", 5.0, majorants},
      {"AC7", "norm estimators", 10.0, norms},
      {"AC8", "inclusion constant", 60.0, inclusion},
      {"AC9", "slice independence", 60.0, slice_independence},
      {"AC10", "derivative characterization", 30.0, derivatives},
      {"AC11", "Poisson-defect characterization", 60.0, poisson_characterization},
      {"AC12", "determinism", 5.0, determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_s) {
      o.pass = false;
      o.detail += "; runtime " + fmt(secs) + " s exceeds " + fmt(c.budget_s) + " s";
    }
    if (!o.pass) ++failures;
    std::printf("%-4s %s  %-32s %7.2f s  %s\n", c.id, o.pass ? "PASS" : "FAIL", c.name, secs, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", int(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
