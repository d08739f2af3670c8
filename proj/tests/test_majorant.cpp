#include <gtest/gtest.h>

#include <cmath>

#include "slicereg/majorant.hpp"

using namespace slicereg;

namespace {

// (int_0^x t^(a-1) dt + x int_x^2 t^(a-2) dt) / x^a in closed form.
double power_ratio(double alpha, double x) {
  return 1.0 / alpha + (1.0 - std::pow(x / 2.0, 1.0 - alpha)) / (1.0 - alpha);
}

}  // namespace

TEST(Majorant, Construction) {
  EXPECT_THROW(Majorant::power(0.0), DomainError);
  EXPECT_THROW(Majorant::power(-1.0), DomainError);
  EXPECT_THROW(Majorant::power(0.5, 0.0), DomainError);
  EXPECT_THROW(Majorant::scaled(-1.0, Majorant::power(0.5)), DomainError);
  EXPECT_NO_THROW(Majorant::power(1.5));
  EXPECT_NO_THROW(Majorant::scaled(0.0, Majorant::power(0.5)));
}

TEST(Majorant, TabulatedValidation) {
  EXPECT_THROW(Majorant::tabulated({0.0}, {0.0}), DomainError);
  EXPECT_THROW(Majorant::tabulated({0.0, 1.0, 2.0}, {0.1, 0.5, 1.0}), DomainError);
  EXPECT_THROW(Majorant::tabulated({0.0, 1.0, 1.5}, {0.0, 0.5, 1.0}), DomainError);
  EXPECT_THROW(Majorant::tabulated({0.0, 1.0, 1.0, 2.0}, {0.0, 0.5, 0.6, 1.0}), DomainError);
  EXPECT_THROW(Majorant::tabulated({0.0, 1.0, 2.0}, {0.0, -0.5, 1.0}), DomainError);
  const Majorant w = Majorant::tabulated({0.0, 1.0, 2.0}, {0.0, 1.0, 1.5});
  EXPECT_DOUBLE_EQ(w(0.5), 0.5);
  EXPECT_DOUBLE_EQ(w(1.5), 1.25);
}

TEST(Majorant, EvaluationDomain) {
  const Majorant w = Majorant::power(0.5);
  EXPECT_DOUBLE_EQ(w(0.0), 0.0);
  EXPECT_DOUBLE_EQ(w(0.25), 0.5);
  EXPECT_THROW(w(-0.1), DomainError);
  EXPECT_THROW(w(2.5), DomainError);
  EXPECT_NEAR(w(2.0 + 1e-13), std::sqrt(2.0), 1e-15);
}

TEST(Majorant, SumAndScaledValues) {
  const Majorant w = Majorant::sum(Majorant::power(0.5), Majorant::scaled(3.0, Majorant::power(1.0)));
  EXPECT_NEAR(w(0.25), 0.5 + 0.75, 1e-15);
  EXPECT_EQ(w.describe(), "sum(power:0.5;scaled(3;power:1))");
  EXPECT_EQ(Majorant::power(0.5, 2.0).describe(), "power:0.5:2");
}

TEST(Majorant, CombineDropsZeroWeights) {
  const Majorant w1 = Majorant::power(0.5), w2 = Majorant::power(0.25);
  const auto [a, b] = combine(1.0, 0.0, w1, w2);
  EXPECT_EQ(a.describe(), "power:0.5");
  EXPECT_EQ(b.describe(), "power:0.25");
  const auto [c, d] = combine(2.0, 3.0, w1, w2);
  EXPECT_EQ(c.describe(), "sum(scaled(2;power:0.5);scaled(3;power:0.25))");
  EXPECT_NEAR(d(0.5), 3.0 * std::sqrt(0.5) + 2.0 * std::pow(0.5, 0.25), 1e-15);
}

TEST(Majorant, SquaredPowerIsExact) {
  const Majorant s = squared(Majorant::power(0.25, 3.0));
  EXPECT_EQ(s.describe(), "power:0.5:9");
  const Majorant t = squared(Majorant::sum(Majorant::power(0.5), Majorant::power(1.0)));
  for (double x : {1e-6, 0.01, 0.3, 1.0, 1.9}) {
    const double v = std::sqrt(x) + x;
    EXPECT_NEAR(t(x), v * v, 1e-3 * v * v) << x;
  }
}

TEST(Regularity, SquareRootHasConstantFour) {
  const RegularityCertificate c = check_regular(Majorant::power(0.5));
  ASSERT_TRUE(c.is_regular);
  EXPECT_EQ(c.verdict, RegularityVerdict::regular);
  EXPECT_LT(c.worst_x, 1e-28);
  EXPECT_NEAR(c.empirical_C, power_ratio(0.5, c.worst_x), 1e-9);
  EXPECT_NEAR(c.empirical_C, 4.0, 1e-6);
  ASSERT_EQ(c.level_maxima.size(), 3u);
  EXPECT_EQ(c.grid_size, 64u + 128u + 256u);
}

TEST(Regularity, PowerLawsApproachClosedForm) {
  for (double alpha : {0.1, 0.25, 0.3, 0.5, 0.6, 0.75}) {
    const RegularityCertificate c = check_regular(Majorant::power(alpha));
    ASSERT_TRUE(c.is_regular) << alpha;
    EXPECT_NEAR(c.empirical_C, power_ratio(alpha, c.worst_x), 1e-8 * c.empirical_C) << alpha;
    EXPECT_LE(c.empirical_C, 1.0 / (alpha * (1.0 - alpha)) + 1e-9) << alpha;
  }
}

TEST(Regularity, SlowConvergenceNearOneIsNotCertified) {
  // The ratio for t^0.9 approaches its supremum like x^0.1, which the
  // refinement levels cannot distinguish from divergence.
  const RegularityCertificate c = check_regular(Majorant::power(0.9));
  EXPECT_EQ(c.verdict, RegularityVerdict::ratio_diverges);
  EXPECT_LE(c.empirical_C, 1.0 / (0.9 * 0.1));
}

TEST(Regularity, LinearMajorantDiverges) {
  const RegularityCertificate c = check_regular(Majorant::power(1.0));
  EXPECT_FALSE(c.is_regular);
  EXPECT_EQ(c.verdict, RegularityVerdict::ratio_diverges);
  // For w = t the ratio is 1 + log(2/x).
  const double x = c.worst_x;
  EXPECT_NEAR(c.empirical_C, 1.0 + std::log(2.0 / x), 1e-8 * c.empirical_C);
  EXPECT_GE(c.empirical_C, 0.9 * std::log(2.0 / x));
}

TEST(Regularity, SuperlinearMajorantIsNotMonotone) {
  EXPECT_EQ(check_regular(Majorant::power(2.0)).verdict, RegularityVerdict::not_monotone);
  EXPECT_FALSE(check_regular(Majorant::power(1.5)).is_regular);
}

TEST(Regularity, ZeroMajorantVanishes) {
  const RegularityCertificate c = check_regular(Majorant::scaled(0.0, Majorant::power(0.5)));
  EXPECT_EQ(c.verdict, RegularityVerdict::vanishes);
  EXPECT_FALSE(c.is_regular);
}

TEST(Regularity, ScalingLeavesConstantUnchanged) {
  const double a = check_regular(Majorant::power(0.5)).empirical_C;
  const double b = check_regular(Majorant::scaled(3.0, Majorant::power(0.5))).empirical_C;
  const double c = check_regular(Majorant::power(0.5, 7.0)).empirical_C;
  EXPECT_NEAR(a, b, 1e-12 * a);
  EXPECT_NEAR(a, c, 1e-12 * a);
}

TEST(Regularity, SumOfRegularMajorantsIsRegular) {
  const Majorant w1 = Majorant::power(0.5), w2 = Majorant::power(0.25);
  const RegularityCertificate c = check_regular(Majorant::sum(w1, w2));
  ASSERT_TRUE(c.is_regular);
  EXPECT_LE(c.empirical_C,
            std::max(check_regular(w1).empirical_C, check_regular(w2).empirical_C) + 1e-9);
}

TEST(Regularity, SmallExponentsStayRegularWhenSquared) {
  for (double alpha : {0.1, 0.25, 0.35}) {
    const Majorant w = Majorant::power(alpha);
    EXPECT_TRUE(check_regular(w).is_regular) << alpha;
    EXPECT_TRUE(check_regular(squared(w)).is_regular) << alpha;
  }
  EXPECT_FALSE(check_regular(squared(Majorant::power(0.5))).is_regular);
}

TEST(Regularity, TabulatedSquareRoot) {
  std::vector<double> grid{0.0}, values{0.0};
  constexpr int kKnots = 2000;
  for (int k = 0; k < kKnots; ++k) {
    const double t = 2.0 * std::pow(1e-40, 1.0 - double(k) / double(kKnots - 1));
    grid.push_back(t);
    values.push_back(std::sqrt(t));
  }
  grid.back() = 2.0;
  const RegularityCertificate c = check_regular(Majorant::tabulated(grid, values));
  ASSERT_TRUE(c.is_regular);
  EXPECT_NEAR(c.empirical_C, 4.0, 0.05);
}

TEST(Regularity, GridValidation) {
  EXPECT_THROW(check_regular(Majorant::power(0.5), {}), DomainError);
  EXPECT_THROW(check_regular(Majorant::power(0.5), {0.0, 1.0}), DomainError);
  EXPECT_THROW(check_regular(Majorant::power(0.5), {0.5, 2.0}), DomainError);
}

TEST(Regularity, VerdictNames) {
  EXPECT_STREQ(to_string(RegularityVerdict::regular), "regular");
  EXPECT_STREQ(to_string(RegularityVerdict::ratio_diverges), "ratio_diverges");
}
