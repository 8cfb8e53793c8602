#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "fpalg/membership.hpp"
#include "oracles.hpp"

using namespace fpalg;

namespace {

const double kGridP[] = {1.5, 2.0, 3.0};

}  // namespace

TEST(CoefficientRule, Construction) {
  EXPECT_THROW(CoefficientRule::geometric(0.0), std::invalid_argument);
  EXPECT_THROW(CoefficientRule::stretched_exp(0.1, 1.0), std::invalid_argument);
  EXPECT_THROW(CoefficientRule::stretched_exp_damped(0.0), std::invalid_argument);
  EXPECT_THROW(CoefficientRule::custom("none", nullptr), std::invalid_argument);
  const auto table = CoefficientRule::power_table({1.0, 0.0, Complex(0.0, 2.0)});
  EXPECT_EQ(table.log_abs(1), -std::numeric_limits<double>::infinity());
  EXPECT_DOUBLE_EQ(table.log_abs(2), std::log(2.0));
  EXPECT_EQ(table.coefficient(7), Complex{});
  EXPECT_EQ(table.truncate(3), TruncatedSeries({1.0, 0.0, Complex(0.0, 2.0), 0.0}));
  EXPECT_THROW(CoefficientRule::stretched_exp(10.0, 0.9).truncate(4096), std::overflow_error);
}

TEST(GrowthProfile, CanonicalFamilies) {
  for (double p : kGridP) {
    const SpaceParams sp(p);
    const double beta = sp.alpha();
    const auto flat = growth_profile(CoefficientRule::geometric(1.0), sp, 1000);
    ASSERT_EQ(flat.size(), 1000u);
    for (double s : flat) EXPECT_EQ(s, 0.0);

    const auto stretched = growth_profile(CoefficientRule::stretched_exp(0.1, beta), sp, 1000);
    for (double s : stretched) EXPECT_NEAR(s, 0.1, 1e-14);

    const auto damped = growth_profile(CoefficientRule::stretched_exp_damped(beta), sp, 1000);
    for (std::size_t i = 0; i < damped.size(); ++i) {
      const double n = static_cast<double>(i + 1);
      EXPECT_NEAR(damped[i], 1.0 / std::log(n + 2.0), 1e-14);
      if (i > 0) {
        EXPECT_LT(damped[i], damped[i - 1]);
      }
    }
  }
  EXPECT_THROW(growth_profile(CoefficientRule::geometric(1.0), SpaceParams(2.0), 15),
               std::invalid_argument);
}

TEST(GrowthProfile, LogSpaceMatchesDirect) {
  const SpaceParams sp(2.0);
  const CoefficientRule rules[] = {
      CoefficientRule::geometric(1.3), CoefficientRule::stretched_exp(0.7, 0.4),
      CoefficientRule::stretched_exp_damped(1.0 / 3.0),
      CoefficientRule::geometric(1.01).scaled(std::log(50.0))};
  for (const auto& rule : rules) {
    const auto profile = growth_profile(rule, sp, 2000);
    for (std::size_t n = 1; n <= 2000; ++n) {
      const double a = std::abs(rule.coefficient(n));
      if (!(a < 1e300)) continue;
      const double direct = std::max(0.0, std::log(a)) / std::pow(double(n), sp.alpha());
      EXPECT_NEAR(profile[n - 1], direct, 1e-12 * std::max(direct, 1e-300)) << rule.name() << " n=" << n;
    }
  }
}

TEST(Classify, CanonicalVerdictsAndStability) {
  for (double p : kGridP) {
    const SpaceParams sp(p);
    const double beta = sp.alpha();
    for (std::size_t n_max : {std::size_t{1} << 14, std::size_t{1} << 15}) {
      ClassifyOptions opts;
      opts.n_max = n_max;
      EXPECT_EQ(classify(CoefficientRule::geometric(1.0), sp, opts).verdict, Verdict::InFp);
      EXPECT_EQ(classify(CoefficientRule::stretched_exp(0.1, beta), sp, opts).verdict,
                Verdict::NotInFp);
      EXPECT_EQ(classify(CoefficientRule::stretched_exp_damped(beta), sp, opts).verdict,
                Verdict::InFp)
          << "p=" << p << " n_max=" << n_max;
    }
  }
}

TEST(Classify, ScaleRobust) {
  // M >= 1; see the log+ clipping note in the ledger for M < 1.
  for (double p : kGridP) {
    const SpaceParams sp(p);
    const double beta = sp.alpha();
    ClassifyOptions opts;
    opts.n_max = std::size_t{1} << 12;
    const CoefficientRule rules[] = {CoefficientRule::geometric(1.0),
                                     CoefficientRule::stretched_exp(0.1, beta),
                                     CoefficientRule::stretched_exp_damped(beta)};
    for (const auto& rule : rules) {
      const Verdict base = classify(rule, sp, opts).verdict;
      for (double M : {2.0, 10.0, 1000.0}) {
        EXPECT_EQ(classify(rule.scaled(std::log(M)), sp, opts).verdict, base)
            << rule.name() << " p=" << p << " M=" << M;
      }
    }
  }
}

TEST(Classify, VerdictInvariants) {
  oracle::Gen gen(41);
  for (int trial = 0; trial < 30; ++trial) {
    const SpaceParams sp(gen.uniform(1.2, 4.0));
    const double eps = gen.uniform(0.0, 0.3);
    const double beta = gen.uniform(0.05, 0.6);
    ClassifyOptions opts;
    opts.n_max = std::size_t{1} << gen.index(8, 13);
    opts.threshold = gen.uniform(0.005, 0.05);
    const auto v = classify(CoefficientRule::stretched_exp(eps, beta), sp, opts);
    if (v.verdict == Verdict::InFp) {
      EXPECT_LE(v.limsup_estimate, opts.threshold);
    }
    if (v.verdict == Verdict::NotInFp) {
      EXPECT_GE(v.limsup_estimate, opts.threshold);
      for (const auto& c : v.checkpoints) EXPECT_GE(c.window_max, opts.threshold);
    }
    EXPECT_EQ(v.profile.size(), opts.n_max);
    EXPECT_EQ(v.window_end, opts.n_max);
    EXPECT_EQ(v.checkpoints.back().n, opts.n_max);
  }
}

TEST(Classify, GrowthBeyondThresholdExponent) {
  const SpaceParams sp(2.0);
  // beta above 1/(p+1): s_n grows without bound.
  EXPECT_EQ(classify(CoefficientRule::stretched_exp(0.05, 0.6), sp).verdict, Verdict::NotInFp);
  // polynomial growth, log+|a_n| = 3 log n: s_n -> 0.
  const auto poly = CoefficientRule::custom("poly", [](std::size_t n) {
    return 3.0 * std::log(static_cast<double>(std::max<std::size_t>(n, 1)));
  });
  EXPECT_EQ(classify(poly, sp).verdict, Verdict::InFp);
}

TEST(Classify, Preconditions) {
  ClassifyOptions opts;
  opts.n_max = 128;
  EXPECT_THROW(classify(CoefficientRule::geometric(1.0), SpaceParams(2.0), opts),
               std::invalid_argument);
  opts.n_max = 1024;
  opts.threshold = 0.0;
  EXPECT_THROW(classify(CoefficientRule::geometric(1.0), SpaceParams(2.0), opts),
               std::invalid_argument);
}

TEST(ExtrapolateLimsup, RecoversKnownLimits) {
  const double alpha = 1.0 / 3.0;
  std::vector<double> profile(1 << 14);
  for (double limit : {0.0, 0.05, 0.2}) {
    for (std::size_t i = 0; i < profile.size(); ++i) {
      const double n = static_cast<double>(i + 1);
      profile[i] = limit + 0.5 / std::log(n + 2.0) + 0.3 * std::pow(n, -alpha);
    }
    EXPECT_NEAR(extrapolate_limsup(profile, alpha), limit, 5e-3) << "limit " << limit;
  }
}

TEST(RadialGrowthProbe, Polynomials) {
  const SpaceParams sp(2.0);
  const std::vector<double> grid = {0.0, 0.5, 0.9, 0.99, 0.999, 0.9999};
  for (double v : radial_growth_probe({1.0}, sp, grid)) EXPECT_EQ(v, 0.0);

  const TruncatedSeries f{3.0, 4.0, -2.0, 5.0};
  const auto probe = radial_growth_probe(f, sp, grid);
  for (std::size_t i = 3; i < probe.size(); ++i) EXPECT_LT(probe[i], probe[i - 1]);
  EXPECT_LT(probe.back(), 0.03);

  EXPECT_THROW(radial_growth_probe(f, sp, {0.5, 0.4}), std::invalid_argument);
  EXPECT_THROW(radial_growth_probe(f, sp, {0.5, 1.0}), std::invalid_argument);
}

TEST(RadialGrowthProbe, GeometricTruncation) {
  const SpaceParams sp(2.0);
  const std::vector<double> grid = {0.9, 0.99, 0.999};
  const auto probe = radial_growth_probe(CoefficientRule::geometric(1.0), 4096, sp, grid);
  // 1/(1-z) truncated: M_inf(r) ~ 1/(1-r)
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double r = grid[i];
    const double exact = std::sqrt(1.0 - r) * std::log((1.0 - std::pow(r, 4097)) / (1.0 - r));
    EXPECT_NEAR(probe[i], exact, 1e-9);
  }
  EXPECT_LT(probe[1], probe[0]);
  EXPECT_LT(probe[2], probe[1]);
  EXPECT_THROW(radial_growth_probe(CoefficientRule::geometric(1.0), 100, sp, grid),
               std::invalid_argument);
}

TEST(PrivalovMean, ClosedForms) {
  for (double p : kGridP) {
    const SpaceParams sp(p);
    for (double r : {0.0, 0.5, 0.95}) {
      EXPECT_EQ(privalov_mean({1.0}, sp, r).value, 0.0);
      EXPECT_NEAR(privalov_mean({std::numbers::e}, sp, r).value, 1.0, 1e-15);
      EXPECT_NEAR(privalov_mean({Complex(0.0, std::numbers::e), 0.0}, sp, r).value, 1.0, 1e-15);
    }
  }
  EXPECT_THROW(privalov_mean({1.0}, SpaceParams(2.0), 1.0), std::invalid_argument);
}

TEST(PrivalovMean, DenseTrapezoidOracle) {
  oracle::Gen gen(42);
  for (double p : kGridP) {
    const auto f = gen.series(24);
    for (double r : {0.5, 0.9}) {
      const double want = oracle::dense_circle_mean(
          f, r, [p](double m) { return m > 1.0 ? std::pow(std::log(m), p) : 0.0; });
      EXPECT_NEAR(privalov_mean(f, SpaceParams(p), r).value, want, 1e-8);
    }
  }
}

TEST(PrivalovMean, NondecreasingInRadius) {
  oracle::Gen gen(43);
  for (int trial = 0; trial < 20; ++trial) {
    const SpaceParams sp(kGridP[trial % 3]);
    const auto f = gen.series(gen.index(1, 100), trial % 2);
    double prev = 0.0;
    for (double r = 0.0; r < 0.99; r += 0.07) {
      const auto q = privalov_mean(f, sp, r);
      EXPECT_GE(q.value, prev - 2 * PrivalovOptions{}.tol) << "r=" << r;
      prev = q.value;
    }
  }
}
