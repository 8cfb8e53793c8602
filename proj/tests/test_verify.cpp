#include <gtest/gtest.h>

#include <cmath>

#include "fpalg/verify.hpp"
#include "oracles.hpp"

using namespace fpalg;

namespace {

CorpusSpec small_spec(std::uint64_t seed, std::size_t size) {
  CorpusSpec s;
  s.seed = seed;
  s.size = size;
  s.max_degree = 64;
  return s;
}

void expect_counts_consistent(const VerificationReport& r) {
  EXPECT_EQ(r.checked, r.passed + r.failed);
}

}  // namespace

TEST(Corpus, DeterministicAndExtending) {
  const auto a = generate_corpus(small_spec(7, 20));
  const auto b = generate_corpus(small_spec(7, 20));
  const auto big = generate_corpus(small_spec(7, 40));
  ASSERT_EQ(a.entries.size(), 20u);
  for (std::size_t i = 0; i < 20; ++i) {
    EXPECT_EQ(a.entries[i], b.entries[i]);
    EXPECT_EQ(a.entries[i], big.entries[i]);
    EXPECT_GE(a.entries[i].degree(), 4u);
    EXPECT_LE(a.entries[i].degree(), 64u);
  }
  EXPECT_NE(generate_corpus(small_spec(8, 1)).entries[0], a.entries[0]);
}

TEST(Corpus, DegreesSpanTheRange) {
  CorpusSpec s;
  s.seed = 3;
  std::size_t low = 0, high = 0;
  for (std::size_t i = 0; i < 500; ++i) {
    const auto d = corpus_entry(s, i).degree();
    ASSERT_GE(d, 4u);
    ASSERT_LE(d, 256u);
    low += d < 16;
    high += d > 128;
  }
  // log-uniform on [4, 257): P(d < 16) ~ 0.33, P(d > 128) ~ 0.17
  EXPECT_GT(low, 100u);
  EXPECT_GT(high, 40u);
  s.decay_exponents.clear();
  EXPECT_THROW(corpus_entry(s, 0), std::invalid_argument);
}

TEST(Theorem3First, UnitAndZero) {
  Corpus corpus;
  corpus.entries = {TruncatedSeries({1.0}), TruncatedSeries()};
  for (double p : {1.5, 2.0, 3.0}) {
    const auto r = check_theorem3_first(corpus, SpaceParams(p), 1.0);
    expect_counts_consistent(r);
    EXPECT_EQ(r.failed, 0u);
    EXPECT_EQ(r.quadrature_failures, 0u);
    EXPECT_EQ(r.entries[0].rhs, 1.0);
    EXPECT_LT(r.entries[0].lhs, 1.0);
    EXPECT_EQ(r.entries[1].lhs, 0.0);
    EXPECT_EQ(r.entries[1].rhs, 0.0);
    ASSERT_TRUE(r.worst_index.has_value());
    EXPECT_EQ(*r.worst_index, 1u);
  }
}

TEST(Theorem3First, SmallCorpus) {
  const auto corpus = generate_corpus(small_spec(11, 40));
  for (double p : {1.5, 3.0}) {
    const auto r = check_theorem3_first(corpus, SpaceParams(p), 0.5);
    expect_counts_consistent(r);
    EXPECT_EQ(r.checked, 40u);
    EXPECT_EQ(r.failed, 0u);
    EXPECT_GT(r.worst_margin, 0.0);
    EXPECT_EQ(r.constants.at("c1"), theorem3_constants(SpaceParams(p), 0.5).c1);
  }
}

TEST(Theorem3First, QuadratureFailuresCountedSeparately) {
  Corpus corpus;
  corpus.entries = {TruncatedSeries({1.0, 2.0, 3.0})};
  Theorem3Options opts;
  opts.quadrature.node_budget = 30;
  opts.quadrature.tol = 3e-14;
  const auto r = check_theorem3_first(corpus, SpaceParams(2.0), 0.5, opts);
  EXPECT_EQ(r.quadrature_failures, 1u);
  EXPECT_EQ(r.checked, 0u);
  EXPECT_EQ(r.failed, 0u);
}

TEST(Theorem3Constant, UnitEntryIsReciprocalMass) {
  Corpus corpus;
  corpus.entries = {TruncatedSeries({1.0})};
  const auto r = estimate_theorem3_constant(corpus, SpaceParams(2.0), 1.0);
  EXPECT_NEAR(r.constants.at("c2"), 0.190785707092221977968, 1e-15);
  const double want = 1.0 / 0.71457721957091438889;
  EXPECT_NEAR(r.constants.at("A_hat"), want, 1e-8 * want);
  EXPECT_FALSE(r.inconclusive);
}

TEST(Theorem3Constant, AllExcludedIsInconclusive) {
  Corpus corpus;
  corpus.entries = {TruncatedSeries(), TruncatedSeries()};
  const auto r = estimate_theorem3_constant(corpus, SpaceParams(2.0), 1.0);
  EXPECT_TRUE(r.inconclusive);
  EXPECT_EQ(r.constants.at("excluded"), 2.0);
  EXPECT_THROW(estimate_theorem3_constant(Corpus{}, SpaceParams(2.0), 1.0), std::invalid_argument);
}

TEST(Theorem3Constant, ScaleInvariant) {
  auto corpus = generate_corpus(small_spec(13, 12));
  auto scaled = corpus;
  for (auto& f : scaled.entries) f = scale(f, 2.0);
  const SpaceParams sp(2.0);
  const auto a = estimate_theorem3_constant(corpus, sp, 1.0);
  const auto b = estimate_theorem3_constant(scaled, sp, 1.0);
  for (std::size_t i = 0; i < corpus.entries.size(); ++i) {
    EXPECT_NEAR(a.entries[i].margin, b.entries[i].margin, 1e-7 * a.entries[i].margin);
  }
  EXPECT_NEAR(a.constants.at("A_hat"), b.constants.at("A_hat"), 1e-7 * a.constants.at("A_hat"));
}

TEST(Theorem3Constant, DoubledCorpusDiagnostic) {
  const auto spec = small_spec(17, 10);
  const auto r = estimate_theorem3_constant(spec, SpaceParams(2.0), 1.0);
  ASSERT_EQ(r.entries.size(), 20u);
  const auto first = estimate_theorem3_constant(generate_corpus(spec), SpaceParams(2.0), 1.0);
  EXPECT_EQ(r.constants.at("A_hat"), first.constants.at("A_hat"));
  EXPECT_GE(r.constants.at("A_hat_doubled"), r.constants.at("A_hat"));
  const double rel = (r.constants.at("A_hat_doubled") - r.constants.at("A_hat")) /
                     r.constants.at("A_hat");
  EXPECT_DOUBLE_EQ(r.constants.at("relative_change"), rel);
}

TEST(FunctionalAxioms, HoldOnCorpus) {
  const auto corpus = generate_corpus(small_spec(19, 100));
  oracle::Gen gen(60);
  for (int trial = 0; trial < 3; ++trial) {
    const auto r = check_functional_axioms(corpus, DiskPoint(gen.disk(0.9)));
    expect_counts_consistent(r);
    EXPECT_EQ(r.checked, 400u);
    EXPECT_EQ(r.failed, 0u);
    EXPECT_EQ(r.constants.at("gamma_of_one"), 1.0);
  }
  // direct check of the triangle-inequality chain
  const Complex l(0.3, 0.5);
  for (const auto& f : corpus.entries) {
    EXPECT_LE(std::abs(eval(f, l)), f.abs_sum(std::abs(l)) * (1 + 1e-13));
  }
}

TEST(FunctionalAxioms, EmptyCorpus) {
  const auto r = check_functional_axioms(Corpus{}, DiskPoint(0.2));
  EXPECT_EQ(r.checked, 0u);
  EXPECT_FALSE(r.worst_index.has_value());
}

TEST(Hurwitz, Kinds) {
  const DiskPoint l(Complex(0.3, -0.2));
  HurwitzSpec lin;
  const auto a = hurwitz_closure_suite(l, 0.6, lin);
  EXPECT_EQ(a.failed, 0u);
  EXPECT_EQ(a.checked, lin.k_max);
  EXPECT_LE(a.constants.at("limit_at_lambda"), 1e-16);
  // sup |(z - lambda) z / k| on |z| <= 0.6 is attained on the circle
  EXPECT_NEAR(a.entries[0].rhs, oracle::dense_circle_max(mul({-l.value(), 1.0}, {0.0, 1.0}), 0.6),
              1e-8);

  HurwitzSpec cst;
  cst.kind = HurwitzSpec::Kind::Constant;
  const auto b = hurwitz_closure_suite(l, 0.6, cst);
  EXPECT_EQ(b.failed, 0u);
  EXPECT_EQ(b.constants.at("final_distance"), 0.0);

  HurwitzSpec rnd;
  rnd.kind = HurwitzSpec::Kind::RandomPerturbation;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    rnd.seed = seed;
    const auto c = hurwitz_closure_suite(l, 0.8, rnd);
    EXPECT_EQ(c.failed, 0u);
    for (std::size_t k = 1; k < c.entries.size(); ++k) {
      EXPECT_LT(c.entries[k].rhs, c.entries[k - 1].rhs);
    }
  }
}

TEST(Hurwitz, Preconditions) {
  EXPECT_THROW(hurwitz_closure_suite(DiskPoint(0.5), 0.4, {}), std::invalid_argument);
  HurwitzSpec s;
  s.k_max = 1;
  EXPECT_THROW(hurwitz_closure_suite(DiskPoint(0.5), 0.6, s), std::invalid_argument);
}
