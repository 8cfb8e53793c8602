#pragma once

// Theorem-level harnesses over seeded corpora of random polynomials.
// Every report is a deterministic function of (corpus spec, parameters).

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fpalg/ideals.hpp"
#include "fpalg/seminorms.hpp"
#include "fpalg/series.hpp"

namespace fpalg {

struct CorpusSpec {
  std::uint64_t seed = 0;
  std::size_t size = 0;
  std::size_t min_degree = 4;
  std::size_t max_degree = 256;
  /// Coefficient a_n is complex Gaussian times max(n, 1)^{-gamma}, gamma drawn
  /// uniformly from this list per entry.
  std::vector<double> decay_exponents = {0.0, 1.0};
};

struct Corpus {
  CorpusSpec spec;
  std::vector<TruncatedSeries> entries;
};

/// Entry `index` depends only on (seed, generator settings, index), so a
/// larger corpus with the same seed extends a smaller one.
TruncatedSeries corpus_entry(const CorpusSpec& spec, std::size_t index);
Corpus generate_corpus(const CorpusSpec& spec);

struct EntryRecord {
  std::size_t index = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // positive when the checked inequality holds
  bool ok = true;
  std::string note;
};

struct VerificationReport {
  std::string theorem;
  std::map<std::string, double> parameters;
  std::uint64_t seed = 0;
  std::size_t checked = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t quadrature_failures = 0;
  /// Smallest margin over checked entries, and the entry index attaining it.
  double worst_margin = 0.0;
  std::optional<std::size_t> worst_index;
  std::map<std::string, double> constants;
  bool inconclusive = false;
  std::vector<EntryRecord> entries;
};

struct Theorem3Options {
  IntegralOptions quadrature;
  /// Violations must exceed slack_factor * quadrature.tol.
  double slack_factor = 3.0;
};

/// |||f|||_{p,c} <= ||f||_{p,c1}, c1 = c^{p/(p+1)}, for every corpus entry.
VerificationReport check_theorem3_first(const Corpus& corpus, const SpaceParams& sp, double c,
                                        const Theorem3Options& opts = {});

/// A_hat = max ||f||_{p,c} / |||f|||_{p,c2} over the corpus, entries with
/// |||f|||_{p,c2} < 1e-300 excluded. Each entry's ratio is stored as its
/// `margin`. constants: A_hat, c2, excluded.
VerificationReport estimate_theorem3_constant(const Corpus& corpus, const SpaceParams& sp,
                                              double c, const Theorem3Options& opts = {});

/// As above over the corpus described by `spec`, plus the stability
/// diagnostic: A_hat_doubled over the doubled corpus (same seed, twice the
/// size) and relative_change = |A_hat_doubled - A_hat| / A_hat.
VerificationReport estimate_theorem3_constant(const CorpusSpec& spec, const SpaceParams& sp,
                                              double c, const Theorem3Options& opts = {});

struct FunctionalOptions {
  double rel_tol = 1e-12;
  /// Seminorm used for the continuity bound |f(lambda)| <= ||f||_{p,c} e^{c N^alpha}.
  double p = 2.0;
  double c = 0.01;
};

/// Additivity, homogeneity and multiplicativity of gamma_lambda on pairs
/// (f_i, f_{i+1}), plus the continuity bound. Each pair yields four records.
VerificationReport check_functional_axioms(const Corpus& corpus, DiskPoint lambda,
                                           const FunctionalOptions& opts = {});

struct HurwitzSpec {
  enum class Kind {
    Linear,              // f_k = (z - lambda)(1 + z/k), limit z - lambda
    Constant,            // f_k = (z - lambda) z
    RandomPerturbation,  // f_k = (z - lambda)(g + h/k), limit (z - lambda) g
  };
  Kind kind = Kind::Linear;
  std::size_t k_max = 32;
  std::uint64_t seed = 0;
  std::size_t degree = 16;  // of g and h
};

/// For r > |lambda|: records |f(lambda)| <= sup_{|z|<=r} |f_k - f| for every
/// k. Throws std::invalid_argument if the sequence does not converge.
VerificationReport hurwitz_closure_suite(DiskPoint lambda, double r, const HurwitzSpec& spec);

}  // namespace fpalg
