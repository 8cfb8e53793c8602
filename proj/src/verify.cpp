#include "fpalg/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <exception>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>

namespace fpalg {
namespace {

// Uniform in [0, 1) from the top 53 bits; fully specified across platforms,
// unlike std::uniform_real_distribution.
double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1p-53;
}

// Box-Muller, for the same reason.
Complex complex_gaussian(std::mt19937_64& rng) {
  const double u1 = 1.0 - unit_uniform(rng);  // (0, 1]
  const double u2 = unit_uniform(rng);
  const double rad = std::sqrt(-std::log(u1));  // unit variance for the complex value
  const double ang = 2.0 * std::numbers::pi * u2;
  return {rad * std::cos(ang), rad * std::sin(ang)};
}

std::mt19937_64 entry_rng(std::uint64_t seed, std::size_t index, std::uint32_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                    stream};
  return std::mt19937_64(seq);
}

TruncatedSeries random_series(std::mt19937_64& rng, std::size_t degree, double gamma) {
  std::vector<Complex> a(degree + 1);
  for (std::size_t n = 0; n <= degree; ++n) {
    a[n] = complex_gaussian(rng) * std::pow(static_cast<double>(std::max<std::size_t>(n, 1)), -gamma);
  }
  return TruncatedSeries(std::move(a));
}

// Runs body(i) for i in [0, n) across hardware threads. Results are written
// by index, so reductions done afterwards are order-independent.
template <class Body>
void parallel_for(std::size_t n, Body body) {
  const std::size_t workers =
      std::min<std::size_t>(n, std::max(1u, std::thread::hardware_concurrency()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < n; i += workers) body(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

void finalize(VerificationReport& report) {
  report.checked = report.passed = report.failed = 0;
  report.worst_margin = std::numeric_limits<double>::infinity();
  report.worst_index.reset();
  for (const auto& e : report.entries) {
    if (e.note == "quadrature-failure") continue;
    ++report.checked;
    (e.ok ? report.passed : report.failed) += 1;
    if (e.margin < report.worst_margin) {
      report.worst_margin = e.margin;
      report.worst_index = e.index;
    }
  }
  if (!report.worst_index) report.worst_margin = 0.0;
}

}  // namespace

TruncatedSeries corpus_entry(const CorpusSpec& spec, std::size_t index) {
  if (spec.min_degree > spec.max_degree || spec.decay_exponents.empty()) {
    throw std::invalid_argument("corpus spec: need min_degree <= max_degree and a decay exponent");
  }
  auto rng = entry_rng(spec.seed, index, 0);
  const double lo = std::log(static_cast<double>(spec.min_degree));
  const double hi = std::log(static_cast<double>(spec.max_degree + 1));
  auto degree = static_cast<std::size_t>(std::floor(std::exp(lo + (hi - lo) * unit_uniform(rng))));
  degree = std::clamp(degree, spec.min_degree, spec.max_degree);
  const auto pick = static_cast<std::size_t>(unit_uniform(rng) * static_cast<double>(spec.decay_exponents.size()));
  const double gamma = spec.decay_exponents[std::min(pick, spec.decay_exponents.size() - 1)];
  return random_series(rng, degree, gamma);
}

Corpus generate_corpus(const CorpusSpec& spec) {
  Corpus corpus{spec, {}};
  corpus.entries.reserve(spec.size);
  for (std::size_t i = 0; i < spec.size; ++i) corpus.entries.push_back(corpus_entry(spec, i));
  return corpus;
}

VerificationReport check_theorem3_first(const Corpus& corpus, const SpaceParams& sp, double c,
                                        const Theorem3Options& opts) {
  const auto [c1, c2] = theorem3_constants(sp, c);
  const double slack = opts.slack_factor * opts.quadrature.tol;

  VerificationReport report;
  report.theorem = "t3-first";
  report.seed = corpus.spec.seed;
  report.parameters = {{"p", sp.p()}, {"c", c}, {"corpus_size", static_cast<double>(corpus.entries.size())},
                       {"tol", opts.quadrature.tol}, {"slack", slack}};
  report.constants = {{"c1", c1}};
  report.entries.resize(corpus.entries.size());

  parallel_for(corpus.entries.size(), [&](std::size_t i) {
    const auto& f = corpus.entries[i];
    EntryRecord rec;
    rec.index = i;
    rec.rhs = coeff_seminorm(f, sp, c1);
    try {
      rec.lhs = integral_seminorm(f, sp, c, opts.quadrature).value;
      rec.margin = rec.rhs - rec.lhs;
      rec.ok = rec.margin >= -slack;
    } catch (const AccuracyError& e) {
      rec.note = "quadrature-failure";
      rec.lhs = e.residual();
      rec.ok = false;
    }
    report.entries[i] = rec;
  });

  finalize(report);
  report.quadrature_failures = static_cast<std::size_t>(
      std::count_if(report.entries.begin(), report.entries.end(),
                    [](const EntryRecord& e) { return e.note == "quadrature-failure"; }));
  return report;
}

namespace {

// Ratios ||f||_{p,c} / |||f|||_{p,c2} for entries [0, total); A_hat is the max
// over [0, first), A_hat_doubled the max over everything.
template <class EntryFn>
VerificationReport constant_report(EntryFn entry, std::size_t total, std::size_t first,
                                   const SpaceParams& sp, double c, const Theorem3Options& opts) {
  const auto consts = theorem3_constants(sp, c);

  VerificationReport report;
  report.theorem = "t3-constant";
  report.parameters = {{"p", sp.p()}, {"c", c}, {"corpus_size", static_cast<double>(first)},
                       {"tol", opts.quadrature.tol}};
  report.entries.resize(total);

  parallel_for(total, [&](std::size_t i) {
    const TruncatedSeries f = entry(i);
    EntryRecord rec;
    rec.index = i;
    rec.lhs = coeff_seminorm(f, sp, c);
    try {
      rec.rhs = integral_seminorm(f, sp, consts.c2, opts.quadrature).value;
      if (rec.rhs < 1e-300) {
        rec.note = "excluded";
      } else {
        rec.margin = rec.lhs / rec.rhs;  // the entry's own constant
      }
    } catch (const AccuracyError&) {
      rec.note = "quadrature-failure";
      rec.ok = false;
    }
    report.entries[i] = rec;
  });

  double a_hat = 0.0;
  double a_hat_all = 0.0;
  std::size_t excluded = 0;
  std::size_t included = 0;
  for (const auto& e : report.entries) {
    if (e.note == "quadrature-failure") {
      ++report.quadrature_failures;
      continue;
    }
    if (e.note == "excluded") {
      ++excluded;
      continue;
    }
    ++included;
    if (e.margin > a_hat_all) {
      a_hat_all = e.margin;
      report.worst_index = e.index;
    }
    if (e.index < first) a_hat = std::max(a_hat, e.margin);
  }

  report.checked = report.passed = included;
  report.failed = 0;
  report.worst_margin = a_hat_all;
  report.inconclusive = (included == 0);
  report.constants = {{"c2", consts.c2}, {"A_hat", a_hat}, {"excluded", static_cast<double>(excluded)}};
  if (total > first) {
    report.constants["A_hat_doubled"] = a_hat_all;
    report.constants["relative_change"] = a_hat > 0.0 ? std::abs(a_hat_all - a_hat) / a_hat : 0.0;
  }
  return report;
}

}  // namespace

VerificationReport estimate_theorem3_constant(const Corpus& corpus, const SpaceParams& sp,
                                              double c, const Theorem3Options& opts) {
  if (corpus.entries.empty()) throw std::invalid_argument("estimate_theorem3_constant: empty corpus");
  auto report = constant_report([&](std::size_t i) { return corpus.entries[i]; },
                                corpus.entries.size(), corpus.entries.size(), sp, c, opts);
  report.seed = corpus.spec.seed;
  return report;
}

VerificationReport estimate_theorem3_constant(const CorpusSpec& spec, const SpaceParams& sp,
                                              double c, const Theorem3Options& opts) {
  if (spec.size == 0) throw std::invalid_argument("estimate_theorem3_constant: empty corpus");
  auto report = constant_report([&](std::size_t i) { return corpus_entry(spec, i); },
                                2 * spec.size, spec.size, sp, c, opts);
  report.seed = spec.seed;
  return report;
}

VerificationReport check_functional_axioms(const Corpus& corpus, DiskPoint lambda,
                                           const FunctionalOptions& opts) {
  const SpaceParams sp(opts.p);
  const Complex l = lambda.value();
  const std::size_t n = corpus.entries.size();

  VerificationReport report;
  report.theorem = "functional";
  report.seed = corpus.spec.seed;
  report.parameters = {{"lambda_re", l.real()}, {"lambda_im", l.imag()},
                       {"corpus_size", static_cast<double>(n)}, {"rel_tol", opts.rel_tol},
                       {"p", opts.p}, {"c", opts.c}};
  report.constants = {{"gamma_of_one", std::abs(point_functional(TruncatedSeries::constant(1.0), lambda))}};
  if (n == 0) {
    finalize(report);
    return report;
  }

  std::vector<std::array<EntryRecord, 4>> results(n);
  parallel_for(n, [&](std::size_t i) {
    const auto& f = corpus.entries[i];
    const auto& g = corpus.entries[(i + 1) % n];
    auto rng = entry_rng(corpus.spec.seed, i, 1);
    const Complex s = complex_gaussian(rng);

    const Complex gf = point_functional(f, lambda);
    const Complex gg = point_functional(g, lambda);
    const double sf = f.abs_sum(std::abs(l));
    const double sg = g.abs_sum(std::abs(l));

    auto record = [&](const char* what, double err, double norm) {
      EntryRecord rec;
      rec.index = i;
      rec.note = what;
      rec.lhs = err;
      rec.rhs = opts.rel_tol * norm;
      rec.margin = norm > 0.0 ? opts.rel_tol - err / norm : (err == 0.0 ? opts.rel_tol : -err);
      rec.ok = err <= opts.rel_tol * norm;
      return rec;
    };

    auto& out = results[i];
    out[0] = record("additivity", std::abs(point_functional(add(f, g), lambda) - gf - gg), sf + sg);
    out[1] = record("homogeneity", std::abs(point_functional(scale(f, s), lambda) - s * gf),
                    std::abs(s) * sf);
    out[2] = record("multiplicativity", std::abs(point_functional(mul(f, g), lambda) - gf * gg),
                    sf * sg);

    // |f(lambda)| <= sum |a_n||lambda|^n <= sum |a_n| <= ||f||_{p,c} e^{c N^alpha}.
    const double bound = coeff_seminorm(f, sp, opts.c) *
                         std::exp(opts.c * std::pow(static_cast<double>(f.degree()), sp.alpha()));
    EntryRecord cont;
    cont.index = i;
    cont.note = "continuity";
    cont.lhs = std::abs(gf);
    cont.rhs = bound;
    const double chain_slack = opts.rel_tol * std::max(bound, 1e-300);
    cont.ok = cont.lhs <= sf * (1.0 + opts.rel_tol) && sf <= bound + chain_slack;
    cont.margin = bound > 0.0 ? (bound - cont.lhs) / bound : 0.0;
    out[3] = cont;
  });

  for (const auto& quad : results) {
    for (const auto& rec : quad) report.entries.push_back(rec);
  }
  finalize(report);
  return report;
}

VerificationReport hurwitz_closure_suite(DiskPoint lambda, double r, const HurwitzSpec& spec) {
  if (!(r > lambda.modulus() && r < 1.0)) {
    throw std::invalid_argument("hurwitz_closure_suite: need |lambda| < r < 1");
  }
  if (spec.k_max < 2) throw std::invalid_argument("hurwitz_closure_suite: k_max must be >= 2");
  const Complex l = lambda.value();
  const auto factor = TruncatedSeries::linear_factor(l);

  TruncatedSeries g = TruncatedSeries::constant(1.0);
  TruncatedSeries h = TruncatedSeries::monomial(1);
  if (spec.kind == HurwitzSpec::Kind::Constant) {
    h = TruncatedSeries();
  } else if (spec.kind == HurwitzSpec::Kind::RandomPerturbation) {
    auto rng = entry_rng(spec.seed, 0, 2);
    g = random_series(rng, spec.degree, 0.0);
    h = random_series(rng, spec.degree, 0.0);
  }
  // Constant kind: f_k = (z - lambda) z for all k, i.e. g = z, h = 0.
  if (spec.kind == HurwitzSpec::Kind::Constant) g = TruncatedSeries::monomial(1);

  const TruncatedSeries limit = mul(factor, g);
  const double limit_at_lambda = std::abs(eval(limit, l));

  VerificationReport report;
  report.theorem = "hurwitz";
  report.seed = spec.seed;
  report.parameters = {{"lambda_re", l.real()}, {"lambda_im", l.imag()}, {"r", r},
                       {"k_max", static_cast<double>(spec.k_max)},
                       {"kind", static_cast<double>(spec.kind)}};
  report.constants = {{"limit_at_lambda", limit_at_lambda}};

  constexpr double kSlack = 1e-12;
  std::vector<double> distances;
  for (std::size_t k = 1; k <= spec.k_max; ++k) {
    const auto gk = add(g, scale(h, 1.0 / static_cast<double>(k)));
    const auto fk = mul(factor, gk);
    const double dist = max_modulus(sub(fk, limit), r);
    distances.push_back(dist);
    EntryRecord rec;
    rec.index = k;
    rec.lhs = limit_at_lambda;
    rec.rhs = dist;
    rec.margin = dist - limit_at_lambda;
    rec.ok = limit_at_lambda <= dist + kSlack;
    report.entries.push_back(rec);
  }
  if (distances.back() > 0.0 && !(distances.back() < distances.front())) {
    throw std::invalid_argument("hurwitz_closure_suite: sequence does not converge on |z| <= r");
  }
  report.constants["final_distance"] = distances.back();
  finalize(report);
  return report;
}

}  // namespace fpalg
