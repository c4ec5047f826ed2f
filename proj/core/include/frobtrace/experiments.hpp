#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "frobtrace/densities.hpp"
#include "frobtrace/ec_core.hpp"
#include "frobtrace/equidist.hpp"

namespace frobtrace::experiments {

inline constexpr std::uint64_t kMaxSweepBound = 1'000'000;
inline constexpr std::size_t kMaxFixedPrimeLength = 10'000'000;

struct PrimeRecord {
  std::uint64_t p = 0;
  bool good_reduction = false;
  std::optional<std::int64_t> a1;     // absent at bad primes
  std::optional<double> alpha1;       // a1 / (2 sqrt p)
  bool supersingular = false;

  bool operator==(const PrimeRecord&) const = default;
};

struct PrimeSweepReport {
  std::int64_t curve_a = 0;
  std::int64_t curve_b = 0;
  std::uint64_t x = 0;
  std::vector<PrimeRecord> records;  // every prime 5 <= p <= x, ascending
  std::uint64_t prime_count = 0;     // good primes only

  bool operator==(const PrimeSweepReport&) const = default;
};

using ProgressFn = std::function<void(std::uint64_t done, std::uint64_t total)>;

/// Traces of every good prime 5 <= p <= x. Work is split across `threads`
/// contiguous blocks and merged in prime order, so output does not depend on
/// the thread count.
PrimeSweepReport prime_sweep(const ec::CurveSpec& curve, std::uint64_t x, unsigned threads = 1,
                             const ProgressFn& progress = {});

/// Normalized traces alpha_1 of the good primes, as a sequence on [-1, 1].
RealSequence alpha1_sequence(const PrimeSweepReport& report);

struct SatoTateResult {
  double a = 0.0;
  double b = 0.0;
  double empirical = 0.0;
  double predicted = 0.0;
  double gap = 0.0;

  bool operator==(const SatoTateResult&) const = default;
};

/// Fraction of good primes with alpha_1 in [a, b) (closed at b = 1) against
/// the model's mass there. With `exclude_atoms`, samples sitting on a model
/// atom are dropped from the numerator and the atom mass from the prediction,
/// leaving the continuous part.
SatoTateResult sato_tate_test(const PrimeSweepReport& report, double a, double b,
                              const density::DistributionModel& model, bool exclude_atoms = false);

struct LangTrotterReport {
  std::int64_t r = 0;
  std::uint64_t x = 0;
  std::uint64_t count = 0;
  double ratio = 0.0;  // count / (sqrt x / log x)

  bool operator==(const LangTrotterReport&) const = default;
};

LangTrotterReport lang_trotter_counts(const PrimeSweepReport& report, std::int64_t r);

struct FixedPrimeReport {
  std::int64_t curve_a = 0;
  std::int64_t curve_b = 0;
  std::uint64_t p = 0;
  std::uint64_t n = 0;
  std::int64_t a1 = 0;
  bool supersingular = false;
  double zero_fraction = 0.0;
  std::uint64_t plus_one_count = 0;
  std::uint64_t minus_one_count = 0;
  double ks_vs_arcsine = 0.0;
  double ks_vs_uniform = 0.0;
  equidist::Histogram histogram;

  bool operator==(const FixedPrimeReport&) const = default;
};

FixedPrimeReport fixed_prime_distribution(const ec::CurveSpec& curve, std::uint64_t p,
                                          std::size_t n, std::uint32_t bins = 100);

struct SummatoryPoint {
  std::uint64_t x = 0;
  double sum_real = 0.0;
  double sum_imag = 0.0;
  double prediction = 0.0;
  double relative_gap = 0.0;

  bool operator==(const SummatoryPoint&) const = default;
};

/// Partial sums of exp(-2 pi i k cos(n theta)) at each ladder point against
/// J_0(2 pi k) x.
std::vector<SummatoryPoint> summatory_check(const ec::FrobeniusAngle& angle, std::int64_t k,
                                            const std::vector<std::uint64_t>& ladder);

using SequenceSource = std::function<RealSequence(std::size_t n)>;

/// Unit-mapped alpha_n for a fixed angle.
SequenceSource unit_alpha_source(const ec::FrobeniusAngle& angle);
/// frac(n phi), phi the golden ratio.
SequenceSource golden_rotation_source();

struct TrendFit {
  double exponent = 0.0;  // slope of log D vs log N
  double residual = 0.0;  // RMS of the fit residuals
};

struct DiscrepancyLadder {
  std::vector<equidist::DiscrepancyReport> points;
  std::optional<TrendFit> trend;  // needs two or more points with D > 0
};

/// Least-squares slope of log y against log x.
std::optional<TrendFit> fit_power_law(const std::vector<double>& xs, const std::vector<double>& ys);

DiscrepancyLadder discrepancy_ladder(const SequenceSource& source,
                                     const std::vector<std::uint64_t>& ladder, std::uint32_t cutoff);

}  // namespace frobtrace::experiments
