#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include "frobtrace/densities.hpp"
#include "frobtrace/sequence.hpp"

namespace frobtrace::equidist {

struct WeylSumReport {
  std::int64_t k = 0;
  std::uint64_t n = 0;
  double sum_real = 0.0;  // real part of the mean
  double sum_imag = 0.0;
  double modulus = 0.0;

  bool operator==(const WeylSumReport&) const = default;
};

struct DiscrepancyReport {
  std::uint64_t n = 0;
  double d_star = 0.0;
  double et_bound = 0.0;
  std::uint32_t et_cutoff = 0;

  bool operator==(const DiscrepancyReport&) const = default;
};

struct Histogram {
  std::vector<double> bin_edges;
  std::vector<std::uint64_t> counts;
  std::uint64_t total = 0;     // samples that landed in some bin
  std::uint64_t underflow = 0;
  std::uint64_t overflow = 0;

  bool operator==(const Histogram&) const = default;
};

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

  /// Pairwise combination of two partial sums.
  void merge(const CompensatedSum& other) {
    add(other.sum_);
    add(other.carry_);
  }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

/// u = (t + 1) / 2 elementwise; the sequence must live in [-1, 1].
RealSequence map_to_unit(const RealSequence& seq);

/// Mean of exp(2 pi i k u_n).
WeylSumReport weyl_sum(const RealSequence& seq, std::int64_t k);

/// exp(2 pi i k u) with k u reduced mod 1 before the trig call.
void unit_phase(std::int64_t k, double u, double& re, double& im);

/// Star discrepancy max_i max(i/N - x_(i), x_(i) - (i-1)/N) of samples in [0, 1].
double star_discrepancy(const RealSequence& seq);

/// 5 (1/(H+1) + sum_{k<=H} |mean_k| / k), an upper bound on the discrepancy.
double erdos_turan_bound(const RealSequence& seq, std::uint32_t cutoff);

DiscrepancyReport discrepancy_report(const RealSequence& seq, std::uint32_t cutoff);

/// Kolmogorov-Smirnov distance between the empirical law of `seq` and `model`,
/// exact for ties and for model atoms.
double ks_distance(const RealSequence& seq, const density::DistributionModel& model);

/// Same, against an arbitrary continuous nondecreasing cdf.
double ks_distance(const RealSequence& seq, const std::function<double(double)>& cdf);

/// Left-closed bins, last bin closed; samples outside [lo, hi] go to under/overflow.
Histogram histogram(const RealSequence& seq, std::uint32_t bins, double lo, double hi);

}  // namespace frobtrace::equidist
