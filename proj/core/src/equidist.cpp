#include "frobtrace/equidist.hpp"

#include <algorithm>
#include <numbers>
#include <string>

#include "frobtrace/error.hpp"

namespace frobtrace::equidist {
namespace {

constexpr std::size_t kMaxDiscrepancySamples = 100'000'000;

void require_nonempty(const RealSequence& seq, const char* op) {
  if (seq.empty()) throw PreconditionError(std::string(op) + ": empty sequence");
}

void require_unit(const RealSequence& seq, const char* op) {
  for (double v : seq.values()) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw PreconditionError(std::string(op) + ": sample outside [0, 1]");
    }
  }
}

std::vector<double> sorted_copy(const RealSequence& seq) {
  std::vector<double> xs(seq.values().begin(), seq.values().end());
  std::stable_sort(xs.begin(), xs.end());
  return xs;
}

// sup_t |F_N(t) - F(t)| over right and left limits at every sample and every
// extra breakpoint. `cdf` is P(X <= t), `cdf_left` is P(X < t).
template <typename Cdf, typename CdfLeft>
double sup_distance(std::vector<double> xs, const std::vector<double>& extra, Cdf cdf,
                    CdfLeft cdf_left) {
  std::stable_sort(xs.begin(), xs.end());
  const double n = static_cast<double>(xs.size());
  double worst = 0.0;
  auto probe = [&](double t) {
    const auto below = std::lower_bound(xs.begin(), xs.end(), t) - xs.begin();
    const auto at_or_below = std::upper_bound(xs.begin(), xs.end(), t) - xs.begin();
    worst = std::max(worst, std::abs(static_cast<double>(at_or_below) / n - cdf(t)));
    worst = std::max(worst, std::abs(static_cast<double>(below) / n - cdf_left(t)));
  };
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0 && xs[i] == xs[i - 1]) continue;
    probe(xs[i]);
  }
  for (double t : extra) probe(t);
  return worst;
}

}  // namespace

RealSequence map_to_unit(const RealSequence& seq) {
  require_nonempty(seq, "map_to_unit");
  if (!Interval{-1.0, 1.0}.contains(seq.range())) {
    throw PreconditionError("map_to_unit: sequence range must lie in [-1, 1]");
  }
  std::vector<double> out;
  out.reserve(seq.size());
  for (double t : seq.values()) out.push_back((t + 1.0) * 0.5);
  return RealSequence(std::move(out), seq.start_index(), Interval{0.0, 1.0},
                      seq.source_tag() + " unit");
}

void unit_phase(std::int64_t k, double u, double& re, double& im) {
  const double kd = static_cast<double>(k);
  const double product = kd * u;
  const double low = std::fma(kd, u, -product);  // exact rounding error of k*u
  const double frac = (product - std::nearbyint(product)) + low;
  const double angle = 2.0 * std::numbers::pi * frac;
  re = std::cos(angle);
  im = std::sin(angle);
}

WeylSumReport weyl_sum(const RealSequence& seq, std::int64_t k) {
  if (k == 0) throw PreconditionError("weyl_sum: k = 0 is a degenerate frequency");
  require_nonempty(seq, "weyl_sum");
  CompensatedSum re_sum;
  CompensatedSum im_sum;
  for (double u : seq.values()) {
    double re = 0.0;
    double im = 0.0;
    unit_phase(k, u, re, im);
    re_sum.add(re);
    im_sum.add(im);
  }
  WeylSumReport out;
  out.k = k;
  out.n = seq.size();
  const double n = static_cast<double>(seq.size());
  out.sum_real = re_sum.value() / n;
  out.sum_imag = im_sum.value() / n;
  out.modulus = std::min(1.0, std::hypot(out.sum_real, out.sum_imag));
  return out;
}

double star_discrepancy(const RealSequence& seq) {
  require_nonempty(seq, "star_discrepancy");
  if (seq.size() > kMaxDiscrepancySamples) {
    throw ResourceError("star_discrepancy: more than 1e8 samples");
  }
  require_unit(seq, "star_discrepancy");
  const std::vector<double> xs = sorted_copy(seq);
  const double n = static_cast<double>(xs.size());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double rank = static_cast<double>(i + 1);
    d = std::max({d, rank / n - xs[i], xs[i] - (rank - 1.0) / n});
  }
  return std::min(d, 1.0);
}

double erdos_turan_bound(const RealSequence& seq, std::uint32_t cutoff) {
  if (cutoff < 1) throw PreconditionError("erdos_turan_bound: cutoff H must be >= 1");
  require_nonempty(seq, "erdos_turan_bound");
  require_unit(seq, "erdos_turan_bound");
  double weighted = 0.0;
  for (std::uint32_t k = 1; k <= cutoff; ++k) {
    weighted += weyl_sum(seq, k).modulus / static_cast<double>(k);
  }
  return 5.0 * (1.0 / (static_cast<double>(cutoff) + 1.0) + weighted);
}

DiscrepancyReport discrepancy_report(const RealSequence& seq, std::uint32_t cutoff) {
  DiscrepancyReport out;
  out.n = seq.size();
  out.d_star = star_discrepancy(seq);
  out.et_bound = erdos_turan_bound(seq, cutoff);
  out.et_cutoff = cutoff;
  return out;
}

double ks_distance(const RealSequence& seq, const density::DistributionModel& model) {
  require_nonempty(seq, "ks_distance");
  for (double v : seq.values()) {
    if (!model.domain().contains(v)) {
      throw PreconditionError("ks_distance: sample outside the domain of model " + model.name());
    }
  }
  std::vector<double> extra;
  for (const auto& atom : model.atoms()) extra.push_back(atom.location);
  return sup_distance(
      std::vector<double>(seq.values().begin(), seq.values().end()), extra,
      [&](double t) { return density::cdf(model, t); },
      [&](double t) { return density::cdf_left(model, t); });
}

double ks_distance(const RealSequence& seq, const std::function<double(double)>& cdf) {
  require_nonempty(seq, "ks_distance");
  return sup_distance(std::vector<double>(seq.values().begin(), seq.values().end()), {}, cdf, cdf);
}

Histogram histogram(const RealSequence& seq, std::uint32_t bins, double lo, double hi) {
  if (bins < 1) throw PreconditionError("histogram: need at least one bin");
  if (!(lo < hi)) throw PreconditionError("histogram: need lo < hi");
  Histogram h;
  h.bin_edges.resize(bins + 1);
  for (std::uint32_t j = 0; j <= bins; ++j) {
    h.bin_edges[j] = lo + (hi - lo) * static_cast<double>(j) / static_cast<double>(bins);
  }
  h.bin_edges.back() = hi;
  h.counts.assign(bins, 0);
  const double width = hi - lo;
  for (double x : seq.values()) {
    if (x < lo) {
      ++h.underflow;
      continue;
    }
    if (x > hi) {
      ++h.overflow;
      continue;
    }
    auto idx = static_cast<std::int64_t>((x - lo) / width * bins);
    idx = std::clamp<std::int64_t>(idx, 0, bins - 1);
    while (idx > 0 && x < h.bin_edges[idx]) --idx;
    while (idx + 1 < static_cast<std::int64_t>(bins) && x >= h.bin_edges[idx + 1]) ++idx;
    ++h.counts[idx];
    ++h.total;
  }
  return h;
}

}  // namespace frobtrace::equidist
