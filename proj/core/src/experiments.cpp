#include "frobtrace/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "frobtrace/error.hpp"

namespace frobtrace::experiments {
namespace {

std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  if (hi < 2) return out;
  std::vector<bool> composite(hi + 1, false);
  for (std::uint64_t i = 2; i * i <= hi; ++i) {
    if (composite[i]) continue;
    for (std::uint64_t j = i * i; j <= hi; j += i) composite[j] = true;
  }
  for (std::uint64_t i = std::max<std::uint64_t>(lo, 2); i <= hi; ++i) {
    if (!composite[i]) out.push_back(i);
  }
  return out;
}

void require_ladder(const std::vector<std::uint64_t>& ladder, const char* op) {
  if (ladder.empty()) throw PreconditionError(std::string(op) + ": empty ladder");
  if (ladder.front() < 1) throw PreconditionError(std::string(op) + ": ladder entries must be >= 1");
  for (std::size_t i = 1; i < ladder.size(); ++i) {
    if (ladder[i] <= ladder[i - 1]) {
      throw PreconditionError(std::string(op) + ": ladder must be strictly ascending");
    }
  }
}

bool in_interval(double v, double a, double b) { return v >= a && (v < b || (b == 1.0 && v == b)); }

}  // namespace

PrimeSweepReport prime_sweep(const ec::CurveSpec& curve, std::uint64_t x, unsigned threads,
                             const ProgressFn& progress) {
  if (x > kMaxSweepBound) {
    throw ResourceError("prime_sweep: bound X = " + std::to_string(x) + " exceeds 1e6");
  }
  PrimeSweepReport report;
  report.curve_a = curve.a();
  report.curve_b = curve.b();
  report.x = x;

  const std::vector<std::uint64_t> primes = primes_between(5, x);
  report.records.resize(primes.size());
  const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(1, primes.size()));

  std::mutex progress_mutex;
  std::uint64_t done = 0;
  auto run_block = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      PrimeRecord& rec = report.records[i];
      rec.p = primes[i];
      rec.good_reduction = ec::good_reduction(curve, rec.p);
      if (!rec.good_reduction) continue;
      const ec::PointCount pc = ec::count_points(curve, rec.p);
      rec.a1 = pc.trace;
      rec.alpha1 = static_cast<double>(pc.trace) / (2.0 * std::sqrt(static_cast<double>(rec.p)));
      rec.supersingular = ec::is_supersingular_trace(pc.trace, rec.p);
    }
    if (progress) {
      std::lock_guard lock(progress_mutex);
      done += end - begin;
      progress(done, primes.size());
    }
  };

  if (workers == 1) {
    run_block(0, primes.size());
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    const std::size_t chunk = (primes.size() + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t begin = std::min(primes.size(), w * chunk);
      const std::size_t end = std::min(primes.size(), begin + chunk);
      pool.emplace_back([&, w, begin, end] {
        try {
          run_block(begin, end);
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

  report.prime_count = static_cast<std::uint64_t>(
      std::count_if(report.records.begin(), report.records.end(),
                    [](const PrimeRecord& r) { return r.good_reduction; }));
  return report;
}

RealSequence alpha1_sequence(const PrimeSweepReport& report) {
  std::vector<double> values;
  for (const auto& rec : report.records) {
    if (rec.alpha1) values.push_back(std::clamp(*rec.alpha1, -1.0, 1.0));
  }
  return RealSequence(std::move(values), 1, Interval{-1.0, 1.0}, "alpha_1 over primes");
}

SatoTateResult sato_tate_test(const PrimeSweepReport& report, double a, double b,
                              const density::DistributionModel& model, bool exclude_atoms) {
  if (!(a >= -1.0 && a < b && b <= 1.0)) {
    throw PreconditionError("sato_tate_test: need -1 <= a < b <= 1");
  }
  if (report.prime_count == 0) throw PreconditionError("sato_tate_test: report has no good primes");

  const auto atoms = model.atoms();
  auto on_atom = [&](double v) {
    return std::any_of(atoms.begin(), atoms.end(), [&](const auto& atom) { return atom.location == v; });
  };

  std::uint64_t hits = 0;
  for (const auto& rec : report.records) {
    if (!rec.alpha1) continue;
    const double v = *rec.alpha1;
    if (!in_interval(v, a, b)) continue;
    if (exclude_atoms && on_atom(v)) continue;
    ++hits;
  }

  double predicted = density::interval_mass(model, a, b);
  if (exclude_atoms) {
    for (const auto& atom : atoms) {
      if (in_interval(atom.location, a, b)) predicted -= atom.mass;
    }
  }

  SatoTateResult out;
  out.a = a;
  out.b = b;
  out.empirical = static_cast<double>(hits) / static_cast<double>(report.prime_count);
  out.predicted = predicted;
  out.gap = std::abs(out.empirical - out.predicted);
  return out;
}

LangTrotterReport lang_trotter_counts(const PrimeSweepReport& report, std::int64_t r) {
  LangTrotterReport out;
  out.r = r;
  out.x = report.x;
  out.count = static_cast<std::uint64_t>(std::count_if(
      report.records.begin(), report.records.end(),
      [r](const PrimeRecord& rec) { return rec.a1 && *rec.a1 == r; }));
  if (report.x >= 3) {
    const double xd = static_cast<double>(report.x);
    out.ratio = static_cast<double>(out.count) / (std::sqrt(xd) / std::log(xd));
  }
  return out;
}

FixedPrimeReport fixed_prime_distribution(const ec::CurveSpec& curve, std::uint64_t p,
                                          std::size_t n, std::uint32_t bins) {
  if (n == 0) throw PreconditionError("fixed_prime_distribution: N must be >= 1");
  if (n > kMaxFixedPrimeLength) {
    throw ResourceError("fixed_prime_distribution: N exceeds 1e7");
  }
  const ec::PointCount pc = ec::count_points(curve, p);
  const ec::FrobeniusAngle angle(pc.trace, p);
  const RealSequence seq = ec::normalized_trace_sequence(angle, n);

  FixedPrimeReport out;
  out.curve_a = curve.a();
  out.curve_b = curve.b();
  out.p = p;
  out.n = n;
  out.a1 = pc.trace;
  out.supersingular = ec::is_supersingular_trace(pc.trace, p);
  std::uint64_t zeros = 0;
  for (double v : seq.values()) {
    if (v == 1.0) ++out.plus_one_count;
    if (v == -1.0) ++out.minus_one_count;
    if (std::abs(v) < 1e-12) ++zeros;
  }
  // For an ordinary prime theta/pi is irrational, so alpha_n never vanishes.
  out.zero_fraction = out.supersingular ? static_cast<double>(zeros) / static_cast<double>(n) : 0.0;
  out.ks_vs_arcsine = equidist::ks_distance(seq, density::DistributionModel::arcsine());
  out.ks_vs_uniform = equidist::ks_distance(seq, density::DistributionModel::uniform(-1.0, 1.0));
  out.histogram = equidist::histogram(seq, bins, -1.0, 1.0);
  return out;
}

std::vector<SummatoryPoint> summatory_check(const ec::FrobeniusAngle& angle, std::int64_t k,
                                            const std::vector<std::uint64_t>& ladder) {
  if (k == 0) throw PreconditionError("summatory_check: k must be nonzero");
  require_ladder(ladder, "summatory_check");
  if (ladder.back() > ec::kMaxSequenceLength) {
    throw ResourceError("summatory_check: ladder exceeds the sequence ceiling");
  }
  const double limit = density::weyl_limit(k);
  std::vector<SummatoryPoint> out;
  equidist::CompensatedSum re_sum;
  equidist::CompensatedSum im_sum;
  std::size_t next = 0;
  for (std::uint64_t n = 1; n <= ladder.back(); ++n) {
    double re = 0.0;
    double im = 0.0;
    equidist::unit_phase(-k, angle.alpha(n), re, im);
    re_sum.add(re);
    im_sum.add(im);
    if (n == ladder[next]) {
      SummatoryPoint pt;
      pt.x = n;
      pt.sum_real = re_sum.value();
      pt.sum_imag = im_sum.value();
      pt.prediction = limit * static_cast<double>(n);
      pt.relative_gap = std::hypot(pt.sum_real - pt.prediction, pt.sum_imag) / static_cast<double>(n);
      out.push_back(pt);
      ++next;
    }
  }
  return out;
}

SequenceSource unit_alpha_source(const ec::FrobeniusAngle& angle) {
  return [angle](std::size_t n) { return equidist::map_to_unit(ec::normalized_trace_sequence(angle, n)); };
}

SequenceSource golden_rotation_source() {
  return [](std::size_t n) {
    // floor((phi - 1) 2^64); n * this mod 2^64 is frac(n phi) in 64-bit fixed point.
    constexpr std::uint64_t kGoldenTurn = 0x9E3779B97F4A7C15ull;
    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint64_t u = kGoldenTurn * static_cast<std::uint64_t>(i + 1);
      values[i] = std::ldexp(static_cast<double>(u >> 11), -53);
    }
    return RealSequence(std::move(values), 1, Interval{0.0, 1.0}, "frac(n phi)");
  };
}

std::optional<TrendFit> fit_power_law(const std::vector<double>& xs, const std::vector<double>& ys) {
  std::vector<double> lx;
  std::vector<double> ly;
  for (std::size_t i = 0; i < std::min(xs.size(), ys.size()); ++i) {
    if (xs[i] > 0 && ys[i] > 0) {
      lx.push_back(std::log(xs[i]));
      ly.push_back(std::log(ys[i]));
    }
  }
  if (lx.size() < 2) return std::nullopt;
  const double n = static_cast<double>(lx.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  if (sxx == 0) return std::nullopt;
  TrendFit fit;
  fit.exponent = sxy / sxx;
  double ss = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    const double r = ly[i] - (my + fit.exponent * (lx[i] - mx));
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / n);
  return fit;
}

DiscrepancyLadder discrepancy_ladder(const SequenceSource& source,
                                     const std::vector<std::uint64_t>& ladder, std::uint32_t cutoff) {
  require_ladder(ladder, "discrepancy_ladder");
  const RealSequence full = source(ladder.back());
  if (full.size() < ladder.back()) {
    throw PreconditionError("discrepancy_ladder: source certified fewer samples than requested");
  }
  DiscrepancyLadder out;
  std::vector<double> ns;
  std::vector<double> ds;
  for (std::uint64_t n : ladder) {
    out.points.push_back(equidist::discrepancy_report(full.prefix(n), cutoff));
    ns.push_back(static_cast<double>(n));
    ds.push_back(out.points.back().d_star);
  }
  out.trend = fit_power_law(ns, ds);
  return out;
}

}  // namespace frobtrace::experiments
