// Acceptance gate: one PASS/FAIL line per criterion. Exit status is nonzero if
// any criterion fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "cli.hpp"
#include "frobtrace/densities.hpp"
#include "frobtrace/ec_core.hpp"
#include "frobtrace/equidist.hpp"
#include "frobtrace/experiments.hpp"
#include "frobtrace/polyroots.hpp"
#include "oracles.hpp"

using namespace frobtrace;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  const char* id;
  const char* title;
  double limit_seconds;
  std::function<Outcome()> check;
};

// sup_t |asin(t)/pi - t/2| by golden-section search on [0, 1].
double arcsine_uniform_gap() {
  auto g = [](double t) { return std::asin(t) / std::numbers::pi - t / 2; };
  double a = 0.0, b = 1.0;
  const double r = (std::sqrt(5.0) - 1) / 2;
  for (int i = 0; i < 200; ++i) {
    const double c = b - r * (b - a), d = a + r * (b - a);
    if (std::abs(g(c)) > std::abs(g(d))) {
      b = d;
    } else {
      a = c;
    }
  }
  return std::abs(g((a + b) / 2));
}

Outcome point_count_fixture() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto pc = ec::count_points(ec::CurveSpec(1, 1), 13);
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  const std::string printed = "0.9827937232473290679857106110146660144";
  const std::string theta = ec::FrobeniusAngle(4, 13).theta_string(45);
  std::size_t agree = 0;
  while (agree < printed.size() && agree < theta.size() && printed[agree] == theta[agree]) ++agree;
  const std::size_t significant = agree > 2 ? agree - 2 : 0;
  const bool ok = pc.count == 18 && pc.trace == -4 && pc.character_sum == 4 && ms < 1.0 && significant >= 30;
  return {ok, fmt::format("#E={} a1={} char_sum={} count_time={:.3f}ms theta={} agreeing_digits={}", pc.count,
                          pc.trace, pc.character_sum, ms, theta.substr(0, 42), significant)};
}

Outcome exact_float_coherence() {
  const ec::FrobeniusAngle angle(-4, 13);
  const auto seq = ec::normalized_trace_sequence(angle, 40);
  double worst = 0;
  for (std::uint64_t n = 1; n <= 40; ++n) {
    const double exact = ec::normalized_trace_exact(-4, 13, n).convert_to<double>();
    worst = std::max(worst, std::abs(exact - seq[n - 1]));
  }
  return {worst < 1e-9, fmt::format("max |a_n/(2p^(n/2)) - cos(n theta)| = {:.3e}", worst)};
}

const RealSequence& f13_million() {
  static const RealSequence seq = ec::normalized_trace_sequence(ec::FrobeniusAngle(-4, 13), 1000000);
  return seq;
}

Outcome weyl_limit_k1() {
  const double oracle_value = density::bessel_j0_series(2 * std::numbers::pi);
  const auto rep = equidist::weyl_sum(f13_million(), 1);
  const double gap = std::abs(rep.sum_real - oracle_value);
  return {gap < 0.02, fmt::format("mean={:.7f} J0(2pi)={:.7f} gap={:.2e}", rep.sum_real, oracle_value, gap)};
}

Outcome weyl_limit_k2() {
  const double oracle_value = density::bessel_j0_series(4 * std::numbers::pi);
  const auto rep = equidist::weyl_sum(f13_million(), 2);
  const double gap = std::abs(rep.sum_real - oracle_value);
  const bool negative = rep.sum_real < 0;
  return {negative && gap < 0.02,
          fmt::format("mean={:.7f} J0(4pi)={:.7f} gap={:.2e} negative={}", rep.sum_real, oracle_value, gap,
                      negative ? "yes" : "no")};
}

Outcome dense_not_equidistributed() {
  const auto seq = f13_million().prefix(100000);
  const double gap = arcsine_uniform_gap();
  const double ks_arc = equidist::ks_distance(seq, density::DistributionModel::arcsine());
  const double ks_uni = equidist::ks_distance(seq, density::DistributionModel::uniform(-1, 1));
  return {ks_arc < 0.01 && std::abs(ks_uni - gap) <= 0.01,
          fmt::format("ks_arcsine={:.5f} ks_uniform={:.5f} extremal_gap={:.5f}", ks_arc, ks_uni, gap)};
}

Outcome discrepancy_ladder() {
  const double gap = arcsine_uniform_gap();
  const std::vector<std::uint64_t> ladder{1000, 10000, 100000};
  const auto alpha = experiments::discrepancy_ladder(experiments::unit_alpha_source(ec::FrobeniusAngle(-4, 13)),
                                                     ladder, 10);
  const auto gold = experiments::discrepancy_ladder(experiments::golden_rotation_source(), ladder, 10);
  bool ok = alpha.trend && gold.trend;
  std::string d;
  for (const auto* lad : {&alpha, &gold}) {
    for (const auto& pt : lad->points) ok = ok && pt.et_bound >= pt.d_star;
  }
  for (const auto& pt : alpha.points) {
    ok = ok && std::abs(pt.d_star - gap) <= 0.015;
    d += fmt::format("D*({})={:.5f} ", pt.n, pt.d_star);
  }
  if (ok) ok = std::abs(alpha.trend->exponent) < 0.1 && gold.trend->exponent < -0.8;
  return {ok, d + fmt::format("alpha_trend={:.4f} golden_trend={:.4f}", alpha.trend ? alpha.trend->exponent : NAN,
                              gold.trend ? gold.trend->exponent : NAN)};
}

Outcome hecke_split() {
  const auto r = experiments::prime_sweep(ec::CurveSpec(-1, 0), 10000);
  std::uint64_t ss = 0;
  for (const auto& rec : r.records) ss += rec.good_reduction && rec.supersingular;
  const double frac = static_cast<double>(ss) / static_cast<double>(r.prime_count);
  return {std::abs(frac - 0.5) <= 0.05, fmt::format("supersingular {}/{} = {:.5f}", ss, r.prime_count, frac)};
}

Outcome sato_tate_shape() {
  const auto r = experiments::prime_sweep(ec::CurveSpec(1, 1), 10000);
  const double ks = equidist::ks_distance(experiments::alpha1_sequence(r), density::DistributionModel::semicircle());
  return {ks < 0.1, fmt::format("primes={} ks_semicircle={:.5f}", r.prime_count, ks)};
}

Outcome fixed_prime_pattern() {
  const auto rep = experiments::fixed_prime_distribution(ec::CurveSpec(0, 1), 5, 10000);
  const auto seq = ec::normalized_trace_sequence(ec::FrobeniusAngle(rep.a1, 5), 10000);
  bool only_atoms = true;
  for (double v : seq.values()) only_atoms = only_atoms && (v == 0.0 || v == 1.0 || v == -1.0);
  const auto diff = static_cast<std::int64_t>(rep.plus_one_count) - static_cast<std::int64_t>(rep.minus_one_count);
  const bool ok = rep.zero_fraction == 0.5 && only_atoms && std::abs(diff) <= 1 &&
                  rep.plus_one_count + rep.minus_one_count == 5000;
  return {ok, fmt::format("zero_fraction={} +1={} -1={} values_in_{{0,+1,-1}}={}", rep.zero_fraction,
                          rep.plus_one_count, rep.minus_one_count, only_atoms ? "yes" : "no")};
}

Outcome salem_suite() {
  const auto salem = poly::IntPolynomial::from_descending({1, -1, -1, -1, 1});
  const double tau_oracle =
      oracle::bisect([](double x) { return (((x - 1) * x - 1) * x - 1) * x + 1; }, 1.7, 1.8);
  const auto v = poly::salem_classify(salem);
  auto rejected = [](const poly::SalemVerdict& verdict) {
    if (verdict.is_salem) return false;
    for (auto r : verdict.reasons) {
      if (r == poly::SalemReason::no_real_root_gt_1 || r == poly::SalemReason::conjugate_outside_disk) return true;
    }
    return false;
  };
  const bool phi5 = rejected(poly::salem_classify(poly::shift_constant(poly::cyclotomic(5), -3)));
  const bool phi13 = rejected(poly::salem_classify(poly::shift_constant(poly::cyclotomic(13), -3)));
  const auto mod1 = poly::power_mod1_sequence(salem, 10000);
  const double ks = equidist::ks_distance(mod1.sequence, density::DistributionModel::uniform(0, 1));
  const auto hist = equidist::histogram(mod1.sequence, 20, 0.0, 1.0);
  std::uint64_t min_bin = hist.counts.front();
  for (auto c : hist.counts) min_bin = std::min(min_bin, c);
  const bool ok = v.is_salem && v.tau && std::abs(*v.tau - tau_oracle) <= 1e-4 && phi5 && phi13 &&
                  mod1.certified_length == 10000 && ks > 0.02 && min_bin > 0;
  return {ok, fmt::format("tau={:.6f} (bisection {:.6f}) phi5-3 rejected={} phi13-3 rejected={} ks_uniform={:.4f} "
                          "min_bin={}",
                          v.tau.value_or(NAN), tau_oracle, phi5, phi13, ks, min_bin)};
}

Outcome newton_identities() {
  auto rng = oracle::seeded(1000);
  int compared = 0;
  int mismatched = 0;
  for (int t = 0; t < 25; ++t) {
    const auto d = oracle::uniform_int(rng, 1, 8);
    std::vector<poly::BigInt> c;
    for (int i = 0; i < d; ++i) c.emplace_back(oracle::uniform_int(rng, -5, 5));
    c.emplace_back(1);
    const poly::IntPolynomial p(c);
    const auto exact = poly::newton_power_sums(p, 30);
    const auto roots = poly::find_roots_extended(p);
    long double max_mod = 1;
    for (const auto& z : roots) max_mod = std::max(max_mod, std::abs(z));
    for (int n = 1; n <= 30; ++n) {
      const long double bound = 1e-12L * n * p.degree() * std::pow(max_mod, n);
      if (bound >= 0.5L) break;
      std::complex<long double> sum = 0;
      for (const auto& z : roots) sum += std::pow(z, n);
      ++compared;
      mismatched += exact[static_cast<std::size_t>(n)] != poly::BigInt(static_cast<long long>(std::llround(sum.real())));
    }
  }
  return {mismatched == 0 && compared > 0, fmt::format("compared={} mismatched={}", compared, mismatched)};
}

Outcome bessel_identity() {
  double worst = 0;
  for (double z : {0.5, 1.0, 2 * std::numbers::pi, 10.0}) {
    worst = std::max(worst, std::abs(density::bessel_j0_series(z) - oracle::j0_quadrature(z, 10000)));
  }
  return {worst < 1e-8, fmt::format("max |series - quadrature| = {:.3e}", worst)};
}

Outcome fd_limit() {
  double worst = 0;
  for (double z : {0.0, 0.5, -0.5, 0.99, -0.99}) {
    worst = std::max(worst, std::abs(density::gen_arcsine_limit_check(1000, z) - 0.5));
  }
  return {worst < 1e-3, fmt::format("max |f_1000(z) - 1/2| = {:.3e}", worst)};
}

Outcome determinism() {
  const std::vector<std::vector<std::string>> runs{
      {"trace-seq", "--curve", "1,1", "-p", "13", "-N", "2000"},
      {"trace-seq", "--curve", "1,1", "-p", "13", "-N", "200", "--format", "json"},
      {"point-count", "--curve", "1,1", "-p", "13"},
      {"angle", "--curve", "1,1", "-p", "13"},
      {"weyl", "--curve", "1,1", "-p", "13", "-N", "100000", "-k", "1"},
      {"summatory", "--curve", "1,1", "-p", "13", "-k", "2", "--ladder", "10,1000,100000"},
      {"discrepancy", "--curve", "1,1", "-p", "13", "--ladder", "1000,10000"},
      {"discrepancy", "--source", "golden", "--ladder", "1000,10000", "--format", "json"},
      {"ks", "--curve", "1,1", "-p", "13", "-N", "10000"},
      {"ks", "--source", "sweep", "--curve", "1,1", "-X", "5000", "--model", "semicircle"},
      {"histogram", "--curve", "1,1", "-p", "13", "-N", "10000", "--bins", "50"},
      {"histogram", "--curve", "1,1", "-p", "13", "-N", "10000", "--format", "svg", "--overlay", "arcsine"},
      {"density", "--model", "gen-arcsine", "--d", "12", "--format", "csv"},
      {"density", "--model", "semicircle", "--what", "cdf", "--format", "json"},
      {"salem", "--poly", "1,-1,-1,-1,1", "-N", "1000"},
      {"salem", "--poly", "1,-1,-1,-1,1", "-N", "1000", "--format", "csv"},
      {"power-sums", "--cyclotomic", "13", "--shift", "-3", "-N", "30"},
      {"sweep", "--curve", "1,1", "-X", "10000"},
      {"sweep", "--curve", "-1,0", "-X", "3000", "--format", "json"},
      {"sato-tate", "--curve", "1,1", "-X", "10000", "--a", "0", "--b", "1"},
      {"sato-tate", "--curve", "-1,0", "-X", "5000", "--model", "cm-mixture", "--exclude-atoms"},
      {"lang-trotter", "--curve", "1,1", "-X", "10000"},
      {"lang-trotter", "--curve", "1,1", "-X", "10000", "-r", "1", "--format", "json"},
      {"fixed-prime", "--curve", "0,1", "-p", "5", "-N", "10000"},
  };
  int identical = 0;
  std::string first_failure;
  for (const auto& args : runs) {
    std::vector<std::string> outputs;
    for (const char* threads : {"1", "1", "8", "8"}) {
      std::vector<std::string> full{"--threads", threads};
      full.insert(full.end(), args.begin(), args.end());
      std::ostringstream out, err;
      const int code = cli::run(full, out, err);
      outputs.push_back(code == 0 ? out.str() : "exit " + std::to_string(code) + ": " + err.str());
    }
    const bool same = outputs[0].rfind("exit ", 0) != 0 && outputs[0] == outputs[1] && outputs[0] == outputs[2] &&
                      outputs[0] == outputs[3];
    if (same) {
      ++identical;
    } else if (first_failure.empty()) {
      first_failure = " first_mismatch=" + args.front();
    }
  }
  return {identical == static_cast<int>(runs.size()),
          fmt::format("{}/{} invocations byte-identical across 4 runs{}", identical, runs.size(), first_failure)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC01", "point-count fixture and angle digits", 1.0, point_count_fixture},
      {"AC02", "exact/float coherence n <= 40", 1.0, exact_float_coherence},
      {"AC03a", "Weyl limit k=1 vs J0(2pi)", 10.0, weyl_limit_k1},
      {"AC03b", "Weyl limit k=2 negative and near J0(4pi)", 10.0, weyl_limit_k2},
      {"AC04", "dense but not equidistributed", 5.0, dense_not_equidistributed},
      {"AC05", "discrepancy ladder plateau and golden control", 30.0, discrepancy_ladder},
      {"AC06", "Hecke CM supersingular split", 60.0, hecke_split},
      {"AC07", "Sato-Tate shape", 60.0, sato_tate_shape},
      {"AC08", "fixed-prime supersingular pattern", 1.0, fixed_prime_pattern},
      {"AC09", "Salem suite", 5.0, salem_suite},
      {"AC10", "Newton identities", 5.0, newton_identities},
      {"AC11", "Bessel integral identity", 1.0, bessel_identity},
      {"AC12", "f_d limit", 0.001, fd_limit},
      {"AC13", "CLI determinism across thread counts", 60.0, determinism},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < c.limit_seconds;
    const bool pass = o.pass && in_time;
    failures += !pass;
    std::cout << fmt::format("{} {:<6} {} | {} | {:.4f}s (limit {}s){}\n", pass ? "PASS" : "FAIL", c.id, c.title,
                             o.detail, secs, c.limit_seconds, in_time ? "" : " TIME EXCEEDED");
  }
  std::cout << fmt::format("{} of {} criteria passed\n", criteria.size() - static_cast<std::size_t>(failures),
                           criteria.size());
  return failures == 0 ? 0 : 1;
}
