#include <doctest.h>

#include <cmath>
#include <numeric>

#include "frobtrace/densities.hpp"
#include "frobtrace/error.hpp"
#include "frobtrace/experiments.hpp"
#include "oracles.hpp"

using namespace frobtrace;
using namespace frobtrace::experiments;

namespace {

const ec::CurveSpec kNonCm(1, 1);
const ec::CurveSpec kCm(-1, 0);

std::size_t good_count(const PrimeSweepReport& r) {
  return static_cast<std::size_t>(
      std::count_if(r.records.begin(), r.records.end(), [](const PrimeRecord& p) { return p.good_reduction; }));
}

}  // namespace

TEST_CASE("prime sweep records") {
  const auto r = prime_sweep(kNonCm, 100);
  REQUIRE(r.records.size() == 23);  // primes 5..97
  CHECK(r.records.front().p == 5);
  CHECK(r.records.back().p == 97);
  CHECK(r.prime_count == 22);
  for (const auto& rec : r.records) {
    if (rec.p == 31) {
      CHECK_FALSE(rec.good_reduction);
      CHECK_FALSE(rec.a1.has_value());
      CHECK_FALSE(rec.alpha1.has_value());
    } else {
      REQUIRE(rec.good_reduction);
      REQUIRE(std::abs(*rec.alpha1) <= 1.0);
      CHECK(static_cast<std::int64_t>(rec.p) + 1 - *rec.a1 ==
            static_cast<std::int64_t>(oracle::naive_point_count(1, 1, rec.p)));
    }
    if (rec.p == 13) CHECK(*rec.a1 == -4);
  }
  CHECK(prime_sweep(kNonCm, 4).records.empty());
  CHECK(prime_sweep(kNonCm, 4).prime_count == 0);
}

TEST_CASE("prime sweep is independent of the thread count") {
  const auto one = prime_sweep(kNonCm, 5000, 1);
  for (unsigned t : {2u, 3u, 8u}) CHECK(prime_sweep(kNonCm, 5000, t) == one);
  std::uint64_t last = 0;
  const auto progressed = prime_sweep(kNonCm, 5000, 4, [&](std::uint64_t done, std::uint64_t total) {
    CHECK(done <= total);
    last = done;
  });
  CHECK(progressed == one);
  CHECK(last == one.records.size());
  CHECK_THROWS_AS(prime_sweep(kNonCm, 2'000'000), ResourceError);
}

TEST_CASE("CM curve splits supersingular primes in half") {
  const auto r = prime_sweep(kCm, 10000);
  const auto ss = std::count_if(r.records.begin(), r.records.end(),
                                [](const PrimeRecord& p) { return p.good_reduction && p.supersingular; });
  CHECK(std::abs(static_cast<double>(ss) / static_cast<double>(r.prime_count) - 0.5) < 0.05);
  // p = 3 mod 4 is exactly the supersingular class for this curve.
  for (const auto& rec : r.records) REQUIRE(rec.supersingular == (rec.p % 4 == 3));
}

TEST_CASE("Sato-Tate interval tests") {
  const auto r = prime_sweep(kNonCm, 10000);
  const auto semi = density::DistributionModel::semicircle();
  const auto full = sato_tate_test(r, -1, 1, semi);
  CHECK(full.empirical == 1.0);
  CHECK(full.predicted == doctest::Approx(1.0).epsilon(1e-15));

  const auto half = sato_tate_test(r, 0, 1, semi);
  CHECK(half.predicted == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(std::abs(half.empirical - 0.5) < 0.1);

  // Disjoint intervals partition the sample.
  double total = 0;
  for (int i = 0; i < 8; ++i) total += sato_tate_test(r, -1 + i * 0.25, -0.75 + i * 0.25, semi).empirical;
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(sato_tate_test(PrimeSweepReport{}, -1, 1, semi), PreconditionError);
}

TEST_CASE("CM curve against the Hecke mixture") {
  const auto r = prime_sweep(kCm, 10000);
  const auto cm = density::DistributionModel::cm_mixture();
  const auto cont = sato_tate_test(r, -1, 1, cm, true);
  CHECK(std::abs(cont.empirical - 0.5) < 0.05);
  CHECK(cont.predicted == doctest::Approx(0.5));
  const auto with_atom = sato_tate_test(r, -1e-9, 1e-9, cm);
  CHECK(with_atom.predicted == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(std::abs(with_atom.empirical - 0.5) < 0.05);
}

TEST_CASE("Lang-Trotter counts") {
  const auto r = prime_sweep(kNonCm, 10000);
  CHECK(lang_trotter_counts(r, 201).count == 0);
  const auto one = lang_trotter_counts(r, 1);
  CHECK(one.count > 0);
  CHECK(one.ratio > 0);
  CHECK(one.ratio < 10);

  std::uint64_t sum = 0;
  for (std::int64_t t = -200; t <= 200; ++t) sum += lang_trotter_counts(r, t).count;
  CHECK(sum == r.prime_count);

  const auto small = prime_sweep(kNonCm, 2000);
  for (std::int64_t t : {-3, 0, 1, 2}) CHECK(lang_trotter_counts(small, t).count <= lang_trotter_counts(r, t).count);

  const auto cm = prime_sweep(kCm, 10000);
  const double zero = static_cast<double>(lang_trotter_counts(cm, 0).count);
  CHECK(std::abs(zero / static_cast<double>(cm.prime_count) - 0.5) < 0.05);
}

TEST_CASE("fixed-prime distribution") {
  const auto ord = fixed_prime_distribution(kNonCm, 13, 1000000);
  CHECK(ord.a1 == -4);
  CHECK(ord.zero_fraction == 0.0);
  CHECK(ord.ks_vs_arcsine < 0.01);
  CHECK(std::abs(ord.ks_vs_uniform - 0.10525683117650934) < 0.01);
  CHECK(ord.histogram.total == 1000000);

  const auto ss = fixed_prime_distribution(ec::CurveSpec(0, 1), 5, 10000);
  CHECK(ss.supersingular);
  CHECK(ss.zero_fraction == 0.5);
  CHECK(ss.plus_one_count == 2500);
  CHECK(ss.minus_one_count == 2500);

  const auto odd = fixed_prime_distribution(ec::CurveSpec(0, 1), 5, 10001);
  CHECK(odd.plus_one_count + odd.minus_one_count == 5000);

  const auto single = fixed_prime_distribution(kNonCm, 13, 1);
  const double f = density::cdf(density::DistributionModel::arcsine(), -2 / std::sqrt(13.0));
  CHECK(single.ks_vs_arcsine == doctest::Approx(std::max(f, 1 - f)).epsilon(1e-12));

  CHECK_THROWS_AS(fixed_prime_distribution(kNonCm, 31, 10), PreconditionError);
  CHECK_THROWS_AS(fixed_prime_distribution(kNonCm, 13, 20'000'000), ResourceError);
}

TEST_CASE("summatory check") {
  const ec::FrobeniusAngle angle(4, 13);
  const auto pts = summatory_check(angle, 1, {1000, 10000, 100000, 1000000});
  REQUIRE(pts.size() == 4);
  CHECK(pts.back().relative_gap < 0.02);
  CHECK(pts.back().relative_gap < pts.front().relative_gap);
  for (const auto& pt : pts) CHECK(std::hypot(pt.sum_real, pt.sum_imag) <= static_cast<double>(pt.x));

  const auto two = summatory_check(angle, 2, {1000000});
  CHECK(two[0].prediction > 0.0);
  CHECK(two[0].relative_gap < 0.02);

  const auto first = summatory_check(angle, 1, {1});
  CHECK(first[0].relative_gap <= 1 + std::abs(density::weyl_limit(1)));
  CHECK_THROWS_AS(summatory_check(angle, 0, {10}), PreconditionError);
  CHECK_THROWS_AS(summatory_check(angle, 1, {100, 10}), PreconditionError);
}

TEST_CASE("discrepancy ladders") {
  const auto gold = discrepancy_ladder(golden_rotation_source(), {100, 1000, 10000, 100000}, 10);
  REQUIRE(gold.trend.has_value());
  CHECK(gold.trend->exponent < -0.8);

  const auto alpha = discrepancy_ladder(unit_alpha_source(ec::FrobeniusAngle(4, 13)), {1000, 10000, 100000}, 10);
  REQUIRE(alpha.trend.has_value());
  CHECK(std::abs(alpha.trend->exponent) < 0.1);
  for (const auto& pt : alpha.points) {
    CHECK(std::abs(pt.d_star - 0.10525683117650934) < 0.015);
    CHECK(pt.et_bound >= pt.d_star);
  }

  const auto single = discrepancy_ladder(golden_rotation_source(), {1}, 1);
  const double x1 = golden_rotation_source()(1)[0];
  CHECK(single.points[0].d_star == doctest::Approx(std::max(x1, 1 - x1)).epsilon(1e-15));
  CHECK_FALSE(single.trend.has_value());
}

TEST_CASE("power-law fit") {
  const auto fit = fit_power_law({10, 100, 1000}, {1, 0.1, 0.01});
  REQUIRE(fit.has_value());
  CHECK(fit->exponent == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(fit->residual < 1e-12);
  CHECK_FALSE(fit_power_law({10}, {1}).has_value());
}
