#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "frobtrace/sequence.hpp"

namespace frobtrace::density {

enum class ModelKind { uniform, arcsine, gen_arcsine, semicircle, cm_mixture };

/// A point mass carried by a model's distribution.
struct Atom {
  double location;
  double mass;
};

/// Reference law on a closed interval.
///
/// gen_arcsine(d) has density
///   f_d(z) = 1 / (2c asin(1/c)) / sqrt(1 - (z/c)^2),  c = d - 1,
/// on [-1, 1], which integrates to exactly 1 there. cm_mixture is half an
/// arcsine law plus an atom of mass 1/2 at 0.
class DistributionModel {
 public:
  static DistributionModel uniform(double lo, double hi);
  static DistributionModel arcsine();
  static DistributionModel gen_arcsine(int d);
  static DistributionModel semicircle();
  static DistributionModel cm_mixture();

  ModelKind kind() const { return kind_; }
  const Interval& domain() const { return domain_; }
  /// Degree parameter of gen_arcsine; 0 otherwise.
  int degree() const { return degree_; }
  std::string name() const;
  std::vector<Atom> atoms() const;

  bool operator==(const DistributionModel&) const = default;

 private:
  DistributionModel(ModelKind kind, Interval domain, int degree)
      : kind_(kind), domain_(domain), degree_(degree) {}

  ModelKind kind_;
  Interval domain_;
  int degree_ = 0;
};

/// Density of the continuous part. Errors at arcsine poles, outside the
/// domain, and at the cm_mixture atom.
double pdf(const DistributionModel& model, double t);

/// P(X <= t). Errors outside the domain.
double cdf(const DistributionModel& model, double t);

/// P(X < t); differs from cdf only at atoms.
double cdf_left(const DistributionModel& model, double t);

/// Mass of [a, b), or of [a, b] when b is the top of the domain.
double interval_mass(const DistributionModel& model, double a, double b);

/// f_d(z) for even d >= 4 and |z| <= 1; tends to 1/2 as d grows.
double gen_arcsine_limit_check(int d, double z);

/// Bessel J_0: Maclaurin series for |z| <= 12, Hankel asymptotic beyond.
/// Absolute error below 1e-10 for |z| <= 1e6.
double bessel_j0(double z);

inline constexpr double kBesselSeamRadius = 12.0;

/// Series branch alone, exposed for the seam check.
double bessel_j0_series(double z);
/// Asymptotic branch alone, z > 0.
double bessel_j0_asymptotic(double z);

/// J_0(2 pi |k|), the mean of exp(2 pi i k alpha_n) for arcsine-distributed alpha_n.
double weyl_limit(std::int64_t k);

/// Main term J_0(2 pi k) x of sum_{n <= x} exp(-2 pi i k cos(n theta)).
double summatory_prediction(std::int64_t k, std::uint64_t x);

}  // namespace frobtrace::density
