#include "frobtrace/densities.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "frobtrace/error.hpp"

namespace frobtrace::density {
namespace {

constexpr double kPi = std::numbers::pi;

double arcsine_cdf(double t) { return std::clamp(0.5 + std::asin(std::clamp(t, -1.0, 1.0)) / kPi, 0.0, 1.0); }

double gen_scale(int d) { return static_cast<double>(d - 1); }

void require_in_domain(const DistributionModel& model, double t, const char* op) {
  if (!std::isfinite(t) || !model.domain().contains(t)) {
    throw PreconditionError(std::string(op) + ": t outside the domain of " + model.name());
  }
}

}  // namespace

DistributionModel DistributionModel::uniform(double lo, double hi) {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw PreconditionError("uniform model needs finite lo < hi");
  }
  return {ModelKind::uniform, Interval{lo, hi}, 0};
}

DistributionModel DistributionModel::arcsine() { return {ModelKind::arcsine, Interval{-1, 1}, 0}; }

DistributionModel DistributionModel::gen_arcsine(int d) {
  if (d < 4 || d % 2 != 0) {
    throw PreconditionError("gen_arcsine: degree d must be even and >= 4");
  }
  return {ModelKind::gen_arcsine, Interval{-1, 1}, d};
}

DistributionModel DistributionModel::semicircle() { return {ModelKind::semicircle, Interval{-1, 1}, 0}; }

DistributionModel DistributionModel::cm_mixture() { return {ModelKind::cm_mixture, Interval{-1, 1}, 0}; }

std::string DistributionModel::name() const {
  switch (kind_) {
    case ModelKind::uniform: return "uniform";
    case ModelKind::arcsine: return "arcsine";
    case ModelKind::gen_arcsine: return "gen-arcsine";
    case ModelKind::semicircle: return "semicircle";
    case ModelKind::cm_mixture: return "cm-mixture";
  }
  return "unknown";
}

std::vector<Atom> DistributionModel::atoms() const {
  if (kind_ == ModelKind::cm_mixture) return {Atom{0.0, 0.5}};
  return {};
}

double pdf(const DistributionModel& model, double t) {
  require_in_domain(model, t, "pdf");
  switch (model.kind()) {
    case ModelKind::uniform:
      return 1.0 / (model.domain().hi - model.domain().lo);
    case ModelKind::arcsine:
      if (std::abs(t) >= 1.0) throw PreconditionError("pdf: arcsine density has a pole at |t| = 1");
      return 1.0 / (kPi * std::sqrt(1.0 - t * t));
    case ModelKind::gen_arcsine: {
      const double c = gen_scale(model.degree());
      const double z = t / c;
      return 1.0 / (2.0 * c * std::asin(1.0 / c) * std::sqrt(1.0 - z * z));
    }
    case ModelKind::semicircle:
      return 2.0 / kPi * std::sqrt(std::max(0.0, 1.0 - t * t));
    case ModelKind::cm_mixture:
      if (t == 0.0) throw PreconditionError("pdf: cm-mixture has an atom at 0, no density there");
      if (std::abs(t) >= 1.0) throw PreconditionError("pdf: cm-mixture density has a pole at |t| = 1");
      return 0.5 / (kPi * std::sqrt(1.0 - t * t));
  }
  throw PreconditionError("pdf: unknown model");
}

double cdf(const DistributionModel& model, double t) {
  require_in_domain(model, t, "cdf");
  switch (model.kind()) {
    case ModelKind::uniform: {
      const auto& dom = model.domain();
      return std::clamp((t - dom.lo) / (dom.hi - dom.lo), 0.0, 1.0);
    }
    case ModelKind::arcsine:
      return arcsine_cdf(t);
    case ModelKind::gen_arcsine: {
      const double c = gen_scale(model.degree());
      const double edge = std::asin(1.0 / c);
      return std::clamp((std::asin(t / c) + edge) / (2.0 * edge), 0.0, 1.0);
    }
    case ModelKind::semicircle: {
      const double s = std::sqrt(std::max(0.0, 1.0 - t * t));
      return std::clamp(0.5 + (t * s + std::asin(t)) / kPi, 0.0, 1.0);
    }
    case ModelKind::cm_mixture:
      return 0.5 * arcsine_cdf(t) + (t >= 0.0 ? 0.5 : 0.0);
  }
  throw PreconditionError("cdf: unknown model");
}

double cdf_left(const DistributionModel& model, double t) {
  double value = cdf(model, t);
  for (const Atom& atom : model.atoms()) {
    if (atom.location == t) value -= atom.mass;
  }
  return value;
}

double interval_mass(const DistributionModel& model, double a, double b) {
  if (!(a <= b)) throw PreconditionError("interval_mass: need a <= b");
  const double upper = (b == model.domain().hi) ? cdf(model, b) : cdf_left(model, b);
  return upper - cdf_left(model, a);
}

double gen_arcsine_limit_check(int d, double z) {
  if (!(std::abs(z) <= 1.0)) throw PreconditionError("gen_arcsine_limit_check: |z| must be <= 1");
  return pdf(DistributionModel::gen_arcsine(d), z);
}

double bessel_j0_series(double z) {
  const long double q = static_cast<long double>(z) * z / 4.0L;
  long double term = 1.0L;
  long double sum = 1.0L;
  for (int m = 1; m < 200; ++m) {
    term *= -q / (static_cast<long double>(m) * m);
    sum += term;
    if (std::abs(term) < 1e-22L && m > q) break;
  }
  return static_cast<double>(sum);
}

double bessel_j0_asymptotic(double z) {
  if (!(z > 0.0)) throw PreconditionError("bessel_j0_asymptotic: z must be positive");
  // b_m = prod_{j<=m} (2j-1)^2 / (8j); P takes even m, Q odd m, both alternating.
  // The series is divergent: stop at the smallest term.
  double p = 1.0;
  double q = 0.0;
  double term = 1.0;
  for (int m = 1; m < 200; ++m) {
    const double next = term * (2.0 * m - 1.0) * (2.0 * m - 1.0) / (8.0 * m * z);
    if (next >= term || next < 1e-18) break;
    term = next;
    const int half = m / 2;
    const double sign = (half % 2 == 0) ? 1.0 : -1.0;
    if (m % 2 == 0) {
      p += sign * term;
    } else {
      q -= sign * term;
    }
  }
  // cos(z - pi/4) and sin(z - pi/4) without rounding z - pi/4.
  const double c = std::cos(z);
  const double s = std::sin(z);
  const double cos_chi = (c + s) / std::numbers::sqrt2;
  const double sin_chi = (s - c) / std::numbers::sqrt2;
  return std::sqrt(2.0 / (kPi * z)) * (p * cos_chi - q * sin_chi);
}

double bessel_j0(double z) {
  if (!std::isfinite(z)) throw PreconditionError("bessel_j0: non-finite argument");
  const double x = std::abs(z);
  if (x > 1e6) throw PreconditionError("bessel_j0: |z| exceeds 1e6");
  return x <= kBesselSeamRadius ? bessel_j0_series(x) : bessel_j0_asymptotic(x);
}

double weyl_limit(std::int64_t k) {
  if (k == 0) throw PreconditionError("weyl_limit: k must be nonzero");
  return bessel_j0(2.0 * kPi * std::abs(static_cast<double>(k)));
}

double summatory_prediction(std::int64_t k, std::uint64_t x) {
  return weyl_limit(k) * static_cast<double>(x);
}

}  // namespace frobtrace::density
