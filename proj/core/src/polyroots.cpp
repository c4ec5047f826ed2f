#include "frobtrace/polyroots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>

#include "frobtrace/error.hpp"

namespace frobtrace::poly {
namespace {

using cld = std::complex<long double>;
using Coeffs = std::vector<BigInt>;

constexpr int kIterationBudget = 200;
constexpr long double kAngularOffset = 0.7L;
constexpr double kResidualScale = 1e-12;
constexpr long double kEpsLd = std::numeric_limits<long double>::epsilon();

void trim(Coeffs& c) {
  while (c.size() > 1 && c.back() == 0) c.pop_back();
}

// Exact division by a monic divisor; the remainder must vanish.
Coeffs divide_exact(const Coeffs& num, const Coeffs& den) {
  Coeffs rem = num;
  const std::size_t dd = den.size() - 1;
  Coeffs quot(rem.size() - dd, 0);
  for (std::size_t i = rem.size(); i-- > dd;) {
    const BigInt q = rem[i];
    quot[i - dd] = q;
    if (q != 0) {
      for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= q * den[j];
    }
  }
  for (std::size_t i = 0; i < dd; ++i) {
    if (rem[i] != 0) throw NumericError("cyclotomic: inexact division");
  }
  return quot;
}

struct Evaluation {
  cld value;
  cld derivative;
  long double scale;  // sum |c_i| |z|^i, the natural size of rounding error
};

Evaluation horner(const std::vector<long double>& c, cld z) {
  cld p = c.back();
  cld dp = 0;
  long double s = std::abs(c.back());
  const long double r = std::abs(z);
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    dp = dp * z + p;
    p = p * z + c[i];
    s = s * r + std::abs(c[i]);
  }
  return {p, dp, s};
}

std::vector<long double> coeffs_ld(const IntPolynomial& poly) {
  std::vector<long double> out;
  out.reserve(poly.coeffs().size());
  for (const auto& c : poly.coeffs()) out.push_back(c.convert_to<long double>());
  return out;
}

struct AberthResult {
  std::vector<cld> roots;
  int iterations = 0;
};

AberthResult aberth(const IntPolynomial& poly) {
  const std::vector<long double> c = coeffs_ld(poly);
  const int d = poly.degree();
  const long double lead = c.back();

  long double bound = 0;
  for (int i = 0; i < d; ++i) bound = std::max(bound, std::abs(c[i] / lead));
  bound += 1;

  std::vector<cld> z(d);
  for (int k = 0; k < d; ++k) {
    const long double angle = 2 * std::numbers::pi_v<long double> * k / d + kAngularOffset;
    z[k] = std::polar(bound, angle);
  }

  std::vector<bool> done(d, false);
  int iter = 0;
  for (; iter < kIterationBudget; ++iter) {
    bool all_done = true;
    for (int k = 0; k < d; ++k) {
      if (done[k]) continue;
      const Evaluation e = horner(c, z[k]);
      if (std::abs(e.value) <= 8 * kEpsLd * e.scale) {
        done[k] = true;
        continue;
      }
      all_done = false;
      cld repulsion = 0;
      for (int j = 0; j < d; ++j) {
        if (j != k) repulsion += 1.0L / (z[k] - z[j]);
      }
      cld step;
      if (e.derivative == cld(0)) {
        step = cld(kEpsLd * (1 + std::abs(z[k])), kEpsLd);
      } else {
        const cld w = e.value / e.derivative;
        step = w / (1.0L - w * repulsion);
      }
      z[k] -= step;
      if (std::abs(step) <= 4 * kEpsLd * std::abs(z[k])) done[k] = true;
    }
    if (all_done) break;
  }

  // Newton polish where the root is simple enough for it to help.
  for (auto& root : z) {
    for (int step = 0; step < 3; ++step) {
      const Evaluation e = horner(c, root);
      if (std::abs(e.derivative) == 0) break;
      const cld next = root - e.value / e.derivative;
      if (std::abs(horner(c, next).value) >= std::abs(e.value)) break;
      root = next;
    }
  }
  return {std::move(z), iter};
}

// Snap near-real roots to the axis and force exact conjugate pairs.
std::vector<cld> snap_and_pair(const IntPolynomial& poly, std::vector<cld> z) {
  const std::vector<long double> c = coeffs_ld(poly);
  std::vector<bool> is_real(z.size(), false);
  for (std::size_t i = 0; i < z.size(); ++i) {
    const long double mag = std::max(1.0L, std::abs(z[i]));
    if (std::abs(z[i].imag()) > 1e-9L * mag) continue;
    const cld on_axis(z[i].real(), 0);
    const Evaluation e = horner(c, on_axis);
    if (std::abs(e.value) <= static_cast<long double>(kResidualScale) * e.scale) {
      z[i] = on_axis;
      is_real[i] = true;
    }
  }

  // Real coefficients make the non-real roots come in exact pairs. A surplus
  // on one side of the axis can only be a near-real root from a cluster
  // around a multiple root; the ones closest to the axis go onto it.
  std::vector<std::size_t> upper, lower;
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (is_real[i]) continue;
    (z[i].imag() > 0 ? upper : lower).push_back(i);
  }
  auto by_height = [&](std::size_t a, std::size_t b) { return std::abs(z[a].imag()) < std::abs(z[b].imag()); };
  std::sort(upper.begin(), upper.end(), by_height);
  std::sort(lower.begin(), lower.end(), by_height);
  auto& larger = upper.size() > lower.size() ? upper : lower;
  const std::size_t surplus = std::max(upper.size(), lower.size()) - std::min(upper.size(), lower.size());
  for (std::size_t k = 0; k < surplus; ++k) {
    const std::size_t i = larger[k];
    z[i] = cld(z[i].real(), 0);
    is_real[i] = true;
  }
  larger.erase(larger.begin(), larger.begin() + static_cast<std::ptrdiff_t>(surplus));

  std::vector<bool> used(z.size(), false);
  for (std::size_t i : upper) {
    std::size_t best = z.size();
    long double best_dist = std::numeric_limits<long double>::infinity();
    for (std::size_t j : lower) {
      if (used[j]) continue;
      const long double dist = std::abs(z[j] - std::conj(z[i]));
      if (dist < best_dist) {
        best_dist = dist;
        best = j;
      }
    }
    if (best == z.size()) throw NumericError("find_roots: unmatched complex root in conjugate pairing");
    const long double re = (z[i].real() + z[best].real()) / 2;
    const long double im = (z[i].imag() - z[best].imag()) / 2;
    z[i] = cld(re, im);
    z[best] = cld(re, -im);
    used[best] = true;
  }
  return z;
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) {
  trim(coeffs_);
  if (coeffs_.size() < 2) throw PreconditionError("IntPolynomial: degree must be >= 1");
}

IntPolynomial IntPolynomial::from_ascending(std::initializer_list<long long> coeffs) {
  return IntPolynomial(Coeffs(coeffs.begin(), coeffs.end()));
}

IntPolynomial IntPolynomial::from_descending(const std::vector<long long>& coeffs) {
  return IntPolynomial(Coeffs(coeffs.rbegin(), coeffs.rend()));
}

BigInt IntPolynomial::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) g = boost::multiprecision::gcd(g, c);
  return abs(g);
}

bool IntPolynomial::is_self_reciprocal() const {
  return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
}

IntPolynomial IntPolynomial::reversed() const {
  if (coeffs_.front() == 0) throw PreconditionError("reversed: zero constant term");
  return IntPolynomial(Coeffs(coeffs_.rbegin(), coeffs_.rend()));
}

std::vector<double> IntPolynomial::coeffs_double() const {
  std::vector<double> out;
  for (const auto& c : coeffs_) out.push_back(c.convert_to<double>());
  return out;
}

std::string IntPolynomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    const BigInt mag = abs(c);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    if (mag != 1 || i == 0) os << mag;
    if (i >= 1) os << "T";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

IntPolynomial cyclotomic(int n) {
  if (n < 1 || n > 100) throw PreconditionError("cyclotomic: n must be in [1, 100]");
  std::map<int, Coeffs> cache;
  auto build = [&](auto&& self, int m) -> const Coeffs& {
    if (auto it = cache.find(m); it != cache.end()) return it->second;
    Coeffs num(m + 1, 0);
    num[0] = -1;
    num[m] = 1;
    for (int d = 1; d < m; ++d) {
      if (m % d == 0) num = divide_exact(num, self(self, d));
    }
    return cache.emplace(m, std::move(num)).first->second;
  };
  return IntPolynomial(build(build, n));
}

IntPolynomial shift_constant(const IntPolynomial& poly, long long c) {
  Coeffs coeffs = poly.coeffs();
  coeffs[0] += c;
  return IntPolynomial(std::move(coeffs));
}

std::vector<std::complex<long double>> find_roots_extended(const IntPolynomial& poly) {
  return snap_and_pair(poly, aberth(poly).roots);
}

RootSet find_roots(const IntPolynomial& poly) {
  AberthResult raw = aberth(poly);
  const std::vector<cld> snapped = snap_and_pair(poly, std::move(raw.roots));
  const std::vector<long double> c = coeffs_ld(poly);

  RootSet out;
  out.iterations = raw.iterations;
  double worst = 0.0;
  double bound = 0.0;
  for (const cld& z : snapped) {
    const std::complex<double> root(static_cast<double>(z.real()), static_cast<double>(z.imag()));
    const Evaluation e = horner(c, cld(root.real(), root.imag()));
    const double residual = static_cast<double>(std::abs(e.value));
    const double target = kResidualScale * static_cast<double>(e.scale);
    if (residual > target) worst = std::max(worst, residual / target);
    bound = std::max(bound, target);
    out.roots.push_back(root);
  }
  if (worst > 1.0) {
    throw NumericError("find_roots: residual above target after iteration budget", worst);
  }
  out.residual_bound = bound;

  std::sort(out.roots.begin(), out.roots.end(), [](const auto& a, const auto& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  out.conjugate.resize(out.roots.size());
  for (std::size_t i = 0; i < out.roots.size(); ++i) {
    const auto target = std::conj(out.roots[i]);
    for (std::size_t j = 0; j < out.roots.size(); ++j) {
      if (out.roots[j] == target) {
        out.conjugate[i] = j;
        break;
      }
    }
  }
  return out;
}

std::vector<BigInt> newton_power_sums(const IntPolynomial& poly, std::size_t count) {
  if (!poly.is_monic()) {
    throw PreconditionError("newton_power_sums: polynomial must be monic");
  }
  const int d = poly.degree();
  const auto& c = poly.coeffs();
  std::vector<BigInt> s(count + 1);
  s[0] = d;
  for (std::size_t n = 1; n <= count; ++n) {
    BigInt acc = 0;
    const std::size_t upto = std::min<std::size_t>(n - 1, static_cast<std::size_t>(d));
    for (std::size_t k = 1; k <= upto; ++k) acc += c[d - k] * s[n - k];
    if (n <= static_cast<std::size_t>(d)) acc += static_cast<long long>(n) * c[d - n];
    s[n] = -acc;
  }
  return s;
}

std::string to_string(SalemReason reason) {
  switch (reason) {
    case SalemReason::not_monic: return "not-monic";
    case SalemReason::degree_lt_4: return "degree-lt-4";
    case SalemReason::odd_degree: return "odd-degree";
    case SalemReason::no_real_root_gt_1: return "no-real-root-gt-1";
    case SalemReason::conjugate_outside_disk: return "conjugate-outside-disk";
    case SalemReason::no_conjugate_on_circle: return "no-conjugate-on-circle";
  }
  return "unknown";
}

SalemVerdict salem_classify(const IntPolynomial& poly) {
  SalemVerdict v;
  if (!poly.is_monic()) v.reasons.push_back(SalemReason::not_monic);
  if (poly.degree() < 4) v.reasons.push_back(SalemReason::degree_lt_4);
  if (poly.degree() % 2 != 0) v.reasons.push_back(SalemReason::odd_degree);

  const RootSet roots = find_roots(poly);
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::size_t candidate = kNone;
  for (std::size_t i = 0; i < roots.roots.size(); ++i) {
    const auto& z = roots.roots[i];
    if (z.imag() != 0.0) continue;
    if (candidate == kNone || z.real() > roots.roots[candidate].real()) candidate = i;
  }
  if (candidate != kNone && !(roots.roots[candidate].real() > 1.0 + kUnitCircleTolerance)) candidate = kNone;
  const bool has_tau = candidate != kNone;
  if (has_tau) {
    v.tau = roots.roots[candidate].real();
  } else {
    v.reasons.push_back(SalemReason::no_real_root_gt_1);
  }

  bool inside = true;
  bool on_circle = false;
  for (std::size_t i = 0; i < roots.roots.size(); ++i) {
    if (i == candidate) continue;
    const double mod = std::abs(roots.roots[i]);
    if (mod > 1.0 + kUnitCircleTolerance) inside = false;
    if (std::abs(mod - 1.0) <= kUnitCircleTolerance) on_circle = true;
  }
  if (!inside) v.reasons.push_back(SalemReason::conjugate_outside_disk);
  // A self-reciprocal polynomial with tau > 1 and the rest in the disk has
  // 1/tau as a root and all remaining roots exactly on the circle.
  if (has_tau && inside && poly.is_self_reciprocal() && poly.degree() >= 4) on_circle = true;
  if (!on_circle) v.reasons.push_back(SalemReason::no_conjugate_on_circle);

  v.loose_salem = poly.is_monic() && poly.degree() >= 4 && poly.degree() % 2 == 0 &&
                  has_tau && inside;
  v.is_salem = v.reasons.empty();
  return v;
}

PowerMod1Result power_mod1_sequence(const IntPolynomial& poly, std::size_t count) {
  if (!poly.is_monic()) throw PreconditionError("power_mod1_sequence: polynomial must be monic");
  if (count == 0) throw PreconditionError("power_mod1_sequence: N must be >= 1");

  const std::vector<cld> roots = find_roots_extended(poly);
  std::size_t dom = 0;
  for (std::size_t i = 1; i < roots.size(); ++i) {
    if (std::abs(roots[i]) > std::abs(roots[dom])) dom = i;
  }
  const long double dom_mod = std::abs(roots[dom]);
  if (roots[dom].imag() != 0 || !(dom_mod > 1)) {
    throw PreconditionError("power_mod1_sequence: no dominant real root of modulus > 1");
  }
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (i != dom && std::abs(roots[i]) >= dom_mod * (1 - 1e-12L)) {
      throw PreconditionError("power_mod1_sequence: dominant root is not unique in modulus");
    }
  }

  // frac(alpha^n) = frac(s_n - X_n) = frac(-X_n), X_n = sum over the other
  // roots of their n-th powers; s_n is an integer so only X_n carries the
  // fractional part. Error model per other root: propagated root error
  // n |z|^{n-1} delta plus accumulated rounding 2 n eps |z|^n.
  const std::vector<long double> c = coeffs_ld(poly);
  struct Conjugate {
    cld z;
    cld power{1, 0};
    long double mod;
    long double mod_power = 1;
    long double delta;
  };
  std::vector<Conjugate> others;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (i == dom) continue;
    const Evaluation e = horner(c, roots[i]);
    const long double slope = std::abs(e.derivative);
    const long double delta =
        slope > 0 ? (std::abs(e.value) + poly.degree() * kEpsLd * e.scale) / slope
                  : std::sqrt(kEpsLd);
    others.push_back({roots[i], cld(1, 0), std::abs(roots[i]), 1, 2 * delta});
  }

  constexpr long double kTolerance = 1e-9L;
  std::vector<double> values;
  values.reserve(count);
  for (std::size_t n = 1; n <= count; ++n) {
    cld sum = 0;
    long double err = 0;
    const auto nd = static_cast<long double>(n);
    for (auto& o : others) {
      err += nd * o.mod_power * o.delta;  // uses |z|^{n-1}
      o.power *= o.z;
      o.mod_power *= o.mod;
      sum += o.power;
      err += 2 * nd * kEpsLd * o.mod_power;
    }
    const long double neg = -sum.real();
    err += 4 * kEpsLd * std::abs(neg) + 1e-16L;
    if (!(err < kTolerance)) break;
    double frac = static_cast<double>(neg - std::floor(neg));
    if (frac >= 1.0) frac = std::nextafter(1.0, 0.0);
    if (frac < 0.0) frac = 0.0;
    values.push_back(frac);
  }
  if (values.empty()) {
    throw NumericError("power_mod1_sequence: certified length is zero");
  }

  PowerMod1Result out;
  out.requested = count;
  out.certified_length = values.size();
  out.dominant_root = static_cast<double>(roots[dom].real());
  out.sequence = RealSequence(std::move(values), 1, Interval{0.0, 1.0},
                              "frac(alpha^n) " + poly.to_string());
  return out;
}

}  // namespace frobtrace::poly
