#include "frobtrace/ec_core.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "frobtrace/error.hpp"

namespace frobtrace::ec {
namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t reduce_signed(std::int64_t v, std::uint64_t p) {
  const auto m = static_cast<std::int64_t>(p);
  std::int64_t r = v % m;
  if (r < 0) r += m;
  return static_cast<std::uint64_t>(r);
}

void require_supported_prime(std::uint64_t p, const char* op) {
  if (p <= 3) {
    throw PreconditionError(std::string(op) + ": characteristic p <= 3 is not supported");
  }
  if (!is_prime(p)) throw PreconditionError(std::string(op) + ": p is not prime");
}

const HighFloat& high_pi() {
  static const HighFloat pi = boost::math::constants::pi<HighFloat>();
  return pi;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

CurveSpec::CurveSpec(std::int64_t a, std::int64_t b) : a_(a), b_(b) {
  const BigInt big_a = a;
  const BigInt big_b = b;
  discriminant_ = -16 * (4 * big_a * big_a * big_a + 27 * big_b * big_b);
  if (discriminant_ == 0) {
    throw PreconditionError("CurveSpec: singular curve (4A^3 + 27B^2 = 0)");
  }
}

bool good_reduction(const CurveSpec& curve, std::uint64_t p) {
  require_supported_prime(p, "good_reduction");
  return curve.discriminant() % p != 0;
}

PointCount count_points(const CurveSpec& curve, std::uint64_t p, std::uint64_t ceiling) {
  if (!good_reduction(curve, p)) {
    throw PreconditionError("count_points: bad reduction at p = " + std::to_string(p));
  }
  if (p > ceiling) {
    throw ResourceError("count_points: p = " + std::to_string(p) +
                        " exceeds the enumeration ceiling " + std::to_string(ceiling));
  }

  // is_square[r] for r in 1..p-1, built from y^2 = (y-1)^2 + 2y - 1.
  std::vector<bool> is_square(p, false);
  std::uint64_t sq = 0;
  for (std::uint64_t y = 1; y <= (p - 1) / 2; ++y) {
    sq += 2 * y - 1;
    if (sq >= p) sq %= p;
    is_square[sq] = true;
  }

  const std::uint64_t am = reduce_signed(curve.a(), p);
  const std::uint64_t bm = reduce_signed(curve.b(), p);
  std::int64_t chi_sum = 0;
  for (std::uint64_t x = 0; x < p; ++x) {
    const std::uint64_t f = (mulmod(mulmod(x, x, p), x, p) + mulmod(am, x, p) + bm) % p;
    if (f != 0) chi_sum += is_square[f] ? 1 : -1;
  }

  PointCount out;
  out.p = p;
  out.character_sum = chi_sum;
  out.count = static_cast<std::uint64_t>(static_cast<std::int64_t>(p) + 1 + chi_sum);
  out.trace = -chi_sum;
  return out;
}

void require_hasse(std::int64_t a1, std::uint64_t p) {
  const BigInt lhs = BigInt(a1) * a1;
  if (lhs > BigInt(4) * p) {
    throw PreconditionError("Hasse bound violated: |a1| = " + std::to_string(a1 < 0 ? -a1 : a1) +
                            " > 2 sqrt(" + std::to_string(p) + ")");
  }
}

BigInt trace_power(std::int64_t a1, std::uint64_t p, std::uint64_t n) {
  require_hasse(a1, p);
  BigInt prev = 2;
  if (n == 0) return prev;
  BigInt cur = a1;
  const BigInt big_a1 = a1;
  const BigInt big_p = p;
  for (std::uint64_t i = 2; i <= n; ++i) {
    BigInt next = big_a1 * cur - big_p * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

HighFloat normalized_trace_exact(std::int64_t a1, std::uint64_t p, std::uint64_t n) {
  const HighFloat numerator(trace_power(a1, p, n));
  const HighFloat root_p = sqrt(HighFloat(p));
  return numerator / (2 * pow(root_p, static_cast<int>(n)));
}

FrobeniusAngle::FrobeniusAngle(std::int64_t a1, std::uint64_t p) : a1_(a1), p_(p) {
  if (!is_prime(p)) throw PreconditionError("frobenius_angle: p is not prime");
  require_hasse(a1, p);

  if (a1 == 0) {
    theta_ = high_pi() / 2;
    err_bound_ = std::ldexp(1.0, -250);
    turns_ = {std::uint64_t{1} << 62, 0, 0};
    return;
  }

  const HighFloat x = HighFloat(a1) / (2 * sqrt(HighFloat(p)));
  theta_ = acos(x);

  // A posteriori certificate: |theta - acos(x)| <~ |cos(theta) - x| / sin(theta),
  // doubled, plus a floor for the residual's own evaluation error.
  const HighFloat residual = abs(cos(theta_) - x);
  const HighFloat bound = 2 * residual / sin(theta_) + HighFloat(std::ldexp(1.0, -240));
  err_bound_ = bound.convert_to<double>();
  if (!(err_bound_ <= std::ldexp(1.0, -150))) {
    throw NumericError("frobenius_angle: could not certify 150 bits", err_bound_);
  }

  const HighFloat scaled = ldexp(theta_ / (2 * high_pi()), 192);
  BigInt fixed = floor(scaled).convert_to<BigInt>();
  for (int limb = 2; limb >= 0; --limb) {
    turns_[limb] = static_cast<std::uint64_t>(fixed & 0xFFFFFFFFFFFFFFFFull);
    fixed >>= 64;
  }
}

std::uint64_t FrobeniusAngle::turns_mod_one(std::uint64_t n) const {
  // Top limb of n * turns mod 2^192.
  const u128 low = static_cast<u128>(n) * turns_[2];
  const u128 mid = static_cast<u128>(n) * turns_[1] + (low >> 64);
  const u128 high = static_cast<u128>(n) * turns_[0] + (mid >> 64);
  return static_cast<std::uint64_t>(high);
}

double cos_turns(std::uint64_t u) {
  constexpr std::uint64_t kHalf = std::uint64_t{1} << 63;
  constexpr std::uint64_t kQuarter = std::uint64_t{1} << 62;
  constexpr std::uint64_t kEighth = std::uint64_t{1} << 61;
  constexpr double kScale = 2.0 * std::numbers::pi / 18446744073709551616.0;

  std::uint64_t v = u > kHalf ? (0 - u) : u;  // cos is even
  if (v <= kEighth) return std::cos(static_cast<double>(v) * kScale);
  if (v < kQuarter + kEighth) {
    const auto offset = static_cast<std::int64_t>(kQuarter) - static_cast<std::int64_t>(v);
    return std::sin(static_cast<double>(offset) * kScale);
  }
  return -std::cos(static_cast<double>(kHalf - v) * kScale);
}

double FrobeniusAngle::alpha(std::uint64_t n) const { return cos_turns(turns_mod_one(n)); }

std::string FrobeniusAngle::theta_string(int digits) const {
  return theta_.str(digits, std::ios_base::fixed);
}

FrobeniusAngle frobenius_angle(std::int64_t a1, std::uint64_t p) { return {a1, p}; }

RealSequence normalized_trace_sequence(const FrobeniusAngle& angle, std::size_t count,
                                       std::size_t ceiling) {
  if (count == 0) throw PreconditionError("normalized_trace_sequence: N must be >= 1");
  if (count > ceiling) {
    throw ResourceError("normalized_trace_sequence: N = " + std::to_string(count) +
                        " exceeds ceiling " + std::to_string(ceiling));
  }
  std::vector<double> values(count);
  for (std::size_t i = 0; i < count; ++i) values[i] = angle.alpha(i + 1);
  return RealSequence(std::move(values), 1, Interval{-1.0, 1.0},
                      "alpha_n a1=" + std::to_string(angle.a1()) + " p=" + std::to_string(angle.p()));
}

bool is_supersingular_trace(std::int64_t a1, std::uint64_t p) {
  if (p <= 3) throw PreconditionError("is_supersingular_trace: p must exceed 3");
  return a1 == 0;
}

}  // namespace frobtrace::ec
