#pragma once

// Elliptic curves y^2 = x^3 + Ax + B over F_p (p > 3): point counting, the
// trace recurrence a_n = a_1 a_{n-1} - p a_{n-2}, and the normalized power
// sequence alpha_n = a_n / (2 p^{n/2}) = cos(n theta).
//
// Sign convention: a_1 = p + 1 - #E(F_p). The Legendre-symbol sum
// sum_x ((x^3 + Ax + B) / p) equals -a_1 and is kept as a diagnostic.
// Every distributional statement is invariant under a_1 -> -a_1.

#include <array>
#include <cstdint>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "frobtrace/sequence.hpp"

namespace frobtrace::ec {

using BigInt = boost::multiprecision::cpp_int;
using HighFloat = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<256, boost::multiprecision::digit_base_2>,
    boost::multiprecision::et_off>;

inline constexpr std::uint64_t kDefaultEnumerationCeiling = std::uint64_t{1} << 26;
inline constexpr std::size_t kMaxSequenceLength = 100'000'000;

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// Nonsingular short Weierstrass curve over Q.
class CurveSpec {
 public:
  CurveSpec(std::int64_t a, std::int64_t b);

  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  /// -16 (4A^3 + 27B^2), never zero.
  const BigInt& discriminant() const { return discriminant_; }

  bool operator==(const CurveSpec& other) const { return a_ == other.a_ && b_ == other.b_; }

 private:
  std::int64_t a_;
  std::int64_t b_;
  BigInt discriminant_;
};

struct PointCount {
  std::uint64_t p = 0;
  std::uint64_t count = 0;         // #E(F_p), including the point at infinity
  std::int64_t trace = 0;          // a_1 = p + 1 - count
  std::int64_t character_sum = 0;  // sum_x chi(x^3 + Ax + B) = -trace

  bool operator==(const PointCount&) const = default;
};

/// True iff p does not divide the discriminant. Throws for p <= 3.
bool good_reduction(const CurveSpec& curve, std::uint64_t p);

/// Exact #E(F_p) by enumerating the quadratic character over x = 0..p-1.
PointCount count_points(const CurveSpec& curve, std::uint64_t p,
                        std::uint64_t ceiling = kDefaultEnumerationCeiling);

/// Throws PreconditionError unless a1^2 <= 4p.
void require_hasse(std::int64_t a1, std::uint64_t p);

/// a_n = tau^n + conj(tau)^n, exactly.
BigInt trace_power(std::int64_t a1, std::uint64_t p, std::uint64_t n);

/// a_n / (2 p^{n/2}) evaluated from the exact numerator at 256-bit precision.
HighFloat normalized_trace_exact(std::int64_t a1, std::uint64_t p, std::uint64_t n);

/// theta = arccos(a_1 / (2 sqrt p)) in [0, pi], held at 256 bits.
///
/// The angle is also stored as a 192-bit fixed-point fraction of a full turn,
/// theta / (2 pi) * 2^192, so that n * theta mod 2 pi can be reduced exactly in
/// integer arithmetic for any 64-bit n.
class FrobeniusAngle {
 public:
  FrobeniusAngle(std::int64_t a1, std::uint64_t p);

  std::int64_t a1() const { return a1_; }
  std::uint64_t p() const { return p_; }
  const HighFloat& theta() const { return theta_; }
  /// Certified absolute error on theta().
  double err_bound() const { return err_bound_; }
  /// theta() rounded to double.
  double theta_double() const { return theta_.convert_to<double>(); }
  /// Limbs of floor(theta / (2 pi) * 2^192), most significant first.
  const std::array<std::uint64_t, 3>& turn_fraction() const { return turns_; }

  /// cos(n theta), |error| < 1e-15 for every n < 2^64.
  double alpha(std::uint64_t n) const;
  /// n theta / (2 pi) mod 1 as the top 64 bits of the fixed-point product.
  std::uint64_t turns_mod_one(std::uint64_t n) const;

  /// Decimal expansion of theta with `digits` significant digits.
  std::string theta_string(int digits = 60) const;

 private:
  std::int64_t a1_;
  std::uint64_t p_;
  HighFloat theta_;
  double err_bound_;
  std::array<std::uint64_t, 3> turns_{};
};

FrobeniusAngle frobenius_angle(std::int64_t a1, std::uint64_t p);

/// values[n-1] = cos(n theta) for n = 1..count, range [-1, 1].
RealSequence normalized_trace_sequence(const FrobeniusAngle& angle, std::size_t count,
                                       std::size_t ceiling = kMaxSequenceLength);

/// cos(2 pi u / 2^64) with octant folding; exact at multiples of a quarter turn.
double cos_turns(std::uint64_t u);

/// Requires p > 3.
bool is_supersingular_trace(std::int64_t a1, std::uint64_t p);

}  // namespace frobtrace::ec
