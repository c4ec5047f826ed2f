#pragma once

// Exact integer polynomials and their complex roots: cyclotomics, Newton
// power sums, Salem classification and the mod-1 power sequence of a
// dominant real root.

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "frobtrace/sequence.hpp"

namespace frobtrace::poly {

using BigInt = boost::multiprecision::cpp_int;

/// Integer polynomial of degree >= 1, coefficients in ascending degree.
class IntPolynomial {
 public:
  explicit IntPolynomial(std::vector<BigInt> ascending);
  /// Ascending-degree coefficients.
  static IntPolynomial from_ascending(std::initializer_list<long long> coeffs);
  /// Leading coefficient first, as usually written.
  static IntPolynomial from_descending(const std::vector<long long>& coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  const BigInt& coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  const BigInt& leading() const { return coeffs_.back(); }
  bool is_monic() const { return leading() == 1; }
  /// gcd of the coefficients, positive.
  BigInt content() const;
  /// c_i = c_{d-i} for all i.
  bool is_self_reciprocal() const;
  /// T^d p(1/T). Throws if the constant term is zero (degree would drop).
  IntPolynomial reversed() const;

  std::vector<double> coeffs_double() const;
  std::string to_string() const;

  bool operator==(const IntPolynomial&) const = default;

 private:
  std::vector<BigInt> coeffs_;
};

/// n-th cyclotomic polynomial, 1 <= n <= 100.
IntPolynomial cyclotomic(int n);

/// poly + c.
IntPolynomial shift_constant(const IntPolynomial& poly, long long c);

struct RootSet {
  std::vector<std::complex<double>> roots;  // sorted by (re, im)
  double residual_bound = 0.0;
  /// conjugate[i] is the index of conj(roots[i]); real roots map to themselves.
  std::vector<std::size_t> conjugate;
  int iterations = 0;
};

/// All complex roots by Aberth-Ehrlich iteration from the Cauchy-bound circle.
/// Throws NumericError if 200 iterations do not reach the residual target.
RootSet find_roots(const IntPolynomial& poly);

/// Same iteration, kept in extended precision and Newton-polished; roots are
/// unsorted and not snapped. Used where powers of roots are needed.
std::vector<std::complex<long double>> find_roots_extended(const IntPolynomial& poly);

/// s_0..s_count, s_n = sum of n-th powers of the roots. Requires monic input.
std::vector<BigInt> newton_power_sums(const IntPolynomial& poly, std::size_t count);

enum class SalemReason {
  not_monic,
  degree_lt_4,
  odd_degree,
  no_real_root_gt_1,
  conjugate_outside_disk,
  no_conjugate_on_circle,
};

std::string to_string(SalemReason reason);

struct SalemVerdict {
  bool is_salem = false;
  /// Passes the looser test without the on-circle requirement.
  bool loose_salem = false;
  std::optional<double> tau;
  std::vector<SalemReason> reasons;
  bool irreducibility_assumed = true;

  bool operator==(const SalemVerdict&) const = default;
};

inline constexpr double kUnitCircleTolerance = 1e-9;

SalemVerdict salem_classify(const IntPolynomial& poly);

struct PowerMod1Result {
  RealSequence sequence;          // frac(alpha^n), n = 1..certified_length
  std::size_t requested = 0;
  std::size_t certified_length = 0;
  double dominant_root = 0.0;
};

/// frac(alpha^n) for the unique dominant real root alpha, |alpha| > 1.
/// Output is truncated where the estimated absolute error would exceed 1e-9.
PowerMod1Result power_mod1_sequence(const IntPolynomial& poly, std::size_t count);

}  // namespace frobtrace::poly
