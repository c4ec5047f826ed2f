#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace frobtrace {

struct Interval {
  double lo = 0.0;
  double hi = 1.0;

  bool contains(double x) const { return x >= lo && x <= hi; }
  bool contains(const Interval& other) const { return other.lo >= lo && other.hi <= hi; }
  bool operator==(const Interval&) const = default;
};

/// A finite run of samples x_{start}, x_{start+1}, ... with a declared range.
///
/// Construction validates that every sample lies in `range`; the object is
/// immutable afterwards.
class RealSequence {
 public:
  RealSequence() = default;
  RealSequence(std::vector<double> values, std::int64_t start_index, Interval range,
               std::string source_tag);

  std::span<const double> values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  double operator[](std::size_t i) const { return values_[i]; }
  std::int64_t start_index() const { return start_index_; }
  const Interval& range() const { return range_; }
  const std::string& source_tag() const { return source_tag_; }

  /// First `n` samples, same metadata.
  RealSequence prefix(std::size_t n) const;

  bool operator==(const RealSequence&) const = default;

 private:
  std::vector<double> values_;
  std::int64_t start_index_ = 1;
  Interval range_{};
  std::string source_tag_;
};

}  // namespace frobtrace
