#include "frobtrace/sequence.hpp"

#include <algorithm>
#include <cmath>

#include "frobtrace/error.hpp"

namespace frobtrace {

RealSequence::RealSequence(std::vector<double> values, std::int64_t start_index, Interval range,
                           std::string source_tag)
    : values_(std::move(values)),
      start_index_(start_index),
      range_(range),
      source_tag_(std::move(source_tag)) {
  if (start_index_ < 1) throw PreconditionError("RealSequence: start_index must be >= 1");
  if (!(range_.lo <= range_.hi)) throw PreconditionError("RealSequence: empty range");
  for (double v : values_) {
    if (!std::isfinite(v) || !range_.contains(v)) {
      throw PreconditionError("RealSequence: sample outside declared range");
    }
  }
}

RealSequence RealSequence::prefix(std::size_t n) const {
  RealSequence out;
  out.values_.assign(values_.begin(), values_.begin() + std::min(n, values_.size()));
  out.start_index_ = start_index_;
  out.range_ = range_;
  out.source_tag_ = source_tag_;
  return out;
}

}  // namespace frobtrace
