#pragma once

// JSON (de)serialization of report types. Field names follow the C++ members.

#include <json.hpp>

#include "frobtrace/ec_core.hpp"
#include "frobtrace/equidist.hpp"
#include "frobtrace/experiments.hpp"
#include "frobtrace/polyroots.hpp"
#include "frobtrace/sequence.hpp"

namespace frobtrace {

void to_json(nlohmann::json& j, const RealSequence& seq);
void from_json(const nlohmann::json& j, RealSequence& seq);

}  // namespace frobtrace

namespace frobtrace::ec {

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(PointCount, p, count, trace, character_sum)

}  // namespace frobtrace::ec

namespace frobtrace::equidist {

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(WeylSumReport, k, n, sum_real, sum_imag, modulus)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(DiscrepancyReport, n, d_star, et_bound, et_cutoff)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(Histogram, bin_edges, counts, total, underflow, overflow)

}  // namespace frobtrace::equidist

namespace frobtrace::experiments {

void to_json(nlohmann::json& j, const PrimeRecord& rec);
void from_json(const nlohmann::json& j, PrimeRecord& rec);
void to_json(nlohmann::json& j, const PrimeSweepReport& report);
void from_json(const nlohmann::json& j, PrimeSweepReport& report);

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SatoTateResult, a, b, empirical, predicted, gap)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(LangTrotterReport, r, x, count, ratio)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(FixedPrimeReport, curve_a, curve_b, p, n, a1, supersingular,
                                   zero_fraction, plus_one_count, minus_one_count, ks_vs_arcsine,
                                   ks_vs_uniform, histogram)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SummatoryPoint, x, sum_real, sum_imag, prediction, relative_gap)

}  // namespace frobtrace::experiments

namespace frobtrace::poly {

void to_json(nlohmann::json& j, const SalemVerdict& verdict);
void from_json(const nlohmann::json& j, SalemVerdict& verdict);

}  // namespace frobtrace::poly
