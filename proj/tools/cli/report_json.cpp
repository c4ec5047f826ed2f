#include "report_json.hpp"

#include <stdexcept>

namespace frobtrace {

void to_json(nlohmann::json& j, const RealSequence& seq) {
  j = nlohmann::json{{"source_tag", seq.source_tag()},
                     {"start_index", seq.start_index()},
                     {"range", {seq.range().lo, seq.range().hi}},
                     {"values", std::vector<double>(seq.values().begin(), seq.values().end())}};
}

void from_json(const nlohmann::json& j, RealSequence& seq) {
  const auto& range = j.at("range");
  seq = RealSequence(j.at("values").get<std::vector<double>>(), j.at("start_index").get<std::int64_t>(),
                     Interval{range.at(0).get<double>(), range.at(1).get<double>()},
                     j.at("source_tag").get<std::string>());
}

}  // namespace frobtrace

namespace frobtrace::experiments {

void to_json(nlohmann::json& j, const PrimeRecord& rec) {
  j = nlohmann::json{{"p", rec.p},
                     {"good_reduction", rec.good_reduction},
                     {"a1", rec.a1 ? nlohmann::json(*rec.a1) : nlohmann::json(nullptr)},
                     {"alpha1", rec.alpha1 ? nlohmann::json(*rec.alpha1) : nlohmann::json(nullptr)},
                     {"supersingular", rec.supersingular}};
}

void from_json(const nlohmann::json& j, PrimeRecord& rec) {
  rec.p = j.at("p").get<std::uint64_t>();
  rec.good_reduction = j.at("good_reduction").get<bool>();
  rec.a1 = j.at("a1").is_null() ? std::nullopt : std::optional(j.at("a1").get<std::int64_t>());
  rec.alpha1 = j.at("alpha1").is_null() ? std::nullopt : std::optional(j.at("alpha1").get<double>());
  rec.supersingular = j.at("supersingular").get<bool>();
}

void to_json(nlohmann::json& j, const PrimeSweepReport& report) {
  j = nlohmann::json{{"curve", {{"a", report.curve_a}, {"b", report.curve_b}}},
                     {"x", report.x},
                     {"prime_count", report.prime_count},
                     {"records", report.records}};
}

void from_json(const nlohmann::json& j, PrimeSweepReport& report) {
  report.curve_a = j.at("curve").at("a").get<std::int64_t>();
  report.curve_b = j.at("curve").at("b").get<std::int64_t>();
  report.x = j.at("x").get<std::uint64_t>();
  report.prime_count = j.at("prime_count").get<std::uint64_t>();
  report.records = j.at("records").get<std::vector<PrimeRecord>>();
}

}  // namespace frobtrace::experiments

namespace frobtrace::poly {

namespace {

SalemReason reason_from_string(const std::string& s) {
  for (auto r : {SalemReason::not_monic, SalemReason::degree_lt_4, SalemReason::odd_degree,
                 SalemReason::no_real_root_gt_1, SalemReason::conjugate_outside_disk,
                 SalemReason::no_conjugate_on_circle}) {
    if (to_string(r) == s) return r;
  }
  throw std::invalid_argument("unknown Salem reason: " + s);
}

}  // namespace

void to_json(nlohmann::json& j, const SalemVerdict& verdict) {
  std::vector<std::string> reasons;
  for (auto r : verdict.reasons) reasons.push_back(to_string(r));
  j = nlohmann::json{{"is_salem", verdict.is_salem},
                     {"loose_salem", verdict.loose_salem},
                     {"tau", verdict.tau ? nlohmann::json(*verdict.tau) : nlohmann::json(nullptr)},
                     {"reasons", reasons},
                     {"irreducibility_assumed", verdict.irreducibility_assumed}};
}

void from_json(const nlohmann::json& j, SalemVerdict& verdict) {
  verdict.is_salem = j.at("is_salem").get<bool>();
  verdict.loose_salem = j.at("loose_salem").get<bool>();
  verdict.tau = j.at("tau").is_null() ? std::nullopt : std::optional(j.at("tau").get<double>());
  verdict.reasons.clear();
  for (const auto& s : j.at("reasons")) verdict.reasons.push_back(reason_from_string(s.get<std::string>()));
  verdict.irreducibility_assumed = j.at("irreducibility_assumed").get<bool>();
}

}  // namespace frobtrace::poly
