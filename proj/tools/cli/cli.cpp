#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "frobtrace/densities.hpp"
#include "frobtrace/ec_core.hpp"
#include "frobtrace/equidist.hpp"
#include "frobtrace/error.hpp"
#include "frobtrace/experiments.hpp"
#include "frobtrace/polyroots.hpp"
#include "report_json.hpp"
#include "svg.hpp"

namespace frobtrace::cli {
namespace {

using nlohmann::json;

class ArgumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Everything a subcommand may read. Numeric fields are validated by the
// handler before any computation starts.
struct RunConfig {
  std::string subcommand;
  std::string curve;
  std::string poly;
  std::optional<int> cyclotomic;
  long long shift = 0;
  std::uint64_t p = 0;
  std::uint64_t n = 0;
  std::uint64_t x = 0;
  std::int64_t k = 1;
  std::uint32_t cutoff = 10;
  std::uint32_t bins = 100;
  double lo = -1.0;
  double hi = 1.0;
  double a = -1.0;
  double b = 1.0;
  std::optional<std::int64_t> a1;
  std::optional<std::int64_t> r;
  std::string model = "arcsine";
  int d = 12;
  std::string ladder;
  std::string source = "alpha";
  std::string what = "pdf";
  std::string overlay;
  int digits = 50;
  bool unit = false;
  bool exclude_atoms = false;
  bool progress = false;
  std::string format;
  std::string output;
  unsigned threads = 1;
};

std::string num(double v) { return fmt::format("{}", v); }

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string resolve_format(const RunConfig& cfg, const std::string& fallback,
                           std::initializer_list<const char*> allowed) {
  const std::string fmt = cfg.format.empty() ? fallback : cfg.format;
  for (const char* a : allowed) {
    if (fmt == a) return fmt;
  }
  throw ArgumentError("subcommand '" + cfg.subcommand + "' does not support --format " + fmt);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

std::int64_t parse_int(const std::string& s, const char* what) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw ArgumentError(std::string("malformed integer in ") + what + ": '" + s + "'");
  }
  if (used != s.size()) throw ArgumentError(std::string("malformed integer in ") + what + ": '" + s + "'");
  return v;
}

ec::CurveSpec parse_curve(const RunConfig& cfg) {
  if (cfg.curve.empty()) throw ArgumentError("--curve A,B is required");
  const auto parts = split(cfg.curve, ',');
  if (parts.size() != 2) throw ArgumentError("--curve expects two integers A,B");
  return ec::CurveSpec(parse_int(parts[0], "--curve"), parse_int(parts[1], "--curve"));
}

std::vector<std::uint64_t> parse_ladder(const RunConfig& cfg) {
  if (cfg.ladder.empty()) throw ArgumentError("--ladder is required");
  std::vector<std::uint64_t> out;
  for (const auto& part : split(cfg.ladder, ',')) {
    const std::int64_t v = parse_int(part, "--ladder");
    if (v < 1) throw PreconditionError("ladder entries must be >= 1");
    out.push_back(static_cast<std::uint64_t>(v));
  }
  return out;
}

poly::IntPolynomial parse_poly(const RunConfig& cfg) {
  if (cfg.cyclotomic && !cfg.poly.empty()) throw ArgumentError("use either --poly or --cyclotomic, not both");
  if (cfg.cyclotomic) return poly::shift_constant(poly::cyclotomic(*cfg.cyclotomic), cfg.shift);
  if (cfg.poly.empty()) throw ArgumentError("--poly or --cyclotomic is required");
  std::vector<long long> coeffs;
  for (const auto& part : split(cfg.poly, ',')) coeffs.push_back(parse_int(part, "--poly"));
  return poly::shift_constant(poly::IntPolynomial::from_descending(coeffs), cfg.shift);
}

density::DistributionModel parse_model(const std::string& name, int d) {
  if (name == "uniform") return density::DistributionModel::uniform(-1.0, 1.0);
  if (name == "arcsine") return density::DistributionModel::arcsine();
  if (name == "gen-arcsine") return density::DistributionModel::gen_arcsine(d);
  if (name == "semicircle") return density::DistributionModel::semicircle();
  if (name == "cm-mixture") return density::DistributionModel::cm_mixture();
  throw ArgumentError("unknown model '" + name + "'");
}

void require_prime(std::uint64_t p) {
  if (p <= 3 || !ec::is_prime(p)) throw PreconditionError("-p must be a prime greater than 3");
}

void require_count(std::uint64_t n, std::uint64_t ceiling) {
  if (n < 1) throw PreconditionError("-N must be >= 1");
  if (n > ceiling) throw ResourceError("-N = " + std::to_string(n) + " exceeds ceiling " + std::to_string(ceiling));
}

void require_bound(std::uint64_t x) {
  if (x > experiments::kMaxSweepBound) throw ResourceError("-X exceeds the sweep ceiling 1e6");
}

ec::FrobeniusAngle curve_angle(const RunConfig& cfg) {
  const ec::CurveSpec curve = parse_curve(cfg);
  require_prime(cfg.p);
  const ec::PointCount pc = ec::count_points(curve, cfg.p);
  return ec::FrobeniusAngle(pc.trace, cfg.p);
}

RealSequence alpha_sequence(const RunConfig& cfg) {
  const ec::CurveSpec curve = parse_curve(cfg);
  require_prime(cfg.p);
  require_count(cfg.n, ec::kMaxSequenceLength);
  const ec::PointCount pc = ec::count_points(curve, cfg.p);
  return ec::normalized_trace_sequence(ec::FrobeniusAngle(pc.trace, cfg.p), cfg.n);
}

experiments::PrimeSweepReport sweep_for(const RunConfig& cfg, std::ostream& err) {
  const ec::CurveSpec curve = parse_curve(cfg);
  require_bound(cfg.x);
  experiments::ProgressFn progress;
  if (cfg.progress) {
    progress = [&err](std::uint64_t done, std::uint64_t total) {
      err << "sweep: " << done << "/" << total << " primes\n";
    };
  }
  return experiments::prime_sweep(curve, cfg.x, cfg.threads, progress);
}

std::vector<std::pair<double, double>> model_curve(const density::DistributionModel& model, bool cdf_curve,
                                                   double lo, double hi) {
  constexpr int kGrid = 512;
  std::vector<std::pair<double, double>> pts;
  for (int i = 0; i < kGrid; ++i) {
    const double t = lo + (hi - lo) * (i + 0.5) / kGrid;
    if (!model.domain().contains(t)) continue;
    pts.emplace_back(t, cdf_curve ? density::cdf(model, t) : density::pdf(model, t));
  }
  return pts;
}

// ---- subcommands ---------------------------------------------------------

std::string cmd_trace_seq(const RunConfig& cfg, std::ostream&) {
  const std::string fmt = resolve_format(cfg, "csv", {"csv", "json"});
  const RealSequence seq = alpha_sequence(cfg);
  if (fmt == "json") return dump(json(seq));
  std::string out = "n,alpha_n\n";
  for (std::size_t i = 0; i < seq.size(); ++i) out += fmt::format("{},{}\n", i + 1, seq[i]);
  return out;
}

std::string cmd_point_count(const RunConfig& cfg, std::ostream&) {
  const std::string fmt = resolve_format(cfg, "json", {"csv", "json"});
  const ec::CurveSpec curve = parse_curve(cfg);
  require_prime(cfg.p);
  const ec::PointCount pc = ec::count_points(curve, cfg.p);
  if (fmt == "json") return dump(json(pc));
  return fmt::format("p,count,trace,character_sum\n{},{},{},{}\n", pc.p, pc.count, pc.trace, pc.character_sum);
}

std::string cmd_angle(const RunConfig& cfg, std::ostream&) {
  const std::string fmt = resolve_format(cfg, "json", {"csv", "json"});
  if (cfg.digits < 1 || cfg.digits > 70) throw PreconditionError("--digits must be in [1, 70]");
  if (cfg.a1 && !ec::is_prime(cfg.p)) throw PreconditionError("-p must be prime");
  const ec::FrobeniusAngle angle = cfg.a1 ? ec::FrobeniusAngle(*cfg.a1, cfg.p) : curve_angle(cfg);
  const std::string theta = angle.theta_string(cfg.digits);
  if (fmt == "json") {
    return dump(json{{"a1", angle.a1()},
                     {"p", angle.p()},
                     {"theta", theta},
                     {"theta_double", angle.theta_double()},
                     {"err_bound", angle.err_bound()}});
  }
  return fmt::format("a1,p,theta,err_bound\n{},{},{},{}\n", angle.a1(), angle.p(), theta, num(angle.err_bound()));
}

std::string cmd_weyl(const RunConfig& cfg, std::ostream&) {
  const std::string fmt = resolve_format(cfg, "json", {"csv", "json"});
  if (cfg.k == 0) throw PreconditionError("-k must be nonzero");
  RealSequence seq = alpha_sequence(cfg);
  if (cfg.unit) seq = equidist::map_to_unit(seq);
  const equidist::WeylSumReport rep = equidist::weyl_sum(seq, cfg.k);
  if (fmt == "json") return dump(json(rep));
  return fmt::format("k,n,sum_real,sum_imag,modulus\n{},{},{},{},{}\n", rep.k, rep.n, num(rep.sum_real),
                     num(rep.sum_imag), num(rep.modulus));
}

std::string cmd_summatory(const RunConfig& cfg, std::ostream&) {
  const std::string fmt = resolve_format(cfg, "csv", {"csv", "json"});
  if (cfg.k == 0) throw PreconditionError("-k must be nonzero");
  const auto ladder = parse_ladder(cfg);
  const ec::FrobeniusAngle angle = curve_angle(cfg);
  const auto points = experiments::summatory_check(angle, cfg.k, ladder);
  if (fmt == "json") {
    return dump(json{{"k", cfg.k}, {"a1", angle.a1()}, {"p", angle.p()}, {"points", points}});
  }
  std::string out = "x,sum_real,sum_imag,prediction,relative_gap\n";
  for (const auto& pt : points) {
    out += fmt::format("{},{},{},{},{}\n", pt.x, num(pt.sum_real), num(pt.sum_imag), num(pt.prediction),
                       num(pt.relative_gap));
  }
  return out;
}

std::string cmd_discrepancy(const RunConfig& cfg, std::ostream&) {
  const std::string fmt = resolve_format(cfg, "csv", {"csv", "json"});
  const auto ladder = parse_ladder(cfg);
  if (cfg.cutoff < 1) throw PreconditionError("-H must be >= 1");
  if (ladder.back() > ec::kMaxSequenceLength) throw ResourceError("ladder exceeds the sequence ceiling");
  experiments::SequenceSource source;
  if (cfg.source == "alpha") {
    source = experiments::unit_alpha_source(curve_angle(cfg));
  } else if (cfg.source == "golden") {
    source = experiments::golden_rotation_source();
  } else {
    throw ArgumentError("--source must be alpha or golden");
  }
  const auto result = experiments::discrepancy_ladder(source, ladder, cfg.cutoff);
  if (fmt == "json") {
    json j{{"source", cfg.source}, {"cutoff", cfg.cutoff}, {"points", result.points}};
    j["trend_exponent"] = result.trend ? json(result.trend->exponent) : json(nullptr);
    j["trend_residual"] = result.trend ? json(result.trend->residual) : json(nullptr);
    return dump(j);
  }
  std::string out = "N,d_star,et_bound\n";
  for (const auto& pt : result.points) out += fmt::format("{},{},{}\n", pt.n, num(pt.d_star), num(pt.et_bound));
  return out;
}

std::string cmd_ks(const RunConfig& cfg, std::ostream& err) {
  const std::string fmt = resolve_format(cfg, "json", {"csv", "json"});
  const auto model = parse_model(cfg.model, cfg.d);
  RealSequence seq;
  if (cfg.source == "alpha") {
    seq = alpha_sequence(cfg);
  } else if (cfg.source == "sweep") {
    seq = experiments::alpha1_sequence(sweep_for(cfg, err));
  } else {
    throw ArgumentError("--source must be alpha or sweep");
  }
  const double ks = equidist::ks_distance(seq, model);
  if (fmt == "json") return dump(json{{"model", model.name()}, {"n", seq.size()}, {"ks_distance", ks}});
  return fmt::format("model,n,ks_distance\n{},{},{}\n", model.name(), seq.size(), num(ks));
}

std::string cmd_histogram(const RunConfig& cfg, std::ostream&) {
  const std::string fmt = resolve_format(cfg, "csv", {"csv", "json", "svg"});
  if (cfg.bins < 1) throw PreconditionError("--bins must be >= 1");
  if (!(cfg.lo < cfg.hi)) throw PreconditionError("--lo must be below --hi");
  const RealSequence seq = alpha_sequence(cfg);
  const auto hist = equidist::histogram(seq, cfg.bins, cfg.lo, cfg.hi);
  if (fmt == "json") return dump(json(hist));
  if (fmt == "svg") {
    std::vector<std::pair<double, double>> overlay;
    if (!cfg.overlay.empty()) overlay = model_curve(parse_model(cfg.overlay, cfg.d), false, cfg.lo, cfg.hi);
    return histogram_svg(hist, "alpha_n histogram, N = " + std::to_string(seq.size()), overlay);
  }
  std::string out = "bin_lo,bin_hi,count\n";
  for (std::size_t i = 0; i < hist.counts.size(); ++i) {
    out += fmt::format("{},{},{}\n", num(hist.bin_edges[i]), num(hist.bin_edges[i + 1]), hist.counts[i]);
  }
  return out;
}

std::string cmd_density(const RunConfig& cfg, std::ostream&) {
  const std::string fmt = resolve_format(cfg, "svg", {"csv", "json", "svg"});
  if (cfg.what != "pdf" && cfg.what != "cdf") throw ArgumentError("--what must be pdf or cdf");
  const auto model = parse_model(cfg.model, cfg.d);
  const bool is_cdf = cfg.what == "cdf";
  const auto& dom = model.domain();
  const auto pts = model_curve(model, is_cdf, dom.lo, dom.hi);
  if (fmt == "svg") {
    double top = is_cdf ? 1.0 : 0.0;
    if (!is_cdf) {
      for (const auto& pt : pts) top = std::max(top, std::min(pt.second, 3.0));
    }
    const double pad = (dom.hi - dom.lo) / 4;
    std::string title = model.name() + " " + cfg.what;
    if (model.kind() == density::ModelKind::gen_arcsine) title += ", d = " + std::to_string(model.degree());
    SvgPlot plot(dom.lo - pad, dom.hi + pad, 0.0, std::ceil(top * 1.1 * 2) / 2, title);
    plot.add_polyline(pts, "#08519c");
    return plot.str();
  }
  if (fmt == "json") {
    json arr = json::array();
    for (const auto& [t, v] : pts) arr.push_back({t, v});
    return dump(json{{"model", model.name()}, {"d", model.degree()}, {"what", cfg.what}, {"points", arr}});
  }
  std::string out = "t," + cfg.what + "\n";
  for (const auto& [t, v] : pts) out += fmt::format("{},{}\n", num(t), num(v));
  return out;
}

std::string cmd_salem(const RunConfig& cfg, std::ostream&) {
  const std::string fmt = resolve_format(cfg, "json", {"csv", "json", "svg"});
  const poly::IntPolynomial f = parse_poly(cfg);
  if (cfg.n > 10'000'000) throw ResourceError("-N exceeds 1e7");
  if ((fmt == "csv" || fmt == "svg") && cfg.n < 1) throw PreconditionError("-N >= 1 is needed for the mod-1 sequence");

  std::optional<poly::PowerMod1Result> mod1;
  if (cfg.n >= 1) mod1 = poly::power_mod1_sequence(f, cfg.n);

  if (fmt == "csv") {
    std::string out = "n,frac_power\n";
    for (std::size_t i = 0; i < mod1->sequence.size(); ++i) out += fmt::format("{},{}\n", i + 1, mod1->sequence[i]);
    return out;
  }
  if (fmt == "svg") {
    const auto hist = equidist::histogram(mod1->sequence, 20, 0.0, 1.0);
    return histogram_svg(hist, "frac(alpha^n), " + f.to_string());
  }
  const poly::SalemVerdict verdict = poly::salem_classify(f);
  const poly::RootSet roots = poly::find_roots(f);
  json jroots = json::array();
  for (const auto& z : roots.roots) jroots.push_back({z.real(), z.imag()});
  json j{{"polynomial", f.to_string()}, {"verdict", verdict}, {"roots", jroots}, {"residual_bound", roots.residual_bound}};
  if (mod1) {
    const auto hist = equidist::histogram(mod1->sequence, 20, 0.0, 1.0);
    const auto nonempty = std::count_if(hist.counts.begin(), hist.counts.end(), [](auto c) { return c > 0; });
    j["mod1"] = {{"requested", mod1->requested},
                 {"certified_length", mod1->certified_length},
                 {"dominant_root", mod1->dominant_root},
                 {"ks_vs_uniform", equidist::ks_distance(mod1->sequence, density::DistributionModel::uniform(0.0, 1.0))},
                 {"nonempty_bins_of_20", nonempty}};
  }
  return dump(j);
}

std::string cmd_power_sums(const RunConfig& cfg, std::ostream&) {
  const std::string fmt = resolve_format(cfg, "csv", {"csv", "json"});
  const poly::IntPolynomial f = parse_poly(cfg);
  require_count(cfg.n, 100'000);
  const auto sums = poly::newton_power_sums(f, cfg.n);
  if (fmt == "json") {
    std::vector<std::string> text;
    for (const auto& s : sums) text.push_back(s.str());
    return dump(json{{"polynomial", f.to_string()}, {"power_sums", text}});
  }
  std::string out = "n,s_n\n";
  for (std::size_t i = 0; i < sums.size(); ++i) out += fmt::format("{},{}\n", i, sums[i].str());
  return out;
}

std::string cmd_sweep(const RunConfig& cfg, std::ostream& err) {
  const std::string fmt = resolve_format(cfg, "csv", {"csv", "json"});
  const auto report = sweep_for(cfg, err);
  if (fmt == "json") return dump(json(report));
  std::string out = "p,a1,alpha1,supersingular\n";
  for (const auto& rec : report.records) {
    if (!rec.good_reduction) continue;
    out += fmt::format("{},{},{},{}\n", rec.p, *rec.a1, num(*rec.alpha1), rec.supersingular ? 1 : 0);
  }
  return out;
}

std::string cmd_sato_tate(const RunConfig& cfg, std::ostream& err) {
  const std::string fmt = resolve_format(cfg, "json", {"csv", "json"});
  const auto model = parse_model(cfg.model, cfg.d);
  if (!(cfg.a >= -1.0 && cfg.a < cfg.b && cfg.b <= 1.0)) throw PreconditionError("need -1 <= --a < --b <= 1");
  const auto report = sweep_for(cfg, err);
  const auto res = experiments::sato_tate_test(report, cfg.a, cfg.b, model, cfg.exclude_atoms);
  const double ks = equidist::ks_distance(experiments::alpha1_sequence(report), model);
  if (fmt == "json") {
    json j = res;
    j["model"] = model.name();
    j["prime_count"] = report.prime_count;
    j["ks_distance"] = ks;
    return dump(j);
  }
  return fmt::format("model,a,b,empirical,predicted,gap,ks_distance\n{},{},{},{},{},{},{}\n", model.name(),
                     num(res.a), num(res.b), num(res.empirical), num(res.predicted), num(res.gap), num(ks));
}

std::string cmd_lang_trotter(const RunConfig& cfg, std::ostream& err) {
  const std::string fmt = resolve_format(cfg, "csv", {"csv", "json"});
  const auto report = sweep_for(cfg, err);
  std::vector<experiments::LangTrotterReport> rows;
  if (cfg.r) {
    rows.push_back(experiments::lang_trotter_counts(report, *cfg.r));
  } else {
    const auto span = static_cast<std::int64_t>(std::floor(2.0 * std::sqrt(static_cast<double>(cfg.x))));
    for (std::int64_t r = -span; r <= span; ++r) rows.push_back(experiments::lang_trotter_counts(report, r));
  }
  if (fmt == "json") {
    if (cfg.r) return dump(json(rows.front()));
    return dump(json{{"x", cfg.x}, {"reports", rows}});
  }
  std::string out = "r,x,count,ratio\n";
  for (const auto& row : rows) out += fmt::format("{},{},{},{}\n", row.r, row.x, row.count, num(row.ratio));
  return out;
}

std::string cmd_fixed_prime(const RunConfig& cfg, std::ostream&) {
  const std::string fmt = resolve_format(cfg, "json", {"json", "svg"});
  const ec::CurveSpec curve = parse_curve(cfg);
  require_prime(cfg.p);
  require_count(cfg.n, experiments::kMaxFixedPrimeLength);
  if (cfg.bins < 1) throw PreconditionError("--bins must be >= 1");
  const auto report = experiments::fixed_prime_distribution(curve, cfg.p, cfg.n, cfg.bins);
  if (fmt == "svg") {
    const auto overlay = model_curve(density::DistributionModel::arcsine(), false, -1.0, 1.0);
    return histogram_svg(report.histogram,
                         fmt::format("alpha_n at p = {}, N = {} (arcsine overlay)", report.p, report.n), overlay);
  }
  return dump(json(report));
}

using Handler = std::function<std::string(const RunConfig&, std::ostream&)>;

void write_output(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output.empty() || cfg.output == "-") {
    out << text;
    out.flush();
    return;
  }
  std::ofstream file(cfg.output, std::ios::binary | std::ios::trunc);
  if (!file) throw ArgumentError("cannot open output path '" + cfg.output + "' for writing");
  file << text;
  file.close();
  if (!file) throw ArgumentError("failed writing output path '" + cfg.output + "'");
}

int report_error(std::ostream& err, const char* kind, const std::string& message, int code) {
  err << json{{"error", kind}, {"message", message}, {"exit_code", code}}.dump() << "\n";
  return code;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"frobtrace: Frobenius trace sequences, equidistribution diagnostics and density laws"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json", "svg"}));
  app.add_option("-o,--output", cfg.output, "Output path (default: standard output)");
  app.add_option("--threads", cfg.threads, "Worker threads for prime sweeps")->check(CLI::Range(1u, 256u));
  app.add_flag("--progress", cfg.progress, "Report sweep progress on standard error");

  std::map<std::string, Handler> handlers;
  auto sub = [&](const char* name, const char* help, Handler h) {
    handlers[name] = std::move(h);
    CLI::App* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };
  auto curve_opt = [&](CLI::App* s) { s->add_option("--curve", cfg.curve, "Coefficients A,B of y^2 = x^3 + Ax + B"); };
  auto prime_opt = [&](CLI::App* s) { s->add_option("-p,--prime", cfg.p, "Prime p > 3"); };
  auto count_opt = [&](CLI::App* s) { s->add_option("-N,--count", cfg.n, "Sequence length"); };
  auto bound_opt = [&](CLI::App* s) { s->add_option("-X,--bound", cfg.x, "Prime bound X"); };
  auto model_opt = [&](CLI::App* s) {
    s->add_option("--model", cfg.model, "uniform | arcsine | gen-arcsine | semicircle | cm-mixture");
    s->add_option("--d", cfg.d, "Degree parameter of gen-arcsine");
  };
  auto poly_opt = [&](CLI::App* s) {
    s->add_option("--poly", cfg.poly, "Integer coefficients, leading first, comma separated");
    s->add_option("--cyclotomic", cfg.cyclotomic, "Use the n-th cyclotomic polynomial");
    s->add_option("--shift", cfg.shift, "Constant added to the polynomial");
  };

  auto* s = sub("trace-seq", "Normalized traces alpha_n = cos(n theta)", cmd_trace_seq);
  curve_opt(s), prime_opt(s), count_opt(s);
  s = sub("point-count", "Exact #E(F_p) and trace", cmd_point_count);
  curve_opt(s), prime_opt(s);
  s = sub("angle", "Frobenius angle in extended precision", cmd_angle);
  curve_opt(s), prime_opt(s);
  s->add_option("--a1", cfg.a1, "Trace a1 (instead of --curve)");
  s->add_option("--digits", cfg.digits, "Digits after the point");
  s = sub("weyl", "Weyl sum of alpha_n at frequency k", cmd_weyl);
  curve_opt(s), prime_opt(s), count_opt(s);
  s->add_option("-k,--frequency", cfg.k, "Nonzero frequency");
  s->add_flag("--unit", cfg.unit, "Map alpha_n to [0, 1] first");
  s = sub("summatory", "Partial Weyl sums against J0(2 pi k) x", cmd_summatory);
  curve_opt(s), prime_opt(s);
  s->add_option("-k,--frequency", cfg.k, "Nonzero frequency");
  s->add_option("--ladder", cfg.ladder, "Ascending comma-separated x values");
  s = sub("discrepancy", "Star discrepancy and Erdos-Turan bound over a ladder", cmd_discrepancy);
  curve_opt(s), prime_opt(s);
  s->add_option("--source", cfg.source, "alpha | golden");
  s->add_option("--ladder", cfg.ladder, "Ascending comma-separated N values");
  s->add_option("-H,--cutoff", cfg.cutoff, "Erdos-Turan frequency cutoff");
  s = sub("ks", "Kolmogorov-Smirnov distance to a model", cmd_ks);
  curve_opt(s), prime_opt(s), count_opt(s), bound_opt(s), model_opt(s);
  s->add_option("--source", cfg.source, "alpha | sweep");
  s = sub("histogram", "Histogram of alpha_n", cmd_histogram);
  curve_opt(s), prime_opt(s), count_opt(s);
  s->add_option("--bins", cfg.bins, "Number of bins");
  s->add_option("--lo", cfg.lo, "Lower edge");
  s->add_option("--hi", cfg.hi, "Upper edge");
  s->add_option("--overlay", cfg.overlay, "Model density drawn over the SVG bars");
  s->add_option("--d", cfg.d, "Degree parameter of a gen-arcsine overlay");
  s = sub("density", "pdf or cdf curve of a model on a 512-point grid", cmd_density);
  model_opt(s);
  s->add_option("--what", cfg.what, "pdf | cdf");
  s = sub("salem", "Salem classification and mod-1 power sequence", cmd_salem);
  poly_opt(s), count_opt(s);
  s = sub("power-sums", "Exact Newton power sums", cmd_power_sums);
  poly_opt(s), count_opt(s);
  s = sub("sweep", "Traces over all primes up to X", cmd_sweep);
  curve_opt(s), bound_opt(s);
  s = sub("sato-tate", "Interval test of alpha_1 over primes against a model", cmd_sato_tate);
  curve_opt(s), bound_opt(s);
  s->add_option("--model", cfg.model, "Reference model")->default_str("semicircle");
  s->add_option("--d", cfg.d, "Degree parameter of gen-arcsine");
  s->add_option("--a", cfg.a, "Interval start");
  s->add_option("--b", cfg.b, "Interval end");
  s->add_flag("--exclude-atoms", cfg.exclude_atoms, "Compare the continuous part only");
  s = sub("lang-trotter", "Counts of primes with a1 = r", cmd_lang_trotter);
  curve_opt(s), bound_opt(s);
  s->add_option("-r,--trace", cfg.r, "Target trace (all r in the Hasse range if omitted)");
  s = sub("fixed-prime", "Distribution of alpha_n at one prime", cmd_fixed_prime);
  curve_opt(s), prime_opt(s), count_opt(s);
  s->add_option("--bins", cfg.bins, "Histogram bins");

  // sato-tate defaults to the semicircle law unless --model is given.
  std::string sato_model_default = "semicircle";

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    return report_error(err, "argument", e.what(), kArgumentError);
  }

  for (const auto* chosen : app.get_subcommands()) cfg.subcommand = chosen->get_name();
  if (cfg.subcommand == "sato-tate" && app.get_subcommand("sato-tate")->count("--model") == 0) {
    cfg.model = sato_model_default;
  }

  try {
    const std::string text = handlers.at(cfg.subcommand)(cfg, err);
    write_output(cfg, text, out);
    return kSuccess;
  } catch (const ArgumentError& e) {
    return report_error(err, "argument", e.what(), kArgumentError);
  } catch (const PreconditionError& e) {
    return report_error(err, "precondition", e.what(), kPreconditionViolation);
  } catch (const ResourceError& e) {
    return report_error(err, "resource", e.what(), kResourceCeiling);
  } catch (const NumericError& e) {
    return report_error(err, "numeric", e.what(), kNumericFailure);
  } catch (const std::exception& e) {
    return report_error(err, "internal", e.what(), kNumericFailure);
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"frobtrace"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace frobtrace::cli
