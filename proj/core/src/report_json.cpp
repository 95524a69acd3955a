#include "schlicht/report_json.hpp"

#include <cstdio>
#include <json.hpp>

namespace schlicht {
namespace {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

ordered point(Complex z) { return ordered::array({z.real(), z.imag()}); }

ordered radius_json(const RadiusReport& report) {
  ordered j;
  j["kind"] = to_string(report.kind);
  j["lower_bound"] = report.lower_bound;
  if (report.witness) {
    j["witness"] = {{"center", point(report.witness->center)},
                    {"radius", report.witness->radius},
                    {"schlicht", report.witness->schlicht}};
  } else {
    j["witness"] = nullptr;
  }
  j["constant_used"] = report.constant_used;
  j["conjectured_bound"] = report.conjectured_bound ? ordered(*report.conjectured_bound) : ordered(nullptr);
  j["function_label"] = report.function_label;
  j["truncated"] = report.truncated;
  if (report.certificate) {
    j["injectivity"] = {{"samples", report.certificate->samples},
                        {"max_round_trip", report.certificate->max_round_trip},
                        {"passed", report.certificate->passed}};
  }
  return j;
}

ordered profile_json(const DivergenceProfile& profile) {
  ordered pts = ordered::array();
  for (const auto& p : profile.points) pts.push_back({{"k", p.k}, {"t", p.t}, {"value", p.value}});
  return {{"points", pts}, {"exponent", profile.exponent}, {"halted", profile.halted}};
}

ordered limit_json(const LimitCheck& check) {
  return {{"value", point(check.value)}, {"expected", point(check.expected)}, {"error", check.error}};
}

std::string dump(const ordered& j) { return j.dump(2) + "\n"; }

std::string g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string to_string(RadiusKind kind) { return kind == RadiusKind::bloch ? "bloch" : "landau"; }

std::string radius_report_to_json(const RadiusReport& report) { return dump(radius_json(report)); }

std::string seminorm_to_json(const SeminormEstimate& estimate, const std::string& label) {
  ordered j;
  j["function_label"] = label;
  j["value"] = estimate.value;
  j["argmax"] = point(estimate.argmax);
  j["truncated"] = estimate.truncated;
  return dump(j);
}

std::string divergence_to_json(const DivergenceProfile& profile, const std::string& label) {
  ordered j;
  j["function_label"] = label;
  j.update(profile_json(profile));
  return dump(j);
}

std::string divergence_to_csv(const DivergenceProfile& profile) {
  std::string out = "k,t,value\n";
  for (const auto& p : profile.points) out += std::to_string(p.k) + "," + g17(p.t) + "," + g17(p.value) + "\n";
  return out;
}

std::string constants_to_json(const ConstantsTable& table) {
  ordered list = ordered::array();
  for (const auto& e : table.entries) {
    ordered j;
    j["name"] = e.name;
    j["description"] = e.description;
    j["lower"] = e.lower;
    j["upper"] = e.upper ? ordered(*e.upper) : ordered(nullptr);
    j["lower_text"] = e.lower_text;
    j["upper_text"] = e.upper_text;
    j["lower_citation"] = e.lower_citation;
    j["upper_citation"] = e.upper_citation;
    list.push_back(j);
  }
  return dump(ordered{{"constants", list}});
}

std::string refutation_to_json(const RefutationReport& report, double p) {
  ordered j = radius_json(report.radius);
  j["p"] = p;
  j["ratio"] = report.ratio;
  j["factorization"] = {{"disks", report.factorization.disks},
                        {"passed", report.factorization.passed},
                        {"scale", report.factorization.scale},
                        {"ok", report.factorization.ok()}};
  return dump(j);
}

std::string two_pole_to_json(const TwoPoleReport& report) {
  ordered j;
  j["case"] = report.case_number;
  j["p"] = report.p;
  j["mu"] = point(report.mu);
  if (report.preimages) {
    j["preimages"] = ordered::array({point(report.preimages->first), point(report.preimages->second)});
  }
  j["tilted"] = report.tilted;
  j["reflected"] = report.reflected;
  j["p_eff"] = report.p_eff;
  j["mu_eff"] = point(report.mu_eff);
  j["p1"] = report.p1;
  j["theta"] = report.theta;
  j["anchor"] = point(report.anchor);
  j["xi1"] = point(report.xi1);
  j["limits"] = {{"h_at_minus_one", limit_json(report.h_at_minus_one)},
                 {"h_at_xi1", limit_json(report.h_at_xi)},
                 {"H_at_p", limit_json(report.H_at_p)},
                 {"H_at_anchor", limit_json(report.H_at_anchor)}};
  j["pole_free"] = report.pole_free;
  j["growth"] = profile_json(report.growth);
  j["radius"] = radius_json(report.radius);
  return dump(j);
}

}  // namespace schlicht
