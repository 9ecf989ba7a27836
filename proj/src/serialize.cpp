#include "vreg/serialize.hpp"

#include <json.hpp>

namespace vreg {

namespace {

using Json = nlohmann::ordered_json;

template <typename Range>
Json string_array(const Range& values) {
  Json arr = Json::array();
  for (const auto& v : values) arr.push_back(std::to_string(v));
  return arr;
}

Json diff_point(const DiffPoint& d) {
  return Json{{"n", std::to_string(d.n)}, {"diff", std::to_string(d.diff)}};
}

}  // namespace

std::string to_json(const WitnessReport& report) {
  Json j;
  j["kind"] = std::string(to_string(report.kind));
  j["witness_prime"] = std::to_string(report.witness_prime);
  j["modulus"] = std::to_string(report.modulus);
  j["residue"] = std::to_string(report.residue);
  j["steps_tried"] = std::to_string(report.steps_tried);
  Json aux = Json::object();
  for (const auto& [k, v] : report.auxiliary) aux[k] = v;
  j["auxiliary"] = std::move(aux);
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    checks.push_back(Json{{"description", c.description},
                          {"lhs", c.lhs},
                          {"relation", c.relation},
                          {"rhs", c.rhs},
                          {"pass", c.pass}});
  }
  j["checks"] = std::move(checks);
  return j.dump();
}

std::string to_json(const DensityApproximation& approx) {
  Json j;
  j["kind"] = std::string(to_string(approx.kind));
  j["delta"] = approx.delta;
  j["selected_primes"] = string_array(approx.selected_primes);
  j["log_product"] = approx.log_product;
  j["achieved"] = approx.achieved;
  j["error"] = approx.error;
  j["gap_bound"] = approx.gap_bound;
  j["prime_limit"] = std::to_string(approx.prime_limit);
  j["limit_saturated"] = approx.limit_saturated;
  j["exact_hit"] = approx.exact_hit;
  if (approx.exact_ratio) {
    j["exact_ratio"] = Json{{"num", format_u128(approx.exact_ratio->num())},
                            {"den", format_u128(approx.exact_ratio->den())}};
  }
  return j.dump();
}

std::string to_json(const RangeScanResult& result) {
  Json j;
  j["lo"] = std::to_string(result.lo);
  j["hi"] = std::to_string(result.hi);
  j["a_count"] = std::to_string(result.a_count);
  j["b_count"] = std::to_string(result.b_count);
  j["equal_count"] = std::to_string(result.equal_points.size());
  j["lists_stored"] = result.lists_stored;
  if (result.lists_stored) {
    j["a_members"] = string_array(result.a_members);
    j["b_members"] = string_array(result.b_members);
  }
  j["equal_points"] = string_array(result.equal_points);
  j["max_diff"] = diff_point(result.max_diff);
  j["min_diff"] = diff_point(result.min_diff);
  j["violations"] = result.violations;
  return j.dump();
}

}  // namespace vreg
