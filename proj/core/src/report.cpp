#include <cstdint>
#include <cstdio>

#include <json.hpp>

#include "lnd/maubach.hpp"
#include "lnd/runner.hpp"

namespace lnd::dsl {

using lnd::to_string;

using Json = nlohmann::ordered_json;

std::string digest(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string report_json(const RunReport& r, std::string_view input_name,
                        std::string_view input_text, const RunOptions& opts) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["tool"] = "lndcheck";
  j["tool_version"] = tool_version();
  j["input"] = {{"name", std::string(input_name)},
                {"bytes", input_text.size()},
                {"fnv1a64", digest(input_text)}};
  j["options"] = {{"nmax", opts.nmax}, {"gb_steps", opts.gb_steps}};
  Json checks = Json::array();
  for (const auto& c : r.results) {
    Json w = Json::array();
    for (const auto& [k, v] : c.witnesses) w.push_back({{"key", k}, {"value", v}});
    checks.push_back({{"index", c.index},
                      {"line", c.line},
                      {"kind", c.kind},
                      {"name", c.name},
                      {"status", to_string(c.status)},
                      {"witnesses", std::move(w)},
                      {"message", c.message},
                      {"elapsed_ms", c.elapsed_ms}});
  }
  j["checks"] = std::move(checks);
  j["summary"] = {{"total", r.results.size()},
                  {"pass", r.count(Outcome::Pass)},
                  {"fail", r.count(Outcome::Fail)},
                  {"inconclusive", r.count(Outcome::Inconclusive)}};
  j["exit_code"] = r.exit_code();
  j["elapsed_ms"] = r.elapsed_ms;
  return j.dump(2) + "\n";
}

std::string maubach_json(unsigned b) {
  Lemma52Report rep = verify_lemma52(b);
  const MaubachResult& m = rep.result;
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["tool"] = "lndcheck";
  j["tool_version"] = tool_version();
  j["b"] = b;
  j["derivation"] = to_string(m.delta, "D'");
  j["alpha"] = {{"summation", to_string(m.alpha.summation)},
                {"closed_form", to_string(m.alpha.closed_form)},
                {"ratio", to_string(m.alpha.ratio)},
                {"agree", m.alpha.agree}};
  j["generators"] = {{"y", to_string(m.y)},
                     {"h", to_string(m.h)},
                     {"h'", to_string(m.hprime)},
                     {"h''", to_string(m.hdoubleprime)}};
  Json attempts = Json::array();
  for (const auto& a : m.attempts)
    attempts.push_back({{"reading", to_string(a.reading)},
                        {"c_h", to_string(a.c_h)},
                        {"c_h'", to_string(a.c_hprime)},
                        {"residue_mod_y", to_string(a.residue)},
                        {"y_power", a.y_power},
                        {"quotient_in_kernel", a.quotient_in_kernel},
                        {"succeeded", a.succeeded}});
  j["readings"] = std::move(attempts);
  j["reading"] = m.reading ? Json(to_string(*m.reading)) : Json(nullptr);
  j["n"] = m.n;
  const MaubachChecks& c = m.checks;
  j["checks"] = {{"h_in_kernel", c.h_in_kernel},
                 {"h'_in_kernel", c.hprime_in_kernel},
                 {"h''_in_kernel", c.hdoubleprime_in_kernel},
                 {"exactly_one_reading", c.exactly_one_reading},
                 {"n_at_most_2b", c.n_at_most_2b},
                 {"n_maximal", c.n_maximal},
                 {"residue_identity", c.residue_identity},
                 {"matches_printed_generators", c.matches_printed_generators},
                 {"theta_matches_printed", c.theta_matches_printed}};
  Json comps = Json::object();
  for (const auto& ic : rep.in_yz)
    comps[ic.name] = ic.constant ? Json(to_string(*ic.constant)) : Json(nullptr);
  j["constant_mod_yz"] = std::move(comps);
  j["h''_mod_z_in_y"] = rep.mod_z_in_y;
  j["diagnostics"] = m.diagnostics;
  j["ok"] = rep.ok;
  return j.dump(2) + "\n";
}

}  // namespace lnd::dsl
