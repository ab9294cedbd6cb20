#pragma once

// JSON forms of the exact values and reports.  Exact numbers are emitted as
// decimal strings (arbitrary precision does not fit JSON numbers); factored
// values as arrays of {prime, num, den} records, sorted by prime.

#include <string>

#include <json.hpp>

#include "exact.hpp"
#include "invariants.hpp"
#include "structure.hpp"
#include "verifier.hpp"

namespace ordmean {

using nlohmann::json;

inline json to_json(const FactoredInteger& f) {
  json a = json::array();
  for (const auto& [p, e] : f.exponents()) a.push_back({{"p", p}, {"e", e.get_str()}});
  return a;
}

inline json to_json(const FactoredReal& v) {
  json a = json::array();
  for (const auto& [p, e] : v.exponents())
    a.push_back({{"prime", p}, {"num", e.get_num().get_str()}, {"den", e.get_den().get_str()}});
  return a;
}

inline json to_json(const BigRational& q) {
  return {{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

inline json to_json(const InvariantBundle& b, int digits = 3) {
  return {{"order", to_json(b.order)},
          {"psi", b.psi.get_str()},
          {"rho", to_json(b.rho)},
          {"psi_dd", to_json(b.psi_dd)},
          {"ell", to_json(b.ell)},
          {"decimals",
           {{"psi_dd", rational_to_decimal(b.psi_dd, digits).text},
            {"ell", to_decimal(b.ell, digits).text}}}};
}

inline json to_json(const StructureProfile& s) {
  json primes = json::array();
  for (const auto& r : s.primes)
    primes.push_back({{"p", r.p},
                      {"sylow_order", r.sylow_order},
                      {"sylow_normal", r.sylow_normal},
                      {"sylow_cyclic", r.sylow_cyclic},
                      {"core_p_order", r.core_p_order},
                      {"o_p_prime_order", r.o_p_prime_order},
                      {"p_nilpotent", r.p_nilpotent}});
  return {{"cyclic", s.cyclic},
          {"abelian", s.abelian},
          {"nilpotent", s.nilpotent},
          {"supersoluble", s.supersoluble},
          {"soluble", s.soluble},
          {"primes", primes}};
}

inline json to_json(const VerificationReport& report) {
  json results = json::array();
  for (const auto& r : report.results) {
    json item = {{"spec", r.spec}, {"status", status_name(r.status)}, {"details", r.details}};
    if (!r.predicate.empty()) {
      item["predicate"] = r.predicate;
      item["lhs"] = r.lhs;
      item["rhs"] = r.rhs;
    }
    results.push_back(std::move(item));
  }
  return {{"suite", report.suite},
          {"params", report.params},
          {"note", report.header_note},
          {"results", std::move(results)},
          {"equality_anomalies", report.equality_anomalies},
          {"summary",
           {{"results", report.results.size()},
            {"checked", report.checked},
            {"vacuous", report.vacuous},
            {"failed", report.failed},
            {"passed", report.passed()}}}};
}

}  // namespace ordmean
