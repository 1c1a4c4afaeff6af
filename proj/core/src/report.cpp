#include "pathlab/report.hpp"

#include <algorithm>
#include <cstdio>

#include "json.hpp"

namespace pathlab {
namespace {

using Json = nlohmann::ordered_json;

Json to_object(const VerificationReport& report) {
  Json claims = Json::array();
  for (const auto& claim : report.claims) {
    Json witnesses = Json::object();
    for (const auto& [key, value] : claim.witnesses) {
      std::visit([&](const auto& v) { witnesses[key] = v; }, value);
    }
    claims.push_back({{"text", claim.text},
                      {"status", std::string(to_string(claim.status))},
                      {"witnesses", std::move(witnesses)}});
  }
  return Json{{"case_id", report.case_id},
              {"status", std::string(to_string(report.status))},
              {"claims", std::move(claims)},
              {"config_digest", report.config_digest},
              {"runtime_ms", report.runtime_ms}};
}

std::string format_value(const WitnessValue& value) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          char buf[32];
          std::snprintf(buf, sizeof buf, "%.10g", v);
          return buf;
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else if constexpr (std::is_same_v<T, std::string>) {
          return v;
        } else {
          return std::to_string(v);
        }
      },
      value);
}

}  // namespace

std::string_view to_string(Status s) noexcept {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Inconclusive: return "inconclusive";
  }
  return "fail";
}

Status aggregate(std::span<const Claim> claims) noexcept {
  if (claims.empty()) return Status::Inconclusive;
  const auto has = [&](Status s) {
    return std::any_of(claims.begin(), claims.end(), [s](const Claim& c) { return c.status == s; });
  };
  if (has(Status::Fail)) return Status::Fail;
  if (has(Status::Inconclusive)) return Status::Inconclusive;
  return Status::Pass;
}

std::string to_json(const VerificationReport& report, int indent) {
  return to_object(report).dump(indent) + "\n";
}

std::string to_json(std::span<const VerificationReport> reports, int indent) {
  Json cases = Json::array();
  Status overall = Status::Pass;
  for (const auto& r : reports) {
    cases.push_back(to_object(r));
    if (r.status == Status::Fail) {
      overall = Status::Fail;
    } else if (r.status == Status::Inconclusive && overall == Status::Pass) {
      overall = Status::Inconclusive;
    }
  }
  return Json{{"status", std::string(to_string(overall))}, {"cases", std::move(cases)}}.dump(indent) +
         "\n";
}

std::string to_text(const VerificationReport& report) {
  std::string out = report.case_id + ": " + std::string(to_string(report.status)) + "\n";
  for (const auto& claim : report.claims) {
    out += "  [" + std::string(to_string(claim.status)) + "] " + claim.text;
    if (!claim.witnesses.empty()) {
      out += " (";
      for (std::size_t i = 0; i < claim.witnesses.size(); ++i) {
        if (i) out += ", ";
        out += claim.witnesses[i].first + "=" + format_value(claim.witnesses[i].second);
      }
      out += ")";
    }
    out += "\n";
  }
  return out;
}

}  // namespace pathlab
