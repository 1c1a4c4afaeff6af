#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace pathlab {

enum class Status { Pass, Fail, Inconclusive };

std::string_view to_string(Status s) noexcept;

using WitnessValue = std::variant<double, std::int64_t, std::string, bool>;

struct Claim {
  std::string text;
  Status status = Status::Fail;
  std::vector<std::pair<std::string, WitnessValue>> witnesses;  // in insertion order

  Claim& witness(std::string key, WitnessValue value) {
    witnesses.emplace_back(std::move(key), std::move(value));
    return *this;
  }
};

struct VerificationReport {
  std::string case_id;
  Status status = Status::Fail;
  std::vector<Claim> claims;
  std::string config_digest;
  std::int64_t runtime_ms = 0;
};

/// Fail if any claim fails, else inconclusive if any is, else pass.
Status aggregate(std::span<const Claim> claims) noexcept;

/// One report as a JSON object, keys in a fixed order.
std::string to_json(const VerificationReport& report, int indent = 2);

/// {"status": ..., "cases": [...]} for a list of reports.
std::string to_json(std::span<const VerificationReport> reports, int indent = 2);

/// Human-readable summary, one line per claim.
std::string to_text(const VerificationReport& report);

}  // namespace pathlab
