#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pathlab/config.hpp"
#include "pathlab/report.hpp"

namespace pathlab {

struct CaseInfo {
  std::string id;
  std::string summary;
};

/// Every registered case, sorted by id.
const std::vector<CaseInfo>& case_registry();

/// Runs one case. Throws UnknownIdError for an unregistered id. runtime_ms is
/// left at 0 unless `timings` is set, so reports stay byte-identical.
VerificationReport run_case(std::string_view id, const Config& config = {}, bool timings = false);

/// All cases, run concurrently, returned in id order.
std::vector<VerificationReport> run_all(const Config& config = {}, bool timings = false);

}  // namespace pathlab
