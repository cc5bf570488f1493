#pragma once

#include <cstddef>
#include <string>

#include "lpv/vcreport.hpp"

namespace lpv {

enum class Format { Human, Machine };

inline constexpr std::size_t kDefaultReportLimit = 20;

/// Machine format: one `RESULT <check> <pass|fail> checked=<n>
/// violations=<m> frontier=<k>` line (with ` note="vacuous"` appended when a
/// pass checked nothing), then one canonically ordered `VIOLATION` line per
/// violation, up to `limit`; the RESULT counter stays exact.
std::string render_report(const VcReport& r, Format format,
                          std::size_t limit = kDefaultReportLimit);

}  // namespace lpv
