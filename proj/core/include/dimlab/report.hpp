#pragma once

#include <string>
#include <string_view>

#include "dimlab/alternating.hpp"
#include "dimlab/enumeration.hpp"

namespace dimlab {

inline constexpr std::string_view kCountsCsvHeader = "n,a,a1,a2,a3,delta,m4,source";
inline constexpr std::string_view kAltCsvHeader = "n,a_circ,a1_circ,a3_circ,delta_circ,m2_hat,source";

/// One CSV line without a trailing newline.
std::string csv_row(const CountReport& report);
std::string csv_row(const AltReport& report);

/// Inverse of csv_row. A "mixed" label is read back as delta, a1 and a3 from the
/// oracle and the rest from formulas. Throws ValidationError on malformed input or
/// rows that break a = a1 + a3, delta = a1 - a3, m4 = a + a2.
CountReport parse_count_row(std::string_view line);
AltReport parse_alt_row(std::string_view line);

}  // namespace dimlab
