#pragma once

// Numerical adjudication of misprints and internal conflicts in the source
// formulas. Every record evaluates the printed reading and the adopted reading
// against an independent oracle; the adopted reading must win.

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace heislor {

struct DiscrepancyRecord {
  std::string id;
  std::string location;
  std::string printed_reading;
  std::string adopted_reading;
  std::string oracle;
  /// Oracle disagreement of each reading; +inf when the reading is undefined
  /// (e.g. the square root of a negative number).
  double printed_error = 0.0;
  double adopted_error = 0.0;
  bool adopted_wins = false;
  std::string note;
};

/// Identifiers every report must contain, one per resolved reading.
inline constexpr std::array<std::string_view, 12> kDiscrepancyIds = {
    "dynamics-xdot",   "jacobian1-bracket", "sphere1-slice",   "zdot-geometric",
    "length-integrand", "pmp-level-set",    "pmp-z-tail",      "conjugate-locus",
    "periodic-z-t2",   "exp0-z",            "limit-sphere",    "periodic-t1-threshold"};

/// Evaluates all records (deterministic; well under a second).
std::vector<DiscrepancyRecord> discrepancy_report();

/// Empty when every id is present with a finite adopted error, an evaluated
/// printed error (finite or +inf), and adopted_wins; otherwise the problems.
std::vector<std::string> audit_discrepancies(const std::vector<DiscrepancyRecord>& report);

}  // namespace heislor
