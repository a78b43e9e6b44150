#pragma once

#include <vector>

#include "heislor/group.hpp"

namespace heislor {

struct ControlSegment {
  Control control;
  double duration = 0.0;
};

/// Piecewise-constant control, applied segment after segment from t = 0.
struct PiecewiseControl {
  std::vector<ControlSegment> segments;

  double total_duration() const noexcept;
  /// Throws NotCausal if a control leaves the cone, InvalidArgument on a
  /// non-positive duration or an empty plan.
  void validate(FamilyTag family) const;
};

/// Exact trajectory point at time s of the constant control u from the identity.
/// For constant controls the z-correction cancels, leaving a straight chord.
inline GroupElement chord(const Control& u, double s, Epsilon eps) noexcept {
  return {u.u1 * s, u.u2 * s, eps.value() * u.u3 * s};
}

/// Endpoint of the plan from `start`, by exact group-law composition of chords.
GroupElement compose_chords(const GroupElement& start, const PiecewiseControl& plan, Epsilon eps) noexcept;

/// Plan followed k times in a row.
PiecewiseControl repeat(const PiecewiseControl& plan, int k);

}  // namespace heislor
