#include "heislor/controls.hpp"

#include "heislor/errors.hpp"

namespace heislor {

double PiecewiseControl::total_duration() const noexcept {
  double t = 0.0;
  for (const auto& s : segments) t += s.duration;
  return t;
}

void PiecewiseControl::validate(FamilyTag family) const {
  if (segments.empty()) throw InvalidArgument("piecewise control has no segments");
  for (const auto& s : segments) {
    if (!(s.duration > 0.0)) throw InvalidArgument("piecewise control segment has non-positive duration");
    if (!cone_contains(s.control, family)) throw NotCausal("piecewise control segment leaves the future cone");
  }
}

GroupElement compose_chords(const GroupElement& start, const PiecewiseControl& plan, Epsilon eps) noexcept {
  GroupElement q = start;
  for (const auto& s : plan.segments) q = group_mul(q, chord(s.control, s.duration, eps));
  return q;
}

PiecewiseControl repeat(const PiecewiseControl& plan, int k) {
  if (k < 1) throw InvalidArgument("repeat: k must be >= 1");
  PiecewiseControl out;
  out.segments.reserve(plan.segments.size() * static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) out.segments.insert(out.segments.end(), plan.segments.begin(), plan.segments.end());
  return out;
}

}  // namespace heislor
