#pragma once

// The phase of y(u)/x(u) for u in R^4 = C^2, compared exactly.
//
// |z| is usually irrational, so a phase is kept as the ratio z = y/x together
// with z * conj(z). Two nonzero values have the same phase iff
// z1 * conj(z2) is a positive real number, which is decided by a certified
// sign computation.

#include <optional>

#include "rotarr/linalg.hpp"

namespace rotarr {

struct PhaseValue {
  std::optional<CycNum> ratio;  // y(u)/x(u), undefined when x(u) or y(u) is 0
  std::optional<CycNum> norm2;  // ratio * conj(ratio)

  bool defined() const { return ratio.has_value(); }
};

// u holds real coordinates (Re x, Im x, Re y, Im y).
PhaseValue phase_ratio(const VectorF& u);

// Nonzero values only; conductors may differ.
bool same_phase(const CycNum& a, const CycNum& b);
// False if either side is undefined.
bool same_phase(const PhaseValue& a, const PhaseValue& b);

// Phases equal or opposite: z1 * conj(z2) is real. Scaling u = a v + b w by
// real a, b keeps y/x on one real line through 0, so this is the invariant
// that survives b/a < 0.
bool same_phase_up_to_sign(const CycNum& a, const CycNum& b);
bool same_phase_up_to_sign(const PhaseValue& a, const PhaseValue& b);

}  // namespace rotarr
