#include "rotarr/phase.hpp"

#include "rotarr/real_embedding.hpp"

namespace rotarr {

PhaseValue phase_ratio(const VectorF& u) {
  if (u.size() != 4) throw DimensionError("phase_ratio needs a vector in R^4");
  unsigned L = 4;
  for (const auto& c : u) L = lcm_conductor(L, c.conductor());
  const CycNum i = imaginary_unit(L);
  const CycNum x = embed(u[0], L) + i * embed(u[1], L);
  const CycNum y = embed(u[2], L) + i * embed(u[3], L);
  PhaseValue p;
  if (x.is_zero() || y.is_zero()) return p;
  CycNum z = y / x;
  p.norm2 = z * conj(z);
  p.ratio = std::move(z);
  return p;
}

bool same_phase(const CycNum& a, const CycNum& b) {
  if (a.is_zero() || b.is_zero()) throw ArithmeticError("phase of zero is undefined");
  const unsigned L = lcm_conductor(a.conductor(), b.conductor());
  const CycNum w = embed(a, L) * conj(embed(b, L));
  if (!is_real(w)) return false;
  return real_sign(w) > 0;
}

bool same_phase(const PhaseValue& a, const PhaseValue& b) {
  if (!a.defined() || !b.defined()) return false;
  return same_phase(*a.ratio, *b.ratio);
}

bool same_phase_up_to_sign(const CycNum& a, const CycNum& b) {
  if (a.is_zero() || b.is_zero()) throw ArithmeticError("phase of zero is undefined");
  const unsigned L = lcm_conductor(a.conductor(), b.conductor());
  return is_real(embed(a, L) * conj(embed(b, L)));
}

bool same_phase_up_to_sign(const PhaseValue& a, const PhaseValue& b) {
  if (!a.defined() || !b.defined()) return false;
  return same_phase_up_to_sign(*a.ratio, *b.ratio);
}

}  // namespace rotarr
