#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_L).
//
// A CycNum stores sum_i c_i zeta_L^i reduced modulo the L-th cyclotomic
// polynomial, so every field element has exactly one representation and
// equality/hashing are coefficient-wise. Coefficients are held as integer
// numerators over one positive common denominator; values that fit in 62 bits
// use machine integers and promote to GMP integers transparently on overflow.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "rotarr/rational.hpp"

namespace rotarr {

class ConductorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

unsigned euler_phi(unsigned n);
unsigned lcm_conductor(unsigned a, unsigned b);

// Phi_L as ascending integer coefficients (length phi(L) + 1, monic).
std::vector<Integer> cyclotomic_polynomial(unsigned L);

namespace detail {
struct FieldData;
struct BigCoeffs;
const FieldData& field_data(unsigned L);
}  // namespace detail

class CycNum {
 public:
  using SmallVec = boost::container::small_vector<std::int64_t, 8>;

  // Zero in Q(zeta_1) = Q.
  CycNum();
  explicit CycNum(unsigned conductor);
  CycNum(unsigned conductor, const Rational& value);
  CycNum(unsigned conductor, long value);

  // Builds sum_i coeffs[i] zeta^i for any number of coefficients, reducing
  // modulo Phi_L.
  static CycNum from_coeffs(unsigned conductor, std::span<const Rational> coeffs);

  unsigned conductor() const;
  // phi(L), the length of the coefficient vector.
  std::size_t degree() const;

  std::vector<Rational> coeffs() const;
  Rational coeff(std::size_t i) const;

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  std::optional<Rational> as_rational() const;
  std::size_t nonzero_terms() const;

  CycNum inv() const;

  CycNum& operator+=(const CycNum& b);
  CycNum& operator-=(const CycNum& b);
  CycNum& operator*=(const CycNum& b);
  CycNum& operator/=(const CycNum& b);

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  friend CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inv(); }
  CycNum operator-() const;

  friend bool operator==(const CycNum& a, const CycNum& b);
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

  std::size_t hash() const;

  // Low-level views for consumers that evaluate the representation directly
  // (modular images, real embeddings). Exactly one of the two forms is active.
  bool is_small() const { return big_ == nullptr; }
  std::span<const std::int64_t> small_numerators() const { return {num_.data(), num_.size()}; }
  std::int64_t small_denominator() const { return den_; }
  const std::vector<Integer>& big_numerators() const;
  const Integer& big_denominator() const;

  const detail::FieldData& field() const { return *field_; }

 private:
  friend struct CycNumAccess;
  struct RawTag {};
  CycNum(RawTag, const detail::FieldData* f) : field_(f) {}

  const detail::FieldData* field_;
  SmallVec num_;
  std::int64_t den_ = 1;
  std::shared_ptr<const detail::BigCoeffs> big_;
};

// zeta_L^(j mod L).
CycNum zeta_power(unsigned L, long long j);
// i = zeta_L^(L/4); requires 4 | L.
CycNum imaginary_unit(unsigned L);

// Image of a in Q(zeta_L2) under zeta_L -> zeta_L2^(L2/L). Requires L | L2.
CycNum embed(const CycNum& a, unsigned L2);
// Inverse of embed: the element of Q(zeta_L2) whose embedding is a, if a lies
// in that subfield. Requires L2 | conductor(a).
std::optional<CycNum> descend(const CycNum& a, unsigned L2);
// Equality across conductors: both values compared inside the common subfield.
bool same_value(const CycNum& a, const CycNum& b);

// Complex conjugation zeta -> zeta^(L-1).
CycNum conj(const CycNum& a);
bool is_real(const CycNum& a);
// (re, im) with a = re + i*im; requires 4 | L.
std::pair<CycNum, CycNum> real_imag_parts(const CycNum& a);

std::string to_string(const CycNum& a);
std::ostream& operator<<(std::ostream& os, const CycNum& a);

}  // namespace rotarr

template <>
struct std::hash<rotarr::CycNum> {
  std::size_t operator()(const rotarr::CycNum& a) const noexcept { return a.hash(); }
};
