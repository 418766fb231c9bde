#pragma once

// Ring homomorphisms Z[zeta_M][1/d] -> F_p with p = 1 (mod M).
//
// zeta_M maps to a fixed primitive M-th root of unity mod p; zeta_L for L | M
// maps to its (M/L)-th power, so images are compatible with embed(). A
// homomorphism sends 0 to 0, so a nonzero image certifies that the exact value
// is nonzero, and a nonsingular image matrix certifies exact full rank. Equal
// images prove nothing; callers fall back to exact arithmetic in that case.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rotarr/cyclo.hpp"

namespace rotarr {

class ModularImage {
 public:
  // Shared, lazily created instance for conductor M (thread-safe).
  static const ModularImage& for_conductor(unsigned M);

  explicit ModularImage(unsigned M);

  unsigned conductor() const { return M_; }
  std::uint64_t prime() const { return p_; }
  std::uint64_t root() const { return omega_; }

  // nullopt when the denominator vanishes mod p. Requires conductor(a) | M.
  std::optional<std::uint64_t> evaluate(const CycNum& a) const;

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t inverse(std::uint64_t a) const;

  // Rank of a rows x cols matrix over F_p.
  std::size_t rank(std::vector<std::uint64_t> entries, std::size_t rows, std::size_t cols) const;

 private:
  unsigned M_;
  std::uint64_t p_ = 0;
  std::uint64_t omega_ = 0;
};

bool is_prime_u64(std::uint64_t n);

// Rank of the image of a row-major CycNum matrix, or nullopt if some entry has
// no image. Always a lower bound for the exact rank.
std::optional<std::size_t> modular_rank(std::span<const CycNum> entries, std::size_t rows, std::size_t cols,
                                        const ModularImage& image);

}  // namespace rotarr
