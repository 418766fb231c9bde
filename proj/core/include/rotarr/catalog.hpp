#pragma once

// Real reflection groups of degree <= 4 in standard position.
//
// Labels are products of factors joined by 'x': A1..A4, B2..B4, D4, F4, H3,
// H4, I2(k) for k >= 2, and "1" for a trivially acted coordinate, e.g.
// "B3xA1", "I2(5)xI2(7)", "H3x1".

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rotarr/groups.hpp"

namespace rotarr {

class UnknownLabel : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CatalogFactor {
  char family = '1';  // 'A', 'B', 'D', 'F', 'H', 'I' or '1'
  unsigned rank = 1;
  unsigned k = 0;  // dihedral parameter for I2(k)

  std::size_t degree() const { return family == '1' ? 1 : rank; }
  friend bool operator==(const CatalogFactor&, const CatalogFactor&) = default;
};

struct CatalogEntry {
  std::string label;
  std::size_t degree = 0;
  unsigned conductor_required = 1;
  bool big_factor = false;  // has an irreducible factor of degree >= 3
};

std::vector<CatalogFactor> parse_label(std::string_view label);
std::string format_label(const std::vector<CatalogFactor>& factors);
CatalogEntry catalog_entry(std::string_view label);

// Built once per label and shared afterwards (thread-safe).
MatrixGroup catalog_group(std::string_view label);

MatrixGroup trivial_group(std::size_t ambient, unsigned conductor = 1);
// Same group over a larger conductor (conductor(g) | L2).
MatrixGroup embed_group(const MatrixGroup& g, unsigned L2);
// Block-diagonal product acting on orthogonal coordinate blocks.
MatrixGroup direct_sum(const MatrixGroup& a, const MatrixGroup& b);
MatrixGroup pad_trivial(const MatrixGroup& g, std::size_t extra);

// Degree-4 products: 4; 3+1 and 3+trivial; 2+2; 2+(1+1, 1+trivial,
// trivial+trivial); products of A1 and trivial factors. The dihedral slots run
// over I2(k), 2 <= k <= k_max.
std::vector<CatalogEntry> enumerate_degree4_catalog(unsigned k_max);
// The k-independent entries with a degree >= 3 irreducible factor.
std::vector<CatalogEntry> big_factor_catalog();

}  // namespace rotarr
