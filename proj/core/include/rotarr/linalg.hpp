#pragma once

// Exact linear algebra over Q(zeta_L).
//
// Subspaces are kept in canonical form: the reduced row echelon basis with
// pivots normalized to 1, pivots chosen leftmost column first and lowest row
// index first. Two Subspaces describe the same set iff their canonical forms
// are identical, so equality and hashing are structural.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "rotarr/cyclo.hpp"

namespace rotarr {

class ModularImage;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using VectorF = std::vector<CycNum>;

class MatrixF {
 public:
  MatrixF() = default;
  MatrixF(std::size_t rows, std::size_t cols, unsigned conductor);
  MatrixF(std::size_t rows, std::size_t cols, std::vector<CycNum> entries);

  static MatrixF identity(std::size_t n, unsigned conductor);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  unsigned conductor() const { return conductor_; }
  bool is_square() const { return rows_ == cols_; }

  const CycNum& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, CycNum value);
  std::span<const CycNum> entries() const { return entries_; }
  VectorF row(std::size_t i) const;

  MatrixF transpose() const;
  VectorF apply(const VectorF& v) const;

  friend MatrixF operator*(const MatrixF& a, const MatrixF& b);
  friend MatrixF operator+(const MatrixF& a, const MatrixF& b);
  friend MatrixF operator-(const MatrixF& a, const MatrixF& b);
  friend bool operator==(const MatrixF& a, const MatrixF& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.conductor_ == b.conductor_ && a.entries_ == b.entries_;
  }

  std::size_t hash() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  unsigned conductor_ = 1;
  std::vector<CycNum> entries_;
};

MatrixF embed(const MatrixF& m, unsigned L2);
std::size_t rank(const MatrixF& m);

class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient, unsigned conductor);
  static Subspace full(std::size_t ambient, unsigned conductor);
  // Canonical form of span(vectors). Vectors must have length ambient.
  static Subspace span(std::size_t ambient, unsigned conductor, const std::vector<VectorF>& vectors);

  std::size_t ambient() const { return ambient_; }
  unsigned conductor() const { return conductor_; }
  std::size_t dim() const { return pivots_.size(); }
  bool is_zero() const { return pivots_.empty(); }
  bool is_full() const { return pivots_.size() == ambient_; }

  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const CycNum& at(std::size_t row, std::size_t col) const { return basis_[row * ambient_ + col]; }
  VectorF basis_vector(std::size_t row) const;
  std::vector<VectorF> basis() const;
  std::span<const CycNum> basis_entries() const { return basis_; }

  // Basis of the linear equations cutting out this subspace:
  // x is in the subspace iff e . x = 0 for every returned e.
  std::vector<VectorF> annihilator() const;
  bool contains_vector(const VectorF& v) const;

  // Images of the basis entries under the reduction for conductor M
  // (conductor() | M); cached per M. nullopt if an entry has no image.
  std::optional<std::vector<std::uint64_t>> modular_basis(const ModularImage& image) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.conductor_ == b.conductor_ && a.pivots_ == b.pivots_ && a.basis_ == b.basis_;
  }
  std::size_t hash() const;

 private:
  struct Cache;
  Subspace(std::size_t ambient, unsigned conductor, std::vector<CycNum> basis, std::vector<std::size_t> pivots);

  std::size_t ambient_ = 0;
  unsigned conductor_ = 1;
  std::vector<CycNum> basis_;  // dim x ambient, row-major, canonical RREF
  std::vector<std::size_t> pivots_;
  std::shared_ptr<Cache> cache_;

  friend Subspace kernel(const MatrixF& m);
};

// Null space {x : m x = 0}.
Subspace kernel(const MatrixF& m);

Subspace subspace_intersect(const Subspace& u, const Subspace& v);
Subspace subspace_sum(const Subspace& u, const Subspace& v);
bool subspace_equal(const Subspace& u, const Subspace& v);
// big contains small.
bool subspace_contains(const Subspace& big, const Subspace& small);
// dim(u intersect v) >= 1.
bool meets_nontrivially(const Subspace& u, const Subspace& v);

Subspace embed(const Subspace& u, unsigned L2);
// Set equality for subspaces that may carry different conductors.
bool same_subspace(const Subspace& a, const Subspace& b);

// Deterministic total order: dimension, pivot columns, then basis entries by
// their rational coefficient vectors.
int compare(const CycNum& a, const CycNum& b);
int compare(const Subspace& a, const Subspace& b);

}  // namespace rotarr

template <>
struct std::hash<rotarr::MatrixF> {
  std::size_t operator()(const rotarr::MatrixF& m) const noexcept { return m.hash(); }
};

template <>
struct std::hash<rotarr::Subspace> {
  std::size_t operator()(const rotarr::Subspace& s) const noexcept { return s.hash(); }
};
