#include "rotarr/linalg.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>

#include "rotarr/modular.hpp"

namespace rotarr {

namespace {

void require_conductor(unsigned expected, const CycNum& v) {
  if (v.conductor() != expected) {
    throw ConductorError("entry conductor " + std::to_string(v.conductor()) + " does not match " +
                         std::to_string(expected));
  }
}

void require_same_ambient(const Subspace& u, const Subspace& v) {
  if (u.ambient() != v.ambient()) {
    throw DimensionError("ambient dimension mismatch: " + std::to_string(u.ambient()) + " vs " +
                         std::to_string(v.ambient()));
  }
  if (u.conductor() != v.conductor()) {
    throw ConductorError("subspace conductor mismatch: " + std::to_string(u.conductor()) + " vs " +
                         std::to_string(v.conductor()));
  }
}

// Gauss-Jordan elimination in place. Returns pivot columns; the first
// pivots.size() rows hold the reduced basis, remaining rows are zero.
std::vector<std::size_t> rref_in_place(std::vector<CycNum>& m, std::size_t rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p * cols + c].is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(m[p * cols + k], m[r * cols + k]);
    }
    if (!m[r * cols + c].is_one()) {
      const CycNum inv = m[r * cols + c].inv();
      for (std::size_t k = c + 1; k < cols; ++k) {
        if (!m[r * cols + k].is_zero()) m[r * cols + k] *= inv;
      }
      m[r * cols + c] = CycNum(m[r * cols + c].conductor(), 1L);
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const CycNum f = m[i * cols + c];
      if (f.is_zero()) continue;
      for (std::size_t k = c; k < cols; ++k) {
        const CycNum& pk = m[r * cols + k];
        if (pk.is_zero()) continue;
        m[i * cols + k] -= f * pk;
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

// ---------------------------------------------------------------- MatrixF

MatrixF::MatrixF(std::size_t rows, std::size_t cols, unsigned conductor)
    : rows_(rows), cols_(cols), conductor_(conductor), entries_(rows * cols, CycNum(conductor)) {}

MatrixF::MatrixF(std::size_t rows, std::size_t cols, std::vector<CycNum> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) throw DimensionError("MatrixF: entry count does not match shape");
  conductor_ = entries_.empty() ? 1 : entries_.front().conductor();
  for (const auto& e : entries_) require_conductor(conductor_, e);
}

MatrixF MatrixF::identity(std::size_t n, unsigned conductor) {
  MatrixF m(n, n, conductor);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = CycNum(conductor, 1L);
  return m;
}

void MatrixF::set(std::size_t i, std::size_t j, CycNum value) {
  if (i >= rows_ || j >= cols_) throw DimensionError("MatrixF::set index out of range");
  require_conductor(conductor_, value);
  entries_[i * cols_ + j] = std::move(value);
}

VectorF MatrixF::row(std::size_t i) const {
  return VectorF(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                 entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

MatrixF MatrixF::transpose() const {
  MatrixF t(cols_, rows_, conductor_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t.entries_[j * rows_ + i] = entries_[i * cols_ + j];
  }
  return t;
}

VectorF MatrixF::apply(const VectorF& v) const {
  if (v.size() != cols_) throw DimensionError("MatrixF::apply: vector length mismatch");
  VectorF out(rows_, CycNum(conductor_));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const CycNum& a = entries_[i * cols_ + j];
      if (a.is_zero() || v[j].is_zero()) continue;
      out[i] += a * v[j];
    }
  }
  return out;
}

MatrixF operator*(const MatrixF& a, const MatrixF& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product: inner dimensions differ");
  if (a.conductor_ != b.conductor_) throw ConductorError("matrix product: conductor mismatch");
  MatrixF c(a.rows_, b.cols_, a.conductor_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const CycNum& aik = a.entries_[i * a.cols_ + k];
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const CycNum& bkj = b.entries_[k * b.cols_ + j];
        if (bkj.is_zero()) continue;
        c.entries_[i * c.cols_ + j] += aik * bkj;
      }
    }
  }
  return c;
}

MatrixF operator+(const MatrixF& a, const MatrixF& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix sum: shape mismatch");
  if (a.conductor_ != b.conductor_) throw ConductorError("matrix sum: conductor mismatch");
  MatrixF c = a;
  for (std::size_t i = 0; i < c.entries_.size(); ++i) c.entries_[i] += b.entries_[i];
  return c;
}

MatrixF operator-(const MatrixF& a, const MatrixF& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix difference: shape mismatch");
  if (a.conductor_ != b.conductor_) throw ConductorError("matrix difference: conductor mismatch");
  MatrixF c = a;
  for (std::size_t i = 0; i < c.entries_.size(); ++i) c.entries_[i] -= b.entries_[i];
  return c;
}

std::size_t MatrixF::hash() const {
  std::size_t h = rows_ * 31 + cols_;
  for (const auto& e : entries_) h ^= e.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

MatrixF embed(const MatrixF& m, unsigned L2) {
  std::vector<CycNum> e;
  e.reserve(m.entries().size());
  for (const auto& v : m.entries()) e.push_back(embed(v, L2));
  if (e.empty()) return MatrixF(m.rows(), m.cols(), L2);
  return MatrixF(m.rows(), m.cols(), std::move(e));
}

std::size_t rank(const MatrixF& m) {
  std::vector<CycNum> work(m.entries().begin(), m.entries().end());
  return rref_in_place(work, m.rows(), m.cols()).size();
}

// ---------------------------------------------------------------- Subspace

struct Subspace::Cache {
  std::mutex mutex;
  std::map<unsigned, std::optional<std::vector<std::uint64_t>>> images;
};

Subspace::Subspace(std::size_t ambient, unsigned conductor, std::vector<CycNum> basis, std::vector<std::size_t> pivots)
    : ambient_(ambient),
      conductor_(conductor),
      basis_(std::move(basis)),
      pivots_(std::move(pivots)),
      cache_(std::make_shared<Cache>()) {}

Subspace Subspace::zero(std::size_t ambient, unsigned conductor) {
  if (ambient == 0) throw DimensionError("ambient dimension must be positive");
  return Subspace(ambient, conductor, {}, {});
}

Subspace Subspace::full(std::size_t ambient, unsigned conductor) {
  if (ambient == 0) throw DimensionError("ambient dimension must be positive");
  std::vector<CycNum> b(ambient * ambient, CycNum(conductor));
  std::vector<std::size_t> p(ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    b[i * ambient + i] = CycNum(conductor, 1L);
    p[i] = i;
  }
  return Subspace(ambient, conductor, std::move(b), std::move(p));
}

Subspace Subspace::span(std::size_t ambient, unsigned conductor, const std::vector<VectorF>& vectors) {
  if (ambient == 0) throw DimensionError("ambient dimension must be positive");
  std::vector<CycNum> m;
  m.reserve(vectors.size() * ambient);
  for (const auto& v : vectors) {
    if (v.size() != ambient) throw DimensionError("span: vector length does not match ambient dimension");
    for (const auto& x : v) {
      require_conductor(conductor, x);
      m.push_back(x);
    }
  }
  auto pivots = rref_in_place(m, vectors.size(), ambient);
  m.resize(pivots.size() * ambient);
  return Subspace(ambient, conductor, std::move(m), std::move(pivots));
}

VectorF Subspace::basis_vector(std::size_t row) const {
  return VectorF(basis_.begin() + static_cast<std::ptrdiff_t>(row * ambient_),
                 basis_.begin() + static_cast<std::ptrdiff_t>((row + 1) * ambient_));
}

std::vector<VectorF> Subspace::basis() const {
  std::vector<VectorF> out;
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_vector(i));
  return out;
}

std::vector<VectorF> Subspace::annihilator() const {
  std::vector<bool> is_pivot(ambient_, false);
  for (auto p : pivots_) is_pivot[p] = true;
  std::vector<VectorF> out;
  for (std::size_t f = 0; f < ambient_; ++f) {
    if (is_pivot[f]) continue;
    VectorF e(ambient_, CycNum(conductor_));
    e[f] = CycNum(conductor_, 1L);
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
      const CycNum& b = at(i, f);
      if (!b.is_zero()) e[pivots_[i]] = -b;
    }
    out.push_back(std::move(e));
  }
  return out;
}

bool Subspace::contains_vector(const VectorF& v) const {
  if (v.size() != ambient_) throw DimensionError("contains_vector: length mismatch");
  // In RREF, v lies in the row space iff v = sum_i v[pivot_i] * row_i.
  for (std::size_t k = 0; k < ambient_; ++k) {
    CycNum acc(conductor_);
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
      const CycNum& coef = v[pivots_[i]];
      const CycNum& b = at(i, k);
      if (coef.is_zero() || b.is_zero()) continue;
      acc += coef * b;
    }
    if (acc != v[k]) return false;
  }
  return true;
}

std::optional<std::vector<std::uint64_t>> Subspace::modular_basis(const ModularImage& image) const {
  if (!cache_) return std::nullopt;
  std::lock_guard lock(cache_->mutex);
  auto it = cache_->images.find(image.conductor());
  if (it != cache_->images.end()) return it->second;
  std::optional<std::vector<std::uint64_t>> out(std::in_place, basis_.size(), 0);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i].is_zero()) continue;
    auto v = image.evaluate(basis_[i]);
    if (!v) {
      out.reset();
      break;
    }
    (*out)[i] = *v;
  }
  cache_->images.emplace(image.conductor(), out);
  return out;
}

std::size_t Subspace::hash() const {
  std::size_t h = ambient_ * 1000003U + pivots_.size();
  for (const auto& e : basis_) h ^= e.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

Subspace kernel(const MatrixF& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  if (cols == 0) throw DimensionError("kernel: matrix has no columns");
  std::vector<CycNum> work(m.entries().begin(), m.entries().end());
  const auto pivots = rref_in_place(work, rows, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<VectorF> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    VectorF v(cols, CycNum(m.conductor()));
    v[f] = CycNum(m.conductor(), 1L);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      const CycNum& b = work[i * cols + f];
      if (!b.is_zero()) v[pivots[i]] = -b;
    }
    basis.push_back(std::move(v));
  }
  return Subspace::span(cols, m.conductor(), basis);
}

namespace {

// Certifies u + v is a direct sum of full dimension dim u + dim v via the
// modular image; false means "not certified", not "not direct".
bool certified_independent(const Subspace& u, const Subspace& v) {
  const std::size_t n = u.ambient();
  const std::size_t rows = u.dim() + v.dim();
  if (rows > n) return false;
  const auto& image = ModularImage::for_conductor(u.conductor());
  auto bu = u.modular_basis(image);
  auto bv = v.modular_basis(image);
  if (!bu || !bv) return false;
  std::vector<std::uint64_t> m(std::move(*bu));
  m.insert(m.end(), bv->begin(), bv->end());
  return image.rank(std::move(m), rows, n) == rows;
}

Subspace stacked_kernel(const Subspace& u, const Subspace& v) {
  auto eqs = u.annihilator();
  auto more = v.annihilator();
  eqs.insert(eqs.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
  if (eqs.empty()) return Subspace::full(u.ambient(), u.conductor());
  std::vector<CycNum> flat;
  flat.reserve(eqs.size() * u.ambient());
  for (auto& e : eqs) {
    for (auto& x : e) flat.push_back(std::move(x));
  }
  return kernel(MatrixF(eqs.size(), u.ambient(), std::move(flat)));
}

}  // namespace

Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
  require_same_ambient(u, v);
  if (u.is_zero() || v.is_full()) return u;
  if (v.is_zero() || u.is_full()) return v;
  if (u == v) return u;
  if (certified_independent(u, v)) return Subspace::zero(u.ambient(), u.conductor());
  return stacked_kernel(u, v);
}

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  require_same_ambient(u, v);
  if (u.is_zero() || v.is_full()) return v;
  if (v.is_zero() || u.is_full()) return u;
  auto rows = u.basis();
  auto more = v.basis();
  rows.insert(rows.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
  return Subspace::span(u.ambient(), u.conductor(), rows);
}

bool subspace_equal(const Subspace& u, const Subspace& v) {
  require_same_ambient(u, v);
  return u == v;
}

bool subspace_contains(const Subspace& big, const Subspace& small) {
  require_same_ambient(big, small);
  if (small.dim() > big.dim()) return false;
  if (small.is_zero() || big.is_full()) return true;
  if (small.dim() == big.dim()) return small == big;
  const auto& image = ModularImage::for_conductor(big.conductor());
  auto bb = big.modular_basis(image);
  auto bs = small.modular_basis(image);
  if (bb && bs) {
    std::vector<std::uint64_t> m(std::move(*bb));
    m.insert(m.end(), bs->begin(), bs->end());
    if (image.rank(std::move(m), big.dim() + small.dim(), big.ambient()) > big.dim()) return false;
  }
  for (std::size_t i = 0; i < small.dim(); ++i) {
    if (!big.contains_vector(small.basis_vector(i))) return false;
  }
  return true;
}

bool meets_nontrivially(const Subspace& u, const Subspace& v) {
  require_same_ambient(u, v);
  if (u.dim() + v.dim() > u.ambient()) return true;
  return !subspace_intersect(u, v).is_zero();
}

Subspace embed(const Subspace& u, unsigned L2) {
  if (L2 == u.conductor()) return u;
  std::vector<VectorF> rows;
  for (std::size_t i = 0; i < u.dim(); ++i) {
    VectorF r;
    for (const auto& x : u.basis_vector(i)) r.push_back(embed(x, L2));
    rows.push_back(std::move(r));
  }
  // Embedding is a field homomorphism, so the canonical form is preserved.
  return Subspace::span(u.ambient(), L2, rows);
}

bool same_subspace(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient() || a.pivots() != b.pivots()) return false;
  if (a.conductor() == b.conductor()) return a == b;
  const auto ea = a.basis_entries();
  const auto eb = b.basis_entries();
  for (std::size_t i = 0; i < ea.size(); ++i) {
    if (!same_value(ea[i], eb[i])) return false;
  }
  return true;
}

int compare(const CycNum& a, const CycNum& b) {
  if (a.conductor() != b.conductor()) return a.conductor() < b.conductor() ? -1 : 1;
  if (a == b) return 0;
  for (std::size_t i = 0; i < a.degree(); ++i) {
    const Rational x = a.coeff(i);
    const Rational y = b.coeff(i);
    if (x != y) return x < y ? -1 : 1;
  }
  return 0;
}

int compare(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) return a.ambient() < b.ambient() ? -1 : 1;
  if (a.dim() != b.dim()) return a.dim() < b.dim() ? -1 : 1;
  if (a.pivots() != b.pivots()) return a.pivots() < b.pivots() ? -1 : 1;
  const auto ea = a.basis_entries();
  const auto eb = b.basis_entries();
  for (std::size_t i = 0; i < ea.size(); ++i) {
    const int c = compare(ea[i], eb[i]);
    if (c != 0) return c;
  }
  return 0;
}

}  // namespace rotarr
