#pragma once

// Finite matrix groups: generator constructors, closure by enumeration,
// fixed spaces and element classification.

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rotarr/linalg.hpp"

namespace rotarr {

inline constexpr std::size_t kDefaultClosureCap = 20000;

class GroupTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MatrixGroup {
 public:
  struct Data;  // shared, immutable once published

  // The trivial group on R^1.
  MatrixGroup();
  explicit MatrixGroup(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

  std::size_t ambient() const;
  unsigned conductor() const;
  const std::string& name() const;
  const std::vector<MatrixF>& generators() const;
  // elements()[0] is the identity; the rest follow closure order.
  const std::vector<MatrixF>& elements() const;
  std::size_t order() const { return elements().size(); }
  std::optional<std::size_t> index_of(const MatrixF& g) const;
  std::size_t product_index(std::size_t a, std::size_t b) const;

  // Fixed spaces of all elements, computed once on first use.
  const std::vector<Subspace>& fixed_spaces() const;

  MatrixGroup renamed(std::string name) const;

  // Wraps an element list already known to be a group (identity first).
  static MatrixGroup from_elements(std::size_t ambient, unsigned conductor, std::vector<MatrixF> generators,
                                   std::vector<MatrixF> elements, std::string name);

 private:
  std::shared_ptr<const Data> d_;
};

// Breadth-first closure from the identity, right-multiplying by generators in
// the given order. Throws GroupTooLarge past cap elements.
MatrixGroup closure(std::size_t ambient, unsigned conductor, std::vector<MatrixF> generators,
                    std::size_t cap = kDefaultClosureCap, std::string name = {});

// Generators of G(m,p,n) as complex n x n matrices over conductor lcm(4,m).
std::vector<MatrixF> gmpn_generators(unsigned m, unsigned p, unsigned n);

// a+bi -> [[a,-b],[b,a]], coordinates ordered (Re x1, Im x1, Re x2, ...).
MatrixF realify(const MatrixF& m);

// Realified G(m,1,2) by closure.
MatrixGroup realified_gm12(unsigned m, std::size_t cap = kDefaultClosureCap);

Subspace fixed_space(const MatrixF& g);

enum class ElementTag { identity, reflection, rotation, bireflection_plus };

struct ElementClass {
  ElementTag tag = ElementTag::identity;
  std::size_t fix_codim = 0;
};

const char* to_string(ElementTag tag);
ElementClass classify_codim(std::size_t fix_codim);
ElementClass classify(const MatrixF& g);

// Element indices of the subgroup generated by gens, ascending.
std::vector<std::size_t> generated_subgroup(const MatrixGroup& g, std::span<const std::size_t> gens);

struct GenerationCertificate {
  bool generates = false;
  std::size_t candidates = 0;                // elements of the requested kind
  std::vector<std::size_t> generators;       // greedy generating subset
  std::optional<std::size_t> missing_element;  // some element outside the span
};

// Whether the elements with the given codimension of fixed space generate G.
// The trivial group is never reported as generated (is_reflection_group
// overrides this: the empty set of reflections generates it).
GenerationCertificate generated_by_codim(const MatrixGroup& g, std::size_t fix_codim);
GenerationCertificate is_rotation_group(const MatrixGroup& g);
GenerationCertificate is_reflection_group(const MatrixGroup& g);

}  // namespace rotarr
