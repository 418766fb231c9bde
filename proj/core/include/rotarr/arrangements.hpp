#pragma once

// Subspace arrangements of finite groups: isotropy arrangements from fixed
// spaces, reflection arrangements from hyperplanes, and the plane checks used
// for G(m,1,2).

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rotarr/groups.hpp"
#include "rotarr/linalg.hpp"

namespace rotarr {

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Provenance {
  std::string source;  // "isotropy" or "hyperplanes"
  // Isotropy: order of the pointwise stabilizer. Hyperplanes: number of
  // reflecting hyperplanes containing the member.
  std::size_t multiplicity = 0;
  // Elements (or hyperplanes) whose fixed spaces intersect to the member.
  std::vector<std::string> witnesses;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

class Arrangement {
 public:
  Arrangement() = default;
  // Sorts members by compare(); rejects duplicates, mixed ambients and V.
  Arrangement(std::size_t ambient, std::vector<Subspace> subspaces, std::vector<Provenance> provenance);

  std::size_t ambient() const { return ambient_; }
  std::size_t size() const { return subspaces_.size(); }
  const std::vector<Subspace>& subspaces() const { return subspaces_; }
  const std::vector<Provenance>& provenance() const { return provenance_; }
  std::size_t count_dim(std::size_t d) const;
  std::vector<Subspace> members_of_dim(std::size_t d) const;
  // Number of members per dimension 0..ambient-1.
  std::vector<std::size_t> dimension_profile() const;
  bool contains(const Subspace& u) const;

  // Set equality of members (provenance ignored).
  bool same_members(const Arrangement& other) const;

 private:
  std::size_t ambient_ = 0;
  std::vector<Subspace> subspaces_;
  std::vector<Provenance> provenance_;
};

// Distinct fixed spaces of the non-identity elements of a group, with the
// number of elements having each one and a label for one such element.
struct FixedSpaceClass {
  Subspace space;
  std::size_t count = 0;
  std::string witness;
};

struct FixedSpaceTable {
  std::size_t ambient = 0;
  unsigned conductor = 1;
  std::size_t group_order = 1;
  std::vector<FixedSpaceClass> classes;  // in first-seen element order
};

FixedSpaceTable fixed_space_table(const MatrixGroup& g);

// The same table for realified G(m,p,n), obtained by enumerating monomial
// matrices directly: the fixed space of a monomial matrix is read off its
// cycles and exponents, so no matrix arithmetic or closure is needed.
FixedSpaceTable monomial_fixed_space_table(unsigned m, unsigned p, unsigned n);

Subspace fixed_space_of_subset(const MatrixGroup& g, const std::vector<std::size_t>& subset);
// Ascending indices of {g : u is contained in fixed_space(g)}.
std::vector<std::size_t> pointwise_stabilizer(const MatrixGroup& g, const Subspace& u);

// Closure of gens under pairwise intersection (gens included).
std::vector<Subspace> intersection_lattice(const std::vector<Subspace>& gens);

Arrangement isotropy_arrangement(const FixedSpaceTable& table);
Arrangement isotropy_arrangement(const MatrixGroup& g);
// Throws PreconditionError unless g is generated by its reflections.
Arrangement reflection_arrangement(const MatrixGroup& g);

struct ContainmentResult {
  bool contained = true;
  std::optional<Subspace> missing;  // first member of small absent from big
};

// Members may carry different conductors; membership is set equality.
ContainmentResult arrangement_contains(const Arrangement& big, const Arrangement& small,
                                       std::optional<std::size_t> only_dim = std::nullopt);
bool arrangement_has(const Arrangement& a, const Subspace& u);

// Canonical planes of realified G(m,1,2), conductor lcm(4,m).
Subspace plane_x_zero(unsigned m);
Subspace plane_y_zero(unsigned m);
Subspace plane_y_zeta_x(unsigned m, unsigned j);

// Number of j in [0, m) with p meeting {y = zeta^j x} nontrivially. Throws
// PreconditionError if p is not a plane meeting both {x=0} and {y=0}.
std::size_t plane_meet_count(const Subspace& p, unsigned m);

struct DichotomyPlane {
  Subspace plane;
  std::string kind;  // "V1", "V2", "meets-both" or "violation"
};

struct DichotomyReport {
  bool holds = true;
  std::vector<DichotomyPlane> planes;
};

// w must preserve the split R^4 = V1 + V2 with V1 = span(e1,e2),
// V2 = span(e3,e4); otherwise PreconditionError.
DichotomyReport structural_dichotomy_check(const MatrixGroup& w);

}  // namespace rotarr
