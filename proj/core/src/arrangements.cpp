#include "rotarr/arrangements.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "rotarr/modular.hpp"
#include "rotarr/parallel.hpp"

namespace rotarr {

namespace {

// Containment test on members of one conductor, with the modular image used to
// reject most non-containments before any exact arithmetic.
class ContainmentOracle {
 public:
  explicit ContainmentOracle(unsigned conductor) : image_(ModularImage::for_conductor(conductor)) {}

  bool contains(const Subspace& big, const Subspace& small) const {
    if (small.dim() > big.dim()) return false;
    if (small.is_zero() || big.is_full()) return true;
    if (small.dim() == big.dim()) return small == big;
    auto bb = big.modular_basis(image_);
    auto bs = small.modular_basis(image_);
    if (bb && bs) {
      std::vector<std::uint64_t> m(std::move(*bb));
      m.insert(m.end(), bs->begin(), bs->end());
      if (image_.rank(std::move(m), big.dim() + small.dim(), big.ambient()) > big.dim()) return false;
    }
    for (std::size_t i = 0; i < small.dim(); ++i) {
      if (!big.contains_vector(small.basis_vector(i))) return false;
    }
    return true;
  }

 private:
  const ModularImage& image_;
};

Subspace coordinate_plane(unsigned L, std::size_t first) {
  std::vector<VectorF> rows;
  for (std::size_t k = first; k < first + 2; ++k) {
    VectorF v(4, CycNum(L));
    v[k] = CycNum(L, 1L);
    rows.push_back(std::move(v));
  }
  return Subspace::span(4, L, rows);
}

std::string join_ints(const std::vector<unsigned>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != 0) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

struct MeetPlanes {
  std::vector<Subspace> planes;  // {y = zeta^j x}, j = 0..m-1
};

const MeetPlanes& meet_planes(unsigned m) {
  static std::mutex mutex;
  static std::map<unsigned, std::unique_ptr<MeetPlanes>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[m];
  if (!slot) {
    slot = std::make_unique<MeetPlanes>();
    for (unsigned j = 0; j < m; ++j) slot->planes.push_back(plane_y_zeta_x(m, j));
  }
  return *slot;
}

}  // namespace

// ---------------------------------------------------------------- Arrangement

Arrangement::Arrangement(std::size_t ambient, std::vector<Subspace> subspaces, std::vector<Provenance> provenance)
    : ambient_(ambient) {
  if (provenance.size() != subspaces.size()) throw std::invalid_argument("one provenance entry per member");
  std::vector<std::size_t> order(subspaces.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return compare(subspaces[a], subspaces[b]) < 0; });
  for (std::size_t i : order) {
    const Subspace& u = subspaces[i];
    if (u.ambient() != ambient) throw DimensionError("arrangement member has the wrong ambient dimension");
    if (u.is_full()) throw std::invalid_argument("the full space is never an arrangement member");
    if (!subspaces_.empty() && compare(subspaces_.back(), u) == 0) {
      throw std::invalid_argument("duplicate arrangement member");
    }
    subspaces_.push_back(u);
    provenance_.push_back(std::move(provenance[i]));
  }
}

std::size_t Arrangement::count_dim(std::size_t d) const {
  return static_cast<std::size_t>(
      std::count_if(subspaces_.begin(), subspaces_.end(), [d](const Subspace& u) { return u.dim() == d; }));
}

std::vector<Subspace> Arrangement::members_of_dim(std::size_t d) const {
  std::vector<Subspace> out;
  for (const auto& u : subspaces_) {
    if (u.dim() == d) out.push_back(u);
  }
  return out;
}

std::vector<std::size_t> Arrangement::dimension_profile() const {
  std::vector<std::size_t> out(ambient_, 0);
  for (const auto& u : subspaces_) ++out[u.dim()];
  return out;
}

bool Arrangement::contains(const Subspace& u) const { return arrangement_has(*this, u); }

bool Arrangement::same_members(const Arrangement& other) const {
  if (ambient_ != other.ambient_ || size() != other.size()) return false;
  for (const auto& u : other.subspaces_) {
    if (!contains(u)) return false;
  }
  return true;
}

// ---------------------------------------------------------------- fixed space tables

FixedSpaceTable fixed_space_table(const MatrixGroup& g) {
  FixedSpaceTable t;
  t.ambient = g.ambient();
  t.conductor = g.conductor();
  t.group_order = g.order();
  const auto& fixed = g.fixed_spaces();
  std::unordered_map<Subspace, std::size_t> seen;
  for (std::size_t i = 1; i < g.order(); ++i) {
    auto [it, fresh] = seen.emplace(fixed[i], t.classes.size());
    if (fresh) t.classes.push_back({fixed[i], 0, "g" + std::to_string(i)});
    ++t.classes[it->second].count;
  }
  return t;
}

FixedSpaceTable monomial_fixed_space_table(unsigned m, unsigned p, unsigned n) {
  if (m == 0 || p == 0 || n == 0 || m % p != 0) throw std::invalid_argument("G(m,p,n) needs p | m, all positive");
  const unsigned L = lcm_conductor(4, m);
  FixedSpaceTable t;
  t.ambient = 2 * n;
  t.conductor = L;

  // Key per coordinate: cycle leader (n when forced to 0) and exponent a with
  // x_i = zeta^a x_leader. Equal keys <=> equal fixed spaces.
  struct KeyHash {
    std::size_t operator()(const std::vector<unsigned>& k) const noexcept {
      std::size_t h = 0;
      for (unsigned x : k) h = h * 1000003U + x;
      return h;
    }
  };
  std::unordered_map<std::vector<unsigned>, std::size_t, KeyHash> seen;
  std::vector<std::vector<unsigned>> keys;

  std::vector<unsigned> perm(n);
  std::iota(perm.begin(), perm.end(), 0U);
  std::vector<unsigned> key(2 * n);
  std::vector<bool> visited(n);
  std::size_t order = 0;
  do {
    std::vector<unsigned> e(n, 0);
    for (;;) {
      unsigned total = 0;
      for (unsigned x : e) total = (total + x) % m;
      if (total % p == 0) {
        ++order;
        const bool identity = std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; }) &&
                              std::is_sorted(perm.begin(), perm.end());
        if (!identity) {
          std::fill(visited.begin(), visited.end(), false);
          for (unsigned s = 0; s < n; ++s) {
            if (visited[s]) continue;
            unsigned sum = 0;
            for (unsigned i = s; !visited[i]; i = perm[i]) {
              visited[i] = true;
              sum = (sum + e[i]) % m;
            }
            unsigned a = 0;
            unsigned i = s;
            do {
              key[2 * i] = sum == 0 ? s : n;
              key[2 * i + 1] = sum == 0 ? a : 0;
              a = (a + m - e[i]) % m;
              i = perm[i];
            } while (i != s);
          }
          auto [it, fresh] = seen.emplace(key, t.classes.size());
          if (fresh) {
            keys.push_back(key);
            std::vector<unsigned> pv(perm.begin(), perm.end());
            t.classes.push_back({Subspace(), 0, "perm=" + join_ints(pv) + " exp=" + join_ints(e)});
          }
          ++t.classes[it->second].count;
        }
      }
      // Odometer over (Z/m)^n.
      std::size_t d = 0;
      while (d < n && ++e[d] == m) e[d++] = 0;
      if (d == n) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  t.group_order = order;

  std::map<unsigned, std::pair<CycNum, CycNum>> parts;
  auto re_im = [&](unsigned a) -> const std::pair<CycNum, CycNum>& {
    auto it = parts.find(a);
    if (it == parts.end()) {
      it = parts.emplace(a, real_imag_parts(zeta_power(L, static_cast<long long>(a) * (L / m)))).first;
    }
    return it->second;
  };
  for (std::size_t c = 0; c < keys.size(); ++c) {
    const auto& k = keys[c];
    std::vector<VectorF> rows;
    for (unsigned s = 0; s < n; ++s) {
      if (k[2 * s] != s) continue;  // not the leader of a fixed cycle
      VectorF v(2 * n, CycNum(L));
      VectorF iv(2 * n, CycNum(L));
      for (unsigned i = 0; i < n; ++i) {
        if (k[2 * i] != s) continue;
        const auto& [re, im] = re_im(k[2 * i + 1]);
        v[2 * i] = re;
        v[2 * i + 1] = im;
        iv[2 * i] = -im;
        iv[2 * i + 1] = re;
      }
      rows.push_back(std::move(v));
      rows.push_back(std::move(iv));
    }
    t.classes[c].space = Subspace::span(2 * n, L, rows);
  }
  return t;
}

Subspace fixed_space_of_subset(const MatrixGroup& g, const std::vector<std::size_t>& subset) {
  const auto& fixed = g.fixed_spaces();
  Subspace acc = Subspace::full(g.ambient(), g.conductor());
  for (std::size_t i : subset) {
    if (i >= g.order()) throw std::out_of_range("element index out of range");
    acc = subspace_intersect(acc, fixed[i]);
  }
  return acc;
}

std::vector<std::size_t> pointwise_stabilizer(const MatrixGroup& g, const Subspace& u) {
  const auto& fixed = g.fixed_spaces();
  const ContainmentOracle oracle(g.conductor());
  std::vector<char> in(g.order(), 0);
  parallel_for(g.order(), [&](std::size_t i) { in[i] = oracle.contains(fixed[i], u) ? 1 : 0; });
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (in[i] != 0) out.push_back(i);
  }
  return out;
}

// ---------------------------------------------------------------- lattices

std::vector<Subspace> intersection_lattice(const std::vector<Subspace>& gens) {
  std::vector<Subspace> sorted = gens;
  std::stable_sort(sorted.begin(), sorted.end(), [](const Subspace& a, const Subspace& b) {
    if (a.dim() != b.dim()) return a.dim() > b.dim();
    return compare(a, b) < 0;
  });
  std::vector<Subspace> lattice;
  std::unordered_set<Subspace> members;
  // Adding X to an intersection-closed L: L + {X} + {X meet Y : Y in L} is
  // again closed, so one pass per new generator suffices.
  for (const auto& x : sorted) {
    if (members.contains(x)) continue;
    std::vector<Subspace> meets(lattice.size());
    parallel_for(lattice.size(), [&](std::size_t i) { meets[i] = subspace_intersect(x, lattice[i]); });
    members.insert(x);
    lattice.push_back(x);
    for (auto& y : meets) {
      if (members.insert(y).second) lattice.push_back(std::move(y));
    }
  }
  return lattice;
}

Arrangement isotropy_arrangement(const FixedSpaceTable& table) {
  std::vector<Subspace> gens;
  for (const auto& c : table.classes) {
    if (!c.space.is_full()) gens.push_back(c.space);
  }
  const auto lattice = intersection_lattice(gens);
  const ContainmentOracle oracle(table.conductor);

  struct Result {
    std::optional<Subspace> joint;
    Provenance prov;
  };
  std::vector<Result> results(lattice.size());
  parallel_for(lattice.size(), [&](std::size_t li) {
    const Subspace& u = lattice[li];
    std::size_t stabilizer = 1;
    Subspace joint = Subspace::full(table.ambient, table.conductor);
    std::vector<std::string> witnesses;
    for (const auto& c : table.classes) {
      if (!oracle.contains(c.space, u)) continue;
      stabilizer += c.count;
      if (joint.dim() > u.dim()) {
        Subspace next = subspace_intersect(joint, c.space);
        if (next.dim() < joint.dim()) {
          joint = std::move(next);
          witnesses.push_back(c.witness);
        }
      }
    }
    if (stabilizer == 1 || joint.is_full()) return;
    results[li].joint = std::move(joint);
    results[li].prov = {"isotropy", stabilizer, std::move(witnesses)};
  });

  std::vector<Subspace> members;
  std::vector<Provenance> prov;
  std::unordered_set<Subspace> seen;
  for (auto& r : results) {
    if (!r.joint || !seen.insert(*r.joint).second) continue;
    members.push_back(std::move(*r.joint));
    prov.push_back(std::move(r.prov));
  }
  return Arrangement(table.ambient, std::move(members), std::move(prov));
}

Arrangement isotropy_arrangement(const MatrixGroup& g) { return isotropy_arrangement(fixed_space_table(g)); }

Arrangement reflection_arrangement(const MatrixGroup& g) {
  if (!is_reflection_group(g).generates) {
    throw PreconditionError("reflection_arrangement: " + (g.name().empty() ? std::string("group") : g.name()) +
                            " is not generated by reflections");
  }
  const auto& fixed = g.fixed_spaces();
  std::vector<Subspace> hyperplanes;
  std::unordered_set<Subspace> seen;
  for (std::size_t i = 1; i < g.order(); ++i) {
    if (fixed[i].dim() + 1 == g.ambient() && seen.insert(fixed[i]).second) hyperplanes.push_back(fixed[i]);
  }
  const auto lattice = intersection_lattice(hyperplanes);
  const ContainmentOracle oracle(g.conductor());
  std::vector<Provenance> prov(lattice.size());
  parallel_for(lattice.size(), [&](std::size_t li) {
    const Subspace& u = lattice[li];
    Subspace acc = Subspace::full(g.ambient(), g.conductor());
    Provenance p{"hyperplanes", 0, {}};
    for (std::size_t h = 0; h < hyperplanes.size(); ++h) {
      if (!oracle.contains(hyperplanes[h], u)) continue;
      ++p.multiplicity;
      if (acc.dim() > u.dim()) {
        Subspace next = subspace_intersect(acc, hyperplanes[h]);
        if (next.dim() < acc.dim()) {
          acc = std::move(next);
          p.witnesses.push_back("h" + std::to_string(h));
        }
      }
    }
    prov[li] = std::move(p);
  });
  return Arrangement(g.ambient(), lattice, std::move(prov));
}

// ---------------------------------------------------------------- containment

bool arrangement_has(const Arrangement& a, const Subspace& u) {
  if (u.ambient() != a.ambient()) throw DimensionError("arrangement membership: ambient mismatch");
  const auto& s = a.subspaces();
  auto lo = std::lower_bound(s.begin(), s.end(), u, [](const Subspace& x, const Subspace& y) {
    if (x.dim() != y.dim()) return x.dim() < y.dim();
    return x.pivots() < y.pivots();
  });
  std::optional<const ModularImage*> image;
  for (auto it = lo; it != s.end() && it->dim() == u.dim() && it->pivots() == u.pivots(); ++it) {
    if (it->conductor() == u.conductor()) {
      if (*it == u) return true;
      continue;
    }
    // Unequal fingerprints under a common homomorphism prove inequality.
    if (!image) image = &ModularImage::for_conductor(lcm_conductor(it->conductor(), u.conductor()));
    auto fu = u.modular_basis(**image);
    auto fv = it->modular_basis(**image);
    if (fu && fv && *fu != *fv) continue;
    if (same_subspace(*it, u)) return true;
  }
  return false;
}

ContainmentResult arrangement_contains(const Arrangement& big, const Arrangement& small,
                                       std::optional<std::size_t> only_dim) {
  ContainmentResult r;
  if (small.size() == 0) return r;
  if (big.ambient() != small.ambient()) throw DimensionError("arrangement_contains: ambient mismatch");
  for (const auto& u : small.subspaces()) {
    if (only_dim && u.dim() != *only_dim) continue;
    if (!arrangement_has(big, u)) {
      r.contained = false;
      r.missing = u;
      return r;
    }
  }
  return r;
}

// ---------------------------------------------------------------- G(m,1,2) planes

Subspace plane_x_zero(unsigned m) { return coordinate_plane(lcm_conductor(4, m), 2); }

Subspace plane_y_zero(unsigned m) { return coordinate_plane(lcm_conductor(4, m), 0); }

Subspace plane_y_zeta_x(unsigned m, unsigned j) {
  const unsigned L = lcm_conductor(4, m);
  auto [c, s] = real_imag_parts(zeta_power(L, static_cast<long long>(j % m) * (L / m)));
  const CycNum one(L, 1L);
  const CycNum zero(L);
  return Subspace::span(4, L, {{one, zero, c, s}, {zero, one, -s, c}});
}

std::size_t plane_meet_count(const Subspace& p, unsigned m) {
  if (m == 0) throw std::invalid_argument("m must be positive");
  if (p.ambient() != 4 || p.dim() != 2) throw PreconditionError("plane_meet_count needs a plane in R^4");
  const unsigned L = lcm_conductor(p.conductor(), lcm_conductor(4, m));
  const Subspace pe = embed(p, L);
  if (!meets_nontrivially(pe, coordinate_plane(L, 2)) || !meets_nontrivially(pe, coordinate_plane(L, 0))) {
    throw PreconditionError("plane does not meet both {x=0} and {y=0} nontrivially");
  }
  const auto& planes = meet_planes(m).planes;
  std::size_t count = 0;
  for (const auto& q : planes) {
    if (meets_nontrivially(pe, embed(q, L))) ++count;
  }
  return count;
}

// ---------------------------------------------------------------- dichotomy

DichotomyReport structural_dichotomy_check(const MatrixGroup& w) {
  if (w.ambient() != 4) throw PreconditionError("dichotomy check needs a degree-4 group");
  for (const auto& s : w.generators()) {
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        if ((i < 2) != (j < 2) && !s(i, j).is_zero()) {
          throw PreconditionError("group does not preserve the split span(e1,e2) + span(e3,e4)");
        }
      }
    }
  }
  const Arrangement a = reflection_arrangement(w);
  const unsigned L = w.conductor();
  const Subspace v1 = coordinate_plane(L, 0);
  const Subspace v2 = coordinate_plane(L, 2);
  DichotomyReport r;
  for (const auto& p : a.members_of_dim(2)) {
    std::string kind;
    if (p == v1) {
      kind = "V1";
    } else if (p == v2) {
      kind = "V2";
    } else if (subspace_intersect(p, v1).dim() == 1 && subspace_intersect(p, v2).dim() == 1) {
      kind = "meets-both";
    } else {
      kind = "violation";
      r.holds = false;
    }
    r.planes.push_back({p, kind});
  }
  return r;
}

}  // namespace rotarr
