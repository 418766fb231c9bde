#include "rotarr/groups.hpp"

#include <algorithm>
#include <mutex>
#include <string>
#include <unordered_map>

#include "rotarr/parallel.hpp"

namespace rotarr {

struct MatrixGroup::Data {
  std::size_t ambient = 1;
  unsigned conductor = 1;
  std::string name;
  std::vector<MatrixF> generators;
  std::vector<MatrixF> elements;
  std::unordered_map<MatrixF, std::size_t> index;

  mutable std::once_flag fixed_once;
  mutable std::vector<Subspace> fixed;
};

namespace {

std::shared_ptr<MatrixGroup::Data> make_data(std::size_t ambient, unsigned conductor, std::string name) {
  auto d = std::make_shared<MatrixGroup::Data>();
  d->ambient = ambient;
  d->conductor = conductor;
  d->name = std::move(name);
  return d;
}

void check_square(const MatrixF& g, std::size_t ambient, unsigned conductor) {
  if (g.rows() != ambient || g.cols() != ambient) {
    throw DimensionError("group generator is not " + std::to_string(ambient) + "x" + std::to_string(ambient));
  }
  if (g.conductor() != conductor) throw ConductorError("group generator has the wrong conductor");
}

}  // namespace

MatrixGroup::MatrixGroup() {
  auto d = make_data(1, 1, "");
  d->elements.push_back(MatrixF::identity(1, 1));
  d->index.emplace(d->elements.front(), 0);
  d_ = std::move(d);
}

std::size_t MatrixGroup::ambient() const { return d_->ambient; }
unsigned MatrixGroup::conductor() const { return d_->conductor; }
const std::string& MatrixGroup::name() const { return d_->name; }
const std::vector<MatrixF>& MatrixGroup::generators() const { return d_->generators; }
const std::vector<MatrixF>& MatrixGroup::elements() const { return d_->elements; }

std::optional<std::size_t> MatrixGroup::index_of(const MatrixF& g) const {
  auto it = d_->index.find(g);
  if (it == d_->index.end()) return std::nullopt;
  return it->second;
}

std::size_t MatrixGroup::product_index(std::size_t a, std::size_t b) const {
  auto idx = index_of(d_->elements[a] * d_->elements[b]);
  if (!idx) throw std::logic_error("product left the group");
  return *idx;
}

const std::vector<Subspace>& MatrixGroup::fixed_spaces() const {
  std::call_once(d_->fixed_once, [this] {
    std::vector<Subspace> out(d_->elements.size());
    parallel_for(out.size(), [&](std::size_t i) { out[i] = fixed_space(d_->elements[i]); });
    d_->fixed = std::move(out);
  });
  return d_->fixed;
}

MatrixGroup MatrixGroup::renamed(std::string name) const {
  auto d = make_data(d_->ambient, d_->conductor, std::move(name));
  d->generators = d_->generators;
  d->elements = d_->elements;
  d->index = d_->index;
  return MatrixGroup(std::move(d));
}

MatrixGroup MatrixGroup::from_elements(std::size_t ambient, unsigned conductor, std::vector<MatrixF> generators,
                                       std::vector<MatrixF> elements, std::string name) {
  auto d = make_data(ambient, conductor, std::move(name));
  for (const auto& g : generators) check_square(g, ambient, conductor);
  if (elements.empty() || elements.front() != MatrixF::identity(ambient, conductor)) {
    throw std::invalid_argument("element list must start with the identity");
  }
  d->generators = std::move(generators);
  d->elements = std::move(elements);
  d->index.reserve(d->elements.size());
  for (std::size_t i = 0; i < d->elements.size(); ++i) {
    if (!d->index.emplace(d->elements[i], i).second) throw std::invalid_argument("duplicate group element");
  }
  return MatrixGroup(std::move(d));
}

MatrixGroup closure(std::size_t ambient, unsigned conductor, std::vector<MatrixF> generators, std::size_t cap,
                    std::string name) {
  if (ambient == 0) throw DimensionError("ambient dimension must be positive");
  for (const auto& g : generators) check_square(g, ambient, conductor);
  auto d = make_data(ambient, conductor, std::move(name));
  d->generators = std::move(generators);
  d->elements.push_back(MatrixF::identity(ambient, conductor));
  d->index.emplace(d->elements.front(), 0);
  for (std::size_t head = 0; head < d->elements.size(); ++head) {
    for (const auto& s : d->generators) {
      MatrixF h = d->elements[head] * s;
      if (d->index.contains(h)) continue;
      if (d->elements.size() >= cap) {
        throw GroupTooLarge("closure exceeded " + std::to_string(cap) +
                            " elements: group too large or not finite at this conductor");
      }
      d->index.emplace(h, d->elements.size());
      d->elements.push_back(std::move(h));
    }
  }
  return MatrixGroup(std::move(d));
}

std::vector<MatrixF> gmpn_generators(unsigned m, unsigned p, unsigned n) {
  if (m == 0 || p == 0 || n == 0) throw std::invalid_argument("G(m,p,n) needs positive parameters");
  if (m % p != 0) throw std::invalid_argument("G(m,p,n) needs p | m");
  const unsigned L = lcm_conductor(4, m);
  std::vector<MatrixF> gens;
  if (p % m != 0) {
    MatrixF d = MatrixF::identity(n, L);
    d.set(0, 0, zeta_power(L, static_cast<long long>(L / m) * p));
    gens.push_back(std::move(d));
  }
  if (p > 1 && m > 1 && n >= 2) {
    MatrixF d = MatrixF::identity(n, L);
    d.set(0, 0, zeta_power(L, L / m));
    d.set(1, 1, zeta_power(L, -static_cast<long long>(L / m)));
    gens.push_back(std::move(d));
  }
  for (unsigned i = 0; i + 1 < n; ++i) {
    MatrixF t = MatrixF::identity(n, L);
    t.set(i, i, CycNum(L));
    t.set(i + 1, i + 1, CycNum(L));
    t.set(i, i + 1, CycNum(L, 1L));
    t.set(i + 1, i, CycNum(L, 1L));
    gens.push_back(std::move(t));
  }
  return gens;
}

MatrixF realify(const MatrixF& m) {
  const unsigned L = m.conductor();
  if (L % 4 != 0) throw ConductorError("realify needs 4 | conductor");
  MatrixF r(2 * m.rows(), 2 * m.cols(), L);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).is_zero()) continue;
      auto [re, im] = real_imag_parts(m(i, j));
      r.set(2 * i, 2 * j, re);
      r.set(2 * i, 2 * j + 1, -im);
      r.set(2 * i + 1, 2 * j, im);
      r.set(2 * i + 1, 2 * j + 1, re);
    }
  }
  return r;
}

MatrixGroup realified_gm12(unsigned m, std::size_t cap) {
  std::vector<MatrixF> gens;
  for (const auto& g : gmpn_generators(m, 1, 2)) gens.push_back(realify(g));
  return closure(4, lcm_conductor(4, m), std::move(gens), cap, "G(" + std::to_string(m) + ",1,2)");
}

Subspace fixed_space(const MatrixF& g) {
  if (!g.is_square()) throw DimensionError("fixed_space needs a square matrix");
  return kernel(g - MatrixF::identity(g.rows(), g.conductor()));
}

const char* to_string(ElementTag tag) {
  switch (tag) {
    case ElementTag::identity: return "identity";
    case ElementTag::reflection: return "reflection";
    case ElementTag::rotation: return "rotation";
    case ElementTag::bireflection_plus: return "bireflection_plus";
  }
  return "unknown";
}

ElementClass classify_codim(std::size_t fix_codim) {
  ElementClass c;
  c.fix_codim = fix_codim;
  if (fix_codim == 0) {
    c.tag = ElementTag::identity;
  } else if (fix_codim == 1) {
    c.tag = ElementTag::reflection;
  } else if (fix_codim == 2) {
    c.tag = ElementTag::rotation;
  } else {
    c.tag = ElementTag::bireflection_plus;
  }
  return c;
}

ElementClass classify(const MatrixF& g) { return classify_codim(g.rows() - fixed_space(g).dim()); }

namespace {

// BFS over right multiplication by gens; returns membership mask.
std::vector<bool> subgroup_mask(const MatrixGroup& g, std::span<const std::size_t> gens) {
  std::vector<bool> mask(g.order(), false);
  std::vector<std::size_t> members{0};
  mask[0] = true;
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (std::size_t s : gens) {
      const std::size_t h = g.product_index(members[head], s);
      if (mask[h]) continue;
      mask[h] = true;
      members.push_back(h);
    }
  }
  return mask;
}

}  // namespace

std::vector<std::size_t> generated_subgroup(const MatrixGroup& g, std::span<const std::size_t> gens) {
  const auto mask = subgroup_mask(g, gens);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) out.push_back(i);
  }
  return out;
}

GenerationCertificate generated_by_codim(const MatrixGroup& g, std::size_t fix_codim) {
  GenerationCertificate cert;
  const auto& fixed = g.fixed_spaces();
  std::vector<std::size_t> candidates;
  for (std::size_t i = 1; i < g.order(); ++i) {
    if (g.ambient() - fixed[i].dim() == fix_codim) candidates.push_back(i);
  }
  cert.candidates = candidates.size();
  std::vector<bool> mask(g.order(), false);
  mask[0] = true;
  std::size_t covered = 1;
  for (std::size_t c : candidates) {
    if (covered == g.order()) break;
    if (mask[c]) continue;
    cert.generators.push_back(c);
    mask = subgroup_mask(g, cert.generators);
    covered = static_cast<std::size_t>(std::count(mask.begin(), mask.end(), true));
  }
  cert.generates = g.order() > 1 && covered == g.order();
  if (!cert.generates && g.order() > 1) {
    for (std::size_t i = 0; i < mask.size(); ++i) {
      if (!mask[i]) {
        cert.missing_element = i;
        break;
      }
    }
  }
  return cert;
}

GenerationCertificate is_rotation_group(const MatrixGroup& g) { return generated_by_codim(g, 2); }

GenerationCertificate is_reflection_group(const MatrixGroup& g) {
  // The trivial group is generated by the empty set of reflections; catalog
  // products padded only by trivial factors rely on this.
  auto cert = generated_by_codim(g, 1);
  if (g.order() == 1) cert.generates = true;
  return cert;
}

}  // namespace rotarr
