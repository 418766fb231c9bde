#include "rotarr/catalog.hpp"

#include <map>
#include <mutex>
#include <numeric>

namespace rotarr {

namespace {

unsigned factor_conductor(const CatalogFactor& f) {
  switch (f.family) {
    case 'A':
      if (f.rank == 2) return 12;
      if (f.rank == 4) return 5;
      return 1;
    case 'H': return 5;
    case 'I': return lcm_conductor(4, f.k);
    default: return 1;
  }
}

bool factor_valid(const CatalogFactor& f) {
  switch (f.family) {
    case 'A': return f.rank >= 1 && f.rank <= 4;
    case 'B': return f.rank >= 2 && f.rank <= 4;
    case 'D': return f.rank == 4;
    case 'F': return f.rank == 4;
    case 'H': return f.rank == 3 || f.rank == 4;
    case 'I': return f.rank == 2 && f.k >= 2;
    case '1': return f.rank == 1;
    default: return false;
  }
}

std::string factor_label(const CatalogFactor& f) {
  if (f.family == '1') return "1";
  if (f.family == 'I') return "I2(" + std::to_string(f.k) + ")";
  return std::string(1, f.family) + std::to_string(f.rank);
}

// s = I - 2 a a^T / (a . a)
MatrixF reflection_matrix(const VectorF& a, unsigned L) {
  const std::size_t n = a.size();
  CycNum norm(L);
  for (const auto& x : a) norm += x * x;
  const CycNum scale = CycNum(L, 2L) / norm;
  MatrixF s = MatrixF::identity(n, L);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (a[i].is_zero() || a[j].is_zero()) continue;
      s.set(i, j, s(i, j) - scale * a[i] * a[j]);
    }
  }
  return s;
}

MatrixGroup irreducible_group(const CatalogFactor& f) {
  const unsigned L = factor_conductor(f);
  const std::string label = factor_label(f);
  auto q = [L](long num, long den = 1) { return CycNum(L, Rational(num, den)); };
  std::vector<VectorF> roots;
  if (f.family == 'A' && f.rank == 1) {
    roots = {{q(1)}};
  } else if (f.family == 'A' && f.rank == 2) {
    const CycNum sqrt3 = zeta_power(L, 1) + zeta_power(L, -1);
    roots = {{q(1), q(0)}, {q(-1, 2), sqrt3 / q(2)}};
  } else if (f.family == 'A' && f.rank == 3) {
    roots = {{q(1), q(-1), q(0)}, {q(0), q(1), q(-1)}, {q(0), q(1), q(1)}};
  } else if (f.family == 'B') {
    const std::size_t n = f.rank;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      VectorF r(n, q(0));
      r[i] = q(1);
      r[i + 1] = q(-1);
      roots.push_back(std::move(r));
    }
    VectorF last(n, q(0));
    last[n - 1] = q(1);
    roots.push_back(std::move(last));
  } else if (f.family == 'D') {
    roots = {{q(1), q(-1), q(0), q(0)}, {q(0), q(1), q(-1), q(0)}, {q(0), q(0), q(1), q(-1)}, {q(0), q(0), q(1), q(1)}};
  } else if (f.family == 'F') {
    roots = {{q(0), q(1), q(-1), q(0)},
             {q(0), q(0), q(1), q(-1)},
             {q(0), q(0), q(0), q(1)},
             {q(1, 2), q(-1, 2), q(-1, 2), q(-1, 2)}};
  } else if (f.family == 'H' || (f.family == 'A' && f.rank == 4)) {
    const CycNum sqrt5 = zeta_power(L, 1) - zeta_power(L, 2) - zeta_power(L, 3) + zeta_power(L, 4);
    const CycNum a = (sqrt5 + q(1)) / q(4);   // (1 + sqrt5)/4
    const CycNum b = (sqrt5 - q(1)) / q(4);   // (sqrt5 - 1)/4
    if (f.family == 'H' && f.rank == 3) {
      roots = {{q(-1), q(0), q(0)}, {q(1, 2), -b, -a}, {q(0), q(0), q(1)}};
    } else if (f.family == 'H') {
      roots = {{q(0), q(0), q(-1), q(0)}, {q(0), -b, q(1, 2), -a}, {-a, b, q(0), q(1, 2)}, {q(1), q(0), q(0), q(0)}};
    } else {
      roots = {{q(0), q(0), q(-1), q(0)}, {q(0), -b, q(1, 2), -a}, {q(-1, 2), a, q(0), b}, {q(1), q(0), q(0), q(0)}};
    }
  } else if (f.family == 'I') {
    auto [c, s] = real_imag_parts(zeta_power(L, static_cast<long long>(L / f.k)));
    MatrixF r1 = MatrixF::identity(2, L);
    r1.set(1, 1, q(-1));
    MatrixF r2(2, 2, L);
    r2.set(0, 0, c);
    r2.set(0, 1, s);
    r2.set(1, 0, s);
    r2.set(1, 1, -c);
    return closure(2, L, {r1, r2}, kDefaultClosureCap, label);
  } else if (f.family == '1') {
    return trivial_group(1, 1).renamed("1");
  }
  std::vector<MatrixF> gens;
  for (const auto& r : roots) gens.push_back(reflection_matrix(r, L));
  return closure(f.degree(), L, std::move(gens), kDefaultClosureCap, label);
}

MatrixF block_diag(const MatrixF& a, const MatrixF& b) {
  MatrixF out(a.rows() + b.rows(), a.cols() + b.cols(), a.conductor());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!a(i, j).is_zero()) out.set(i, j, a(i, j));
    }
  }
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (!b(i, j).is_zero()) out.set(a.rows() + i, a.cols() + j, b(i, j));
    }
  }
  return out;
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::string, MatrixGroup, std::less<>>& cache() {
  static std::map<std::string, MatrixGroup, std::less<>> c;
  return c;
}

}  // namespace

std::vector<CatalogFactor> parse_label(std::string_view label) {
  std::vector<CatalogFactor> out;
  std::size_t pos = 0;
  auto fail = [&] { throw UnknownLabel("unknown catalog label: " + std::string(label)); };
  while (pos <= label.size()) {
    std::size_t end = pos;
    int depth = 0;
    while (end < label.size() && (label[end] != 'x' || depth > 0)) {
      if (label[end] == '(') ++depth;
      if (label[end] == ')') --depth;
      ++end;
    }
    const std::string_view tok = label.substr(pos, end - pos);
    CatalogFactor f;
    if (tok == "1") {
      f = {'1', 1, 0};
    } else if (tok.size() >= 5 && tok.substr(0, 3) == "I2(" && tok.back() == ')') {
      const std::string_view digits = tok.substr(3, tok.size() - 4);
      unsigned k = 0;
      for (char c : digits) {
        if (c < '0' || c > '9' || k > 100000) fail();
        k = k * 10 + static_cast<unsigned>(c - '0');
      }
      if (digits.empty() || digits.front() == '0') fail();
      f = {'I', 2, k};
    } else if (tok.size() == 2 && tok[1] >= '1' && tok[1] <= '9') {
      f = {tok[0], static_cast<unsigned>(tok[1] - '0'), 0};
    } else {
      fail();
    }
    if (!factor_valid(f)) fail();
    out.push_back(f);
    if (end == label.size()) break;
    pos = end + 1;
  }
  if (out.empty()) fail();
  return out;
}

std::string format_label(const std::vector<CatalogFactor>& factors) {
  std::string s;
  for (const auto& f : factors) {
    if (!s.empty()) s += 'x';
    s += factor_label(f);
  }
  return s;
}

CatalogEntry catalog_entry(std::string_view label) {
  const auto factors = parse_label(label);
  CatalogEntry e;
  e.label = format_label(factors);
  for (const auto& f : factors) {
    e.degree += f.degree();
    e.conductor_required = lcm_conductor(e.conductor_required, factor_conductor(f));
    if (f.family != '1' && f.degree() >= 3) e.big_factor = true;
  }
  return e;
}

MatrixGroup catalog_group(std::string_view label) {
  const auto factors = parse_label(label);
  const std::string canonical = format_label(factors);
  {
    std::lock_guard lock(cache_mutex());
    auto it = cache().find(canonical);
    if (it != cache().end()) return it->second;
  }
  MatrixGroup g;
  if (factors.size() == 1) {
    g = irreducible_group(factors.front());
  } else {
    // Trivial tails are folded into one padding so "1x1" factors stay cheap.
    std::size_t k = factors.size();
    while (k > 1 && factors[k - 1].family == '1') --k;
    const std::vector<CatalogFactor> head(factors.begin(), factors.begin() + static_cast<std::ptrdiff_t>(k));
    if (k < factors.size()) {
      g = pad_trivial(catalog_group(format_label(head)), factors.size() - k);
    } else {
      const std::vector<CatalogFactor> first(factors.begin(), factors.end() - 1);
      g = direct_sum(catalog_group(format_label(first)), catalog_group(factor_label(factors.back())));
    }
  }
  g = g.renamed(canonical);
  std::lock_guard lock(cache_mutex());
  return cache().emplace(canonical, g).first->second;
}

MatrixGroup trivial_group(std::size_t ambient, unsigned conductor) {
  return closure(ambient, conductor, {}, kDefaultClosureCap, "1");
}

MatrixGroup embed_group(const MatrixGroup& g, unsigned L2) {
  if (g.conductor() == L2) return g;
  std::vector<MatrixF> gens;
  for (const auto& s : g.generators()) gens.push_back(embed(s, L2));
  std::vector<MatrixF> elems;
  elems.reserve(g.order());
  for (const auto& e : g.elements()) elems.push_back(embed(e, L2));
  return MatrixGroup::from_elements(g.ambient(), L2, std::move(gens), std::move(elems), g.name());
}

MatrixGroup direct_sum(const MatrixGroup& a, const MatrixGroup& b) {
  const unsigned L = lcm_conductor(a.conductor(), b.conductor());
  const MatrixGroup ea = embed_group(a, L);
  const MatrixGroup eb = embed_group(b, L);
  const MatrixF ia = MatrixF::identity(a.ambient(), L);
  const MatrixF ib = MatrixF::identity(b.ambient(), L);
  std::vector<MatrixF> gens;
  for (const auto& s : ea.generators()) gens.push_back(block_diag(s, ib));
  for (const auto& s : eb.generators()) gens.push_back(block_diag(ia, s));
  std::vector<MatrixF> elems;
  elems.reserve(a.order() * b.order());
  for (const auto& x : ea.elements()) {
    for (const auto& y : eb.elements()) elems.push_back(block_diag(x, y));
  }
  return MatrixGroup::from_elements(a.ambient() + b.ambient(), L, std::move(gens), std::move(elems),
                                    a.name() + "x" + b.name());
}

MatrixGroup pad_trivial(const MatrixGroup& g, std::size_t extra) {
  if (extra == 0) return g;
  std::string name = g.name();
  for (std::size_t i = 0; i < extra; ++i) name += "x1";
  return direct_sum(g, trivial_group(extra, g.conductor())).renamed(name);
}

std::vector<CatalogEntry> big_factor_catalog() {
  std::vector<CatalogEntry> out;
  for (const char* l : {"A4", "B4", "D4", "F4", "H4", "A3xA1", "B3xA1", "H3xA1", "A3x1", "B3x1", "H3x1"}) {
    out.push_back(catalog_entry(l));
  }
  return out;
}

std::vector<CatalogEntry> enumerate_degree4_catalog(unsigned k_max) {
  if (k_max < 2) throw std::invalid_argument("k_max must be at least 2");
  auto out = big_factor_catalog();
  auto dihedral = [](unsigned k) { return "I2(" + std::to_string(k) + ")"; };
  for (unsigned p = 2; p <= k_max; ++p) {
    for (unsigned q = p; q <= k_max; ++q) out.push_back(catalog_entry(dihedral(p) + "x" + dihedral(q)));
  }
  for (unsigned k = 2; k <= k_max; ++k) {
    for (const char* tail : {"xA1xA1", "xA1x1", "x1x1"}) out.push_back(catalog_entry(dihedral(k) + tail));
  }
  for (int a = 4; a >= 0; --a) {
    std::vector<CatalogFactor> f(static_cast<std::size_t>(a), CatalogFactor{'A', 1, 0});
    f.resize(4, CatalogFactor{'1', 1, 0});
    out.push_back(catalog_entry(format_label(f)));
  }
  return out;
}

}  // namespace rotarr
