#include "rotarr/cyclo.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

namespace rotarr {

namespace detail {

struct BigCoeffs {
  std::vector<Integer> num;
  Integer den;
};

struct FieldData {
  unsigned L = 1;
  unsigned phi = 1;
  std::vector<Integer> modulus;                              // Phi_L, ascending
  std::vector<std::pair<unsigned, std::int64_t>> low_terms;  // nonzero terms below x^phi
  std::vector<std::pair<unsigned, Integer>> low_terms_big;
  bool modulus_small = true;

  mutable std::once_flag powers_once;
  mutable std::vector<CycNum> powers;  // zeta^k for 0 <= k < L

  const CycNum& power(unsigned k) const;
};

}  // namespace detail

namespace {

using i128 = __int128;
using u128 = unsigned __int128;
constexpr i128 kLimit = static_cast<i128>(1) << 62;

bool fits(i128 v) { return v > -kLimit && v < kLimit; }

u128 abs128(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Integer to_integer(i128 v) {
  const bool neg = v < 0;
  const u128 mag = abs128(v);
  Integer hi(static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64)));
  Integer lo(static_cast<unsigned long>(static_cast<std::uint64_t>(mag)));
  Integer out = (hi << 64) + lo;
  if (neg) out = -out;
  return out;
}

bool to_int64(const Integer& z, std::int64_t& out) {
  if (!z.fits_slong_p()) return false;
  const long v = z.get_si();
  if (!fits(v)) return false;
  out = v;
  return true;
}

using Wide = boost::container::small_vector<i128, 32>;

}  // namespace

// Internal constructor helpers; the only code that writes CycNum fields.
struct CycNumAccess {
  static CycNum zero(const detail::FieldData& f) {
    CycNum r(CycNum::RawTag{}, &f);
    r.num_.assign(f.phi, 0);
    r.den_ = 1;
    return r;
  }

  static CycNum from_wide(const detail::FieldData& f, Wide n, i128 den) {
    if (den == 0) throw ArithmeticError("zero denominator");
    if (den < 0) {
      for (auto& v : n) v = -v;
      den = -den;
    }
    if (std::all_of(n.begin(), n.end(), [](i128 v) { return v == 0; })) return zero(f);
    u128 g = abs128(den);
    for (i128 v : n) {
      if (g == 1) break;
      if (v != 0) g = gcd128(g, abs128(v));
    }
    if (g > 1) {
      const auto gi = static_cast<i128>(g);
      for (auto& v : n) v /= gi;
      den /= gi;
    }
    const bool small = fits(den) && std::all_of(n.begin(), n.end(), [](i128 v) { return fits(v); });
    if (small) {
      CycNum r;
      r.field_ = &f;
      r.num_.resize(n.size());
      for (std::size_t i = 0; i < n.size(); ++i) r.num_[i] = static_cast<std::int64_t>(n[i]);
      r.den_ = static_cast<std::int64_t>(den);
      return r;
    }
    std::vector<Integer> big(n.size());
    for (std::size_t i = 0; i < n.size(); ++i) big[i] = to_integer(n[i]);
    return from_big(f, std::move(big), to_integer(den));
  }

  static CycNum from_big(const detail::FieldData& f, std::vector<Integer> num, Integer den) {
    if (den == 0) throw ArithmeticError("zero denominator");
    if (den < 0) {
      den = -den;
      for (auto& v : num) v = -v;
    }
    if (std::all_of(num.begin(), num.end(), [](const Integer& v) { return v == 0; })) return zero(f);
    Integer g = den;
    for (const auto& v : num) {
      if (g == 1) break;
      if (v != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    if (g != 1) {
      for (auto& v : num) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), g.get_mpz_t());
    }
    CycNum r(CycNum::RawTag{}, &f);
    std::int64_t d = 0;
    bool small = to_int64(den, d);
    if (small) {
      r.num_.resize(num.size());
      for (std::size_t i = 0; i < num.size() && small; ++i) small = to_int64(num[i], r.num_[i]);
    }
    if (small) {
      r.den_ = d;
      return r;
    }
    r.num_.clear();
    r.den_ = 0;
    r.big_ = std::make_shared<const detail::BigCoeffs>(detail::BigCoeffs{std::move(num), std::move(den)});
    return r;
  }

  static std::vector<Integer> big_num(const CycNum& a) {
    if (a.big_) return a.big_->num;
    std::vector<Integer> out;
    out.reserve(a.num_.size());
    for (auto v : a.num_) out.emplace_back(static_cast<long>(v));
    return out;
  }

  static Integer big_den(const CycNum& a) {
    return a.big_ ? a.big_->den : Integer(static_cast<long>(a.den_));
  }

  // Reduces an integer polynomial of any length modulo Phi_L in place.
  static void reduce_big(const detail::FieldData& f, std::vector<Integer>& c) {
    const unsigned phi = f.phi;
    for (std::size_t k = c.size(); k-- > phi;) {
      if (c[k] == 0) continue;
      const Integer t = c[k];
      c[k] = 0;
      for (const auto& [idx, coef] : f.low_terms_big) {
        mpz_submul(c[k - phi + idx].get_mpz_t(), t.get_mpz_t(), coef.get_mpz_t());
      }
    }
    c.resize(phi);
  }

  // Same for 128-bit work arrays; false on overflow.
  static bool reduce_wide(const detail::FieldData& f, Wide& c) {
    const unsigned phi = f.phi;
    if (!f.modulus_small) return false;
    for (std::size_t k = c.size(); k-- > phi;) {
      const i128 t = c[k];
      if (t == 0) continue;
      c[k] = 0;
      for (const auto& [idx, coef] : f.low_terms) {
        i128 prod;
        if (__builtin_mul_overflow(t, static_cast<i128>(coef), &prod)) return false;
        if (__builtin_sub_overflow(c[k - phi + idx], prod, &c[k - phi + idx])) return false;
      }
    }
    c.resize(phi);
    return true;
  }

  static CycNum mul(const CycNum& a, const CycNum& b) {
    const detail::FieldData& f = *a.field_;
    const unsigned phi = f.phi;
    if (!a.big_ && !b.big_) {
      boost::container::small_vector<unsigned, 32> nza, nzb;
      for (unsigned i = 0; i < phi; ++i) {
        if (a.num_[i] != 0) nza.push_back(i);
        if (b.num_[i] != 0) nzb.push_back(i);
      }
      if (nza.empty() || nzb.empty()) return zero(f);
      Wide c(2 * phi - 1, 0);
      bool ok = true;
      for (unsigned i : nza) {
        const i128 ai = a.num_[i];
        for (unsigned j : nzb) {
          const i128 prod = ai * static_cast<i128>(b.num_[j]);
          if (__builtin_add_overflow(c[i + j], prod, &c[i + j])) {
            ok = false;
            break;
          }
        }
        if (!ok) break;
      }
      if (ok) ok = reduce_wide(f, c);
      if (ok) return from_wide(f, std::move(c), static_cast<i128>(a.den_) * b.den_);
    }
    const auto an = big_num(a);
    const auto bn = big_num(b);
    std::vector<Integer> c(2 * phi - 1);
    for (unsigned i = 0; i < phi; ++i) {
      if (an[i] == 0) continue;
      for (unsigned j = 0; j < phi; ++j) {
        if (bn[j] == 0) continue;
        mpz_addmul(c[i + j].get_mpz_t(), an[i].get_mpz_t(), bn[j].get_mpz_t());
      }
    }
    reduce_big(f, c);
    return from_big(f, std::move(c), big_den(a) * big_den(b));
  }

  static CycNum add(const CycNum& a, const CycNum& b, bool subtract) {
    const detail::FieldData& f = *a.field_;
    if (!a.big_ && !b.big_) {
      const std::int64_t g = std::gcd(a.den_, b.den_);
      const i128 ma = b.den_ / g;
      const i128 mb = a.den_ / g;
      Wide c(f.phi);
      for (unsigned i = 0; i < f.phi; ++i) {
        const i128 x = a.num_[i] * ma;
        const i128 y = b.num_[i] * mb;
        c[i] = subtract ? x - y : x + y;
      }
      return from_wide(f, std::move(c), static_cast<i128>(a.den_) * ma);
    }
    auto an = big_num(a);
    const auto bn = big_num(b);
    const Integer ad = big_den(a);
    const Integer bd = big_den(b);
    for (unsigned i = 0; i < f.phi; ++i) {
      an[i] *= bd;
      if (subtract) {
        mpz_submul(an[i].get_mpz_t(), bn[i].get_mpz_t(), ad.get_mpz_t());
      } else {
        mpz_addmul(an[i].get_mpz_t(), bn[i].get_mpz_t(), ad.get_mpz_t());
      }
    }
    return from_big(f, std::move(an), ad * bd);
  }

  // sum_k weights[k] * zeta^{exponents[k]} / den, all in field f.
  static CycNum combine_powers(const detail::FieldData& f, const std::vector<Integer>& weights,
                               const std::vector<unsigned>& exponents, const Integer& den) {
    std::vector<Integer> acc(f.phi);
    for (std::size_t k = 0; k < weights.size(); ++k) {
      if (weights[k] == 0) continue;
      const unsigned e = exponents[k] % f.L;
      if (e < f.phi) {
        acc[e] += weights[k];
        continue;
      }
      const CycNum& p = f.power(e);
      if (p.big_) {
        for (unsigned i = 0; i < f.phi; ++i) {
          mpz_addmul(acc[i].get_mpz_t(), weights[k].get_mpz_t(), p.big_->num[i].get_mpz_t());
        }
      } else {
        for (unsigned i = 0; i < f.phi; ++i) {
          if (p.num_[i] != 0) acc[i] += weights[k] * static_cast<long>(p.num_[i]);
        }
      }
    }
    return from_big(f, std::move(acc), den);
  }
};

namespace detail {

namespace {

// Exact division of integer polynomials (ascending), divisor monic.
std::vector<Integer> divide_exact(std::vector<Integer> num, const std::vector<Integer>& div) {
  const std::size_t dn = div.size() - 1;
  if (num.size() < div.size()) throw std::logic_error("cyclotomic division degree underflow");
  std::vector<Integer> q(num.size() - dn);
  std::vector<std::pair<std::size_t, Integer>> terms;
  for (std::size_t i = 0; i < dn; ++i) {
    if (div[i] != 0) terms.emplace_back(i, div[i]);
  }
  for (std::size_t k = num.size(); k-- > dn;) {
    const Integer t = num[k];
    q[k - dn] = t;
    if (t == 0) continue;
    num[k] = 0;
    for (const auto& [i, c] : terms) mpz_submul(num[k - dn + i].get_mpz_t(), t.get_mpz_t(), c.get_mpz_t());
  }
  for (std::size_t i = 0; i < dn; ++i) {
    if (num[i] != 0) throw std::logic_error("cyclotomic division left a remainder");
  }
  return q;
}

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

std::map<unsigned, std::vector<Integer>>& poly_cache() {
  static std::map<unsigned, std::vector<Integer>> cache;
  return cache;
}

std::map<unsigned, std::unique_ptr<FieldData>>& field_cache() {
  static std::map<unsigned, std::unique_ptr<FieldData>> cache;
  return cache;
}

std::vector<Integer> cyclotomic_locked(unsigned L) {
  auto& cache = poly_cache();
  if (auto it = cache.find(L); it != cache.end()) return it->second;
  std::vector<Integer> p(L + 1);
  p[0] = -1;
  p[L] = 1;
  for (unsigned d = 1; d < L; ++d) {
    if (L % d == 0) p = divide_exact(std::move(p), cyclotomic_locked(d));
  }
  cache.emplace(L, p);
  return p;
}

const FieldData& build_field_locked(unsigned L) {
  auto& cache = field_cache();
  auto f = std::make_unique<FieldData>();
  f->L = L;
  f->modulus = cyclotomic_locked(L);
  f->phi = static_cast<unsigned>(f->modulus.size() - 1);
  for (unsigned i = 0; i < f->phi; ++i) {
    const Integer& c = f->modulus[i];
    if (c == 0) continue;
    f->low_terms_big.emplace_back(i, c);
    std::int64_t small = 0;
    if (to_int64(c, small)) {
      f->low_terms.emplace_back(i, small);
    } else {
      f->modulus_small = false;
    }
  }
  const FieldData& ref = *f;
  cache.emplace(L, std::move(f));
  return ref;
}

}  // namespace

const FieldData& field_data(unsigned L) {
  if (L == 0) throw ConductorError("conductor must be positive");
  thread_local const FieldData* last = nullptr;
  if (last != nullptr && last->L == L) return *last;
  std::lock_guard lock(registry_mutex());
  auto& cache = field_cache();
  if (auto it = cache.find(L); it != cache.end()) {
    last = it->second.get();
    return *last;
  }
  return build_field_locked(L);
}

const CycNum& FieldData::power(unsigned k) const {
  std::call_once(powers_once, [this] {
    std::vector<CycNum> table;
    table.reserve(L);
    std::vector<Rational> x(2);
    x[1] = 1;
    const CycNum zeta = CycNum::from_coeffs(L, x);
    CycNum cur(L, 1L);
    for (unsigned e = 0; e < L; ++e) {
      table.push_back(cur);
      cur = cur * zeta;
    }
    powers = std::move(table);
  });
  return powers.at(k);
}

}  // namespace detail

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

unsigned lcm_conductor(unsigned a, unsigned b) { return std::lcm(a, b); }

std::vector<Integer> cyclotomic_polynomial(unsigned L) {
  if (L == 0) throw ConductorError("cyclotomic_polynomial: L must be positive");
  return detail::field_data(L).modulus;
}

CycNum::CycNum() : CycNum(1U) {}

CycNum::CycNum(unsigned conductor) : field_(&detail::field_data(conductor)) { num_.assign(field_->phi, 0); }

CycNum::CycNum(unsigned conductor, const Rational& value) : CycNum(conductor) {
  std::int64_t n = 0;
  std::int64_t d = 0;
  if (to_int64(value.get_num(), n) && to_int64(value.get_den(), d)) {
    num_[0] = n;
    den_ = d;
    return;
  }
  std::vector<Integer> big(field_->phi);
  big[0] = value.get_num();
  *this = CycNumAccess::from_big(*field_, std::move(big), value.get_den());
}

CycNum::CycNum(unsigned conductor, long value) : CycNum(conductor, Rational(value)) {}

CycNum CycNum::from_coeffs(unsigned conductor, std::span<const Rational> coeffs) {
  const auto& f = detail::field_data(conductor);
  Integer den = 1;
  for (const auto& c : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<Integer> num(std::max<std::size_t>(coeffs.size(), f.phi));
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    num[i] = coeffs[i].get_num() * (den / coeffs[i].get_den());
  }
  CycNumAccess::reduce_big(f, num);
  return CycNumAccess::from_big(f, std::move(num), std::move(den));
}

unsigned CycNum::conductor() const { return field_->L; }

std::size_t CycNum::degree() const { return field_->phi; }

const std::vector<Integer>& CycNum::big_numerators() const {
  if (!big_) throw std::logic_error("big_numerators on a small CycNum");
  return big_->num;
}

const Integer& CycNum::big_denominator() const {
  if (!big_) throw std::logic_error("big_denominator on a small CycNum");
  return big_->den;
}

Rational CycNum::coeff(std::size_t i) const {
  if (i >= field_->phi) throw std::out_of_range("CycNum::coeff index");
  Rational q;
  if (big_) {
    q = Rational(big_->num[i], big_->den);
  } else {
    q = Rational(Integer(static_cast<long>(num_[i])), Integer(static_cast<long>(den_)));
  }
  q.canonicalize();
  return q;
}

std::vector<Rational> CycNum::coeffs() const {
  std::vector<Rational> out;
  out.reserve(field_->phi);
  for (std::size_t i = 0; i < field_->phi; ++i) out.push_back(coeff(i));
  return out;
}

bool CycNum::is_zero() const {
  if (big_) return false;  // canonical zero is always small
  return std::all_of(num_.begin(), num_.end(), [](std::int64_t v) { return v == 0; });
}

bool CycNum::is_rational() const {
  if (big_) {
    return std::all_of(big_->num.begin() + 1, big_->num.end(), [](const Integer& v) { return v == 0; });
  }
  return std::all_of(num_.begin() + 1, num_.end(), [](std::int64_t v) { return v == 0; });
}

bool CycNum::is_one() const { return !big_ && den_ == 1 && num_[0] == 1 && is_rational(); }

std::optional<Rational> CycNum::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return coeff(0);
}

std::size_t CycNum::nonzero_terms() const {
  if (big_) return static_cast<std::size_t>(std::count_if(big_->num.begin(), big_->num.end(), [](const Integer& v) { return v != 0; }));
  return static_cast<std::size_t>(std::count_if(num_.begin(), num_.end(), [](std::int64_t v) { return v != 0; }));
}

namespace {

void require_same_field(const CycNum& a, const CycNum& b) {
  if (a.conductor() != b.conductor()) {
    throw ConductorError("conductor mismatch: " + std::to_string(a.conductor()) + " vs " + std::to_string(b.conductor()));
  }
}

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Polynomial long division over Q; b must be nonzero.
void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  r = a;
  trim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Rational(0));
  const Rational lead_inv = 1 / b.back();
  while (r.size() >= b.size() && !r.empty()) {
    const std::size_t shift = r.size() - b.size();
    const Rational t = r.back() * lead_inv;
    q[shift] = t;
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= t * b[i];
    r.pop_back();
    trim(r);
  }
}

QPoly poly_sub_mul(const QPoly& a, const QPoly& q, const QPoly& b) {
  QPoly out(std::max(a.size(), q.empty() || b.empty() ? 0 : q.size() + b.size() - 1), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] -= q[i] * b[j];
  }
  trim(out);
  return out;
}

}  // namespace

CycNum CycNum::inv() const {
  if (is_zero()) throw ArithmeticError("division by zero in Q(zeta_" + std::to_string(conductor()) + ")");
  if (auto q = as_rational()) return CycNum(conductor(), Rational(1 / *q));
  // Extended Euclid against Phi_L: s * a + t * Phi = gcd, a unit since Phi is
  // irreducible and a != 0 mod Phi.
  QPoly r0(field_->modulus.begin(), field_->modulus.end());
  QPoly r1 = coeffs();
  trim(r1);
  QPoly s0;
  QPoly s1{Rational(1)};
  while (r1.size() > 1) {
    QPoly q, r;
    divmod(r0, r1, q, r);
    QPoly s2 = poly_sub_mul(s0, q, s1);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.empty()) throw ArithmeticError("element not invertible modulo the cyclotomic polynomial");
  const Rational c = r1[0];
  for (auto& v : s1) v /= c;
  return from_coeffs(conductor(), s1);
}

CycNum& CycNum::operator+=(const CycNum& b) {
  require_same_field(*this, b);
  *this = CycNumAccess::add(*this, b, false);
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& b) {
  require_same_field(*this, b);
  *this = CycNumAccess::add(*this, b, true);
  return *this;
}

CycNum operator*(const CycNum& a, const CycNum& b) {
  require_same_field(a, b);
  return CycNumAccess::mul(a, b);
}

CycNum& CycNum::operator*=(const CycNum& b) { return *this = *this * b; }

CycNum& CycNum::operator/=(const CycNum& b) { return *this = *this / b; }

CycNum CycNum::operator-() const {
  CycNum r = *this;
  if (r.big_) {
    auto num = r.big_->num;
    for (auto& v : num) v = -v;
    return CycNumAccess::from_big(*field_, std::move(num), r.big_->den);
  }
  for (auto& v : r.num_) v = -v;
  return r;
}

bool operator==(const CycNum& a, const CycNum& b) {
  if (a.field_ != b.field_) return false;
  if (static_cast<bool>(a.big_) != static_cast<bool>(b.big_)) return false;
  if (a.big_) return a.big_->den == b.big_->den && a.big_->num == b.big_->num;
  return a.den_ == b.den_ && a.num_ == b.num_;
}

std::size_t CycNum::hash() const {
  std::size_t h = std::hash<unsigned>{}(field_->L);
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  if (big_) {
    mix(mpz_get_ui(big_->den.get_mpz_t()));
    for (const auto& v : big_->num) mix(mpz_get_ui(v.get_mpz_t()) ^ static_cast<std::size_t>(mpz_sgn(v.get_mpz_t()) + 1));
  } else {
    mix(static_cast<std::size_t>(den_));
    for (auto v : num_) mix(static_cast<std::size_t>(v));
  }
  return h;
}

CycNum zeta_power(unsigned L, long long j) {
  const auto& f = detail::field_data(L);
  const auto k = static_cast<unsigned>(((j % static_cast<long long>(L)) + L) % L);
  if (k < f.phi) {
    std::vector<Rational> c(k + 1);
    c[k] = 1;
    return CycNum::from_coeffs(L, c);
  }
  return f.power(k);
}

CycNum imaginary_unit(unsigned L) {
  if (L % 4 != 0) throw ConductorError("i requires a conductor divisible by 4, got " + std::to_string(L));
  return zeta_power(L, L / 4);
}

CycNum embed(const CycNum& a, unsigned L2) {
  const unsigned L = a.conductor();
  if (L2 == 0 || L2 % L != 0) {
    throw ConductorError("embed: " + std::to_string(L) + " does not divide " + std::to_string(L2));
  }
  if (L2 == L) return a;
  const auto& target = detail::field_data(L2);
  if (auto q = a.as_rational()) return CycNum(L2, *q);
  const unsigned step = L2 / L;
  std::vector<unsigned> exps(a.degree());
  for (unsigned i = 0; i < exps.size(); ++i) exps[i] = i * step;
  return CycNumAccess::combine_powers(target, CycNumAccess::big_num(a), exps, CycNumAccess::big_den(a));
}

std::optional<CycNum> descend(const CycNum& a, unsigned L2) {
  const unsigned L = a.conductor();
  if (L2 == 0 || L % L2 != 0) {
    throw ConductorError("descend: " + std::to_string(L2) + " does not divide " + std::to_string(L));
  }
  if (L2 == L) return a;
  if (auto q = a.as_rational()) return CycNum(L2, *q);
  // Solve sum_i b_i zeta_L^{i*L/L2} = a over Q.
  const unsigned step = L / L2;
  const unsigned unknowns = euler_phi(L2);
  const unsigned eqs = a.degree();
  std::vector<std::vector<Rational>> m(eqs, std::vector<Rational>(unknowns + 1));
  for (unsigned i = 0; i < unknowns; ++i) {
    const CycNum col = zeta_power(L, static_cast<long long>(i) * step);
    const auto c = col.coeffs();
    for (unsigned r = 0; r < eqs; ++r) m[r][i] = c[r];
  }
  const auto rhs = a.coeffs();
  for (unsigned r = 0; r < eqs; ++r) m[r][unknowns] = rhs[r];
  std::vector<unsigned> pivot_row(unknowns, eqs);
  unsigned row = 0;
  for (unsigned c = 0; c < unknowns && row < eqs; ++c) {
    unsigned p = row;
    while (p < eqs && m[p][c] == 0) ++p;
    if (p == eqs) continue;
    std::swap(m[p], m[row]);
    const Rational inv = 1 / m[row][c];
    for (unsigned k = c; k <= unknowns; ++k) m[row][k] *= inv;
    for (unsigned r = 0; r < eqs; ++r) {
      if (r == row || m[r][c] == 0) continue;
      const Rational t = m[r][c];
      for (unsigned k = c; k <= unknowns; ++k) m[r][k] -= t * m[row][k];
    }
    pivot_row[c] = row;
    ++row;
  }
  for (unsigned r = row; r < eqs; ++r) {
    if (m[r][unknowns] != 0) return std::nullopt;
  }
  std::vector<Rational> b(unknowns);
  for (unsigned c = 0; c < unknowns; ++c) {
    if (pivot_row[c] < eqs) b[c] = m[pivot_row[c]][unknowns];
  }
  return CycNum::from_coeffs(L2, b);
}

bool same_value(const CycNum& a, const CycNum& b) {
  if (a.conductor() == b.conductor()) return a == b;
  const unsigned g = std::gcd(a.conductor(), b.conductor());
  const auto da = descend(a, g);
  if (!da) return false;
  const auto db = descend(b, g);
  return db && *da == *db;
}

CycNum conj(const CycNum& a) {
  if (a.is_rational()) return a;
  const auto& f = a.field();
  std::vector<unsigned> exps(f.phi);
  for (unsigned i = 0; i < f.phi; ++i) exps[i] = (f.L - i) % f.L;
  return CycNumAccess::combine_powers(f, CycNumAccess::big_num(a), exps, CycNumAccess::big_den(a));
}

bool is_real(const CycNum& a) { return conj(a) == a; }

std::pair<CycNum, CycNum> real_imag_parts(const CycNum& a) {
  const unsigned L = a.conductor();
  if (L % 4 != 0) throw ConductorError("real_imag_parts requires 4 | L, got " + std::to_string(L));
  const CycNum c = conj(a);
  const CycNum half(L, Rational(1, 2));
  const CycNum minus_i = zeta_power(L, 3LL * L / 4);
  return {(a + c) * half, (a - c) * minus_i * half};
}

std::string to_string(const CycNum& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto c = a.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    Rational v = c[i];
    if (!first) {
      os << (v < 0 ? " - " : " + ");
      v = abs(v);
    } else if (v < 0) {
      os << "-";
      v = abs(v);
    }
    first = false;
    if (i == 0) {
      os << v.get_str();
    } else {
      if (v != 1) os << v.get_str() << "*";
      os << "z" << a.conductor();
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycNum& a) { return os << to_string(a); }

}  // namespace rotarr
