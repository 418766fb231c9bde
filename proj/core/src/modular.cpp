#include "rotarr/modular.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace rotarr {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e != 0) {
    if (e & 1U) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1U;
  }
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q != 0) continue;
    out.push_back(q);
    while (n % q == 0) n /= q;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t reduce_integer(const Integer& z, std::uint64_t p) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return r.get_ui();
}

std::uint64_t reduce_small(std::int64_t v, std::uint64_t p) {
  const auto m = static_cast<std::int64_t>(v % static_cast<std::int64_t>(p));
  return static_cast<std::uint64_t>(m < 0 ? m + static_cast<std::int64_t>(p) : m);
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // Deterministic for all 64-bit n with these bases.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

ModularImage::ModularImage(unsigned M) : M_(M) {
  if (M == 0) throw ConductorError("ModularImage: conductor must be positive");
  constexpr std::uint64_t kTop = (1ULL << 62) - 1;
  for (std::uint64_t k = kTop / M; k > 0; --k) {
    const std::uint64_t candidate = k * M + 1;
    if (is_prime_u64(candidate)) {
      p_ = candidate;
      break;
    }
  }
  if (p_ == 0) throw std::runtime_error("ModularImage: no prime found");
  const auto factors = prime_factors(M);
  for (std::uint64_t g = 2;; ++g) {
    const std::uint64_t w = powmod(g, (p_ - 1) / M, p_);
    bool primitive = true;
    for (std::uint64_t q : factors) {
      if (powmod(w, M / q, p_) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      omega_ = w;
      break;
    }
  }
}

const ModularImage& ModularImage::for_conductor(unsigned M) {
  static std::mutex mutex;
  static std::map<unsigned, std::unique_ptr<const ModularImage>> cache;
  thread_local const ModularImage* last = nullptr;
  if (last != nullptr && last->M_ == M) return *last;
  std::lock_guard lock(mutex);
  auto& slot = cache[M];
  if (!slot) slot = std::make_unique<const ModularImage>(M);
  last = slot.get();
  return *slot;
}

std::uint64_t ModularImage::mul(std::uint64_t a, std::uint64_t b) const { return mulmod(a, b, p_); }

std::uint64_t ModularImage::add(std::uint64_t a, std::uint64_t b) const {
  const std::uint64_t s = a + b;
  return s >= p_ ? s - p_ : s;
}

std::uint64_t ModularImage::sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }

std::uint64_t ModularImage::pow(std::uint64_t a, std::uint64_t e) const { return powmod(a, e, p_); }

std::uint64_t ModularImage::inverse(std::uint64_t a) const {
  if (a == 0) throw ArithmeticError("modular inverse of 0");
  return powmod(a, p_ - 2, p_);
}

std::optional<std::uint64_t> ModularImage::evaluate(const CycNum& a) const {
  const unsigned L = a.conductor();
  if (M_ % L != 0) throw ConductorError("ModularImage: conductor does not divide the image conductor");
  const std::uint64_t w = powmod(omega_, M_ / L, p_);
  std::uint64_t acc = 0;
  std::uint64_t den = 0;
  if (a.is_small()) {
    const auto num = a.small_numerators();
    for (std::size_t i = num.size(); i-- > 0;) acc = add(mul(acc, w), reduce_small(num[i], p_));
    den = reduce_small(a.small_denominator(), p_);
  } else {
    const auto& num = a.big_numerators();
    for (std::size_t i = num.size(); i-- > 0;) acc = add(mul(acc, w), reduce_integer(num[i], p_));
    den = reduce_integer(a.big_denominator(), p_);
  }
  if (den == 0) return std::nullopt;
  return mul(acc, inverse(den));
}

std::size_t ModularImage::rank(std::vector<std::uint64_t> m, std::size_t rows, std::size_t cols) const {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(m[piv * cols + k], m[r * cols + k]);
    }
    const std::uint64_t inv = inverse(m[r * cols + c]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const std::uint64_t f = m[i * cols + c];
      if (f == 0) continue;
      const std::uint64_t t = mul(f, inv);
      for (std::size_t k = c; k < cols; ++k) m[i * cols + k] = sub(m[i * cols + k], mul(t, m[r * cols + k]));
    }
    ++r;
  }
  return r;
}

std::optional<std::size_t> modular_rank(std::span<const CycNum> entries, std::size_t rows, std::size_t cols,
                                        const ModularImage& image) {
  std::vector<std::uint64_t> m(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].is_zero()) {
      m[i] = 0;
      continue;
    }
    auto v = image.evaluate(entries[i]);
    if (!v) return std::nullopt;
    m[i] = *v;
  }
  return image.rank(std::move(m), rows, cols);
}

}  // namespace rotarr
