#include "rotarr/real_embedding.hpp"

#include <cmath>
#include <numbers>

namespace rotarr {

namespace {

Rational pow2(long e) {
  Rational r(1);
  if (e >= 0) {
    mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-e));
  }
  r.canonicalize();
  return r;
}

// Outward rounding to the dyadic grid 2^-bits keeps denominators bounded.
Rational round_down(const Rational& q, unsigned bits) {
  Integer scaled = q.get_num() << bits;
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), scaled.get_mpz_t(), q.get_den_mpz_t());
  Rational r(fl, Integer(1) << bits);
  r.canonicalize();
  return r;
}

Rational round_up(const Rational& q, unsigned bits) {
  Integer scaled = q.get_num() << bits;
  Integer cl;
  mpz_cdiv_q(cl.get_mpz_t(), scaled.get_mpz_t(), q.get_den_mpz_t());
  Rational r(cl, Integer(1) << bits);
  r.canonicalize();
  return r;
}

// atan(1/x) by its alternating series; consecutive partial sums bracket it.
RationalInterval atan_inverse(long x, unsigned bits) {
  const Rational eps = pow2(-static_cast<long>(bits) - 4);
  Rational sum(0);
  Rational power(1, x);  // 1/x^(2k+1)
  const Rational x2(x * x);
  for (long k = 0;; ++k) {
    Rational term = power / (2 * k + 1);
    term.canonicalize();
    Rational next = (k % 2 == 0) ? Rational(sum + term) : Rational(sum - term);
    if (term < eps) {
      return sum < next ? RationalInterval{sum, next} : RationalInterval{next, sum};
    }
    sum = next;
    power /= x2;
  }
}

struct TrigEnclosure {
  RationalInterval cos;
  RationalInterval sin;
};

// cos and sin of 2*pi*num/den.
TrigEnclosure trig_of_fraction(long num, long den, unsigned bits) {
  const unsigned work = bits + 16;
  const RationalInterval pi = pi_enclosure(work);
  const Rational t(num, den);
  Rational lo = 2 * t * pi.lo;
  Rational hi = 2 * t * pi.hi;
  if (lo > hi) std::swap(lo, hi);
  Rational mid = round_down((lo + hi) / 2, work);
  const Rational radius = std::max(Rational(hi - mid), Rational(mid - lo));

  // Taylor series at the midpoint; the Lagrange remainder is bounded by
  // |mid|^(n)/n! once terms are decreasing.
  const Rational eps = pow2(-static_cast<long>(work));
  Rational cos_sum(0);
  Rational sin_sum(0);
  Rational term(1);  // mid^n / n!
  Rational remainder(0);
  for (long n = 0;; ++n) {
    switch (n % 4) {
      case 0: cos_sum += term; break;
      case 1: sin_sum += term; break;
      case 2: cos_sum -= term; break;
      default: sin_sum -= term; break;
    }
    term *= mid;
    term /= (n + 1);
    const Rational mag = abs(term);
    if (n > 4 && mag < eps && abs(mid) < n + 1) {
      remainder = mag;
      break;
    }
  }
  const Rational err = remainder + radius;
  auto enclose = [&](const Rational& v) {
    return RationalInterval{round_down(v - err, work), round_up(v + err, work)};
  };
  return {enclose(cos_sum), enclose(sin_sum)};
}

}  // namespace

RationalInterval pi_enclosure(unsigned bits) {
  const RationalInterval a = atan_inverse(5, bits + 6);
  const RationalInterval b = atan_inverse(239, bits + 6);
  return {16 * a.lo - 4 * b.hi, 16 * a.hi - 4 * b.lo};
}

RationalInterval real_part_enclosure(const CycNum& a, unsigned bits) {
  const unsigned L = a.conductor();
  const auto c = a.coeffs();
  RationalInterval acc{Rational(0), Rational(0)};
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] == 0) continue;
    RationalInterval cj{Rational(1), Rational(1)};
    if (j != 0) cj = trig_of_fraction(static_cast<long>(j), static_cast<long>(L), bits).cos;
    if (c[j] > 0) {
      acc.lo += c[j] * cj.lo;
      acc.hi += c[j] * cj.hi;
    } else {
      acc.lo += c[j] * cj.hi;
      acc.hi += c[j] * cj.lo;
    }
  }
  return acc;
}

int real_sign(const CycNum& a) {
  if (!is_real(a)) throw std::invalid_argument("real_sign: value is not fixed by conjugation");
  if (a.is_zero()) return 0;
  if (auto q = a.as_rational()) return sgn(*q);
  for (unsigned bits = 48;; bits *= 2) {
    const RationalInterval e = real_part_enclosure(a, bits);
    if (e.lo > 0) return 1;
    if (e.hi < 0) return -1;
    if (bits > (1U << 16)) throw std::runtime_error("real_sign: refinement did not separate a nonzero value from 0");
  }
}

std::complex<double> approximate(const CycNum& a) {
  const auto c = a.coeffs();
  std::complex<double> z(0.0, 0.0);
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] == 0) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / a.conductor();
    z += c[j].get_d() * std::polar(1.0, angle);
  }
  return z;
}

}  // namespace rotarr
