#include "locnil/factor.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "locnil/error.hpp"

namespace locnil {

namespace {

constexpr std::uint64_t kTrialLimit = 1000000;

std::uint64_t rho_u64(std::uint64_t n, std::uint64_t c) {
  auto f = [&](std::uint64_t x) { return (mulmod_u64(x, x, n) + c) % n; };
  std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
  std::uint64_t r = 1;
  constexpr std::uint64_t m = 128;
  do {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) y = f(y);
    std::uint64_t k = 0;
    do {
      ys = y;
      for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
        y = f(y);
        q = mulmod_u64(q, x > y ? x - y : y - x, n);
      }
      g = gcd_u64(q, n);
      k += m;
    } while (k < r && g == 1);
    r *= 2;
  } while (g == 1);
  if (g == n) {
    do {
      ys = f(ys);
      g = gcd_u64(x > ys ? x - ys : ys - x, n);
    } while (g == 1);
  }
  return g;
}

void factor_rec_u64(std::uint64_t n, std::map<std::uint64_t, unsigned>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    ++out[n];
    return;
  }
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t d = rho_u64(n, c);
    if (d != n && d != 1) {
      factor_rec_u64(d, out);
      factor_rec_u64(n / d, out);
      return;
    }
  }
}

// Brent's variant over arbitrary precision; returns 0 when the budget runs out.
Integer rho_mpz(const Integer& n, unsigned long c, unsigned long budget) {
  Integer x = 2, y = 2, ys = 2, q = 1, g = 1, t;
  unsigned long r = 1, spent = 0;
  constexpr unsigned long m = 128;
  auto f = [&](Integer& v) {
    v = v * v + c;
    mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
  };
  do {
    x = y;
    for (unsigned long i = 0; i < r; ++i) f(y);
    unsigned long k = 0;
    do {
      ys = y;
      for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
        f(y);
        t = abs(x - y);
        q = (q * t) % n;
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += m;
      spent += m;
    } while (k < r && g == 1);
    r *= 2;
    if (spent > budget) return 0;
  } while (g == 1);
  if (g == n) {
    do {
      f(ys);
      t = abs(x - ys);
      mpz_gcd(g.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  return g;
}

void factor_rec_mpz(const Integer& n, std::map<Integer, unsigned>& out) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 40) > 0) {
    ++out[n];
    return;
  }
  for (unsigned long c = 1; c <= 16; ++c) {
    Integer d = rho_mpz(n, c, 1UL << 22);
    if (d != 0 && d != 1 && d != n) {
      factor_rec_mpz(d, out);
      factor_rec_mpz(n / d, out);
      return;
    }
  }
  throw FactorizationExhausted("factorization exhausted for " + n.get_str());
}

}  // namespace

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factor_u64(std::uint64_t n) {
  if (n == 0) throw DomainError("cannot factor 0");
  std::map<std::uint64_t, unsigned> out;
  for (std::uint64_t p = 2; p * p <= n && p < 1000; ++p) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  factor_rec_u64(n, out);
  return {out.begin(), out.end()};
}

std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& value) {
  if (value == 0) throw DomainError("cannot factor 0");
  Integer n = abs(value);
  std::map<Integer, unsigned> out;
  for (unsigned long p = 2; p <= kTrialLimit; p += (p == 2 ? 1 : 2)) {
    if (Integer(p) * p > n) break;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      ++out[Integer(p)];
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
    }
  }
  if (n > 1) factor_rec_mpz(n, out);
  return {out.begin(), out.end()};
}

std::uint64_t prime_part(std::uint64_t n, std::uint64_t q) {
  std::uint64_t r = 1;
  while (n % q == 0) {
    n /= q;
    r *= q;
  }
  return r;
}

unsigned valuation(std::uint64_t n, std::uint64_t q) {
  unsigned v = 0;
  while (n % q == 0) {
    n /= q;
    ++v;
  }
  return v;
}

}  // namespace locnil
