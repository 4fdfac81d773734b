#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace hopfforge {

inline long gcd_l(long a, long b) { return std::gcd(a, b); }

inline long lcm_l(long a, long b) { return std::lcm(a, b); }

// positive representative of a mod n, n > 0
inline long mod_l(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

inline long floordiv_l(long a, long n) {
  long q = a / n;
  if (a % n != 0 && ((a < 0) != (n < 0))) --q;
  return q;
}

inline unsigned totient(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

inline std::vector<unsigned> divisors(unsigned n) {
  std::vector<unsigned> small, large;
  for (unsigned d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
  return small;
}

// solves a*x ≡ 1 (mod n); requires gcd(a,n)=1
inline long inverse_mod(long a, long n) {
  long t = 0, newt = 1, r = n, newr = mod_l(a, n);
  while (newr != 0) {
    long q = r / newr;
    std::swap(t -= q * newt, newt);
    std::swap(r -= q * newr, newr);
  }
  return mod_l(t, n);
}

inline std::vector<unsigned> units_mod(unsigned n) {
  std::vector<unsigned> us;
  for (unsigned x = 1; x <= n; ++x)
    if (std::gcd(x, n) == 1) us.push_back(x % n);
  if (n == 1) us = {0};
  return us;
}

}  // namespace hopfforge
