#pragma once

#include <cstdint>
#include <map>
#include <numeric>

namespace permdiam {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

// prime -> multiplicity; complete for every input this project produces
// (trial division then a primality check on the cofactor).
inline std::map<std::uint64_t, std::uint64_t> factorize_u64(std::uint64_t n) {
  std::map<std::uint64_t, std::uint64_t> f;
  for (std::uint64_t p = 2; p * p <= n && p <= 1000000; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      ++f[p];
      n /= p;
    }
  }
  if (n > 1) {
    if (!is_prime_u64(n)) {
      // two large prime factors; Pollard rho would be overkill here
      for (std::uint64_t p = 1000001;; p += 2) {
        if (n % p == 0) {
          while (n % p == 0) {
            ++f[p];
            n /= p;
          }
          if (n == 1 || is_prime_u64(n)) break;
        }
      }
    }
    if (n > 1) ++f[n];
  }
  return f;
}

inline std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
  return a / std::gcd(a, b) * b;
}

}  // namespace permdiam
