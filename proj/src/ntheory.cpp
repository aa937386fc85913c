// Copyright 2026 The primeheur authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "primeheur/ntheory.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "primeheur/bignat.hpp"
#include "primeheur/primality.hpp"
#include "primeheur/sieve.hpp"

namespace primeheur {

uint64_t gcd64(uint64_t a, uint64_t b) { return std::gcd(a, b); }

uint64_t isqrt64(uint64_t n) {
  if (n == 0) return 0;
  uint64_t r = uint64_t(std::sqrt(double(n)));
  while (r > 0 && r > n / r) --r;
  while ((r + 1) <= n / (r + 1)) ++r;
  return r;
}

int legendre(int64_t a, uint64_t p) {
  if (p == 2 || (p & 1) == 0 || !is_prime64(p))
    throw std::invalid_argument("legendre: p must be an odd prime");
  uint64_t am = uint64_t(((a % int64_t(p)) + int64_t(p)) % int64_t(p));
  if (am == 0) return 0;
  uint64_t e = powmod64(am, (p - 1) / 2, p);
  if (e == 1) return 1;
  if (e == p - 1) return -1;
  throw std::logic_error("legendre: Euler criterion failed (p not prime?)");
}

namespace {

uint64_t pollard_rho(uint64_t n) {
  // n odd composite, no factor <= 2^20
  for (uint64_t c = 1;; ++c) {
    uint64_t x = 2, y = 2, d = 1;
    auto step = [&](uint64_t v) { return (mulmod64(v, v, n) + c) % n; };
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      uint64_t diff = x > y ? x - y : y - x;
      if (diff == 0) {
        d = 0;
        break;
      }
      d = gcd64(diff, n);
    }
    if (d != 0 && d != n) return d;
  }
}

void factor_rec(uint64_t n, std::vector<uint64_t>& out) {
  if (n == 1) return;
  if (is_prime64(n)) {
    out.push_back(n);
    return;
  }
  uint64_t d = pollard_rho(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

std::vector<std::pair<uint64_t, unsigned>> factor64(uint64_t n) {
  if (n < 2) throw std::invalid_argument("factor64: n >= 2 required");
  std::vector<uint64_t> fl;
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
    while (n % p == 0) {
      fl.push_back(p);
      n /= p;
    }
  }
  for (uint64_t p = 17; p <= (1u << 20) && p * p <= n; p += 2) {
    while (n % p == 0) {
      fl.push_back(p);
      n /= p;
    }
  }
  if (n > 1) factor_rec(n, fl);
  std::sort(fl.begin(), fl.end());
  std::vector<std::pair<uint64_t, unsigned>> out;
  for (uint64_t p : fl) {
    if (!out.empty() && out.back().first == p)
      ++out.back().second;
    else
      out.emplace_back(p, 1);
  }
  return out;
}

uint64_t mult_order(uint64_t a, uint64_t p) {
  if (p == 2 || (p & 1) == 0 || !is_prime64(p))
    throw std::invalid_argument("mult_order: p must be an odd prime");
  if (a % p == 0) throw std::invalid_argument("mult_order: p divides a");
  uint64_t order = p - 1;
  for (auto [q, e] : factor64(p - 1)) {
    for (unsigned i = 0; i < e; ++i) {
      if (powmod64(a % p, order / q, p) == 1)
        order /= q;
      else
        break;
    }
  }
  return order;
}

double chebyshev_theta(uint64_t x) {
  if (x < 2) throw std::invalid_argument("chebyshev_theta: x >= 2 required");
  // Kahan summation on 80-bit long double: >= 128 effective mantissa bits.
  long double sum = 0.0L, comp = 0.0L;
  for_each_prime(SieveConfig{x}, [&](uint64_t p) {
    long double term = logl((long double)p) - comp;
    long double t = sum + term;
    comp = (t - sum) - term;
    sum = t;
  });
  return double(sum);
}

}  // namespace primeheur
