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

#include "primeheur/primality.hpp"

#include <bit>

namespace primeheur {

uint64_t mulmod64(uint64_t a, uint64_t b, uint64_t m) {
  return uint64_t((unsigned __int128)a * b % m);
}

uint64_t powmod64(uint64_t a, uint64_t e, uint64_t m) {
  if (m == 1) return 0;
  uint64_t r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod64(r, a, m);
    a = mulmod64(a, a, m);
    e >>= 1;
  }
  return r;
}

namespace {

// Montgomery arithmetic mod an odd n.
struct Mont64 {
  uint64_t n, ninv, r2;

  explicit Mont64(uint64_t n_) : n(n_) {
    // ninv = -n^-1 mod 2^64 via Newton iteration
    uint64_t inv = n;
    for (int i = 0; i < 5; ++i) inv *= 2 - n * inv;
    ninv = ~inv + 1;
    uint64_t r1 = uint64_t((unsigned __int128)0 - n) % n;  // 2^64 mod n
    r2 = mulmod64(r1, r1, n);                              // 2^128 mod n
  }

  uint64_t redc(unsigned __int128 t) const {
    uint64_t m = uint64_t(t) * ninv;
    unsigned __int128 u = t + (unsigned __int128)m * n;
    uint64_t r = uint64_t(u >> 64);
    return r >= n ? r - n : r;
  }

  uint64_t mul(uint64_t a, uint64_t b) const {
    return redc((unsigned __int128)a * b);
  }
  uint64_t to_mont(uint64_t a) const { return mul(a, r2); }
  uint64_t pow(uint64_t a_mont, uint64_t e) const {
    uint64_t r = to_mont(1);
    while (e) {
      if (e & 1) r = mul(r, a_mont);
      a_mont = mul(a_mont, a_mont);
      e >>= 1;
    }
    return r;
  }
};

bool sprp(const Mont64& mt, uint64_t n, uint64_t d, int s, uint64_t a) {
  a %= n;
  if (a == 0) return true;
  uint64_t x = mt.pow(mt.to_mont(a), d);
  uint64_t one = mt.to_mont(1);
  uint64_t minus1 = n - one;
  if (x == one || x == minus1) return true;
  for (int i = 1; i < s; ++i) {
    x = mt.mul(x, x);
    if (x == minus1) return true;
  }
  return false;
}

}  // namespace

bool is_prime64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                     23ull, 29ull, 31ull, 37ull}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  if (n < 41 * 41) return true;

  uint64_t d = n - 1;
  int s = std::countr_zero(d);
  d >>= s;
  Mont64 mt(n);
  for (uint64_t a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull,
                     1795265022ull}) {
    if (!sprp(mt, n, d, s, a)) return false;
  }
  return true;
}

}  // namespace primeheur
