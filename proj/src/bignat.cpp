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

#include "primeheur/bignat.hpp"

#include <cctype>
#include <memory>

namespace primeheur {

BigNat::BigNat(const std::string& decimal) {
  if (decimal.empty())
    throw std::invalid_argument("BigNat: empty decimal string");
  for (char c : decimal)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("BigNat: not a decimal natural: " + decimal);
  mpz_init(z_);
  if (mpz_set_str(z_, decimal.c_str(), 10) != 0) {
    mpz_clear(z_);
    throw std::invalid_argument("BigNat: bad decimal string: " + decimal);
  }
}

std::string BigNat::to_string() const {
  char* s = mpz_get_str(nullptr, 10, z_);
  std::string out(s);
  void (*freefn)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefn);
  freefn(s, out.size() + 1);
  return out;
}

uint64_t BigNat::to_u64() const {
  if (!mpz_fits_ulong_p(z_))
    throw std::overflow_error("BigNat::to_u64: value exceeds 64 bits");
  return mpz_get_ui(z_);
}

BigNat& BigNat::operator-=(uint64_t v) {
  if (mpz_cmp_ui(z_, v) < 0)
    throw std::underflow_error("BigNat: subtraction would go negative");
  mpz_sub_ui(z_, z_, v);
  return *this;
}

uint64_t BigNat::mod_u64(uint64_t m) const {
  if (m == 0) throw std::invalid_argument("BigNat::mod_u64: zero modulus");
  return mpz_fdiv_ui(z_, m);
}

BigNat pow(const BigNat& a, uint64_t e) {
  BigNat r;
  mpz_pow_ui(r.raw(), a.raw(), e);
  return r;
}

BigNat repunit(uint64_t base, uint64_t k) {
  if (base < 2) throw std::invalid_argument("repunit: base must be >= 2");
  if (k == 0) return BigNat(0);
  BigNat r = pow(BigNat(base), k);
  r -= 1;
  BigNat d(base - 1);
  BigNat q;
  mpz_divexact(q.raw(), r.raw(), d.raw());
  return q;
}

BigNat primorial(uint64_t p) {
  BigNat r;
  mpz_primorial_ui(r.raw(), p);
  return r;
}

BigNat factorial(uint64_t n) {
  BigNat r;
  mpz_fac_ui(r.raw(), n);
  return r;
}

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

bool is_probable_prime(const BigNat& n, unsigned rounds) {
  if (rounds < 1) throw std::invalid_argument("is_probable_prime: rounds >= 1");
  if (mpz_cmp_ui(n.raw(), 4) < 0) return mpz_cmp_ui(n.raw(), 2) >= 0;
  if (mpz_even_p(n.raw())) return false;

  // n - 1 = d * 2^s
  mpz_t nm1, d, x, w;
  mpz_inits(nm1, d, x, w, nullptr);
  mpz_sub_ui(nm1, n.raw(), 1);
  mp_bitcnt_t s = mpz_scan1(nm1, 0);
  mpz_fdiv_q_2exp(d, nm1, s);

  mpz_t nm3;
  mpz_init(nm3);
  mpz_sub_ui(nm3, n.raw(), 3);

  bool composite = false;
  for (unsigned j = 0; j < rounds && !composite; ++j) {
    if (j == 0) {
      mpz_set_ui(w, 2);
    } else {
      mpz_set_ui(w, 0);
      uint64_t r = splitmix64(kWitnessSeed + j);
      mpz_import(w, 1, 1, sizeof(r), 0, 0, &r);
      mpz_mod(w, w, nm3);
      mpz_add_ui(w, w, 2);  // witness in [2, n-2]
    }
    mpz_powm(x, w, d, n.raw());
    if (mpz_cmp_ui(x, 1) == 0 || mpz_cmp(x, nm1) == 0) continue;
    bool witness_says_composite = true;
    for (mp_bitcnt_t i = 1; i < s; ++i) {
      mpz_mul(x, x, x);
      mpz_mod(x, x, n.raw());
      if (mpz_cmp(x, nm1) == 0) {
        witness_says_composite = false;
        break;
      }
    }
    composite = witness_says_composite;
  }
  mpz_clears(nm1, d, x, w, nm3, nullptr);
  return !composite;
}

}  // namespace primeheur
