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

#ifndef PRIMEHEUR_BIGNAT_HPP
#define PRIMEHEUR_BIGNAT_HPP

#include <gmp.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace primeheur {

// Arbitrary-precision natural number. Value-semantic wrapper over GMP;
// never negative, round-trips decimal strings exactly.
class BigNat {
 public:
  BigNat() { mpz_init(z_); }
  BigNat(uint64_t v) { mpz_init_set_ui(z_, v); }
  explicit BigNat(const std::string& decimal);

  BigNat(const BigNat& o) { mpz_init_set(z_, o.z_); }
  BigNat(BigNat&& o) noexcept {
    mpz_init(z_);
    mpz_swap(z_, o.z_);
  }
  BigNat& operator=(const BigNat& o) {
    if (this != &o) mpz_set(z_, o.z_);
    return *this;
  }
  BigNat& operator=(BigNat&& o) noexcept {
    mpz_swap(z_, o.z_);
    return *this;
  }
  ~BigNat() { mpz_clear(z_); }

  std::string to_string() const;
  bool fits_u64() const { return mpz_fits_ulong_p(z_); }
  uint64_t to_u64() const;
  size_t bit_length() const { return mpz_sizeinbase(z_, 2); }

  bool operator==(const BigNat& o) const { return mpz_cmp(z_, o.z_) == 0; }
  auto operator<=>(const BigNat& o) const {
    return mpz_cmp(z_, o.z_) <=> 0;
  }

  BigNat& operator+=(uint64_t v) {
    mpz_add_ui(z_, z_, v);
    return *this;
  }
  // Throws std::underflow_error if the result would be negative.
  BigNat& operator-=(uint64_t v);
  BigNat& operator*=(uint64_t v) {
    mpz_mul_ui(z_, z_, v);
    return *this;
  }
  BigNat& operator*=(const BigNat& o) {
    mpz_mul(z_, z_, o.z_);
    return *this;
  }

  friend BigNat operator+(BigNat a, uint64_t v) { return a += v; }
  friend BigNat operator-(BigNat a, uint64_t v) { return a -= v; }
  friend BigNat operator*(BigNat a, const BigNat& b) { return a *= b; }
  friend BigNat operator*(BigNat a, uint64_t v) { return a *= v; }

  // n * 2^e
  BigNat shifted_left(uint64_t e) const {
    BigNat r(*this);
    mpz_mul_2exp(r.z_, r.z_, e);
    return r;
  }

  uint64_t mod_u64(uint64_t m) const;

  // GMP interop for the primality layer.
  const __mpz_struct* raw() const { return z_; }
  __mpz_struct* raw() { return z_; }

 private:
  mpz_t z_;
};

// a^e
BigNat pow(const BigNat& a, uint64_t e);
// (a^k - 1) / (a - 1), the base-a repunit with k digits.
BigNat repunit(uint64_t base, uint64_t k);
// Product of all primes <= p (1 for p < 2).
BigNat primorial(uint64_t p);
// n! with 0! = 1.
BigNat factorial(uint64_t n);

// Strong-pseudoprime (Miller-Rabin) test.
//
// false => composite with certainty; true => prime with error probability
// <= 4^-rounds. Deterministic for a given (n, rounds): witness j is
//   w_0 = 2,    w_j = 2 + (splitmix64(kWitnessSeed + j) mod (n - 3))  (j >= 1)
// with the published seed below. The schedule is never randomized.
inline constexpr uint64_t kWitnessSeed = 0xda3e39cb94b95bdbULL;
bool is_probable_prime(const BigNat& n, unsigned rounds = 32);

// splitmix64 mixer (shared by the witness schedule and test generators).
uint64_t splitmix64(uint64_t x);

}  // namespace primeheur

#endif  // PRIMEHEUR_BIGNAT_HPP
