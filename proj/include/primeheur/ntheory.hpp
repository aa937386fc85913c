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

#ifndef PRIMEHEUR_NTHEORY_HPP
#define PRIMEHEUR_NTHEORY_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace primeheur {

// Legendre symbol (a|p). 0 iff p | a, else +-1 by quadratic residuosity.
// Rejects p even or p not prime with std::invalid_argument.
int legendre(int64_t a, uint64_t p);

// Multiplicative order of a mod p (odd prime). Rejects p | a.
uint64_t mult_order(uint64_t a, uint64_t p);

// Prime factorization of any 64-bit n >= 2 as (prime, exponent) pairs,
// ascending. Trial division up to 2^20 then Pollard rho.
std::vector<std::pair<uint64_t, unsigned>> factor64(uint64_t n);

// Chebyshev theta: sum of log p over primes p <= x, accumulated with
// compensated summation in extended precision.
double chebyshev_theta(uint64_t x);

uint64_t gcd64(uint64_t a, uint64_t b);
uint64_t isqrt64(uint64_t n);

}  // namespace primeheur

#endif  // PRIMEHEUR_NTHEORY_HPP
