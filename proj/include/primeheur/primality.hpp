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

#ifndef PRIMEHEUR_PRIMALITY_HPP
#define PRIMEHEUR_PRIMALITY_HPP

#include <cstdint>

namespace primeheur {

// Exact deterministic primality for any 64-bit n.
//
// Strong-pseudoprime test with the fixed witness set
//   {2, 325, 9375, 28178, 450775, 9780504, 1795265022}
// which is known to classify every n < 2^64 correctly (verified against the
// Feitsma-Galway pseudoprime tables). The schedule is never randomized.
bool is_prime64(uint64_t n);

// (a * b) mod m and (a ^ e) mod m without overflow.
uint64_t mulmod64(uint64_t a, uint64_t b, uint64_t m);
uint64_t powmod64(uint64_t a, uint64_t e, uint64_t m);

}  // namespace primeheur

#endif  // PRIMEHEUR_PRIMALITY_HPP
