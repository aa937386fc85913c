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

#ifndef PRIMEHEUR_CENSUS_HPP
#define PRIMEHEUR_CENSUS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "primeheur/predictor.hpp"

namespace primeheur {

enum class Certainty { proven, probable };
enum class GoldbachConvention { unordered, ordered };

struct CensusResult {
  FamilySpec family;
  uint64_t bound = 0;
  uint64_t count = 0;
  double elapsed_seconds = 0;
  Certainty certainty = Certainty::proven;
};

struct CensusOptions {
  unsigned threads = 0;   // 0 = all available
  bool progress = false;  // force progress lines (auto for ranges >= 1e8)
  // When set, the starting prime / index of each hit is collected
  // (serial path; small N only).
  std::vector<uint64_t>* hits = nullptr;
};

// Desk limits, enforced with capacity_error:
//   twin/pair/ap/sophie-germain/cunningham/goldbach: N <= 1e9
//   ap-any: N <= 1e5   quadratic: N <= 1e14 (only sqrt(N) enumerated)
//   cullen/woodall/primorial/factorial/repunit: N <= 1e4
CensusResult count(const FamilySpec& fam, uint64_t N,
                   const CensusOptions& opts = {});

// Serial reference implementation over a plain sieve (or trial division),
// kept independent of the parallel kernels for testing.
uint64_t count_reference(const FamilySpec& fam, uint64_t N);

// Representations of even m as a sum of two primes.
uint64_t goldbach_reps(uint64_t m, GoldbachConvention conv);

// Solutions n in [0, L) of n 2^n == a (mod p), n 2^n == b (mod q), where
// L = lcm(pq, ord_p(2), ord_q(2)), counted by direct enumeration.
uint64_t crt_solution_count(uint64_t p, uint64_t q, int64_t a, int64_t b);

struct FactorialDivisibility {
  bool ii_applicable = false;  // n prime
  bool ii_holds = true;        // n | (n-1)!+1 and n | (n-2)!-1
  bool iii_applicable = false; // n odd and 2n+1 prime
  bool iii_holds = true;       // 2n+1 divides exactly one of n! +- 1
  uint64_t iv_checked = 0;     // primes p <= limit dividing n! +- 1
  bool iv_holds = true;        // p divides exactly one of (p-n-1)! +- 1
  bool all_hold() const {
    return (!ii_applicable || ii_holds) && (!iii_applicable || iii_holds) &&
           iv_holds;
  }
};

FactorialDivisibility factorial_divisibility_check(
    uint32_t n, uint64_t prime_limit = 1'000'000);

// Same checks swept over every n <= n_max (single pass per prime).
bool factorial_divisibility_all(uint32_t n_max,
                                uint64_t prime_limit = 1'000'000,
                                uint64_t* iv_hits = nullptr);

// Counts of primes k n! + 1 and k n! - 1 over 1 <= k <= kmax, 1 <= n <= nmax.
std::pair<uint64_t, uint64_t> kfactorial_prime_counts(unsigned kmax,
                                                      unsigned nmax,
                                                      unsigned threads = 0);

}  // namespace primeheur

#endif  // PRIMEHEUR_CENSUS_HPP
