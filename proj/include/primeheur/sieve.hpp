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

#ifndef PRIMEHEUR_SIEVE_HPP
#define PRIMEHEUR_SIEVE_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace primeheur {

// Thrown when a request exceeds the documented addressable limits.
class capacity_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SieveConfig {
  uint64_t limit = 2;                 // inclusive upper bound, >= 2
  uint64_t segment_size = 1u << 20;   // odd entries per segment, >= 1024

  void validate() const;
};

// Hard caps. The segmented routines never allocate the full range, but base
// primes up to sqrt(limit) must stay addressable.
constexpr uint64_t kMaxSegmentedLimit = uint64_t(1) << 52;
constexpr uint64_t kMaxPrimesVectorLimit = uint64_t(1) << 33;
constexpr uint64_t kMaxSimpleSieveLimit = 200'000'000;

// Serial reference sieve: byte per integer, trivially auditable.
// Throws capacity_error above kMaxSimpleSieveLimit.
std::vector<uint8_t> simple_sieve(uint64_t limit);

// Primes in [2, max(limit, 16)] as a vector (base primes for segmented work).
std::vector<uint32_t> small_primes(uint32_t limit);

// Exact primes in [2, cfg.limit], ascending. Result is independent of
// segment_size and of how segments were scheduled.
std::vector<uint64_t> primes_up_to(const SieveConfig& cfg);

// Streams primes in increasing order (segments sieved in parallel, delivered
// in order).
void for_each_prime(const SieveConfig& cfg,
                    const std::function<void(uint64_t)>& fn);

// pi(limit); limit = 0 or 1 gives 0.
uint64_t prime_count(uint64_t limit);
uint64_t prime_count(const SieveConfig& cfg);

// A sieved window [lo, hi] with O(1) primality lookup, odd-only storage.
// Used as the building block for census chunk scans.
class PrimeWindow {
 public:
  // base must contain every prime <= sqrt(hi).
  PrimeWindow(uint64_t lo, uint64_t hi, const std::vector<uint32_t>& base);

  bool is_prime(uint64_t n) const {
    if (n < lo_ || n > hi_) throw std::out_of_range("PrimeWindow::is_prime");
    if (n == 2) return true;
    if (n < 2 || (n & 1) == 0) return false;
    uint64_t i = (n - odd_lo_) >> 1;
    return (bits_[i >> 3] >> (i & 7)) & 1;
  }

  uint64_t lo() const { return lo_; }
  uint64_t hi() const { return hi_; }

  // Visits primes in [max(lo, from), hi] in increasing order.
  template <typename F>
  void for_each(uint64_t from, F&& fn) const {
    uint64_t start = std::max(from, lo_);
    if (start <= 2 && hi_ >= 2) fn(uint64_t(2));
    uint64_t n = start | 1;
    if (n < 3) n = 3;
    for (; n <= hi_; n += 2) {
      uint64_t i = (n - odd_lo_) >> 1;
      if ((bits_[i >> 3] >> (i & 7)) & 1) fn(n);
    }
  }

 private:
  uint64_t lo_, hi_, odd_lo_;
  std::vector<uint8_t> bits_;  // bit i <-> odd_lo_ + 2i is prime
};

}  // namespace primeheur

#endif  // PRIMEHEUR_SIEVE_HPP
