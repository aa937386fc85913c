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

#include "primeheur/sieve.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include <omp.h>

namespace primeheur {

void SieveConfig::validate() const {
  if (limit < 2) throw std::invalid_argument("SieveConfig: limit must be >= 2");
  if (segment_size < 1024)
    throw std::invalid_argument("SieveConfig: segment_size must be >= 1024");
  if (limit > kMaxSegmentedLimit)
    throw capacity_error("sieve limit exceeds addressable size (2^52)");
}

std::vector<uint8_t> simple_sieve(uint64_t limit) {
  if (limit > kMaxSimpleSieveLimit)
    throw capacity_error("simple_sieve limit exceeds 2e8");
  std::vector<uint8_t> is(limit + 1, 1);
  if (limit >= 0) is[0] = 0;
  if (limit >= 1) is[1] = 0;
  for (uint64_t i = 2; i * i <= limit; ++i)
    if (is[i])
      for (uint64_t j = i * i; j <= limit; j += i) is[j] = 0;
  return is;
}

std::vector<uint32_t> small_primes(uint32_t limit) {
  uint32_t lim = std::max<uint32_t>(limit, 16);
  std::vector<uint8_t> is((lim + 1) / 2, 1);  // odd n = 2i+1
  is[0] = 0;                                   // 1
  for (uint64_t i = 1; (2 * i + 1) * (2 * i + 1) <= lim; ++i) {
    if (!is[i]) continue;
    uint64_t p = 2 * i + 1;
    for (uint64_t j = (p * p - 1) / 2; j < is.size(); j += p) is[j] = 0;
  }
  std::vector<uint32_t> out;
  out.push_back(2);
  for (uint64_t i = 1; i < is.size(); ++i)
    if (is[i] && 2 * i + 1 <= limit) out.push_back(uint32_t(2 * i + 1));
  if (limit < 2) out.clear();
  return out;
}

namespace {

// Sieves odd numbers in [lo, hi] (lo odd) into bits: bit i <-> lo + 2i.
void sieve_odd_range(uint64_t lo, uint64_t hi,
                     const std::vector<uint32_t>& base,
                     std::vector<uint8_t>& bits) {
  uint64_t n_entries = (hi - lo) / 2 + 1;
  bits.assign((n_entries + 7) / 8, 0xff);
  // clear trailing slack so popcounts are exact
  uint64_t slack = bits.size() * 8 - n_entries;
  if (slack) bits.back() = uint8_t(0xff >> slack);

  for (uint32_t p : base) {
    if (p == 2) continue;
    uint64_t pp = uint64_t(p) * p;
    if (pp > hi) break;
    uint64_t start = pp;
    if (start < lo) {
      uint64_t m = (lo + p - 1) / p;
      if ((m & 1) == 0) ++m;  // odd multiples only
      start = m * p;
    }
    for (uint64_t j = start; j <= hi; j += 2 * uint64_t(p)) {
      uint64_t i = (j - lo) >> 1;
      bits[i >> 3] &= uint8_t(~(1u << (i & 7)));
    }
  }
  if (lo == 1) bits[0] &= 0xfe;  // 1 is not prime
}

uint64_t popcount_bytes(const std::vector<uint8_t>& bits) {
  uint64_t c = 0;
  size_t i = 0;
  for (; i + 8 <= bits.size(); i += 8) {
    uint64_t w;
    __builtin_memcpy(&w, bits.data() + i, 8);
    c += std::popcount(w);
  }
  for (; i < bits.size(); ++i) c += std::popcount(uint32_t(bits[i]));
  return c;
}

struct SegmentPlan {
  uint64_t first_odd;  // 3
  uint64_t span;       // odd numbers per segment, as a numeric span
  uint64_t n_segments;
};

SegmentPlan plan_segments(const SieveConfig& cfg) {
  SegmentPlan pl;
  pl.first_odd = 3;
  pl.span = 2 * cfg.segment_size;
  if (cfg.limit < 3)
    pl.n_segments = 0;
  else
    pl.n_segments = (cfg.limit - 3) / pl.span + 1;
  return pl;
}

}  // namespace

PrimeWindow::PrimeWindow(uint64_t lo, uint64_t hi,
                         const std::vector<uint32_t>& base)
    : lo_(lo), hi_(hi) {
  if (lo > hi) throw std::invalid_argument("PrimeWindow: lo > hi");
  uint64_t b = base.empty() ? 0 : base.back();
  if (b * b < hi && b < (uint64_t(1) << 32) - 1)
    throw std::invalid_argument("PrimeWindow: base primes do not reach sqrt(hi)");
  odd_lo_ = lo | 1;
  sieve_odd_range(odd_lo_, hi | 1, base, bits_);
}

uint64_t prime_count(const SieveConfig& cfg) {
  cfg.validate();
  auto pl = plan_segments(cfg);
  uint32_t root = uint32_t(std::sqrt(double(cfg.limit))) + 2;
  const auto base = small_primes(root);

  uint64_t total = cfg.limit >= 2 ? 1 : 0;  // the prime 2
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
  for (int64_t s = 0; s < int64_t(pl.n_segments); ++s) {
    uint64_t lo = pl.first_odd + uint64_t(s) * pl.span;
    uint64_t hi = std::min(cfg.limit, lo + pl.span - 2);
    std::vector<uint8_t> bits;
    sieve_odd_range(lo, hi, base, bits);
    total += popcount_bytes(bits);
  }
  return total;
}

uint64_t prime_count(uint64_t limit) {
  if (limit < 2) return 0;
  return prime_count(SieveConfig{limit});
}

void for_each_prime(const SieveConfig& cfg,
                    const std::function<void(uint64_t)>& fn) {
  cfg.validate();
  auto pl = plan_segments(cfg);
  uint32_t root = uint32_t(std::sqrt(double(cfg.limit))) + 2;
  const auto base = small_primes(root);

  if (cfg.limit >= 2) fn(2);
  // Segments are sieved in parallel but delivered in ascending order.
  constexpr uint64_t kBatch = 64;
  for (uint64_t s0 = 0; s0 < pl.n_segments; s0 += kBatch) {
    uint64_t s1 = std::min(pl.n_segments, s0 + kBatch);
    std::vector<std::vector<uint8_t>> seg(s1 - s0);
#pragma omp parallel for schedule(dynamic)
    for (int64_t s = int64_t(s0); s < int64_t(s1); ++s) {
      uint64_t lo = pl.first_odd + uint64_t(s) * pl.span;
      uint64_t hi = std::min(cfg.limit, lo + pl.span - 2);
      sieve_odd_range(lo, hi, base, seg[s - s0]);
    }
    for (uint64_t s = s0; s < s1; ++s) {
      uint64_t lo = pl.first_odd + s * pl.span;
      uint64_t hi = std::min(cfg.limit, lo + pl.span - 2);
      const auto& bits = seg[s - s0];
      uint64_t n_entries = (hi - lo) / 2 + 1;
      for (uint64_t i = 0; i < n_entries; ++i)
        if ((bits[i >> 3] >> (i & 7)) & 1) fn(lo + 2 * i);
    }
  }
}

std::vector<uint64_t> primes_up_to(const SieveConfig& cfg) {
  cfg.validate();
  if (cfg.limit > kMaxPrimesVectorLimit)
    throw capacity_error("primes_up_to vector form capped at 2^33");
  std::vector<uint64_t> out;
  out.reserve(size_t(double(cfg.limit) / std::log(double(cfg.limit)) * 1.12) +
              16);
  for_each_prime(cfg, [&](uint64_t p) { out.push_back(p); });
  return out;
}

}  // namespace primeheur
