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

#include "primeheur/census.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>

#include <omp.h>

#include "primeheur/bignat.hpp"
#include "primeheur/ntheory.hpp"
#include "primeheur/primality.hpp"
#include "primeheur/sieve.hpp"

namespace primeheur {

namespace {

unsigned resolve_threads(unsigned t) {
  return t ? t : unsigned(omp_get_max_threads());
}

struct Progress {
  std::atomic<uint64_t> done{0};
  std::atomic<int> last_pct{-1};
  uint64_t total = 0;
  bool enabled = false;

  void tick(uint64_t amount) {
    if (!enabled) return;
    uint64_t d = done.fetch_add(amount) + amount;
    int pct = int(d * 100 / total);
    int prev = last_pct.load();
    while (pct > prev && !last_pct.compare_exchange_weak(prev, pct)) {
    }
    if (pct > prev) std::fprintf(stderr, "census: %d%%\n", pct);
  }
};

constexpr uint64_t kChunk = 1u << 22;  // numbers per parallel work unit

// Counts primes p <= N (p in window-sized chunks) that satisfy `pred`;
// the window extends `lookahead` past each chunk so offset lookups stay
// inside it.
template <typename Pred>
uint64_t windowed_census(uint64_t N, uint64_t lookahead, unsigned threads,
                         Progress& prog, std::vector<uint64_t>* hits,
                         Pred&& pred) {
  const auto base =
      small_primes(uint32_t(isqrt64(N + lookahead)) + 2);
  uint64_t n_chunks = (N - 2) / kChunk + 1;
  prog.total = n_chunks;
  uint64_t total = 0;

  if (hits) {
    for (uint64_t c = 0; c < n_chunks; ++c) {
      uint64_t lo = 2 + c * kChunk;
      uint64_t hi = std::min(N, lo + kChunk - 1);
      PrimeWindow win(lo, hi + lookahead, base);
      win.for_each(lo, [&](uint64_t p) {
        if (p <= N && pred(p, win)) {
          ++total;
          hits->push_back(p);
        }
      });
    }
    return total;
  }

#pragma omp parallel for num_threads(threads) schedule(dynamic) \
    reduction(+ : total)
  for (int64_t c = 0; c < int64_t(n_chunks); ++c) {
    uint64_t lo = 2 + uint64_t(c) * kChunk;
    uint64_t hi = std::min(N, lo + kChunk - 1);
    PrimeWindow win(lo, hi + lookahead, base);
    uint64_t cnt = 0;
    win.for_each(lo, [&](uint64_t p) {
      if (p <= N && pred(p, win)) ++cnt;
    });
    total += cnt;
    prog.tick(1);
  }
  return total;
}

uint64_t offsets_census(uint64_t N, const std::vector<uint64_t>& offsets,
                        const CensusOptions& opts, Progress& prog) {
  uint64_t maxoff = 0;
  for (uint64_t o : offsets) maxoff = std::max(maxoff, o);
  return windowed_census(
      N, maxoff, resolve_threads(opts.threads), prog, opts.hits,
      [&](uint64_t p, const PrimeWindow& win) {
        for (uint64_t o : offsets)
          if (!win.is_prime(p + o)) return false;
        return true;
      });
}

// Chain terms after the start are tested with the deterministic 64-bit
// test; they may exceed the sieve window (up to 2^(k-1)(N+1)).
uint64_t chain_census(uint64_t N, ChainKind kind, unsigned len,
                      const CensusOptions& opts, Progress& prog) {
  return windowed_census(
      N, 0, resolve_threads(opts.threads), prog, opts.hits,
      [kind, len](uint64_t p, const PrimeWindow&) {
        uint64_t t = p;
        for (unsigned i = 1; i < len; ++i) {
          t = kind == ChainKind::first ? 2 * t + 1 : 2 * t - 1;
          if (!is_prime64(t)) return false;
        }
        return true;
      });
}

uint64_t quadratic_census(uint64_t N, const CensusOptions& opts,
                          Progress& prog) {
  if (N < 2) return 0;
  uint64_t nmax = isqrt64(N - 1);
  uint64_t total = 0;
  if (opts.hits) {
    for (uint64_t n = 1; n <= nmax; ++n)
      if (is_prime64(n * n + 1)) {
        ++total;
        opts.hits->push_back(n);
      }
    return total;
  }
  unsigned threads = resolve_threads(opts.threads);
  prog.total = nmax;
#pragma omp parallel for num_threads(threads) schedule(dynamic, 4096) \
    reduction(+ : total)
  for (int64_t n = 1; n <= int64_t(nmax); ++n) {
    if (is_prime64(uint64_t(n) * uint64_t(n) + 1)) ++total;
  }
  return total;
}

uint64_t ap_any_census(uint64_t N, unsigned k, const CensusOptions& opts) {
  // All k-term progressions of primes with every term < N, any common
  // difference. Correctness over speed: bitmap scan over (a, d).
  std::vector<uint8_t> is = simple_sieve(N ? N - 1 : 0);
  uint64_t limit = is.size();  // indexable up to N-1
  uint64_t total = 0;
  std::vector<uint64_t> starts;
  for (uint64_t a = 3; a < limit; ++a) {
    if (!is[a]) continue;
    starts.push_back(a);
  }
  unsigned threads = resolve_threads(opts.threads);
#pragma omp parallel for num_threads(threads) schedule(dynamic) \
    reduction(+ : total)
  for (int64_t i = 0; i < int64_t(starts.size()); ++i) {
    uint64_t a = starts[i];
    for (uint64_t d = 2;; d += 2) {
      uint64_t last = a + uint64_t(k - 1) * d;
      if (last >= limit) break;
      bool ok = true;
      for (unsigned j = 1; j < k; ++j)
        if (!is[a + j * d]) {
          ok = false;
          break;
        }
      if (ok) ++total;
    }
  }
  if (opts.hits) {
    // serial re-scan to collect (small N only)
    for (uint64_t a : starts)
      for (uint64_t d = 2;; d += 2) {
        uint64_t last = a + uint64_t(k - 1) * d;
        if (last >= limit) break;
        bool ok = true;
        for (unsigned j = 1; j < k; ++j)
          if (!is[a + j * d]) {
            ok = false;
            break;
          }
        if (ok) opts.hits->push_back(a);
      }
  }
  return total;
}

// ---- big-number families ----------------------------------------------

struct BigCensus {
  uint64_t count = 0;
};

// Cullen / Woodall: n 2^n +- 1 for 1 <= n <= N.
uint64_t cullen_woodall_census(uint64_t N, bool plus, unsigned threads,
                               std::vector<uint64_t>* hits) {
  constexpr uint64_t kDirect = 50;  // n 2^n +- 1 fits u64 through n = 50-ish
  std::vector<uint8_t> composite(N + 1, 0);
  const uint64_t trial_limit = 1'000'000;
  auto sv = simple_sieve(trial_limit);

  // incremental n 2^n mod p marking for n > kDirect
  for (uint64_t p = 3; p <= trial_limit; p += 2) {
    if (!sv[p]) continue;
    uint64_t pw = powmod64(2, kDirect + 1, p);
    for (uint64_t n = kDirect + 1; n <= N; ++n) {
      uint64_t t = (n % p) * pw % p;
      if (plus ? (t == p - 1) : (t == 1)) composite[n] = 1;
      pw = pw * 2 % p;
    }
  }

  uint64_t total = 0;
#pragma omp parallel for num_threads(threads) schedule(dynamic) \
    reduction(+ : total)
  for (int64_t n = 1; n <= int64_t(N); ++n) {
    bool prime;
    if (uint64_t(n) <= kDirect) {
      uint64_t v = (uint64_t(n) << n) + (plus ? 1 : -1);
      prime = is_prime64(v);
    } else if (composite[n]) {
      prime = false;
    } else {
      BigNat v = BigNat(uint64_t(n)).shifted_left(uint64_t(n));
      if (plus)
        v += 1;
      else
        v -= 1;
      prime = is_probable_prime(v);
    }
    if (prime) ++total;
  }
  if (hits) {
    for (uint64_t n = 1; n <= N; ++n) {
      bool prime;
      if (n <= kDirect) {
        prime = is_prime64((n << n) + (plus ? 1 : -1));
      } else if (composite[n]) {
        prime = false;
      } else {
        BigNat v = BigNat(n).shifted_left(n);
        if (plus)
          v += 1;
        else
          v -= 1;
        prime = is_probable_prime(v);
      }
      if (prime) hits->push_back(n);
    }
  }
  return total;
}

// Primorial p# +- 1 over primes p <= N.
uint64_t primorial_census(uint64_t N, bool plus, unsigned threads,
                          std::vector<uint64_t>* hits) {
  auto exps = primes_up_to(SieveConfig{std::max<uint64_t>(N, 2)});
  std::vector<uint8_t> composite(exps.size(), 0);
  const uint64_t trial_limit = 1'000'000;
  constexpr uint64_t kDirectMax = 43;  // p# fits u64 through p = 43

  auto sv = simple_sieve(trial_limit);
  for (uint64_t q = 3; q <= trial_limit; q += 2) {
    if (!sv[q]) continue;
    uint64_t r = 1;
    for (size_t i = 0; i < exps.size(); ++i) {
      r = r * (exps[i] % q) % q;
      if (exps[i] <= kDirectMax) continue;  // handled directly below
      if (plus ? (r == q - 1) : (r == 1)) composite[i] = 1;
    }
  }

  uint64_t total = 0;
#pragma omp parallel for num_threads(threads) schedule(dynamic) \
    reduction(+ : total)
  for (int64_t i = 0; i < int64_t(exps.size()); ++i) {
    bool prime;
    if (exps[i] <= kDirectMax) {
      uint64_t v = 1;
      for (uint64_t p : exps)
        if (p <= exps[i]) v *= p;
      prime = is_prime64(plus ? v + 1 : v - 1);
    } else if (composite[i]) {
      prime = false;
    } else {
      BigNat v = primorial(exps[i]);
      if (plus)
        v += 1;
      else
        v -= 1;
      prime = is_probable_prime(v);
    }
    if (prime) ++total;
  }
  if (hits) {
    for (size_t i = 0; i < exps.size(); ++i) {
      bool prime;
      if (exps[i] <= kDirectMax) {
        uint64_t v = 1;
        for (uint64_t p : exps)
          if (p <= exps[i]) v *= p;
        prime = is_prime64(plus ? v + 1 : v - 1);
      } else if (composite[i]) {
        prime = false;
      } else {
        BigNat v = primorial(exps[i]);
        if (plus)
          v += 1;
        else
          v -= 1;
        prime = is_probable_prime(v);
      }
      if (prime) hits->push_back(exps[i]);
    }
  }
  return total;
}

// Factorial n! +- 1 over 1 <= n <= N.
uint64_t factorial_census(uint64_t N, bool plus, unsigned threads,
                          std::vector<uint64_t>* hits) {
  std::vector<uint8_t> composite(N + 1, 0);
  const uint64_t trial_limit = 1'000'000;
  constexpr uint64_t kDirectMax = 20;  // n! fits u64 through n = 20
  auto sv = simple_sieve(trial_limit);
  for (uint64_t q = 3; q <= trial_limit; q += 2) {
    if (!sv[q]) continue;
    uint64_t r = 1;
    for (uint64_t n = 1; n <= N; ++n) {
      r = r * (n % q) % q;
      if (n <= kDirectMax) continue;
      if (plus ? (r == q - 1) : (r == 1)) composite[n] = 1;
    }
  }

  uint64_t total = 0;
#pragma omp parallel for num_threads(threads) schedule(dynamic) \
    reduction(+ : total)
  for (int64_t n = 1; n <= int64_t(N); ++n) {
    bool prime;
    if (uint64_t(n) <= kDirectMax) {
      uint64_t v = 1;
      for (uint64_t j = 2; j <= uint64_t(n); ++j) v *= j;
      prime = is_prime64(plus ? v + 1 : v - 1);
    } else if (composite[n]) {
      prime = false;
    } else {
      BigNat v = factorial(uint64_t(n));
      if (plus)
        v += 1;
      else
        v -= 1;
      prime = is_probable_prime(v);
    }
    if (prime) ++total;
  }
  if (hits) {
    for (uint64_t n = 1; n <= N; ++n) {
      bool prime;
      if (n <= kDirectMax) {
        uint64_t v = 1;
        for (uint64_t j = 2; j <= n; ++j) v *= j;
        prime = is_prime64(plus ? v + 1 : v - 1);
      } else if (composite[n]) {
        prime = false;
      } else {
        BigNat v = factorial(n);
        if (plus)
          v += 1;
        else
          v -= 1;
        prime = is_probable_prime(v);
      }
      if (prime) hits->push_back(n);
    }
  }
  return total;
}

// Generalized repunits R_p(a) over prime exponents p <= N.
uint64_t repunit_census(uint64_t N, unsigned base, unsigned threads,
                        std::vector<uint64_t>* hits) {
  auto exps = primes_up_to(SieveConfig{std::max<uint64_t>(N, 2)});
  const uint64_t trial_limit = 4'000'000;
  auto sv = simple_sieve(trial_limit);

  uint64_t total = 0;
#pragma omp parallel for num_threads(threads) schedule(dynamic) \
    reduction(+ : total)
  for (int64_t i = 0; i < int64_t(exps.size()); ++i) {
    uint64_t p = exps[i];
    BigNat v = repunit(base, p);
    bool prime;
    if (v.fits_u64()) {
      prime = is_prime64(v.to_u64());
    } else {
      prime = true;
      // prime divisors of R_p(a) are p itself (iff p | a-1) or q = 2jp+1
      if ((base - 1) % p == 0) prime = false;
      for (uint64_t q = 2 * p + 1; prime && q <= trial_limit; q += 2 * p) {
        if (!sv[q]) continue;
        if ((base - 1) % q == 0) continue;
        if (powmod64(base % q, p, q) == 1) prime = false;
      }
      if (prime) prime = is_probable_prime(v);
    }
    if (prime) ++total;
  }
  if (hits) {
    for (uint64_t p : exps) {
      BigNat v = repunit(base, p);
      bool prime;
      if (v.fits_u64()) {
        prime = is_prime64(v.to_u64());
      } else {
        prime = ((base - 1) % p != 0);
        for (uint64_t q = 2 * p + 1; prime && q <= trial_limit; q += 2 * p) {
          if (!sv[q]) continue;
          if ((base - 1) % q == 0) continue;
          if (powmod64(base % q, p, q) == 1) prime = false;
        }
        if (prime) prime = is_probable_prime(v);
      }
      if (prime) hits->push_back(p);
    }
  }
  return total;
}

void check_desk_limit(const FamilySpec& fam, uint64_t N) {
  using namespace family;
  uint64_t cap = 1'000'000'000;
  if (std::holds_alternative<APAnyDiff>(fam)) cap = 100'000;
  if (std::holds_alternative<Quadratic>(fam)) cap = 100'000'000'000'000ull;
  if (is_bignat_family(fam)) cap = 10'000;
  if (N > cap)
    throw capacity_error("census: N exceeds the desk limit for " +
                         family_name(fam));
}

}  // namespace

CensusResult count(const FamilySpec& fam, uint64_t N,
                   const CensusOptions& opts) {
  validate_family(fam);
  check_desk_limit(fam, N);
  if (N < 2) throw std::invalid_argument("census: N >= 2 required");

  auto start = std::chrono::steady_clock::now();
  Progress prog;
  prog.enabled = opts.progress || N >= 100'000'000;

  using namespace family;
  CensusResult res;
  res.family = fam;
  res.bound = N;
  res.certainty = is_bignat_family(fam) ? Certainty::probable
                                        : Certainty::proven;
  unsigned threads = resolve_threads(opts.threads);

  if (std::holds_alternative<Twin>(fam)) {
    res.count = offsets_census(N, {2}, opts, prog);
  } else if (auto* pr = std::get_if<Pair>(&fam)) {
    res.count = offsets_census(N, {pr->gap}, opts, prog);
  } else if (auto* ap = std::get_if<AP>(&fam)) {
    std::vector<uint64_t> offs;
    for (unsigned j = 1; j < ap->length; ++j) offs.push_back(j * ap->diff);
    res.count = offsets_census(N, offs, opts, prog);
  } else if (auto* aa = std::get_if<APAnyDiff>(&fam)) {
    res.count = ap_any_census(N, aa->length, opts);
  } else if (std::holds_alternative<SophieGermain>(fam)) {
    res.count = chain_census(N, ChainKind::first, 2, opts, prog);
  } else if (auto* cu = std::get_if<Cunningham>(&fam)) {
    res.count = chain_census(N, cu->kind, cu->length, opts, prog);
  } else if (std::holds_alternative<Quadratic>(fam)) {
    res.count = quadratic_census(N, opts, prog);
  } else if (auto* gb = std::get_if<Goldbach>(&fam)) {
    uint64_t m = gb->m ? gb->m : N;
    if (m % 2 != 0 || m < 4)
      throw std::invalid_argument("census: goldbach target must be even >= 4");
    res.count = goldbach_reps(m, GoldbachConvention::unordered);
  } else if (std::holds_alternative<Cullen>(fam)) {
    res.count = cullen_woodall_census(N, true, threads, opts.hits);
  } else if (std::holds_alternative<Woodall>(fam)) {
    res.count = cullen_woodall_census(N, false, threads, opts.hits);
  } else if (auto* pm = std::get_if<Primorial>(&fam)) {
    res.count = primorial_census(N, pm->sign > 0, threads, opts.hits);
  } else if (auto* fc = std::get_if<Factorial>(&fam)) {
    res.count = factorial_census(N, fc->sign > 0, threads, opts.hits);
  } else if (auto* ru = std::get_if<Repunit>(&fam)) {
    res.count = repunit_census(N, ru->base, threads, opts.hits);
  }

  res.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return res;
}

uint64_t count_reference(const FamilySpec& fam, uint64_t N) {
  validate_family(fam);
  using namespace family;

  auto sieve_and_scan = [&](uint64_t top, auto&& pred) {
    auto is = simple_sieve(top);
    uint64_t c = 0;
    for (uint64_t p = 2; p <= N; ++p)
      if (is[p] && pred(p, is)) ++c;
    return c;
  };

  if (std::holds_alternative<Twin>(fam))
    return sieve_and_scan(N + 2, [](uint64_t p, const std::vector<uint8_t>& s) {
      return s[p + 2] != 0;
    });
  if (auto* pr = std::get_if<Pair>(&fam)) {
    uint64_t g = pr->gap;
    return sieve_and_scan(N + g,
                          [g](uint64_t p, const std::vector<uint8_t>& s) {
                            return s[p + g] != 0;
                          });
  }
  if (auto* ap = std::get_if<AP>(&fam)) {
    unsigned k = ap->length;
    uint64_t d = ap->diff;
    return sieve_and_scan(N + uint64_t(k - 1) * d,
                          [k, d](uint64_t p, const std::vector<uint8_t>& s) {
                            for (unsigned j = 1; j < k; ++j)
                              if (!s[p + j * d]) return false;
                            return true;
                          });
  }
  if (std::holds_alternative<SophieGermain>(fam))
    return sieve_and_scan(2 * N + 1,
                          [](uint64_t p, const std::vector<uint8_t>& s) {
                            return s[2 * p + 1] != 0;
                          });
  if (auto* cu = std::get_if<Cunningham>(&fam)) {
    unsigned len = cu->length;
    ChainKind kind = cu->kind;
    uint64_t top = (N + 1) << (len - 1);
    return sieve_and_scan(top,
                          [len, kind](uint64_t p,
                                      const std::vector<uint8_t>& s) {
                            uint64_t t = p;
                            for (unsigned i = 1; i < len; ++i) {
                              t = kind == ChainKind::first ? 2 * t + 1
                                                           : 2 * t - 1;
                              if (!s[t]) return false;
                            }
                            return true;
                          });
  }
  if (std::holds_alternative<Quadratic>(fam)) {
    // trial division; reference use is small N
    uint64_t nmax = isqrt64(N ? N - 1 : 0);
    uint64_t c = 0;
    for (uint64_t n = 1; n <= nmax; ++n) {
      uint64_t v = n * n + 1;
      bool prime = v >= 2;
      for (uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) {
          prime = false;
          break;
        }
      if (prime) ++c;
    }
    return c;
  }
  if (auto* aa = std::get_if<APAnyDiff>(&fam)) {
    // double loop with trial division
    unsigned k = aa->length;
    auto isp = [](uint64_t v) {
      if (v < 2) return false;
      for (uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
      return true;
    };
    uint64_t c = 0;
    for (uint64_t a = 3; a < N; ++a) {
      if (!isp(a)) continue;
      for (uint64_t d = 2;; d += 2) {
        if (a + uint64_t(k - 1) * d >= N) break;
        bool ok = true;
        for (unsigned j = 1; j < k && ok; ++j) ok = isp(a + j * d);
        if (ok) ++c;
      }
    }
    return c;
  }
  // big-number families: direct probable-prime test per candidate
  CensusOptions opts;
  opts.threads = 1;
  if (std::holds_alternative<Cullen>(fam) ||
      std::holds_alternative<Woodall>(fam)) {
    bool plus = std::holds_alternative<Cullen>(fam);
    uint64_t c = 0;
    for (uint64_t n = 1; n <= N; ++n) {
      BigNat v = BigNat(n).shifted_left(n);
      if (plus)
        v += 1;
      else {
        if (v == BigNat(uint64_t(1))) continue;
        v -= 1;
      }
      if (is_probable_prime(v)) ++c;
    }
    return c;
  }
  if (auto* pm = std::get_if<Primorial>(&fam)) {
    uint64_t c = 0;
    for (uint64_t p : primes_up_to(SieveConfig{std::max<uint64_t>(N, 2)})) {
      BigNat v = primorial(p);
      if (pm->sign > 0)
        v += 1;
      else
        v -= 1;
      if (is_probable_prime(v)) ++c;
    }
    return c;
  }
  if (auto* fc = std::get_if<Factorial>(&fam)) {
    uint64_t c = 0;
    for (uint64_t n = 1; n <= N; ++n) {
      BigNat v = factorial(n);
      if (fc->sign > 0)
        v += 1;
      else {
        if (v == BigNat(uint64_t(1))) continue;  // 1! - 1 = 0, 0! - 1 < 0
        v -= 1;
      }
      if (is_probable_prime(v)) ++c;
    }
    return c;
  }
  if (auto* ru = std::get_if<Repunit>(&fam)) {
    uint64_t c = 0;
    for (uint64_t p : primes_up_to(SieveConfig{std::max<uint64_t>(N, 2)}))
      if (is_probable_prime(repunit(ru->base, p))) ++c;
    return c;
  }
  if (auto* gb = std::get_if<Goldbach>(&fam))
    return goldbach_reps(gb->m ? gb->m : N, GoldbachConvention::unordered);
  throw std::logic_error("count_reference: unhandled family");
}

uint64_t goldbach_reps(uint64_t m, GoldbachConvention conv) {
  if (m % 2 != 0 || m < 4)
    throw std::invalid_argument("goldbach_reps: even m >= 4 required");
  auto base = small_primes(uint32_t(isqrt64(m)) + 2);
  PrimeWindow win(2, m, base);
  uint64_t c = 0;
  uint64_t half = m / 2;
  // p = 2 pairs with m - 2 (even): only m = 4 counts
  if (m == 4) return 1;
  uint64_t top = conv == GoldbachConvention::unordered ? half : m - 2;
  for (uint64_t p = 3; p <= top; p += 2)
    if (win.is_prime(p) && win.is_prime(m - p)) ++c;
  return c;
}

uint64_t crt_solution_count(uint64_t p, uint64_t q, int64_t a, int64_t b) {
  if (p == q || p < 3 || q < 3 || !is_prime64(p) || !is_prime64(q) ||
      p % 2 == 0 || q % 2 == 0)
    throw std::invalid_argument(
        "crt_solution_count: p, q must be distinct odd primes");
  uint64_t op = mult_order(2, p);
  uint64_t oq = mult_order(2, q);
  uint64_t L = std::lcm(std::lcm(p * q, op), oq);
  if (L > 200'000'000)
    throw capacity_error("crt_solution_count: enumeration span too large");
  uint64_t am = uint64_t(((a % int64_t(p)) + int64_t(p)) % int64_t(p));
  uint64_t bm = uint64_t(((b % int64_t(q)) + int64_t(q)) % int64_t(q));
  uint64_t pwp = 1, pwq = 1;  // 2^n mod p, q
  uint64_t c = 0;
  for (uint64_t n = 0; n < L; ++n) {
    if ((n % p) * pwp % p == am && (n % q) * pwq % q == bm) ++c;
    pwp = pwp * 2 % p;
    pwq = pwq * 2 % q;
  }
  return c;
}

namespace {

// Direct evaluation m! mod P.
uint64_t factorial_mod(uint64_t m, uint64_t P) {
  uint64_t r = 1;
  for (uint64_t j = 2; j <= m; ++j) r = r * (j % P) % P;
  return r;
}

// Does P divide exactly one of (P-n-1)! +- 1, by direct evaluation?
bool clause_iv_direct(uint64_t P, uint64_t n) {
  uint64_t f = factorial_mod(P - n - 1, P);
  bool minus = (f == 1);          // P | (P-n-1)! - 1
  bool plus = (f == P - 1);       // P | (P-n-1)! + 1
  return minus != plus;
}

}  // namespace

FactorialDivisibility factorial_divisibility_check(uint32_t n,
                                                   uint64_t prime_limit) {
  if (n < 1 || n > 10000)
    throw std::invalid_argument(
        "factorial_divisibility_check: 1 <= n <= 10^4");
  FactorialDivisibility out;
  if (is_prime64(n)) {
    out.ii_applicable = true;
    if (n >= 2) {
      uint64_t f1 = factorial_mod(n - 1, n);  // (n-1)! mod n
      uint64_t f2 = n >= 2 ? factorial_mod(n - 2, n) : 1;
      out.ii_holds = (f1 == uint64_t(n) - 1) && (f2 == 1 % n);
    }
  }
  if (n % 2 == 1 && is_prime64(2 * uint64_t(n) + 1)) {
    out.iii_applicable = true;
    uint64_t P = 2 * uint64_t(n) + 1;
    uint64_t f = factorial_mod(n, P);
    out.iii_holds = (f == 1 || f == P - 1);  // exactly one: P > 2
  }
  // clause iv: primes P in (n, limit] dividing n! +- 1
  for_each_prime(SieveConfig{std::max<uint64_t>(prime_limit, 2)},
                 [&](uint64_t P) {
                   if (P <= n) return;
                   uint64_t f = factorial_mod(n, P);
                   if (f == 1 || f == P - 1) {
                     ++out.iv_checked;
                     if (!clause_iv_direct(P, n)) out.iv_holds = false;
                   }
                 });
  return out;
}

bool factorial_divisibility_all(uint32_t n_max, uint64_t prime_limit,
                                uint64_t* iv_hits) {
  // sweep clauses ii and iii
  for (uint32_t n = 1; n <= n_max; ++n) {
    if (is_prime64(n)) {
      uint64_t f1 = factorial_mod(n - 1, n);
      uint64_t f2 = factorial_mod(n >= 2 ? n - 2 : 0, n);
      if (!(f1 == uint64_t(n) - 1 && f2 == 1 % n)) return false;
    }
    if (n % 2 == 1 && is_prime64(2 * uint64_t(n) + 1)) {
      uint64_t P = 2 * uint64_t(n) + 1;
      uint64_t f = factorial_mod(n, P);
      if (!(f == 1 || f == P - 1)) return false;
    }
  }

  // clause iv in a single pass per prime
  std::atomic<uint64_t> hits{0};
  std::atomic<bool> ok{true};
  auto primes = primes_up_to(SieveConfig{std::max<uint64_t>(prime_limit, 2)});
#pragma omp parallel for schedule(dynamic)
  for (int64_t i = 0; i < int64_t(primes.size()); ++i) {
    if (!ok.load()) continue;
    uint64_t P = primes[i];
    uint64_t r = 1;
    uint64_t top = std::min<uint64_t>(n_max, P - 1);
    for (uint64_t n = 1; n <= top; ++n) {
      r = r * n % P;
      if (r == 1 || r == P - 1) {
        hits.fetch_add(1, std::memory_order_relaxed);
        if (!clause_iv_direct(P, n)) ok.store(false);
      }
    }
  }
  if (iv_hits) *iv_hits = hits.load();
  return ok.load();
}

std::pair<uint64_t, uint64_t> kfactorial_prime_counts(unsigned kmax,
                                                      unsigned nmax,
                                                      unsigned threads) {
  if (kmax < 1 || nmax < 1 || kmax > 10000 || nmax > 1000)
    throw std::invalid_argument("kfactorial_prime_counts: bad ranges");
  const unsigned t = resolve_threads(threads);
  constexpr uint64_t kDirectN = 17;  // kmax * n! fits u64 through n = 17
  const uint64_t trial_limit = 1'000'000;

  // trial marks for n > kDirectN
  std::vector<uint8_t> comp_plus((kmax + 1) * (nmax + 1), 0);
  std::vector<uint8_t> comp_minus((kmax + 1) * (nmax + 1), 0);
  auto at = [&](std::vector<uint8_t>& v, unsigned k, unsigned n) -> uint8_t& {
    return v[size_t(k) * (nmax + 1) + n];
  };
  {
    auto sv = simple_sieve(trial_limit);
    for (uint64_t q = 3; q <= trial_limit; q += 2) {
      if (!sv[q]) continue;
      uint64_t f = 1;
      for (unsigned n = 1; n <= nmax; ++n) {
        f = f * (n % q) % q;
        if (n <= kDirectN || f == 0) continue;
        uint64_t inv = powmod64(f, q - 2, q);
        // k f == -1 (mod q)  =>  k == -inv
        for (uint64_t k = (q - inv) % q; k <= kmax; k += q)
          if (k >= 1) at(comp_plus, unsigned(k), n) = 1;
        for (uint64_t k = inv; k <= kmax; k += q)
          if (k >= 1) at(comp_minus, unsigned(k), n) = 1;
      }
    }
  }

  uint64_t plus = 0, minus = 0;
#pragma omp parallel for num_threads(t) schedule(dynamic) collapse(2) \
    reduction(+ : plus, minus)
  for (int64_t k = 1; k <= int64_t(kmax); ++k) {
    for (int64_t n = 1; n <= int64_t(nmax); ++n) {
      if (uint64_t(n) <= kDirectN) {
        uint64_t f = 1;
        for (uint64_t j = 2; j <= uint64_t(n); ++j) f *= j;
        uint64_t v = uint64_t(k) * f;
        if (is_prime64(v + 1)) ++plus;
        if (v >= 2 && is_prime64(v - 1)) ++minus;
      } else {
        bool try_plus = !at(comp_plus, unsigned(k), unsigned(n));
        bool try_minus = !at(comp_minus, unsigned(k), unsigned(n));
        if (!try_plus && !try_minus) continue;
        BigNat f = factorial(uint64_t(n));
        f *= uint64_t(k);
        if (try_plus) {
          BigNat v = f;
          v += 1;
          if (is_probable_prime(v)) ++plus;
        }
        if (try_minus) {
          BigNat v = f;
          v -= 1;
          if (is_probable_prime(v)) ++minus;
        }
      }
    }
  }
  return {plus, minus};
}

}  // namespace primeheur
