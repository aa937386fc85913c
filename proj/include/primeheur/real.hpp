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

#ifndef PRIMEHEUR_REAL_HPP
#define PRIMEHEUR_REAL_HPP

#include <mpfr.h>

#include <cstdint>
#include <string>

namespace primeheur {

// Value-semantic MPFR real. All arithmetic rounds to nearest at the
// precision of the destination (max of the operand precisions).
class Real {
 public:
  explicit Real(mpfr_prec_t prec = 256) { mpfr_init2(x_, prec); mpfr_set_zero(x_, 1); }
  Real(double v, mpfr_prec_t prec) {
    mpfr_init2(x_, prec);
    mpfr_set_d(x_, v, MPFR_RNDN);
  }
  Real(uint64_t v, mpfr_prec_t prec) {
    mpfr_init2(x_, prec);
    mpfr_set_ui(x_, v, MPFR_RNDN);
  }
  Real(const std::string& decimal, mpfr_prec_t prec) {
    mpfr_init2(x_, prec);
    if (mpfr_set_str(x_, decimal.c_str(), 10, MPFR_RNDN) != 0 &&
        mpfr_nan_p(x_))
      mpfr_set_zero(x_, 1);
  }

  Real(const Real& o) {
    mpfr_init2(x_, mpfr_get_prec(o.x_));
    mpfr_set(x_, o.x_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(x_, mpfr_get_prec(o.x_));
    mpfr_swap(x_, o.x_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(x_, mpfr_get_prec(o.x_));
      mpfr_set(x_, o.x_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(x_, o.x_);
    return *this;
  }
  ~Real() { mpfr_clear(x_); }

  mpfr_prec_t prec() const { return mpfr_get_prec(x_); }
  double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
  std::string str(int sig_digits) const;
  bool is_zero() const { return mpfr_zero_p(x_); }
  int sign() const { return mpfr_sgn(x_); }

  mpfr_ptr raw() { return x_; }
  mpfr_srcptr raw() const { return x_; }

  friend Real operator+(const Real& a, const Real& b) {
    Real r(binprec(a, b));
    mpfr_add(r.x_, a.x_, b.x_, MPFR_RNDN);
    return r;
  }
  friend Real operator-(const Real& a, const Real& b) {
    Real r(binprec(a, b));
    mpfr_sub(r.x_, a.x_, b.x_, MPFR_RNDN);
    return r;
  }
  friend Real operator*(const Real& a, const Real& b) {
    Real r(binprec(a, b));
    mpfr_mul(r.x_, a.x_, b.x_, MPFR_RNDN);
    return r;
  }
  friend Real operator/(const Real& a, const Real& b) {
    Real r(binprec(a, b));
    mpfr_div(r.x_, a.x_, b.x_, MPFR_RNDN);
    return r;
  }
  friend Real operator*(const Real& a, uint64_t v) {
    Real r(a.prec());
    mpfr_mul_ui(r.x_, a.x_, v, MPFR_RNDN);
    return r;
  }
  friend Real operator/(const Real& a, uint64_t v) {
    Real r(a.prec());
    mpfr_div_ui(r.x_, a.x_, v, MPFR_RNDN);
    return r;
  }
  friend Real operator-(const Real& a) {
    Real r(a.prec());
    mpfr_neg(r.x_, a.x_, MPFR_RNDN);
    return r;
  }
  Real& operator+=(const Real& o) {
    mpfr_add(x_, x_, o.x_, MPFR_RNDN);
    return *this;
  }
  Real& operator-=(const Real& o) {
    mpfr_sub(x_, x_, o.x_, MPFR_RNDN);
    return *this;
  }
  Real& operator*=(const Real& o) {
    mpfr_mul(x_, x_, o.x_, MPFR_RNDN);
    return *this;
  }
  Real& operator/=(const Real& o) {
    mpfr_div(x_, x_, o.x_, MPFR_RNDN);
    return *this;
  }

  friend bool operator<(const Real& a, const Real& b) {
    return mpfr_cmp(a.x_, b.x_) < 0;
  }
  friend bool operator>(const Real& a, const Real& b) {
    return mpfr_cmp(a.x_, b.x_) > 0;
  }

  friend Real log(const Real& a) {
    Real r(a.prec());
    mpfr_log(r.x_, a.x_, MPFR_RNDN);
    return r;
  }
  friend Real exp(const Real& a) {
    Real r(a.prec());
    mpfr_exp(r.x_, a.x_, MPFR_RNDN);
    return r;
  }
  friend Real sqrt(const Real& a) {
    Real r(a.prec());
    mpfr_sqrt(r.x_, a.x_, MPFR_RNDN);
    return r;
  }
  friend Real abs(const Real& a) {
    Real r(a.prec());
    mpfr_abs(r.x_, a.x_, MPFR_RNDN);
    return r;
  }
  friend Real pow_ui(const Real& a, uint64_t e) {
    Real r(a.prec());
    mpfr_pow_ui(r.x_, a.x_, e, MPFR_RNDN);
    return r;
  }
  // a^s for real s (a > 0)
  friend Real pow(const Real& a, const Real& s) {
    Real r(binprec(a, s));
    mpfr_pow(r.x_, a.x_, s.x_, MPFR_RNDN);
    return r;
  }

 private:
  static mpfr_prec_t binprec(const Real& a, const Real& b) {
    return std::max(mpfr_get_prec(a.x_), mpfr_get_prec(b.x_));
  }
  mpfr_t x_;
};

// Route by which a constant was computed.
enum class Route { direct_product, zeta_accelerated, closed_combination };

const char* route_name(Route r);

// A high-precision constant with an error-bound estimate and provenance.
struct ConstantValue {
  Real value;
  double error_bound = 1e-300;  // > 0 and finite
  Route route = Route::closed_combination;

  double to_double() const { return value.to_double(); }
  std::string str(int sig_digits) const { return value.str(sig_digits); }
};

}  // namespace primeheur

#endif  // PRIMEHEUR_REAL_HPP
