/* Copyright 2026 The toric-pvf Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef TORIC_RATIONAL_HPP_
#define TORIC_RATIONAL_HPP_

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace toric {

// Exact scalars. Rational is kept canonical (gcd(|num|, den) = 1, den > 0,
// zero is 0/1), which mpq_class guarantees as long as values are built through
// make_rational or arithmetic operators.
using Int = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Largest integer <= q.
inline Int floor_of(const Rational& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

// Smallest integer >= q.
inline Int ceil_of(const Rational& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline long long to_int64(const Int& v) {
  if (!v.fits_slong_p())
    throw std::overflow_error("integer does not fit in 64 bits: " + v.get_str());
  return static_cast<long long>(v.get_si());
}

inline Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);  // 0 when k > n
  return r;
}

inline long long binomial64(unsigned long n, unsigned long k) {
  return to_int64(binomial(n, k));
}

}  // namespace toric

#endif  // TORIC_RATIONAL_HPP_
