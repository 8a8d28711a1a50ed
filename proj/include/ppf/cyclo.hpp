/*
   Copyright 2026 The ppfunctor Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef PPF_CYCLO_HPP_
#define PPF_CYCLO_HPP_

// Exact arithmetic in cyclotomic fields Q(ζ_m), ζ_m = exp(2πi/m).  Values
// are coordinate vectors in the power basis {ζ_m^i : 0 <= i < φ(m)} modulo
// the m-th cyclotomic polynomial.

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ppf {

  using Rational = mpq_class;

  // num/den in lowest terms
  Rational ratio(long num, long den);

  // "num/den", always with a denominator.
  std::string to_fraction(Rational const& q);
  // "num" for integers, otherwise "num/den".
  std::string to_short(Rational const& q);
  // Accepts "n", "-n", "n/d".  Throws format_error.
  Rational parse_rational(std::string const& text);

  std::uint64_t euler_phi(std::uint64_t n);
  std::uint64_t lcm64(std::uint64_t a, std::uint64_t b);

  // Integer coefficients, lowest degree first.
  using IntPolynomial = std::vector<long long>;

  // Φ_m by exact division of X^m - 1 by Φ_d for the proper divisors d of m.
  // m <= 512.
  IntPolynomial cyclotomic_polynomial(unsigned m);

  // Coordinates of ζ_m^e, e in [0, m), in the power basis.  Cached.
  std::vector<std::vector<long long>> const& power_table(unsigned m);

  class CycloNum {
   public:
    CycloNum();  // zero in Q
    CycloNum(Rational const& q);  // NOLINT(runtime/explicit)
    CycloNum(long q);             // NOLINT(runtime/explicit)

    static CycloNum root_of_unity(unsigned m, long long e);
    // Σ counts[e] ζ_m^e over e in [0, m).
    static CycloNum from_exponent_counts(unsigned m, std::span<long long const> counts);
    // Σ coeffs[e] ζ_m^e over e in [0, m); coefficients need not be reduced.
    static CycloNum from_exponent_sums(unsigned m, std::vector<Rational> const& coeffs);
    // Power-basis coordinates, length φ(m).
    static CycloNum from_coeffs(unsigned m, std::vector<Rational> coeffs);

    unsigned modulus() const noexcept {
      return m_;
    }
    std::vector<Rational> const& coeffs() const noexcept {
      return c_;
    }

    bool is_zero() const noexcept;
    bool is_rational() const;

    // Same value in Q(ζ_m2); m must divide m2.
    CycloNum lifted(unsigned m2) const;
    // Same value at the least modulus whose field contains it.
    CycloNum canonical() const;

    CycloNum inverse() const;

    CycloNum& operator+=(CycloNum const& b);
    CycloNum& operator-=(CycloNum const& b);
    CycloNum& operator*=(CycloNum const& b);
    CycloNum& operator/=(CycloNum const& b);

    friend CycloNum operator+(CycloNum a, CycloNum const& b) {
      return a += b;
    }
    friend CycloNum operator-(CycloNum a, CycloNum const& b) {
      return a -= b;
    }
    friend CycloNum operator*(CycloNum a, CycloNum const& b) {
      return a *= b;
    }
    friend CycloNum operator/(CycloNum a, CycloNum const& b) {
      return a /= b;
    }
    CycloNum operator-() const;

    friend bool operator==(CycloNum const& a, CycloNum const& b);

    // "a0 + a1*z + a2*z^2 (z = zeta_m)"; rationals print bare.
    std::string to_string() const;

   private:
    unsigned              m_ = 1;
    std::vector<Rational> c_;
  };

  // ζ_m^e with e taken mod m.
  class RootOfUnity {
   public:
    RootOfUnity(unsigned m, long long e);

    unsigned modulus() const noexcept {
      return m_;
    }
    unsigned exponent() const noexcept {
      return e_;
    }
    // Multiplicative order of the root.
    unsigned order() const noexcept;

    CycloNum    to_cyclo() const;
    RootOfUnity inverse() const;

    friend RootOfUnity operator*(RootOfUnity const& a, RootOfUnity const& b);
    friend bool        operator==(RootOfUnity const& a, RootOfUnity const& b);

   private:
    unsigned m_;
    unsigned e_;
  };

  // χ(g^k) = ζ_m^{χ·k} for a character of a cyclic group given by its
  // exponent χ on the fixed generator g.
  RootOfUnity character_value(long long chi, long long k, unsigned m);

}  // namespace ppf

#endif  // PPF_CYCLO_HPP_
