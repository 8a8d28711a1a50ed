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

#include "ppf/cyclo.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "ppf/error.hpp"

namespace ppf {

  namespace {

    constexpr unsigned max_cyclo_modulus = 512;

    void check_modulus(unsigned m) {
      if (m == 0) {
        throw error("cyclotomic modulus must be positive");
      }
      if (m > max_cyclo_modulus) {
        throw too_large("cyclotomic modulus " + std::to_string(m) + " exceeds " +
                        std::to_string(max_cyclo_modulus));
      }
    }

    unsigned mod(long long e, unsigned m) {
      long long r = e % static_cast<long long>(m);
      return static_cast<unsigned>(r < 0 ? r + m : r);
    }

    // Solves A x = b over Q for an n-column system; A has rows.size() rows.
    // Returns false when inconsistent.  Assumes full column rank.
    bool solve(std::vector<std::vector<Rational>> a,
               std::vector<Rational>              b,
               std::vector<Rational>&             x) {
      std::size_t const rows = a.size();
      std::size_t const cols = rows == 0 ? 0 : a[0].size();
      std::size_t       r    = 0;
      std::vector<std::size_t> pivot_col;
      for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) {
          ++p;
        }
        if (p == rows) {
          continue;
        }
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        Rational const inv = 1 / a[r][c];
        for (std::size_t k = c; k < cols; ++k) {
          a[r][k] *= inv;
        }
        b[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
          if (i == r || a[i][c] == 0) {
            continue;
          }
          Rational const f = a[i][c];
          for (std::size_t k = c; k < cols; ++k) {
            a[i][k] -= f * a[r][k];
          }
          b[i] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
      }
      for (std::size_t i = r; i < rows; ++i) {
        if (b[i] != 0) {
          return false;
        }
      }
      x.assign(cols, Rational(0));
      for (std::size_t i = 0; i < r; ++i) {
        x[pivot_col[i]] = b[i];
      }
      return true;
    }

  }  // namespace

  Rational ratio(long num, long den) {
    if (den == 0) {
      throw error("zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  std::string to_fraction(Rational const& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
  }

  std::string to_short(Rational const& q) {
    if (q.get_den() == 1) {
      return q.get_num().get_str();
    }
    return to_fraction(q);
  }

  Rational parse_rational(std::string const& text) {
    auto const slash = text.find('/');
    auto       parse_int = [&](std::string const& s) {
      if (s.empty()) {
        throw format_error("malformed rational '" + text + "'");
      }
      std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
      if (start == s.size()) {
        throw format_error("malformed rational '" + text + "'");
      }
      for (std::size_t i = start; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') {
          throw format_error("malformed rational '" + text + "'");
        }
      }
      return mpz_class(s[0] == '+' ? s.substr(1) : s);
    };
    if (slash == std::string::npos) {
      return Rational(parse_int(text));
    }
    mpz_class const num = parse_int(text.substr(0, slash));
    mpz_class const den = parse_int(text.substr(slash + 1));
    if (den == 0) {
      throw format_error("zero denominator in '" + text + "'");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t result = n;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
      if (n % p == 0) {
        while (n % p == 0) {
          n /= p;
        }
        result -= result / p;
      }
    }
    if (n > 1) {
      result -= result / n;
    }
    return result;
  }

  std::uint64_t lcm64(std::uint64_t a, std::uint64_t b) {
    return std::lcm(a, b);
  }

  IntPolynomial cyclotomic_polynomial(unsigned m) {
    check_modulus(m);
    static std::mutex                       lock;
    static std::map<unsigned, IntPolynomial> cache;
    {
      std::lock_guard guard(lock);
      if (auto it = cache.find(m); it != cache.end()) {
        return it->second;
      }
    }
    IntPolynomial f(m + 1, 0);
    f[0] = -1;
    f[m] = 1;
    for (unsigned d = 1; d < m; ++d) {
      if (m % d != 0) {
        continue;
      }
      IntPolynomial const g = cyclotomic_polynomial(d);
      // f / g, both monic
      std::size_t const deg_f = f.size() - 1;
      std::size_t const deg_g = g.size() - 1;
      IntPolynomial     q(deg_f - deg_g + 1, 0);
      for (std::size_t k = deg_f + 1; k-- > deg_g;) {
        long long const c = f[k];
        q[k - deg_g]      = c;
        if (c != 0) {
          for (std::size_t j = 0; j <= deg_g; ++j) {
            f[k - deg_g + j] -= c * g[j];
          }
        }
      }
      f = std::move(q);
    }
    std::lock_guard guard(lock);
    cache.emplace(m, f);
    return f;
  }

  std::vector<std::vector<long long>> const& power_table(unsigned m) {
    check_modulus(m);
    static std::mutex lock;
    static std::map<unsigned, std::unique_ptr<std::vector<std::vector<long long>>>> cache;
    {
      std::lock_guard guard(lock);
      if (auto it = cache.find(m); it != cache.end()) {
        return *it->second;
      }
    }
    IntPolynomial const phi_m = cyclotomic_polynomial(m);
    std::size_t const   n     = phi_m.size() - 1;
    auto table = std::make_unique<std::vector<std::vector<long long>>>(m, std::vector<long long>(n, 0));
    std::vector<long long> cur(n, 0);
    cur[0] = 1;
    for (unsigned e = 0; e < m; ++e) {
      (*table)[e] = cur;
      // multiply by ζ and reduce with the monic Φ_m
      long long const top = cur[n - 1];
      for (std::size_t i = n - 1; i > 0; --i) {
        cur[i] = cur[i - 1];
      }
      cur[0] = 0;
      if (top != 0) {
        for (std::size_t i = 0; i < n; ++i) {
          cur[i] -= top * phi_m[i];
        }
      }
    }
    std::lock_guard guard(lock);
    auto [it, inserted] = cache.emplace(m, std::move(table));
    return *it->second;
  }

  CycloNum::CycloNum() : m_(1), c_(1, Rational(0)) {}

  CycloNum::CycloNum(Rational const& q) : m_(1), c_(1, q) {}

  CycloNum::CycloNum(long q) : m_(1), c_(1, Rational(q)) {}

  CycloNum CycloNum::from_coeffs(unsigned m, std::vector<Rational> coeffs) {
    check_modulus(m);
    if (coeffs.size() != euler_phi(m)) {
      throw format_error("cyclotomic value for modulus " + std::to_string(m) + " needs " +
                         std::to_string(euler_phi(m)) + " coefficients, got " +
                         std::to_string(coeffs.size()));
    }
    CycloNum r;
    r.m_ = m;
    r.c_ = std::move(coeffs);
    return r;
  }

  CycloNum CycloNum::from_exponent_sums(unsigned m, std::vector<Rational> const& coeffs) {
    auto const&       t = power_table(m);
    std::size_t const n = euler_phi(m);
    std::vector<Rational> out(n, Rational(0));
    for (std::size_t e = 0; e < coeffs.size(); ++e) {
      Rational const& a = coeffs[e];
      if (a == 0) {
        continue;
      }
      auto const& row = t[e % m];
      for (std::size_t k = 0; k < n; ++k) {
        if (row[k] != 0) {
          out[k] += a * static_cast<long>(row[k]);
        }
      }
    }
    return from_coeffs(m, std::move(out));
  }

  CycloNum CycloNum::from_exponent_counts(unsigned m, std::span<long long const> counts) {
    auto const&       t = power_table(m);
    std::size_t const n = euler_phi(m);
    std::vector<long long> out(n, 0);
    for (std::size_t e = 0; e < counts.size(); ++e) {
      if (counts[e] == 0) {
        continue;
      }
      auto const& row = t[e % m];
      for (std::size_t k = 0; k < n; ++k) {
        out[k] += counts[e] * row[k];
      }
    }
    std::vector<Rational> q(n);
    for (std::size_t k = 0; k < n; ++k) {
      q[k] = Rational(static_cast<long>(out[k]));
    }
    return from_coeffs(m, std::move(q));
  }

  CycloNum CycloNum::root_of_unity(unsigned m, long long e) {
    auto const& row = power_table(m)[mod(e, m)];
    std::vector<Rational> q(row.size());
    for (std::size_t k = 0; k < row.size(); ++k) {
      q[k] = Rational(static_cast<long>(row[k]));
    }
    return from_coeffs(m, std::move(q));
  }

  bool CycloNum::is_zero() const noexcept {
    for (auto const& a : c_) {
      if (a != 0) {
        return false;
      }
    }
    return true;
  }

  bool CycloNum::is_rational() const {
    return canonical().m_ == 1;
  }

  CycloNum CycloNum::lifted(unsigned m2) const {
    if (m2 == m_) {
      return *this;
    }
    if (m2 % m_ != 0) {
      throw error("cannot lift from modulus " + std::to_string(m_) + " to " + std::to_string(m2));
    }
    unsigned const        d = m2 / m_;
    std::vector<Rational> acc(m2, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
      acc[(i * d) % m2] += c_[i];
    }
    return from_exponent_sums(m2, acc);
  }

  CycloNum CycloNum::canonical() const {
    if (m_ == 1) {
      return *this;
    }
    if (is_zero()) {
      return CycloNum();
    }
    std::size_t const n = c_.size();
    for (unsigned d = 1; d < m_; ++d) {
      if (m_ % d != 0) {
        continue;
      }
      std::size_t const nd = euler_phi(d);
      if (d % 4 == 2) {
        continue;  // same field as d / 2
      }
      std::vector<std::vector<Rational>> a(n, std::vector<Rational>(nd));
      unsigned const                     step = m_ / d;
      auto const&                        t    = power_table(m_);
      for (std::size_t j = 0; j < nd; ++j) {
        auto const& row = t[(j * step) % m_];
        for (std::size_t k = 0; k < n; ++k) {
          a[k][j] = Rational(static_cast<long>(row[k]));
        }
      }
      std::vector<Rational> x;
      if (solve(std::move(a), c_, x)) {
        return from_coeffs(d, std::move(x));
      }
    }
    return *this;
  }

  CycloNum CycloNum::inverse() const {
    if (is_zero()) {
      throw error("division by zero in cyclotomic arithmetic");
    }
    std::size_t const                  n = c_.size();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (std::size_t j = 0; j < n; ++j) {
      CycloNum const col = *this * root_of_unity(m_, static_cast<long long>(j));
      for (std::size_t k = 0; k < n; ++k) {
        a[k][j] = col.c_[k];
      }
    }
    std::vector<Rational> b(n, Rational(0));
    b[0] = 1;
    std::vector<Rational> x;
    solve(std::move(a), std::move(b), x);
    return from_coeffs(m_, std::move(x));
  }

  CycloNum& CycloNum::operator+=(CycloNum const& b) {
    if (b.m_ == m_) {
      for (std::size_t i = 0; i < c_.size(); ++i) {
        c_[i] += b.c_[i];
      }
      return *this;
    }
    auto const l = static_cast<unsigned>(std::lcm(m_, b.m_));
    CycloNum   x = lifted(l);
    CycloNum   y = b.lifted(l);
    x += y;
    return *this = std::move(x);
  }

  CycloNum& CycloNum::operator-=(CycloNum const& b) {
    return *this += -b;
  }

  CycloNum& CycloNum::operator*=(CycloNum const& b) {
    if (b.m_ != m_) {
      auto const l = static_cast<unsigned>(std::lcm(m_, b.m_));
      CycloNum   x = lifted(l);
      x *= b.lifted(l);
      return *this = std::move(x);
    }
    if (m_ == 1) {
      c_[0] *= b.c_[0];
      return *this;
    }
    std::vector<Rational> acc(m_, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) {
        continue;
      }
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (b.c_[j] != 0) {
          acc[(i + j) % m_] += c_[i] * b.c_[j];
        }
      }
    }
    return *this = from_exponent_sums(m_, acc);
  }

  CycloNum& CycloNum::operator/=(CycloNum const& b) {
    if (b.m_ == 1) {
      if (b.c_[0] == 0) {
        throw error("division by zero in cyclotomic arithmetic");
      }
      for (auto& a : c_) {
        a /= b.c_[0];
      }
      return *this;
    }
    return *this *= b.inverse();
  }

  CycloNum CycloNum::operator-() const {
    CycloNum r = *this;
    for (auto& a : r.c_) {
      a = -a;
    }
    return r;
  }

  bool operator==(CycloNum const& a, CycloNum const& b) {
    if (a.m_ == b.m_) {
      return a.c_ == b.c_;
    }
    auto const l = static_cast<unsigned>(std::lcm(a.m_, b.m_));
    return a.lifted(l).c_ == b.lifted(l).c_;
  }

  std::string CycloNum::to_string() const {
    CycloNum const c = canonical();
    if (c.m_ == 1) {
      return to_short(c.c_[0]);
    }
    std::ostringstream out;
    bool               first = true;
    for (std::size_t i = 0; i < c.c_.size(); ++i) {
      Rational const& a = c.c_[i];
      if (a == 0) {
        continue;
      }
      Rational mag = abs(a);
      if (first) {
        out << (a < 0 ? "-" : "");
      } else {
        out << (a < 0 ? " - " : " + ");
      }
      first = false;
      if (i == 0) {
        out << to_short(mag);
        continue;
      }
      if (mag != 1) {
        out << to_short(mag) << "*";
      }
      out << "z";
      if (i > 1) {
        out << "^" << i;
      }
    }
    out << " (z = zeta_" << c.m_ << ")";
    return out.str();
  }

  RootOfUnity::RootOfUnity(unsigned m, long long e) : m_(m), e_(0) {
    if (m == 0) {
      throw error("root of unity needs a positive modulus");
    }
    e_ = mod(e, m);
  }

  unsigned RootOfUnity::order() const noexcept {
    return m_ / std::gcd(m_, e_ == 0 ? m_ : e_);
  }

  CycloNum RootOfUnity::to_cyclo() const {
    return CycloNum::root_of_unity(m_, e_);
  }

  RootOfUnity RootOfUnity::inverse() const {
    return RootOfUnity(m_, -static_cast<long long>(e_));
  }

  RootOfUnity operator*(RootOfUnity const& a, RootOfUnity const& b) {
    auto const l = std::lcm(a.m_, b.m_);
    return RootOfUnity(l, static_cast<long long>(a.e_) * (l / a.m_) +
                              static_cast<long long>(b.e_) * (l / b.m_));
  }

  bool operator==(RootOfUnity const& a, RootOfUnity const& b) {
    auto const l = std::lcm(a.m_, b.m_);
    return static_cast<unsigned long long>(a.e_) * (l / a.m_) ==
           static_cast<unsigned long long>(b.e_) * (l / b.m_);
  }

  RootOfUnity character_value(long long chi, long long k, unsigned m) {
    return RootOfUnity(m, (chi % static_cast<long long>(m)) * (k % static_cast<long long>(m)));
  }

}  // namespace ppf
