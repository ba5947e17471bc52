//
// tropmat - exact matrix semigroups over idempotent semifields
// Copyright (C) 2026 tropmat contributors
//
// This program is free software: you can redistribute it and/or modify
// it under the terms of the GNU General Public License as published by
// the Free Software Foundation, either version 3 of the License, or
// (at your option) any later version.
//
// This program is distributed in the hope that it will be useful,
// but WITHOUT ANY WARRANTY; without even the implied warranty of
// MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
// GNU General Public License for more details.
//
// You should have received a copy of the GNU General Public License
// along with this program.  If not, see <http://www.gnu.org/licenses/>.
//

#ifndef TROPMAT_RATIONAL_HPP_
#define TROPMAT_RATIONAL_HPP_

#include <compare>    // for strong_ordering
#include <cstdint>    // for int64_t
#include <memory>     // for shared_ptr
#include <stdexcept>  // for domain_error, invalid_argument
#include <string>     // for string
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace tropmat {

  // Exact rational number, always reduced with a positive denominator.
  //
  // Values whose numerator and denominator fit in 64 bits are stored inline;
  // anything larger is promoted to an immutable shared arbitrary precision
  // rational, and demoted again as soon as a result fits.
  class Rational {
   public:
    using big_type = boost::multiprecision::cpp_rational;

    Rational() noexcept : _num(0), _den(1) {}

    Rational(std::int64_t n) noexcept : _num(n), _den(1) {}  // NOLINT

    Rational(std::int64_t n, std::int64_t d) : _num(0), _den(1) {
      if (d == 0) {
        throw std::domain_error("rational with zero denominator");
      }
      assign(static_cast<__int128>(n), static_cast<__int128>(d));
    }

    explicit Rational(big_type const& b) : _num(0), _den(1) {
      assign_big(b);
    }

    bool is_small() const noexcept {
      return _big == nullptr;
    }

    big_type to_big() const {
      if (_big) {
        return *_big;
      }
      return big_type(_num, _den);
    }

    // Only meaningful when is_small() holds.
    std::int64_t small_num() const noexcept {
      return _num;
    }
    std::int64_t small_den() const noexcept {
      return _den;
    }

    int sign() const {
      if (_big) {
        return _big->sign();
      }
      return (_num > 0) - (_num < 0);
    }

    friend Rational operator+(Rational const& a, Rational const& b) {
      if (a._big == nullptr && b._big == nullptr) {
        Rational r;
        if (a._den == 1 && b._den == 1) {
          std::int64_t s;
          if (!__builtin_add_overflow(a._num, b._num, &s)) {
            r._num = s;
            return r;
          }
        }
        __int128 n = static_cast<__int128>(a._num) * b._den
                     + static_cast<__int128>(b._num) * a._den;
        __int128 d = static_cast<__int128>(a._den) * b._den;
        r.assign(n, d);
        return r;
      }
      return Rational(a.to_big() + b.to_big());
    }

    friend Rational operator-(Rational const& a) {
      if (a._big == nullptr && a._num != INT64_MIN) {
        Rational r;
        r._num = -a._num;
        r._den = a._den;
        return r;
      }
      return Rational(big_type(-a.to_big()));
    }

    friend Rational operator-(Rational const& a, Rational const& b) {
      return a + (-b);
    }

    Rational& operator+=(Rational const& b) {
      return *this = *this + b;
    }

    Rational& operator-=(Rational const& b) {
      return *this = *this - b;
    }

    // Multiplication by an integer; used for scaling witness parameters.
    friend Rational operator*(std::int64_t k, Rational const& a) {
      return Rational(big_type(a.to_big() * k));
    }

    friend bool operator==(Rational const& a, Rational const& b) {
      if (a._big == nullptr && b._big == nullptr) {
        return a._num == b._num && a._den == b._den;
      }
      if (a._big != nullptr && b._big != nullptr) {
        return *a._big == *b._big;
      }
      // Canonical forms differ in storage class only if values differ.
      return false;
    }

    friend std::strong_ordering operator<=>(Rational const& a,
                                            Rational const& b) {
      if (a._big == nullptr && b._big == nullptr) {
        __int128 l = static_cast<__int128>(a._num) * b._den;
        __int128 r = static_cast<__int128>(b._num) * a._den;
        return l <=> r;
      }
      auto x = a.to_big();
      auto y = b.to_big();
      if (x < y) {
        return std::strong_ordering::less;
      }
      if (y < x) {
        return std::strong_ordering::greater;
      }
      return std::strong_ordering::equal;
    }

    std::string str() const {
      if (_big) {
        auto const& b = *_big;
        std::string s = boost::multiprecision::numerator(b).str();
        if (boost::multiprecision::denominator(b) != 1) {
          s += "/" + boost::multiprecision::denominator(b).str();
        }
        return s;
      }
      std::string s = std::to_string(_num);
      if (_den != 1) {
        s += "/" + std::to_string(_den);
      }
      return s;
    }

    // Accepts "p" or "p/q" with optional leading sign on p; q must be a
    // nonzero unsigned integer.  Throws std::invalid_argument otherwise.
    static Rational parse(std::string_view tok) {
      auto digits = [](std::string_view s, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) {
          i = 1;
        }
        if (i == s.size()) {
          return false;
        }
        for (; i < s.size(); ++i) {
          if (s[i] < '0' || s[i] > '9') {
            return false;
          }
        }
        return true;
      };
      auto slash = tok.find('/');
      std::string_view ps = tok.substr(0, slash);
      std::string_view qs
          = slash == std::string_view::npos ? "1" : tok.substr(slash + 1);
      if (!digits(ps, true) || !digits(qs, false)) {
        throw std::invalid_argument("malformed rational '" + std::string(tok)
                                    + "'");
      }
      std::string p(ps);
      if (p[0] == '+') {
        p.erase(0, 1);
      }
      boost::multiprecision::cpp_int num(p);
      boost::multiprecision::cpp_int den{std::string(qs)};
      if (den == 0) {
        throw std::invalid_argument("zero denominator in '" + std::string(tok)
                                    + "'");
      }
      return Rational(big_type(num, den));
    }

   private:
    static __int128 gcd128(__int128 a, __int128 b) noexcept {
      if (a < 0) {
        a = -a;
      }
      if (b < 0) {
        b = -b;
      }
      while (b != 0) {
        __int128 t = a % b;
        a          = b;
        b          = t;
      }
      return a;
    }

    void assign(__int128 n, __int128 d) {
      if (d < 0) {
        n = -n;
        d = -d;
      }
      __int128 g = gcd128(n, d);
      if (g > 1) {
        n /= g;
        d /= g;
      }
      if (n >= INT64_MIN && n <= INT64_MAX && d <= INT64_MAX) {
        _num = static_cast<std::int64_t>(n);
        _den = static_cast<std::int64_t>(d);
        _big.reset();
        return;
      }
      auto to_cpp = [](__int128 v) {
        bool                         neg = v < 0;
        unsigned __int128            u   = neg ? -static_cast<unsigned __int128>(v)
                                               : static_cast<unsigned __int128>(v);
        boost::multiprecision::cpp_int c
            = static_cast<std::uint64_t>(u >> 64);
        c <<= 64;
        c += static_cast<std::uint64_t>(u);
        return neg ? boost::multiprecision::cpp_int(-c) : c;
      };
      assign_big(big_type(to_cpp(n), to_cpp(d)));
    }

    void assign_big(big_type const& b) {
      auto const& n  = boost::multiprecision::numerator(b);
      auto const& d  = boost::multiprecision::denominator(b);
      using cpp_int  = boost::multiprecision::cpp_int;
      static const cpp_int lo(INT64_MIN);
      static const cpp_int hi(INT64_MAX);
      if (n >= lo && n <= hi && d <= hi) {
        _num = static_cast<std::int64_t>(n);
        _den = static_cast<std::int64_t>(d);
        _big.reset();
      } else {
        _num = 0;
        _den = 1;
        _big = std::make_shared<big_type const>(b);
      }
    }

    std::int64_t                    _num;
    std::int64_t                    _den;
    std::shared_ptr<big_type const> _big;
  };

}  // namespace tropmat

#endif  // TROPMAT_RATIONAL_HPP_
