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

// Idempotent semifields with a linearly ordered group of units, and the
// top-extended residuated semiring built from them.
//
// A semifield is modelled as a stateless traits struct S providing
//
//   value_type, kind, name,
//   zero(), one(), is_zero(a),
//   add(a, b)   (join, maximum in the linear order)
//   mul(a, b)   (group product, zero absorbing)
//   meet(a, b)  (minimum in the linear order)
//   inv(a)      (group inverse, throws NoInverse on zero)
//   less(a, b), to_string(a), parse(token)
//
// Matrices and all algorithms are templated on such a struct.

#ifndef TROPMAT_SEMIRING_HPP_
#define TROPMAT_SEMIRING_HPP_

#include <compare>    // for strong_ordering
#include <cstdint>    // for uint8_t
#include <stdexcept>  // for domain_error, invalid_argument
#include <string>     // for string
#include <string_view>

#include "rational.hpp"

namespace tropmat {

  enum class SemifieldKind { Boolean, MaxPlusRational };

  inline char const* kind_name(SemifieldKind k) {
    return k == SemifieldKind::Boolean ? "bool" : "maxplus";
  }

  inline SemifieldKind parse_kind(std::string_view s) {
    if (s == "bool" || s == "boolean" || s == "B") {
      return SemifieldKind::Boolean;
    }
    if (s == "maxplus" || s == "max-plus" || s == "tropical" || s == "Q") {
      return SemifieldKind::MaxPlusRational;
    }
    throw std::invalid_argument("unknown semifield kind '" + std::string(s)
                                + "'");
  }

  class NoInverse : public std::domain_error {
   public:
    NoInverse() : std::domain_error("the zero element has no inverse") {}
  };

  class KindMismatch : public std::invalid_argument {
   public:
    KindMismatch()
        : std::invalid_argument("operands have different semifield kinds") {}
  };

  ////////////////////////////////////////////////////////////////////////
  // Boolean semifield
  ////////////////////////////////////////////////////////////////////////

  struct BooleanSemifield {
    using value_type                     = bool;
    static constexpr SemifieldKind kind  = SemifieldKind::Boolean;
    static constexpr char const*   name  = "bool";
    static constexpr bool nontrivial_group = false;

    static value_type zero() noexcept {
      return false;
    }
    static value_type one() noexcept {
      return true;
    }
    static bool is_zero(value_type a) noexcept {
      return !a;
    }
    static value_type add(value_type a, value_type b) noexcept {
      return a || b;
    }
    static value_type mul(value_type a, value_type b) noexcept {
      return a && b;
    }
    static value_type meet(value_type a, value_type b) noexcept {
      return a && b;
    }
    static value_type inv(value_type a) {
      if (!a) {
        throw NoInverse();
      }
      return true;
    }
    static bool less(value_type a, value_type b) noexcept {
      return !a && b;
    }
    static std::string to_string(value_type a) {
      return a ? "1" : "0";
    }
    static value_type parse(std::string_view tok) {
      if (tok == "1") {
        return true;
      }
      if (tok == "0") {
        return false;
      }
      throw std::invalid_argument("malformed Boolean value '"
                                  + std::string(tok) + "'");
    }
  };

  ////////////////////////////////////////////////////////////////////////
  // Max-plus semifield over the rationals
  ////////////////////////////////////////////////////////////////////////

  // Either -inf (the zero of the semifield) or a finite rational.
  class MaxPlusValue {
   public:
    MaxPlusValue() noexcept : _finite(false), _q() {}

    MaxPlusValue(Rational q) : _finite(true), _q(std::move(q)) {}  // NOLINT

    static MaxPlusValue neg_inf() noexcept {
      return MaxPlusValue();
    }

    bool is_finite() const noexcept {
      return _finite;
    }

    Rational const& value() const {
      if (!_finite) {
        throw NoInverse();
      }
      return _q;
    }

    friend bool operator==(MaxPlusValue const& a, MaxPlusValue const& b) {
      if (a._finite != b._finite) {
        return false;
      }
      return !a._finite || a._q == b._q;
    }

    friend std::strong_ordering operator<=>(MaxPlusValue const& a,
                                            MaxPlusValue const& b) {
      if (!a._finite || !b._finite) {
        return a._finite <=> b._finite;
      }
      return a._q <=> b._q;
    }

   private:
    bool     _finite;
    Rational _q;
  };

  struct MaxPlusSemifield {
    using value_type                      = MaxPlusValue;
    static constexpr SemifieldKind kind   = SemifieldKind::MaxPlusRational;
    static constexpr char const*   name   = "maxplus";
    static constexpr bool nontrivial_group = true;

    static value_type zero() {
      return MaxPlusValue();
    }
    static value_type one() {
      return MaxPlusValue(Rational(0));
    }
    static bool is_zero(value_type const& a) noexcept {
      return !a.is_finite();
    }
    static value_type add(value_type const& a, value_type const& b) {
      return (a < b) ? b : a;
    }
    static value_type mul(value_type const& a, value_type const& b) {
      if (!a.is_finite() || !b.is_finite()) {
        return MaxPlusValue();
      }
      return MaxPlusValue(a.value() + b.value());
    }
    static value_type meet(value_type const& a, value_type const& b) {
      return (a < b) ? a : b;
    }
    static value_type inv(value_type const& a) {
      return MaxPlusValue(-a.value());
    }
    static bool less(value_type const& a, value_type const& b) {
      return a < b;
    }
    static std::string to_string(value_type const& a) {
      return a.is_finite() ? a.value().str() : std::string("-inf");
    }
    static value_type parse(std::string_view tok) {
      if (tok == "-inf") {
        return MaxPlusValue();
      }
      return MaxPlusValue(Rational::parse(tok));
    }
    // The group element g, i.e. the finite value g in additive notation.
    static value_type from_group(Rational const& g) {
      return MaxPlusValue(g);
    }
  };

  ////////////////////////////////////////////////////////////////////////
  // Generic helpers
  ////////////////////////////////////////////////////////////////////////

  template <typename S>
  bool leq(typename S::value_type const& a, typename S::value_type const& b) {
    return !S::less(b, a);
  }

  // a * b^{-1}
  template <typename S>
  typename S::value_type div(typename S::value_type const& a,
                             typename S::value_type const& b) {
    return S::mul(a, S::inv(b));
  }

  ////////////////////////////////////////////////////////////////////////
  // Top-extended semiring
  ////////////////////////////////////////////////////////////////////////

  template <typename S>
  class ExtendedValue {
   public:
    using base_value = typename S::value_type;
    enum class Tag : std::uint8_t { Zero, Finite, Top };

    ExtendedValue() : _tag(Tag::Zero), _v(S::zero()) {}

    ExtendedValue(base_value const& v)  // NOLINT
        : _tag(S::is_zero(v) ? Tag::Zero : Tag::Finite), _v(v) {}

    static ExtendedValue top() {
      ExtendedValue x;
      x._tag = Tag::Top;
      return x;
    }

    Tag tag() const noexcept {
      return _tag;
    }
    bool is_top() const noexcept {
      return _tag == Tag::Top;
    }
    bool is_zero() const noexcept {
      return _tag == Tag::Zero;
    }
    bool is_finite() const noexcept {
      return _tag == Tag::Finite;
    }

    // Value in S; throws if this is the top element.
    base_value const& base() const {
      if (_tag == Tag::Top) {
        throw std::domain_error("top element has no value in S");
      }
      return _v;
    }

    friend bool operator==(ExtendedValue const& a, ExtendedValue const& b) {
      if (a._tag != b._tag) {
        return false;
      }
      return a._tag != Tag::Finite || a._v == b._v;
    }

    friend bool operator<(ExtendedValue const& a, ExtendedValue const& b) {
      if (a._tag != b._tag) {
        return a._tag < b._tag;
      }
      return a._tag == Tag::Finite && S::less(a._v, b._v);
    }

   private:
    Tag        _tag;
    base_value _v;
  };

  // Traits struct for the top-extended semiring over S.
  template <typename S>
  struct Extended {
    using base_semiring                  = S;
    using value_type                     = ExtendedValue<S>;
    static constexpr SemifieldKind kind  = S::kind;
    static constexpr char const*   name  = S::name;

    static value_type zero() {
      return value_type();
    }
    static value_type one() {
      return value_type(S::one());
    }
    static value_type top() {
      return value_type::top();
    }
    static bool is_zero(value_type const& a) {
      return a.is_zero();
    }
    static value_type add(value_type const& a, value_type const& b) {
      return (a < b) ? b : a;
    }
    static value_type meet(value_type const& a, value_type const& b) {
      return (a < b) ? a : b;
    }
    static value_type mul(value_type const& a, value_type const& b) {
      if (a.is_zero() || b.is_zero()) {
        return zero();
      }
      if (a.is_top() || b.is_top()) {
        return top();
      }
      return value_type(S::mul(a.base(), b.base()));
    }
    static bool less(value_type const& a, value_type const& b) {
      return a < b;
    }
    static std::string to_string(value_type const& a) {
      return a.is_top() ? std::string("+top") : S::to_string(a.base());
    }
    static value_type parse(std::string_view tok) {
      if (tok == "+top") {
        return top();
      }
      return value_type(S::parse(tok));
    }

    // The largest x with a * x <= b.
    static value_type residual(value_type const& a, value_type const& b) {
      if (a.is_zero() || (a.is_top() && b.is_top())) {
        return top();
      }
      if (a.is_top()) {
        return zero();
      }
      if (b.is_top()) {
        return top();
      }
      if (b.is_zero()) {
        return zero();
      }
      return value_type(S::mul(b.base(), S::inv(a.base())));
    }
  };

}  // namespace tropmat

#endif  // TROPMAT_SEMIRING_HPP_
