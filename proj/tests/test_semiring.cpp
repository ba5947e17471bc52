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

#include <cstdint>  // for int64_t
#include <limits>   // for numeric_limits
#include <vector>   // for vector

#include "catch_amalgamated.hpp"

#include "tropmat/random.hpp"
#include "tropmat/rational.hpp"
#include "tropmat/semiring.hpp"

using namespace tropmat;

namespace {
  using MP  = MaxPlusSemifield;
  using B   = BooleanSemifield;
  using XMP = Extended<MaxPlusSemifield>;

  MaxPlusValue q(std::int64_t n, std::int64_t d = 1) {
    return MaxPlusValue(Rational(n, d));
  }

  // Values used for exhaustive small checks: -inf and k/2 for k in -6..6.
  std::vector<MaxPlusValue> grid() {
    std::vector<MaxPlusValue> v{MP::zero()};
    for (std::int64_t k = -6; k <= 6; ++k) {
      v.push_back(q(k, 2));
    }
    return v;
  }
}  // namespace

TEST_CASE("Rational canonical form", "[rational]") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational(4, 2).str() == "2");
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("abc"));
  CHECK_THROWS(Rational::parse("1.5"));
}

TEST_CASE("Rational arithmetic past 64 bits stays exact", "[rational]") {
  std::int64_t big = std::numeric_limits<std::int64_t>::max();
  Rational     a(big);
  Rational     s = a + a;
  CHECK(!s.is_small());
  CHECK(s.str() == "18446744073709551614");
  CHECK(s - a == a);
  CHECK((s - a).is_small());
  Rational tiny(1, big);
  Rational t = tiny + Rational(1, big - 1);
  CHECK(t - Rational(1, big - 1) == tiny);
  CHECK(Rational::parse(s.str()) == s);
  CHECK(a < s);
  CHECK(-s < -a);
}

TEST_CASE("max-plus add is max with -inf least", "[semiring]") {
  CHECK(MP::add(q(3), q(-1, 2)) == q(3));
  for (auto const& x : grid()) {
    CHECK(MP::add(MP::zero(), x) == x);
  }
  CHECK(B::add(true, true) == true);
}

TEST_CASE("max-plus mul is rational addition", "[semiring]") {
  CHECK(MP::mul(q(3, 2), q(1, 2)) == q(2));
  CHECK(MP::mul(MP::zero(), q(5)) == MP::zero());
  CHECK(B::mul(true, true) == true);
  CHECK(B::mul(true, false) == false);
}

TEST_CASE("inverses", "[semiring]") {
  CHECK(MP::inv(q(3, 2)) == q(-3, 2));
  CHECK(MP::inv(MP::one()) == MP::one());
  CHECK_THROWS_AS(MP::inv(MP::zero()), NoInverse);
  CHECK(B::inv(true) == true);
  CHECK_THROWS_AS(B::inv(false), NoInverse);
  for (auto const& x : grid()) {
    if (!MP::is_zero(x)) {
      CHECK(MP::mul(x, MP::inv(x)) == MP::one());
    }
  }
}

TEST_CASE("meet is min", "[semiring]") {
  CHECK(MP::meet(q(3), q(-1, 2)) == q(-1, 2));
  for (auto const& x : grid()) {
    CHECK(MP::meet(MP::zero(), x) == MP::zero());
  }
  CHECK(B::meet(false, true) == false);
}

TEST_CASE("semiring laws on a grid", "[semiring]") {
  auto g = grid();
  for (auto const& a : g) {
    CHECK(MP::add(a, a) == a);
    CHECK(MP::mul(a, MP::one()) == a);
    for (auto const& b : g) {
      auto s = MP::add(a, b);
      CHECK((s == a || s == b));
      CHECK(s == MP::add(b, a));
      CHECK(MP::mul(a, b) == MP::mul(b, a));
      if (MP::is_zero(s)) {
        CHECK((MP::is_zero(a) && MP::is_zero(b)));
      }
      for (auto const& c : g) {
        CHECK(MP::add(MP::add(a, b), c) == MP::add(a, MP::add(b, c)));
        CHECK(MP::mul(MP::mul(a, b), c) == MP::mul(a, MP::mul(b, c)));
        CHECK(MP::mul(a, MP::add(b, c))
              == MP::add(MP::mul(a, b), MP::mul(a, c)));
      }
    }
  }
}

TEST_CASE("residual examples", "[semiring][residual]") {
  auto top = XMP::top();
  CHECK(XMP::residual(XMP::zero(), XMP::value_type(q(4))) == top);
  CHECK(XMP::residual(XMP::value_type(q(2)), XMP::value_type(q(5)))
        == XMP::value_type(q(3)));
  CHECK(XMP::residual(top, XMP::one()) == XMP::zero());
  CHECK(XMP::residual(top, top) == top);
}

TEST_CASE("residual is the largest x with a x <= b", "[semiring][residual]") {
  // Candidates: the grid, shifted by +-1/4, and top.
  std::vector<XMP::value_type> vals{XMP::top()};
  for (auto const& v : grid()) {
    vals.emplace_back(v);
  }
  std::vector<XMP::value_type> cands = vals;
  for (auto const& v : grid()) {
    if (v.is_finite()) {
      cands.emplace_back(MaxPlusValue(v.value() + Rational(1, 4)));
      cands.emplace_back(MaxPlusValue(v.value() - Rational(1, 4)));
    }
  }
  auto leq = [](XMP::value_type const& x, XMP::value_type const& y) {
    return !XMP::less(y, x);
  };
  for (auto const& a : vals) {
    for (auto const& b : vals) {
      auto r = XMP::residual(a, b);
      CHECK(leq(XMP::mul(a, r), b));
      for (auto const& x : cands) {
        if (leq(XMP::mul(a, x), b)) {
          CHECK(leq(x, r));
        }
      }
    }
  }
}

TEST_CASE("token round trip", "[semiring][io]") {
  Random rng(7);
  for (int k = 0; k < 200; ++k) {
    auto v = rng.value<MP>();
    CHECK(MP::parse(MP::to_string(v)) == v);
  }
  CHECK(MP::to_string(MP::zero()) == "-inf");
  CHECK(MP::to_string(q(-3, 4)) == "-3/4");
  CHECK(XMP::to_string(XMP::top()) == "+top");
  CHECK(XMP::parse("+top") == XMP::top());
  CHECK(B::parse("1") == true);
  CHECK_THROWS(B::parse("2"));
  CHECK_THROWS(MP::parse("inf"));
  CHECK(parse_kind("bool") == SemifieldKind::Boolean);
  CHECK(parse_kind("maxplus") == SemifieldKind::MaxPlusRational);
  CHECK_THROWS(parse_kind("minplus"));
}
