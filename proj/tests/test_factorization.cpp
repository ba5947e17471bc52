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

#include <algorithm>  // for max
#include <cstdint>    // for int64_t
#include <vector>   // for vector

#include "catch_amalgamated.hpp"

#include "tropmat/factorization.hpp"
#include "tropmat/finite_green.hpp"
#include "tropmat/random.hpp"

using namespace tropmat;

namespace {
  using MP = MaxPlusSemifield;
  using B  = BooleanSemifield;

  MaxPlusValue q(std::int64_t n) {
    return MaxPlusValue(Rational(n));
  }

  MaxPlusValue const NI = MaxPlusValue::neg_inf();

  Matrix<MP> unit_g(std::size_t n, std::int64_t g) {
    Matrix<MP> m(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        m.set(i, j, i == j ? MP::one() : q(g));
      }
    }
    return m;
  }

  // Least k with X^k = X^(k+1), by repeated multiplication.
  std::size_t stabilisation_index(Matrix<MP> const& x) {
    std::vector<Matrix<MP>> pw{x};
    while (pw.size() < 4 * x.dim()) {
      pw.push_back(mat_mul(pw.back(), x));
      if (pw.back() == pw[pw.size() - 2]) {
        return pw.size() - 1;
      }
    }
    return 0;
  }
}  // namespace

TEST_CASE("normal forms", "[factorization]") {
  Matrix<MP> a{{q(2), q(5)}, {NI, q(1)}};
  auto       nf = normal_form(a);
  CHECK(nf.d == Matrix<MP>{{q(2), NI}, {NI, q(1)}});
  CHECK(nf.rnorm == Matrix<MP>{{q(0), q(4)}, {NI, q(0)}});
  CHECK(nf.lnorm == Matrix<MP>{{q(0), q(3)}, {NI, q(0)}});

  Random rng(21);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = 1 + t % 6;
    auto        u = rng.unitriangular<MP>(n, false);
    auto        nu = normal_form(u);
    CHECK(nu.d == Matrix<MP>::identity(n));
    CHECK(nu.rnorm == u);
    CHECK(nu.lnorm == u);
    auto d  = rng.invertible_diagonal<MP>(n);
    auto nd = normal_form(d);
    CHECK(nd.d == d);
    CHECK(nd.rnorm == Matrix<MP>::identity(n));
    CHECK(nd.lnorm == Matrix<MP>::identity(n));
    auto f  = rng.full_diagonal<MP>(n);
    auto nf2 = normal_form(f);
    CHECK(mat_mul(nf2.rnorm, nf2.d) == f);
    CHECK(mat_mul(nf2.d, nf2.lnorm) == f);
    CHECK(nf2.rnorm.has_shape(Shape::Unitriangular));
    CHECK(nf2.lnorm.has_shape(Shape::Unitriangular));
  }
  CHECK_THROWS_AS(normal_form(Matrix<MP>{{q(0), q(1)}, {NI, NI}}), ShapeError);
}

TEST_CASE("meet idempotent", "[factorization]") {
  auto x = from_bits<B>(3, {{1, 1, 0}, {0, 1, 1}, {0, 0, 1}});
  CHECK(plus_of(x) == from_bits<B>(3, {{1, 0, 0}, {0, 1, 1}, {0, 0, 1}}));
  CHECK(star_of(x) == from_bits<B>(3, {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}));
  CHECK(meet_idempotent(x) == BoolMatrix::identity(3));

  Random rng(22);
  for (int t = 0; t < 1000; ++t) {
    std::size_t n = 1 + t % 6;
    auto        u = rng.unitriangular<MP>(n, t % 2 == 0);
    auto        m = meet_idempotent(u);
    CHECK(is_idempotent(m));
    CHECK(leq_entrywise(m, u));
    CHECK(mat_mul(m, u) == u);
    CHECK(mat_mul(u, m) == u);
    auto e = plus_of(u);
    CHECK(meet_idempotent(e) == e);
  }
  CHECK_THROWS_AS(meet_idempotent(Matrix<MP>::all_ones(2)), ShapeError);
}

TEST_CASE("idempotent factorisation examples", "[factorization]") {
  auto x = from_bits<B>(3, {{1, 1, 0}, {0, 1, 1}, {0, 0, 1}});
  auto r = idempotent_factorize(x);
  REQUIRE(r.factors.size() == 2);
  CHECK(r.factors[0] == from_bits<B>(3, {{1, 0, 0}, {0, 1, 1}, {0, 0, 1}}));
  CHECK(r.factors[1] == from_bits<B>(3, {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}));
  CHECK(mat_mul(r.factors[0], r.factors[1]) == x);

  for (auto const& f : idempotent_factorize(Matrix<MP>::identity(4)).factors) {
    CHECK(f == Matrix<MP>::identity(4));
  }
  auto e = plus_of(from_bits<B>(3, {{1, 1, 1}, {0, 1, 0}, {0, 0, 1}}));
  REQUIRE(is_idempotent(e));
  for (auto const& f : idempotent_factorize(e).factors) {
    CHECK(f == e);
  }
  CHECK(idempotent_factorize(Matrix<MP>::identity(1)).factors.empty());
}

TEST_CASE("every Boolean unitriangular matrix factorises", "[factorization]") {
  for (std::size_t n = 1; n <= 5; ++n) {
    FiniteMonoidTable t({Family::UniBool, n});
    for (auto c : t.elements()) {
      auto x = bmat::to_matrix(c, n);
      auto r = idempotent_factorize(x);
      CHECK(r.factors.size() == n - 1);
      BoolMatrix p = BoolMatrix::identity(n);
      for (auto const& f : r.factors) {
        CHECK(mat_mul(f, f) == f);
        p = mat_mul(p, f);
      }
      CHECK(p == x);
      CHECK(column_recurrences_hold(x));
    }
  }
}

TEST_CASE("max-plus unitriangular matrices factorise", "[factorization]") {
  Random rng(23);
  for (int t = 0; t < 1000; ++t) {
    std::size_t n   = 2 + t % 7;
    bool        pos = t % 2 == 1;
    auto        x   = rng.unitriangular<MP>(n, pos);
    auto        r   = idempotent_factorize(x);
    REQUIRE(r.factors.size() == n - 1);
    for (auto const& f : r.factors) {
      CHECK(is_idempotent(f));
      CHECK(f.has_shape(Shape::Unitriangular));
      if (pos) {
        CHECK(f.has_shape(Shape::PositiveUpper));
      }
    }
    CHECK(product_of(r.factors, n) == x);
    CHECK(column_recurrences_hold(x));
  }
}

TEST_CASE("full decomposition and the semidirect law", "[factorization]") {
  Random rng(24);
  for (int t = 0; t < 300; ++t) {
    std::size_t n  = 1 + t % 6;
    auto        a  = rng.full_diagonal<MP>(n);
    auto        fd = full_decompose(a);
    CHECK(mat_mul(product_of(fd.factors, n), fd.diagonal) == a);
    CHECK(semidirect_law_check(a, rng.full_diagonal<MP>(n)));
  }
  auto d = Random(25).invertible_diagonal<MP>(3);
  for (auto const& f : full_decompose(d).factors) {
    CHECK(f == Matrix<MP>::identity(3));
  }
  auto u = Random(26).unitriangular<MP>(3, false);
  CHECK(full_decompose(u).diagonal == Matrix<MP>::identity(3));
  CHECK(semidirect_law_check(Matrix<MP>::identity(3), Matrix<MP>::identity(3)));
}

TEST_CASE("products of idempotents", "[factorization]") {
  Random rng(27);
  for (int t = 0; t < 300; ++t) {
    std::size_t n = 2 + t % 5;
    auto        e = plus_of(rng.full_diagonal<MP>(n));
    auto        f = star_of(rng.full_diagonal<MP>(n));
    auto        p = mat_mul(mat_mul(e, f), plus_of(rng.full_diagonal<MP>(n)));
    CHECK(p.has_shape(Shape::Unitriangular));
    std::size_t m = (n + 2) / 2;
    auto        r = ef_power_identities(e, f, m);
    CHECK(r.threshold_met);
    CHECK(r.all_equal);
    auto same = ef_power_identities(e, e, m);
    CHECK(same.all_equal);
    CHECK(power(mat_mul(e, e), m) == e);
  }
  auto e = plus_of(Random(28).full_diagonal<MP>(5));
  CHECK_FALSE(ef_power_identities(e, e, 2).threshold_met);
}

TEST_CASE("aperiodicity", "[factorization]") {
  CHECK(aperiodicity_check(Matrix<MP>::identity(4)) == 1);
  CHECK(aperiodicity_check(unit_g(4, 1)) == 3);
  Random rng(29);
  for (int t = 0; t < 300; ++t) {
    std::size_t n = 1 + t % 6;
    auto        x = rng.unitriangular<MP>(n, t % 2 == 0);
    auto        k = aperiodicity_check(x);
    CHECK(k >= 1);
    CHECK(k <= std::max<std::size_t>(1, n - 1));
    CHECK(k == stabilisation_index(x));
    CHECK(aperiodicity_check(plus_of(x)) == 1);
  }
}
