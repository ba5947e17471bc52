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

#include <cstdint>   // for int64_t
#include <optional>  // for optional
#include <set>       // for set
#include <string>    // for string
#include <vector>    // for vector

#include "catch_amalgamated.hpp"

#include "tropmat/deficiency.hpp"
#include "tropmat/random.hpp"

using namespace tropmat;

namespace {
  MaxPlusValue q(std::int64_t n, std::int64_t d = 1) {
    return MaxPlusValue(Rational(n, d));
  }

  MaxPlusValue const NI = MaxPlusValue::neg_inf();

  // Def along a path with plain rational arithmetic.
  Rational def_direct(Matrix<MP> const& a, std::vector<std::size_t> const& v) {
    Rational s = 0;
    for (std::size_t t = 1; t < v.size(); ++t) {
      s += a(v[t - 1] - 1, v[t] - 1).value();
    }
    return a(v.front() - 1, v.back() - 1).value() - s;
  }

  Matrix<MP> conjugate(Matrix<MP> const& a, Matrix<MP> const& g) {
    return mat_mul(mat_mul(g, a), diagonal_inverse(g));
  }

  // g-scaled matrix from integer exponents, with 99 standing for zero.
  Matrix<MP> gmat(std::vector<std::vector<int>> const& k, Rational const& g) {
    Matrix<MP> m(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) {
      for (std::size_t j = 0; j < k.size(); ++j) {
        if (k[i][j] != 99) {
          m.set(i, j, MaxPlusValue(std::int64_t(k[i][j]) * g));
        }
      }
    }
    return m;
  }

  // lambda ([mu]_{p,p} o E), 0-based p.
  Matrix<MP> corner_member(Matrix<MP> const& e,
                           std::size_t       p,
                           Rational const&   mu,
                           Rational const&   lambda) {
    auto m = e;
    m.set(p, p, MaxPlusValue(e(p, p).value() + mu));
    return scale(MaxPlusValue(lambda), m);
  }

  std::set<Triple> triples(std::initializer_list<Triple> l) {
    return std::set<Triple>(l);
  }
}  // namespace

TEST_CASE("paths", "[deficiency]") {
  CHECK(Path::parse("1->2->4") == Path{1, 2, 4});
  CHECK(Path::parse("1,2,4") == Path{1, 2, 4});
  CHECK(Path::parse("1 2 4") == Path{1, 2, 4});
  CHECK(Path{1, 2, 4}.str() == "1->2->4");
  CHECK(Path{1, 2, 4}.simple());
  CHECK_FALSE(Path{1, 1, 4}.simple());
  CHECK_THROWS_AS(Path::parse("1->x"), std::invalid_argument);
  CHECK_THROWS_AS((Path{3, 2}.validate(4)), std::invalid_argument);
  CHECK_THROWS_AS((Path{1, 5}.validate(4)), std::invalid_argument);
  CHECK_THROWS_AS(Path{1}.validate(4), std::invalid_argument);
  CHECK(simple_length2_paths(4).size() == 4);
  CHECK(simple_length2_paths(5).size() == 10);
  for (auto const& p : anchored_paths(5)) {
    CHECK(p.length() == 3);
    CHECK(p.vertices[0] == 1);
  }
  for (auto const& p : all_paths(4)) {
    CHECK_NOTHROW(p.validate(4));
  }
  CHECK(all_paths(2).size() == 12);
}

TEST_CASE("deficiency values", "[deficiency]") {
  auto w = noncommute_matrices(Rational(1));
  CHECK(deficiency(w.plus, Path{1, 2, 4}) == q(2));
  CHECK(deficiency(w.star, Path{1, 2, 4}) == q(0));
  Random rng(31);
  for (int t = 0; t < 300; ++t) {
    std::size_t n = 2 + t % 5;
    auto        u = rng.unitriangular<MP>(n, true);
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = i; j <= n; ++j) {
        CHECK(deficiency(u, Path{i, i, j}) == MP::one());
      }
    }
    auto a = rng.positive_upper<MP>(n);
    auto p = random_path(n, rng, n + 2);
    CHECK(deficiency(a, p) == MaxPlusValue(def_direct(a, p.vertices)));
    // Def along a path is the product of anchored length-2 deficiencies.
    Rational acc = 0;
    for (std::size_t s = 1; s + 1 < p.vertices.size(); ++s) {
      acc += def_direct(a, {p.vertices[0], p.vertices[s], p.vertices[s + 1]});
    }
    if (p.vertices.size() > 2) {
      CHECK(deficiency(a, p) == MaxPlusValue(acc));
    }
  }
  CHECK_THROWS_AS(deficiency(Matrix<MP>::identity(3), Path{1, 2, 3}), std::invalid_argument);
}

TEST_CASE("deficiency modes agree", "[deficiency]") {
  Random rng(32);
  for (int t = 0; t < 300; ++t) {
    std::size_t n = 2 + t % 5;
    auto        m = rng.positive_upper<MP>(n);
    auto        g = rng.invertible_diagonal<MP>(n);
    auto        c = conjugate(m, g);
    CHECK(deficiency_equal(m, m, DeficiencyMode::AllPaths));
    CHECK(deficiency_equal(m, c, DeficiencyMode::AllPaths));
    CHECK(deficiency_equal(m, c, DeficiencyMode::Length2));
    CHECK(deficiency_equal(m, c, DeficiencyMode::OneAnchored));
    auto other = t % 2 ? perturb(c, rng) : rng.positive_upper<MP>(n);
    bool all   = deficiency_equal(m, other, DeficiencyMode::AllPaths);
    CHECK(all == deficiency_equal(m, other, DeficiencyMode::Length2));
    CHECK(all == deficiency_equal(m, other, DeficiencyMode::OneAnchored));
    if (auto w = deficiency_witness(m, other, DeficiencyMode::Length2)) {
      CHECK(w->length() == 3);
      CHECK(def_direct(m, w->vertices) != def_direct(other, w->vertices));
    }
  }
}

TEST_CASE("D-relation of unitriangular matrices", "[deficiency]") {
  Random rng(33);
  for (int t = 0; t < 300; ++t) {
    std::size_t n = 1 + t % 6;
    auto        a = rng.unitriangular<MP>(n, true);
    auto        g = rng.invertible_diagonal<MP>(n);
    auto        b = conjugate(a, g);
    auto        d = d_related_unitriangular(a, b);
    REQUIRE(d.related);
    CHECK(conjugate(a, *d.conjugator) == b);
    auto self = d_related_unitriangular(a, a);
    CHECK(self.related);
    CHECK(*self.conjugator == Matrix<MP>::identity(n));
  }
  auto w = noncommute_matrices(Rational(1));
  auto d = d_related_unitriangular(w.plus, w.star);
  CHECK_FALSE(d.related);
  REQUIRE(d.separating);
  CHECK(*d.separating == Path{1, 2, 4});
  // At n = 3, A(+) and A(*) are always D-related.
  for (int t = 0; t < 200; ++t) {
    auto a = rng.positive_upper<MP>(3);
    CHECK(d_related_unitriangular(plus_of(a), star_of(a)).related);
  }
}

TEST_CASE("non-commuting tilde relations", "[deficiency]") {
  // The matrices of the witness, transcribed with g = 1 and g = 1/3.
  for (Rational g : {Rational(1), Rational(1, 3)}) {
    auto a    = gmat({{0, 1, 0, 2}, {99, 0, 1, 1}, {99, 99, 0, 0}, {99, 99, 99, 0}}, g);
    auto plus = gmat({{0, -1, 0, 2}, {99, 0, 1, 1}, {99, 99, 0, 0}, {99, 99, 99, 0}}, g);
    auto star = gmat({{0, 1, 0, 2}, {99, 0, -1, 1}, {99, 99, 0, 0}, {99, 99, 99, 0}}, g);
    auto w    = noncommute_matrices(g);
    CHECK(w.a == a);
    CHECK(plus_of(a) == plus);
    CHECK(star_of(a) == star);
    CHECK(deficiency(plus, Path{1, 2, 4}) == MaxPlusValue(2 * g));
    CHECK(deficiency(star, Path{1, 2, 4}) == MP::one());
    for (std::size_t n = 4; n <= 6; ++n) {
      CHECK(rtilde_noncommute_witness(n, g).verdict());
    }
  }
  CHECK_THROWS_AS(rtilde_noncommute_witness(3, Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(rtilde_noncommute_witness(4, Rational(0)), std::invalid_argument);
}

TEST_CASE("realizable tightness patterns", "[deficiency]") {
  CHECK(realizable_patterns(3).size() == 2);
  auto ps = realizable_patterns(4);
  CHECK(ps.size() == 10);
  // Tight in 123 and 134, or in 124 and 234, forces tight everywhere.
  std::size_t expected = 0;
  for (int mask = 0; mask < 16; ++mask) {
    bool t123 = mask & 8, t124 = mask & 4, t134 = mask & 2, t234 = mask & 1;
    bool forced = (t123 && t134) || (t124 && t234);
    expected += !forced || mask == 15;
  }
  CHECK(expected == 10);
  CHECK_THROWS_AS(TightnessPattern(4, triples({{1, 2, 3}, {1, 3, 4}})),
                  std::invalid_argument);
  CHECK_THROWS_AS(TightnessPattern(4, triples({{1, 2, 4}, {2, 3, 4}})),
                  std::invalid_argument);
  CHECK_THROWS_AS(TightnessPattern(4, triples({{1, 2, 3}, {1, 2, 4}, {2, 3, 4}})),
                  std::invalid_argument);
  CHECK_THROWS_AS(TightnessPattern(4, triples({{1, 3, 2}})), std::invalid_argument);
  CHECK(TightnessPattern(4, triples({{1, 2, 3}, {1, 2, 4}})).str() == "1-2-3,1-2-4");
  CHECK(TightnessPattern(4, {}).str() == "none");
  CHECK_THROWS_AS(tightness_pattern(noncommute_matrices(Rational(1)).a),
                  std::invalid_argument);
}

TEST_CASE("tilde-H descriptors", "[deficiency]") {
  struct Row {
    std::set<Triple> tight;
    std::string      id;
    HtForm           form;
  };
  std::vector<Row> table{
      {{}, "case1", HtForm::Group},
      {{{1, 2, 3}}, "case2", HtForm::Group},
      {{{2, 3, 4}}, "case2-dual", HtForm::Group},
      {{{1, 2, 4}}, "case3", HtForm::Group},
      {{{1, 3, 4}}, "case3-dual", HtForm::Group},
      {{{1, 3, 4}, {2, 3, 4}}, "case4", HtForm::Corner},
      {{{1, 2, 3}, {1, 2, 4}}, "case4-dual", HtForm::Corner},
      {{{1, 2, 3}, {2, 3, 4}}, "case5", HtForm::Group},
      {{{1, 2, 4}, {1, 3, 4}}, "case6", HtForm::Diagonal3},
      {{{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}, "case7", HtForm::Ordered},
  };
  Random rng(34);
  for (auto const& row : table) {
    TightnessPattern p(4, row.tight);
    auto             d = ht_descriptor_for(p);
    CHECK(d.case_id == row.id);
    CHECK(d.form == row.form);
    auto e = idempotent_with_pattern(p, rng);
    CHECK(is_idempotent(e));
    CHECK(tightness_pattern(e) == p);
    CHECK(ht_class_descriptor(e).case_id == row.id);
    // The dual pattern under the anti-diagonal reflection.
    auto dual = ht_class_descriptor(delta(e)).case_id;
    if (row.id.find("-dual") != std::string::npos) {
      CHECK(dual == row.id.substr(0, row.id.size() - 5));
    } else if (row.id == "case2" || row.id == "case3" || row.id == "case4") {
      CHECK(dual == row.id + "-dual");
    } else {
      CHECK(dual == row.id);
    }
  }
  CHECK(ht_descriptor_for(TightnessPattern(4, table.back().tight)).constraint
        == "A = lambda([a]_{2,2} o [b]_{2,3} o [c]_{3,3} o E), a v c <= b <= 1");
  CHECK(ht_descriptor_for(TightnessPattern(3, {})).case_id == "n3-loose");
  CHECK(ht_descriptor_for(TightnessPattern(3, triples({{1, 2, 3}}))).case_id
        == "n3-tight");
  CHECK(ht_class_descriptor(tight_all_idempotent(6, rng)).case_id == "tight-all");
  auto js = ht_descriptor_for(TightnessPattern(4, {})).to_json();
  CHECK(js["case"] == "case1");
  CHECK(js["form"] == "group");
  auto pe = prop_ht_matrices(Rational(1)).e;
  CHECK_THROWS_AS(ht_class_descriptor(pe), Unsupported);
}

TEST_CASE("tilde-H membership", "[deficiency]") {
  Random rng(35);
  auto   e3 = idempotent_with_pattern(TightnessPattern(3, triples({{1, 2, 3}})), rng);
  CHECK(ht_membership(e3, e3).definitional);
  CHECK(ht_membership(e3, corner_member(e3, 1, Rational(-2), Rational(5))).definitional);
  CHECK(ht_membership(e3, corner_member(e3, 1, Rational(0), Rational(-1))).definitional);
  CHECK_FALSE(ht_membership(e3, corner_member(e3, 1, Rational(1), Rational(0))).definitional);

  auto l3 = idempotent_with_pattern(TightnessPattern(3, {}), rng);
  CHECK(ht_membership(l3, scale(q(3), l3)).definitional);
  CHECK_FALSE(ht_membership(l3, corner_member(l3, 1, Rational(-1), Rational(0))).definitional);

  auto e4 = idempotent_with_pattern(TightnessPattern(4, triples({{1, 3, 4}, {2, 3, 4}})), rng);
  CHECK(ht_membership(e4, corner_member(e4, 2, Rational(-1, 2), Rational(2))).definitional);
  CHECK_FALSE(ht_membership(e4, corner_member(e4, 1, Rational(-1, 2), Rational(2))).definitional);

  for (auto const& p : realizable_patterns(4)) {
    auto e = idempotent_with_pattern(p, rng);
    auto d = ht_descriptor_for(p);
    for (int s = 0; s < 50; ++s) {
      auto a = sample_ht_member(d, e, rng);
      auto m = ht_membership(d, e, a);
      CHECK(m.parametric);
      CHECK(m.definitional);
      CHECK(plus_of(a) == e);
      CHECK(star_of(a) == e);
      auto b = perturb(a, rng);
      CHECK(ht_membership(d, e, b).agree());
    }
  }
}

TEST_CASE("tilde-H closure", "[deficiency]") {
  Random rng(36);
  for (auto const& p : realizable_patterns(4)) {
    auto r = ht_closure_check(idempotent_with_pattern(p, rng), 100, rng);
    CHECK(r.closed);
    CHECK(r.samples == 100);
  }
  for (auto const& p : realizable_patterns(3)) {
    CHECK(ht_closure_check(idempotent_with_pattern(p, rng), 100, rng).closed);
  }
  for (std::size_t n = 5; n <= 7; ++n) {
    CHECK(ht_closure_check(tight_all_idempotent(n, rng), 100, rng).closed);
  }
}

TEST_CASE("tilde-H class that is not a subsemigroup", "[deficiency]") {
  for (Rational g : {Rational(1), Rational(2, 3)}) {
    auto e  = gmat({{0, 0, 2, 2, 2},
                    {99, 0, 1, 2, 2},
                    {99, 99, 0, 0, 0},
                    {99, 99, 99, 0, 0},
                    {99, 99, 99, 99, 0}},
                  g);
    auto a  = gmat({{0, 0, 2, 2, 2},
                    {99, -2, -1, 1, 2},
                    {99, 99, -3, 0, 0},
                    {99, 99, 99, -3, 0},
                    {99, 99, 99, 99, 0}},
                  g);
    auto a2 = gmat({{0, 0, 2, 2, 2},
                    {99, -4, -3, -1, 2},
                    {99, 99, -6, -3, 0},
                    {99, 99, 99, -6, 0},
                    {99, 99, 99, 99, 0}},
                   g);
    auto p2 = gmat({{0, 0, 2, 2, 2},
                    {99, 0, 2, 2, 2},
                    {99, 99, 0, 0, 0},
                    {99, 99, 99, 0, 0},
                    {99, 99, 99, 99, 0}},
                   g);
    auto w = prop_ht_matrices(g);
    CHECK(w.e == e);
    CHECK(w.a == a);
    CHECK(is_idempotent(e));
    CHECK(plus_of(a) == e);
    CHECK(star_of(a) == e);
    CHECK(mat_mul(a, a) == a2);
    CHECK(plus_of(a2) == p2);
    CHECK_FALSE(ht_definitional(e, a2));
    auto pat = tightness_pattern(e);
    CHECK(pat.is_tight(1, 2, 4));
    CHECK_FALSE(pat.is_tight(1, 2, 3));
    for (std::size_t n = 5; n <= 7; ++n) {
      CHECK(prop_ht_witness(n, g).verdict());
    }
  }
  CHECK_THROWS_AS(prop_ht_witness(4, Rational(1)), std::invalid_argument);
}

TEST_CASE("theta embedding", "[deficiency]") {
  // The last column of A is repeated, so the image of I has one extra
  // unit entry at (n, n+1).
  for (std::size_t n = 1; n <= 5; ++n) {
    auto expected = Matrix<MP>::identity(n + 1);
    expected.set(n - 1, n, MP::one());
    auto t = theta_embed(Matrix<MP>::identity(n));
    CHECK(t == expected);
    CHECK(is_idempotent(t));
    CHECK(plus_of(t) == t);
  }
  CHECK(theta_lift(Matrix<MP>::identity(3), 3) == Matrix<MP>::identity(3));
  Random rng(37);
  for (int t = 0; t < 500; ++t) {
    std::size_t n = 2 + t % 5;
    auto        a = rng.positive_upper<MP>(n);
    auto        b = rng.positive_upper<MP>(n);
    for (auto* m : {&a, &b}) {
      m->set(0, 0, MP::one());
      m->set(n - 1, n - 1, MP::one());
    }
    auto ta = theta_embed(a);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        CHECK(ta(i, j) == a(i, j));
      }
      CHECK(ta(i, n) == a(i, n - 1));
      CHECK(ta(n, i) == MP::zero());
    }
    CHECK(ta(n, n) == MP::one());
    CHECK(theta_embed(mat_mul(a, b)) == mat_mul(ta, theta_embed(b)));
    CHECK(plus_of(ta) == theta_embed(plus_of(a)));
    CHECK(star_of(ta) == theta_embed(star_of(a)));
  }
  CHECK_THROWS_AS(theta_embed(Matrix<MP>{{q(1), q(0)}, {NI, q(0)}}), std::invalid_argument);
}

TEST_CASE("left compatibility", "[deficiency]") {
  Random rng(38);
  for (int t = 0; t < 50; ++t) {
    std::size_t n = 2 + t % 4;
    auto        a = rng.positive_upper<MP>(n);
    auto        b = mat_mul(a, rng.invertible_diagonal<MP>(n));
    CHECK(r_related_upper(a, b));
    auto r = leftcong_check(a, b, 50, rng);
    CHECK(r.r_related);
    CHECK(r.consistent);
    CHECK(r.trials == 50);
    CHECK(leftcong_check(a, a, 10, rng).consistent);
  }
  for (int t = 0; t < 50; ++t) {
    std::size_t n      = 3 + t % 3;
    auto [a, b]        = shared_plus_pair(n, rng);
    CHECK(plus_of(a) == plus_of(b));
    auto r = leftcong_check(a, b, 50, rng);
    CHECK_FALSE(r.r_related);
    CHECK(r.consistent);
    CHECK((r.method == "meet" || r.method == "row-construction"));
    REQUIRE(r.separating);
    auto const& c = *r.separating;
    CHECK(plus_of(mat_mul(c, a)) != plus_of(mat_mul(c, b)));
    CHECK(r.to_json()["consistent"] == true);
  }
  CHECK_THROWS_AS(shared_plus_pair(2, rng), std::invalid_argument);
}
